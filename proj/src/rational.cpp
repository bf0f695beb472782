#include "folcone/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace folcone {

std::string format_int(const Int& x) { return x.get_str(); }

std::string format_rat(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Int parse_int(const std::string& text) {
    if (!looks_like_integer(text))
        fail(ErrorKind::SchemaError, "expected an integer, got \"" + text + "\"");
    return Int(text);
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::SchemaError, "zero denominator in \"" + text + "\"");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(ErrorKind::DegenerateInput, "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

ZVec zvec_of(std::initializer_list<long> entries) {
    ZVec v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

QVec qvec_of_zvec(const ZVec& v) {
    QVec q;
    q.reserve(v.size());
    for (const Int& x : v) q.emplace_back(x);
    return q;
}

std::string format_zvec(const ZVec& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << v[i].get_str();
    }
    out << ")";
    return out.str();
}

std::string format_qvec(const QVec& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ", ";
        out << format_rat(v[i]);
    }
    out << ")";
    return out.str();
}

bool is_zero_vec(const ZVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero_vec(const QVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

void add_into(ZVec& acc, const ZVec& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
}

ZVec add(const ZVec& a, const ZVec& b) {
    ZVec r = a;
    add_into(r, b);
    return r;
}

ZVec sub(const ZVec& a, const ZVec& b) {
    ZVec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

ZVec scale(const Int& c, const ZVec& v) {
    ZVec r = v;
    for (Int& x : r) x *= c;
    return r;
}

Int dot(const ZVec& a, const ZVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const ZVec& a, const QVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

ZVec combine(const Int& a, const ZVec& x, const Int& b, const ZVec& y) {
    ZVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
    return r;
}

ZVec primitive(const ZVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g <= 1) return v;
    ZVec r = v;
    for (Int& x : r) x /= g;
    return r;
}

ZVec primitive(const QVec& v) {
    Int lcm_den = 1;
    for (const Rat& x : v) lcm_den = lcm(lcm_den, x.get_den());
    ZVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    return primitive(r);
}

bool lex_less(const ZVec& a, const ZVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<ZVec>& vecs) {
    std::sort(vecs.begin(), vecs.end(), lex_less);
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
}

Rat max_norm(const QVec& v) {
    Rat m = 0;
    for (const Rat& x : v) {
        Rat a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

} // namespace folcone
