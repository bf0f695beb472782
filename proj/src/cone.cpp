#include "folcone/cone.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "folcone/linalg.hpp"
#include "folcone/simplex.hpp"

namespace folcone {

const char* region_name(Region r) {
    switch (r) {
        case Region::Interior: return "Interior";
        case Region::Boundary: return "Boundary";
        case Region::Outside: return "Outside";
    }
    return "?";
}

namespace {

// ---- double description ----------------------------------------------------

// Zero sets are bitmasks over the indices of the constraints processed so
// far; bit k set means the ray pairs to zero with constraint k.
using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t k) { b[k >> 6] |= std::uint64_t(1) << (k & 63); }

bool subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

Bits intersect(const Bits& a, const Bits& b) {
    Bits r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

struct RawPair {
    std::vector<ZVec> lin;
    std::vector<ZVec> rays;
};

// Incremental double description: start from the whole space and intersect
// with one half-space at a time, in sorted constraint order. While lineality
// remains, a constraint with a nonzero pairing peels one lineality direction
// into a ray; afterwards the classical pairing step combines adjacent rays
// across the new hyperplane. Adjacency is the combinatorial test: two rays
// are adjacent when no third ray's zero set contains the intersection of
// theirs. Each intermediate pair stays minimal, so the final rays are
// exactly the extreme rays modulo the lineality space.
RawPair double_description(int d, std::vector<ZVec> normals) {
    for (ZVec& f : normals) f = primitive(f);
    normals.erase(std::remove_if(normals.begin(), normals.end(),
                                 [](const ZVec& f) { return is_zero_vec(f); }),
                  normals.end());
    sort_unique(normals);

    const std::size_t m = normals.size();
    const std::size_t words = (m + 63) / 64;

    RawPair state;
    for (int i = 0; i < d; ++i) {
        ZVec e(d, Int(0));
        e[i] = 1;
        state.lin.push_back(e);
    }
    std::vector<Bits> zs; // parallel to state.rays

    for (std::size_t k = 0; k < m; ++k) {
        const ZVec& f = normals[k];

        std::size_t hit = state.lin.size();
        for (std::size_t i = 0; i < state.lin.size(); ++i)
            if (dot(f, state.lin[i]) != 0) { hit = i; break; }

        if (hit < state.lin.size()) {
            ZVec l0 = state.lin[hit];
            Int p0 = dot(f, l0);
            if (p0 < 0) { l0 = scale(Int(-1), l0); p0 = -p0; }

            std::vector<ZVec> new_lin;
            for (std::size_t i = 0; i < state.lin.size(); ++i) {
                if (i == hit) continue;
                Int pi = dot(f, state.lin[i]);
                new_lin.push_back(pi == 0 ? state.lin[i]
                                          : primitive(combine(p0, state.lin[i], -pi, l0)));
            }
            state.lin = std::move(new_lin);

            // project existing rays onto the hyperplane of f along l0; their
            // pairings with earlier constraints are unchanged because l0
            // pairs to zero with all of them
            for (std::size_t i = 0; i < state.rays.size(); ++i) {
                Int pi = dot(f, state.rays[i]);
                if (pi != 0) state.rays[i] = primitive(combine(p0, state.rays[i], -pi, l0));
                set_bit(zs[i], k);
            }
            Bits b(words, 0);
            for (std::size_t j = 0; j < k; ++j) set_bit(b, j);
            state.rays.push_back(l0);
            zs.push_back(std::move(b));
            continue;
        }

        std::vector<std::size_t> pos, neg;
        std::vector<int> side(state.rays.size());
        for (std::size_t i = 0; i < state.rays.size(); ++i) {
            side[i] = sign_of(dot(f, state.rays[i]));
            if (side[i] > 0) pos.push_back(i);
            else if (side[i] < 0) neg.push_back(i);
        }

        std::vector<ZVec> new_rays;
        std::vector<Bits> new_zs;
        for (std::size_t p : pos) {
            for (std::size_t n : neg) {
                Bits common = intersect(zs[p], zs[n]);
                bool adjacent = true;
                for (std::size_t t = 0; t < state.rays.size(); ++t) {
                    if (t == p || t == n) continue;
                    if (subset(common, zs[t])) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                ZVec w = primitive(combine(dot(f, state.rays[p]), state.rays[n],
                                           -dot(f, state.rays[n]), state.rays[p]));
                assert(!is_zero_vec(w));
                set_bit(common, k);
                new_rays.push_back(std::move(w));
                new_zs.push_back(std::move(common));
            }
        }

        std::vector<ZVec> kept;
        std::vector<Bits> kept_zs;
        for (std::size_t i = 0; i < state.rays.size(); ++i) {
            if (side[i] < 0) continue;
            if (side[i] == 0) set_bit(zs[i], k);
            kept.push_back(std::move(state.rays[i]));
            kept_zs.push_back(std::move(zs[i]));
        }
        for (std::size_t i = 0; i < new_rays.size(); ++i) {
            kept.push_back(std::move(new_rays[i]));
            kept_zs.push_back(std::move(new_zs[i]));
        }
        state.rays = std::move(kept);
        zs = std::move(kept_zs);
    }
    return state;
}

struct CanonicalPair {
    std::vector<ZVec> lin;  // rref basis of the lineality space
    std::vector<ZVec> rays; // extreme rays reduced mod lin, sorted
};

CanonicalPair canonicalize(const RawPair& raw) {
    CanonicalPair c;
    c.lin = rref_basis(raw.lin);
    std::sort(c.lin.begin(), c.lin.end(), lex_less);
    for (const ZVec& r : raw.rays) {
        ZVec v = reduce_mod_subspace(c.lin, r);
        if (!is_zero_vec(v)) c.rays.push_back(std::move(v));
    }
    sort_unique(c.rays);
    return c;
}

std::vector<ZVec> with_sign_pairs(const std::vector<ZVec>& rays, const std::vector<ZVec>& lin) {
    std::vector<ZVec> out = rays;
    for (const ZVec& l : lin) {
        out.push_back(l);
        out.push_back(scale(Int(-1), l));
    }
    return out;
}

// Cheap one-sided soundness checks; completeness is covered by the oracle
// tests. Violations indicate an internal bug, never bad user input.
void check_assembled(const Cone& c) {
    for (const ZVec& f : c.facets()) {
        for (const ZVec& g : c.generators())
            if (dot(f, g) < 0) throw std::logic_error("cone: generator violates facet");
        for (const ZVec& l : c.lineality_basis())
            if (dot(f, l) != 0) throw std::logic_error("cone: lineality not on facet hyperplane");
    }
    std::vector<ZVec> span = c.lineality_basis();
    span.insert(span.end(), c.generators().begin(), c.generators().end());
    if (static_cast<int>(rank_of(span)) != c.dim())
        throw std::logic_error("cone: dimension bookkeeping mismatch");
}

} // namespace

void Cone::rebuild_facet_list() {
    facets_all_ = with_sign_pairs(facets_pointed_, equations_);
    sort_unique(facets_all_);
}

Cone cone_from_inequalities(int rank, const std::vector<ZVec>& normals) {
    if (rank < 1) fail(ErrorKind::BadRank, "cone rank must be positive");
    for (const ZVec& f : normals)
        if (static_cast<int>(f.size()) != rank)
            fail(ErrorKind::BadRank, "inequality normal of length " + std::to_string(f.size()) +
                                         " in rank " + std::to_string(rank));

    CanonicalPair primal = canonicalize(double_description(rank, normals));
    CanonicalPair dual =
        canonicalize(double_description(rank, with_sign_pairs(primal.rays, primal.lin)));

    Cone c;
    c.rank_ = rank;
    c.generators_ = primal.rays;
    c.lineality_ = primal.lin;
    c.facets_pointed_ = dual.rays;
    c.equations_ = dual.lin;
    c.rebuild_facet_list();
    check_assembled(c);
    return c;
}

Cone cone_from_generators(int rank, const std::vector<ZVec>& vecs) {
    if (rank < 1) fail(ErrorKind::BadRank, "cone rank must be positive");
    for (const ZVec& v : vecs)
        if (static_cast<int>(v.size()) != rank)
            fail(ErrorKind::BadRank, "generator of length " + std::to_string(v.size()) +
                                         " in rank " + std::to_string(rank));

    CanonicalPair dual = canonicalize(double_description(rank, vecs));
    CanonicalPair primal =
        canonicalize(double_description(rank, with_sign_pairs(dual.rays, dual.lin)));

    Cone c;
    c.rank_ = rank;
    c.generators_ = primal.rays;
    c.lineality_ = primal.lin;
    c.facets_pointed_ = dual.rays;
    c.equations_ = dual.lin;
    c.rebuild_facet_list();
    check_assembled(c);
    return c;
}

Cone dualize(const Cone& c) {
    return cone_from_inequalities(c.rank(), with_sign_pairs(c.generators(), c.lineality_basis()));
}

Cone Cone::from_canonical_parts(int rank, std::vector<ZVec> generators, std::vector<ZVec> lineality,
                                std::vector<ZVec> facets) {
    Cone c;
    c.rank_ = rank;
    c.generators_ = std::move(generators);
    c.lineality_ = std::move(lineality);

    // split +/- pairs off as span equations, keeping the representative
    // whose first nonzero entry is positive
    std::vector<ZVec> sorted = facets;
    sort_unique(sorted);
    std::vector<bool> used(sorted.size(), false);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (used[i]) continue;
        ZVec neg = scale(Int(-1), sorted[i]);
        auto it = std::lower_bound(sorted.begin(), sorted.end(), neg, lex_less);
        if (it != sorted.end() && *it == neg) {
            std::size_t j = static_cast<std::size_t>(it - sorted.begin());
            if (!used[j] && j != i) {
                used[i] = used[j] = true;
                const ZVec& rep = lex_less(sorted[i], neg) ? neg : sorted[i];
                c.equations_.push_back(rep);
                continue;
            }
        }
    }
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (!used[i]) c.facets_pointed_.push_back(sorted[i]);
    std::sort(c.equations_.begin(), c.equations_.end(), lex_less);
    c.rebuild_facet_list();
    return c;
}

MembershipResult membership(const Cone& c, const ZVec& x) {
    if (static_cast<int>(x.size()) != c.rank())
        fail(ErrorKind::BadRank, "membership query of length " + std::to_string(x.size()) +
                                     " in rank " + std::to_string(c.rank()));
    MembershipResult res;
    res.region = Region::Interior;
    std::size_t violated = c.facets().size();
    for (std::size_t i = 0; i < c.facets().size(); ++i) {
        Int p = dot(c.facets()[i], x);
        res.facet_pairings.emplace_back(p);
        if (p < 0 && violated == c.facets().size()) violated = i;
        if (p < 0) res.region = Region::Outside;
        else if (p == 0 && res.region == Region::Interior) res.region = Region::Boundary;
    }

    if (res.region == Region::Outside) {
        res.certificate = SeparatingFunctional{c.facets()[violated]};
        return res;
    }

    // x lies in the cone; produce an explicit combination
    const auto& gens = c.generators();
    const auto& lin = c.lineality_basis();
    std::vector<ZVec> cols = gens;
    cols.insert(cols.end(), lin.begin(), lin.end());
    for (const ZVec& l : lin) cols.push_back(scale(Int(-1), l));

    std::vector<ZVec> rows(c.rank(), ZVec(cols.size(), Int(0)));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < c.rank(); ++i) rows[i][j] = cols[j][i];
    FeasibilityResult feas = solve_equality_feasibility(rows, x);
    if (!feas.feasible)
        throw std::logic_error("cone: point passes facet check but has no generator combination");

    MembershipCombo combo;
    combo.generator_coeffs.assign(feas.x.begin(), feas.x.begin() + gens.size());
    for (std::size_t i = 0; i < lin.size(); ++i)
        combo.lineality_coeffs.push_back(feas.x[gens.size() + i] -
                                         feas.x[gens.size() + lin.size() + i]);
    res.certificate = std::move(combo);
    return res;
}

Region membership_verdict(const Cone& c, const ZVec& x) {
    if (static_cast<int>(x.size()) != c.rank())
        fail(ErrorKind::BadRank, "membership query of wrong length");
    Region r = Region::Interior;
    for (const ZVec& f : c.facets()) {
        int s = sign_of(dot(f, x));
        if (s < 0) return Region::Outside;
        if (s == 0) r = Region::Boundary;
    }
    return r;
}

PositiveFunctional strictly_positive_functional(int rank, const std::vector<ZVec>& vecs) {
    for (const ZVec& v : vecs) {
        if (static_cast<int>(v.size()) != rank)
            fail(ErrorKind::BadRank, "vector of wrong length");
        if (is_zero_vec(v))
            fail(ErrorKind::ZeroVectorInput, "no functional is strictly positive on 0");
    }

    PositiveFunctional out;
    if (vecs.empty()) {
        // vacuous: pairing demands are empty, the zero functional serves
        out.witness = ZVec(rank, Int(0));
        return out;
    }

    // Solve  sum_j c_j v_j = 0, sum_j c_j = 1, c >= 0.  Feasible gives the
    // dual; the Farkas certificate of infeasibility folds into a witness.
    std::vector<QVec> rows(rank + 1, QVec(vecs.size(), Rat(0)));
    for (std::size_t j = 0; j < vecs.size(); ++j) {
        for (int i = 0; i < rank; ++i) rows[i][j] = Rat(vecs[j][i]);
        rows[rank][j] = 1;
    }
    QVec b(rank + 1, Rat(0));
    b[rank] = 1;

    FeasibilityResult feas = solve_equality_feasibility(rows, b);
    if (feas.feasible) {
        GordanDual dual{feas.x};
        if (!verify_gordan_dual(vecs, dual))
            throw std::logic_error("positive functional: dual certificate failed re-check");
        out.dual = std::move(dual);
        return out;
    }
    QVec y(rank);
    for (int i = 0; i < rank; ++i) y[i] = -feas.farkas[i];
    ZVec witness = primitive(y);
    if (!verify_positive_witness(vecs, witness))
        throw std::logic_error("positive functional: witness failed re-check");
    out.witness = std::move(witness);
    return out;
}

OverlapResult interiors_overlap(const Cone& a, const Cone& b) {
    if (a.rank() != b.rank())
        fail(ErrorKind::RankMismatch, "cones of rank " + std::to_string(a.rank()) + " and " +
                                          std::to_string(b.rank()));
    if (!a.full_dimensional() || !b.full_dimensional())
        fail(ErrorKind::DegenerateInput, "interior overlap needs full-dimensional cones");

    std::vector<ZVec> combined = a.facets();
    combined.insert(combined.end(), b.facets().begin(), b.facets().end());

    PositiveFunctional pf = strictly_positive_functional(a.rank(), combined);
    OverlapResult res;
    if (pf.witness) {
        res.shared = true;
        res.witness = std::move(pf.witness);
    } else {
        res.shared = false;
        res.dual = std::move(pf.dual);
    }
    return res;
}

bool verify_membership_combo(const Cone& c, const ZVec& x, const MembershipCombo& combo) {
    if (combo.generator_coeffs.size() != c.generators().size()) return false;
    if (combo.lineality_coeffs.size() != c.lineality_basis().size()) return false;
    for (const Rat& t : combo.generator_coeffs)
        if (t < 0) return false;
    QVec acc(c.rank(), Rat(0));
    for (std::size_t j = 0; j < c.generators().size(); ++j)
        for (int i = 0; i < c.rank(); ++i)
            acc[i] += combo.generator_coeffs[j] * Rat(c.generators()[j][i]);
    for (std::size_t j = 0; j < c.lineality_basis().size(); ++j)
        for (int i = 0; i < c.rank(); ++i)
            acc[i] += combo.lineality_coeffs[j] * Rat(c.lineality_basis()[j][i]);
    for (int i = 0; i < c.rank(); ++i)
        if (acc[i] != Rat(x[i])) return false;
    return true;
}

bool verify_separating_functional(const Cone& c, const ZVec& x, const SeparatingFunctional& sep) {
    if (dot(sep.normal, x) >= 0) return false;
    for (const ZVec& g : c.generators())
        if (dot(sep.normal, g) < 0) return false;
    for (const ZVec& l : c.lineality_basis())
        if (dot(sep.normal, l) != 0) return false;
    return true;
}

bool verify_gordan_dual(const std::vector<ZVec>& vecs, const GordanDual& dual) {
    if (dual.coeffs.size() != vecs.size() || vecs.empty()) return false;
    bool nonzero = false;
    for (const Rat& t : dual.coeffs) {
        if (t < 0) return false;
        if (t > 0) nonzero = true;
    }
    if (!nonzero) return false;
    const std::size_t d = vecs[0].size();
    QVec acc(d, Rat(0));
    for (std::size_t j = 0; j < vecs.size(); ++j)
        for (std::size_t i = 0; i < d; ++i) acc[i] += dual.coeffs[j] * Rat(vecs[j][i]);
    return is_zero_vec(acc);
}

bool verify_positive_witness(const std::vector<ZVec>& vecs, const ZVec& witness) {
    for (const ZVec& v : vecs)
        if (dot(v, witness) <= 0) return false;
    return true;
}

} // namespace folcone
