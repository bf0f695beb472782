#include "folcone/markov.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace folcone {

const ZVec& MarkovSystem::label(int from, int to) const {
    auto it = labels_.find({from, to});
    if (it == labels_.end())
        fail(ErrorKind::IllegalTransition,
             letter_name(from) + " -> " + letter_name(to) + " is not admissible");
    return it->second;
}

std::string MarkovSystem::render_word(const PeriodicString& p) const {
    std::string out = "(";
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        if (i) out += ", ";
        out += letter_name(p.word[i]);
    }
    out += ")";
    return out;
}

namespace {

// Elementary circuits of the transition graph, each reported as the rotation
// starting at its least vertex, in lexicographic order. This is Johnson's
// circuit enumeration: for each base vertex s, search the strongly connected
// component of s inside the subgraph induced on {s, s+1, ...}, with the
// blocked-set bookkeeping that keeps dead ends from being re-explored.
class CircuitEnumerator {
public:
    explicit CircuitEnumerator(const std::vector<std::vector<int>>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())) {}

    std::vector<std::vector<int>> run() {
        std::vector<std::vector<int>> result;
        for (int s = 0; s < n_; ++s) {
            scc_of_base(s);
            if (comp_.empty()) continue;
            blocked_.assign(n_, false);
            block_list_.assign(n_, {});
            stack_.clear();
            base_ = s;
            circuit(s, result);
        }
        std::sort(result.begin(), result.end());
        return result;
    }

private:
    // Tarjan over the subgraph induced on {s..n-1}; keeps only the component
    // containing s, as the vertex set comp_.
    void scc_of_base(int s) {
        comp_.assign(n_, false);
        index_.assign(n_, -1);
        low_.assign(n_, 0);
        on_stack_.assign(n_, false);
        tarjan_stack_.clear();
        counter_ = 0;
        found_ = false;
        strongconnect(s, s);
    }

    void strongconnect(int v, int s) {
        index_[v] = low_[v] = counter_++;
        tarjan_stack_.push_back(v);
        on_stack_[v] = true;
        for (int w : adj_[v]) {
            if (w < s || found_) continue;
            if (index_[w] == -1) {
                strongconnect(w, s);
                low_[v] = std::min(low_[v], low_[w]);
            } else if (on_stack_[w]) {
                low_[v] = std::min(low_[v], index_[w]);
            }
        }
        if (low_[v] == index_[v]) {
            bool contains_s = false;
            std::size_t first = tarjan_stack_.size();
            while (first > 0) {
                --first;
                int w = tarjan_stack_[first];
                if (w == v) break;
            }
            for (std::size_t i = first; i < tarjan_stack_.size(); ++i)
                if (tarjan_stack_[i] == s) contains_s = true;
            if (contains_s && !found_) {
                comp_.assign(n_, false);
                for (std::size_t i = first; i < tarjan_stack_.size(); ++i)
                    comp_[tarjan_stack_[i]] = true;
                found_ = true;
            }
            for (std::size_t i = tarjan_stack_.size(); i > first; --i) {
                on_stack_[tarjan_stack_[i - 1]] = false;
            }
            tarjan_stack_.resize(first);
        }
    }

    void unblock(int u) {
        blocked_[u] = false;
        auto pending = std::move(block_list_[u]);
        block_list_[u].clear();
        for (int w : pending)
            if (blocked_[w]) unblock(w);
    }

    bool circuit(int v, std::vector<std::vector<int>>& result) {
        bool found = false;
        stack_.push_back(v);
        blocked_[v] = true;
        for (int w : adj_[v]) {
            if (w < base_ || !comp_[w]) continue;
            if (w == base_) {
                result.push_back(stack_);
                found = true;
            } else if (!blocked_[w]) {
                if (circuit(w, result)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (int w : adj_[v]) {
                if (w < base_ || !comp_[w]) continue;
                auto& bl = block_list_[w];
                if (std::find(bl.begin(), bl.end(), v) == bl.end()) bl.push_back(v);
            }
        }
        stack_.pop_back();
        return found;
    }

    const std::vector<std::vector<int>>& adj_;
    int n_;
    int base_ = 0;
    std::vector<bool> comp_, blocked_, on_stack_;
    std::vector<std::vector<int>> block_list_;
    std::vector<int> stack_, index_, low_, tarjan_stack_;
    int counter_ = 0;
    bool found_ = false;
};

std::vector<std::vector<int>> elementary_circuits(const std::vector<std::vector<int>>& adj) {
    return CircuitEnumerator(adj).run();
}

} // namespace

MarkovSystem validate_system(const SystemDocument& doc) {
    MarkovSystem sys;
    if (doc.rank < 1)
        fail(ErrorKind::BadRank, "rank must be a positive integer, got " + std::to_string(doc.rank));
    sys.rank_ = static_cast<int>(doc.rank);
    sys.name_ = doc.name;

    std::map<std::string, int> by_name;
    for (const std::string& name : doc.letters) {
        if (by_name.count(name)) fail(ErrorKind::DuplicateLetter, "letter \"" + name + "\" repeats");
        int idx = static_cast<int>(sys.letters_.size());
        by_name[name] = idx;
        sys.letters_.push_back({name, idx});
    }
    sys.out_.assign(sys.letters_.size(), {});

    for (const TransitionRecord& t : doc.transitions) {
        auto from = by_name.find(t.from);
        auto to = by_name.find(t.to);
        if (from == by_name.end())
            fail(ErrorKind::DanglingTransition, "unknown letter \"" + t.from + "\"");
        if (to == by_name.end())
            fail(ErrorKind::DanglingTransition, "unknown letter \"" + t.to + "\"");
        if (static_cast<long>(t.label.size()) != doc.rank)
            fail(ErrorKind::BadRank, "transition " + t.from + " -> " + t.to + " carries a class of length " +
                                         std::to_string(t.label.size()) + ", expected " +
                                         std::to_string(doc.rank));
        auto key = std::make_pair(from->second, to->second);
        if (sys.labels_.count(key))
            fail(ErrorKind::DanglingTransition,
                 "transition " + t.from + " -> " + t.to + " appears twice");
        sys.labels_[key] = t.label;
        sys.out_[from->second].push_back(to->second);
    }
    for (auto& targets : sys.out_) std::sort(targets.begin(), targets.end());

    auto circuits = elementary_circuits(sys.out_);
    sys.product_type_ = circuits.empty();
    for (const auto& word : circuits) {
        ZVec total(sys.rank_, Int(0));
        for (std::size_t i = 0; i < word.size(); ++i) {
            int a = word[i];
            int b = word[(i + 1) % word.size()];
            add_into(total, sys.labels_.at({a, b}));
        }
        if (is_zero_vec(total)) {
            PeriodicString p{word};
            fail(ErrorKind::ZeroClassLoop, "elementary circuit " + sys.render_word(p) +
                                               " has total class zero");
        }
    }
    return sys;
}

PeriodicString canonical_rotation(const PeriodicString& p) {
    if (p.word.empty()) fail(ErrorKind::EmptyWord, "periodic strings are nonempty");
    const std::size_t q = p.word.size();
    std::size_t best = 0;
    for (std::size_t cand = 1; cand < q; ++cand) {
        for (std::size_t k = 0; k < q; ++k) {
            int a = p.word[(cand + k) % q];
            int b = p.word[(best + k) % q];
            if (a != b) {
                if (a < b) best = cand;
                break;
            }
        }
    }
    PeriodicString out;
    out.word.reserve(q);
    for (std::size_t k = 0; k < q; ++k) out.word.push_back(p.word[(best + k) % q]);
    return out;
}

ZVec class_of(const MarkovSystem& sys, const PeriodicString& p) {
    if (p.word.empty()) fail(ErrorKind::EmptyWord, "periodic strings are nonempty");
    ZVec total(sys.rank(), Int(0));
    for (std::size_t i = 0; i < p.word.size(); ++i) {
        int a = p.word[i];
        int b = p.word[(i + 1) % p.word.size()];
        add_into(total, sys.label(a, b));
    }
    return total;
}

std::vector<MinimalLoop> minimal_loops(const MarkovSystem& sys) {
    std::vector<std::vector<int>> adj(sys.letter_count());
    for (int i = 0; i < sys.letter_count(); ++i) adj[i] = sys.out_edges(i);
    std::vector<MinimalLoop> loops;
    for (const auto& word : elementary_circuits(adj)) {
        PeriodicString p = canonical_rotation(PeriodicString{word});
        loops.push_back({p, class_of(sys, p)});
    }
    std::sort(loops.begin(), loops.end());
    return loops;
}

std::vector<PeriodicString> enumerate_periodic_strings(const MarkovSystem& sys, int max_len,
                                                       long budget) {
    std::set<std::vector<int>> seen;
    long work = 0;
    std::vector<int> path;

    // Walks are rooted at their least letter, so each cyclic word is visited
    // once per occurrence of its minimum; the set collapses those.
    std::function<void(int, int)> extend = [&](int base, int v) {
        if (++work > budget)
            fail(ErrorKind::BudgetExceeded,
                 "periodic string enumeration exceeded budget " + std::to_string(budget));
        path.push_back(v);
        if (sys.has_transition(v, base)) {
            PeriodicString canon = canonical_rotation(PeriodicString{path});
            seen.insert(canon.word);
        }
        if (static_cast<int>(path.size()) < max_len)
            for (int w : sys.out_edges(v))
                if (w >= base) extend(base, w);
        path.pop_back();
    };

    for (int s = 0; s < sys.letter_count(); ++s) extend(s, s);

    std::vector<PeriodicString> out;
    out.reserve(seen.size());
    for (const auto& w : seen) out.push_back(PeriodicString{w});
    return out;
}

std::vector<std::pair<MinimalLoop, long>> decompose_into_minimal_loops(const MarkovSystem& sys,
                                                                       const PeriodicString& p) {
    class_of(sys, p); // admissibility gate, throws on a bad word

    std::map<std::vector<int>, long> counts;
    std::vector<std::vector<int>> pending{p.word};
    std::size_t total_length = 0;
    while (!pending.empty()) {
        std::vector<int> w = std::move(pending.back());
        pending.pop_back();

        // first letter that repeats, with the first position it was seen at
        std::map<int, std::size_t> first_pos;
        std::size_t i = 0, j = 0;
        bool split = false;
        for (; j < w.size(); ++j) {
            auto it = first_pos.find(w[j]);
            if (it != first_pos.end()) {
                i = it->second;
                split = true;
                break;
            }
            first_pos[w[j]] = j;
        }

        if (!split) {
            counts[canonical_rotation(PeriodicString{w}).word] += 1;
            total_length += w.size();
            continue;
        }
        // w visits w[i] again at j: cut out the cycle w[i..j) and close the
        // remainder over the repeated letter
        std::vector<int> inner(w.begin() + i, w.begin() + j);
        std::vector<int> outer(w.begin(), w.begin() + i);
        outer.insert(outer.end(), w.begin() + j, w.end());
        pending.push_back(std::move(inner));
        pending.push_back(std::move(outer));
    }
    assert(total_length == p.word.size());

    std::vector<std::pair<MinimalLoop, long>> out;
    for (const auto& [word, count] : counts) {
        PeriodicString loop{word};
        out.push_back({MinimalLoop{loop, class_of(sys, loop)}, count});
    }
    return out;
}

} // namespace folcone
