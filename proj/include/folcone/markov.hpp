#pragma once

// Symbolic dynamics layer: admissible transition systems with first-homology
// edge labels, periodic strings up to rotation, and minimal loops (elementary
// circuits). Letters are handled by index; names only matter at the I/O edge.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "folcone/rational.hpp"

namespace folcone {

struct Letter {
    std::string name;
    int index = 0;
};

// Raw content of a system description, prior to semantic checks.
struct TransitionRecord {
    std::string from;
    std::string to;
    ZVec label;
};

struct SystemDocument {
    long rank = 0;
    std::vector<std::string> letters;
    std::vector<TransitionRecord> transitions;
    std::string name = "system";
};

// Cyclic word, stored as one explicit rotation of letter indices.
struct PeriodicString {
    std::vector<int> word;

    bool operator==(const PeriodicString& o) const { return word == o.word; }
    bool operator<(const PeriodicString& o) const { return word < o.word; }
    std::size_t length() const { return word.size(); }
};

// Periodic string in which the letters are pairwise distinct, together with
// its total homology class. The class is always nonzero for a valid system.
struct MinimalLoop {
    PeriodicString word; // canonical rotation
    ZVec cls;

    bool operator==(const MinimalLoop& o) const { return word == o.word && cls == o.cls; }
    bool operator<(const MinimalLoop& o) const { return word < o.word; }
};

class MarkovSystem {
public:
    MarkovSystem() = default;

    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    int letter_count() const { return static_cast<int>(letters_.size()); }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    bool has_transition(int from, int to) const { return labels_.count({from, to}) != 0; }
    const ZVec& label(int from, int to) const;
    const std::vector<int>& out_edges(int from) const { return out_[from]; }
    const std::map<std::pair<int, int>, ZVec>& transitions() const { return labels_; }

    // True when the system admits no cycle at all, so there are no periodic
    // strings and the loop cone degenerates to the origin.
    bool product_type() const { return product_type_; }

    const std::string& letter_name(int index) const { return letters_[index].name; }
    std::string render_word(const PeriodicString& p) const;

private:
    friend MarkovSystem validate_system(const SystemDocument& doc);

    int rank_ = 0;
    std::vector<Letter> letters_;
    std::map<std::pair<int, int>, ZVec> labels_;
    std::vector<std::vector<int>> out_;
    bool product_type_ = true;
    std::string name_ = "system";
};

// Semantic validation of a parsed document. Rejects duplicate letter names,
// a non-positive rank or a label of the wrong length, transitions that
// mention unknown letters, and systems in which some elementary circuit has
// total class zero.
MarkovSystem validate_system(const SystemDocument& doc);

// Lexicographically least rotation of the word, by letter index.
PeriodicString canonical_rotation(const PeriodicString& p);

// Total homology class of one period: the label sum along the word including
// the wrap-around step. Rotation invariant. Throws IllegalTransition if some
// step, including the wrap, is not admissible.
ZVec class_of(const MarkovSystem& sys, const PeriodicString& p);

// All minimal loops, canonically rotated and sorted. Empty exactly for
// product-type systems.
std::vector<MinimalLoop> minimal_loops(const MarkovSystem& sys);

// Every periodic string of length <= max_len, one canonical rotation per
// cyclic word, sorted. The budget bounds enumeration work; crossing it
// raises BudgetExceeded.
std::vector<PeriodicString> enumerate_periodic_strings(const MarkovSystem& sys, int max_len,
                                                       long budget = 1000000);

// Multiset decomposition of a periodic string into minimal loops, found by
// repeatedly splitting a cycle at its first repeated letter. Multiplicities
// are positive; the loop lengths weighted by multiplicity sum to the input
// length, and the classes sum to class_of(sys, p).
std::vector<std::pair<MinimalLoop, long>> decompose_into_minimal_loops(const MarkovSystem& sys,
                                                                       const PeriodicString& p);

} // namespace folcone
