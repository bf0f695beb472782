#pragma once

// Exact polyhedral cones over the rationals, in canonical two-sided form.
//
// A cone is stored with both descriptions at once:
//   * generators: extreme rays modulo the lineality space,
//   * lineality_basis: canonical basis of the largest linear subspace inside,
//   * facets: inequality normals; the cone is exactly the set of points
//     pairing >= 0 with every facet. Lower-dimensional cones carry +/- pairs
//     of normals that cut out their span.
// All vectors are primitive integer vectors and all lists are sorted, so two
// equal cones compare equal structurally. Conversions run the double
// description method, inserting constraints in sorted order; verdicts carry
// certificates that re-check with plain arithmetic.

#include <optional>
#include <variant>
#include <vector>

#include "folcone/rational.hpp"

namespace folcone {

// ---- certificates ----------------------------------------------------------

// Writes x as a nonnegative combination of the generators plus a free
// combination of the lineality basis.
struct MembershipCombo {
    QVec generator_coeffs;
    QVec lineality_coeffs;

    bool operator==(const MembershipCombo&) const = default;
};

// A functional nonnegative on the whole cone and negative on the point it
// separates.
struct SeparatingFunctional {
    ZVec normal;

    bool operator==(const SeparatingFunctional&) const = default;
};

// Nonnegative coefficients, not all zero, combining the input vectors to 0;
// witnesses that no functional can be strictly positive on all of them.
struct GordanDual {
    QVec coeffs;

    bool operator==(const GordanDual&) const = default;
};

using Certificate = std::variant<MembershipCombo, SeparatingFunctional, GordanDual>;

enum class Region { Interior, Boundary, Outside };
const char* region_name(Region r);

struct MembershipResult {
    Region region = Region::Outside;
    QVec facet_pairings; // aligned with Cone::facets()
    Certificate certificate;
};

// ---- the cone type ---------------------------------------------------------

class Cone {
public:
    Cone() = default;

    int rank() const { return rank_; }
    const std::vector<ZVec>& generators() const { return generators_; }
    const std::vector<ZVec>& lineality_basis() const { return lineality_; }

    // Full inequality description: relative facet normals plus +/- pairs for
    // the equations cutting the span.
    const std::vector<ZVec>& facets() const { return facets_all_; }

    // Facet normals without the +/- equation pairs.
    const std::vector<ZVec>& relative_facets() const { return facets_pointed_; }
    // Canonical basis of the orthogonal complement of the span.
    const std::vector<ZVec>& span_equations() const { return equations_; }

    int dim() const { return rank_ - static_cast<int>(equations_.size()); }
    bool full_dimensional() const { return equations_.empty(); }
    bool is_zero() const { return generators_.empty() && lineality_.empty(); }
    bool is_whole_space() const { return facets_all_.empty(); }

    bool operator==(const Cone& o) const = default;

    // Assembles a cone from already-canonical parts; used when reading
    // rendered reports back in. Checks only cheap shape invariants.
    static Cone from_canonical_parts(int rank, std::vector<ZVec> generators,
                                     std::vector<ZVec> lineality, std::vector<ZVec> facets);

private:
    friend Cone cone_from_generators(int rank, const std::vector<ZVec>& vecs);
    friend Cone cone_from_inequalities(int rank, const std::vector<ZVec>& normals);

    void rebuild_facet_list();

    int rank_ = 0;
    std::vector<ZVec> generators_;
    std::vector<ZVec> lineality_;
    std::vector<ZVec> facets_pointed_;
    std::vector<ZVec> equations_;
    std::vector<ZVec> facets_all_;
};

// ---- construction and conversion -------------------------------------------

// Hull of the given rays: the smallest closed convex cone containing them.
// No input vectors yields the zero cone.
Cone cone_from_generators(int rank, const std::vector<ZVec>& vecs);

// Intersection of the half-spaces pairing >= 0 with the normals. No normals
// yields the whole space.
Cone cone_from_inequalities(int rank, const std::vector<ZVec>& normals);

// Dual cone: everything pairing >= 0 with all of c. Recomputed from scratch,
// so dualize(dualize(c)) == c is a genuine check of the conversion engine.
Cone dualize(const Cone& c);

// ---- queries ---------------------------------------------------------------

// Locates x relative to c. Interior means strictly positive pairing with
// every facet normal (vacuously true for the whole space), Boundary means
// nonnegative with at least one zero, Outside means some pairing is negative.
// Interior/Boundary results carry a MembershipCombo, Outside results a
// SeparatingFunctional.
MembershipResult membership(const Cone& c, const ZVec& x);

// Same verdict without certificate work.
Region membership_verdict(const Cone& c, const ZVec& x);

// Gordan dichotomy: either a functional strictly positive on every input
// vector, or nonnegative coefficients (not all zero) combining the inputs to
// zero. Exactly one branch is returned. The witness is primitive integer.
struct PositiveFunctional {
    std::optional<ZVec> witness;
    std::optional<GordanDual> dual;
};
PositiveFunctional strictly_positive_functional(int rank, const std::vector<ZVec>& vecs);

// Overlap of full-dimensional cones: either a point interior to both, or a
// certificate that the interiors are disjoint.
struct OverlapResult {
    bool shared = false;
    std::optional<ZVec> witness;   // interior to both when shared
    std::optional<GordanDual> dual; // combines the two facet systems to 0 when disjoint
};
OverlapResult interiors_overlap(const Cone& a, const Cone& b);

// ---- certificate re-verification -------------------------------------------

bool verify_membership_combo(const Cone& c, const ZVec& x, const MembershipCombo& combo);
bool verify_separating_functional(const Cone& c, const ZVec& x, const SeparatingFunctional& sep);
bool verify_gordan_dual(const std::vector<ZVec>& vecs, const GordanDual& dual);
bool verify_positive_witness(const std::vector<ZVec>& vecs, const ZVec& witness);

} // namespace folcone
