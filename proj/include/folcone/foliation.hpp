#pragma once

// Assembly of the two dual cones attached to a transition system: the
// homology cone spanned by the minimal-loop classes, and the foliation cone
// of functionals nonnegative on all of them. Classification of rational
// rays, cone families, orthant subcone checks, and lattice scans of facets
// all live here.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folcone/cone.hpp"
#include "folcone/markov.hpp"

namespace folcone {

// Facet of the foliation cone together with the loops whose class spans it.
struct FacetInfo {
    ZVec normal; // equals the primitive class of each listed loop
    std::vector<PeriodicString> loops;

    bool operator==(const FacetInfo&) const = default;
};

struct FoliationConeReport {
    std::string system_id;
    int rank = 0;
    std::vector<std::string> letters;
    bool product_type = false;
    std::vector<MinimalLoop> loops;
    Cone homology_cone;  // hull of the loop classes
    Cone foliation_cone; // its dual; always full-dimensional when this exists
    // Pairs strictly positively with every loop class; zero for product-type
    // systems, whose foliation cone is the whole space.
    ZVec salience_witness;
    std::vector<FacetInfo> facet_loops; // aligned with foliation_cone.facets()

    bool operator==(const FoliationConeReport&) const = default;
};

// Raised when no functional is strictly positive on the loop classes; the
// attached dual certificate exhibits a vanishing nonnegative combination.
class NoTransverseClassError : public Error {
public:
    NoTransverseClassError(GordanDual dual, std::vector<MinimalLoop> loops)
        : Error(ErrorKind::NoTransverseClass,
                "NoTransverseClass: the minimal-loop classes admit no transverse functional"),
          dual_(std::move(dual)), loops_(std::move(loops)) {}

    const GordanDual& dual() const { return dual_; }
    const std::vector<MinimalLoop>& loops() const { return loops_; }

private:
    GordanDual dual_;
    std::vector<MinimalLoop> loops_;
};

Cone homology_cone(const MarkovSystem& sys);

// Builds the full report. Throws NoTransverseClassError when the homology
// cone is not salient, i.e. contains a line.
FoliationConeReport foliation_cone(const MarkovSystem& sys);

// ---- rational ray classification -------------------------------------------

enum class RayVerdict { ProperFoliatedRay, BoundaryRay, OutsideRay, DegenerateProductRay };
const char* ray_verdict_name(RayVerdict v);

struct RayClassification {
    std::vector<std::string> letters;
    QVec input;
    ZVec primitive_ray; // primitive integer vector spanning the same ray
    RayVerdict verdict = RayVerdict::OutsideRay;
    // pairing of the primitive representative with each minimal-loop class
    std::vector<std::pair<PeriodicString, Rat>> loop_pairings;
    std::optional<Certificate> certificate;

    bool operator==(const RayClassification&) const = default;
};

// Scaling-invariant classification of a rational direction against the
// foliation cone. The zero vector is degenerate exactly in the product case.
RayClassification classify_ray(const FoliationConeReport& report, const QVec& direction);

// ---- cone families ----------------------------------------------------------

struct OverlapEntry {
    int i = 0;
    int j = 0; // i <= j, indices into the report list
    bool shared = false;
    bool equal_cones = false;
    // off-diagonal shared interior between structurally different cones;
    // distinct monodromies must produce nonoverlapping cones
    bool violation = false;
    std::optional<ZVec> witness;
    std::optional<GordanDual> dual;

    bool operator==(const OverlapEntry&) const = default;
};

struct ConeFamilyReport {
    std::vector<FoliationConeReport> reports;
    std::vector<OverlapEntry> entries; // all pairs with i <= j
    bool any_violation = false;

    bool operator==(const ConeFamilyReport&) const = default;
};

ConeFamilyReport family_report(const std::vector<MarkovSystem>& systems);

// ---- disk decompositions -----------------------------------------------------

// Loop classes expressed in a basis dual to a disk decomposition; row i gives
// the pairings of loop i with each disk. In the supported mode the basis has
// size equal to the rank and the rows are the loop classes themselves.
struct DiskBasis {
    int n = 0;
    std::vector<ZVec> rows; // aligned with the report's loop order
};

struct DiskCheck {
    bool ok = false;
    // (loop index, column) of the first negative pairing when not ok
    std::optional<std::pair<int, int>> offending;

    bool operator==(const DiskCheck&) const = default;
};

// Nonnegative orthant of the given rank.
Cone disk_decomposition_cone(int n);

DiskBasis standard_disk_basis(const FoliationConeReport& report);

// Checks that the orthant of the disk basis sits inside the foliation cone:
// every loop must pair nonnegatively with every disk. Vacuously true for
// product-type systems.
DiskCheck verify_disk_subcone(const FoliationConeReport& report, const DiskBasis& basis);

// ---- facet lattice scans -----------------------------------------------------

// Primitive integer vectors of max-norm <= height lying in the relative
// interior of the chosen facet: pairing zero with the facet normal and
// strictly positive with every loop class not parallel to it.
std::vector<ZVec> facet_lattice_rays(const FoliationConeReport& report, int facet_index,
                                     long height = 20);

} // namespace folcone
