#include "folcone/foliation.hpp"

#include <algorithm>

namespace folcone {

const char* ray_verdict_name(RayVerdict v) {
    switch (v) {
        case RayVerdict::ProperFoliatedRay: return "ProperFoliatedRay";
        case RayVerdict::BoundaryRay: return "BoundaryRay";
        case RayVerdict::OutsideRay: return "OutsideRay";
        case RayVerdict::DegenerateProductRay: return "DegenerateProductRay";
    }
    return "?";
}

Cone homology_cone(const MarkovSystem& sys) {
    std::vector<ZVec> classes;
    for (const MinimalLoop& loop : minimal_loops(sys)) classes.push_back(loop.cls);
    return cone_from_generators(sys.rank(), classes);
}

FoliationConeReport foliation_cone(const MarkovSystem& sys) {
    FoliationConeReport report;
    report.system_id = sys.name();
    report.rank = sys.rank();
    for (const Letter& l : sys.letters()) report.letters.push_back(l.name);
    report.product_type = sys.product_type();
    report.loops = minimal_loops(sys);

    std::vector<ZVec> classes;
    for (const MinimalLoop& loop : report.loops) classes.push_back(loop.cls);

    PositiveFunctional pf = strictly_positive_functional(sys.rank(), classes);
    if (!pf.witness) throw NoTransverseClassError(*pf.dual, report.loops);
    report.salience_witness = *pf.witness;

    report.homology_cone = cone_from_generators(sys.rank(), classes);
    report.foliation_cone = dualize(report.homology_cone);

    for (const ZVec& normal : report.foliation_cone.facets()) {
        FacetInfo info;
        info.normal = normal;
        for (const MinimalLoop& loop : report.loops)
            if (primitive(loop.cls) == normal) info.loops.push_back(loop.word);
        report.facet_loops.push_back(std::move(info));
    }
    return report;
}

RayClassification classify_ray(const FoliationConeReport& report, const QVec& direction) {
    if (static_cast<int>(direction.size()) != report.rank)
        fail(ErrorKind::BadRank, "ray of length " + std::to_string(direction.size()) +
                                     " in rank " + std::to_string(report.rank));
    RayClassification out;
    out.letters = report.letters;
    out.input = direction;
    out.primitive_ray = primitive(direction);

    for (const MinimalLoop& loop : report.loops)
        out.loop_pairings.push_back({loop.word, Rat(dot(loop.cls, out.primitive_ray))});

    MembershipResult mem = membership(report.foliation_cone, out.primitive_ray);
    if (is_zero_vec(out.primitive_ray) && report.foliation_cone.is_whole_space()) {
        out.verdict = RayVerdict::DegenerateProductRay;
    } else {
        out.certificate = mem.certificate;
        switch (mem.region) {
            case Region::Interior: out.verdict = RayVerdict::ProperFoliatedRay; break;
            case Region::Boundary: out.verdict = RayVerdict::BoundaryRay; break;
            case Region::Outside: out.verdict = RayVerdict::OutsideRay; break;
        }
    }
    return out;
}

ConeFamilyReport family_report(const std::vector<MarkovSystem>& systems) {
    ConeFamilyReport fam;
    for (const MarkovSystem& sys : systems) fam.reports.push_back(foliation_cone(sys));

    const int n = static_cast<int>(fam.reports.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            OverlapEntry entry;
            entry.i = i;
            entry.j = j;
            OverlapResult ov =
                interiors_overlap(fam.reports[i].foliation_cone, fam.reports[j].foliation_cone);
            entry.shared = ov.shared;
            entry.witness = ov.witness;
            entry.dual = ov.dual;
            entry.equal_cones = fam.reports[i].foliation_cone == fam.reports[j].foliation_cone;
            entry.violation = (i != j) && entry.shared && !entry.equal_cones;
            if (entry.violation) fam.any_violation = true;
            fam.entries.push_back(std::move(entry));
        }
    }
    return fam;
}

Cone disk_decomposition_cone(int n) {
    if (n < 1) fail(ErrorKind::BadRank, "disk count must be positive");
    std::vector<ZVec> axes;
    for (int i = 0; i < n; ++i) {
        ZVec e(n, Int(0));
        e[i] = 1;
        axes.push_back(std::move(e));
    }
    return cone_from_generators(n, axes);
}

DiskBasis standard_disk_basis(const FoliationConeReport& report) {
    DiskBasis basis;
    basis.n = report.rank;
    for (const MinimalLoop& loop : report.loops) basis.rows.push_back(loop.cls);
    return basis;
}

DiskCheck verify_disk_subcone(const FoliationConeReport& report, const DiskBasis& basis) {
    if (basis.n != report.rank)
        fail(ErrorKind::RankMismatch, "disk basis of size " + std::to_string(basis.n) +
                                          " against rank " + std::to_string(report.rank));
    if (basis.rows.size() != report.loops.size())
        fail(ErrorKind::RankMismatch, "disk basis has " + std::to_string(basis.rows.size()) +
                                          " rows for " + std::to_string(report.loops.size()) +
                                          " loops");
    DiskCheck check;
    check.ok = true;
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        if (static_cast<int>(basis.rows[i].size()) != basis.n)
            fail(ErrorKind::RankMismatch, "disk basis row " + std::to_string(i) + " has length " +
                                              std::to_string(basis.rows[i].size()));
        for (int j = 0; j < basis.n; ++j) {
            if (basis.rows[i][j] < 0) {
                check.ok = false;
                check.offending = {static_cast<int>(i), j};
                return check;
            }
        }
    }
    return check;
}

std::vector<ZVec> facet_lattice_rays(const FoliationConeReport& report, int facet_index,
                                     long height) {
    if (height < 1) fail(ErrorKind::BadHeight, "height must be at least 1, got " + std::to_string(height));
    const auto& facets = report.foliation_cone.facets();
    if (facet_index < 0 || facet_index >= static_cast<int>(facets.size()))
        fail(ErrorKind::BadFacet, "facet index " + std::to_string(facet_index) + " out of range 0.." +
                                      std::to_string(facets.size()));
    const ZVec& normal = facets[facet_index];

    // loops parallel to the facet normal pair to zero automatically once the
    // facet equation holds; the others must stay strictly positive
    std::vector<const ZVec*> positive_classes;
    for (const MinimalLoop& loop : report.loops)
        if (primitive(loop.cls) != normal) positive_classes.push_back(&loop.cls);

    const int d = report.rank;
    std::vector<ZVec> found;
    ZVec x(d, Int(-height));
    for (;;) {
        if (!is_zero_vec(x) && primitive(x) == x && dot(normal, x) == 0) {
            bool ok = true;
            for (const ZVec* cls : positive_classes)
                if (dot(*cls, x) <= 0) { ok = false; break; }
            if (ok) found.push_back(x);
        }
        int carry = d - 1;
        while (carry >= 0) {
            x[carry] += 1;
            if (x[carry] <= height) break;
            x[carry] = -height;
            --carry;
        }
        if (carry < 0) break;
    }
    std::sort(found.begin(), found.end(), lex_less);
    return found;
}

} // namespace folcone
