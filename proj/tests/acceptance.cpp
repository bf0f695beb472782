// Acceptance gate: one line per criterion, [PASS] or [FAIL], with timings.
// Exit code is the number of failed criteria. Bounds and tolerances are
// pinned here, not configurable.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "folcone/foliation.hpp"
#include "folcone/io.hpp"
#include "folcone/orbit.hpp"
#include "oracles.hpp"

using namespace folcone;

namespace {

int failures = 0;

void criterion(int index, const std::string& name, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!ok) ++failures;

    std::printf("[%s] %d. %s (%.2fs, limit %.0fs)%s%s\n", ok ? "PASS" : "FAIL", index,
                name.c_str(), elapsed, limit_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
}

std::string fixture(const std::string& name) {
    return std::string(FOLCONE_FIXTURE_DIR) + "/" + name;
}

MarkovSystem load(const std::string& name) {
    return validate_system(parse_system_file(fixture(name)));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(FOLCONE_BIN) + " " + args + " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// ---- criterion bodies --------------------------------------------------------

bool hull_oracle_equivalence(std::string& detail) {
    std::vector<MarkovSystem> systems{load("gm.json")};
    for (std::uint64_t seed = 101; seed < 151; ++seed)
        systems.push_back(testing::random_system(seed));

    for (const MarkovSystem& sys : systems) {
        Cone direct = homology_cone(sys);
        Cone brute = brute_force_cone(sys, sys.letter_count());
        if (!(direct == brute)) {
            detail = "mismatch on system " + sys.name();
            return false;
        }
    }
    detail = std::to_string(systems.size()) + " systems";
    return true;
}

bool double_dual_identity(std::string& detail) {
    int nontrivial = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int rank = 1 + static_cast<int>(seed % 5);
        int count = 1 + static_cast<int>((seed * 3) % 8);
        Cone c = cone_from_generators(rank, testing::random_vectors(seed * 77 + 13, rank, count, 3));
        if (!(dualize(dualize(c)) == c)) {
            detail = "seed " + std::to_string(seed);
            return false;
        }
        if (!c.is_zero() && !c.is_whole_space()) ++nontrivial;
    }
    detail = "200 generator sets, " + std::to_string(nontrivial) + " nontrivial";
    return nontrivial > 100;
}

bool gordan_dichotomy(std::string& detail) {
    int witnesses = 0, duals = 0, grid_checked = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        int rank = 2 + static_cast<int>(seed % 4); // 2..5
        int count = 1 + static_cast<int>((seed * 7) % 6);
        std::vector<ZVec> vecs = testing::random_vectors(seed * 311 + 7, rank, count, 3);
        for (ZVec& v : vecs)
            if (is_zero_vec(v)) v[rank - 1] = 1;

        PositiveFunctional r = strictly_positive_functional(rank, vecs);
        if (r.witness.has_value() == r.dual.has_value()) {
            detail = "not exactly one branch at seed " + std::to_string(seed);
            return false;
        }
        if (r.witness && !verify_positive_witness(vecs, *r.witness)) {
            detail = "witness fails at seed " + std::to_string(seed);
            return false;
        }
        if (r.dual && !verify_gordan_dual(vecs, *r.dual)) {
            detail = "dual fails at seed " + std::to_string(seed);
            return false;
        }
        witnesses += r.witness.has_value();
        duals += r.dual.has_value();

        if (rank <= 3) {
            auto grid = testing::grid_positive_functional(rank, vecs, 8);
            if (grid && !r.witness) {
                detail = "grid found a functional the engine missed at seed " + std::to_string(seed);
                return false;
            }
            if (r.dual && grid) {
                detail = "dual and grid witness coexist at seed " + std::to_string(seed);
                return false;
            }
            ++grid_checked;
        }
    }
    detail = std::to_string(witnesses) + " witnesses, " + std::to_string(duals) + " duals, " +
             std::to_string(grid_checked) + " grid-checked";
    return witnesses > 0 && duals > 0 && grid_checked >= 50;
}

bool golden_run(std::string& detail) {
    FoliationConeReport r = foliation_cone(load("gm.json"));

    bool loops_ok = r.loops.size() == 2 && r.loops[0].word.word == std::vector<int>{0} &&
                    r.loops[0].cls == ZVec{1, 0} && r.loops[1].word.word == std::vector<int>{0, 1} &&
                    r.loops[1].cls == ZVec{1, 1};
    bool cone_ok = r.foliation_cone.generators() == std::vector<ZVec>{{0, 1}, {1, -1}} &&
                   r.foliation_cone.facets() == std::vector<ZVec>{{1, 0}, {1, 1}};
    bool oracle_ok = r.foliation_cone.generators() ==
                     testing::dual_rays_2d_pointed(r.homology_cone.generators());

    bool verdicts_ok = classify_ray(r, {1, 1}).verdict == RayVerdict::ProperFoliatedRay &&
                       classify_ray(r, {1, -1}).verdict == RayVerdict::BoundaryRay &&
                       classify_ray(r, {-1, 0}).verdict == RayVerdict::OutsideRay;

    std::string golden = slurp(std::string(FOLCONE_GOLDEN_DIR) + "/gm_cone.json");
    bool golden_ok = !golden.empty() && render_json(r) == golden;

    if (!loops_ok) detail = "loops differ";
    else if (!cone_ok) detail = "cone differs";
    else if (!oracle_ok) detail = "quarter-turn oracle disagrees";
    else if (!verdicts_ok) detail = "a ray verdict differs";
    else if (!golden_ok) detail = "golden file differs";
    return loops_ok && cone_ok && oracle_ok && verdicts_ok && golden_ok;
}

bool integer_decomposition(std::string& detail) {
    MarkovSystem sys = load("gm.json");
    std::vector<MinimalLoop> loops = minimal_loops(sys);
    std::vector<PeriodicString> strings = enumerate_periodic_strings(sys, 8);

    for (const PeriodicString& p : strings) {
        ZVec total(sys.rank(), Int(0));
        long length = 0;
        for (const auto& [loop, mult] : decompose_into_minimal_loops(sys, p)) {
            if (mult <= 0) {
                detail = "nonpositive multiplicity at " + sys.render_word(p);
                return false;
            }
            add_into(total, scale(Int(mult), loop.cls));
            length += mult * static_cast<long>(loop.word.length());
        }
        if (total != class_of(sys, p) || length != static_cast<long>(p.length())) {
            detail = "sum mismatch at " + sys.render_word(p);
            return false;
        }
        if (!testing::decomposition_exists(loops, class_of(sys, p), static_cast<long>(p.length()), 8)) {
            detail = "bounded search finds nothing at " + sys.render_word(p);
            return false;
        }
    }
    detail = std::to_string(strings.size()) + " strings of length <= 8";
    return !strings.empty();
}

bool simulation_convergence(std::string& detail) {
    MarkovSystem sys = load("gm.json");
    SimulationConfig config;
    config.steps = 10000;
    config.trials = 5;
    config.seed = 1;
    config.window = 10; // diffs from checkpoint 2^10 onward

    ConvergenceReport r = convergence_report(sys, homology_cone(sys), config);
    if (!r.all_contained) {
        detail = "a closed-walk class left the cone";
        return false;
    }

    const Rat tolerance = make_rat(1, 20); // 0.05, exact
    for (const TrialReport& t : r.trials) {
        if (t.statistic > tolerance) {
            detail = "statistic " + format_rat(t.statistic) + " over 1/20 at seed " +
                     std::to_string(t.seed);
            return false;
        }
        if (t.walk_count <= 0) {
            detail = "no closed walks at seed " + std::to_string(t.seed);
            return false;
        }
    }

    std::string golden = slurp(std::string(FOLCONE_GOLDEN_DIR) + "/gm_convergence.json");
    if (golden.empty() || render_json(r) != golden) {
        detail = "golden file differs";
        return false;
    }
    detail = "5 trials, max statistic " + format_rat(r.max_statistic);
    return true;
}

bool facet_lattice_density(std::string& detail) {
    FoliationConeReport r = foliation_cone(load("gm.json"));
    std::ostringstream note;

    for (std::size_t i = 0; i < r.facet_loops.size(); ++i) {
        std::vector<ZVec> primitive_rays = facet_lattice_rays(r, static_cast<int>(i), 3);
        if (primitive_rays.empty()) {
            detail = "no primitive ray at height 3 on facet " + std::to_string(i);
            return false;
        }

        // every lattice vector in the facet's relative interior, height <= 40
        const ZVec& normal = r.facet_loops[i].normal;
        long count = 0;
        for (long x = -40; x <= 40; ++x)
            for (long y = -40; y <= 40; ++y) {
                ZVec v{x, y};
                if (is_zero_vec(v) || dot(normal, v) != 0) continue;
                bool relint = true;
                for (const MinimalLoop& loop : r.loops)
                    if (primitive(loop.cls) != normal) relint = relint && dot(loop.cls, v) > 0;
                count += relint;
            }
        if (count < 10) {
            detail = "only " + std::to_string(count) + " lattice points on facet " +
                     std::to_string(i);
            return false;
        }
        note << (i ? ", " : "") << "facet " << i << ": " << primitive_rays.size()
             << " primitive / " << count << " lattice";
    }
    detail = note.str();
    return r.facet_loops.size() == 2;
}

bool family_nonoverlap(std::string& detail) {
    Cone gm = foliation_cone(load("gm.json")).foliation_cone;
    Cone negated = foliation_cone(load("gm_negated.json")).foliation_cone;

    OverlapResult disjoint = interiors_overlap(gm, negated);
    std::vector<ZVec> combined = gm.facets();
    for (const ZVec& f : negated.facets()) combined.push_back(f);
    if (disjoint.shared || !disjoint.dual || !verify_gordan_dual(combined, *disjoint.dual)) {
        detail = "negated pair not certified disjoint";
        return false;
    }

    OverlapResult same = interiors_overlap(gm, gm);
    if (!same.shared || !same.witness ||
        membership_verdict(gm, *same.witness) != Region::Interior) {
        detail = "identical pair not certified shared";
        return false;
    }

    int ok_disjoint = run_cli("family " + fixture("gm.json") + " " + fixture("gm_negated.json"));
    int ok_twins = run_cli("family " + fixture("gm.json") + " " + fixture("gm.json"));
    int violation = run_cli("family " + fixture("gm.json") + " " + fixture("quadrant.json"));
    int blocked = run_cli("cone " + fixture("gordan_pair.json"));
    if (ok_disjoint != 0 || ok_twins != 0 || violation != 2 || blocked != 2) {
        detail = "exit codes " + std::to_string(ok_disjoint) + "/" + std::to_string(ok_twins) +
                 "/" + std::to_string(violation) + "/" + std::to_string(blocked) +
                 ", want 0/0/2/2";
        return false;
    }
    detail = "certificates verified, exit codes 0/0/2/2";
    return true;
}

bool degenerate_cases(std::string& detail) {
    FoliationConeReport prod = foliation_cone(load("product.json"));
    if (!prod.foliation_cone.is_whole_space()) {
        detail = "product cone is not the whole space";
        return false;
    }
    if (classify_ray(prod, {0, 0}).verdict != RayVerdict::DegenerateProductRay) {
        detail = "zero ray not degenerate in the product case";
        return false;
    }

    FoliationConeReport self = foliation_cone(load("self_loop.json"));
    bool half_space = self.foliation_cone.facets() == std::vector<ZVec>{{1, 0, 0}} &&
                      self.foliation_cone.lineality_basis().size() == 2 &&
                      self.foliation_cone.full_dimensional();
    if (!half_space) {
        detail = "self-loop cone is not a full half-space with lineality rank 2";
        return false;
    }
    detail = "whole space and half-space as pinned";
    return true;
}

} // namespace

int main() {
    std::printf("acceptance gate: exact cone engine\n");

    criterion(1, "brute-force string hull equals the minimal-loop cone", 30,
              hull_oracle_equivalence);
    criterion(2, "double dual is the identity on random generator sets", 10, double_dual_identity);
    criterion(3, "positive-functional dichotomy with verified certificates", 20, gordan_dichotomy);
    criterion(4, "two-letter golden run: loops, cones, verdicts, golden bytes", 1, golden_run);
    criterion(5, "integer decomposition of all short strings", 5, integer_decomposition);
    criterion(6, "seeded simulation containment and convergence", 10, simulation_convergence);
    criterion(7, "facet lattice rays at small and moderate heights", 5, facet_lattice_density);
    criterion(8, "family overlap certificates and CLI exit codes", 5, family_nonoverlap);
    criterion(9, "product and self-loop degenerate shapes", 1, degenerate_cases);

    if (failures == 0) std::printf("all criteria passed\n");
    else std::printf("%d criteria FAILED\n", failures);
    return failures;
}
