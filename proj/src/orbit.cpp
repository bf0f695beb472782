#include "folcone/orbit.hpp"

#include <random>

namespace folcone {

namespace {

// Unbiased choice in [0, n) by rejection; depends only on the engine stream,
// so identical seeds replay identical orbits.
std::size_t pick(std::mt19937_64& eng, std::size_t n) {
    const std::uint64_t span = ~std::uint64_t(0);
    const std::uint64_t limit = span - span % n;
    for (;;) {
        std::uint64_t u = eng();
        if (u < limit) return static_cast<std::size_t>(u % n);
    }
}

struct CycleMap {
    std::vector<bool> on_cycle; // letter lies on some cycle
    std::vector<bool> reaching; // a cycle is reachable from the letter
};

CycleMap cycle_map(const MarkovSystem& sys) {
    const int n = sys.letter_count();
    CycleMap map;
    map.on_cycle.assign(n, false);
    for (int s = 0; s < n; ++s) {
        // forward search from the successors of s; s is on a cycle exactly
        // when the search comes back around to it
        std::vector<bool> seen(n, false);
        std::vector<int> stack;
        for (int w : sys.out_edges(s))
            if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : sys.out_edges(v))
                if (!seen[w]) { seen[w] = true; stack.push_back(w); }
        }
        map.on_cycle[s] = seen[s];
    }

    map.reaching = map.on_cycle;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (map.reaching[v]) continue;
            for (int w : sys.out_edges(v)) {
                if (map.reaching[w]) { map.reaching[v] = true; changed = true; break; }
            }
        }
    }
    return map;
}

} // namespace

OrbitPath random_orbit(const MarkovSystem& sys, long steps, std::uint64_t seed) {
    if (sys.product_type())
        fail(ErrorKind::ProductTypeSystem, "no cycles to sample an orbit from");
    if (steps < 1) fail(ErrorKind::DegenerateInput, "orbit needs at least one step");

    CycleMap map = cycle_map(sys);
    int start = 0;
    while (!map.on_cycle[start]) ++start;

    OrbitPath path;
    path.seed = seed;
    path.letters.reserve(steps + 1);
    path.letters.push_back(start);
    path.running.push_back(ZVec(sys.rank(), Int(0)));

    std::mt19937_64 eng(seed);
    int v = start;
    for (long t = 0; t < steps; ++t) {
        std::vector<int> options;
        for (int w : sys.out_edges(v))
            if (map.reaching[w]) options.push_back(w);
        int w = options[pick(eng, options.size())];
        const ZVec& label = sys.label(v, w);
        path.letters.push_back(w);
        path.step_labels.push_back(label);
        path.running.push_back(add(path.running.back(), label));
        v = w;
    }
    return path;
}

std::vector<ClosedWalk> close_at_returns(const OrbitPath& path) {
    std::vector<ClosedWalk> walks;
    if (path.letters.empty()) return walks;
    const int home = path.letters[0];
    long last = 0;
    for (long t = 1; t < static_cast<long>(path.letters.size()); ++t) {
        if (path.letters[t] != home) continue;
        ClosedWalk walk;
        walk.start = last;
        walk.length = t - last;
        walk.cls = sub(path.running[t], path.running[last]);
        walks.push_back(std::move(walk));
        last = t;
    }
    return walks;
}

QVec empirical_direction(const ClosedWalk& walk, int rank) {
    QVec dir(rank);
    for (int i = 0; i < rank; ++i) dir[i] = make_rat(walk.cls[i], Int(walk.length));
    return dir;
}

ConvergenceReport convergence_report(const MarkovSystem& sys, const Cone& homology,
                                     const SimulationConfig& config) {
    ConvergenceReport report;
    report.system_id = sys.name();
    report.config = config;

    for (int trial = 0; trial < config.trials; ++trial) {
        TrialReport tr;
        tr.seed = config.seed + static_cast<std::uint64_t>(trial);
        OrbitPath path = random_orbit(sys, config.steps, tr.seed);

        std::vector<ClosedWalk> walks = close_at_returns(path);
        tr.no_return = walks.empty();
        tr.walk_count = static_cast<long>(walks.size());
        for (const ClosedWalk& walk : walks) {
            if (membership_verdict(homology, walk.cls) == Region::Outside) {
                tr.all_walks_contained = false;
                report.all_contained = false;
            }
        }

        for (long t = 1; t <= config.steps; t *= 2) {
            tr.checkpoints.push_back(t);
            QVec dir(sys.rank());
            for (int i = 0; i < sys.rank(); ++i) dir[i] = make_rat(path.running[t][i], Int(t));
            tr.directions.push_back(std::move(dir));
        }
        for (std::size_t k = 1; k < tr.directions.size(); ++k) {
            QVec gap(sys.rank());
            for (int i = 0; i < sys.rank(); ++i)
                gap[i] = tr.directions[k][i] - tr.directions[k - 1][i];
            tr.successive_diffs.push_back(max_norm(gap));
            if (static_cast<int>(k) >= config.window &&
                tr.successive_diffs.back() > tr.statistic)
                tr.statistic = tr.successive_diffs.back();
        }
        if (tr.statistic > report.max_statistic) report.max_statistic = tr.statistic;
        report.trials.push_back(std::move(tr));
    }
    return report;
}

Cone brute_force_cone(const MarkovSystem& sys, int max_len, long budget) {
    std::vector<ZVec> classes;
    for (const PeriodicString& p : enumerate_periodic_strings(sys, max_len, budget))
        classes.push_back(class_of(sys, p));
    return cone_from_generators(sys.rank(), classes);
}

} // namespace folcone
