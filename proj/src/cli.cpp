#include "folcone/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "folcone/errors.hpp"
#include "folcone/foliation.hpp"
#include "folcone/io.hpp"
#include "folcone/markov.hpp"
#include "folcone/orbit.hpp"

namespace folcone {

namespace {

long enum_cap() {
    const char* env = std::getenv("FOLCONE_ENUM_CAP");
    if (!env || !*env) return 1000000;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        fail(ErrorKind::DegenerateInput, "FOLCONE_ENUM_CAP: expected a positive integer");
    return v;
}

MarkovSystem load_system(const std::string& path) {
    return validate_system(parse_system_file(path));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) fail(ErrorKind::IoError, "cannot open " + out_path + " for writing");
    out << text;
    out.flush();
    if (!out) fail(ErrorKind::IoError, "write to " + out_path + " failed");
}

std::vector<std::string> split_on(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

QVec parse_vector_arg(const std::string& text, const std::string& what) {
    QVec v;
    for (const std::string& part : split_on(text, ',')) {
        if (part.empty()) fail(ErrorKind::DegenerateInput, what + ": empty component");
        try {
            v.push_back(parse_rat(part));
        } catch (const Error&) {
            fail(ErrorKind::DegenerateInput, what + ": not a rational: \"" + part + "\"");
        }
    }
    return v;
}

// ---- subcommand bodies -------------------------------------------------------

int run_check(const std::string& path) {
    MarkovSystem sys = load_system(path);
    std::ostringstream out;
    out << "system: " << sys.name() << "\n"
        << "rank: " << sys.rank() << "\n"
        << "letters: " << sys.letter_count() << "\n"
        << "transitions: " << sys.transitions().size() << "\n"
        << "minimal loops: " << minimal_loops(sys).size() << "\n"
        << "product type: " << (sys.product_type() ? "yes" : "no") << "\n";
    std::cout << out.str();
    return 0;
}

int run_loops(const std::string& path, int max_len) {
    MarkovSystem sys = load_system(path);
    std::vector<MinimalLoop> loops = minimal_loops(sys);
    std::ostringstream out;
    out << "minimal loops (" << loops.size() << "):\n";
    for (const MinimalLoop& loop : loops)
        out << "  " << sys.render_word(loop.word) << " class " << format_zvec(loop.cls) << "\n";
    if (max_len > 0) {
        std::vector<PeriodicString> strings = enumerate_periodic_strings(sys, max_len, enum_cap());
        out << "periodic strings of length <= " << max_len << " (" << strings.size() << "):\n";
        for (const PeriodicString& p : strings)
            out << "  " << sys.render_word(p) << " class " << format_zvec(class_of(sys, p))
                << "\n";
    }
    std::cout << out.str();
    return 0;
}

int run_cone(const std::string& path, const std::string& format, const std::string& out_path) {
    MarkovSystem sys = load_system(path);
    FoliationConeReport report = foliation_cone(sys);
    emit(format == "json" ? render_json(report) : render_text(report), out_path);
    return 0;
}

int run_classify(const std::string& path, const std::string& ray, const std::string& format,
                 const std::string& out_path) {
    MarkovSystem sys = load_system(path);
    FoliationConeReport report = foliation_cone(sys);
    RayClassification cls = classify_ray(report, parse_vector_arg(ray, "--ray"));
    emit(format == "json" ? render_json(cls) : render_text(cls), out_path);
    return 0;
}

int run_verify(const std::string& path, int max_len, int integer_max_len) {
    MarkovSystem sys = load_system(path);
    long cap = enum_cap();
    std::ostringstream out;
    bool ok = true;

    Cone homology = homology_cone(sys);
    Cone brute = brute_force_cone(sys, max_len, cap);
    bool cones_equal = homology == brute;
    out << "hull of strings of length <= " << max_len
        << " equals minimal-loop cone: " << (cones_equal ? "pass" : "FAIL") << "\n";
    ok = ok && cones_equal;

    std::vector<PeriodicString> strings = enumerate_periodic_strings(sys, integer_max_len, cap);
    long bad = 0;
    for (const PeriodicString& p : strings) {
        ZVec total(sys.rank(), Int(0));
        long step_count = 0;
        for (const auto& [loop, mult] : decompose_into_minimal_loops(sys, p)) {
            if (mult <= 0) { ++bad; break; }
            add_into(total, scale(Int(mult), loop.cls));
            step_count += mult * static_cast<long>(loop.word.length());
        }
        if (total != class_of(sys, p) || step_count != static_cast<long>(p.length())) {
            ++bad;
            out << "  decomposition mismatch at " << sys.render_word(p) << "\n";
        }
    }
    out << "integer decomposition of " << strings.size() << " strings of length <= "
        << integer_max_len << ": " << (bad == 0 ? "pass" : "FAIL") << "\n";
    ok = ok && bad == 0;

    std::cout << out.str();
    return ok ? 0 : 2;
}

int run_disk(const std::string& path, const std::string& format, const std::string& out_path) {
    MarkovSystem sys = load_system(path);
    FoliationConeReport report = foliation_cone(sys);
    DiskCheck check = verify_disk_subcone(report, standard_disk_basis(report));
    emit(format == "json" ? render_json(check, report) : render_text(check, report), out_path);
    return check.ok ? 0 : 2;
}

int run_family(const std::vector<std::string>& paths, const std::string& format,
               const std::string& out_path) {
    std::vector<MarkovSystem> systems;
    for (const std::string& path : paths) systems.push_back(load_system(path));
    ConeFamilyReport report = family_report(systems);
    emit(format == "json" ? render_json(report) : render_text(report), out_path);
    return report.any_violation ? 2 : 0;
}

int run_simulate(const std::string& path, const SimulationConfig& config,
                 const std::string& format, const std::string& out_path) {
    MarkovSystem sys = load_system(path);
    ConvergenceReport report = convergence_report(sys, homology_cone(sys), config);
    emit(format == "json" ? render_json(report) : render_text(report), out_path);
    return report.all_contained ? 0 : 2;
}

int run_slice(const std::string& path, const std::string& plane, const std::string& out_path) {
    MarkovSystem sys = load_system(path);
    FoliationConeReport report = foliation_cone(sys);

    std::vector<std::string> halves = split_on(plane, ';');
    if (halves.size() != 2)
        fail(ErrorKind::DegeneratePlane, "--plane: expected two vectors separated by ';'");
    QVec v1 = parse_vector_arg(halves[0], "--plane");
    QVec v2 = parse_vector_arg(halves[1], "--plane");

    emit(render_csv(slice_plot_data(report.foliation_cone, v1, v2)), out_path);
    return 0;
}

} // namespace

int cli_dispatch(const std::vector<std::string>& args) {
    CLI::App app{"exact homology and foliation cones of endperiodic transition systems"};
    app.require_subcommand(1);

    int rc = 0;
    std::string file, format = "text", out_path, ray, plane;
    std::vector<std::string> files;
    int max_len = 0, verify_max_len = 10, integer_max_len = 6;
    SimulationConfig config;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out_path, "write output to this file instead of stdout");
    };

    CLI::App* check = app.add_subcommand("check", "validate a system file and print its shape");
    check->add_option("file", file, "system file")->required();
    check->callback([&] { rc = run_check(file); });

    CLI::App* loops = app.add_subcommand("loops", "list minimal loops and their classes");
    loops->add_option("file", file, "system file")->required();
    loops->add_option("--max-len", max_len, "also list all periodic strings up to this length");
    loops->callback([&] { rc = run_loops(file, max_len); });

    CLI::App* cone = app.add_subcommand("cone", "compute the homology and foliation cones");
    cone->add_option("file", file, "system file")->required();
    add_format(cone);
    cone->callback([&] { rc = run_cone(file, format, out_path); });

    CLI::App* classify = app.add_subcommand("classify", "classify a rational ray");
    classify->add_option("file", file, "system file")->required();
    classify->add_option("--ray", ray, "comma-separated rational coordinates")->required();
    add_format(classify);
    classify->callback([&] { rc = run_classify(file, ray, format, out_path); });

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the cone against brute-force string enumeration");
    verify->add_option("file", file, "system file")->required();
    verify->add_option("--max-len", verify_max_len, "string length bound for the hull check");
    verify->add_option("--integer-max-len", integer_max_len,
                       "string length bound for the decomposition check");
    verify->callback([&] { rc = run_verify(file, verify_max_len, integer_max_len); });

    CLI::App* disk = app.add_subcommand("disk", "check the orthant subcone in the disk basis");
    disk->add_option("file", file, "system file")->required();
    add_format(disk);
    disk->callback([&] { rc = run_disk(file, format, out_path); });

    CLI::App* family = app.add_subcommand("family", "compare the cones of several systems");
    family->add_option("files", files, "system files")->required()->expected(-1);
    add_format(family);
    family->callback([&] { rc = run_family(files, format, out_path); });

    CLI::App* simulate =
        app.add_subcommand("simulate", "run seeded random orbits and check containment");
    simulate->add_option("file", file, "system file")->required();
    simulate->add_option("--steps", config.steps, "steps per orbit");
    simulate->add_option("--trials", config.trials, "number of orbits");
    simulate->add_option("--seed", config.seed, "seed of the first orbit");
    simulate->add_option("--window", config.window,
                         "first dyadic exponent entering the statistic");
    add_format(simulate);
    simulate->callback([&] { rc = run_simulate(file, config, format, out_path); });

    CLI::App* slice = app.add_subcommand("slice", "intersect the foliation cone with a 2-plane");
    slice->add_option("file", file, "system file")->required();
    slice->add_option("--plane", plane, "two vectors, e.g. \"1,0;0,1\"")->required();
    slice->add_option("--out", out_path, "write CSV to this file instead of stdout");
    slice->callback([&] { rc = run_slice(file, plane, out_path); });

    std::vector<std::string> argv_store;
    argv_store.push_back("folcone");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const std::string& s : argv_store) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return rc;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace folcone
