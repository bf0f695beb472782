#include "folcone/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "folcone/linalg.hpp"
#include "json.hpp"

namespace folcone {

namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
    fail(ErrorKind::SchemaError, path + ": " + what);
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; } else ++col;
    }
    return {line, col};
}

ojson parse_or_fail(const std::string& text, const std::string& origin) {
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte);
        fail(ErrorKind::SyntaxError, origin + ": line " + std::to_string(line) + ", column " +
                                         std::to_string(col) + ": malformed JSON");
    }
}

// ---- scalar readers ---------------------------------------------------------

Int read_int(const ojson& v, const std::string& path) {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_number_unsigned()) return Int(v.dump());
    if (v.is_string()) {
        try {
            return parse_int(v.get<std::string>());
        } catch (const Error&) {
            schema_fail(path, "expected an integer, got \"" + v.get<std::string>() + "\"");
        }
    }
    schema_fail(path, "expected an integer");
}

Rat read_rat(const ojson& v, const std::string& path) {
    if (v.is_string()) {
        try {
            return parse_rat(v.get<std::string>());
        } catch (const Error&) {
            schema_fail(path, "expected a rational, got \"" + v.get<std::string>() + "\"");
        }
    }
    return Rat(read_int(v, path));
}

std::string read_string(const ojson& v, const std::string& path) {
    if (!v.is_string()) schema_fail(path, "expected a string");
    return v.get<std::string>();
}

bool read_bool(const ojson& v, const std::string& path) {
    if (!v.is_boolean()) schema_fail(path, "expected a boolean");
    return v.get<bool>();
}

long read_long(const ojson& v, const std::string& path) {
    if (!v.is_number_integer() && !v.is_number_unsigned()) schema_fail(path, "expected an integer");
    return v.get<long>();
}

const ojson& field(const ojson& v, const char* name, const std::string& path) {
    if (!v.is_object() || !v.contains(name)) schema_fail(path + "." + name, "missing field");
    return v.at(name);
}

const ojson& array_at(const ojson& v, const std::string& path) {
    if (!v.is_array()) schema_fail(path, "expected an array");
    return v;
}

// ---- vector and word codecs ---------------------------------------------------

ojson write_zvec(const ZVec& v) {
    ojson a = ojson::array();
    for (const Int& x : v) a.push_back(format_int(x));
    return a;
}

ojson write_qvec(const QVec& v) {
    ojson a = ojson::array();
    for (const Rat& x : v) a.push_back(format_rat(x));
    return a;
}

ZVec read_zvec(const ojson& v, const std::string& path) {
    array_at(v, path);
    ZVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(read_int(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

QVec read_qvec(const ojson& v, const std::string& path) {
    array_at(v, path);
    QVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(read_rat(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<ZVec> read_zvec_list(const ojson& v, const std::string& path) {
    array_at(v, path);
    std::vector<ZVec> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(read_zvec(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

ojson write_word(const PeriodicString& p, const std::vector<std::string>& letters) {
    ojson a = ojson::array();
    for (int idx : p.word) a.push_back(letters[idx]);
    return a;
}

PeriodicString read_word(const ojson& v, const std::vector<std::string>& letters,
                         const std::string& path) {
    array_at(v, path);
    PeriodicString p;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string name = read_string(v[i], path + "[" + std::to_string(i) + "]");
        auto it = std::find(letters.begin(), letters.end(), name);
        if (it == letters.end())
            schema_fail(path + "[" + std::to_string(i) + "]", "unknown letter \"" + name + "\"");
        p.word.push_back(static_cast<int>(it - letters.begin()));
    }
    return p;
}

// ---- cone and certificate codecs ------------------------------------------------

ojson write_cone(const Cone& c) {
    ojson j;
    j["generators"] = ojson::array();
    for (const ZVec& g : c.generators()) j["generators"].push_back(write_zvec(g));
    j["lineality"] = ojson::array();
    for (const ZVec& l : c.lineality_basis()) j["lineality"].push_back(write_zvec(l));
    j["facets"] = ojson::array();
    for (const ZVec& f : c.facets()) j["facets"].push_back(write_zvec(f));
    return j;
}

Cone read_cone(int rank, const ojson& v, const std::string& path) {
    return Cone::from_canonical_parts(rank, read_zvec_list(field(v, "generators", path), path + ".generators"),
                                      read_zvec_list(field(v, "lineality", path), path + ".lineality"),
                                      read_zvec_list(field(v, "facets", path), path + ".facets"));
}

ojson write_certificate(const Certificate& cert) {
    ojson j;
    if (const auto* combo = std::get_if<MembershipCombo>(&cert)) {
        j["kind"] = "membership_combo";
        j["generator_coefficients"] = write_qvec(combo->generator_coeffs);
        j["lineality_coefficients"] = write_qvec(combo->lineality_coeffs);
    } else if (const auto* sep = std::get_if<SeparatingFunctional>(&cert)) {
        j["kind"] = "separating_functional";
        j["normal"] = write_zvec(sep->normal);
    } else {
        j["kind"] = "gordan_dual";
        j["coefficients"] = write_qvec(std::get<GordanDual>(cert).coeffs);
    }
    return j;
}

Certificate read_certificate(const ojson& v, const std::string& path) {
    std::string kind = read_string(field(v, "kind", path), path + ".kind");
    if (kind == "membership_combo") {
        MembershipCombo combo;
        combo.generator_coeffs =
            read_qvec(field(v, "generator_coefficients", path), path + ".generator_coefficients");
        combo.lineality_coeffs =
            read_qvec(field(v, "lineality_coefficients", path), path + ".lineality_coefficients");
        return combo;
    }
    if (kind == "separating_functional")
        return SeparatingFunctional{read_zvec(field(v, "normal", path), path + ".normal")};
    if (kind == "gordan_dual")
        return GordanDual{read_qvec(field(v, "coefficients", path), path + ".coefficients")};
    schema_fail(path + ".kind", "unknown certificate kind \"" + kind + "\"");
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

} // namespace

// ---- system files ----------------------------------------------------------------

SystemDocument parse_system_text(const std::string& text, const std::string& origin) {
    ojson doc = parse_or_fail(text, origin);
    if (!doc.is_object()) schema_fail("$", "expected a top-level object");

    SystemDocument sd;
    sd.name = origin;
    for (const auto& [key, value] : doc.items()) {
        if (key == "rank" || key == "letters" || key == "transitions") continue;
        if (key == "name") {
            sd.name = read_string(value, "name");
            continue;
        }
        schema_fail(key, "unknown field");
    }

    sd.rank = read_long(field(doc, "rank", "$"), "rank");

    const ojson& letters = array_at(field(doc, "letters", "$"), "letters");
    for (std::size_t i = 0; i < letters.size(); ++i)
        sd.letters.push_back(read_string(letters[i], "letters[" + std::to_string(i) + "]"));

    const ojson& transitions = array_at(field(doc, "transitions", "$"), "transitions");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const std::string path = "transitions[" + std::to_string(i) + "]";
        const ojson& t = transitions[i];
        if (!t.is_object()) schema_fail(path, "expected an object");
        for (const auto& [key, value] : t.items()) {
            (void)value;
            if (key != "from" && key != "to" && key != "class")
                schema_fail(path + "." + key, "unknown field");
        }
        TransitionRecord rec;
        rec.from = read_string(field(t, "from", path), path + ".from");
        rec.to = read_string(field(t, "to", path), path + ".to");
        rec.label = read_zvec(field(t, "class", path), path + ".class");
        if (sd.rank >= 0 && static_cast<long>(rec.label.size()) != sd.rank)
            schema_fail(path + ".class", "expected " + std::to_string(sd.rank) + " entries, got " +
                                             std::to_string(rec.label.size()));
        sd.transitions.push_back(std::move(rec));
    }
    return sd;
}

SystemDocument parse_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();

    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);

    return parse_system_text(buf.str(), stem);
}

// ---- report JSON -------------------------------------------------------------------

std::string render_json(const FoliationConeReport& report) {
    ojson j;
    j["type"] = "foliation_cone_report";
    j["system"] = report.system_id;
    j["rank"] = report.rank;
    j["letters"] = report.letters;
    j["product_type"] = report.product_type;
    j["minimal_loops"] = ojson::array();
    for (const MinimalLoop& loop : report.loops) {
        ojson l;
        l["word"] = write_word(loop.word, report.letters);
        l["class"] = write_zvec(loop.cls);
        j["minimal_loops"].push_back(std::move(l));
    }
    j["homology_cone"] = write_cone(report.homology_cone);
    j["foliation_cone"] = write_cone(report.foliation_cone);
    j["salience_witness"] = write_zvec(report.salience_witness);
    j["facets"] = ojson::array();
    for (const FacetInfo& f : report.facet_loops) {
        ojson e;
        e["normal"] = write_zvec(f.normal);
        e["loops"] = ojson::array();
        for (const PeriodicString& w : f.loops) e["loops"].push_back(write_word(w, report.letters));
        j["facets"].push_back(std::move(e));
    }
    return dump(j);
}

FoliationConeReport parse_foliation_report(const std::string& text) {
    ojson j = parse_or_fail(text, "report");
    if (read_string(field(j, "type", "$"), "type") != "foliation_cone_report")
        schema_fail("type", "not a foliation cone report");

    FoliationConeReport r;
    r.system_id = read_string(field(j, "system", "$"), "system");
    r.rank = static_cast<int>(read_long(field(j, "rank", "$"), "rank"));
    for (const auto& l : array_at(field(j, "letters", "$"), "letters"))
        r.letters.push_back(read_string(l, "letters[]"));
    r.product_type = read_bool(field(j, "product_type", "$"), "product_type");

    const ojson& loops = array_at(field(j, "minimal_loops", "$"), "minimal_loops");
    for (std::size_t i = 0; i < loops.size(); ++i) {
        const std::string path = "minimal_loops[" + std::to_string(i) + "]";
        MinimalLoop loop;
        loop.word = read_word(field(loops[i], "word", path), r.letters, path + ".word");
        loop.cls = read_zvec(field(loops[i], "class", path), path + ".class");
        r.loops.push_back(std::move(loop));
    }

    r.homology_cone = read_cone(r.rank, field(j, "homology_cone", "$"), "homology_cone");
    r.foliation_cone = read_cone(r.rank, field(j, "foliation_cone", "$"), "foliation_cone");
    r.salience_witness = read_zvec(field(j, "salience_witness", "$"), "salience_witness");

    const ojson& facets = array_at(field(j, "facets", "$"), "facets");
    for (std::size_t i = 0; i < facets.size(); ++i) {
        const std::string path = "facets[" + std::to_string(i) + "]";
        FacetInfo info;
        info.normal = read_zvec(field(facets[i], "normal", path), path + ".normal");
        const ojson& words = array_at(field(facets[i], "loops", path), path + ".loops");
        for (std::size_t k = 0; k < words.size(); ++k)
            info.loops.push_back(
                read_word(words[k], r.letters, path + ".loops[" + std::to_string(k) + "]"));
        r.facet_loops.push_back(std::move(info));
    }
    return r;
}

std::string render_json(const RayClassification& cls) {
    ojson j;
    j["type"] = "ray_classification";
    j["letters"] = cls.letters;
    j["input"] = write_qvec(cls.input);
    j["primitive"] = write_zvec(cls.primitive_ray);
    j["verdict"] = ray_verdict_name(cls.verdict);
    j["loop_pairings"] = ojson::array();
    for (const auto& [word, pairing] : cls.loop_pairings) {
        ojson e;
        e["word"] = write_word(word, cls.letters);
        e["pairing"] = format_rat(pairing);
        j["loop_pairings"].push_back(std::move(e));
    }
    if (cls.certificate) j["certificate"] = write_certificate(*cls.certificate);
    else j["certificate"] = nullptr;
    return dump(j);
}

RayClassification parse_ray_classification(const std::string& text) {
    ojson j = parse_or_fail(text, "report");
    if (read_string(field(j, "type", "$"), "type") != "ray_classification")
        schema_fail("type", "not a ray classification");

    RayClassification r;
    for (const auto& l : array_at(field(j, "letters", "$"), "letters"))
        r.letters.push_back(read_string(l, "letters[]"));
    r.input = read_qvec(field(j, "input", "$"), "input");
    r.primitive_ray = read_zvec(field(j, "primitive", "$"), "primitive");

    std::string verdict = read_string(field(j, "verdict", "$"), "verdict");
    if (verdict == "ProperFoliatedRay") r.verdict = RayVerdict::ProperFoliatedRay;
    else if (verdict == "BoundaryRay") r.verdict = RayVerdict::BoundaryRay;
    else if (verdict == "OutsideRay") r.verdict = RayVerdict::OutsideRay;
    else if (verdict == "DegenerateProductRay") r.verdict = RayVerdict::DegenerateProductRay;
    else schema_fail("verdict", "unknown verdict \"" + verdict + "\"");

    const ojson& pairings = array_at(field(j, "loop_pairings", "$"), "loop_pairings");
    for (std::size_t i = 0; i < pairings.size(); ++i) {
        const std::string path = "loop_pairings[" + std::to_string(i) + "]";
        PeriodicString word = read_word(field(pairings[i], "word", path), r.letters, path + ".word");
        Rat pairing = read_rat(field(pairings[i], "pairing", path), path + ".pairing");
        r.loop_pairings.push_back({std::move(word), std::move(pairing)});
    }
    const ojson& cert = field(j, "certificate", "$");
    if (!cert.is_null()) r.certificate = read_certificate(cert, "certificate");
    return r;
}

std::string render_json(const ConeFamilyReport& report) {
    ojson j;
    j["type"] = "cone_family_report";
    j["systems"] = ojson::array();
    for (const FoliationConeReport& r : report.reports)
        j["systems"].push_back(ojson::parse(render_json(r)));
    j["overlaps"] = ojson::array();
    for (const OverlapEntry& e : report.entries) {
        ojson o;
        o["i"] = e.i;
        o["j"] = e.j;
        o["shared"] = e.shared;
        o["equal_cones"] = e.equal_cones;
        o["violation"] = e.violation;
        if (e.witness) o["witness"] = write_zvec(*e.witness);
        if (e.dual) o["dual"] = write_qvec(e.dual->coeffs);
        j["overlaps"].push_back(std::move(o));
    }
    j["any_violation"] = report.any_violation;
    return dump(j);
}

ConeFamilyReport parse_family_report(const std::string& text) {
    ojson j = parse_or_fail(text, "report");
    if (read_string(field(j, "type", "$"), "type") != "cone_family_report")
        schema_fail("type", "not a cone family report");

    ConeFamilyReport r;
    for (const auto& sys : array_at(field(j, "systems", "$"), "systems"))
        r.reports.push_back(parse_foliation_report(sys.dump()));
    const ojson& overlaps = array_at(field(j, "overlaps", "$"), "overlaps");
    for (std::size_t i = 0; i < overlaps.size(); ++i) {
        const std::string path = "overlaps[" + std::to_string(i) + "]";
        const ojson& o = overlaps[i];
        OverlapEntry e;
        e.i = static_cast<int>(read_long(field(o, "i", path), path + ".i"));
        e.j = static_cast<int>(read_long(field(o, "j", path), path + ".j"));
        e.shared = read_bool(field(o, "shared", path), path + ".shared");
        e.equal_cones = read_bool(field(o, "equal_cones", path), path + ".equal_cones");
        e.violation = read_bool(field(o, "violation", path), path + ".violation");
        if (o.contains("witness")) e.witness = read_zvec(o.at("witness"), path + ".witness");
        if (o.contains("dual")) e.dual = GordanDual{read_qvec(o.at("dual"), path + ".dual")};
        r.entries.push_back(std::move(e));
    }
    r.any_violation = read_bool(field(j, "any_violation", "$"), "any_violation");
    return r;
}

std::string render_json(const ConvergenceReport& report) {
    ojson j;
    j["type"] = "convergence_report";
    j["system"] = report.system_id;
    j["config"] = {{"steps", report.config.steps},
                   {"trials", report.config.trials},
                   {"seed", report.config.seed},
                   {"window", report.config.window}};
    j["trials"] = ojson::array();
    for (const TrialReport& t : report.trials) {
        ojson e;
        e["seed"] = t.seed;
        e["no_return"] = t.no_return;
        e["walk_count"] = t.walk_count;
        e["all_walks_contained"] = t.all_walks_contained;
        e["checkpoints"] = t.checkpoints;
        e["directions"] = ojson::array();
        for (const QVec& d : t.directions) e["directions"].push_back(write_qvec(d));
        e["successive_diffs"] = ojson::array();
        for (const Rat& x : t.successive_diffs) e["successive_diffs"].push_back(format_rat(x));
        e["statistic"] = format_rat(t.statistic);
        j["trials"].push_back(std::move(e));
    }
    j["max_statistic"] = format_rat(report.max_statistic);
    j["all_contained"] = report.all_contained;
    return dump(j);
}

ConvergenceReport parse_convergence_report(const std::string& text) {
    ojson j = parse_or_fail(text, "report");
    if (read_string(field(j, "type", "$"), "type") != "convergence_report")
        schema_fail("type", "not a convergence report");

    ConvergenceReport r;
    r.system_id = read_string(field(j, "system", "$"), "system");
    const ojson& cfg = field(j, "config", "$");
    r.config.steps = read_long(field(cfg, "steps", "config"), "config.steps");
    r.config.trials = static_cast<int>(read_long(field(cfg, "trials", "config"), "config.trials"));
    const ojson& seed = field(cfg, "seed", "config");
    if (!seed.is_number_integer() && !seed.is_number_unsigned())
        schema_fail("config.seed", "expected an integer");
    r.config.seed = seed.get<std::uint64_t>();
    r.config.window = static_cast<int>(read_long(field(cfg, "window", "config"), "config.window"));

    const ojson& trials = array_at(field(j, "trials", "$"), "trials");
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const std::string path = "trials[" + std::to_string(i) + "]";
        const ojson& t = trials[i];
        TrialReport tr;
        const ojson& tseed = field(t, "seed", path);
        if (!tseed.is_number_integer() && !tseed.is_number_unsigned())
            schema_fail(path + ".seed", "expected an integer");
        tr.seed = tseed.get<std::uint64_t>();
        tr.no_return = read_bool(field(t, "no_return", path), path + ".no_return");
        tr.walk_count = read_long(field(t, "walk_count", path), path + ".walk_count");
        tr.all_walks_contained =
            read_bool(field(t, "all_walks_contained", path), path + ".all_walks_contained");
        for (const auto& c : array_at(field(t, "checkpoints", path), path + ".checkpoints"))
            tr.checkpoints.push_back(read_long(c, path + ".checkpoints[]"));
        for (const auto& d : array_at(field(t, "directions", path), path + ".directions"))
            tr.directions.push_back(read_qvec(d, path + ".directions[]"));
        for (const auto& x : array_at(field(t, "successive_diffs", path), path + ".successive_diffs"))
            tr.successive_diffs.push_back(read_rat(x, path + ".successive_diffs[]"));
        tr.statistic = read_rat(field(t, "statistic", path), path + ".statistic");
        r.trials.push_back(std::move(tr));
    }
    r.max_statistic = read_rat(field(j, "max_statistic", "$"), "max_statistic");
    r.all_contained = read_bool(field(j, "all_contained", "$"), "all_contained");
    return r;
}

std::string render_json(const DiskCheck& check, const FoliationConeReport& report) {
    ojson j;
    j["type"] = "disk_check";
    j["system"] = report.system_id;
    j["n"] = report.rank;
    j["ok"] = check.ok;
    if (check.offending) {
        ojson o;
        o["loop"] = check.offending->first;
        o["column"] = check.offending->second;
        o["word"] = write_word(report.loops[check.offending->first].word, report.letters);
        j["offending"] = std::move(o);
    }
    return dump(j);
}

// ---- text rendering ------------------------------------------------------------------

namespace {

void render_cone_text(std::ostringstream& out, const std::string& title, const Cone& c) {
    out << title << ":\n";
    out << "  generators:";
    if (c.generators().empty()) out << " (none)";
    for (const ZVec& g : c.generators()) out << " " << format_zvec(g);
    out << "\n  lineality:";
    if (c.lineality_basis().empty()) out << " (none)";
    for (const ZVec& l : c.lineality_basis()) out << " " << format_zvec(l);
    out << "\n  facets:";
    if (c.facets().empty()) out << " (none; whole space)";
    for (const ZVec& f : c.facets()) out << " " << format_zvec(f);
    out << "\n";
}

} // namespace

std::string render_text(const FoliationConeReport& report) {
    std::ostringstream out;
    out << "system: " << report.system_id << "\n";
    out << "rank: " << report.rank << "\n";
    out << "product type: " << (report.product_type ? "yes" : "no") << "\n";
    out << "minimal loops (" << report.loops.size() << "):\n";
    for (const MinimalLoop& loop : report.loops) {
        PeriodicString p = loop.word;
        out << "  ";
        out << "(";
        for (std::size_t i = 0; i < p.word.size(); ++i) {
            if (i) out << ", ";
            out << report.letters[p.word[i]];
        }
        out << ") class " << format_zvec(loop.cls) << "\n";
    }
    render_cone_text(out, "homology cone", report.homology_cone);
    render_cone_text(out, "foliation cone", report.foliation_cone);
    out << "salience witness: " << format_zvec(report.salience_witness) << "\n";
    if (!report.facet_loops.empty()) {
        out << "facet inequalities:\n";
        for (const FacetInfo& f : report.facet_loops) {
            out << "  <" << format_zvec(f.normal) << ", x> >= 0";
            if (!f.loops.empty()) {
                out << "   from loop";
                if (f.loops.size() > 1) out << "s";
                for (const PeriodicString& w : f.loops) {
                    out << " (";
                    for (std::size_t i = 0; i < w.word.size(); ++i) {
                        if (i) out << ", ";
                        out << report.letters[w.word[i]];
                    }
                    out << ")";
                }
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string render_text(const RayClassification& cls) {
    std::ostringstream out;
    out << "input: " << format_qvec(cls.input) << "\n";
    out << "primitive representative: " << format_zvec(cls.primitive_ray) << "\n";
    out << "verdict: " << ray_verdict_name(cls.verdict) << "\n";
    if (!cls.loop_pairings.empty()) {
        out << "loop pairings:\n";
        for (const auto& [word, pairing] : cls.loop_pairings) {
            out << "  (";
            for (std::size_t i = 0; i < word.word.size(); ++i) {
                if (i) out << ", ";
                out << cls.letters[word.word[i]];
            }
            out << "): " << format_rat(pairing) << "\n";
        }
    }
    return out.str();
}

std::string render_text(const ConeFamilyReport& report) {
    std::ostringstream out;
    out << "systems (" << report.reports.size() << "):\n";
    for (std::size_t i = 0; i < report.reports.size(); ++i)
        out << "  [" << i << "] " << report.reports[i].system_id << "\n";
    out << "overlaps:\n";
    for (const OverlapEntry& e : report.entries) {
        out << "  [" << e.i << "] vs [" << e.j << "]: "
            << (e.shared ? "shared interior" : "disjoint interiors");
        if (e.shared && e.witness) out << ", witness " << format_zvec(*e.witness);
        if (e.i != e.j && e.shared) out << (e.equal_cones ? " (equal cones)" : " (VIOLATION)");
        out << "\n";
    }
    out << "family violation: " << (report.any_violation ? "yes" : "no") << "\n";
    return out.str();
}

std::string render_text(const ConvergenceReport& report) {
    std::ostringstream out;
    out << "system: " << report.system_id << "\n";
    out << "steps: " << report.config.steps << ", trials: " << report.config.trials
        << ", base seed: " << report.config.seed << ", window: 2^" << report.config.window << "\n";
    for (const TrialReport& t : report.trials) {
        out << "trial seed " << t.seed << ": " << t.walk_count << " closed walks, ";
        if (t.no_return) out << "no return, ";
        out << (t.all_walks_contained ? "all contained" : "CONTAINMENT FAILURE")
            << ", statistic " << format_rat(t.statistic) << "\n";
    }
    out << "max statistic: " << format_rat(report.max_statistic) << "\n";
    out << "all contained: " << (report.all_contained ? "yes" : "no") << "\n";
    return out.str();
}

std::string render_text(const DiskCheck& check, const FoliationConeReport& report) {
    std::ostringstream out;
    out << "disks: " << report.rank << ", loops: " << report.loops.size() << "\n";
    if (check.ok) {
        out << "orthant subcone check: pass\n";
    } else {
        const auto& [loop, column] = *check.offending;
        out << "orthant subcone check: FAIL at loop " << loop << ", disk " << column << "\n";
    }
    return out.str();
}

// ---- plane slices -----------------------------------------------------------------------

SlicePlot slice_plot_data(const Cone& cone, const QVec& v1, const QVec& v2) {
    if (static_cast<int>(v1.size()) != cone.rank() || static_cast<int>(v2.size()) != cone.rank())
        fail(ErrorKind::BadRank, "plane vectors must have the cone's rank");
    std::vector<ZVec> rows{primitive(v1), primitive(v2)};
    if (rank_of(rows) < 2) fail(ErrorKind::DegeneratePlane, "plane vectors are dependent");

    std::vector<ZVec> plane_normals;
    for (const ZVec& f : cone.facets()) {
        QVec n{dot(f, v1), dot(f, v2)};
        plane_normals.push_back(primitive(n));
    }
    Cone k = cone_from_inequalities(2, plane_normals);

    SlicePlot plot;
    if (k.is_whole_space()) {
        plot.rows.push_back({"all", "", ""});
        return plot;
    }
    if (k.is_zero()) return plot;

    std::vector<ZVec> dirs;
    if (k.lineality_basis().size() == 1) {
        dirs.push_back(k.lineality_basis()[0]);
        dirs.push_back(scale(Int(-1), k.lineality_basis()[0]));
    } else {
        dirs = k.generators();
    }

    // counterclockwise from the positive s-axis
    auto half = [](const ZVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
    std::sort(dirs.begin(), dirs.end(), [&](const ZVec& a, const ZVec& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Int cross = a[0] * b[1] - a[1] * b[0];
        return cross > 0;
    });

    for (const ZVec& v : dirs)
        plot.rows.push_back({"ray", format_int(v[0]), format_int(v[1])});
    return plot;
}

std::string render_csv(const SlicePlot& plot) {
    std::string out = "kind,s,t\n";
    for (const auto& row : plot.rows) out += row[0] + "," + row[1] + "," + row[2] + "\n";
    return out;
}

} // namespace folcone
