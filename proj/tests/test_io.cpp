#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "folcone/foliation.hpp"
#include "folcone/io.hpp"
#include "folcone/orbit.hpp"

using namespace folcone;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(FOLCONE_FIXTURE_DIR) + "/" + name;
}

MarkovSystem fixture(const std::string& name) {
    return validate_system(parse_system_file(fixture_path(name)));
}

ErrorKind kind_of_parse(const std::string& text) {
    try {
        (void)parse_system_text(text);
        FAIL("expected a parse failure");
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::IoError; // unreachable
}

std::string message_of_parse(const std::string& text) {
    try {
        (void)parse_system_text(text);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("system documents parse with names, letters, and labels intact") {
    SystemDocument doc = parse_system_text(
        R"({"name": "demo", "rank": 2, "letters": ["a", "b"],
            "transitions": [{"from": "a", "to": "b", "class": [3, -4]}]})");
    CHECK(doc.name == "demo");
    CHECK(doc.rank == 2);
    CHECK(doc.letters == std::vector<std::string>{"a", "b"});
    REQUIRE(doc.transitions.size() == 1);
    CHECK(doc.transitions[0].from == "a");
    CHECK(doc.transitions[0].to == "b");
    CHECK(doc.transitions[0].label == ZVec{3, -4});
}

TEST_CASE("file parsing falls back to the file stem for the name") {
    std::string path = "/tmp/folcone_stem_test.json";
    {
        std::ofstream out(path);
        out << R"({"rank": 1, "letters": ["a"], "transitions": []})";
    }
    CHECK(parse_system_file(path).name == "folcone_stem_test");
    CHECK(parse_system_file(fixture_path("gm.json")).name == "gm"); // explicit name wins

    CHECK_THROWS_AS((void)parse_system_file("/tmp/does_not_exist_folcone.json"), Error);
}

TEST_CASE("malformed JSON reports line and column") {
    CHECK(kind_of_parse("{\"rank\": 2,,}") == ErrorKind::SyntaxError);
    CHECK(kind_of_parse("") == ErrorKind::SyntaxError);
    std::string msg = message_of_parse("{\n  \"rank\": 2,,\n}");
    CHECK(msg.find("line 2") != std::string::npos);

    try {
        (void)parse_system_file(fixture_path("malformed.json"));
        FAIL("expected SyntaxError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(e.error_class() == ErrorClass::Io);
    }
}

TEST_CASE("well-formed documents with bad shapes name the offending field") {
    CHECK(kind_of_parse(R"({"letters": [], "transitions": []})") == ErrorKind::SchemaError);
    CHECK(message_of_parse(R"({"letters": [], "transitions": []})").find("rank") !=
          std::string::npos);

    std::string wrong_len = R"({"rank": 2, "letters": ["a", "b"], "transitions": [
        {"from": "a", "to": "a", "class": [1, 0]},
        {"from": "a", "to": "b", "class": [1]}]})";
    CHECK(kind_of_parse(wrong_len) == ErrorKind::SchemaError);
    CHECK(message_of_parse(wrong_len).find("transitions[1].class") != std::string::npos);

    CHECK(kind_of_parse(R"([1, 2])") == ErrorKind::SchemaError);
    CHECK(kind_of_parse(R"({"rank": 2, "letters": ["a"], "transitions": [], "bogus": 1})") ==
          ErrorKind::SchemaError);
    CHECK(kind_of_parse(R"({"rank": "two", "letters": [], "transitions": []})") ==
          ErrorKind::SchemaError);
    CHECK(kind_of_parse(R"({"rank": 1, "letters": [3], "transitions": []})") ==
          ErrorKind::SchemaError);
    CHECK(kind_of_parse(R"({"rank": 1, "letters": ["a"], "transitions": [{"from": "a"}]})") ==
          ErrorKind::SchemaError);
    CHECK(kind_of_parse(
              R"({"rank": 1, "letters": ["a"],
                  "transitions": [{"from": "a", "to": "a", "class": [1], "extra": 0}]})") ==
          ErrorKind::SchemaError);
}

TEST_CASE("rationals survive the string codec") {
    CHECK(format_rat(make_rat(3, 4)) == "3/4");
    CHECK(format_rat(make_rat(-8, 2)) == "-4");
    CHECK(format_rat(Rat(0)) == "0");
    CHECK(parse_rat("22/7") == make_rat(22, 7));
    CHECK(parse_rat("-5") == Rat(-5));
    CHECK(parse_rat("4/6") == make_rat(2, 3)); // canonicalized on entry
    CHECK_THROWS_AS((void)parse_rat("x"), Error);
    CHECK_THROWS_AS((void)parse_rat("1/0"), Error);
    CHECK_THROWS_AS((void)parse_rat(""), Error);
}

TEST_CASE("foliation reports round-trip field for field") {
    for (const char* name : {"gm.json", "product.json", "self_loop.json", "three_cycle.json"}) {
        FoliationConeReport report = foliation_cone(fixture(name));
        std::string once = render_json(report);
        FoliationConeReport back = parse_foliation_report(once);
        CHECK(back == report);
        CHECK(render_json(back) == once); // determinism, byte for byte
    }
    CHECK_THROWS_AS((void)parse_foliation_report(R"({"type": "other"})"), Error);
    CHECK_THROWS_AS((void)parse_foliation_report("nonsense"), Error);
}

TEST_CASE("ray classifications round-trip with every certificate shape") {
    FoliationConeReport gm = foliation_cone(fixture("gm.json"));
    FoliationConeReport prod = foliation_cone(fixture("product.json"));

    for (const QVec& ray :
         {QVec{2, 2}, QVec{1, -1}, QVec{-1, 0}, QVec{make_rat(1, 3), make_rat(-2, 7)}}) {
        RayClassification cls = classify_ray(gm, ray);
        CHECK(parse_ray_classification(render_json(cls)) == cls);
    }
    RayClassification degenerate = classify_ray(prod, {0, 0});
    CHECK(parse_ray_classification(render_json(degenerate)) == degenerate);
}

TEST_CASE("family reports round-trip including certificates") {
    ConeFamilyReport fam =
        family_report({fixture("gm.json"), fixture("gm_negated.json"), fixture("quadrant.json")});
    CHECK(fam.any_violation);
    std::string text = render_json(fam);
    ConeFamilyReport back = parse_family_report(text);
    CHECK(back == fam);
    CHECK(render_json(back) == text);
}

TEST_CASE("convergence reports round-trip exactly") {
    SimulationConfig config;
    config.steps = 256;
    config.trials = 2;
    config.seed = 11;
    config.window = 4;
    MarkovSystem gm = fixture("gm.json");
    ConvergenceReport report = convergence_report(gm, homology_cone(gm), config);
    std::string text = render_json(report);
    ConvergenceReport back = parse_convergence_report(text);
    CHECK(back == report);
    CHECK(render_json(back) == text);
}

TEST_CASE("disk check rendering names the offending pairing") {
    FoliationConeReport gm = foliation_cone(fixture("gm.json"));
    DiskCheck ok = verify_disk_subcone(gm, standard_disk_basis(gm));
    CHECK(render_text(ok, gm).find("pass") != std::string::npos);
    CHECK(render_json(ok, gm).find("\"ok\": true") != std::string::npos);

    SystemDocument doc;
    doc.rank = 2;
    doc.letters = {"a"};
    doc.transitions = {{"a", "a", {1, -2}}};
    FoliationConeReport skew = foliation_cone(validate_system(doc));
    DiskCheck bad = verify_disk_subcone(skew, standard_disk_basis(skew));
    CHECK(render_text(bad, skew).find("FAIL") != std::string::npos);
    CHECK(render_json(bad, skew).find("offending") != std::string::npos);
}

TEST_CASE("text rendering mentions the headline facts") {
    FoliationConeReport gm = foliation_cone(fixture("gm.json"));
    std::string text = render_text(gm);
    CHECK(text.find("system: gm") != std::string::npos);
    CHECK(text.find("(1, -1)") != std::string::npos);
    CHECK(text.find("foliation cone") != std::string::npos);

    RayClassification cls = classify_ray(gm, {1, -1});
    CHECK(render_text(cls).find("BoundaryRay") != std::string::npos);
}

TEST_CASE("plane slices list boundary rays counterclockwise") {
    FoliationConeReport gm = foliation_cone(fixture("gm.json"));
    SlicePlot plot = slice_plot_data(gm.foliation_cone, {1, 0}, {0, 1});
    REQUIRE(plot.rows.size() == 2);
    CHECK(plot.rows[0] == std::array<std::string, 3>{"ray", "0", "1"});
    CHECK(plot.rows[1] == std::array<std::string, 3>{"ray", "1", "-1"});
    CHECK(render_csv(plot) == "kind,s,t\nray,0,1\nray,1,-1\n");

    // a plane meeting the octant in a single ray
    Cone octant = cone_from_generators(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    SlicePlot edge = slice_plot_data(octant, {1, 0, 0}, {0, 1, -1});
    REQUIRE(edge.rows.size() == 1);
    CHECK(edge.rows[0] == std::array<std::string, 3>{"ray", "1", "0"});
}

TEST_CASE("slices handle degenerate cones and planes") {
    Cone zero = cone_from_generators(2, {});
    CHECK(slice_plot_data(zero, {1, 0}, {0, 1}).rows.empty());

    Cone whole = cone_from_inequalities(2, {});
    SlicePlot all = slice_plot_data(whole, {1, 0}, {0, 1});
    REQUIRE(all.rows.size() == 1);
    CHECK(all.rows[0][0] == "all");

    Cone half3 = cone_from_inequalities(3, {{1, 0, 0}});
    SlicePlot half = slice_plot_data(half3, {1, 0, 0}, {0, 1, 0});
    REQUIRE(half.rows.size() == 2); // the boundary line of a half-plane
    CHECK(half.rows[0] == std::array<std::string, 3>{"ray", "0", "1"});
    CHECK(half.rows[1] == std::array<std::string, 3>{"ray", "0", "-1"});

    CHECK_THROWS_AS((void)slice_plot_data(whole, {1, 0}, {2, 0}), Error);
    CHECK_THROWS_AS((void)slice_plot_data(whole, {1, 0, 0}, {0, 1, 0}), Error);
}
