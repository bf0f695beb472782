#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "folcone/io.hpp"
#include "folcone/markov.hpp"
#include "oracles.hpp"

using namespace folcone;

namespace {

MarkovSystem fixture(const std::string& name) {
    return validate_system(parse_system_file(std::string(FOLCONE_FIXTURE_DIR) + "/" + name));
}

SystemDocument gm_doc() {
    SystemDocument doc;
    doc.rank = 2;
    doc.letters = {"a", "b"};
    doc.transitions = {{"a", "a", {1, 0}}, {"a", "b", {0, 1}}, {"b", "a", {1, 0}}};
    return doc;
}

} // namespace

TEST_CASE("validation accepts the two-letter example and exposes its shape") {
    MarkovSystem sys = validate_system(gm_doc());
    CHECK(sys.rank() == 2);
    CHECK(sys.letter_count() == 2);
    CHECK(sys.has_transition(0, 0));
    CHECK(sys.has_transition(0, 1));
    CHECK(sys.has_transition(1, 0));
    CHECK_FALSE(sys.has_transition(1, 1));
    CHECK(sys.label(0, 1) == ZVec{0, 1});
    CHECK_FALSE(sys.product_type());
    CHECK_THROWS_AS((void)sys.label(1, 1), Error);
}

TEST_CASE("validation rejects malformed documents with the right kinds") {
    auto kind_of = [](const SystemDocument& doc) {
        try {
            validate_system(doc);
            return std::optional<ErrorKind>();
        } catch (const Error& e) {
            return std::optional<ErrorKind>(e.kind());
        }
    };

    SystemDocument doc = gm_doc();
    doc.letters.push_back("a");
    CHECK(kind_of(doc) == ErrorKind::DuplicateLetter);

    doc = gm_doc();
    doc.rank = 0;
    CHECK(kind_of(doc) == ErrorKind::BadRank);

    doc = gm_doc();
    doc.transitions[1].to = "zz";
    CHECK(kind_of(doc) == ErrorKind::DanglingTransition);

    doc = gm_doc();
    doc.transitions.push_back({"a", "a", {3, 3}});
    CHECK(kind_of(doc) == ErrorKind::DanglingTransition); // duplicate edge

    doc = gm_doc();
    doc.transitions[0].label = {7};
    CHECK(kind_of(doc) == ErrorKind::BadRank);

    doc = gm_doc();
    doc.transitions[0].label = {0, 0}; // self-loop at a of class zero
    CHECK(kind_of(doc) == ErrorKind::ZeroClassLoop);

    doc = gm_doc();
    doc.letters = {};
    doc.transitions = {};
    CHECK(kind_of(doc) == std::nullopt); // empty system: trivially product type
    CHECK(validate_system(doc).product_type());
}

TEST_CASE("zero-class detection sees composite circuits, not just edges") {
    SystemDocument doc;
    doc.rank = 2;
    doc.letters = {"a", "b"};
    // both edges are nonzero but the circuit (a, b) sums to zero
    doc.transitions = {{"a", "b", {1, 1}}, {"b", "a", {-1, -1}}};
    CHECK_THROWS_AS(validate_system(doc), Error);
}

TEST_CASE("canonical rotation picks the least rotation and survives rotation") {
    PeriodicString p{{1, 0}};
    CHECK(canonical_rotation(p).word == std::vector<int>{0, 1});
    PeriodicString q{{2, 0, 1, 0}};
    CHECK(canonical_rotation(q).word == std::vector<int>{0, 1, 0, 2});
    PeriodicString r{{1, 1, 1}};
    CHECK(canonical_rotation(r).word == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(canonical_rotation(PeriodicString{}), Error);

    // rotation invariance on a word with repeated letters
    std::vector<int> w{0, 1, 0, 0, 1};
    PeriodicString base{w};
    for (std::size_t s = 1; s < w.size(); ++s) {
        std::vector<int> rot(w.begin() + s, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + s);
        CHECK(canonical_rotation(PeriodicString{rot}) == canonical_rotation(base));
    }
}

TEST_CASE("class of a word includes the wrap-around step") {
    MarkovSystem sys = validate_system(gm_doc());
    CHECK(class_of(sys, PeriodicString{{0}}) == ZVec{1, 0});
    CHECK(class_of(sys, PeriodicString{{0, 1}}) == ZVec{1, 1});
    CHECK(class_of(sys, PeriodicString{{0, 0, 1}}) == ZVec{2, 1});
    CHECK_THROWS_AS(class_of(sys, PeriodicString{{1, 1}}), Error);
    CHECK_THROWS_AS(class_of(sys, PeriodicString{}), Error);
}

TEST_CASE("minimal loops of the two-letter example are pinned") {
    MarkovSystem sys = validate_system(gm_doc());
    std::vector<MinimalLoop> loops = minimal_loops(sys);
    REQUIRE(loops.size() == 2);
    CHECK(loops[0].word.word == std::vector<int>{0});
    CHECK(loops[0].cls == ZVec{1, 0});
    CHECK(loops[1].word.word == std::vector<int>{0, 1});
    CHECK(loops[1].cls == ZVec{1, 1});
}

TEST_CASE("minimal loops of the three-cycle fixture are pinned") {
    MarkovSystem sys = fixture("three_cycle.json");
    std::vector<MinimalLoop> loops = minimal_loops(sys);
    REQUIRE(loops.size() == 2);
    CHECK(loops[0].word.word == std::vector<int>{0});
    CHECK(loops[0].cls == ZVec{1, 0, 0});
    CHECK(loops[1].word.word == std::vector<int>{0, 1, 2});
    CHECK(loops[1].cls == ZVec{1, 1, 1});
}

TEST_CASE("product fixture has no loops at all") {
    MarkovSystem sys = fixture("product.json");
    CHECK(sys.product_type());
    CHECK(minimal_loops(sys).empty());
    CHECK(enumerate_periodic_strings(sys, 6).empty());
}

TEST_CASE("minimal loops agree with the injective-path search on random systems") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        MarkovSystem sys = testing::random_system(seed);
        CHECK(minimal_loops(sys) == testing::loops_by_injective_search(sys));
    }
}

TEST_CASE("periodic string enumeration is canonical, admissible, and complete") {
    MarkovSystem sys = validate_system(gm_doc());

    std::vector<PeriodicString> strings = enumerate_periodic_strings(sys, 3);
    std::vector<std::vector<int>> expected{{0}, {0, 0}, {0, 0, 0}, {0, 0, 1}, {0, 1}};
    REQUIRE(strings.size() == expected.size());
    for (std::size_t i = 0; i < strings.size(); ++i) CHECK(strings[i].word == expected[i]);

    for (const PeriodicString& p : enumerate_periodic_strings(sys, 7)) {
        CHECK(canonical_rotation(p) == p);
        CHECK_NOTHROW((void)class_of(sys, p));
    }

    // completeness at length 4: every admissible 4-word's rotation is listed
    std::set<PeriodicString> listed;
    for (const PeriodicString& p : enumerate_periodic_strings(sys, 4))
        if (p.length() == 4) listed.insert(p);
    std::set<PeriodicString> direct;
    for (int w = 0; w < 16; ++w) {
        std::vector<int> word{(w >> 3) & 1, (w >> 2) & 1, (w >> 1) & 1, w & 1};
        bool admissible = true;
        for (int i = 0; i < 4; ++i) admissible = admissible && sys.has_transition(word[i], word[(i + 1) % 4]);
        if (admissible) direct.insert(canonical_rotation(PeriodicString{word}));
    }
    CHECK(listed == direct);
}

TEST_CASE("enumeration budget cuts off deterministically") {
    MarkovSystem sys = validate_system(gm_doc());
    CHECK_THROWS_AS((void)enumerate_periodic_strings(sys, 12, 3), Error);
    try {
        (void)enumerate_periodic_strings(sys, 12, 3);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}

TEST_CASE("decomposition splits pinned words as expected") {
    MarkovSystem sys = validate_system(gm_doc());

    auto parts = decompose_into_minimal_loops(sys, PeriodicString{{0, 0, 1}});
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].first.word.word == std::vector<int>{0});
    CHECK(parts[0].second == 1);
    CHECK(parts[1].first.word.word == std::vector<int>{0, 1});
    CHECK(parts[1].second == 1);

    parts = decompose_into_minimal_loops(sys, PeriodicString{{0, 1, 0, 1}});
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first.word.word == std::vector<int>{0, 1});
    CHECK(parts[0].second == 2);
}

TEST_CASE("decomposition conserves class and length on every short word") {
    for (std::uint64_t seed : {std::uint64_t(0), std::uint64_t(7), std::uint64_t(19)}) {
        MarkovSystem sys = seed == 0 ? validate_system(gm_doc()) : testing::random_system(seed);
        std::vector<MinimalLoop> loops = minimal_loops(sys);
        for (const PeriodicString& p : enumerate_periodic_strings(sys, 8)) {
            ZVec total(sys.rank(), Int(0));
            long len = 0;
            for (const auto& [loop, mult] : decompose_into_minimal_loops(sys, p)) {
                CHECK(mult > 0);
                CHECK(std::find(loops.begin(), loops.end(), loop) != loops.end());
                add_into(total, scale(Int(mult), loop.cls));
                len += mult * static_cast<long>(loop.word.length());
            }
            CHECK(total == class_of(sys, p));
            CHECK(len == static_cast<long>(p.length()));
        }
    }
}

TEST_CASE("decomposition multiplicities are confirmed by bounded search") {
    MarkovSystem sys = validate_system(gm_doc());
    std::vector<MinimalLoop> loops = minimal_loops(sys);
    for (const PeriodicString& p : enumerate_periodic_strings(sys, 8)) {
        CHECK(testing::decomposition_exists(loops, class_of(sys, p),
                                            static_cast<long>(p.length()), 8));
    }
}

TEST_CASE("word rendering uses letter names") {
    MarkovSystem sys = validate_system(gm_doc());
    CHECK(sys.render_word(PeriodicString{{0, 1}}) == "(a, b)");
    CHECK(sys.render_word(PeriodicString{{0}}) == "(a)");
}
