#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <string>
#include <variant>

#include <zinbiel/errors.hpp>
#include <zinbiel/io.hpp>

#include "fixtures.hpp"

using namespace zinbiel;

namespace {

void expect_io_error(const std::string& text, const std::string& needle) {
    try {
        parse_structure_text(text, "test");
        FAIL_CHECK("no exception for: " << text);
    } catch (const io_error& e) {
        std::string what = e.what();
        CAPTURE(what);
        CAPTURE(needle);
        CHECK(what.find(needle) != std::string::npos);
    }
}

template <typename T>
void roundtrip(const std::string& kind, const T& value) {
    ParsedFile f{kind, std::nullopt, value};
    std::string text = emit_structure(f);
    ParsedFile back = parse_structure_text(text, "test");
    CHECK(back.kind == kind);
    CHECK_FALSE(back.seed.has_value());
    REQUIRE(std::holds_alternative<T>(back.value));
    CHECK(std::get<T>(back.value) == value);
    // canonical form is a fixed point
    CHECK(emit_structure(back) == text);
}

} // namespace

TEST_CASE("round trips for every kind") {
    roundtrip<Algebra>("algebra", truncated_shuffle(3));
    roundtrip<Algebra>("algebra", fixtures::nilpotent2()); // no labels
    {
        Algebra a = fixtures::nilpotent2();
        roundtrip<Bimodule>("bimodule", regular_bimodule(a));
        roundtrip<Bimodule>("bimodule", Bimodule::zero(2, 3));
        Bimodule v = regular_bimodule(a);
        roundtrip<TwoTermZinf>("zinf", skeletal_from_cocycle(a, v, random_cocycle(a, v, 3, 5)));
        Cochain w = random_cocycle(a, v, 2, 9);
        roundtrip<Cochain>("cochain", w);
    }
    roundtrip<TwoTermZinf>("zinf", strict_from_crossed(fixtures::crossed_ts3()));

    AlgebraMorphism m{2, 3, Matrix(3, 2)};
    m.matrix.at(0, 0) = frac(-7, 3);
    m.matrix.at(2, 1) = 4;
    roundtrip<AlgebraMorphism>("morphism", m);

    roundtrip<CrossedModule>("crossed", fixtures::crossed_ts4());
    roundtrip<CrossedModule>("extension", fixtures::crossed_ts4());

    roundtrip<TwoTermAinf>("ainf", fixtures::rb_ainf());
    roundtrip<TwoTermDend>("dend", dendrify(strict_from_crossed(fixtures::crossed_ts3())));
    roundtrip<RotaBaxter2>("rb", fixtures::rb_shift());
}

TEST_CASE("seed survives the round trip") {
    ParsedFile f{"algebra", 12345u, fixtures::nilpotent2()};
    ParsedFile back = parse_structure_text(emit_structure(f), "test");
    REQUIRE(back.seed.has_value());
    CHECK(*back.seed == 12345u);
    CHECK(emit_structure(back) == emit_structure(f));
}

TEST_CASE("emission is canonical") {
    // scrambled key order and redundant zeros normalize away
    std::string messy = R"({"product": [{"v": "0/5", "i": [1, 1, 1]}, {"v": "1", "i": [0, 0, 1]}],
                            "dim": 2, "kind": "algebra"})";
    ParsedFile f = parse_structure_text(messy, "test");
    std::string canon = emit_structure(f);
    CHECK(canon == emit_structure(parse_structure_text(canon, "test")));
    REQUIRE(std::holds_alternative<Algebra>(f.value));
    CHECK(std::get<Algebra>(f.value) == fixtures::nilpotent2());
    CHECK(canon.find("0/5") == std::string::npos);
    CHECK(canon.back() == '\n');
}

TEST_CASE("file io") {
    const std::string path = "io_scratch.json";
    {
        std::ofstream out(path, std::ios::binary);
        out << emit_structure(ParsedFile{"rb", std::nullopt, fixtures::rb_shift()});
    }
    ParsedFile f = parse_structure(path);
    CHECK(f.kind == "rb");
    CHECK(std::get<RotaBaxter2>(f.value) == fixtures::rb_shift());

    CHECK_THROWS_AS(parse_structure("definitely_missing_file.json"), io_error);
}

TEST_CASE("rejects malformed documents") {
    expect_io_error("not json at all", "test");
    expect_io_error(R"([1, 2, 3])", "object");
    expect_io_error(R"({"dim": 1, "product": []})", "kind");
    expect_io_error(R"({"kind": "nonsense", "dim": 1})", "nonsense");
    expect_io_error(R"({"kind": "algebra", "dim": 1, "product": [], "extra": 0})", "extra");
    expect_io_error(R"({"kind": "algebra", "product": []})", "dim");
    expect_io_error(R"({"kind": "algebra", "dim": -2, "product": []})", "dim");
    expect_io_error(R"({"kind": "algebra", "dim": 1.5, "product": []})", "dim");
}

TEST_CASE("rejects malformed entries") {
    // index out of range
    expect_io_error(
        R"({"kind": "algebra", "dim": 2, "product": [{"i": [0, 0, 2], "v": "1"}]})",
        "out of range");
    // wrong arity
    expect_io_error(R"({"kind": "algebra", "dim": 2, "product": [{"i": [0, 0], "v": "1"}]})",
                    "i");
    // duplicate cell
    expect_io_error(R"({"kind": "algebra", "dim": 2,
                        "product": [{"i": [0, 0, 1], "v": "1"}, {"i": [0, 0, 1], "v": "2"}]})",
                    "duplicate");
    // malformed rationals
    expect_io_error(R"({"kind": "algebra", "dim": 2, "product": [{"i": [0, 0, 1], "v": "1/0"}]})",
                    "malformed rational");
    expect_io_error(R"({"kind": "algebra", "dim": 2, "product": [{"i": [0, 0, 1], "v": "ten"}]})",
                    "malformed rational");
    expect_io_error(R"({"kind": "algebra", "dim": 2, "product": [{"i": [0, 0, 1], "v": 1}]})",
                    "v");
    // entry with an unknown key
    expect_io_error(
        R"({"kind": "algebra", "dim": 2, "product": [{"i": [0, 0, 1], "v": "1", "w": "1"}]})",
        "w");
}

TEST_CASE("rejects structural mistakes per kind") {
    expect_io_error(R"({"kind": "algebra", "dim": 2, "labels": ["x1"], "product": []})",
                    "labels");
    expect_io_error(R"({"kind": "cochain", "degree": 5, "algebra_dim": 1, "module_dim": 1,
                        "entries": []})",
                    "degree");
    expect_io_error(R"({"kind": "cochain", "degree": 0, "algebra_dim": 1, "module_dim": 1,
                        "entries": []})",
                    "degree");
    expect_io_error(R"({"kind": "morphism", "source_dim": 2, "target_dim": 2,
                        "matrix": [{"i": [2, 0], "v": "1"}]})",
                    "out of range");
    expect_io_error(R"({"kind": "algebra", "dim": 2, "product": [], "seed": -1})", "seed");
}

TEST_CASE("nested documents validate their inner paths") {
    expect_io_error(R"({"kind": "crossed",
                        "g": {"dim": 1, "product": []},
                        "h": {"dim": 1, "product": [{"i": [0, 0, 5], "v": "1"}]},
                        "phi": [], "left": [], "right": []})",
                    "h.product");
    expect_io_error(R"({"kind": "extension",
                        "crossed": {"g": {"dim": 1, "product": []},
                                    "h": {"dim": 1, "product": []},
                                    "phi": [], "left": [], "right": [],
                                    "spurious": 3}})",
                    "spurious");
}
