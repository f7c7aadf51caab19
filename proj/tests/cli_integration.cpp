#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>
#include <zinbiel/io.hpp>

#include "fixtures.hpp"

using namespace zinbiel;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    f << text;
}

RunResult run(const std::string& args) {
    static int counter = 0;
    const std::string outf = "cli_stdout_" + std::to_string(counter) + ".txt";
    const std::string errf = "cli_stderr_" + std::to_string(counter) + ".txt";
    ++counter;
    const std::string cmd =
        std::string("\"") + ZB_CLI_PATH + "\" " + args + " > " + outf + " 2> " + errf;
    const int rc = std::system(cmd.c_str());
    RunResult r;
    if (rc != -1 && WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
    r.out = slurp(outf);
    r.err = slurp(errf);
    return r;
}

void write_structure(const std::string& path, const std::string& kind,
                     const decltype(ParsedFile::value)& value) {
    spit(path, emit_structure(ParsedFile{kind, std::nullopt, value}));
}

void prepare() {
    static bool done = false;
    if (done) return;
    done = true;
    Algebra a2 = fixtures::nilpotent2();
    Bimodule reg = regular_bimodule(a2);
    write_structure("a2.json", "algebra", a2);
    write_structure("bad.json", "algebra", fixtures::idempotent1());
    write_structure("ts3.json", "algebra", truncated_shuffle(3));
    write_structure("w3.json", "cochain", random_cocycle(a2, reg, 3, 5));
    write_structure("zinf_strict.json", "zinf", strict_from_crossed(fixtures::crossed_ts3()));
    write_structure("zinf_skel.json", "zinf",
                    skeletal_from_cocycle(a2, reg, random_cocycle(a2, reg, 3, 5)));
    write_structure("zinf_bad.json", "zinf",
                    fixtures::perturb_l3(strict_from_crossed(fixtures::crossed_ts3()), 42));
    write_structure("crossed.json", "crossed", fixtures::crossed_ts3());
    write_structure("ext.json", "extension", fixtures::crossed_ts3());
    write_structure("ext4.json", "extension", fixtures::crossed_ts4());
    write_structure("ainf.json", "ainf", fixtures::rb_ainf());
    write_structure("rbop.json", "rb", fixtures::rb_shift());
    write_structure("dend.json", "dend", dendrify(strict_from_crossed(fixtures::crossed_ts3())));
    write_structure("mor.json", "morphism", AlgebraMorphism{2, 2, Matrix::identity(2)});
    write_structure("t_zero.json", "cochain", Cochain::zero(3, 2, 1));
    spit("garbage.json", "{{{ not json\n");
}

} // namespace

TEST_CASE("checker subcommands pass on valid input") {
    prepare();
    for (const char* cmd :
         {"check zinbiel a2.json", "check zinbiel ts3.json", "check bimodule a2.json regular",
          "check bimodule a2.json zero", "check zinf zinf_strict.json",
          "check crossed crossed.json", "check ainf ainf.json", "check cinf ainf.json",
          "check rb ainf.json rbop.json", "check morphism mor.json a2.json a2.json"}) {
        CAPTURE(cmd);
        RunResult r = run(cmd);
        CHECK(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["pass"] == true);
        CHECK(j["command"].get<std::string>() == std::string(cmd).substr(0, j["command"].get<std::string>().size()));
    }
}

TEST_CASE("checker failure reports the exact violation") {
    prepare();
    RunResult r = run("check zinbiel bad.json");
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK(j["subject"] == "zinbiel");
    REQUIRE(j["conditions"].size() == 1);
    const json& c = j["conditions"][0];
    CHECK(c["id"] == "zinbiel");
    CHECK(c["ok"] == false);
    REQUIRE(c["violations"].size() == 1);
    CHECK(c["violations"][0]["at"] == json::array({0, 0, 0}));
    CHECK(c["violations"][0]["residual"] == json::array({"-1"}));
}

TEST_CASE("bad input gives exit 2 and an error object") {
    prepare();
    for (const char* cmd :
         {"check zinbiel missing_file.json", "check zinbiel garbage.json",
          "check zinbiel rbop.json", "construct shuffle 0", "xi crossed.json",
          "cohomology a2.json regular --degree 4"}) {
        CAPTURE(cmd);
        RunResult r = run(cmd);
        CHECK(r.code == 2);
        json j = json::parse(r.out);
        CHECK(j.contains("error"));
        CHECK_FALSE(j.contains("report"));
    }
    CHECK(run("").code == 2);
    CHECK(run("check").code == 2);
    CHECK(run("no-such-command").code == 2);
}

TEST_CASE("precondition failures carry the failing report") {
    prepare();
    RunResult r = run("cohomology bad.json regular --degree 2");
    CHECK(r.code == 1);
    json j = json::parse(r.out);
    CHECK(j.contains("error"));
    REQUIRE(j.contains("report"));
    CHECK(j["report"]["subject"] == "zinbiel");
    CHECK(j["report"]["pass"] == false);

    RunResult t = run("convert T zinf_bad.json");
    CHECK(t.code == 1);
    json tj = json::parse(t.out);
    CHECK(tj.contains("error"));
    CHECK(tj.contains("report"));
}

TEST_CASE("cohomology dimensions through the CLI") {
    prepare();
    RunResult r2 = run("cohomology a2.json regular --degree 2");
    CHECK(r2.code == 0);
    json j2 = json::parse(r2.out);
    CHECK(j2["cochain_dim"] == 8);
    CHECK(j2["cocycles"] == 3);
    CHECK(j2["coboundaries"] == 2);
    CHECK(j2["h_dim"] == 1);
    CHECK(j2["algebra_dim"] == 2);
    CHECK(j2["module_dim"] == 2);

    json j3 = json::parse(run("cohomology a2.json regular --degree 3").out);
    CHECK(j3["cocycles"] == 6);
    CHECK(j3["coboundaries"] == 5);
    CHECK(j3["h_dim"] == 1);

    json jz = json::parse(run("cohomology a2.json zero --degree 3").out);
    CHECK(jz["cocycles"] == 6);
    CHECK(jz["coboundaries"] == 4);
    CHECK(jz["h_dim"] == 2);
}

TEST_CASE("construct matches the library exactly") {
    prepare();
    CHECK(run("construct shuffle 4").out ==
          emit_structure(ParsedFile{"algebra", std::nullopt, truncated_shuffle(4)}));
    CHECK(run("construct regular-bimodule a2.json").out ==
          emit_structure(
              ParsedFile{"bimodule", std::nullopt, regular_bimodule(fixtures::nilpotent2())}));

    Algebra a2 = fixtures::nilpotent2();
    Bimodule reg = regular_bimodule(a2);
    RunResult rc = run("construct random-cocycle a2.json regular --degree 3 --seed 5");
    CHECK(rc.code == 0);
    ParsedFile pw = parse_structure_text(rc.out, "cli");
    CHECK(pw.kind == "cochain");
    REQUIRE(pw.seed.has_value());
    CHECK(*pw.seed == 5);
    CHECK(std::get<Cochain>(pw.value) == random_cocycle(a2, reg, 3, 5));

    RunResult sk = run("construct skeletal a2.json regular w3.json");
    CHECK(sk.code == 0);
    CHECK(std::get<TwoTermZinf>(parse_structure_text(sk.out, "cli").value) ==
          skeletal_from_cocycle(a2, reg, random_cocycle(a2, reg, 3, 5)));

    RunResult st = run("construct strict crossed.json");
    CHECK(st.code == 0);
    CHECK(std::get<TwoTermZinf>(parse_structure_text(st.out, "cli").value) ==
          strict_from_crossed(fixtures::crossed_ts3()));
}

TEST_CASE("convert matches the library exactly") {
    prepare();
    CHECK(std::get<Algebra>(parse_structure_text(run("convert symmetrize ts3.json").out, "cli")
                                .value) == symmetrize(truncated_shuffle(3)));

    TwoTermZinf strict = strict_from_crossed(fixtures::crossed_ts3());
    CHECK(std::get<TwoTermAinf>(
              parse_structure_text(run("convert symmetrize zinf_strict.json").out, "cli").value) ==
          symmetrize_zinf(strict));
    CHECK(std::get<TwoTermDend>(
              parse_structure_text(run("convert dendrify zinf_strict.json").out, "cli").value) ==
          dendrify(strict));
    CHECK(std::get<TwoTermAinf>(
              parse_structure_text(run("convert totalize dend.json").out, "cli").value) ==
          totalize(dendrify(strict)));
    CHECK(std::get<TwoTermZinf>(
              parse_structure_text(run("convert rb-zinf ainf.json rbop.json").out, "cli").value) ==
          zinf_from_rb(fixtures::rb_ainf(), fixtures::rb_shift()));
}

TEST_CASE("categorical round trip through the CLI") {
    prepare();
    RunResult t = run("convert T zinf_skel.json");
    CHECK(t.code == 0);
    CHECK(t.out == slurp("zinf_skel.json"));
    RunResult s = run("convert S zinf_skel.json");
    CHECK(s.code == 0);
    CHECK(s.out == slurp("zinf_skel.json"));
    CHECK(run("convert S zinf_strict.json").out == slurp("zinf_strict.json"));
}

TEST_CASE("obstruction class workflow") {
    prepare();
    RunResult piv = run("xi ext.json");
    CHECK(piv.code == 0);
    json j = json::parse(piv.out);
    CHECK(j["sections"] == "pivot");
    CHECK(j["class_is_zero"] == false);
    CHECK(j["h_dim"] == 1);
    CHECK(j["algebra_dim"] == 2);
    CHECK(j["module_dim"] == 1);
    CHECK(j["representative"]["kind"] == "cochain");
    spit("rep_pivot.json", j["representative"].dump(2) + "\n");

    RunResult shf = run("xi ext.json --sections shifted");
    CHECK(shf.code == 0);
    json js = json::parse(shf.out);
    CHECK(js["class_is_zero"] == false);
    spit("rep_shifted.json", js["representative"].dump(2) + "\n");

    RunResult same = run("same-class ext.json rep_pivot.json rep_shifted.json");
    CHECK(same.code == 0);
    CHECK(json::parse(same.out)["same_class"] == true);

    RunResult diff = run("same-class ext.json rep_pivot.json t_zero.json");
    CHECK(diff.code == 1);
    CHECK(json::parse(diff.out)["same_class"] == false);

    // the split fixture reads as the zero class under both strategies
    CHECK(json::parse(run("xi ext4.json").out)["class_is_zero"] == true);
    CHECK(json::parse(run("xi ext4.json --sections shifted").out)["class_is_zero"] == true);
}

TEST_CASE("out files match stdout and reruns are byte-identical") {
    prepare();
    RunResult direct = run("check zinf zinf_strict.json");
    RunResult filed = run("check zinf zinf_strict.json --out o1.json");
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp("o1.json") == direct.out);

    for (const char* cmd :
         {"check zinf zinf_strict.json", "cohomology ts3.json regular --degree 3",
          "construct random-cocycle ts3.json regular --degree 3 --seed 11", "xi ext.json",
          "xi ext4.json --sections shifted", "convert symmetrize zinf_strict.json",
          "same-class ext.json rep_pivot.json rep_shifted.json", "construct shuffle 6",
          "check rb ainf.json rbop.json"}) {
        CAPTURE(cmd);
        RunResult first = run(cmd);
        RunResult second = run(cmd);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}

TEST_CASE("emitted files parse back to the same canonical bytes") {
    prepare();
    for (const char* f : {"a2.json", "ts3.json", "w3.json", "zinf_strict.json", "crossed.json",
                          "ext.json", "ainf.json", "rbop.json", "dend.json", "mor.json"}) {
        CAPTURE(f);
        std::string text = slurp(f);
        CHECK(emit_structure(parse_structure(f)) == text);
    }
}
