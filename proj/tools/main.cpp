#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/algebra.hpp"
#include "zinbiel/cohomology.hpp"
#include "zinbiel/dendriform.hpp"
#include "zinbiel/errors.hpp"
#include "zinbiel/extension.hpp"
#include "zinbiel/io.hpp"
#include "zinbiel/rational.hpp"
#include "zinbiel/report.hpp"
#include "zinbiel/two_vect.hpp"
#include "zinbiel/zinf.hpp"

namespace {

using nlohmann::json;
using namespace zinbiel;

struct Outcome {
    std::string text;
    int code = 0;
};

json report_json(const CheckReport& r) {
    json j;
    j["subject"] = r.subject;
    j["pass"] = r.pass();
    json conds = json::array();
    for (const auto& c : r.conditions) {
        json cj;
        cj["id"] = c.id;
        cj["informational"] = c.informational;
        cj["ok"] = c.ok();
        json viols = json::array();
        for (const auto& v : c.violations) {
            json vj;
            vj["at"] = v.at;
            json res = json::array();
            for (const auto& x : v.residual) res.push_back(to_string(x));
            vj["residual"] = std::move(res);
            viols.push_back(std::move(vj));
        }
        cj["violations"] = std::move(viols);
        conds.push_back(std::move(cj));
    }
    j["conditions"] = std::move(conds);
    return j;
}

Outcome check_outcome(std::string command, std::vector<std::string> inputs,
                      const CheckReport& r) {
    json j = report_json(r);
    j["command"] = std::move(command);
    j["inputs"] = std::move(inputs);
    return {j.dump(2) + "\n", r.pass() ? 0 : 1};
}

Outcome structure_outcome(const ParsedFile& f) { return {emit_structure(f), 0}; }

template <class T>
T expect_kind(const char* kind, const std::string& path) {
    ParsedFile f = parse_structure(path);
    if (f.kind != kind)
        throw io_error(path + ": expected kind '" + std::string(kind) + "', got '" + f.kind +
                       "'");
    return std::get<T>(std::move(f.value));
}

/* Literal "regular" (the algebra acting on itself) and "zero" (trivial
 * actions on a module of the same dimension) stand in for a file path. */
Bimodule bimodule_arg(const Algebra& a, const std::string& arg) {
    if (arg == "regular") return regular_bimodule(a);
    if (arg == "zero") return Bimodule::zero(a.dim, a.dim);
    Bimodule v = expect_kind<Bimodule>("bimodule", arg);
    if (v.alg_dim != a.dim) throw io_error(arg + ": algebra_dim does not match the algebra");
    return v;
}

json cochain_file_json(const Cochain& w) {
    const ParsedFile f{"cochain", std::nullopt, w};
    return json::parse(emit_structure(f));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for Zinbiel algebras: structure checkers, bimodule "
                 "cohomology, two-term homotopy structures, crossed modules, extension "
                 "classes, and the dendriform/associative bridges."};
    app.require_subcommand(1);

    std::string arg1, arg2, arg3;
    std::string out_path;
    std::string sections = "pivot";
    std::size_t degree = 2;
    std::uint64_t seed = 0;
    int shuffle_n = 0;
    std::function<Outcome()> action;

    const char* out_help = "write the output document to this file instead of stdout";

    CLI::App* check = app.add_subcommand("check", "run a structure checker and report violations");
    check->require_subcommand(1);
    {
        CLI::App* s = check->add_subcommand("zinbiel", "right-commutative identity on an algebra");
        s->add_option("file", arg1, "algebra file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const Algebra a = expect_kind<Algebra>("algebra", arg1);
                return check_outcome("check zinbiel", {arg1}, check_zinbiel(a));
            };
        });
    }
    {
        CLI::App* s = check->add_subcommand("bimodule", "two-sided action equations");
        s->add_option("algebra", arg1, "algebra file")->required();
        s->add_option("bimodule", arg2, "bimodule file, or 'regular'/'zero'")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const Algebra a = expect_kind<Algebra>("algebra", arg1);
                const Bimodule v = bimodule_arg(a, arg2);
                return check_outcome("check bimodule", {arg1, arg2}, check_bimodule(a, v));
            };
        });
    }
    {
        CLI::App* s = check->add_subcommand("zinf", "two-term homotopy Zinbiel axioms");
        s->add_option("file", arg1, "zinf file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const TwoTermZinf L = expect_kind<TwoTermZinf>("zinf", arg1);
                return check_outcome("check zinf", {arg1}, check_zinf(L));
            };
        });
    }
    {
        CLI::App* s = check->add_subcommand("morphism", "algebra morphism compatibility");
        s->add_option("morphism", arg1, "morphism file")->required();
        s->add_option("source", arg2, "source algebra file")->required();
        s->add_option("target", arg3, "target algebra file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const AlgebraMorphism f = expect_kind<AlgebraMorphism>("morphism", arg1);
                const Algebra a = expect_kind<Algebra>("algebra", arg2);
                const Algebra b = expect_kind<Algebra>("algebra", arg3);
                return check_outcome("check morphism", {arg1, arg2, arg3},
                                     check_morphism(f, a, b));
            };
        });
    }
    {
        CLI::App* s = check->add_subcommand("crossed", "crossed module axioms");
        s->add_option("file", arg1, "crossed module file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const CrossedModule x = expect_kind<CrossedModule>("crossed", arg1);
                return check_outcome("check crossed", {arg1}, check_crossed_module(x));
            };
        });
    }
    {
        CLI::App* s = check->add_subcommand("ainf", "two-term homotopy associative axioms");
        s->add_option("file", arg1, "ainf file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const TwoTermAinf a = expect_kind<TwoTermAinf>("ainf", arg1);
                return check_outcome("check ainf", {arg1}, check_ainf(a));
            };
        });
    }
    {
        CLI::App* s = check->add_subcommand("cinf", "commutative homotopy associative axioms");
        s->add_option("file", arg1, "ainf file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const TwoTermAinf a = expect_kind<TwoTermAinf>("ainf", arg1);
                return check_outcome("check cinf", {arg1}, check_cinf(a));
            };
        });
    }
    {
        CLI::App* s = check->add_subcommand("rb", "Rota-Baxter operator axioms");
        s->add_option("ainf", arg1, "ainf file")->required();
        s->add_option("operator", arg2, "rb operator file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const TwoTermAinf a = expect_kind<TwoTermAinf>("ainf", arg1);
                const RotaBaxter2 r = expect_kind<RotaBaxter2>("rb", arg2);
                return check_outcome("check rb", {arg1, arg2}, check_rota_baxter(r, a));
            };
        });
    }

    {
        CLI::App* s = app.add_subcommand(
            "cohomology", "cocycle/coboundary/quotient dimensions at degree 2 or 3");
        s->add_option("algebra", arg1, "algebra file")->required();
        s->add_option("bimodule", arg2, "bimodule file, or 'regular'/'zero'")->required();
        s->add_option("--degree", degree, "cochain degree (2 or 3)")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const Algebra a = expect_kind<Algebra>("algebra", arg1);
                const Bimodule v = bimodule_arg(a, arg2);
                const CohomologyResult res = cohomology_dim(a, v, degree);
                json j;
                j["command"] = "cohomology";
                j["inputs"] = json::array({arg1, arg2});
                j["degree"] = res.degree;
                j["algebra_dim"] = a.dim;
                j["module_dim"] = v.mod_dim;
                j["cochain_dim"] = cochain_space_dim(res.degree, a.dim, v.mod_dim);
                j["cocycles"] = res.cocycles;
                j["coboundaries"] = res.coboundaries;
                j["h_dim"] = res.h_dim;
                j["pass"] = true;
                return Outcome{j.dump(2) + "\n", 0};
            };
        });
    }

    CLI::App* construct = app.add_subcommand("construct", "build a structure file");
    construct->require_subcommand(1);
    {
        CLI::App* s = construct->add_subcommand(
            "skeletal", "two-term structure with zero differential from a 3-cocycle");
        s->add_option("algebra", arg1, "algebra file")->required();
        s->add_option("bimodule", arg2, "bimodule file, or 'regular'/'zero'")->required();
        s->add_option("cochain", arg3, "degree-3 cocycle file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const Algebra a = expect_kind<Algebra>("algebra", arg1);
                const Bimodule v = bimodule_arg(a, arg2);
                const Cochain w = expect_kind<Cochain>("cochain", arg3);
                return structure_outcome(
                    {"zinf", std::nullopt, skeletal_from_cocycle(a, v, w)});
            };
        });
    }
    {
        CLI::App* s = construct->add_subcommand(
            "strict", "two-term structure with zero l3 from a crossed module");
        s->add_option("file", arg1, "crossed module file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const CrossedModule x = expect_kind<CrossedModule>("crossed", arg1);
                return structure_outcome({"zinf", std::nullopt, strict_from_crossed(x)});
            };
        });
    }
    {
        CLI::App* s = construct->add_subcommand("regular-bimodule",
                                                "the algebra acting on itself by its product");
        s->add_option("file", arg1, "algebra file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const Algebra a = expect_kind<Algebra>("algebra", arg1);
                return structure_outcome({"bimodule", std::nullopt, regular_bimodule(a)});
            };
        });
    }
    {
        CLI::App* s = construct->add_subcommand("shuffle",
                                                "single-generator truncated algebra on n letters");
        s->add_option("n", shuffle_n, "dimension")->required()->check(CLI::Range(0, 256));
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                return structure_outcome(
                    {"algebra", std::nullopt,
                     truncated_shuffle(static_cast<std::size_t>(shuffle_n))});
            };
        });
    }
    {
        CLI::App* s = construct->add_subcommand(
            "random-cocycle", "seed-deterministic combination of the cocycle basis");
        s->add_option("algebra", arg1, "algebra file")->required();
        s->add_option("bimodule", arg2, "bimodule file, or 'regular'/'zero'")->required();
        s->add_option("--degree", degree, "cochain degree (2 or 3)")->required();
        s->add_option("--seed", seed, "generator seed");
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const Algebra a = expect_kind<Algebra>("algebra", arg1);
                const Bimodule v = bimodule_arg(a, arg2);
                return structure_outcome(
                    {"cochain", seed, random_cocycle(a, v, degree, seed)});
            };
        });
    }

    CLI::App* convert = app.add_subcommand("convert", "derive one structure from another");
    convert->require_subcommand(1);
    {
        CLI::App* s = convert->add_subcommand(
            "symmetrize", "half-sum product (algebra file) or homotopy symmetrization "
                          "(zinf file to ainf file)");
        s->add_option("file", arg1, "algebra or zinf file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                ParsedFile f = parse_structure(arg1);
                if (f.kind == "algebra")
                    return structure_outcome(
                        {"algebra", std::nullopt, symmetrize(std::get<Algebra>(f.value))});
                if (f.kind == "zinf")
                    return structure_outcome(
                        {"ainf", std::nullopt,
                         symmetrize_zinf(std::get<TwoTermZinf>(f.value))});
                throw io_error(arg1 + ": expected kind 'algebra' or 'zinf', got '" + f.kind +
                               "'");
            };
        });
    }
    {
        CLI::App* s = convert->add_subcommand("dendrify", "split a zinf file into cells");
        s->add_option("file", arg1, "zinf file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const TwoTermZinf L = expect_kind<TwoTermZinf>("zinf", arg1);
                return structure_outcome({"dend", std::nullopt, dendrify(L)});
            };
        });
    }
    {
        CLI::App* s = convert->add_subcommand("totalize", "sum the cells of a dend file");
        s->add_option("file", arg1, "dend file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const TwoTermDend d = expect_kind<TwoTermDend>("dend", arg1);
                return structure_outcome({"ainf", std::nullopt, totalize(d)});
            };
        });
    }
    {
        CLI::App* s = convert->add_subcommand(
            "rb-zinf", "induced homotopy Zinbiel structure of a Rota-Baxter operator");
        s->add_option("ainf", arg1, "ainf file")->required();
        s->add_option("operator", arg2, "rb operator file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const TwoTermAinf a = expect_kind<TwoTermAinf>("ainf", arg1);
                const RotaBaxter2 r = expect_kind<RotaBaxter2>("rb", arg2);
                return structure_outcome({"zinf", std::nullopt, zinf_from_rb(a, r)});
            };
        });
    }
    {
        CLI::App* s = convert->add_subcommand(
            "T", "validate a zinf file through the categorical laws and re-emit it");
        s->add_option("file", arg1, "zinf file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const TwoTermZinf L = expect_kind<TwoTermZinf>("zinf", arg1);
                const Zinbiel2Algebra z2 = functor_T(L);
                const CheckReport nat = check_naturality(z2.ops);
                if (!nat.pass()) return check_outcome("convert T", {arg1}, nat);
                const CheckReport law = check_zinbielator_identity(z2.ops);
                if (!law.pass()) return check_outcome("convert T", {arg1}, law);
                return structure_outcome({"zinf", std::nullopt, z2.ops});
            };
        });
    }
    {
        CLI::App* s = convert->add_subcommand(
            "S", "extract the structure back out of the categorical presentation");
        s->add_option("file", arg1, "zinf file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const TwoTermZinf L = expect_kind<TwoTermZinf>("zinf", arg1);
                return structure_outcome({"zinf", std::nullopt, functor_S(functor_T(L))});
            };
        });
    }

    {
        CLI::App* s = app.add_subcommand(
            "xi", "obstruction class of a crossed-module extension");
        s->add_option("file", arg1, "extension file")->required();
        s->add_option("--sections", sections, "section strategy")
            ->check(CLI::IsMember({"pivot", "shifted"}));
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const CrossedModule x = expect_kind<CrossedModule>("extension", arg1);
                const CrossedExtension E = extension_from_crossed(x);
                const SectionStrategy strat = sections == "shifted" ? SectionStrategy::shifted
                                                                    : SectionStrategy::pivot;
                const Cochain rep = theta(E, choose_sections(E, strat));
                const CohomologyResult res = cohomology_dim(E.z, E.m, 3);
                const bool zero_class =
                    solve(coboundary_matrix(E.z, E.m, 2), flatten(rep)).has_value();
                json j;
                j["command"] = "xi";
                j["inputs"] = json::array({arg1});
                j["sections"] = sections;
                j["algebra_dim"] = E.z.dim;
                j["module_dim"] = E.m.mod_dim;
                j["cocycles"] = res.cocycles;
                j["coboundaries"] = res.coboundaries;
                j["h_dim"] = res.h_dim;
                j["class_is_zero"] = zero_class;
                j["representative"] = cochain_file_json(rep);
                j["pass"] = true;
                return Outcome{j.dump(2) + "\n", 0};
            };
        });
    }
    {
        CLI::App* s = app.add_subcommand(
            "same-class", "whether two degree-3 cochains differ by a coboundary");
        s->add_option("extension", arg1, "extension file fixing the context")->required();
        s->add_option("first", arg2, "cochain file")->required();
        s->add_option("second", arg3, "cochain file")->required();
        s->add_option("--out", out_path, out_help);
        s->callback([&] {
            action = [&] {
                const CrossedModule x = expect_kind<CrossedModule>("extension", arg1);
                const CrossedExtension E = extension_from_crossed(x);
                const Cochain t1 = expect_kind<Cochain>("cochain", arg2);
                const Cochain t2 = expect_kind<Cochain>("cochain", arg3);
                const bool same = same_class(t1, t2, E.z, E.m);
                json j;
                j["command"] = "same-class";
                j["inputs"] = json::array({arg1, arg2, arg3});
                j["same_class"] = same;
                j["pass"] = same;
                return Outcome{j.dump(2) + "\n", same ? 0 : 1};
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (!action) return 2;

    Outcome o;
    try {
        o = action();
    } catch (const precondition_error& e) {
        json j;
        j["error"] = e.what();
        j["report"] = report_json(e.report);
        o = {j.dump(2) + "\n", 1};
    } catch (const std::exception& e) {
        json j;
        j["error"] = e.what();
        o = {j.dump(2) + "\n", 2};
    }

    if (out_path.empty()) {
        std::cout << o.text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        f << o.text;
        f.flush();
        if (!f.good()) {
            std::cerr << "cannot write '" << out_path << "'\n";
            return 2;
        }
    }
    return o.code;
}
