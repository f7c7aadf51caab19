#include "zinbiel/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/errors.hpp"
#include "zinbiel/rational.hpp"

namespace zinbiel {

namespace {

using nlohmann::json;

/* Upper bound on dense tensor cells a file may declare. */
constexpr std::size_t max_cells = std::size_t{1} << 24;

struct Ctx {
    std::string origin;

    [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
        throw io_error(origin + ": " + (path.empty() ? "" : path + ": ") + msg);
    }
};

void require_object(const Ctx& c, const json& j, const std::string& path,
                    const std::vector<std::string>& required,
                    const std::vector<std::string>& optional) {
    if (!j.is_object()) c.fail(path, "expected an object");
    for (const auto& k : required)
        if (!j.contains(k)) c.fail(path, "missing key '" + k + "'");
    for (const auto& item : j.items()) {
        const std::string& k = item.key();
        const bool known =
            std::find(required.begin(), required.end(), k) != required.end() ||
            std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) c.fail(path, "unknown key '" + k + "'");
    }
}

std::size_t get_dim(const Ctx& c, const json& j, const std::string& path) {
    if (!j.is_number_unsigned()) c.fail(path, "expected a nonnegative integer");
    const auto v = j.get<std::uint64_t>();
    if (v > max_cells) c.fail(path, "dimension too large");
    return static_cast<std::size_t>(v);
}

Tensor make_tensor(const Ctx& c, const std::string& path, std::vector<std::size_t> shape) {
    std::size_t cells = 1;
    for (std::size_t s : shape) {
        if (s == 0) {
            cells = 0;
            break;
        }
        if (cells > max_cells / s) c.fail(path, "dimensions too large");
        cells *= s;
    }
    return Tensor(std::move(shape));
}

Matrix make_matrix(const Ctx& c, const std::string& path, std::size_t rows, std::size_t cols) {
    if (rows != 0 && cols > max_cells / rows) c.fail(path, "dimensions too large");
    return Matrix(rows, cols);
}

Rational entry_value(const Ctx& c, const json& e, const std::string& epath) {
    if (!e.contains("v") || !e["v"].is_string()) c.fail(epath + ".v", "expected a rational string");
    try {
        return parse_rational(e["v"].get<std::string>());
    } catch (const io_error& err) {
        c.fail(epath + ".v", err.what());
    }
}

std::vector<std::size_t> entry_indices(const Ctx& c, const json& e, const std::string& epath,
                                       std::span<const std::size_t> bounds) {
    if (!e.contains("i") || !e["i"].is_array() || e["i"].size() != bounds.size())
        c.fail(epath + ".i", "expected " + std::to_string(bounds.size()) + " indices");
    std::vector<std::size_t> idx(bounds.size());
    for (std::size_t k = 0; k < bounds.size(); ++k) {
        const std::string ipath = epath + ".i[" + std::to_string(k) + "]";
        if (!e["i"][k].is_number_unsigned()) c.fail(ipath, "expected a nonnegative integer");
        idx[k] = e["i"][k].get<std::size_t>();
        if (idx[k] >= bounds[k]) c.fail(ipath, "index out of range");
    }
    return idx;
}

void check_entry_shape(const Ctx& c, const json& e, const std::string& epath) {
    require_object(c, e, epath, {"i", "v"}, {});
}

void fill_tensor(const Ctx& c, const json& j, const std::string& path, Tensor& t) {
    if (!j.is_array()) c.fail(path, "expected an array of entries");
    std::set<std::size_t> seen;
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string epath = path + "[" + std::to_string(n) + "]";
        check_entry_shape(c, j[n], epath);
        const auto idx = entry_indices(c, j[n], epath, t.shape());
        if (!seen.insert(t.flat_index(idx)).second) c.fail(epath, "duplicate entry");
        t.at(idx) = entry_value(c, j[n], epath);
    }
}

void fill_matrix(const Ctx& c, const json& j, const std::string& path, Matrix& m) {
    if (!j.is_array()) c.fail(path, "expected an array of entries");
    std::set<std::size_t> seen;
    const std::size_t bounds[2] = {m.rows(), m.cols()};
    for (std::size_t n = 0; n < j.size(); ++n) {
        const std::string epath = path + "[" + std::to_string(n) + "]";
        check_entry_shape(c, j[n], epath);
        const auto idx = entry_indices(c, j[n], epath, bounds);
        if (!seen.insert(idx[0] * m.cols() + idx[1]).second) c.fail(epath, "duplicate entry");
        m.at(idx[0], idx[1]) = entry_value(c, j[n], epath);
    }
}

Algebra read_algebra(const Ctx& c, const json& j, const std::string& pre) {
    Algebra a;
    a.dim = get_dim(c, j.at("dim"), pre + "dim");
    a.product = make_tensor(c, pre + "product", {a.dim, a.dim, a.dim});
    fill_tensor(c, j.at("product"), pre + "product", a.product);
    if (j.contains("labels")) {
        const json& lj = j["labels"];
        if (!lj.is_array() || lj.size() != a.dim)
            c.fail(pre + "labels", "expected " + std::to_string(a.dim) + " strings");
        for (std::size_t i = 0; i < lj.size(); ++i) {
            if (!lj[i].is_string())
                c.fail(pre + "labels[" + std::to_string(i) + "]", "expected a string");
            a.labels.push_back(lj[i].get<std::string>());
        }
    }
    return a;
}

CrossedModule read_crossed(const Ctx& c, const json& j, const std::string& pre) {
    CrossedModule x;
    require_object(c, j.at("g"), pre + "g", {"dim", "product"}, {"labels"});
    x.g = read_algebra(c, j["g"], pre + "g.");
    require_object(c, j.at("h"), pre + "h", {"dim", "product"}, {"labels"});
    x.h = read_algebra(c, j["h"], pre + "h.");
    x.phi = make_matrix(c, pre + "phi", x.g.dim, x.h.dim);
    fill_matrix(c, j.at("phi"), pre + "phi", x.phi);
    x.action.alg_dim = x.g.dim;
    x.action.mod_dim = x.h.dim;
    x.action.left = make_tensor(c, pre + "left", {x.g.dim, x.h.dim, x.h.dim});
    fill_tensor(c, j.at("left"), pre + "left", x.action.left);
    x.action.right = make_tensor(c, pre + "right", {x.h.dim, x.g.dim, x.h.dim});
    fill_tensor(c, j.at("right"), pre + "right", x.action.right);
    return x;
}

json entries_json(const Tensor& t) {
    json arr = json::array();
    for (std::size_t f = 0; f < t.size(); ++f) {
        if (is_zero(t.flat(f))) continue;
        json e;
        e["i"] = t.unflatten(f);
        e["v"] = to_string(t.flat(f));
        arr.push_back(std::move(e));
    }
    return arr;
}

json entries_json(const Matrix& m) {
    json arr = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (is_zero(m.at(r, k))) continue;
            json e;
            e["i"] = json::array({r, k});
            e["v"] = to_string(m.at(r, k));
            arr.push_back(std::move(e));
        }
    return arr;
}

json algebra_body(const Algebra& a) {
    json b;
    b["dim"] = a.dim;
    if (!a.labels.empty()) b["labels"] = a.labels;
    b["product"] = entries_json(a.product);
    return b;
}

json crossed_body(const CrossedModule& x) {
    json b;
    b["g"] = algebra_body(x.g);
    b["h"] = algebra_body(x.h);
    b["phi"] = entries_json(x.phi);
    b["left"] = entries_json(x.action.left);
    b["right"] = entries_json(x.action.right);
    return b;
}

} // namespace

ParsedFile parse_structure_text(const std::string& text, const std::string& origin) {
    const Ctx c{origin};
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        c.fail("", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) c.fail("", "expected a top-level object");
    if (!j.contains("kind") || !j["kind"].is_string()) c.fail("", "missing string key 'kind'");

    ParsedFile out;
    out.kind = j["kind"].get<std::string>();
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) c.fail("seed", "expected a nonnegative integer");
        out.seed = j["seed"].get<std::uint64_t>();
    }

    if (out.kind == "algebra") {
        require_object(c, j, "", {"kind", "dim", "product"}, {"labels", "seed"});
        out.value = read_algebra(c, j, "");
    } else if (out.kind == "bimodule") {
        require_object(c, j, "", {"kind", "algebra_dim", "module_dim", "left", "right"},
                       {"seed"});
        Bimodule v;
        v.alg_dim = get_dim(c, j["algebra_dim"], "algebra_dim");
        v.mod_dim = get_dim(c, j["module_dim"], "module_dim");
        v.left = make_tensor(c, "left", {v.alg_dim, v.mod_dim, v.mod_dim});
        fill_tensor(c, j["left"], "left", v.left);
        v.right = make_tensor(c, "right", {v.mod_dim, v.alg_dim, v.mod_dim});
        fill_tensor(c, j["right"], "right", v.right);
        out.value = std::move(v);
    } else if (out.kind == "zinf") {
        require_object(c, j, "",
                       {"kind", "dim0", "dim1", "d", "l2_00", "l2_01", "l2_10", "l3"}, {"seed"});
        TwoTermZinf L;
        L.dim0 = get_dim(c, j["dim0"], "dim0");
        L.dim1 = get_dim(c, j["dim1"], "dim1");
        L.d = make_matrix(c, "d", L.dim0, L.dim1);
        fill_matrix(c, j["d"], "d", L.d);
        L.l2_00 = make_tensor(c, "l2_00", {L.dim0, L.dim0, L.dim0});
        fill_tensor(c, j["l2_00"], "l2_00", L.l2_00);
        L.l2_01 = make_tensor(c, "l2_01", {L.dim0, L.dim1, L.dim1});
        fill_tensor(c, j["l2_01"], "l2_01", L.l2_01);
        L.l2_10 = make_tensor(c, "l2_10", {L.dim1, L.dim0, L.dim1});
        fill_tensor(c, j["l2_10"], "l2_10", L.l2_10);
        L.l3 = make_tensor(c, "l3", {L.dim0, L.dim0, L.dim0, L.dim1});
        fill_tensor(c, j["l3"], "l3", L.l3);
        out.value = std::move(L);
    } else if (out.kind == "morphism") {
        require_object(c, j, "", {"kind", "source_dim", "target_dim", "matrix"}, {"seed"});
        AlgebraMorphism f;
        f.source_dim = get_dim(c, j["source_dim"], "source_dim");
        f.target_dim = get_dim(c, j["target_dim"], "target_dim");
        f.matrix = make_matrix(c, "matrix", f.target_dim, f.source_dim);
        fill_matrix(c, j["matrix"], "matrix", f.matrix);
        out.value = std::move(f);
    } else if (out.kind == "crossed") {
        require_object(c, j, "", {"kind", "g", "h", "phi", "left", "right"}, {"seed"});
        out.value = read_crossed(c, j, "");
    } else if (out.kind == "extension") {
        require_object(c, j, "", {"kind", "crossed"}, {"seed"});
        require_object(c, j["crossed"], "crossed", {"g", "h", "phi", "left", "right"}, {});
        out.value = read_crossed(c, j["crossed"], "crossed.");
    } else if (out.kind == "cochain") {
        require_object(c, j, "", {"kind", "degree", "algebra_dim", "module_dim", "entries"},
                       {"seed"});
        const std::size_t degree = get_dim(c, j["degree"], "degree");
        if (degree < 1 || degree > 4) c.fail("degree", "expected 1..4");
        Cochain w;
        w.degree = degree;
        std::vector<std::size_t> shape(degree, get_dim(c, j["algebra_dim"], "algebra_dim"));
        shape.push_back(get_dim(c, j["module_dim"], "module_dim"));
        w.map = make_tensor(c, "entries", std::move(shape));
        fill_tensor(c, j["entries"], "entries", w.map);
        out.value = std::move(w);
    } else if (out.kind == "ainf") {
        require_object(c, j, "",
                       {"kind", "dim0", "dim1", "d", "m2_00", "m2_01", "m2_10", "m3"}, {"seed"});
        TwoTermAinf A;
        A.dim0 = get_dim(c, j["dim0"], "dim0");
        A.dim1 = get_dim(c, j["dim1"], "dim1");
        A.d = make_matrix(c, "d", A.dim0, A.dim1);
        fill_matrix(c, j["d"], "d", A.d);
        A.m2_00 = make_tensor(c, "m2_00", {A.dim0, A.dim0, A.dim0});
        fill_tensor(c, j["m2_00"], "m2_00", A.m2_00);
        A.m2_01 = make_tensor(c, "m2_01", {A.dim0, A.dim1, A.dim1});
        fill_tensor(c, j["m2_01"], "m2_01", A.m2_01);
        A.m2_10 = make_tensor(c, "m2_10", {A.dim1, A.dim0, A.dim1});
        fill_tensor(c, j["m2_10"], "m2_10", A.m2_10);
        A.m3 = make_tensor(c, "m3", {A.dim0, A.dim0, A.dim0, A.dim1});
        fill_tensor(c, j["m3"], "m3", A.m3);
        out.value = std::move(A);
    } else if (out.kind == "dend") {
        require_object(c, j, "", {"kind", "dim0", "dim1", "d", "mu2", "mu3"}, {"seed"});
        TwoTermDend D;
        D.dim0 = get_dim(c, j["dim0"], "dim0");
        D.dim1 = get_dim(c, j["dim1"], "dim1");
        D.d = make_matrix(c, "d", D.dim0, D.dim1);
        fill_matrix(c, j["d"], "d", D.d);
        require_object(c, j["mu2"], "mu2", {"1", "2"}, {});
        for (std::size_t cell = 0; cell < 2; ++cell) {
            const std::string key = std::to_string(cell + 1);
            const std::string cp = "mu2." + key;
            const json& cj = j["mu2"][key];
            require_object(c, cj, cp, {"00", "01", "10"}, {});
            D.mu2_00[cell] = make_tensor(c, cp + ".00", {D.dim0, D.dim0, D.dim0});
            fill_tensor(c, cj["00"], cp + ".00", D.mu2_00[cell]);
            D.mu2_01[cell] = make_tensor(c, cp + ".01", {D.dim0, D.dim1, D.dim1});
            fill_tensor(c, cj["01"], cp + ".01", D.mu2_01[cell]);
            D.mu2_10[cell] = make_tensor(c, cp + ".10", {D.dim1, D.dim0, D.dim1});
            fill_tensor(c, cj["10"], cp + ".10", D.mu2_10[cell]);
        }
        require_object(c, j["mu3"], "mu3", {"1", "2", "3"}, {});
        for (std::size_t cell = 0; cell < 3; ++cell) {
            const std::string key = std::to_string(cell + 1);
            D.mu3[cell] = make_tensor(c, "mu3." + key, {D.dim0, D.dim0, D.dim0, D.dim1});
            fill_tensor(c, j["mu3"][key], "mu3." + key, D.mu3[cell]);
        }
        out.value = std::move(D);
    } else if (out.kind == "rb") {
        require_object(c, j, "", {"kind", "dim0", "dim1", "r0", "r1"}, {"seed"});
        RotaBaxter2 R;
        const std::size_t dim0 = get_dim(c, j["dim0"], "dim0");
        const std::size_t dim1 = get_dim(c, j["dim1"], "dim1");
        R.r0 = make_matrix(c, "r0", dim0, dim0);
        fill_matrix(c, j["r0"], "r0", R.r0);
        R.r1 = make_matrix(c, "r1", dim1, dim1);
        fill_matrix(c, j["r1"], "r1", R.r1);
        out.value = std::move(R);
    } else {
        c.fail("kind", "unknown kind '" + out.kind + "'");
    }
    return out;
}

ParsedFile parse_structure(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw io_error("cannot read '" + path + "'");
    return parse_structure_text(buf.str(), path);
}

std::string emit_structure(const ParsedFile& f) {
    json j;
    j["kind"] = f.kind;
    if (f.seed) j["seed"] = *f.seed;

    if (f.kind == "algebra") {
        j.update(algebra_body(std::get<Algebra>(f.value)));
    } else if (f.kind == "bimodule") {
        const auto& v = std::get<Bimodule>(f.value);
        j["algebra_dim"] = v.alg_dim;
        j["module_dim"] = v.mod_dim;
        j["left"] = entries_json(v.left);
        j["right"] = entries_json(v.right);
    } else if (f.kind == "zinf") {
        const auto& L = std::get<TwoTermZinf>(f.value);
        j["dim0"] = L.dim0;
        j["dim1"] = L.dim1;
        j["d"] = entries_json(L.d);
        j["l2_00"] = entries_json(L.l2_00);
        j["l2_01"] = entries_json(L.l2_01);
        j["l2_10"] = entries_json(L.l2_10);
        j["l3"] = entries_json(L.l3);
    } else if (f.kind == "morphism") {
        const auto& m = std::get<AlgebraMorphism>(f.value);
        j["source_dim"] = m.source_dim;
        j["target_dim"] = m.target_dim;
        j["matrix"] = entries_json(m.matrix);
    } else if (f.kind == "crossed") {
        j.update(crossed_body(std::get<CrossedModule>(f.value)));
    } else if (f.kind == "extension") {
        j["crossed"] = crossed_body(std::get<CrossedModule>(f.value));
    } else if (f.kind == "cochain") {
        const auto& w = std::get<Cochain>(f.value);
        j["degree"] = w.degree;
        j["algebra_dim"] = w.alg_dim();
        j["module_dim"] = w.mod_dim();
        j["entries"] = entries_json(w.map);
    } else if (f.kind == "ainf") {
        const auto& A = std::get<TwoTermAinf>(f.value);
        j["dim0"] = A.dim0;
        j["dim1"] = A.dim1;
        j["d"] = entries_json(A.d);
        j["m2_00"] = entries_json(A.m2_00);
        j["m2_01"] = entries_json(A.m2_01);
        j["m2_10"] = entries_json(A.m2_10);
        j["m3"] = entries_json(A.m3);
    } else if (f.kind == "dend") {
        const auto& D = std::get<TwoTermDend>(f.value);
        j["dim0"] = D.dim0;
        j["dim1"] = D.dim1;
        j["d"] = entries_json(D.d);
        json mu2;
        for (std::size_t cell = 0; cell < 2; ++cell) {
            json cellj;
            cellj["00"] = entries_json(D.mu2_00[cell]);
            cellj["01"] = entries_json(D.mu2_01[cell]);
            cellj["10"] = entries_json(D.mu2_10[cell]);
            mu2[std::to_string(cell + 1)] = std::move(cellj);
        }
        j["mu2"] = std::move(mu2);
        json mu3;
        for (std::size_t cell = 0; cell < 3; ++cell)
            mu3[std::to_string(cell + 1)] = entries_json(D.mu3[cell]);
        j["mu3"] = std::move(mu3);
    } else if (f.kind == "rb") {
        const auto& R = std::get<RotaBaxter2>(f.value);
        j["dim0"] = R.r0.rows();
        j["dim1"] = R.r1.rows();
        j["r0"] = entries_json(R.r0);
        j["r1"] = entries_json(R.r1);
    } else {
        throw internal_error("emit_structure: unknown kind '" + f.kind + "'");
    }
    return j.dump(2) + "\n";
}

} // namespace zinbiel
