#include "hpa/io.hpp"

#include <fstream>
#include <sstream>

#include "hpa/errors.hpp"

namespace hpa::io {

namespace {

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::size_t need_size(const json& j, const char* key) {
    const json& v = need(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long>() >= 0))
        throw InputError(std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Scalar scalar_from_json(Field f, const json& j) {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long>());
    throw InputError("scalars must be strings or integers, got " + j.dump());
}

void expect_array(const json& j, std::size_t n, const std::string& what) {
    if (!j.is_array() || j.size() != n)
        throw DimensionError(what + ": expected an array of length " + std::to_string(n));
}

std::vector<std::string> labels_from_json(const json& j, std::size_t n) {
    std::vector<std::string> labels;
    if (j.contains("basis")) {
        expect_array(j.at("basis"), n, "basis");
        for (const auto& l : j.at("basis")) labels.push_back(l.get<std::string>());
    } else {
        for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
    }
    return labels;
}

json header(Field f, const char* kind, const std::vector<std::string>& labels) {
    return json{{"field", to_json(f)}, {"kind", kind}, {"dim", labels.size()}, {"basis", labels}};
}

json cube(std::size_t n, const std::function<Scalar(std::size_t, std::size_t, std::size_t)>& t) {
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json plane = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            json row = json::array();
            for (std::size_t k = 0; k < n; ++k) row.push_back(to_json(t(i, j, k)));
            plane.push_back(row);
        }
        out.push_back(plane);
    }
    return out;
}

// cube[i][j][k]
std::vector<Scalar> cube_from_json(Field f, const json& j, std::size_t n, const std::string& what) {
    expect_array(j, n, what);
    std::vector<Scalar> out;
    for (const auto& plane : j) {
        expect_array(plane, n, what);
        for (const auto& row : plane) {
            expect_array(row, n, what);
            for (const auto& s : row) out.push_back(scalar_from_json(f, s));
        }
    }
    return out;
}

std::string kind_of(const json& j) {
    const json& k = need(j, "kind");
    if (!k.is_string()) throw InputError("'kind' must be a string");
    return k.get<std::string>();
}

AlgebraPresentation algebra_part(const json& j) {
    Field f = field_from_json(need(j, "field"));
    std::size_t n = need_size(j, "dim");
    auto mu = cube_from_json(f, need(j, "mult"), n, "mult");
    return AlgebraPresentation::from_tensor(
        f, labels_from_json(j, n), [&](std::size_t a, std::size_t b, std::size_t c) { return mu[(a * n + b) * n + c]; },
        vec_from_json(f, need(j, "unit"), n));
}

CoalgebraPresentation coalgebra_part(const json& j) {
    Field f = field_from_json(need(j, "field"));
    std::size_t n = need_size(j, "dim");
    auto d = cube_from_json(f, need(j, "comult"), n, "comult");
    Matrix comult(f, n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) comult(a * n + b, i) = d[(i * n + a) * n + b];
    return CoalgebraPresentation(labels_from_json(j, n), std::move(comult), vec_from_json(f, need(j, "counit"), n));
}

const json& resolve(const json& j, const std::filesystem::path& base, json& holder) {
    if (!j.is_string()) return j;
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative() && !base.empty()) p = base / p;
    holder = read_file(p);
    return holder;
}

Matrix map_matrix(Field f, const json& j, std::size_t rows, std::size_t cols) {
    if (j.contains("matrix")) return matrix_from_json(f, j.at("matrix"), rows, cols);
    if (j.contains("rho")) return matrix_from_json(f, j.at("rho"), rows, cols);
    throw InputError("missing key 'matrix'");
}

template <class F>
auto wrap(F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const json::exception& e) {
        throw InputError(e.what());
    }
}

}  // namespace

json to_json(Field f) {
    if (f.is_rational()) return json{{"kind", "Q"}};
    return json{{"kind", "Fp"}, {"p", f.characteristic()}};
}

Field field_from_json(const json& j) {
    return wrap([&] {
        std::string k = kind_of(j);
        if (k == "Q") return Field::rationals();
        if (k == "Fp") return Field::prime(need_size(j, "p"));
        throw InputError("unknown field kind '" + k + "'");
    });
}

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Vec& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(to_json(s));
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
    return out;
}

Vec vec_from_json(Field f, const json& j, std::size_t expected) {
    expect_array(j, expected, "vector");
    Vec v;
    for (const auto& s : j) v.push_back(scalar_from_json(f, s));
    return v;
}

Matrix matrix_from_json(Field f, const json& j, std::size_t rows, std::size_t cols) {
    expect_array(j, rows, "matrix rows");
    std::vector<Vec> r;
    for (const auto& row : j) r.push_back(vec_from_json(f, row, cols));
    if (rows == 0) return Matrix(f, 0, cols);
    return Matrix::from_rows(f, cols, r);
}

json to_json(const AlgebraPresentation& a) {
    json j = header(a.field(), "algebra", a.labels());
    j["mult"] = cube(a.dim(), [&](std::size_t i, std::size_t k, std::size_t l) { return a.mu(i, k, l); });
    j["unit"] = to_json(a.unit());
    return j;
}

json to_json(const CoalgebraPresentation& c) {
    json j = header(c.field(), "coalgebra", c.labels());
    j["comult"] = cube(c.dim(), [&](std::size_t i, std::size_t k, std::size_t l) { return c.delta(i, k, l); });
    j["counit"] = to_json(c.counit());
    return j;
}

json to_json(const BialgebraPresentation& b) {
    json j = to_json(b.algebra);
    json c = to_json(b.coalgebra);
    j["kind"] = "bialgebra";
    j["comult"] = c["comult"];
    j["counit"] = c["counit"];
    return j;
}

json to_json(const HopfPresentation& h) {
    json j = to_json(h.bialgebra);
    j["kind"] = "hopf";
    j["antipode"] = to_json(h.antipode);
    return j;
}

AnyPresentation presentation_from_json(const json& j) {
    return wrap([&]() -> AnyPresentation {
        std::string k = kind_of(j);
        if (k == "algebra") return algebra_part(j);
        if (k == "coalgebra") return coalgebra_part(j);
        BialgebraPresentation b(algebra_part(j), coalgebra_part(j));
        if (k == "bialgebra") return b;
        if (k == "hopf") {
            std::size_t n = b.dim();
            Matrix s = matrix_from_json(b.field(), need(j, "antipode"), n, n);
            return HopfPresentation{std::move(b), std::move(s), std::nullopt};
        }
        throw InputError("unknown presentation kind '" + k + "'");
    });
}

AlgebraPresentation algebra_from_json(const json& j, const std::filesystem::path& base) {
    json holder;
    const json& r = resolve(j, base, holder);
    return wrap([&] { return algebra_part(r); });
}

BialgebraPresentation bialgebra_from_json(const json& j, const std::filesystem::path& base) {
    json holder;
    const json& r = resolve(j, base, holder);
    return wrap([&] {
        std::string k = kind_of(r);
        if (k != "bialgebra" && k != "hopf") throw InputError("expected a bialgebra or hopf presentation, got '" + k + "'");
        return BialgebraPresentation(algebra_part(r), coalgebra_part(r));
    });
}

json to_json(const CoactionMap& c) {
    return json{{"kind", "coaction"}, {"field", to_json(c.field())}, {"algebra", to_json(c.algebra)},
                {"hopf", to_json(c.hopf)}, {"matrix", to_json(c.rho)}};
}

json to_json(const ActionMap& a) {
    return json{{"kind", "action"}, {"field", to_json(a.field())}, {"algebra", to_json(a.algebra)},
                {"hopf", to_json(a.hopf)}, {"matrix", to_json(a.kappa)}};
}

json to_json(const PartialGroupAction& p) {
    json ids = json::object(), alphas = json::object();
    for (std::size_t s = 0; s < p.group.order(); ++s) {
        ids[std::to_string(s)] = to_json(p.idempotents[s]);
        alphas[std::to_string(s)] = to_json(p.alphas[s]);
    }
    json j{{"kind", "partial-group-action"}, {"field", to_json(p.algebra.field())}, {"group", p.group.table},
           {"algebra", to_json(p.algebra)}, {"idempotents", ids}, {"alphas", alphas}};
    if (!p.group.names.empty()) j["names"] = p.group.names;
    return j;
}

AnyMap map_from_json(const json& j, const std::filesystem::path& base) {
    return wrap([&]() -> AnyMap {
        std::string k = kind_of(j);
        AlgebraPresentation a = algebra_from_json(need(j, "algebra"), base);
        Field f = a.field();
        std::size_t n = a.dim();
        if (k == "partial-group-action") {
            std::vector<std::string> names;
            if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
            GroupTable g = make_group_table(need(j, "group").get<std::vector<std::vector<std::size_t>>>(), names);
            std::vector<Vec> ids;
            std::vector<Matrix> alphas;
            for (std::size_t s = 0; s < g.order(); ++s) {
                std::string key = std::to_string(s);
                ids.push_back(vec_from_json(f, need(need(j, "idempotents"), key.c_str()), n));
                alphas.push_back(matrix_from_json(f, need(need(j, "alphas"), key.c_str()), n, n));
            }
            return PartialGroupAction{std::move(g), std::move(a), std::move(ids), std::move(alphas)};
        }
        BialgebraPresentation h = bialgebra_from_json(need(j, "hopf"), base);
        if (!(h.field() == f)) throw FieldMismatch("algebra and hopf are over different fields");
        std::size_t m = h.dim();
        if (k == "coaction") {
            Matrix rho = map_matrix(f, j, n * m, n);
            return CoactionMap(std::move(a), std::move(h), std::move(rho));
        }
        if (k == "action") {
            Matrix kappa = map_matrix(f, j, n, m * n);
            return ActionMap(std::move(a), std::move(h), std::move(kappa));
        }
        throw InputError("unknown map kind '" + k + "'");
    });
}

bool is_map_document(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) return false;
    std::string k = j.at("kind").get<std::string>();
    return k == "coaction" || k == "action" || k == "partial-group-action";
}

json to_json(const AxiomReport& r) {
    json out = json::object();
    for (const auto& c : r.checks()) {
        json e{{"passed", c.passed}};
        if (!c.passed) e["witness"] = c.witness;
        if (!c.note.empty()) e["note"] = c.note;
        out[c.id] = e;
    }
    return out;
}

json to_json(const ClassificationVerdict& v) {
    json eq = json::object(), wit = json::object();
    for (const auto& [id, ok] : v.equations) eq[id] = ok;
    for (const auto& [id, w] : v.witnesses) wit[id] = w;
    return json{{"global", v.is_global}, {"weak", v.is_weak}, {"lax", v.is_lax}, {"partial", v.is_partial},
                {"equations", eq}, {"witnesses", wit}};
}

json read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw InputError("cannot open " + p.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(p.string() + ": " + e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hpa::io
