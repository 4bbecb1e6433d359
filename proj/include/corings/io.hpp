#pragma once

#include "json.hpp"

#include "corings/demos.hpp"

namespace corings {

using json = nlohmann::ordered_json;

/// On-disk bundle of structure data. Every section is optional; commands
/// request what they need and fail with a clear message otherwise.
struct StructureFile {
    FieldSpec field = FieldSpec::rationals();
    std::optional<FinAlgebra> algebra;
    std::optional<FinCoalgebra> coalgebra;
    std::optional<LinMap> psi_r, psi_l, coaction, action, antipode;
    std::optional<Subspace> subalgebra;
};

inline StructureFile from_demo(const DemoStructures& d) {
    return {d.field, d.algebra, d.coalgebra, d.psi_r, d.psi_l, d.coaction, d.action, d.antipode, d.subalgebra};
}

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

namespace io_detail {

inline Scalar parse_scalar(const FieldSpec& f, const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path + ": scalar must be a string");
    try {
        return Scalar::parse(f, j.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline std::vector<Scalar> parse_vector(const FieldSpec& f, const json& j, long n, const std::string& path) {
    if (!j.is_array() || static_cast<long>(j.size()) != n)
        throw ParseError(path + ": expected an array of " + std::to_string(n) + " scalars");
    std::vector<Scalar> v;
    for (long i = 0; i < n; ++i) v.push_back(parse_scalar(f, j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

inline json dump_vector(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

inline Shape parse_shape(const json& j, const std::string& path) {
    if (!j.is_array() || j.empty()) throw ParseError(path + ": expected a non-empty array of dimensions");
    std::vector<long> factors;
    for (const auto& e : j) {
        if (!e.is_number_integer() || e.get<long>() <= 0) throw ParseError(path + ": bad dimension");
        factors.push_back(e.get<long>());
    }
    return Shape(std::move(factors));
}

inline json dump_shape(const Shape& s) {
    json out = json::array();
    for (long f : s.factors) out.push_back(f);
    return out;
}

/// {"codomain": [..], "domain": [..], "matrix": dense row-major rows}
inline LinMap parse_matrix(const FieldSpec& f, const json& j, const std::string& path) {
    if (!j.is_object() || !j.contains("codomain") || !j.contains("domain") || !j.contains("matrix"))
        throw ParseError(path + ": expected {codomain, domain, matrix}");
    Shape cod = parse_shape(j["codomain"], path + ".codomain");
    Shape dom = parse_shape(j["domain"], path + ".domain");
    const json& rows = j["matrix"];
    if (!rows.is_array() || static_cast<long>(rows.size()) != cod.dim())
        throw ParseError(path + ".matrix: expected " + std::to_string(cod.dim()) + " rows");
    LinMap m(cod, dom, f);
    for (long i = 0; i < cod.dim(); ++i) {
        auto row = parse_vector(f, rows[i], dom.dim(), path + ".matrix[" + std::to_string(i) + "]");
        for (long k = 0; k < dom.dim(); ++k) m.at(i, k) = row[k];
    }
    return m;
}

inline json dump_matrix(const LinMap& m) {
    json out;
    out["codomain"] = dump_shape(m.codomain());
    out["domain"] = dump_shape(m.domain());
    json rows = json::array();
    for (long i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (long k = 0; k < m.cols(); ++k) row.push_back(m.at(i, k).str());
        rows.push_back(std::move(row));
    }
    out["matrix"] = std::move(rows);
    return out;
}

}  // namespace io_detail

inline FieldSpec parse_field(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldSpec::rationals();
        throw ParseError("field: unknown field '" + j.get<std::string>() + "'");
    }
    if (j.is_object() && j.contains("Fp")) {
        if (!j["Fp"].is_number_integer()) throw ParseError("field.Fp: expected an integer");
        try {
            return FieldSpec::prime(j["Fp"].get<long>());
        } catch (const std::exception& e) {
            throw ParseError(std::string("field: ") + e.what());
        }
    }
    throw ParseError("field: expected \"Q\" or {\"Fp\": p}");
}

/// "Q" or "Fp:<p>", the command-line spelling.
inline FieldSpec parse_field_name(const std::string& name) {
    if (name == "Q") return FieldSpec::rationals();
    if (name.rfind("Fp:", 0) == 0) {
        try {
            return FieldSpec::prime(std::stol(name.substr(3)));
        } catch (const std::exception& e) {
            throw ParseError(std::string("field: ") + e.what());
        }
    }
    throw ParseError("field: expected Q or Fp:<p>");
}

inline StructureFile parse_structure(const json& j) {
    using namespace io_detail;
    if (!j.is_object()) throw ParseError("top level: expected an object");
    if (!j.contains("field")) throw ParseError("top level: missing field");
    StructureFile s;
    s.field = parse_field(j["field"]);
    const FieldSpec& f = s.field;

    if (j.contains("algebra")) {
        const json& a = j["algebra"];
        if (!a.is_object() || !a.contains("dim") || !a.contains("mul") || !a.contains("unit"))
            throw ParseError("algebra: expected {dim, mul, unit}");
        FinAlgebra alg;
        alg.dim = a["dim"].is_number_integer() ? a["dim"].get<long>() : 0;
        if (alg.dim <= 0) throw ParseError("algebra.dim: expected a positive integer");
        const long n = alg.dim;
        const json& mul = a["mul"];
        if (!mul.is_array() || static_cast<long>(mul.size()) != n)
            throw ParseError("algebra.mul: expected " + std::to_string(n) + " rows");
        alg.mul = LinMap(Shape::vec(n), Shape{n, n}, f);
        for (long i = 0; i < n; ++i) {
            if (!mul[i].is_array() || static_cast<long>(mul[i].size()) != n)
                throw ParseError("algebra.mul[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                                 " entries");
            for (long k = 0; k < n; ++k) {
                auto v = parse_vector(f, mul[i][k], n,
                                      "algebra.mul[" + std::to_string(i) + "][" + std::to_string(k) + "]");
                for (long r = 0; r < n; ++r) alg.mul.at(r, i * n + k) = v[r];
            }
        }
        auto u = parse_vector(f, a["unit"], n, "algebra.unit");
        alg.unit = LinMap(Shape::vec(n), Shape::scalar(), f);
        for (long r = 0; r < n; ++r) alg.unit.at(r, 0) = u[r];
        s.algebra = std::move(alg);
    }

    if (j.contains("coalgebra")) {
        const json& c = j["coalgebra"];
        if (!c.is_object() || !c.contains("dim") || !c.contains("comul") || !c.contains("counit"))
            throw ParseError("coalgebra: expected {dim, comul, counit}");
        FinCoalgebra co;
        co.dim = c["dim"].is_number_integer() ? c["dim"].get<long>() : 0;
        if (co.dim <= 0) throw ParseError("coalgebra.dim: expected a positive integer");
        const long n = co.dim;
        const json& comul = c["comul"];
        if (!comul.is_array() || static_cast<long>(comul.size()) != n)
            throw ParseError("coalgebra.comul: expected " + std::to_string(n) + " entries");
        co.comul = LinMap(Shape{n, n}, Shape::vec(n), f);
        for (long b = 0; b < n; ++b) {
            const std::string path = "coalgebra.comul[" + std::to_string(b) + "]";
            if (!comul[b].is_array()) throw ParseError(path + ": expected an array of triples");
            for (const auto& t : comul[b]) {
                if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
                    throw ParseError(path + ": expected triples [i, j, coeff]");
                long i = t[0].get<long>(), k = t[1].get<long>();
                if (i < 0 || i >= n || k < 0 || k >= n) throw ParseError(path + ": index out of range");
                co.comul.at(i * n + k, b) += parse_scalar(f, t[2], path);
            }
        }
        auto e = parse_vector(f, c["counit"], n, "coalgebra.counit");
        co.counit = LinMap(Shape::scalar(), Shape::vec(n), f);
        for (long k = 0; k < n; ++k) co.counit.at(0, k) = e[k];
        s.coalgebra = std::move(co);
    }

    auto matrix_section = [&](const char* key) -> std::optional<LinMap> {
        if (!j.contains(key)) return std::nullopt;
        return parse_matrix(f, j[key], key);
    };
    s.psi_r = matrix_section("psiR");
    s.psi_l = matrix_section("psiL");
    s.coaction = matrix_section("coaction");
    s.action = matrix_section("action");
    s.antipode = matrix_section("antipode");

    if (j.contains("subalgebra")) {
        const json& sub = j["subalgebra"];
        if (!sub.is_object() || !sub.contains("basis") || !sub["basis"].is_array())
            throw ParseError("subalgebra: expected {basis: [...]}");
        if (!s.algebra) throw ParseError("subalgebra: requires an algebra section");
        std::vector<Row> rows;
        long i = 0;
        for (const auto& r : sub["basis"])
            rows.push_back(parse_vector(f, r, s.algebra->dim, "subalgebra.basis[" + std::to_string(i++) + "]"));
        s.subalgebra = Subspace::span(Shape::vec(s.algebra->dim), f, std::move(rows));
    }

    // dimension cross-checks between sections
    auto expect = [&](const char* key, const LinMap& m, const Shape& cod, const Shape& dom) {
        if (m.codomain().factors != cod.factors || m.domain().factors != dom.factors)
            throw ParseError(std::string(key) + ": shape inconsistent with declared dimensions");
    };
    if (s.algebra && s.coalgebra) {
        const long m = s.algebra->dim, n = s.coalgebra->dim;
        if (s.psi_r) expect("psiR", *s.psi_r, Shape{m, n}, Shape{n, m});
        if (s.psi_l) expect("psiL", *s.psi_l, Shape{n, m}, Shape{m, n});
        if (s.coaction) expect("coaction", *s.coaction, Shape{m, n}, Shape::vec(m));
        if (s.action) expect("action", *s.action, Shape::vec(n), Shape{n, m});
    }
    if (s.algebra && s.antipode)
        expect("antipode", *s.antipode, Shape::vec(s.algebra->dim), Shape::vec(s.algebra->dim));
    return s;
}

inline json dump_field(const FieldSpec& f) {
    if (f.kind == FieldSpec::Kind::Rationals) return json("Q");
    json out;
    out["Fp"] = f.p;
    return out;
}

inline json serialize(const StructureFile& s) {
    using namespace io_detail;
    json out;
    out["field"] = dump_field(s.field);
    if (s.algebra) {
        const long n = s.algebra->dim;
        json a;
        a["dim"] = n;
        json mul = json::array();
        for (long i = 0; i < n; ++i) {
            json row = json::array();
            for (long k = 0; k < n; ++k) {
                json v = json::array();
                for (long r = 0; r < n; ++r) v.push_back(s.algebra->mul.at(r, i * n + k).str());
                row.push_back(std::move(v));
            }
            mul.push_back(std::move(row));
        }
        a["mul"] = std::move(mul);
        a["unit"] = dump_vector(s.algebra->unit_vec());
        out["algebra"] = std::move(a);
    }
    if (s.coalgebra) {
        const long n = s.coalgebra->dim;
        json c;
        c["dim"] = n;
        json comul = json::array();
        for (long b = 0; b < n; ++b) {
            json triples = json::array();
            for (long i = 0; i < n; ++i)
                for (long k = 0; k < n; ++k) {
                    const Scalar& v = s.coalgebra->comul.at(i * n + k, b);
                    if (!v.is_zero()) triples.push_back(json::array({i, k, v.str()}));
                }
            comul.push_back(std::move(triples));
        }
        c["comul"] = std::move(comul);
        std::vector<Scalar> eps;
        for (long k = 0; k < n; ++k) eps.push_back(s.coalgebra->counit.at(0, k));
        c["counit"] = dump_vector(eps);
        out["coalgebra"] = std::move(c);
    }
    if (s.psi_r) out["psiR"] = dump_matrix(*s.psi_r);
    if (s.psi_l) out["psiL"] = dump_matrix(*s.psi_l);
    if (s.coaction) out["coaction"] = dump_matrix(*s.coaction);
    if (s.action) out["action"] = dump_matrix(*s.action);
    if (s.antipode) out["antipode"] = dump_matrix(*s.antipode);
    if (s.subalgebra) {
        json basis = json::array();
        for (const auto& row : s.subalgebra->basis) basis.push_back(dump_vector(row));
        out["subalgebra"] = json{{"basis", std::move(basis)}};
    }
    return out;
}

inline json report_to_json(const Report& rep) {
    json out;
    out["title"] = rep.title;
    out["status"] = rep.status();
    if (rep.not_applicable) out["hypothesisFailed"] = rep.hypothesis_failed;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["ok"] = c.ok;
        if (!c.ok && !c.witness.empty()) e["witness"] = c.witness;
        checks.push_back(std::move(e));
    }
    out["checks"] = std::move(checks);
    json dims;  // std::map iteration gives a fixed key order
    for (const auto& [k, v] : rep.dims) dims[k] = v;
    out["dims"] = std::move(dims);
    return out;
}

}  // namespace corings
