#include "hcsuper/json_io.hpp"

#include "hcsuper/errors.hpp"

#include <set>

namespace hcsuper {

namespace {

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        if (allowed.count(key) == 0) {
            throw ParseError(where + ": unknown field '" + key + "'");
        }
    }
}

const Json& required(const Json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    return *it;
}

std::size_t index_from_json(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_number_unsigned() || j.get<std::size_t>() >= dim) {
        throw ParseError(where + ": basis index out of range");
    }
    return j.get<std::size_t>();
}

Json matrix_to_json(const ScalarMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(scalar_to_json(m.at(i, j)));
        }
        rows.push_back(row);
    }
    return rows;
}

ScalarMatrix matrix_from_json(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim) {
        throw ParseError(where + ": expected " + std::to_string(dim) + " rows");
    }
    ScalarMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (!j[r].is_array() || j[r].size() != dim) {
            throw ParseError(where + ": row " + std::to_string(r) + " has the wrong length");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            m.set(r, c, scalar_from_json(j[r][c]));
        }
    }
    return m;
}

Json subspace_to_json(const Subspace& s) {
    Json out = Json::array();
    for (const auto& v : s) {
        out.push_back(vector_to_json(v));
    }
    return out;
}

Subspace subspace_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) {
        throw ParseError("decomposition: expected a list of vectors");
    }
    Subspace out;
    for (const auto& v : j) {
        out.push_back(vector_from_json(v, dim));
    }
    return out;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& s : v) {
        out.push_back(scalar_to_json(s));
    }
    return out;
}

} // namespace

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) {
        return Scalar::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Scalar(mpq_class(j.get<long>()));
    }
    throw ParseError("scalar must be a string or an integer");
}

Json vector_to_json(const SparseVec& v) {
    Json out = Json::array();
    for (const auto& [k, s] : v) {
        out.push_back({{"k", k}, {"coeff", scalar_to_json(s)}});
    }
    return out;
}

SparseVec vector_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) {
        throw ParseError("vector: expected a list of {k, coeff}");
    }
    SparseVec v;
    for (const auto& t : j) {
        only_keys(t, {"k", "coeff"}, "vector entry");
        axpy(v, scalar_from_json(required(t, "coeff", "vector entry")),
             SparseVec{{index_from_json(required(t, "k", "vector entry"), dim, "vector entry"), Scalar(1)}});
    }
    return v;
}

Json algebra_to_json(const LieSuperalgebra& g) {
    Json out;
    Json basis = Json::array();
    for (const auto& b : g.basis()) {
        basis.push_back({{"name", b.name}, {"parity", b.parity}});
    }
    out["basis"] = basis;
    Json brackets = Json::array();
    for (const auto& [ij, v] : g.declared_brackets()) {
        brackets.push_back({{"i", ij.first}, {"j", ij.second}, {"out", vector_to_json(v)}});
    }
    out["brackets"] = brackets;
    if (g.has_form()) {
        out["form"] = matrix_to_json(g.form());
    }
    if (g.has_theta()) {
        out["theta"] = matrix_to_json(g.theta());
    }
    if (g.certificate()) {
        Json ideals = Json::array();
        for (const auto& ideal : g.certificate()->ideals) {
            ideals.push_back(subspace_to_json(ideal));
        }
        out["decomposition"] = {{"center", subspace_to_json(g.certificate()->center)}, {"ideals", ideals}};
    }
    return out;
}

LieSuperalgebra algebra_from_json(const Json& j) {
    only_keys(j, {"basis", "brackets", "form", "theta", "decomposition"}, "algebra");
    const Json& basis_json = required(j, "basis", "algebra");
    if (!basis_json.is_array()) {
        throw ParseError("algebra: basis must be a list");
    }
    std::vector<BasisElement> basis;
    std::set<std::string> seen;
    for (const auto& b : basis_json) {
        only_keys(b, {"name", "parity"}, "basis element");
        const Json& name = required(b, "name", "basis element");
        const Json& parity = required(b, "parity", "basis element");
        if (!name.is_string() || !parity.is_number_integer() ||
            (parity.get<int>() != 0 && parity.get<int>() != 1)) {
            throw ParseError("basis element: name must be a string and parity 0 or 1");
        }
        if (!seen.insert(name.get<std::string>()).second) {
            throw ParseError("basis element: duplicate name '" + name.get<std::string>() + "'");
        }
        basis.push_back({name.get<std::string>(), parity.get<int>()});
    }
    const std::size_t n = basis.size();
    LieSuperalgebra::Builder builder(basis);
    if (j.contains("brackets")) {
        const Json& brackets = j["brackets"];
        if (!brackets.is_array()) {
            throw ParseError("algebra: brackets must be a list");
        }
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& e : brackets) {
            only_keys(e, {"i", "j", "out"}, "bracket");
            const std::size_t i = index_from_json(required(e, "i", "bracket"), n, "bracket");
            const std::size_t k = index_from_json(required(e, "j", "bracket"), n, "bracket");
            if (!pairs.insert({i, k}).second) {
                throw ParseError("bracket: duplicate entry (" + std::to_string(i) + ", " + std::to_string(k) + ")");
            }
            builder.bracket(i, k, vector_from_json(required(e, "out", "bracket"), n));
        }
    }
    if (j.contains("form")) {
        builder.form(matrix_from_json(j["form"], n, "form"));
    }
    if (j.contains("theta")) {
        builder.theta(matrix_from_json(j["theta"], n, "theta"));
    }
    if (j.contains("decomposition")) {
        const Json& d = j["decomposition"];
        only_keys(d, {"center", "ideals"}, "decomposition");
        DecompositionCertificate cert;
        if (d.contains("center")) {
            cert.center = subspace_from_json(d["center"], n);
        }
        if (d.contains("ideals")) {
            if (!d["ideals"].is_array()) {
                throw ParseError("decomposition: ideals must be a list");
            }
            for (const auto& ideal : d["ideals"]) {
                cert.ideals.push_back(subspace_from_json(ideal, n));
            }
        }
        builder.certificate(std::move(cert));
    }
    return builder.build();
}

Json uea_to_json(const UEAElement& u) {
    Json out = Json::array();
    for (const auto& [m, c] : u.terms()) {
        out.push_back({{"monomial", m}, {"coeff", scalar_to_json(c)}});
    }
    return out;
}

UEAElement uea_from_json(const Json& j, const EnvelopingAlgebra& env) {
    if (!j.is_array()) {
        throw ParseError("element: expected a list of {monomial, coeff}");
    }
    const std::size_t n = env.algebra().dim();
    UEAElement out = env.zero();
    for (const auto& t : j) {
        only_keys(t, {"monomial", "coeff"}, "element term");
        const Json& m = required(t, "monomial", "element term");
        if (!m.is_array()) {
            throw ParseError("element term: monomial must be a list of indices");
        }
        std::vector<std::size_t> word;
        for (const auto& i : m) {
            word.push_back(index_from_json(i, n, "element term"));
        }
        out += scalar_from_json(required(t, "coeff", "element term")) * env.word_product(word);
    }
    return out;
}

Json poly_to_json(const APolynomial& p, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exps = Json::object();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                exps[names.at(i)] = e[i];
            }
        }
        out.push_back({{"coeff", scalar_to_json(c)}, {"exponents", exps}});
    }
    return out;
}

namespace {

Exponent exponent_from_json(const Json& j, const std::vector<std::string>& names) {
    if (!j.is_object()) {
        throw ParseError("polynomial: exponents must be an object {name: power}");
    }
    Exponent e(names.size(), 0);
    for (const auto& [key, value] : j.items()) {
        std::size_t i = 0;
        while (i < names.size() && names[i] != key) {
            ++i;
        }
        if (i == names.size()) {
            throw ParseError("polynomial: '" + key + "' is not an a-basis name");
        }
        if (!value.is_number_unsigned()) {
            throw ParseError("polynomial: powers must be non-negative integers");
        }
        e[i] += value.get<unsigned>();
    }
    return e;
}

APolynomial variable_named(const std::string& name, const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) {
            return APolynomial::variable(names.size(), i);
        }
    }
    throw ParseError("polynomial: '" + name + "' is not an a-basis name");
}

} // namespace

APolynomial poly_from_json(const Json& j, const std::vector<std::string>& names) {
    if (j.is_string()) {
        return variable_named(j.get<std::string>(), names);
    }
    if (j.is_object()) {
        APolynomial p(names.size());
        p.add_term(exponent_from_json(j, names), Scalar(1));
        return p;
    }
    if (!j.is_array()) {
        throw ParseError("polynomial: expected a list of terms, an exponent map or a name");
    }
    APolynomial p(names.size());
    for (const auto& t : j) {
        only_keys(t, {"coeff", "exponents"}, "polynomial term");
        p.add_term(exponent_from_json(required(t, "exponents", "polynomial term"), names),
                   scalar_from_json(required(t, "coeff", "polynomial term")));
    }
    return p;
}

APolynomial poly_from_text(const std::string& text, const std::vector<std::string>& names) {
    const Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        return variable_named(text, names);
    }
    return poly_from_json(j, names);
}

Json roots_to_json(const PairData& entry) {
    const auto& sys = entry.system;
    Json roots = Json::array();
    for (const auto& r : sys.roots) {
        roots.push_back({{"coords", vec_to_json(r.coords)},
                         {"m0", r.m0()},
                         {"m1", r.m1()},
                         {"positive", r.positive}});
    }
    Json odd = Json::array();
    for (const auto& d : sys.odd) {
        odd.push_back({{"coords", vec_to_json(d.lambda)},
                       {"iso", d.iso == IsoClass::Isotropic ? "isotropic" : "anisotropic"},
                       {"q", d.q},
                       {"c", scalar_to_json(d.c)},
                       {"gated", d.gated}});
    }
    return {{"entry", entry.name},
            {"a_basis", entry.a_names()},
            {"direction", vec_to_json(sys.direction)},
            {"roots", roots},
            {"odd", odd},
            {"rho", vec_to_json(sys.rho)},
            {"rho0", vec_to_json(sys.rho0)},
            {"rho1", vec_to_json(sys.rho1)},
            {"weyl_order", entry.weyl.elements.size()}};
}

Json exact_sequence_to_json(const ExactSequenceReport& r) {
    return {{"degree", r.degree},
            {"dim_invariants", r.dim_invariants},
            {"dim_kernel", r.dim_kernel},
            {"dim_image", r.dim_image},
            {"weyl_invariant", r.weyl_invariant},
            {"in_J", r.in_J}};
}

Json report_to_json(const VerificationReport& r, bool with_timing) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"degree", row.degree},
                        {"dim_invariants", row.dim_invariants},
                        {"dim_kernel", row.dim_kernel},
                        {"dim_image", row.dim_image},
                        {"dim_J", row.dim_J},
                        {"dim_I", row.dim_I}});
    }
    Json out = {{"entry", r.entry},
                {"degree", r.degree},
                {"rows", rows},
                {"weyl_invariance", r.weyl_invariance},
                {"image_in_J", r.image_in_J},
                {"kernel_vanishes", r.kernel_vanishes},
                {"dims_match", r.dims_match},
                {"multiplicative", r.multiplicative},
                {"iwasawa", r.iwasawa},
                {"failures", r.failures}};
    if (with_timing) {
        out["seconds"] = r.seconds;
    }
    return out;
}

Json violations_to_json(const LieSuperalgebra& g, const ValidationReport& report) {
    Json out = Json::array();
    for (const auto& v : report) {
        out.push_back({{"kind", v.kind}, {"witness", v.witness}, {"detail", describe(g, v)}});
    }
    return out;
}

} // namespace hcsuper
