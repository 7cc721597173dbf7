#include "hcsuper/liesuper.hpp"

#include "hcsuper/errors.hpp"

#include <atomic>
#include <sstream>

namespace hcsuper {

namespace {

std::atomic<std::uint64_t> next_algebra_id{1};

int koszul(int a, int b) { return (a * b) % 2 == 0 ? 1 : -1; }

SparseVec scaled(const SparseVec& v, const Scalar& s) {
    SparseVec out;
    if (s.is_zero()) {
        return out;
    }
    for (const auto& [i, c] : v) {
        out.emplace(i, c * s);
    }
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// SuperVector

Scalar SuperVector::coeff(std::size_t i) const {
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Scalar(0) : it->second;
}

void SuperVector::check_same(const SuperVector& rhs) const {
    if (algebra_ != rhs.algebra_ && !coeffs_.empty() && !rhs.coeffs_.empty()) {
        throw MixedAlgebras("vectors belong to different algebras");
    }
}

SuperVector& SuperVector::operator+=(const SuperVector& rhs) {
    check_same(rhs);
    if (coeffs_.empty()) {
        algebra_ = rhs.algebra_;
    }
    axpy(coeffs_, Scalar(1), rhs.coeffs_);
    return *this;
}

SuperVector& SuperVector::operator-=(const SuperVector& rhs) {
    check_same(rhs);
    if (coeffs_.empty()) {
        algebra_ = rhs.algebra_;
    }
    axpy(coeffs_, Scalar(-1), rhs.coeffs_);
    return *this;
}

SuperVector operator*(const Scalar& s, SuperVector v) {
    v.coeffs_ = scaled(v.coeffs_, s);
    return v;
}

// ---------------------------------------------------------------------------
// Builder

LieSuperalgebra::Builder::Builder(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].parity != 0 && basis_[i].parity != 1) {
            throw ParseError("parity of '" + basis_[i].name + "' must be 0 or 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (basis_[j].name == basis_[i].name) {
                throw ParseError("duplicate basis name '" + basis_[i].name + "'");
            }
        }
    }
}

std::size_t LieSuperalgebra::Builder::index(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name == name) {
            return i;
        }
    }
    throw ParseError("unknown basis element '" + name + "'");
}

LieSuperalgebra::Builder& LieSuperalgebra::Builder::bracket(std::size_t i, std::size_t j, const SparseVec& out) {
    if (i >= basis_.size() || j >= basis_.size()) {
        throw DimensionMismatch("bracket index out of range");
    }
    for (const auto& [k, s] : out) {
        if (k >= basis_.size()) {
            throw DimensionMismatch("bracket output index out of range");
        }
    }
    declared_[{i, j}] = out;
    return *this;
}

LieSuperalgebra::Builder& LieSuperalgebra::Builder::bracket(const std::string& x, const std::string& y,
                                                            const std::vector<std::pair<std::string, Scalar>>& out) {
    SparseVec v;
    for (const auto& [name, s] : out) {
        axpy(v, s, SparseVec{{index(name), Scalar(1)}});
    }
    return bracket(index(x), index(y), v);
}

LieSuperalgebra::Builder& LieSuperalgebra::Builder::raw_bracket(std::size_t i, std::size_t j, const SparseVec& out) {
    if (i >= basis_.size() || j >= basis_.size()) {
        throw DimensionMismatch("bracket index out of range");
    }
    raw_[{i, j}] = out;
    return *this;
}

LieSuperalgebra::Builder& LieSuperalgebra::Builder::form(ScalarMatrix b) {
    if (b.rows() != basis_.size() || b.cols() != basis_.size()) {
        throw DimensionMismatch("form has wrong size");
    }
    form_ = std::move(b);
    return *this;
}

LieSuperalgebra::Builder& LieSuperalgebra::Builder::theta(ScalarMatrix t) {
    if (t.rows() != basis_.size() || t.cols() != basis_.size()) {
        throw DimensionMismatch("involution has wrong size");
    }
    theta_ = std::move(t);
    return *this;
}

LieSuperalgebra::Builder& LieSuperalgebra::Builder::certificate(DecompositionCertificate c) {
    certificate_ = std::move(c);
    return *this;
}

LieSuperalgebra LieSuperalgebra::Builder::build() const {
    LieSuperalgebra g;
    g.id_ = next_algebra_id++;
    g.basis_ = basis_;
    const std::size_t n = basis_.size();
    g.table_.assign(n * n, SparseVec{});
    for (const auto& [ij, out] : declared_) {
        const auto [i, j] = ij;
        g.table_[i * n + j] = out;
        if (i != j && declared_.count({j, i}) == 0) {
            g.table_[j * n + i] = scaled(out, Scalar(-koszul(basis_[i].parity, basis_[j].parity)));
        }
    }
    for (const auto& [ij, out] : raw_) {
        g.table_[ij.first * n + ij.second] = out;
    }
    g.declared_ = declared_;
    for (const auto& [ij, out] : raw_) {
        g.declared_[ij] = out;
    }
    g.form_ = form_;
    g.theta_ = theta_;
    g.certificate_ = certificate_;
    return g;
}

// ---------------------------------------------------------------------------
// LieSuperalgebra

std::size_t LieSuperalgebra::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name == name) {
            return i;
        }
    }
    throw ParseError("unknown basis element '" + name + "'");
}

std::optional<int> LieSuperalgebra::parity_of(const SparseVec& v) const {
    std::optional<int> p;
    for (const auto& [i, s] : v) {
        if (p && *p != parity(i)) {
            return std::nullopt;
        }
        p = parity(i);
    }
    return p.value_or(0);
}

SparseVec LieSuperalgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, a] : x) {
        for (const auto& [j, c] : y) {
            axpy(out, a * c, bracket_basis(i, j));
        }
    }
    return out;
}

SuperVector LieSuperalgebra::bracket(const SuperVector& x, const SuperVector& y) const {
    if ((!x.is_zero() && x.algebra() != id_) || (!y.is_zero() && y.algebra() != id_)) {
        throw MixedAlgebras("bracket of vectors from different algebras");
    }
    return SuperVector(id_, bracket(x.coeffs(), y.coeffs()));
}

SuperVector LieSuperalgebra::element(const std::string& name) const { return unit(index_of(name)); }

ScalarMatrix LieSuperalgebra::ad_matrix(const SparseVec& x) const {
    ScalarMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        for (const auto& [i, s] : bracket(x, SparseVec{{j, Scalar(1)}})) {
            m.set(i, j, s);
        }
    }
    return m;
}

const ScalarMatrix& LieSuperalgebra::form() const {
    if (!form_) {
        throw MissingForm("algebra has no invariant form");
    }
    return *form_;
}

Scalar LieSuperalgebra::b(const SparseVec& x, const SparseVec& y) const {
    const auto& m = form();
    Scalar acc;
    for (const auto& [i, a] : x) {
        for (const auto& [j, c] : y) {
            const Scalar e = m.at(i, j);
            if (!e.is_zero()) {
                acc += a * e * c;
            }
        }
    }
    return acc;
}

Scalar LieSuperalgebra::b(const SuperVector& x, const SuperVector& y) const {
    if ((!x.is_zero() && x.algebra() != id_) || (!y.is_zero() && y.algebra() != id_)) {
        throw MixedAlgebras("form evaluated on vectors from different algebras");
    }
    return b(x.coeffs(), y.coeffs());
}

const ScalarMatrix& LieSuperalgebra::theta() const {
    if (!theta_) {
        throw MissingInvolution("algebra has no involution");
    }
    return *theta_;
}

SparseVec LieSuperalgebra::apply_theta(const SparseVec& x) const { return theta().apply(x); }

Scalar LieSuperalgebra::b_theta(const SparseVec& x, const SparseVec& y) const {
    (void)form();
    return b(x, apply_theta(y));
}

Scalar LieSuperalgebra::b_theta(const SuperVector& x, const SuperVector& y) const {
    if ((!x.is_zero() && x.algebra() != id_) || (!y.is_zero() && y.algebra() != id_)) {
        throw MixedAlgebras("form evaluated on vectors from different algebras");
    }
    return b_theta(x.coeffs(), y.coeffs());
}

LieSuperalgebra LieSuperalgebra::change_basis(const Subspace& new_basis, const std::vector<std::string>& names) const {
    const std::size_t n = dim();
    if (new_basis.size() != n || names.size() != n) {
        throw DimensionMismatch("new basis must have " + std::to_string(n) + " vectors and names");
    }
    Echelon span;
    std::vector<BasisElement> elems;
    for (std::size_t i = 0; i < n; ++i) {
        auto p = parity_of(new_basis[i]);
        if (!p || new_basis[i].empty()) {
            throw InvalidAlgebra("basis vector '" + names[i] + "' is zero or not homogeneous");
        }
        if (!span.insert(new_basis[i])) {
            throw InvalidAlgebra("new basis vectors are linearly dependent");
        }
        elems.push_back({names[i], *p});
    }
    auto coords = [&](const SparseVec& v) { return *span.coordinates(v); };
    Builder builder(elems);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            builder.bracket(i, j, coords(bracket(new_basis[i], new_basis[j])));
        }
    }
    if (form_) {
        ScalarMatrix b2(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                b2.set(i, j, b(new_basis[i], new_basis[j]));
            }
        }
        builder.form(std::move(b2));
    }
    if (theta_) {
        ScalarMatrix t2(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [i, s] : coords(apply_theta(new_basis[j]))) {
                t2.set(i, j, s);
            }
        }
        builder.theta(std::move(t2));
    }
    if (certificate_) {
        DecompositionCertificate c;
        for (const auto& v : certificate_->center) {
            c.center.push_back(coords(v));
        }
        for (const auto& ideal : certificate_->ideals) {
            Subspace sub;
            for (const auto& v : ideal) {
                sub.push_back(coords(v));
            }
            c.ideals.push_back(std::move(sub));
        }
        builder.certificate(std::move(c));
    }
    return builder.build();
}

// ---------------------------------------------------------------------------
// validation

namespace {

void check_certificate(const LieSuperalgebra& g, const DecompositionCertificate& cert, ValidationReport& out) {
    const std::size_t n = g.dim();
    for (std::size_t c = 0; c < cert.center.size(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!g.bracket(SparseVec{{i, Scalar(1)}}, cert.center[c]).empty()) {
                out.push_back({"certificate_center", {c, i}, "declared central vector does not commute"});
                break;
            }
        }
    }
    Subspace all = cert.center;
    for (std::size_t t = 0; t < cert.ideals.size(); ++t) {
        const auto& ideal = cert.ideals[t];
        Echelon span;
        for (const auto& v : ideal) {
            span.insert(v);
        }
        bool closed = true;
        for (std::size_t i = 0; i < n && closed; ++i) {
            for (std::size_t v = 0; v < ideal.size(); ++v) {
                if (!span.contains(g.bracket(SparseVec{{i, Scalar(1)}}, ideal[v]))) {
                    out.push_back({"certificate_ideal", {t, i, v}, "declared ideal is not stable under ad"});
                    closed = false;
                    break;
                }
            }
        }
        if (g.has_form()) {
            ScalarMatrix gram(ideal.size(), ideal.size());
            for (std::size_t a = 0; a < ideal.size(); ++a) {
                for (std::size_t c = 0; c < ideal.size(); ++c) {
                    gram.set(a, c, g.b(ideal[a], ideal[c]));
                }
            }
            if (rank(gram) != span.rank()) {
                out.push_back({"certificate_degenerate", {t}, "form is degenerate on declared ideal"});
            }
        }
        all.insert(all.end(), ideal.begin(), ideal.end());
    }
    if (all.size() != n || span_dim(all) != n) {
        out.push_back({"certificate_sum", {}, "declared pieces do not form a direct sum equal to g"});
    }
}

} // namespace

ValidationReport verify_algebra(const LieSuperalgebra& g) {
    ValidationReport out;
    const std::size_t n = g.dim();
    auto e = [](std::size_t i) { return SparseVec{{i, Scalar(1)}}; };

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            SparseVec sum = g.bracket_basis(i, j);
            axpy(sum, Scalar(koszul(g.parity(i), g.parity(j))), g.bracket_basis(j, i));
            if (!sum.empty()) {
                out.push_back({"antisymmetry", {j, i}, "[x,y] != -(-1)^{|x||y|}[y,x]"});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k, s] : g.bracket_basis(i, j)) {
                if (g.parity(k) != (g.parity(i) + g.parity(j)) % 2) {
                    out.push_back({"parity", {i, j}, "bracket output has wrong parity"});
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const int pi = g.parity(i);
                const int pj = g.parity(j);
                const int pk = g.parity(k);
                SparseVec sum;
                axpy(sum, Scalar(koszul(pi, pk)), g.bracket(e(i), g.bracket_basis(j, k)));
                axpy(sum, Scalar(koszul(pj, pi)), g.bracket(e(j), g.bracket_basis(k, i)));
                axpy(sum, Scalar(koszul(pk, pj)), g.bracket(e(k), g.bracket_basis(i, j)));
                if (!sum.empty()) {
                    out.push_back({"jacobi", {i, j, k}, "graded Jacobi identity fails"});
                }
            }
        }
    }
    if (g.has_form()) {
        const auto& b = g.form();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (g.parity(i) != g.parity(j) && !b.at(i, j).is_zero()) {
                    out.push_back({"form_even", {i, j}, "form pairs opposite parities"});
                }
                if (b.at(i, j) != Scalar(koszul(g.parity(i), g.parity(j))) * b.at(j, i)) {
                    out.push_back({"form_supersymmetric", {i, j}, "b(x,y) != (-1)^{|x||y|} b(y,x)"});
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (g.b(g.bracket_basis(i, j), e(k)) != g.b(e(i), g.bracket_basis(j, k))) {
                        out.push_back({"form_invariant", {i, j, k}, "b([x,y],z) != b(x,[y,z])"});
                    }
                }
            }
        }
        if (rank(b) != n) {
            out.push_back({"form_nondegenerate", {}, "form is degenerate"});
        }
    }
    if (g.has_theta()) {
        const auto& t = g.theta();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (g.parity(i) != g.parity(j) && !t.at(i, j).is_zero()) {
                    out.push_back({"theta_even", {i, j}, "involution does not preserve parity"});
                }
            }
        }
        if (t * t != ScalarMatrix::identity(n)) {
            out.push_back({"theta_involution", {}, "theta^2 != id"});
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (g.apply_theta(g.bracket_basis(i, j)) != g.bracket(g.apply_theta(e(i)), g.apply_theta(e(j)))) {
                    out.push_back({"theta_automorphism", {i, j}, "theta[x,y] != [theta x, theta y]"});
                }
                if (g.has_form() && g.b(g.apply_theta(e(i)), g.apply_theta(e(j))) != g.form().at(i, j)) {
                    out.push_back({"theta_form", {i, j}, "form is not theta-invariant"});
                }
            }
        }
    }
    if (g.certificate()) {
        check_certificate(g, *g.certificate(), out);
    }
    return out;
}

std::string describe(const LieSuperalgebra& g, const Violation& v) {
    std::ostringstream os;
    os << v.kind;
    if (!v.witness.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            const std::size_t w = v.witness[i];
            os << (i ? "," : "") << (v.kind.rfind("certificate", 0) == 0 || w >= g.dim() ? std::to_string(w) : g.name(w));
        }
        os << ")";
    }
    os << ": " << v.detail;
    return os.str();
}

void require_valid(const LieSuperalgebra& g) {
    const auto report = verify_algebra(g);
    if (report.empty()) {
        return;
    }
    std::string msg = "invalid algebra: " + describe(g, report.front());
    if (report.size() > 1) {
        msg += " (and " + std::to_string(report.size() - 1) + " more)";
    }
    throw InvalidAlgebra(msg);
}

// ---------------------------------------------------------------------------
// subspaces

Subspace whole_space(const LieSuperalgebra& g) {
    Subspace out;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        out.push_back(SparseVec{{i, Scalar(1)}});
    }
    return out;
}

Subspace span_basis(const Subspace& vectors) {
    Echelon e;
    Subspace out;
    for (const auto& v : vectors) {
        if (e.insert(v)) {
            out.push_back(v);
        }
    }
    return out;
}

std::size_t span_dim(const Subspace& vectors) {
    Echelon e;
    for (const auto& v : vectors) {
        e.insert(v);
    }
    return e.rank();
}

ThetaSplit theta_eigenspaces(const LieSuperalgebra& g) {
    const auto& t = g.theta();
    const std::size_t n = g.dim();
    const auto id = ScalarMatrix::identity(n);
    ThetaSplit out;
    out.k = nullspace_sparse(n, (t - id).sparse_rows());
    out.p = nullspace_sparse(n, (t + id).sparse_rows());
    if (out.k.size() + out.p.size() != n) {
        throw InvalidAlgebra("theta is not diagonalizable with eigenvalues +-1");
    }
    Echelon ks;
    Echelon ps;
    for (const auto& v : out.k) {
        ks.insert(v);
    }
    for (const auto& v : out.p) {
        ps.insert(v);
    }
    for (const auto& x : out.k) {
        for (const auto& y : out.k) {
            if (!ks.contains(g.bracket(x, y))) {
                throw InvalidAlgebra("[k,k] is not contained in k");
            }
        }
        for (const auto& y : out.p) {
            if (!ps.contains(g.bracket(x, y))) {
                throw InvalidAlgebra("[k,p] is not contained in p");
            }
        }
    }
    for (const auto& x : out.p) {
        for (const auto& y : out.p) {
            if (!ks.contains(g.bracket(x, y))) {
                throw InvalidAlgebra("[p,p] is not contained in k");
            }
        }
    }
    return out;
}

Subspace centralizer(const LieSuperalgebra& g, const Subspace& s, const Subspace& within) {
    // unknown coefficients c_t with sum_t c_t [s, w_t] = 0 for every s
    std::vector<SparseVec> rows;
    for (const auto& x : s) {
        std::vector<SparseVec> block(g.dim());
        for (std::size_t t = 0; t < within.size(); ++t) {
            for (const auto& [i, c] : g.bracket(x, within[t])) {
                block[i].emplace(t, c);
            }
        }
        for (auto& r : block) {
            if (!r.empty()) {
                rows.push_back(std::move(r));
            }
        }
    }
    Subspace out;
    for (const auto& sol : nullspace_sparse(within.size(), rows)) {
        SparseVec y;
        for (const auto& [t, c] : sol) {
            axpy(y, c, within[t]);
        }
        out.push_back(std::move(y));
    }
    return span_basis(out);
}

Subspace centralizer(const LieSuperalgebra& g, const std::vector<SuperVector>& s, const Subspace& within) {
    Subspace raw;
    for (const auto& v : s) {
        if (!v.is_zero() && v.algebra() != g.id()) {
            throw MixedAlgebras("centralizer of a vector from a different algebra");
        }
        raw.push_back(v.coeffs());
    }
    return centralizer(g, raw, within);
}

DerivedAndCenter derived_and_center(const LieSuperalgebra& g) {
    DerivedAndCenter out;
    Subspace brackets;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i; j < g.dim(); ++j) {
            if (!g.bracket_basis(i, j).empty()) {
                brackets.push_back(g.bracket_basis(i, j));
            }
        }
    }
    out.derived = span_basis(brackets);
    out.center = centralizer(g, whole_space(g), whole_space(g));
    return out;
}

} // namespace hcsuper
