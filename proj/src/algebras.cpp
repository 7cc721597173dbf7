#include "hcsuper/algebras.hpp"

#include "hcsuper/errors.hpp"

namespace hcsuper {

LieSuperalgebra make_sl2() {
    LieSuperalgebra::Builder b({{"e", 0}, {"h", 0}, {"f", 0}});
    b.bracket("e", "h", {{"e", Scalar(-2)}});
    b.bracket("e", "f", {{"h", Scalar(1)}});
    b.bracket("h", "f", {{"f", Scalar(-2)}});
    ScalarMatrix form(3, 3);
    form.set(0, 2, Scalar(1));
    form.set(2, 0, Scalar(1));
    form.set(1, 1, Scalar(2));
    b.form(form);
    b.certificate({{}, {whole_space(b.build())}});
    return b.build();
}

LieSuperalgebra make_osp12() {
    LieSuperalgebra::Builder b({{"e", 0}, {"h", 0}, {"f", 0}, {"x", 1}, {"y", 1}});
    b.bracket("e", "h", {{"e", Scalar(-2)}});
    b.bracket("e", "f", {{"h", Scalar(1)}});
    b.bracket("h", "f", {{"f", Scalar(-2)}});
    b.bracket("h", "x", {{"x", Scalar(1)}});
    b.bracket("h", "y", {{"y", Scalar(-1)}});
    b.bracket("e", "y", {{"x", Scalar(-1)}});
    b.bracket("f", "x", {{"y", Scalar(-1)}});
    b.bracket("x", "x", {{"e", Scalar(2)}});
    b.bracket("y", "y", {{"f", Scalar(-2)}});
    b.bracket("x", "y", {{"h", Scalar(1)}});
    ScalarMatrix form(5, 5);
    form.set(0, 2, Scalar(1));
    form.set(2, 0, Scalar(1));
    form.set(1, 1, Scalar(2));
    form.set(3, 4, Scalar(2));
    form.set(4, 3, Scalar(-2));
    b.form(form);
    b.certificate({{}, {whole_space(b.build())}});
    return b.build();
}

LieSuperalgebra make_gl(std::size_t m, std::size_t n) {
    const std::size_t d = m + n;
    auto p = [m](std::size_t i) { return i < m ? 0 : 1; };
    auto idx = [d](std::size_t i, std::size_t j) { return i * d + j; };
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            basis.push_back({"E" + std::to_string(i + 1) + std::to_string(j + 1), (p(i) + p(j)) % 2});
        }
    }
    LieSuperalgebra::Builder b(basis);
    // [E_ij, E_kl] = d_jk E_il - (-1)^{|E_ij||E_kl|} d_li E_kj
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t l = 0; l < d; ++l) {
                    if (idx(i, j) > idx(k, l)) {
                        continue;
                    }
                    SparseVec out;
                    if (j == k) {
                        axpy(out, Scalar(1), SparseVec{{idx(i, l), Scalar(1)}});
                    }
                    if (l == i) {
                        const int sign = ((p(i) + p(j)) * (p(k) + p(l))) % 2 == 0 ? -1 : 1;
                        axpy(out, Scalar(sign), SparseVec{{idx(k, j), Scalar(1)}});
                    }
                    b.bracket(idx(i, j), idx(k, l), out);
                }
            }
        }
    }
    // b(E_ij, E_kl) = str(E_ij E_kl) = d_jk d_il (-1)^{p(i)}
    ScalarMatrix form(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            form.set(idx(i, j), idx(j, i), Scalar(p(i) == 0 ? 1 : -1));
        }
    }
    b.form(form);
    DecompositionCertificate cert;
    SparseVec identity;
    for (std::size_t i = 0; i < d; ++i) {
        identity.emplace(idx(i, i), Scalar(1));
    }
    cert.center.push_back(identity);
    Subspace ideal;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            if (i != j) {
                ideal.push_back(SparseVec{{idx(i, j), Scalar(1)}});
            }
        }
    }
    // supertraceless diagonal part, E_11 +- E_ii
    for (std::size_t i = 1; i < d; ++i) {
        ideal.push_back(SparseVec{{idx(0, 0), Scalar(1)}, {idx(i, i), Scalar(p(i) == p(0) ? -1 : 1)}});
    }
    cert.ideals.push_back(std::move(ideal));
    b.certificate(std::move(cert));
    return b.build();
}

LieSuperalgebra make_abelian(std::size_t dim) {
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < dim; ++i) {
        basis.push_back({"t" + std::to_string(i + 1), 0});
    }
    LieSuperalgebra::Builder b(basis);
    b.form(ScalarMatrix::identity(dim));
    b.theta(ScalarMatrix::identity(dim).scaled(Scalar(-1)));
    return b.build();
}

LieSuperalgebra make_group_type(const LieSuperalgebra& g0) {
    const std::size_t n = g0.dim();
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < n; ++i) {
        basis.push_back({g0.name(i) + "+", g0.parity(i)});
    }
    for (std::size_t i = 0; i < n; ++i) {
        basis.push_back({g0.name(i) + "-", g0.parity(i)});
    }
    auto shift = [](const SparseVec& v, std::size_t offset) {
        SparseVec out;
        for (const auto& [i, s] : v) {
            out.emplace(i + offset, s);
        }
        return out;
    };
    LieSuperalgebra::Builder b(basis);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const SparseVec& out = g0.bracket_basis(i, j);
            if (i <= j) {
                b.bracket(i, j, shift(out, 0));         // [x+, y+] = [x,y]+
                b.bracket(n + i, n + j, shift(out, 0)); // [x-, y-] = [x,y]+
            }
            b.bracket(i, n + j, shift(out, n)); // [x+, y-] = [x,y]-
        }
    }
    ScalarMatrix theta(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        theta.set(i, i, Scalar(1));
        theta.set(n + i, n + i, Scalar(-1));
    }
    b.theta(theta);
    if (g0.has_form()) {
        ScalarMatrix form(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar v = g0.form().at(i, j);
                form.set(i, j, v);
                form.set(n + i, n + j, v);
            }
        }
        b.form(form);
    }
    if (g0.certificate()) {
        DecompositionCertificate cert;
        for (const auto& z : g0.certificate()->center) {
            cert.center.push_back(shift(z, 0));
            cert.center.push_back(shift(z, n));
        }
        for (const auto& ideal : g0.certificate()->ideals) {
            // the copies (I, 0) and (0, I)
            Subspace left;
            Subspace right;
            for (const auto& v : ideal) {
                SparseVec l = shift(v, 0);
                axpy(l, Scalar(1), shift(v, n));
                SparseVec r = shift(v, 0);
                axpy(r, Scalar(-1), shift(v, n));
                left.push_back(std::move(l));
                right.push_back(std::move(r));
            }
            cert.ideals.push_back(std::move(left));
            cert.ideals.push_back(std::move(right));
        }
        b.certificate(std::move(cert));
    }
    return b.build();
}

} // namespace hcsuper
