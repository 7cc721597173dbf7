#include "hcsuper/invariant_rings.hpp"

#include "hcsuper/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace hcsuper {

namespace {

// Standard symplectic form on 2q coordinates: omega(i, q + i) = 1.
Scalar omega(std::size_t q, std::size_t s, std::size_t t) {
    if (s < q && t >= q && t - q == s) {
        return Scalar(1);
    }
    if (s >= q && t < q && s - q == t) {
        return Scalar(-1);
    }
    return Scalar(0);
}

// x -> omega(w, x) u + omega(u, x) w, flattened column-major as T(t, s) at s * 2q + t.
SparseVec sp_operator(std::size_t q, std::size_t u, std::size_t w) {
    const std::size_t n = 2 * q;
    SparseVec out;
    for (std::size_t s = 0; s < n; ++s) {
        axpy(out, omega(q, w, s), SparseVec{{s * n + u, Scalar(1)}});
        axpy(out, omega(q, u, s), SparseVec{{s * n + w, Scalar(1)}});
    }
    return out;
}

Scalar op_entry(const SparseVec& op, std::size_t n, std::size_t t, std::size_t s) {
    auto it = op.find(s * n + t);
    return it == op.end() ? Scalar(0) : it->second;
}

SparseVec op_commutator(const SparseVec& x, const SparseVec& y, std::size_t n) {
    SparseVec out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s;
            for (std::size_t k = 0; k < n; ++k) {
                s += op_entry(x, n, i, k) * op_entry(y, n, k, j) - op_entry(y, n, i, k) * op_entry(x, n, k, j);
            }
            if (!s.is_zero()) {
                out.emplace(j * n + i, s);
            }
        }
    }
    return out;
}

std::string index_name(const std::string& stem, std::size_t q, std::size_t s) {
    return s < q ? stem + std::to_string(s + 1) : stem + "t" + std::to_string(s - q + 1);
}

RankOneModel build_anisotropic(std::size_t q, const Scalar& c) {
    const std::size_t n = 2 * q;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i; j < q; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = i; j < q; ++j) {
            pairs.emplace_back(q + i, q + j);
        }
    }
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < q; ++j) {
            pairs.emplace_back(i, q + j);
        }
    }
    Echelon ops;
    std::vector<SparseVec> op_list;
    for (const auto& [u, w] : pairs) {
        op_list.push_back(sp_operator(q, u, w));
        if (!ops.insert(op_list.back())) {
            throw InconsistentRelations("brackets of odd k generators are dependent");
        }
    }
    auto in_m0 = [&](const SparseVec& op) {
        auto coords = ops.coordinates(op);
        if (!coords) {
            throw InconsistentRelations("operator outside the even part of k");
        }
        return *coords;
    };

    const std::size_t mdim = pairs.size();
    const std::size_t ia = mdim;
    auto iv = [&](std::size_t s) { return mdim + 1 + s; };
    auto iw = [&](std::size_t s) { return mdim + 1 + n + s; };

    std::vector<BasisElement> basis;
    for (const auto& [u, w] : pairs) {
        basis.push_back({"m_" + index_name("v", q, u) + "_" + index_name("v", q, w), 0});
    }
    basis.push_back({"a", 0});
    for (std::size_t s = 0; s < n; ++s) {
        basis.push_back({index_name("v", q, s), 1});
    }
    for (std::size_t s = 0; s < n; ++s) {
        basis.push_back({index_name("w", q, s), 1});
    }
    const std::size_t dim = basis.size();
    LieSuperalgebra::Builder builder(basis);

    for (std::size_t p = 0; p < mdim; ++p) {
        for (std::size_t r = p + 1; r < mdim; ++r) {
            builder.bracket(p, r, in_m0(op_commutator(op_list[p], op_list[r], n)));
        }
        for (std::size_t s = 0; s < n; ++s) {
            SparseVec on_v;
            SparseVec on_w;
            for (std::size_t t = 0; t < n; ++t) {
                const Scalar e = op_entry(op_list[p], n, t, s);
                if (!e.is_zero()) {
                    on_v.emplace(iv(t), e);
                    on_w.emplace(iw(t), e);
                }
            }
            builder.bracket(p, iv(s), on_v);
            builder.bracket(p, iw(s), on_w);
        }
    }
    for (std::size_t s = 0; s < n; ++s) {
        builder.bracket(ia, iv(s), SparseVec{{iw(s), Scalar(1)}});
        builder.bracket(ia, iw(s), SparseVec{{iv(s), Scalar(1)}});
        for (std::size_t t = s; t < n; ++t) {
            const SparseVec m = in_m0(sp_operator(q, s, t));
            builder.bracket(iv(s), iv(t), m);
            SparseVec neg;
            axpy(neg, Scalar(-1), m);
            builder.bracket(iw(s), iw(t), neg);
        }
        for (std::size_t t = 0; t < n; ++t) {
            const Scalar o = omega(q, s, t);
            builder.bracket(iv(s), iw(t), o.is_zero() ? SparseVec{} : SparseVec{{ia, -o}});
        }
    }

    const Scalar inv_c = c.inverse();
    std::vector<Vec> form(dim, Vec(dim));
    form[ia][ia] = inv_c;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            form[iv(s)][iv(t)] = omega(q, s, t) * inv_c;
            form[iw(s)][iw(t)] = -omega(q, s, t) * inv_c;
        }
    }
    // b([u, w], M) = -b(u, M w) by invariance
    for (std::size_t p = 0; p < mdim; ++p) {
        const auto [u, w] = pairs[p];
        for (std::size_t r = 0; r < mdim; ++r) {
            Scalar s;
            for (std::size_t t = 0; t < n; ++t) {
                s += omega(q, u, t) * op_entry(op_list[r], n, t, w);
            }
            form[p][r] = -s * inv_c;
        }
    }
    builder.form(ScalarMatrix::from_rows(form));

    auto theta = ScalarMatrix::identity(dim);
    theta.set(ia, ia, Scalar(-1));
    for (std::size_t s = 0; s < n; ++s) {
        theta.set(iw(s), iw(s), Scalar(-1));
    }
    builder.theta(theta);
    DecompositionCertificate cert;
    cert.ideals.push_back(whole_space(builder.build()));
    builder.certificate(cert);

    RankOneModel model;
    model.algebra = std::make_shared<const LieSuperalgebra>(builder.build());
    model.q = q;
    model.iso = IsoClass::Anisotropic;
    model.c = c;
    for (std::size_t p = 0; p < mdim; ++p) {
        model.m0.push_back(p);
    }
    model.a = {ia};
    for (std::size_t i = 0; i < q; ++i) {
        model.k_odd.push_back(iv(i));
        model.k_odd_tilde.push_back(iv(q + i));
        model.p_odd.push_back(iw(i));
        model.p_odd_tilde.push_back(iw(q + i));
    }
    return model;
}

RankOneModel build_isotropic(std::size_t q) {
    const std::size_t n = 2 * q;
    auto iy = [&](std::size_t s) { return 2 + s; };
    auto iz = [&](std::size_t s) { return 2 + n + s; };
    std::vector<BasisElement> basis{{"h0", 0}, {"A", 0}};
    for (std::size_t s = 0; s < n; ++s) {
        basis.push_back({index_name("y", q, s), 1});
    }
    for (std::size_t s = 0; s < n; ++s) {
        basis.push_back({index_name("z", q, s), 1});
    }
    const std::size_t dim = basis.size();
    LieSuperalgebra::Builder builder(basis);
    for (std::size_t s = 0; s < n; ++s) {
        builder.bracket(0, iy(s), SparseVec{{iz(s), Scalar(1)}});
        builder.bracket(0, iz(s), SparseVec{{iy(s), Scalar(1)}});
        for (std::size_t t = 0; t < n; ++t) {
            const Scalar o = omega(q, s, t);
            builder.bracket(iy(s), iz(t), o.is_zero() ? SparseVec{} : SparseVec{{1, -o}});
        }
    }
    std::vector<Vec> form(dim, Vec(dim));
    form[0][1] = Scalar(1);
    form[1][0] = Scalar(1);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
            form[iy(s)][iy(t)] = omega(q, s, t);
            form[iz(s)][iz(t)] = -omega(q, s, t);
        }
    }
    builder.form(ScalarMatrix::from_rows(form));
    auto theta = ScalarMatrix::identity(dim);
    theta.set(0, 0, Scalar(-1));
    theta.set(1, 1, Scalar(-1));
    for (std::size_t s = 0; s < n; ++s) {
        theta.set(iz(s), iz(s), Scalar(-1));
    }
    builder.theta(theta);

    RankOneModel model;
    model.algebra = std::make_shared<const LieSuperalgebra>(builder.build());
    model.q = q;
    model.iso = IsoClass::Isotropic;
    model.a = {0, 1};
    for (std::size_t i = 0; i < q; ++i) {
        model.k_odd.push_back(iy(i));
        model.k_odd_tilde.push_back(iy(q + i));
        model.p_odd.push_back(iz(i));
        model.p_odd_tilde.push_back(iz(q + i));
    }
    return model;
}

// Coordinates with respect to a new basis of a (columns over the old basis).
APolynomial to_adapted(const APolynomial& p, const std::vector<Vec>& basis) {
    const std::size_t r = basis.size();
    std::vector<Vec> rows(r, Vec(r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            rows[i][j] = basis[j][i];
        }
    }
    auto inv = inverse(ScalarMatrix::from_rows(rows));
    if (!inv) {
        throw DimensionMismatch("adapted basis of a is singular");
    }
    // old basis element a_i = sum_j inv(j, i) e'_j
    return p.linear_substitute(inv->transpose());
}

std::vector<Vec> adapted_basis(const OddRootDatum& d) {
    std::vector<Vec> basis;
    if (d.iso == IsoClass::Isotropic) {
        basis = {d.h0, d.A};
    } else {
        basis = {d.a};
    }
    basis.insert(basis.end(), d.a_perp.begin(), d.a_perp.end());
    return basis;
}

void check_in_sa(const APolynomial& p, const OddRootDatum& d) {
    if (p.nvars() != d.lambda.size()) {
        throw NotInSA("polynomial is not over the a basis of this root system");
    }
}

std::vector<long> key(std::initializer_list<long> head, const Exponent& e, std::size_t from = 0) {
    std::vector<long> k(head);
    for (std::size_t i = from; i < e.size(); ++i) {
        k.push_back(static_cast<long>(e[i]));
    }
    return k;
}

void merge(Obstruction& into, long tag, long sub, const Obstruction& part) {
    for (const auto& [k, s] : part) {
        std::vector<long> full{tag, sub};
        full.insert(full.end(), k.begin(), k.end());
        into.emplace(std::move(full), s);
    }
}

Obstruction combined(Space space, const APolynomial& p, const RestrictedRootSystem& system, const WeylGroup& w) {
    Obstruction out;
    if (space != Space::INoWeyl) {
        merge(out, 0, 0, obstruction_weyl(p, w));
    }
    if (space == Space::SW0) {
        return out;
    }
    for (std::size_t i = 0; i < system.odd.size(); ++i) {
        const auto& d = system.odd[i];
        if (d.gated) {
            continue;
        }
        merge(out, 1, static_cast<long>(i),
              space == Space::J ? obstruction_J_lambda(p, d) : obstruction_I_lambda(p, d));
    }
    return out;
}

std::vector<APolynomial> kernel_polynomials(std::size_t rank, unsigned degree,
                                            const std::function<Obstruction(const APolynomial&)>& obstruct) {
    const auto monomials = exponents_up_to(rank, degree);
    std::map<std::vector<long>, SparseVec> rows;
    for (std::size_t col = 0; col < monomials.size(); ++col) {
        for (const auto& [k, s] : obstruct(APolynomial::monomial(monomials[col]))) {
            rows[k].emplace(col, s);
        }
    }
    std::vector<SparseVec> row_list;
    for (auto& [k, r] : rows) {
        row_list.push_back(std::move(r));
    }
    std::vector<APolynomial> out;
    for (const auto& v : nullspace_sparse(monomials.size(), row_list)) {
        APolynomial p(rank);
        for (const auto& [col, s] : v) {
            p.add_term(monomials[col], s);
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

Subspace RankOneModel::a_basis() const {
    Subspace out;
    for (std::size_t i : a) {
        out.push_back(SparseVec{{i, Scalar(1)}});
    }
    return out;
}

SymElement RankOneModel::pairing_element() const {
    SymElement out;
    for (std::size_t i = 0; i < q; ++i) {
        out += sym_multiply(*algebra, SymElement::generator(p_odd[i]), SymElement::generator(p_odd_tilde[i]));
    }
    return out;
}

RankOneModel build_rank_one_model(std::size_t q, IsoClass iso, const Scalar& c) {
    if (q == 0) {
        throw DimensionMismatch("q must be positive");
    }
    if ((iso == IsoClass::Isotropic) != c.is_zero()) {
        throw BadIsoClass(iso == IsoClass::Isotropic ? "isotropic model needs c = 0"
                                                     : "anisotropic model needs c != 0");
    }
    RankOneModel model = iso == IsoClass::Isotropic ? build_isotropic(q) : build_anisotropic(q, c);
    const auto report = verify_algebra(*model.algebra);
    if (!report.empty()) {
        throw InconsistentRelations("rank-one relations violate " + describe(*model.algebra, report.front()));
    }
    return model;
}

Scalar coefficient_aNk(long n, long k) {
    Scalar total;
    for (long i = std::max(0L, k - n); i <= k - 1; ++i) {
        Scalar term(1);
        for (long j = 0; j < i; ++j) {
            term *= Scalar(-1, 2);
        }
        for (long f = n; f >= n - k + i + 1; --f) {
            term *= Scalar(f);
        }
        term *= factorial(static_cast<unsigned>(k - 1 + i)) /
                (factorial(static_cast<unsigned>(k - 1 - i)) * factorial(static_cast<unsigned>(i)));
        total += term;
    }
    return total;
}

std::vector<SymElement> generators(const RankOneModel& model) {
    if (model.iso != IsoClass::Anisotropic) {
        throw BadIsoClass("P2 and P_{2q+1} are defined for anisotropic models");
    }
    const auto& g = *model.algebra;
    const SymElement a = SymElement::generator(model.a[0]);
    const SymElement w = model.pairing_element();
    SymElement p2 = sym_multiply(g, a, a) + Scalar(2) * w;

    const long q = static_cast<long>(model.q);
    SymElement top;
    Scalar ck(1);
    for (long k = 0; k <= q; ++k) {
        top += ck * sym_multiply(g, sym_power(g, a, static_cast<unsigned>(2 * (q - k) + 1)),
                                 sym_power(g, w, static_cast<unsigned>(k)));
        ck = ck * Scalar(2 * q - 2 * k + 1) / Scalar(k + 1);
    }
    return {p2, top};
}

SymElement p_kl(const RankOneModel& model, unsigned k, unsigned l) {
    if (model.iso != IsoClass::Isotropic) {
        throw BadIsoClass("p_kl is defined for isotropic models");
    }
    const unsigned top = std::min<unsigned>(k, static_cast<unsigned>(model.q));
    if (l < top) {
        throw DimensionMismatch("p_kl needs l >= min(k, q)");
    }
    const auto& g = *model.algebra;
    const SymElement h0 = SymElement::generator(model.a[0]);
    const SymElement A = SymElement::generator(model.a[1]);
    const SymElement z = model.pairing_element();
    SymElement out;
    for (unsigned j = 0; j <= top; ++j) {
        out += binomial(k, j) * sym_multiply(g, sym_multiply(g, sym_power(g, h0, k - j), sym_power(g, A, l - j)),
                                             sym_power(g, z, j));
    }
    return out;
}

bool is_k_invariant(const RankOneModel& model, const SymElement& p) {
    const auto& g = *model.algebra;
    std::vector<std::size_t> ks = model.m0;
    ks.insert(ks.end(), model.k_odd.begin(), model.k_odd.end());
    ks.insert(ks.end(), model.k_odd_tilde.begin(), model.k_odd_tilde.end());
    return std::all_of(ks.begin(), ks.end(),
                       [&](std::size_t i) { return sym_adjoint(g, SparseVec{{i, Scalar(1)}}, p).is_zero(); });
}

Obstruction obstruction_I_lambda(const APolynomial& p, const OddRootDatum& d) {
    check_in_sa(p, d);
    Obstruction out;
    const auto basis = adapted_basis(d);
    if (d.iso == IsoClass::Anisotropic) {
        // no odd power of a below 2q + 1
        const APolynomial adapted = to_adapted(p, basis);
        for (const auto& [e, s] : adapted.terms()) {
            if (e[0] % 2 == 1 && e[0] < 2 * d.q + 1) {
                out.emplace(key({}, e), s);
            }
        }
        return out;
    }
    // A^j divides the j-th derivative along lambda, j = 1..q
    APolynomial deriv = p;
    for (std::size_t j = 1; j <= d.q; ++j) {
        deriv = deriv.directional_derivative(d.lambda);
        const APolynomial adapted = to_adapted(deriv, basis);
        for (const auto& [e, s] : adapted.terms()) {
            if (e[1] < j) {
                out.emplace(key({static_cast<long>(j)}, e), s);
            }
        }
    }
    return out;
}

Obstruction obstruction_J_lambda(const APolynomial& p, const OddRootDatum& d) {
    if (d.iso == IsoClass::Isotropic) {
        return obstruction_I_lambda(p, d);
    }
    check_in_sa(p, d);
    // f(a) = A(u) + B(u) a with u = a^2 - q^2; u^q must divide B.
    // a^{2m+1} = a (u + q^2)^m contributes binom(m, r) q^{2(m-r)} to u^r in B.
    Obstruction out;
    const Scalar q2(static_cast<long>(d.q * d.q));
    const APolynomial adapted = to_adapted(p, adapted_basis(d));
    for (const auto& [e, s] : adapted.terms()) {
        if (e[0] % 2 == 0) {
            continue;
        }
        const unsigned m = e[0] / 2;
        for (unsigned r = 0; r < d.q && r <= m; ++r) {
            Scalar c = s * binomial(m, r);
            for (unsigned t = r; t < m; ++t) {
                c *= q2;
            }
            auto k = key({static_cast<long>(r)}, e, 1);
            auto [it, inserted] = out.emplace(k, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) {
                    out.erase(it);
                }
            }
        }
    }
    return out;
}

Obstruction obstruction_weyl(const APolynomial& p, const WeylGroup& w) {
    Obstruction out;
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
        const APolynomial diff = weyl_act(w.elements[i], p) - p;
        for (const auto& [e, s] : diff.terms()) {
            out.emplace(key({static_cast<long>(i)}, e), s);
        }
    }
    return out;
}

bool membership_I_lambda(const APolynomial& p, const OddRootDatum& d) {
    return obstruction_I_lambda(p, d).empty();
}

bool membership_J_lambda(const APolynomial& p, const OddRootDatum& d) {
    return obstruction_J_lambda(p, d).empty();
}

bool is_weyl_invariant(const APolynomial& p, const WeylGroup& w) {
    return obstruction_weyl(p, w).empty();
}

bool membership(Space space, const APolynomial& p, const RestrictedRootSystem& system, const WeylGroup& w) {
    if (p.nvars() != system.rank()) {
        throw NotInSA("polynomial is not over the a basis of this root system");
    }
    return combined(space, p, system, w).empty();
}

bool membership_J(const APolynomial& p, const RestrictedRootSystem& system, const WeylGroup& w) {
    return membership(Space::J, p, system, w);
}

bool membership_I(const APolynomial& p, const RestrictedRootSystem& system, const WeylGroup& w) {
    return membership(Space::I, p, system, w);
}

std::vector<APolynomial> filtered_basis(Space space, const RestrictedRootSystem& system, const WeylGroup& w,
                                        unsigned d) {
    return kernel_polynomials(system.rank(), d,
                              [&](const APolynomial& p) { return combined(space, p, system, w); });
}

std::size_t filtered_dimension(Space space, const RestrictedRootSystem& system, const WeylGroup& w, unsigned d) {
    return filtered_basis(space, system, w, d).size();
}

std::size_t filtered_dimension_lambda(bool j_space, const OddRootDatum& d, std::size_t rank, unsigned degree) {
    return kernel_polynomials(rank, degree, [&](const APolynomial& p) {
               return j_space ? obstruction_J_lambda(p, d) : obstruction_I_lambda(p, d);
           }).size();
}

} // namespace hcsuper
