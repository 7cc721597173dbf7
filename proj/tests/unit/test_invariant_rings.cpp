#include "hcsuper/errors.hpp"
#include "hcsuper/invariant_rings.hpp"

#include <gtest/gtest.h>

using namespace hcsuper;

namespace {

struct Model {
    RankOneModel model;
    SymmetricPair pair;
    RestrictedRootSystem system;
    WeylGroup weyl;
};

Model make(std::size_t q, IsoClass iso) {
    Model m{build_rank_one_model(q, iso, iso == IsoClass::Isotropic ? Scalar(0) : Scalar(1)), {}, {}, {}};
    m.pair = build_pair(m.model.algebra, m.model.a_basis());
    m.system = restricted_roots(m.pair);
    m.weyl = even_weyl_group(m.system);
    return m;
}

SparseVec unit(std::size_t i) { return SparseVec{{i, Scalar(1)}}; }

APolynomial x1(long c = 1) { return Scalar(c) * APolynomial::variable(1, 0); }
APolynomial one1(long c = 1) { return APolynomial::constant(1, Scalar(c)); }

// u = a^2 - q^2, v = (a - q) u^q
APolynomial u_of(long q) { return x1().pow(2) - one1(q * q); }
APolynomial v_of(long q) { return (x1() - one1(q)) * u_of(q).pow(static_cast<unsigned>(q)); }

} // namespace

TEST(RankOneModel, AnisotropicQ1Shape) {
    const auto m = build_rank_one_model(1, IsoClass::Anisotropic, Scalar(1));
    const auto& g = *m.algebra;
    EXPECT_TRUE(verify_algebra(g).empty());
    EXPECT_EQ(m.m0.size(), 3U);
    EXPECT_EQ(m.a.size(), 1U);
    EXPECT_EQ(m.k_odd.size() + m.k_odd_tilde.size(), 2U);
    EXPECT_EQ(m.p_odd.size() + m.p_odd_tilde.size(), 2U);
    EXPECT_EQ(g.dim(), 8U);
}

TEST(RankOneModel, AnisotropicRelations) {
    for (std::size_t q : {1U, 2U}) {
        const auto m = build_rank_one_model(q, IsoClass::Anisotropic, Scalar(1));
        const auto& g = *m.algebra;
        const auto a = unit(m.a[0]);
        for (std::size_t j = 0; j < q; ++j) {
            const auto v = unit(m.k_odd[j]);
            const auto vt = unit(m.k_odd_tilde[j]);
            const auto w = unit(m.p_odd[j]);
            const auto wt = unit(m.p_odd_tilde[j]);
            EXPECT_EQ(g.bracket(a, w), v);
            EXPECT_EQ(g.bracket(a, v), w);
            EXPECT_EQ(g.bracket(a, wt), vt);
            EXPECT_EQ(g.bracket(a, vt), wt);
            for (std::size_t k = 0; k < q; ++k) {
                const auto wk = unit(m.p_odd[k]);
                const auto wtk = unit(m.p_odd_tilde[k]);
                EXPECT_TRUE(g.bracket(v, wk).empty());
                EXPECT_TRUE(g.bracket(vt, wtk).empty());
                const SparseVec expected = j == k ? a : SparseVec{};
                EXPECT_EQ(g.bracket(vt, wk), expected);
                SparseVec neg;
                axpy(neg, Scalar(-1), g.bracket(v, wtk));
                EXPECT_EQ(neg, expected);
                // [y, y'] = -[z, z'] in normalized form
                SparseVec sum = g.bracket(v, unit(m.k_odd[k]));
                axpy(sum, Scalar(1), g.bracket(w, wk));
                EXPECT_TRUE(sum.empty());
            }
        }
        // [[v_i, v_j], vt_k] = delta_jk v_i + delta_ik v_j
        for (std::size_t i = 0; i < q; ++i) {
            for (std::size_t j = 0; j < q; ++j) {
                for (std::size_t k = 0; k < q; ++k) {
                    SparseVec expected;
                    if (j == k) {
                        axpy(expected, Scalar(1), unit(m.k_odd[i]));
                    }
                    if (i == k) {
                        axpy(expected, Scalar(1), unit(m.k_odd[j]));
                    }
                    const auto inner = g.bracket(unit(m.k_odd[i]), unit(m.k_odd[j]));
                    EXPECT_EQ(g.bracket(inner, unit(m.k_odd_tilde[k])), expected);
                    EXPECT_TRUE(g.bracket(inner, unit(m.k_odd[k])).empty());
                }
            }
        }
    }
}

TEST(RankOneModel, SymplecticBasisForQ2) {
    const auto m = build_rank_one_model(2, IsoClass::Anisotropic, Scalar(1));
    const auto& g = *m.algebra;
    for (std::size_t i = 0; i < 2; ++i) {
        SparseVec xi = unit(m.k_odd[i]);
        axpy(xi, Scalar(1), unit(m.p_odd[i]));
        SparseVec xti = unit(m.k_odd_tilde[i]);
        axpy(xti, Scalar(1), unit(m.p_odd_tilde[i]));
        for (std::size_t j = 0; j < 2; ++j) {
            SparseVec xj = unit(m.k_odd[j]);
            axpy(xj, Scalar(1), unit(m.p_odd[j]));
            SparseVec xtj = unit(m.k_odd_tilde[j]);
            axpy(xtj, Scalar(1), unit(m.p_odd_tilde[j]));
            EXPECT_EQ(g.b_theta(xi, xj), Scalar(0));
            EXPECT_EQ(g.b_theta(xti, xtj), Scalar(0));
            EXPECT_EQ(g.b_theta(xi, xtj), Scalar(i == j ? 2 : 0));
        }
    }
    const auto sys = restricted_roots(build_pair(m.algebra, m.a_basis()));
    ASSERT_EQ(sys.roots.size(), 2U);
    EXPECT_EQ(sys.roots[1].m1(), 4U);
}

TEST(RankOneModel, FormScalesWithC) {
    const auto m = build_rank_one_model(1, IsoClass::Anisotropic, Scalar(3));
    EXPECT_TRUE(verify_algebra(*m.algebra).empty());
    const auto sys = restricted_roots(build_pair(m.algebra, m.a_basis()));
    ASSERT_EQ(sys.odd.size(), 1U);
    EXPECT_EQ(sys.odd[0].c, Scalar(3));
    EXPECT_EQ(sys.odd[0].a, Vec{Scalar(1)});
}

TEST(RankOneModel, IsotropicQ1) {
    const auto m = build_rank_one_model(1, IsoClass::Isotropic, Scalar(0));
    const auto& g = *m.algebra;
    EXPECT_TRUE(verify_algebra(g).empty());
    EXPECT_EQ(m.a.size(), 2U);
    std::vector<std::size_t> ys{m.k_odd[0], m.k_odd_tilde[0]};
    for (auto i : ys) {
        for (auto j : ys) {
            for (auto k : ys) {
                EXPECT_TRUE(g.bracket(g.bracket(unit(i), unit(j)), unit(k)).empty());
            }
        }
    }
    EXPECT_EQ(g.bracket(unit(m.k_odd_tilde[0]), unit(m.p_odd[0])), unit(m.a[1]));
}

TEST(RankOneModel, BadIsoClass) {
    EXPECT_THROW(build_rank_one_model(1, IsoClass::Isotropic, Scalar(1)), BadIsoClass);
    EXPECT_THROW(build_rank_one_model(1, IsoClass::Anisotropic, Scalar(0)), BadIsoClass);
}

TEST(RankOneModel, RootsAndRho) {
    for (std::size_t q : {1U, 2U}) {
        for (auto iso : {IsoClass::Anisotropic, IsoClass::Isotropic}) {
            const auto m = make(q, iso);
            ASSERT_EQ(m.system.roots.size(), 2U);
            const auto& pos = m.system.roots[0].positive ? m.system.roots[0] : m.system.roots[1];
            EXPECT_EQ(pos.m0(), 0U);
            EXPECT_EQ(pos.m1(), 2 * q);
            for (std::size_t i = 0; i < m.system.rank(); ++i) {
                EXPECT_EQ(m.system.rho[i], Scalar(-static_cast<long>(q)) * pos.coords[i]);
            }
            EXPECT_EQ(rho_supertrace(m.pair, m.system), m.system.rho);
            ASSERT_EQ(m.system.odd.size(), 1U);
            EXPECT_EQ(m.system.odd[0].iso, iso);
            EXPECT_FALSE(m.system.odd[0].gated);
            EXPECT_TRUE(iwasawa_check(m.pair, m.system, 3).ok());
        }
    }
}

TEST(Coefficients, ANk) {
    EXPECT_EQ(coefficient_aNk(3, 1), Scalar(3));
    EXPECT_EQ(coefficient_aNk(5, 1), Scalar(5));
    EXPECT_EQ(coefficient_aNk(0, 1), Scalar(0));
    // two-term sum: N(N-1) - N
    EXPECT_EQ(coefficient_aNk(5, 2), Scalar(15));
}

TEST(Generators, Q1P3) {
    const auto m = build_rank_one_model(1, IsoClass::Anisotropic, Scalar(1));
    const auto& g = *m.algebra;
    const auto gens = generators(m);
    const auto a = SymElement::generator(m.a[0]);
    const auto w = m.pairing_element();
    EXPECT_EQ(gens[0], sym_multiply(g, a, a) + Scalar(2) * w);
    EXPECT_EQ(gens[1], sym_power(g, a, 3) + Scalar(3) * sym_multiply(g, a, w));
}

TEST(Generators, AreInvariant) {
    for (std::size_t q : {1U, 2U, 3U}) {
        const auto m = build_rank_one_model(q, IsoClass::Anisotropic, Scalar(1));
        for (const auto& p : generators(m)) {
            EXPECT_TRUE(is_k_invariant(m, p)) << "q = " << q;
        }
        EXPECT_FALSE(is_k_invariant(m, SymElement::generator(m.a[0])));
    }
}

TEST(Generators, IsotropicPkl) {
    const auto m = build_rank_one_model(1, IsoClass::Isotropic, Scalar(0));
    const auto& g = *m.algebra;
    const auto h0 = SymElement::generator(m.a[0]);
    const auto A = SymElement::generator(m.a[1]);
    const auto z = m.pairing_element();
    EXPECT_EQ(p_kl(m, 2, 1), sym_multiply(g, sym_power(g, h0, 2), A) + Scalar(2) * sym_multiply(g, h0, z));
    for (unsigned k = 0; k <= 3; ++k) {
        for (unsigned l = std::min(k, 1U); l <= 3; ++l) {
            EXPECT_TRUE(is_k_invariant(m, p_kl(m, k, l))) << k << "," << l;
        }
    }
    EXPECT_THROW(p_kl(m, 2, 0), DimensionMismatch);
    const auto m2 = build_rank_one_model(2, IsoClass::Isotropic, Scalar(0));
    EXPECT_TRUE(is_k_invariant(m2, p_kl(m2, 3, 2)));
}

TEST(Membership, AnisotropicQ1) {
    const auto m = make(1, IsoClass::Anisotropic);
    const auto& d = m.system.odd[0];
    EXPECT_TRUE(membership_I_lambda(one1(5), d));
    EXPECT_FALSE(membership_I_lambda(x1(), d));
    EXPECT_TRUE(membership_I_lambda(x1().pow(3), d));
    EXPECT_TRUE(membership_I_lambda(x1().pow(2), d));
    EXPECT_TRUE(membership_J_lambda(one1(), d));
    EXPECT_TRUE(membership_J_lambda(u_of(1), d));
    EXPECT_TRUE(membership_J_lambda(v_of(1), d));
    EXPECT_FALSE(membership_J_lambda(x1(), d));
    EXPECT_FALSE(membership_J_lambda(x1().pow(3), d));
    EXPECT_TRUE(membership_J(u_of(1), m.system, m.weyl));
    EXPECT_THROW(membership_J_lambda(APolynomial::variable(2, 0), d), NotInSA);
}

TEST(Membership, Isotropic) {
    const auto m1 = make(1, IsoClass::Isotropic);
    const auto& d1 = m1.system.odd[0];
    // a basis is (h0, A)
    auto mono = [](unsigned k, unsigned l) { return APolynomial::monomial(Exponent{k, l}); };
    EXPECT_TRUE(membership_I_lambda(mono(2, 1), d1));
    EXPECT_FALSE(membership_I_lambda(mono(2, 0), d1));
    EXPECT_TRUE(membership_I_lambda(mono(0, 0), d1));
    EXPECT_TRUE(membership_J_lambda(mono(3, 1), d1));

    const auto m2 = make(2, IsoClass::Isotropic);
    const auto& d2 = m2.system.odd[0];
    EXPECT_FALSE(membership_I_lambda(mono(2, 1), d2));
    EXPECT_TRUE(membership_I_lambda(mono(2, 2), d2));
    EXPECT_TRUE(membership_I_lambda(mono(1, 1), d2));
    EXPECT_FALSE(membership_I_lambda(mono(1, 0), d2));
}

TEST(FilteredDimension, RankOneAnisotropicQ1) {
    const auto m = make(1, IsoClass::Anisotropic);
    EXPECT_EQ(filtered_dimension(Space::J, m.system, m.weyl, 0), 1U);
    EXPECT_EQ(filtered_dimension(Space::J, m.system, m.weyl, 2), 2U);
    EXPECT_EQ(filtered_dimension(Space::I, m.system, m.weyl, 3), 3U);
}

TEST(FilteredDimension, MatchesSpanOfGeneratorProducts) {
    for (long q : {1L, 2L}) {
        const auto m = make(static_cast<std::size_t>(q), IsoClass::Anisotropic);
        const unsigned d = 7;
        // all u^i v^j of degree <= d
        std::vector<SparseVec> products;
        const auto monomials = exponents_up_to(1, d);
        for (unsigned i = 0; 2 * i <= d; ++i) {
            for (unsigned j = 0; 2 * i + (2 * q + 1) * j <= d; ++j) {
                const auto p = u_of(q).pow(i) * v_of(q).pow(j);
                SparseVec coords;
                for (std::size_t c = 0; c < monomials.size(); ++c) {
                    const auto s = p.coeff(monomials[c]);
                    if (!s.is_zero()) {
                        coords.emplace(c, s);
                    }
                }
                products.push_back(coords);
            }
        }
        EXPECT_EQ(filtered_dimension(Space::J, m.system, m.weyl, d), span_dim(products)) << "q = " << q;
    }
}

TEST(Properties, GrJEqualsIByDegree) {
    for (std::size_t q : {1U, 2U}) {
        for (auto iso : {IsoClass::Anisotropic, IsoClass::Isotropic}) {
            const auto m = make(q, iso);
            for (unsigned d = 0; d <= 6; ++d) {
                EXPECT_EQ(filtered_dimension(Space::J, m.system, m.weyl, d),
                          filtered_dimension(Space::I, m.system, m.weyl, d))
                    << "q = " << q << ", d = " << d;
            }
        }
    }
}

TEST(Properties, GeneratorRelation) {
    for (long q = 1; q <= 3; ++q) {
        const auto u = u_of(q);
        const auto v = v_of(q);
        const auto lhs = v.pow(2) + Scalar(2 * q) * u.pow(static_cast<unsigned>(q)) * v -
                         u.pow(static_cast<unsigned>(2 * q + 1));
        EXPECT_TRUE(lhs.is_zero()) << "q = " << q;
    }
}

TEST(Properties, GeneratorProductsStayInJ) {
    for (long q : {1L, 2L}) {
        const auto m = make(static_cast<std::size_t>(q), IsoClass::Anisotropic);
        const auto& d = m.system.odd[0];
        for (unsigned i = 0; 2 * i <= 8; ++i) {
            for (unsigned j = 0; 2 * i + (2 * q + 1) * j <= 8; ++j) {
                EXPECT_TRUE(membership_J_lambda(u_of(q).pow(i) * v_of(q).pow(j), d)) << i << "," << j;
            }
        }
    }
}

TEST(Properties, IsotropicShiftStability) {
    for (std::size_t q : {1U, 2U}) {
        const auto m = make(q, IsoClass::Isotropic);
        const auto& d = m.system.odd[0];
        for (unsigned k = 0; k <= 4; ++k) {
            for (unsigned l = std::min<unsigned>(k, static_cast<unsigned>(q)); l <= 4; ++l) {
                const auto p = APolynomial::monomial(Exponent{k, l});
                ASSERT_TRUE(membership_I_lambda(p, d));
                EXPECT_TRUE(membership_I_lambda(p.shift(d.lambda), d)) << k << "," << l;
                EXPECT_TRUE(membership_I_lambda(p.shift(Vec{Scalar(-3), Scalar(0)}), d));
            }
        }
    }
}
