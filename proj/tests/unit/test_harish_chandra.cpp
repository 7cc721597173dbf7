#include "hcsuper/algebras.hpp"
#include "hcsuper/errors.hpp"
#include "hcsuper/harish_chandra.hpp"
#include "hcsuper/invariant_rings.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace hcsuper;

namespace hcsuper {
void PrintTo(const APolynomial& p, std::ostream* os) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        names.push_back("x" + std::to_string(i));
    }
    *os << p.to_string(names);
}
} // namespace hcsuper

namespace {

struct Setup {
    std::shared_ptr<HarishChandra> hc;
    WeylGroup weyl;
};

Setup group_setup(const LieSuperalgebra& g0) {
    auto g = std::make_shared<const LieSuperalgebra>(make_group_type(g0));
    auto pair = build_pair(g, {SparseVec{{g->index_of("h-"), Scalar(1)}}});
    auto sys = restricted_roots(pair);
    auto w = even_weyl_group(sys);
    return {std::make_shared<HarishChandra>(pair, sys), w};
}

struct RankOne {
    RankOneModel model;
    std::shared_ptr<HarishChandra> hc;
    WeylGroup weyl;
};

RankOne rank_one(std::size_t q, IsoClass iso = IsoClass::Anisotropic) {
    RankOne r{build_rank_one_model(q, iso, iso == IsoClass::Anisotropic ? Scalar(1) : Scalar(0)), nullptr, {}};
    auto pair = build_pair(r.model.algebra, r.model.a_basis());
    auto sys = restricted_roots(pair);
    r.weyl = even_weyl_group(sys);
    r.hc = std::make_shared<HarishChandra>(pair, sys);
    return r;
}

APolynomial x(long c = 1) { return Scalar(c) * APolynomial::variable(1, 0); }
APolynomial one(long c = 1) { return APolynomial::constant(1, Scalar(c)); }

// independent span test over PBW monomials
bool in_span(const std::vector<UEAElement>& basis, const UEAElement& u) {
    std::map<Monomial, std::size_t, MonomialLess> ids;
    auto vec = [&](const UEAElement& e) {
        SparseVec v;
        for (const auto& [m, c] : e.terms()) {
            v[ids.emplace(m, ids.size()).first->second] = c;
        }
        return v;
    };
    Echelon span;
    for (const auto& b : basis) {
        span.insert(vec(b));
    }
    return span.contains(vec(u));
}

} // namespace

TEST(HarishChandra, TrivialProjections) {
    auto s = group_setup(make_sl2());
    const auto& hc = *s.hc;
    const auto& env = hc.original();
    EXPECT_EQ(hc.project_to_a(env.one()), one());
    EXPECT_EQ(hc.gamma(env.one()), one());
    const auto h = env.generator(hc.pair().g->index_of("h-"));
    EXPECT_EQ(hc.project_to_a(h), x());
    // rho(h-) = 2
    EXPECT_EQ(hc.gamma(h), x() + one(2));
}

TEST(HarishChandra, OrderNotIwasawa) {
    auto s = group_setup(make_sl2());
    const auto& hc = *s.hc;
    EXPECT_THROW(project_to_a(hc.ank(), hc.ank().one()), OrderNotIwasawa);
    EXPECT_THROW(project_to_a(hc.original(), hc.original().one()), OrderNotIwasawa);
    EXPECT_NO_THROW(project_to_a(hc.kan(), hc.kan().one()));
}

TEST(HarishChandra, TransportRoundTrip) {
    auto s = group_setup(make_osp12());
    const auto& hc = *s.hc;
    const auto& env = hc.original();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        UEAElement u = env.zero();
        for (int t = 0; t < 3; ++t) {
            std::vector<std::size_t> word;
            for (int i = 0; i < 3; ++i) {
                word.push_back(rng() % env.algebra().dim());
            }
            u += Scalar(static_cast<long>(rng() % 5) - 2) * env.word_product(word);
        }
        EXPECT_EQ(hc.to_original(hc.transport(u)), u);
    }
}

TEST(HarishChandra, RankOneP2) {
    for (long q : {1L, 2L}) {
        auto r = rank_one(static_cast<std::size_t>(q));
        const auto p2 = r.hc->beta(generators(r.model)[0]);
        EXPECT_EQ(r.hc->project_to_a(p2), x().pow(2) + x(2 * q)) << "q = " << q;
        EXPECT_EQ(r.hc->gamma(p2), x().pow(2) - one(q * q)) << "q = " << q;
    }
}

// Hand reduction for q = 1: beta(a w wt) = a C / 2 + (-2 v wt + 2 vt w - w vt + wt v) / 6 with
// C = w wt - wt w; (a C)_a = 2a^2 + 2a, (w vt)_a = a and (wt v)_a = -a give beta(P3)_a = a^3 + 3a^2 + 2a.
TEST(HarishChandra, RankOneP3ByHand) {
    auto r = rank_one(1);
    const auto p3 = r.hc->beta(generators(r.model)[1]);
    EXPECT_EQ(r.hc->project_to_a(p3), x().pow(3) + x(3) * x() + x(2));
    EXPECT_EQ(r.hc->gamma(p3), x().pow(3) - x());
}

// Same projection read off in the N < A < K order with n the positive root spaces, where
// D - D_a lies in nU(g) + U(g)k.
TEST(HarishChandra, ConventionsAgreeOnSymmetrizedElements) {
    for (std::size_t q : {1U, 2U}) {
        auto r = rank_one(q);
        const auto& sys = r.hc->system();
        HarishChandra other(r.hc->pair(), sys, sys.n());
        const std::size_t k = other.k_dim();
        const std::size_t n = other.adapted().dim();
        std::vector<std::size_t> seq;
        std::vector<Block> tags(n, Block::N);
        for (std::size_t i = k + 1; i < n; ++i) {
            seq.push_back(i);
        }
        seq.push_back(k);
        tags[k] = Block::A;
        for (std::size_t i = 0; i < k; ++i) {
            seq.push_back(i);
            tags[i] = Block::K;
        }
        EnvelopingAlgebra nak(other.kan().algebra_ptr(), BasisOrder(seq, tags));
        for (const auto& p : generators(r.model)) {
            const UEAElement u = nak.convert(other.beta(p), other.kan());
            APolynomial da(1);
            for (const auto& [m, c] : u.terms()) {
                if (std::all_of(m.begin(), m.end(), [&](std::size_t i) { return tags[i] == Block::A; })) {
                    da.add_term(Exponent{static_cast<unsigned>(m.size())}, c);
                }
            }
            EXPECT_EQ(da.shift(sys.rho), r.hc->gamma(r.hc->beta(p))) << "q = " << q;
        }
    }
}

TEST(HarishChandra, LeftFactorInvariantIsMultiplicative) {
    // Gamma(L2 a) = Gamma(L2) (a + rho) since the invariant factor stands on the left
    auto r = rank_one(1);
    const auto& env = r.hc->kan();
    const auto l2 = r.hc->beta(generators(r.model)[0]);
    const auto a = r.hc->transport(r.hc->original().generator(r.model.a[0]));
    EXPECT_EQ(r.hc->gamma(env.multiply(l2, a)), (x().pow(2) - one()) * (x() - one()));
    EXPECT_FALSE(r.hc->in_right_ideal_k(env.multiply(a, l2) - r.hc->beta(generators(r.model)[1])));
}

TEST(Invariants, DegreeZero) {
    auto s = group_setup(make_osp12());
    const auto basis = s.hc->invariants(0);
    ASSERT_EQ(basis.invariants.size(), 1U);
    EXPECT_EQ(basis.invariants[0], Scalar(basis.invariants[0].coeff({})) * s.hc->kan().one());
    EXPECT_TRUE(basis.companion.empty());
}

TEST(Invariants, GroupSl2ContainsCasimir) {
    auto s = group_setup(make_sl2());
    const auto& hc = *s.hc;
    const auto& g = *hc.pair().g;
    const auto& env = hc.original();
    // (x, 0) = (x+ + x-) / 2 in the first factor
    auto first = [&](const std::string& name) {
        return g.element(SparseVec{{g.index_of(name + "+"), Scalar(1, 2)}, {g.index_of(name + "-"), Scalar(1, 2)}});
    };
    const auto e = first("e");
    const auto h = first("h");
    const auto f = first("f");
    const UEAElement casimir =
        env.normal_form({e, f}) + env.normal_form({f, e}) + Scalar(1, 2) * env.normal_form({h, h});
    // oracle: k = span{x+} annihilates it under the adjoint action of the original algebra
    for (const char* name : {"e+", "h+", "f+"}) {
        EXPECT_TRUE(env.adjoint(SparseVec{{g.index_of(name), Scalar(1)}}, casimir).is_zero());
    }
    const auto basis = hc.invariants(2);
    EXPECT_TRUE(in_span(basis.invariants, hc.transport(casimir)));
    for (const auto& d : basis.invariants) {
        EXPECT_TRUE(hc.is_invariant(d));
    }
    EXPECT_FALSE(in_span(basis.invariants, hc.transport(env.generator(g.index_of("h-")))));
}

TEST(Invariants, RankOneContainsP2) {
    auto r = rank_one(1);
    const auto basis = r.hc->invariants(2);
    EXPECT_TRUE(in_span(basis.invariants, r.hc->beta(generators(r.model)[0])));
}

TEST(Invariants, CompanionLiesInRightIdealAndKernel) {
    auto r = rank_one(1);
    const auto basis = r.hc->invariants(2);
    EXPECT_FALSE(basis.companion.empty());
    for (const auto& c : basis.companion) {
        EXPECT_TRUE(r.hc->in_right_ideal_k(c));
        EXPECT_TRUE(r.hc->is_invariant(c));
        EXPECT_TRUE(r.hc->gamma(c).is_zero());
    }
    EXPECT_FALSE(r.hc->in_right_ideal_k(r.hc->kan().one()));
}

TEST(ExactSequence, DegreeZero) {
    auto s = group_setup(make_sl2());
    const auto r = verify_exact_sequence(*s.hc, s.weyl, 0);
    EXPECT_EQ(r.dim_invariants, 1U);
    EXPECT_EQ(r.dim_kernel, 0U);
    EXPECT_EQ(r.dim_image, 1U);
    EXPECT_TRUE(r.exact);
}

TEST(ExactSequence, RankOneDegreeTwo) {
    auto r = rank_one(1);
    const auto rep = verify_exact_sequence(*r.hc, r.weyl, 2);
    EXPECT_TRUE(rep.exact);
    EXPECT_TRUE(rep.kernel_vanishes);
    EXPECT_TRUE(rep.in_J);
    EXPECT_EQ(rep.dim_image, 2U);
    const auto target = x().pow(2) - one(1);
    EXPECT_TRUE(r.hc->gamma_preimage(target, r.hc->invariants(2)).has_value());
    EXPECT_FALSE(r.hc->gamma_preimage(x(), r.hc->invariants(2)).has_value());
}

TEST(ExactSequence, GroupSl2MatchesEvenPolynomials) {
    auto s = group_setup(make_sl2());
    for (unsigned d = 0; d <= 3; ++d) {
        const auto r = verify_exact_sequence(*s.hc, s.weyl, d);
        EXPECT_TRUE(r.exact && r.kernel_vanishes && r.weyl_invariant && r.in_J) << d;
        EXPECT_EQ(r.dim_image, d / 2 + 1) << d;
    }
}

TEST(GrRestriction, Basics) {
    auto r = rank_one(1);
    const auto& hc = *r.hc;
    const auto a = SymElement::generator(r.model.a[0]);
    EXPECT_EQ(hc.gr_restriction(a), x());
    EXPECT_EQ(hc.gr_restriction(sym_power(*r.model.algebra, a, 3)), x().pow(3));
    EXPECT_TRUE(hc.gr_restriction(SymElement::generator(r.model.p_odd[0])).is_zero());
    EXPECT_TRUE(hc.gr_restriction(r.model.pairing_element()).is_zero());
}

TEST(Properties, DegreeDropOnCatalogPairs) {
    for (const auto& g0 : {make_sl2(), make_osp12()}) {
        auto s = group_setup(g0);
        const auto failures = check_degree_drop(*s.hc, 3);
        EXPECT_TRUE(failures.empty()) << failures.front();
    }
    auto r = rank_one(1);
    EXPECT_TRUE(check_degree_drop(*r.hc, 3).empty());
}

TEST(Properties, MultiplicativeAndWeylInvariant) {
    auto s = group_setup(make_osp12());
    const auto& hc = *s.hc;
    const auto basis = hc.invariants(2);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        const auto& d1 = basis.invariants[rng() % basis.invariants.size()];
        const auto& d2 = basis.invariants[rng() % basis.invariants.size()];
        EXPECT_EQ(hc.gamma(hc.kan().multiply(d1, d2)), hc.gamma(d1) * hc.gamma(d2));
    }
    for (const auto& d : basis.invariants) {
        const auto p = hc.gamma(d);
        EXPECT_TRUE(is_weyl_invariant(p, s.weyl));
    }
}

TEST(Properties, IsotropicGammaInI) {
    auto r = rank_one(1, IsoClass::Isotropic);
    const auto& datum = r.hc->system().odd.at(0);
    for (unsigned k = 0; k <= 3; ++k) {
        for (unsigned l = std::min(k, 1U); l <= 3; ++l) {
            const auto g = r.hc->gamma(r.hc->beta(p_kl(r.model, k, l)));
            EXPECT_TRUE(membership_I_lambda(g, datum)) << k << "," << l;
        }
    }
}

TEST(HarishChandra, TruncatedNRejected) {
    auto g = std::make_shared<const LieSuperalgebra>(make_group_type(make_osp12()));
    auto pair = build_pair(g, {SparseVec{{g->index_of("h-"), Scalar(1)}}});
    auto sys = restricted_roots(pair);
    auto n = sys.n();
    n.pop_back();
    EXPECT_THROW(HarishChandra(pair, sys, n), DimensionMismatch);
}
