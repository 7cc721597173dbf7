#include "hcsuper/errors.hpp"
#include "hcsuper/linalg.hpp"
#include "hcsuper/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hcsuper;

namespace {

Scalar random_scalar(std::mt19937& rng, bool allow_sqrt = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    Scalar s(num(rng), den(rng));
    if (allow_sqrt) {
        s += Scalar(mpq_class(0), mpq_class(num(rng), den(rng)), 2);
    }
    return s;
}

ScalarMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int zero_bias) {
    std::uniform_int_distribution<int> coin(0, zero_bias);
    ScalarMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            if (coin(rng) == 0) {
                m.set(i, j, random_scalar(rng));
            }
        }
    }
    return m;
}

// Oracle: plain row-by-row dot product.
bool annihilates(const ScalarMatrix& m, const Vec& v) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar acc;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            acc += m.at(i, j) * v[j];
        }
        if (!acc.is_zero()) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(Scalar, CanonicalText) {
    EXPECT_EQ(Scalar(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Scalar(4, 2).to_string(), "2");
    const Scalar s = Scalar(1, 2) + Scalar(mpq_class(0), mpq_class(-3, 4), 5);
    EXPECT_EQ(s.to_string(), "1/2-3/4*sqrt(5)");
    EXPECT_EQ(Scalar::parse(s.to_string()), s);
    EXPECT_EQ(Scalar::parse("sqrt(3)"), Scalar::sqrt_of(3));
    EXPECT_EQ(Scalar::parse("-sqrt(3)"), -Scalar::sqrt_of(3));
    EXPECT_EQ(Scalar::parse("2-sqrt(3)"), Scalar(2) - Scalar::sqrt_of(3));
    EXPECT_EQ(Scalar::parse("-7/3"), Scalar(-7, 3));
    EXPECT_THROW(Scalar::parse("1/0"), ParseError);
    EXPECT_THROW(Scalar::parse("abc"), ParseError);
    EXPECT_THROW(Scalar::parse("sqrt(4)"), ParseError);
}

TEST(Scalar, SqrtArithmetic) {
    const Scalar r = Scalar::sqrt_of(2);
    EXPECT_EQ(r * r, Scalar(2));
    EXPECT_TRUE((r * r).is_rational());
    EXPECT_EQ((Scalar(1) + r) * (Scalar(1) + r).inverse(), Scalar(1));
    EXPECT_THROW(r + Scalar::sqrt_of(3), ContextMismatch);
    EXPECT_THROW((void)r.to_rational(), ContextMismatch);
    // a rational combines with any context
    EXPECT_NO_THROW(Scalar::sqrt_of(3) + Scalar(1, 2));
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
    std::mt19937 rng(7);
    for (int t = 0; t < 300; ++t) {
        const Scalar a = random_scalar(rng, true);
        const Scalar b = random_scalar(rng, true);
        const Scalar c = random_scalar(rng, true);
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        if (!b.is_zero()) {
            EXPECT_EQ((a / b) * b, a);
        }
    }
}

TEST(Scalar, FactorialAndBinomial) {
    EXPECT_EQ(factorial(5), Scalar(120));
    EXPECT_EQ(binomial(6, 2), Scalar(15));
    EXPECT_EQ(binomial(2, 3), Scalar(0));
}

TEST(Nullspace, Identity) { EXPECT_TRUE(nullspace(ScalarMatrix::identity(2)).empty()); }

TEST(Nullspace, ZeroMatrix) {
    const auto ns = nullspace(ScalarMatrix(2, 2));
    ASSERT_EQ(ns.size(), 2U);
    EXPECT_EQ(ns[0], (Vec{Scalar(1), Scalar(0)}));
    EXPECT_EQ(ns[1], (Vec{Scalar(0), Scalar(1)}));
}

TEST(Nullspace, RankOneTwoByTwo) {
    const auto m = ScalarMatrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}});
    const auto ns = nullspace(m);
    ASSERT_EQ(ns.size(), 1U);
    EXPECT_TRUE(annihilates(m, ns[0]));
    // proportional to (-2, 1)
    EXPECT_EQ(ns[0][0], Scalar(-2) * ns[0][1]);
}

TEST(Nullspace, RankNullityOnRandomMatrices) {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        const std::size_t r = 1 + rng() % 8;
        const std::size_t c = 1 + rng() % 8;
        const auto m = random_matrix(rng, r, c, 2);
        const auto ns = nullspace(m);
        EXPECT_EQ(rank(m) + ns.size(), c);
        for (const auto& v : ns) {
            EXPECT_TRUE(annihilates(m, v));
        }
        EXPECT_EQ(rank(ScalarMatrix::from_rows(ns.empty() ? std::vector<Vec>{} : ns)), ns.size());
    }
}

TEST(Nullspace, SparseStorageAboveThreshold) {
    std::mt19937 rng(3);
    const auto m = random_matrix(rng, 70, 90, 20);
    EXPECT_FALSE(m.is_dense());
    EXPECT_TRUE(ScalarMatrix(3, 3).is_dense());
    const auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), 90U);
    for (const auto& v : ns) {
        EXPECT_TRUE(annihilates(m, v));
    }
}

TEST(SolveMembership, TrivialCases) {
    const std::vector<Vec> basis{{Scalar(1), Scalar(2), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)}};
    EXPECT_EQ(*solve_membership(basis[0], basis), (Vec{Scalar(1), Scalar(0)}));
    EXPECT_EQ(*solve_membership(Vec(3), basis), (Vec{Scalar(0), Scalar(0)}));
    EXPECT_FALSE(solve_membership(Vec{Scalar(0), Scalar(0), Scalar(1)}, basis).has_value());
}

TEST(SolveMembership, RoundTripConstruction) {
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        Vec b1(5);
        Vec b2(5);
        for (auto& s : b1) {
            s = random_scalar(rng);
        }
        for (auto& s : b2) {
            s = random_scalar(rng);
        }
        if (rank(ScalarMatrix::from_rows({b1, b2})) < 2) {
            continue;
        }
        Vec v(5);
        for (std::size_t i = 0; i < 5; ++i) {
            v[i] = Scalar(2) * b1[i] - Scalar(3) * b2[i];
        }
        EXPECT_EQ(*solve_membership(v, {b1, b2}), (Vec{Scalar(2), Scalar(-3)}));
    }
}

TEST(Intersection, CoordinatePlanes) {
    // span{e0,e1} and span{e1,e2} meet in span{e1}
    const auto w = intersect_spans(3, {{{0, Scalar(1)}}, {{1, Scalar(1)}}}, {{{1, Scalar(1)}}, {{2, Scalar(1)}}});
    ASSERT_EQ(w.size(), 1U);
    EXPECT_EQ(w[0].size(), 1U);
    EXPECT_EQ(w[0].begin()->first, 1U);
}

TEST(CharacteristicPolynomial, Triangular) {
    const auto m = ScalarMatrix::from_rows({{Scalar(2), Scalar(1)}, {Scalar(0), Scalar(3)}});
    // (x-2)(x-3) = 6 - 5x + x^2
    EXPECT_EQ(characteristic_polynomial(m), (UniPoly{Scalar(6), Scalar(-5), Scalar(1)}));
    const auto roots = rational_roots(characteristic_polynomial(m));
    ASSERT_EQ(roots.size(), 2U);
    EXPECT_EQ(roots[0].first, Scalar(2));
    EXPECT_EQ(roots[1].first, Scalar(3));
}

TEST(CharacteristicPolynomial, RepeatedAndFractionalRoots) {
    // (x - 1/2)^2 (x + 3) x
    UniPoly p{Scalar(0), Scalar(3, 4), Scalar(-11, 4), Scalar(2), Scalar(1)};
    const auto roots = rational_roots(p);
    ASSERT_EQ(roots.size(), 3U);
    EXPECT_EQ(roots[0], std::make_pair(Scalar(-3), std::size_t{1}));
    EXPECT_EQ(roots[1], std::make_pair(Scalar(0), std::size_t{1}));
    EXPECT_EQ(roots[2], std::make_pair(Scalar(1, 2), std::size_t{2}));
}

TEST(Eigenspaces, Identity) {
    const auto blocks = simultaneous_eigenspaces({ScalarMatrix::identity(3)});
    ASSERT_EQ(blocks.size(), 1U);
    EXPECT_EQ(blocks[0].eigenvalues, std::vector<Scalar>{Scalar(1)});
    EXPECT_EQ(blocks[0].basis.size(), 3U);
}

TEST(Eigenspaces, Diagonal) {
    const auto blocks = simultaneous_eigenspaces({ScalarMatrix::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}})});
    ASSERT_EQ(blocks.size(), 2U);
    EXPECT_EQ(blocks[0].eigenvalues[0], Scalar(1));
    EXPECT_EQ(blocks[1].eigenvalues[0], Scalar(2));
}

TEST(Eigenspaces, AdjointCartanOfSl2) {
    // basis e, h, f; ad h = diag(2, 0, -2) written in a rotated basis to make it nontrivial
    const auto adh = ScalarMatrix::from_rows(
        {{Scalar(2), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(-2)}});
    const auto p = ScalarMatrix::from_rows(
        {{Scalar(1), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)}, {Scalar(1), Scalar(0), Scalar(2)}});
    // p^{-1} via solving p x = e_i
    std::vector<Vec> pcols{{Scalar(1), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(2)}};
    ScalarMatrix pinv(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        Vec e(3);
        e[i] = Scalar(1);
        const auto x = *solve_membership(e, pcols);
        for (std::size_t j = 0; j < 3; ++j) {
            pinv.set(j, i, x[j]);
        }
    }
    ASSERT_EQ(p * pinv, ScalarMatrix::identity(3));
    const auto m = p * adh * pinv;
    const auto blocks = simultaneous_eigenspaces({m});
    ASSERT_EQ(blocks.size(), 3U);
    long expected = -2;
    std::size_t total = 0;
    for (const auto& b : blocks) {
        EXPECT_EQ(b.eigenvalues[0], Scalar(expected));
        expected += 2;
        ASSERT_EQ(b.basis.size(), 1U);
        total += b.basis.size();
        // brute-force oracle: (m - lambda) v = 0
        EXPECT_TRUE(annihilates(m - ScalarMatrix::identity(3).scaled(b.eigenvalues[0]), b.basis[0]));
    }
    EXPECT_EQ(total, 3U);
}

TEST(Eigenspaces, JointDecompositionSumsToAmbient) {
    const auto a = ScalarMatrix::from_rows({{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(2)}});
    const auto b = ScalarMatrix::from_rows({{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(0)}});
    const auto blocks = simultaneous_eigenspaces({a, b});
    std::size_t total = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        total += blocks[i].basis.size();
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            EXPECT_NE(blocks[i].eigenvalues, blocks[j].eigenvalues);
        }
    }
    EXPECT_EQ(total, 3U);
    EXPECT_EQ(blocks.size(), 3U);
}

TEST(Eigenspaces, Errors) {
    const auto a = ScalarMatrix::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(2)}});
    const auto b = ScalarMatrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}});
    EXPECT_THROW(simultaneous_eigenspaces({a, b}), CommutationFailure);
    const auto rot = ScalarMatrix::from_rows({{Scalar(0), Scalar(-1)}, {Scalar(1), Scalar(0)}});
    EXPECT_THROW(simultaneous_eigenspaces({rot}), IrrationalSpectrum);
    const auto two = ScalarMatrix::from_rows({{Scalar(0), Scalar(2)}, {Scalar(1), Scalar(0)}});
    EXPECT_THROW(simultaneous_eigenspaces({two}), IrrationalSpectrum);
    EXPECT_THROW(simultaneous_eigenspaces({b}), NotDiagonalizable);
}
