#ifndef HCSUPER_SCALAR_HPP
#define HCSUPER_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace hcsuper {

/// Exact element p + q*sqrt(c) of Q or of a quadratic extension Q(sqrt(c)).
///
/// The radicand c is square-free and different from 0 and 1. A scalar whose
/// irrational part vanishes is a plain rational and combines with scalars of
/// any extension; combining two genuinely irrational scalars over different
/// radicands throws ContextMismatch.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : rational_(value) {} // NOLINT(google-explicit-constructor)
    Scalar(const mpq_class& value) : rational_(value) { rational_.canonicalize(); } // NOLINT
    Scalar(long num, long den);
    Scalar(const mpq_class& rational, const mpq_class& irrational, long radicand);

    /// sqrt(c) for a square-free c not in {0, 1}.
    static Scalar sqrt_of(long radicand);

    /// Parses "p", "p/q", "p/q+r/s*sqrt(c)", "r/s*sqrt(c)", "sqrt(c)" and signed variants.
    static Scalar parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(rational_) == 0 && sgn(irrational_) == 0; }
    [[nodiscard]] bool is_one() const { return rational_ == 1 && sgn(irrational_) == 0; }
    [[nodiscard]] bool is_rational() const { return sgn(irrational_) == 0; }
    [[nodiscard]] bool is_integer() const;

    [[nodiscard]] const mpq_class& rational_part() const { return rational_; }
    [[nodiscard]] const mpq_class& irrational_part() const { return irrational_; }
    /// 0 when the scalar is rational.
    [[nodiscard]] long radicand() const { return radicand_; }

    /// Throws ContextMismatch if the scalar is irrational.
    [[nodiscard]] const mpq_class& to_rational() const;

    [[nodiscard]] Scalar inverse() const;
    /// Sign of a rational scalar; throws for irrational ones.
    [[nodiscard]] int sign() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& lhs, const Scalar& rhs);
    friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }
    /// Ordering is only defined between rational scalars.
    friend bool operator<(const Scalar& lhs, const Scalar& rhs);

    /// Canonical text: "p" or "p/q" for rationals, "p/q+r/s*sqrt(c)" otherwise.
    [[nodiscard]] std::string to_string() const;

private:
    void normalize();
    long merge_radicand(const Scalar& rhs) const;

    mpq_class rational_{0};
    mpq_class irrational_{0};
    long radicand_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// n! as a scalar.
Scalar factorial(unsigned n);
/// Binomial coefficient C(n, k) (0 when k > n).
Scalar binomial(unsigned n, unsigned k);

} // namespace hcsuper

#endif
