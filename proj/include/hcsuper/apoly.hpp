#ifndef HCSUPER_APOLY_HPP
#define HCSUPER_APOLY_HPP

#include "hcsuper/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace hcsuper {

using Exponent = std::vector<unsigned>;

struct ExponentLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Polynomial in the coordinates x_i = mu(h_i) of mu in a*, i.e. an element of S(a)
/// written over a fixed basis h_1..h_n of a.
class APolynomial {
public:
    using Terms = std::map<Exponent, Scalar, ExponentLess>;

    APolynomial() = default;
    explicit APolynomial(std::size_t nvars) : nvars_(nvars) {}
    static APolynomial constant(std::size_t nvars, const Scalar& c);
    static APolynomial variable(std::size_t nvars, std::size_t i);
    /// sum_i c_i x_i
    static APolynomial linear(const Vec& coeffs);
    static APolynomial monomial(const Exponent& e, const Scalar& c = Scalar(1));

    [[nodiscard]] std::size_t nvars() const { return nvars_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Total degree (-1 for zero).
    [[nodiscard]] int degree() const;
    [[nodiscard]] Scalar coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Scalar& c);

    APolynomial& operator+=(const APolynomial& rhs);
    APolynomial& operator-=(const APolynomial& rhs);
    APolynomial& operator*=(const APolynomial& rhs);
    friend APolynomial operator+(APolynomial a, const APolynomial& b) { return a += b; }
    friend APolynomial operator-(APolynomial a, const APolynomial& b) { return a -= b; }
    friend APolynomial operator*(APolynomial a, const APolynomial& b) { return a *= b; }
    friend APolynomial operator*(const Scalar& s, const APolynomial& p);
    friend bool operator==(const APolynomial& a, const APolynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const APolynomial& a, const APolynomial& b) { return !(a == b); }

    [[nodiscard]] APolynomial pow(unsigned k) const;
    /// x_i -> images[i]; images may live in a different number of variables.
    [[nodiscard]] APolynomial substitute(const std::vector<APolynomial>& images) const;
    /// x_i -> sum_j m(i, j) x_j
    [[nodiscard]] APolynomial linear_substitute(const ScalarMatrix& m) const;
    /// p(x + c)
    [[nodiscard]] APolynomial shift(const Vec& c) const;
    [[nodiscard]] APolynomial partial(std::size_t i) const;
    /// sum_i v_i d/dx_i
    [[nodiscard]] APolynomial directional_derivative(const Vec& v) const;
    [[nodiscard]] APolynomial homogeneous_part(unsigned d) const;
    [[nodiscard]] Scalar evaluate(const Vec& point) const;

    /// Human readable form over the given variable names.
    [[nodiscard]] std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

/// All exponents in n variables of total degree <= d, by degree then ExponentLess.
std::vector<Exponent> exponents_up_to(std::size_t n, unsigned d);
unsigned total_degree(const Exponent& e);

} // namespace hcsuper

#endif
