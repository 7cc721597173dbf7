#include "hcsuper/apoly.hpp"

#include "hcsuper/errors.hpp"

#include <functional>
#include <sstream>

namespace hcsuper {

unsigned total_degree(const Exponent& e) {
    unsigned d = 0;
    for (unsigned k : e) {
        d += k;
    }
    return d;
}

bool ExponentLess::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    // larger leading exponent first within a degree
    return b < a;
}

APolynomial APolynomial::constant(std::size_t nvars, const Scalar& c) {
    APolynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

APolynomial APolynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) {
        throw DimensionMismatch("variable index out of range");
    }
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

APolynomial APolynomial::linear(const Vec& coeffs) {
    APolynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

APolynomial APolynomial::monomial(const Exponent& e, const Scalar& c) {
    APolynomial p(e.size());
    p.add_term(e, c);
    return p;
}

int APolynomial::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first));
}

Scalar APolynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void APolynomial::add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != nvars_) {
        throw DimensionMismatch("exponent has wrong number of variables");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

APolynomial& APolynomial::operator+=(const APolynomial& rhs) {
    if (rhs.nvars_ != nvars_) {
        throw DimensionMismatch("polynomials in different numbers of variables");
    }
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

APolynomial& APolynomial::operator-=(const APolynomial& rhs) {
    if (rhs.nvars_ != nvars_) {
        throw DimensionMismatch("polynomials in different numbers of variables");
    }
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

APolynomial& APolynomial::operator*=(const APolynomial& rhs) {
    if (rhs.nvars_ != nvars_) {
        throw DimensionMismatch("polynomials in different numbers of variables");
    }
    APolynomial out(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponent e = ea;
            for (std::size_t i = 0; i < nvars_; ++i) {
                e[i] += eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

APolynomial operator*(const Scalar& s, const APolynomial& p) {
    APolynomial out(p.nvars_);
    for (const auto& [e, c] : p.terms_) {
        out.add_term(e, c * s);
    }
    return out;
}

APolynomial APolynomial::pow(unsigned k) const {
    APolynomial out = constant(nvars_, Scalar(1));
    for (unsigned i = 0; i < k; ++i) {
        out *= *this;
    }
    return out;
}

APolynomial APolynomial::substitute(const std::vector<APolynomial>& images) const {
    if (images.size() != nvars_) {
        throw DimensionMismatch("substitution needs one image per variable");
    }
    const std::size_t m = images.empty() ? 0 : images.front().nvars();
    APolynomial out(m);
    std::map<std::pair<std::size_t, unsigned>, APolynomial> powers;
    for (const auto& [e, c] : terms_) {
        APolynomial term = constant(m, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) {
                continue;
            }
            auto key = std::make_pair(i, e[i]);
            auto it = powers.find(key);
            if (it == powers.end()) {
                it = powers.emplace(key, images[i].pow(e[i])).first;
            }
            term *= it->second;
        }
        out += term;
    }
    return out;
}

APolynomial APolynomial::linear_substitute(const ScalarMatrix& m) const {
    std::vector<APolynomial> images;
    for (std::size_t i = 0; i < nvars_; ++i) {
        Vec row(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row[j] = m.at(i, j);
        }
        images.push_back(linear(row));
    }
    return substitute(images);
}

APolynomial APolynomial::shift(const Vec& c) const {
    std::vector<APolynomial> images;
    for (std::size_t i = 0; i < nvars_; ++i) {
        images.push_back(variable(nvars_, i) + constant(nvars_, c.at(i)));
    }
    return substitute(images);
}

APolynomial APolynomial::partial(std::size_t i) const {
    APolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) {
            continue;
        }
        Exponent f = e;
        f[i] -= 1;
        out.add_term(f, c * Scalar(static_cast<long>(e[i])));
    }
    return out;
}

APolynomial APolynomial::directional_derivative(const Vec& v) const {
    APolynomial out(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        if (!v.at(i).is_zero()) {
            out += v[i] * partial(i);
        }
    }
    return out;
}

APolynomial APolynomial::homogeneous_part(unsigned d) const {
    APolynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) == d) {
            out.add_term(e, c);
        }
    }
    return out;
}

Scalar APolynomial::evaluate(const Vec& point) const {
    if (point.size() != nvars_) {
        throw DimensionMismatch("evaluation point has wrong dimension");
    }
    Scalar acc;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) {
                t *= point[i];
            }
        }
        acc += t;
    }
    return acc;
}

std::string APolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string coeff = c.to_string();
        const bool unit_monomial = total_degree(e) == 0;
        if (!first) {
            os << (coeff.front() == '-' ? " - " : " + ");
            if (coeff.front() == '-') {
                coeff.erase(0, 1);
            }
        }
        first = false;
        if (!c.is_rational()) {
            coeff = "(" + coeff + ")";
        }
        if (unit_monomial || (coeff != "1" && coeff != "-1")) {
            os << coeff;
        } else if (coeff == "-1") {
            os << "-";
        }
        bool need_star = !unit_monomial && coeff != "1" && coeff != "-1";
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) {
                continue;
            }
            os << (need_star ? "*" : "") << names.at(i);
            if (e[i] > 1) {
                os << "^" << e[i];
            }
            need_star = true;
        }
    }
    return os.str();
}

std::vector<Exponent> exponents_up_to(std::size_t n, unsigned d) {
    std::vector<Exponent> out;
    Exponent cur(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned remaining) {
        if (i + 1 == n) {
            cur[i] = remaining;
            out.push_back(cur);
            return;
        }
        for (unsigned k = remaining + 1; k-- > 0;) {
            cur[i] = k;
            rec(i + 1, remaining - k);
        }
    };
    for (unsigned k = 0; k <= d; ++k) {
        if (n == 0) {
            if (k == 0) {
                out.push_back(cur);
            }
            continue;
        }
        rec(0, k);
    }
    return out;
}

} // namespace hcsuper
