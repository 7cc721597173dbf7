#include "hcsuper/scalar.hpp"

#include "hcsuper/errors.hpp"

#include <cctype>
#include <ostream>

namespace hcsuper {

namespace {

bool is_square_free(long c) {
    long n = c < 0 ? -c : c;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

void check_radicand(long c) {
    if (c == 0 || c == 1 || !is_square_free(c)) {
        throw ParseError("radicand must be square-free and not 0 or 1, got " + std::to_string(c));
    }
}

mpq_class parse_rational(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty rational");
    }
    std::string s(text);
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw ParseError("malformed rational '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw ParseError("zero denominator in '" + s + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace

Scalar::Scalar(long num, long den) : rational_(num, den) {
    if (den == 0) {
        throw ParseError("zero denominator");
    }
    rational_.canonicalize();
}

Scalar::Scalar(const mpq_class& rational, const mpq_class& irrational, long radicand)
    : rational_(rational), irrational_(irrational), radicand_(radicand) {
    rational_.canonicalize();
    irrational_.canonicalize();
    if (sgn(irrational_) != 0) {
        check_radicand(radicand);
    }
    normalize();
}

Scalar Scalar::sqrt_of(long radicand) {
    check_radicand(radicand);
    return Scalar(mpq_class(0), mpq_class(1), radicand);
}

void Scalar::normalize() {
    if (sgn(irrational_) == 0) {
        radicand_ = 0;
    }
}

bool Scalar::is_integer() const { return is_rational() && rational_.get_den() == 1; }

const mpq_class& Scalar::to_rational() const {
    if (!is_rational()) {
        throw ContextMismatch("scalar " + to_string() + " is not rational");
    }
    return rational_;
}

long Scalar::merge_radicand(const Scalar& rhs) const {
    if (radicand_ == 0) {
        return rhs.radicand_;
    }
    if (rhs.radicand_ == 0 || rhs.radicand_ == radicand_) {
        return radicand_;
    }
    throw ContextMismatch("mixing sqrt(" + std::to_string(radicand_) + ") and sqrt(" +
                          std::to_string(rhs.radicand_) + ")");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    radicand_ = merge_radicand(rhs);
    rational_ += rhs.rational_;
    if (sgn(rhs.irrational_) != 0) {
        irrational_ += rhs.irrational_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    radicand_ = merge_radicand(rhs);
    rational_ -= rhs.rational_;
    if (sgn(rhs.irrational_) != 0) {
        irrational_ -= rhs.irrational_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (is_rational() && rhs.is_rational()) {
        rational_ *= rhs.rational_;
        return *this;
    }
    const long c = merge_radicand(rhs);
    // (p + q r)(s + t r) = ps + qt c + (pt + qs) r
    mpq_class p = rational_ * rhs.rational_ + irrational_ * rhs.irrational_ * c;
    mpq_class q = rational_ * rhs.irrational_ + irrational_ * rhs.rational_;
    rational_ = p;
    irrational_ = q;
    radicand_ = c;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero scalar");
    }
    if (is_rational()) {
        return Scalar(mpq_class(1 / rational_));
    }
    mpq_class norm = rational_ * rational_ - irrational_ * irrational_ * radicand_;
    return Scalar(mpq_class(rational_ / norm), mpq_class(-irrational_ / norm), radicand_);
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (is_rational() && rhs.is_rational()) {
        if (sgn(rhs.rational_) == 0) {
            throw std::domain_error("division by zero scalar");
        }
        rational_ /= rhs.rational_;
        return *this;
    }
    return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const {
    Scalar out = *this;
    out.rational_ = -out.rational_;
    out.irrational_ = -out.irrational_;
    return out;
}

int Scalar::sign() const { return sgn(to_rational()); }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.rational_ == rhs.rational_ && lhs.irrational_ == rhs.irrational_ &&
           lhs.radicand_ == rhs.radicand_;
}

bool operator<(const Scalar& lhs, const Scalar& rhs) { return lhs.to_rational() < rhs.to_rational(); }

std::string Scalar::to_string() const {
    if (is_rational()) {
        return rational_.get_str();
    }
    std::string out;
    if (sgn(rational_) != 0) {
        out = rational_.get_str();
        out += sgn(irrational_) > 0 ? "+" : "-";
        out += mpq_class(abs(irrational_)).get_str();
    } else {
        out = irrational_.get_str();
    }
    out += "*sqrt(" + std::to_string(radicand_) + ")";
    return out;
}

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw ParseError("empty scalar");
    }
    const auto pos = s.find("sqrt(");
    if (pos == std::string::npos) {
        return Scalar(parse_rational(s));
    }
    const auto close = s.find(')', pos);
    if (close == std::string::npos || close + 1 != s.size()) {
        throw ParseError("malformed scalar '" + s + "'");
    }
    long radicand = 0;
    try {
        radicand = std::stol(s.substr(pos + 5, close - pos - 5));
    } catch (const std::exception&) {
        throw ParseError("malformed radicand in '" + s + "'");
    }
    // Split the irrational coefficient from an optional rational prefix.
    std::string head = s.substr(0, pos);
    mpq_class coeff(1);
    mpq_class rational(0);
    if (!head.empty()) {
        if (head.back() == '*') {
            head.pop_back();
            // find the sign separating rational and irrational parts (skip a leading sign)
            std::size_t split = std::string::npos;
            for (std::size_t i = head.size(); i-- > 1;) {
                if (head[i] == '+' || head[i] == '-') {
                    split = i;
                    break;
                }
            }
            if (split == std::string::npos) {
                coeff = parse_rational(head);
            } else {
                rational = parse_rational(head.substr(0, split));
                std::string c = head.substr(split);
                if (c.front() == '+') {
                    c.erase(0, 1);
                }
                coeff = parse_rational(c);
            }
        } else if (head == "-" || head == "+") {
            coeff = head == "-" ? -1 : 1;
        } else if (head.back() == '+' || head.back() == '-') {
            rational = parse_rational(head.substr(0, head.size() - 1));
            coeff = head.back() == '-' ? -1 : 1;
        } else {
            throw ParseError("malformed scalar '" + s + "'");
        }
    }
    return Scalar(rational, coeff, radicand);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(mpq_class(f));
}

Scalar binomial(unsigned n, unsigned k) {
    if (k > n) {
        return Scalar(0);
    }
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(mpq_class(b));
}

} // namespace hcsuper
