#ifndef HCSUPER_PBW_HPP
#define HCSUPER_PBW_HPP

#include "hcsuper/liesuper.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace hcsuper {

enum class Block { K, A, N, Other };

/// Total order on basis indices with an optional block tag per index.
class BasisOrder {
public:
    BasisOrder() = default;
    /// sequence lists every basis index exactly once, smallest first.
    BasisOrder(std::vector<std::size_t> sequence, std::vector<Block> tags);
    static BasisOrder natural(std::size_t n);

    [[nodiscard]] std::size_t size() const { return sequence_.size(); }
    [[nodiscard]] std::size_t rank(std::size_t index) const { return rank_.at(index); }
    [[nodiscard]] std::size_t at(std::size_t rank) const { return sequence_.at(rank); }
    [[nodiscard]] Block block(std::size_t index) const { return tags_.at(index); }
    [[nodiscard]] const std::vector<std::size_t>& sequence() const { return sequence_; }
    [[nodiscard]] bool less(std::size_t a, std::size_t b) const { return rank_[a] < rank_[b]; }
    /// True when every block appears as one contiguous run in the given block order.
    [[nodiscard]] bool blocks_in_order(const std::vector<Block>& order) const;

private:
    std::vector<std::size_t> sequence_;
    std::vector<std::size_t> rank_;
    std::vector<Block> tags_;
};

/// Basis indices, weakly increasing for the enveloping algebra's order.
using Monomial = std::vector<std::size_t>;

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    }
};

/// Sparse combination of PBW monomials of U(g).
class UEAElement {
public:
    using Terms = std::map<Monomial, Scalar, MonomialLess>;

    UEAElement() = default;
    explicit UEAElement(std::uint64_t algebra) : algebra_(algebra) {}
    UEAElement(std::uint64_t algebra, Terms terms);

    [[nodiscard]] std::uint64_t algebra() const { return algebra_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Filtration degree (-1 for zero).
    [[nodiscard]] int degree() const;
    [[nodiscard]] Scalar coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Scalar& s);
    UEAElement& operator+=(const UEAElement& rhs);
    UEAElement& operator-=(const UEAElement& rhs);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(const Scalar& s, const UEAElement& u);
    friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const UEAElement& a, const UEAElement& b) { return !(a == b); }

private:
    void adopt(const UEAElement& rhs);

    std::uint64_t algebra_ = 0;
    Terms terms_;
};

/// Element of S(g): index multisets in increasing index order, odd indices at
/// most once, with the sign normalized for that order.
class SymElement {
public:
    using Terms = std::map<Monomial, Scalar, MonomialLess>;

    SymElement() = default;
    static SymElement one();
    static SymElement generator(std::size_t i);

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] int degree() const;
    void add_term(const Monomial& sorted, const Scalar& s);

    SymElement& operator+=(const SymElement& rhs);
    SymElement& operator-=(const SymElement& rhs);
    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
    friend SymElement operator*(const Scalar& s, const SymElement& p);
    friend bool operator==(const SymElement& a, const SymElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymElement& a, const SymElement& b) { return !(a == b); }

private:
    Terms terms_;
};

/// Product in S(g); parities decide the Koszul signs.
SymElement sym_multiply(const LieSuperalgebra& g, const SymElement& a, const SymElement& b);
/// Sign-normalized form of an arbitrary word of commuting generators (zero if an odd index repeats).
std::pair<Monomial, int> sym_normalize(const LieSuperalgebra& g, Monomial word);
/// Element of S^1(g) from a vector.
SymElement sym_linear(const SparseVec& v);
SymElement sym_power(const LieSuperalgebra& g, const SymElement& p, unsigned k);
/// ad(x) extended to S(g) as a graded derivation; x must be homogeneous.
SymElement sym_adjoint(const LieSuperalgebra& g, const SparseVec& x, const SymElement& p);

/// U(g) (x) U(g), keyed by pairs of PBW monomials.
using TensorElement = std::map<std::pair<Monomial, Monomial>, Scalar>;

enum class Strategy { Leftmost, Rightmost };

/// U(g) with a fixed PBW order. Products are memoized per instance; the cache
/// makes an instance unsuitable for concurrent use, so give each thread its own.
class EnvelopingAlgebra {
public:
    EnvelopingAlgebra(std::shared_ptr<const LieSuperalgebra> g, BasisOrder order);

    [[nodiscard]] const LieSuperalgebra& algebra() const { return *g_; }
    [[nodiscard]] std::shared_ptr<const LieSuperalgebra> algebra_ptr() const { return g_; }
    [[nodiscard]] const BasisOrder& order() const { return order_; }

    [[nodiscard]] UEAElement one() const;
    [[nodiscard]] UEAElement zero() const { return UEAElement(g_->id()); }
    [[nodiscard]] UEAElement generator(std::size_t i) const;
    [[nodiscard]] UEAElement from_vector(const SparseVec& v) const;
    [[nodiscard]] UEAElement from_monomial(const Monomial& m, const Scalar& s = Scalar(1)) const;

    [[nodiscard]] int parity(const Monomial& m) const;
    [[nodiscard]] bool is_pbw(const Monomial& m) const;
    /// All PBW monomials of degree <= d, ordered by degree then rank sequence.
    [[nodiscard]] std::vector<Monomial> monomials_up_to(int d) const;

    [[nodiscard]] UEAElement multiply(const UEAElement& u, const UEAElement& v) const;
    /// Product of basis elements in the given order.
    [[nodiscard]] UEAElement word_product(const std::vector<std::size_t>& word) const;
    /// Straightening by explicit adjacent rewriting with the given redex choice.
    [[nodiscard]] UEAElement normal_form(const std::vector<std::size_t>& word, Strategy strategy) const;
    /// Product of arbitrary vectors of g in the given order.
    [[nodiscard]] UEAElement normal_form(const std::vector<SuperVector>& word,
                                         Strategy strategy = Strategy::Leftmost) const;

    /// x u - (-1)^{|x||u|} u x, applied per homogeneous component.
    [[nodiscard]] UEAElement adjoint(const SparseVec& x, const UEAElement& u) const;
    [[nodiscard]] UEAElement supersymmetrize(const SymElement& p) const;
    /// Top filtration component as an element of S(g).
    [[nodiscard]] SymElement leading_symbol(const UEAElement& u) const;
    /// Re-expresses u, written in another PBW order of the same algebra, in this order.
    [[nodiscard]] UEAElement convert(const UEAElement& u, const EnvelopingAlgebra& from) const;

    [[nodiscard]] TensorElement coproduct(const UEAElement& u) const;
    [[nodiscard]] TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) const;
    [[nodiscard]] UEAElement antipode(const UEAElement& u) const;
    [[nodiscard]] Scalar counit(const UEAElement& u) const;
    /// mu o (S (x) id) applied to a tensor.
    [[nodiscard]] UEAElement antipode_contract(const TensorElement& t) const;

private:
    void check(const UEAElement& u) const;
    [[nodiscard]] const UEAElement& left_mul(std::size_t x, const Monomial& m) const;
    [[nodiscard]] UEAElement left_mul(std::size_t x, const UEAElement& u) const;
    [[nodiscard]] UEAElement left_mul(const SparseVec& x, const UEAElement& u) const;

    std::shared_ptr<const LieSuperalgebra> g_;
    BasisOrder order_;
    mutable std::map<std::pair<std::size_t, Monomial>, UEAElement> memo_;
};

} // namespace hcsuper

#endif
