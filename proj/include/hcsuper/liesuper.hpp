#ifndef HCSUPER_LIESUPER_HPP
#define HCSUPER_LIESUPER_HPP

#include "hcsuper/linalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hcsuper {

/// A subspace given by a list of coordinate vectors over the algebra basis.
using Subspace = std::vector<SparseVec>;

struct BasisElement {
    std::string name;
    int parity = 0;
};

/// Element of a specific algebra. Arithmetic between elements of different
/// algebras throws MixedAlgebras.
class SuperVector {
public:
    SuperVector() = default;
    SuperVector(std::uint64_t algebra, SparseVec coeffs) : algebra_(algebra), coeffs_(std::move(coeffs)) {}

    [[nodiscard]] std::uint64_t algebra() const { return algebra_; }
    [[nodiscard]] const SparseVec& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] Scalar coeff(std::size_t i) const;

    SuperVector& operator+=(const SuperVector& rhs);
    SuperVector& operator-=(const SuperVector& rhs);
    friend SuperVector operator+(SuperVector a, const SuperVector& b) { return a += b; }
    friend SuperVector operator-(SuperVector a, const SuperVector& b) { return a -= b; }
    friend SuperVector operator*(const Scalar& s, SuperVector v);
    friend bool operator==(const SuperVector& a, const SuperVector& b) {
        return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SuperVector& a, const SuperVector& b) { return !(a == b); }

private:
    void check_same(const SuperVector& rhs) const;

    std::uint64_t algebra_ = 0;
    SparseVec coeffs_;
};

/// Declared decomposition g = z(g) + (ideals), checked by verify_algebra.
struct DecompositionCertificate {
    Subspace center;
    std::vector<Subspace> ideals;
};

struct Violation {
    std::string kind;
    std::vector<std::size_t> witness;
    std::string detail;
};

using ValidationReport = std::vector<Violation>;

/// Lie superalgebra given by structure constants on a homogeneous basis.
/// Immutable once built; use LieSuperalgebra::Builder.
class LieSuperalgebra {
public:
    class Builder;

    [[nodiscard]] std::uint64_t id() const { return id_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<BasisElement>& basis() const { return basis_; }
    [[nodiscard]] const std::string& name(std::size_t i) const { return basis_.at(i).name; }
    [[nodiscard]] int parity(std::size_t i) const { return basis_.at(i).parity; }
    /// Throws ParseError for unknown names.
    [[nodiscard]] std::size_t index_of(const std::string& name) const;

    /// Parity of a homogeneous vector (0 for the zero vector); nullopt when inhomogeneous.
    [[nodiscard]] std::optional<int> parity_of(const SparseVec& v) const;

    [[nodiscard]] const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    [[nodiscard]] SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
    [[nodiscard]] SuperVector bracket(const SuperVector& x, const SuperVector& y) const;

    [[nodiscard]] SuperVector element(const SparseVec& v) const { return SuperVector(id_, v); }
    [[nodiscard]] SuperVector element(const std::string& name) const;
    [[nodiscard]] SuperVector unit(std::size_t i) const { return SuperVector(id_, SparseVec{{i, Scalar(1)}}); }

    /// Matrix of ad(x) acting on coordinate columns.
    [[nodiscard]] ScalarMatrix ad_matrix(const SparseVec& x) const;

    [[nodiscard]] bool has_form() const { return form_.has_value(); }
    [[nodiscard]] const ScalarMatrix& form() const;
    [[nodiscard]] Scalar b(const SparseVec& x, const SparseVec& y) const;
    [[nodiscard]] Scalar b(const SuperVector& x, const SuperVector& y) const;

    [[nodiscard]] bool has_theta() const { return theta_.has_value(); }
    /// theta(e_j) = sum_i theta(i, j) e_i.
    [[nodiscard]] const ScalarMatrix& theta() const;
    [[nodiscard]] SparseVec apply_theta(const SparseVec& x) const;
    [[nodiscard]] Scalar b_theta(const SparseVec& x, const SparseVec& y) const;
    [[nodiscard]] Scalar b_theta(const SuperVector& x, const SuperVector& y) const;

    [[nodiscard]] const std::optional<DecompositionCertificate>& certificate() const { return certificate_; }

    /// Same algebra expressed in a new homogeneous basis (vectors over the old basis).
    [[nodiscard]] LieSuperalgebra change_basis(const Subspace& new_basis, const std::vector<std::string>& names) const;

    /// Raw (i, j) entries as supplied to the builder, for serialization.
    [[nodiscard]] const std::map<std::pair<std::size_t, std::size_t>, SparseVec>& declared_brackets() const {
        return declared_;
    }

private:
    LieSuperalgebra() = default;

    std::uint64_t id_ = 0;
    std::vector<BasisElement> basis_;
    std::vector<SparseVec> table_;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> declared_;
    std::optional<ScalarMatrix> form_;
    std::optional<ScalarMatrix> theta_;
    std::optional<DecompositionCertificate> certificate_;
};

class LieSuperalgebra::Builder {
public:
    explicit Builder(std::vector<BasisElement> basis);

    [[nodiscard]] std::size_t index(const std::string& name) const;

    /// [x_i, x_j] = out; the transposed entry follows by super-antisymmetry
    /// unless it is set explicitly with raw_bracket.
    Builder& bracket(std::size_t i, std::size_t j, const SparseVec& out);
    Builder& bracket(const std::string& x, const std::string& y,
                     const std::vector<std::pair<std::string, Scalar>>& out);
    /// Sets exactly the (i, j) entry, overriding any derived value.
    Builder& raw_bracket(std::size_t i, std::size_t j, const SparseVec& out);
    Builder& form(ScalarMatrix b);
    Builder& theta(ScalarMatrix t);
    Builder& certificate(DecompositionCertificate c);

    [[nodiscard]] LieSuperalgebra build() const;

private:
    std::vector<BasisElement> basis_;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> declared_;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> raw_;
    std::optional<ScalarMatrix> form_;
    std::optional<ScalarMatrix> theta_;
    std::optional<DecompositionCertificate> certificate_;
};

/// Every violated invariant with a witnessing basis tuple; empty iff valid.
ValidationReport verify_algebra(const LieSuperalgebra& g);
/// Throws InvalidAlgebra listing the first violations when the report is not empty.
void require_valid(const LieSuperalgebra& g);
std::string describe(const LieSuperalgebra& g, const Violation& v);

struct ThetaSplit {
    Subspace k;
    Subspace p;
};
ThetaSplit theta_eigenspaces(const LieSuperalgebra& g);

/// {y in within : [s, y] = 0 for all s in S}.
Subspace centralizer(const LieSuperalgebra& g, const Subspace& s, const Subspace& within);
Subspace centralizer(const LieSuperalgebra& g, const std::vector<SuperVector>& s, const Subspace& within);

struct DerivedAndCenter {
    Subspace derived;
    Subspace center;
};
DerivedAndCenter derived_and_center(const LieSuperalgebra& g);

/// Standard basis of g as a subspace.
Subspace whole_space(const LieSuperalgebra& g);
/// Linearly independent subset spanning the same space.
Subspace span_basis(const Subspace& vectors);
std::size_t span_dim(const Subspace& vectors);

} // namespace hcsuper

#endif
