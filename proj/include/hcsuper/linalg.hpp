#ifndef HCSUPER_LINALG_HPP
#define HCSUPER_LINALG_HPP

#include "hcsuper/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace hcsuper {

using Vec = std::vector<Scalar>;
using SparseVec = std::map<std::size_t, Scalar>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);
/// y += s * x on sparse vectors, dropping cancelled entries.
void axpy(SparseVec& y, const Scalar& s, const SparseVec& x);

/// Matrix over Scalar. Small matrices are stored densely, larger ones as sparse rows.
class ScalarMatrix {
public:
    static constexpr std::size_t kDenseLimit = 64;

    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols);
    static ScalarMatrix identity(std::size_t n);
    static ScalarMatrix from_rows(const std::vector<Vec>& rows);
    static ScalarMatrix from_sparse_rows(std::size_t cols, std::vector<SparseVec> rows);
    static ScalarMatrix from_columns(std::size_t rows, const std::vector<SparseVec>& cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_dense() const { return std::holds_alternative<Dense>(data_); }

    [[nodiscard]] Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& value);
    [[nodiscard]] SparseVec row(std::size_t i) const;
    [[nodiscard]] std::vector<SparseVec> sparse_rows() const;

    [[nodiscard]] Vec apply(const Vec& v) const;
    [[nodiscard]] SparseVec apply(const SparseVec& v) const;
    [[nodiscard]] ScalarMatrix operator*(const ScalarMatrix& rhs) const;
    [[nodiscard]] ScalarMatrix operator+(const ScalarMatrix& rhs) const;
    [[nodiscard]] ScalarMatrix operator-(const ScalarMatrix& rhs) const;
    [[nodiscard]] ScalarMatrix scaled(const Scalar& s) const;
    [[nodiscard]] ScalarMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

private:
    struct Dense {
        std::vector<Scalar> entries;
    };
    struct Sparse {
        std::vector<SparseVec> rows;
    };

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::variant<Dense, Sparse> data_{Dense{}};
};

/// Incremental row echelon form. Each stored row is normalized to a leading 1
/// and remembers how it was combined from the inserted vectors.
class Echelon {
public:
    /// Reduces v against the stored rows; returns true if it was independent.
    bool insert(const SparseVec& v);
    /// Remainder of v after reduction; zero iff v lies in the span.
    [[nodiscard]] SparseVec reduce(const SparseVec& v) const;
    /// Coefficients c with v = sum c_k * (k-th inserted vector), or nullopt.
    [[nodiscard]] std::optional<SparseVec> coordinates(const SparseVec& v) const;
    [[nodiscard]] bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
    [[nodiscard]] std::size_t inserted() const { return inserted_; }
    /// Basis of {x : <row, x> = 0 for every stored row} inside a space of dimension n.
    [[nodiscard]] std::vector<SparseVec> kernel(std::size_t n) const;
    /// Stored rows (leading coefficient 1), ordered by pivot column.
    [[nodiscard]] std::vector<SparseVec> rows() const;

private:
    struct Row {
        SparseVec entries;
        SparseVec combination;
    };
    // pivot column -> row
    std::map<std::size_t, Row> pivots_;
    std::size_t inserted_ = 0;
};

/// Basis of the kernel of m.
std::vector<Vec> nullspace(const ScalarMatrix& m);
std::vector<SparseVec> nullspace_sparse(std::size_t cols, const std::vector<SparseVec>& rows);
std::size_t rank(const ScalarMatrix& m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);

/// Coordinates of v with respect to basis, or nullopt when v is not in the span.
std::optional<Vec> solve_membership(const Vec& v, const std::vector<Vec>& basis);

/// Basis of the intersection of two subspaces (given by spanning sets) of a space of dimension n.
std::vector<SparseVec> intersect_spans(std::size_t n, const std::vector<SparseVec>& u,
                                       const std::vector<SparseVec>& w);

/// Univariate polynomial with ascending coefficients.
using UniPoly = std::vector<Scalar>;

UniPoly characteristic_polynomial(const ScalarMatrix& m);
/// Rational roots with multiplicity; coefficients must be rational.
std::vector<std::pair<Scalar, std::size_t>> rational_roots(const UniPoly& p);

struct EigenBlock {
    std::vector<Scalar> eigenvalues; // one per input matrix
    std::vector<Vec> basis;
};

/// Joint eigenspace decomposition of pairwise commuting, diagonalizable matrices.
/// Blocks are sorted lexicographically by eigenvalue tuple.
std::vector<EigenBlock> simultaneous_eigenspaces(const std::vector<ScalarMatrix>& ms);

} // namespace hcsuper

#endif
