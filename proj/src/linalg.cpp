#include "hcsuper/linalg.hpp"

#include "hcsuper/errors.hpp"

#include <algorithm>
#include <string>

namespace hcsuper {

SparseVec to_sparse(const Vec& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            out.emplace(i, v[i]);
        }
    }
    return out;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
    Vec out(n);
    for (const auto& [i, s] : v) {
        if (i >= n) {
            throw DimensionMismatch("sparse index " + std::to_string(i) + " out of range " + std::to_string(n));
        }
        out[i] = s;
    }
    return out;
}

void axpy(SparseVec& y, const Scalar& s, const SparseVec& x) {
    if (s.is_zero()) {
        return;
    }
    for (const auto& [i, v] : x) {
        auto [it, inserted] = y.try_emplace(i, s * v);
        if (!inserted) {
            it->second += s * v;
            if (it->second.is_zero()) {
                y.erase(it);
            }
        }
    }
}

// ---------------------------------------------------------------------------
// ScalarMatrix

ScalarMatrix::ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows < kDenseLimit && cols < kDenseLimit) {
        data_ = Dense{std::vector<Scalar>(rows * cols)};
    } else {
        data_ = Sparse{std::vector<SparseVec>(rows)};
    }
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
    ScalarMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, Scalar(1));
    }
    return m;
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<Vec>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ScalarMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionMismatch("ragged matrix rows");
        }
        for (std::size_t j = 0; j < cols; ++j) {
            if (!rows[i][j].is_zero()) {
                m.set(i, j, rows[i][j]);
            }
        }
    }
    return m;
}

ScalarMatrix ScalarMatrix::from_sparse_rows(std::size_t cols, std::vector<SparseVec> rows) {
    ScalarMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (auto& [j, s] : rows[i]) {
            m.set(i, j, s);
        }
    }
    return m;
}

ScalarMatrix ScalarMatrix::from_columns(std::size_t rows, const std::vector<SparseVec>& cols) {
    ScalarMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (const auto& [i, s] : cols[j]) {
            m.set(i, j, s);
        }
    }
    return m;
}

Scalar ScalarMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
        throw DimensionMismatch("matrix index out of range");
    }
    if (const auto* d = std::get_if<Dense>(&data_)) {
        return d->entries[i * cols_ + j];
    }
    const auto& row = std::get<Sparse>(data_).rows[i];
    auto it = row.find(j);
    return it == row.end() ? Scalar(0) : it->second;
}

void ScalarMatrix::set(std::size_t i, std::size_t j, const Scalar& value) {
    if (i >= rows_ || j >= cols_) {
        throw DimensionMismatch("matrix index out of range");
    }
    if (auto* d = std::get_if<Dense>(&data_)) {
        d->entries[i * cols_ + j] = value;
        return;
    }
    auto& row = std::get<Sparse>(data_).rows[i];
    if (value.is_zero()) {
        row.erase(j);
    } else {
        row[j] = value;
    }
}

SparseVec ScalarMatrix::row(std::size_t i) const {
    if (i >= rows_) {
        throw DimensionMismatch("row index out of range");
    }
    if (const auto* d = std::get_if<Dense>(&data_)) {
        SparseVec out;
        for (std::size_t j = 0; j < cols_; ++j) {
            const auto& s = d->entries[i * cols_ + j];
            if (!s.is_zero()) {
                out.emplace(j, s);
            }
        }
        return out;
    }
    return std::get<Sparse>(data_).rows[i];
}

std::vector<SparseVec> ScalarMatrix::sparse_rows() const {
    std::vector<SparseVec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out.push_back(row(i));
    }
    return out;
}

Vec ScalarMatrix::apply(const Vec& v) const {
    if (v.size() != cols_) {
        throw DimensionMismatch("matrix-vector size mismatch");
    }
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, s] : row(i)) {
            if (!v[j].is_zero()) {
                out[i] += s * v[j];
            }
        }
    }
    return out;
}

SparseVec ScalarMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc;
        for (const auto& [j, s] : row(i)) {
            auto it = v.find(j);
            if (it != v.end()) {
                acc += s * it->second;
            }
        }
        if (!acc.is_zero()) {
            out.emplace(i, acc);
        }
    }
    return out;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionMismatch("matrix product size mismatch");
    }
    ScalarMatrix out(rows_, rhs.cols_);
    const auto right = rhs.sparse_rows();
    for (std::size_t i = 0; i < rows_; ++i) {
        SparseVec acc;
        for (const auto& [k, s] : row(i)) {
            axpy(acc, s, right[k]);
        }
        for (const auto& [j, s] : acc) {
            out.set(i, j, s);
        }
    }
    return out;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatch("matrix sum size mismatch");
    }
    ScalarMatrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, s] : rhs.row(i)) {
            out.set(i, j, out.at(i, j) + s);
        }
    }
    return out;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& rhs) const { return *this + rhs.scaled(Scalar(-1)); }

ScalarMatrix ScalarMatrix::scaled(const Scalar& s) const {
    ScalarMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : row(i)) {
            out.set(i, j, v * s);
        }
    }
    return out;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (const auto& [j, v] : row(i)) {
            out.set(j, i, v);
        }
    }
    return out;
}

bool ScalarMatrix::is_zero() const {
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!row(i).empty()) {
            return false;
        }
    }
    return true;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows_; ++i) {
        if (a.row(i) != b.row(i)) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Echelon

bool Echelon::insert(const SparseVec& v) {
    SparseVec r = v;
    SparseVec comb{{inserted_, Scalar(1)}};
    ++inserted_;
    auto it = r.begin();
    while (it != r.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const std::size_t col = it->first;
        const Scalar f = -it->second;
        axpy(r, f, p->second.entries);
        axpy(comb, f, p->second.combination);
        it = r.upper_bound(col);
    }
    if (r.empty()) {
        return false;
    }
    const std::size_t lead = r.begin()->first;
    const Scalar inv = r.begin()->second.inverse();
    for (auto& [j, s] : r) {
        s *= inv;
    }
    for (auto& [j, s] : comb) {
        s *= inv;
    }
    pivots_.emplace(lead, Row{std::move(r), std::move(comb)});
    return true;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
    SparseVec r = v;
    auto it = r.begin();
    while (it != r.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const std::size_t col = it->first;
        axpy(r, -it->second, p->second.entries);
        it = r.upper_bound(col);
    }
    return r;
}

std::optional<SparseVec> Echelon::coordinates(const SparseVec& v) const {
    SparseVec r = v;
    SparseVec coords;
    auto it = r.begin();
    while (it != r.end()) {
        auto p = pivots_.find(it->first);
        if (p == pivots_.end()) {
            ++it;
            continue;
        }
        const std::size_t col = it->first;
        const Scalar f = it->second;
        axpy(coords, f, p->second.combination);
        axpy(r, -f, p->second.entries);
        it = r.upper_bound(col);
    }
    if (!r.empty()) {
        return std::nullopt;
    }
    return coords;
}

std::vector<SparseVec> Echelon::rows() const {
    std::vector<SparseVec> out;
    out.reserve(pivots_.size());
    for (const auto& [col, row] : pivots_) {
        out.push_back(row.entries);
    }
    return out;
}

std::vector<SparseVec> Echelon::kernel(std::size_t n) const {
    // Bring the rows to reduced form, last pivot first.
    std::map<std::size_t, SparseVec> rref;
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        SparseVec r = it->second.entries;
        std::vector<std::pair<std::size_t, Scalar>> hits;
        for (const auto& [j, s] : r) {
            if (j != it->first && rref.count(j) != 0) {
                hits.emplace_back(j, s);
            }
        }
        for (const auto& [j, s] : hits) {
            axpy(r, -s, rref.at(j));
        }
        rref.emplace(it->first, std::move(r));
    }
    std::map<std::size_t, SparseVec> by_free;
    for (std::size_t j = 0; j < n; ++j) {
        if (rref.count(j) == 0) {
            by_free[j].emplace(j, Scalar(1));
        }
    }
    for (const auto& [p, r] : rref) {
        for (const auto& [j, s] : r) {
            if (j == p) {
                continue;
            }
            if (j >= n) {
                throw DimensionMismatch("row entry beyond kernel dimension");
            }
            by_free.at(j).emplace(p, -s);
        }
    }
    std::vector<SparseVec> out;
    out.reserve(by_free.size());
    for (auto& [j, v] : by_free) {
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<SparseVec> nullspace_sparse(std::size_t cols, const std::vector<SparseVec>& rows) {
    Echelon e;
    for (const auto& r : rows) {
        e.insert(r);
    }
    return e.kernel(cols);
}

std::vector<Vec> nullspace(const ScalarMatrix& m) {
    std::vector<Vec> out;
    for (const auto& v : nullspace_sparse(m.cols(), m.sparse_rows())) {
        out.push_back(to_dense(v, m.cols()));
    }
    return out;
}

std::size_t rank(const ScalarMatrix& m) {
    Echelon e;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        e.insert(m.row(i));
    }
    return e.rank();
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("inverse of a non-square matrix");
    }
    const std::size_t n = m.rows();
    Echelon e;
    for (std::size_t i = 0; i < n; ++i) {
        e.insert(m.row(i));
    }
    if (e.rank() != n) {
        return std::nullopt;
    }
    // row j of the inverse holds the coordinates of e_j in the rows of m
    std::vector<SparseVec> rows;
    for (std::size_t j = 0; j < n; ++j) {
        rows.push_back(*e.coordinates(SparseVec{{j, Scalar(1)}}));
    }
    return ScalarMatrix::from_sparse_rows(n, rows);
}

std::optional<Vec> solve_membership(const Vec& v, const std::vector<Vec>& basis) {
    Echelon e;
    for (const auto& b : basis) {
        if (b.size() != v.size()) {
            throw DimensionMismatch("membership vectors of unequal length");
        }
        e.insert(to_sparse(b));
    }
    auto coords = e.coordinates(to_sparse(v));
    if (!coords) {
        return std::nullopt;
    }
    return to_dense(*coords, basis.size());
}

std::vector<SparseVec> intersect_spans(std::size_t n, const std::vector<SparseVec>& u,
                                       const std::vector<SparseVec>& w) {
    // Solve sum a_i u_i - sum b_j w_j = 0.
    std::vector<SparseVec> rows(n);
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (const auto& [k, s] : u[i]) {
            rows.at(k).emplace(i, s);
        }
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
        for (const auto& [k, s] : w[j]) {
            rows.at(k).emplace(u.size() + j, -s);
        }
    }
    Echelon result;
    std::vector<SparseVec> out;
    for (const auto& sol : nullspace_sparse(u.size() + w.size(), rows)) {
        SparseVec x;
        for (const auto& [i, s] : sol) {
            if (i < u.size()) {
                axpy(x, s, u[i]);
            }
        }
        if (!x.empty() && result.insert(x)) {
            out.push_back(std::move(x));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// univariate polynomials

namespace {

void trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

UniPoly derivative(const UniPoly& p) {
    UniPoly out;
    for (std::size_t i = 1; i < p.size(); ++i) {
        out.push_back(p[i] * Scalar(static_cast<long>(i)));
    }
    trim(out);
    return out;
}

// Returns quotient, leaves remainder in num.
UniPoly divmod(UniPoly& num, const UniPoly& den) {
    UniPoly q;
    if (num.size() < den.size()) {
        return q;
    }
    q.assign(num.size() - den.size() + 1, Scalar(0));
    const Scalar lead_inv = den.back().inverse();
    for (std::size_t top = num.size(); top >= den.size(); --top) {
        const Scalar f = num[top - 1] * lead_inv;
        const std::size_t shift = top - den.size();
        q[shift] = f;
        if (!f.is_zero()) {
            for (std::size_t i = 0; i < den.size(); ++i) {
                num[shift + i] -= f * den[i];
            }
        }
    }
    trim(num);
    trim(q);
    return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = a;
        divmod(r, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Scalar inv = a.back().inverse();
        for (auto& c : a) {
            c *= inv;
        }
    }
    return a;
}

Scalar evaluate(const UniPoly& p, const Scalar& x) {
    Scalar acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
    }
    return acc;
}

std::vector<mpz_class> divisors(mpz_class n) {
    n = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        factors.emplace_back(n, 1);
    }
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    return out;
}

} // namespace

UniPoly characteristic_polynomial(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("characteristic polynomial of a non-square matrix");
    }
    // Faddeev-LeVerrier.
    const std::size_t n = m.rows();
    UniPoly c(n + 1);
    c[n] = Scalar(1);
    ScalarMatrix mk(n, n);
    const ScalarMatrix id = ScalarMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + id.scaled(c[n - k + 1]);
        const ScalarMatrix amk = m * mk;
        Scalar tr;
        for (std::size_t i = 0; i < n; ++i) {
            tr += amk.at(i, i);
        }
        c[n - k] = -tr / Scalar(static_cast<long>(k));
    }
    return c;
}

std::vector<std::pair<Scalar, std::size_t>> rational_roots(const UniPoly& p_in) {
    UniPoly p = p_in;
    trim(p);
    for (const auto& c : p) {
        if (!c.is_rational()) {
            throw IrrationalSpectrum("polynomial has irrational coefficients");
        }
    }
    std::vector<std::pair<Scalar, std::size_t>> roots;
    if (p.size() <= 1) {
        return roots;
    }
    std::size_t zero_mult = 0;
    while (zero_mult < p.size() && p[zero_mult].is_zero()) {
        ++zero_mult;
    }
    if (zero_mult > 0) {
        roots.emplace_back(Scalar(0), zero_mult);
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(zero_mult));
    }
    if (p.size() <= 1) {
        return roots;
    }
    UniPoly dp = derivative(p);
    UniPoly sqfree;
    {
        UniPoly num = p;
        sqfree = divmod(num, gcd(p, dp));
    }
    // Clear denominators of the square-free part.
    mpz_class lcm = 1;
    for (const auto& c : sqfree) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.to_rational().get_den().get_mpz_t());
    }
    std::vector<mpz_class> ints;
    for (const auto& c : sqfree) {
        mpq_class v = c.to_rational() * lcm;
        ints.push_back(v.get_num());
    }
    std::vector<Scalar> found;
    for (const auto& num : divisors(ints.front())) {
        for (const auto& den : divisors(ints.back())) {
            for (int sign : {1, -1}) {
                Scalar cand(mpq_class(sign * num, den));
                if (std::find(found.begin(), found.end(), cand) != found.end()) {
                    continue;
                }
                if (evaluate(sqfree, cand).is_zero()) {
                    found.push_back(cand);
                }
            }
        }
    }
    for (const auto& r : found) {
        std::size_t mult = 0;
        UniPoly cur = p;
        while (cur.size() > 1) {
            UniPoly rem = cur;
            UniPoly q = divmod(rem, UniPoly{-r, Scalar(1)});
            if (!rem.empty()) {
                break;
            }
            cur = std::move(q);
            ++mult;
        }
        roots.emplace_back(r, mult);
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<EigenBlock> simultaneous_eigenspaces(const std::vector<ScalarMatrix>& ms) {
    if (ms.empty()) {
        return {};
    }
    const std::size_t n = ms.front().rows();
    for (const auto& m : ms) {
        if (m.rows() != n || m.cols() != n) {
            throw DimensionMismatch("eigenspace matrices must be square of equal size");
        }
    }
    for (std::size_t i = 0; i < ms.size(); ++i) {
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            if (ms[i] * ms[j] != ms[j] * ms[i]) {
                throw CommutationFailure("matrices " + std::to_string(i) + " and " + std::to_string(j) +
                                         " do not commute");
            }
        }
    }
    std::vector<EigenBlock> blocks;
    {
        EigenBlock all;
        for (std::size_t i = 0; i < n; ++i) {
            Vec e(n);
            e[i] = Scalar(1);
            all.basis.push_back(std::move(e));
        }
        if (n > 0) {
            blocks.push_back(std::move(all));
        }
    }
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
        const auto& m = ms[mi];
        std::vector<EigenBlock> next;
        for (const auto& block : blocks) {
            const std::size_t k = block.basis.size();
            Echelon span;
            for (const auto& v : block.basis) {
                span.insert(to_sparse(v));
            }
            ScalarMatrix restricted(k, k);
            for (std::size_t j = 0; j < k; ++j) {
                auto coords = span.coordinates(to_sparse(m.apply(block.basis[j])));
                if (!coords) {
                    throw CommutationFailure("joint eigenspace not invariant under matrix " + std::to_string(mi));
                }
                for (const auto& [i, s] : *coords) {
                    restricted.set(i, j, s);
                }
            }
            std::vector<std::pair<Scalar, std::size_t>> roots;
            try {
                roots = rational_roots(characteristic_polynomial(restricted));
            } catch (const IrrationalSpectrum&) {
                throw IrrationalSpectrum("matrix " + std::to_string(mi) + " has irrational characteristic data");
            }
            std::size_t total = 0;
            for (const auto& r : roots) {
                total += r.second;
            }
            if (total != k) {
                throw IrrationalSpectrum("characteristic polynomial of matrix " + std::to_string(mi) +
                                         " does not split over the rationals");
            }
            for (const auto& [lambda, mult] : roots) {
                const auto kernel = nullspace(restricted - ScalarMatrix::identity(k).scaled(lambda));
                if (kernel.size() != mult) {
                    throw NotDiagonalizable("matrix " + std::to_string(mi) + " is not diagonalizable");
                }
                EigenBlock sub;
                sub.eigenvalues = block.eigenvalues;
                sub.eigenvalues.push_back(lambda);
                for (const auto& c : kernel) {
                    Vec v(n);
                    for (std::size_t j = 0; j < k; ++j) {
                        if (c[j].is_zero()) {
                            continue;
                        }
                        for (std::size_t t = 0; t < n; ++t) {
                            if (!block.basis[j][t].is_zero()) {
                                v[t] += c[j] * block.basis[j][t];
                            }
                        }
                    }
                    sub.basis.push_back(std::move(v));
                }
                next.push_back(std::move(sub));
            }
        }
        blocks = std::move(next);
    }
    std::sort(blocks.begin(), blocks.end(), [](const EigenBlock& a, const EigenBlock& b) {
        return std::lexicographical_compare(a.eigenvalues.begin(), a.eigenvalues.end(), b.eigenvalues.begin(),
                                            b.eigenvalues.end());
    });
    return blocks;
}

} // namespace hcsuper
