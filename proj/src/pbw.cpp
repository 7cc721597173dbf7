#include "hcsuper/pbw.hpp"

#include "hcsuper/errors.hpp"

#include <algorithm>
#include <functional>

namespace hcsuper {

namespace {

int koszul(int a, int b) { return (a * b) % 2 == 0 ? 1 : -1; }

} // namespace

// ---------------------------------------------------------------------------
// BasisOrder

BasisOrder::BasisOrder(std::vector<std::size_t> sequence, std::vector<Block> tags)
    : sequence_(std::move(sequence)), rank_(sequence_.size(), sequence_.size()), tags_(std::move(tags)) {
    if (tags_.size() != sequence_.size()) {
        throw DimensionMismatch("basis order needs one tag per basis index");
    }
    for (std::size_t r = 0; r < sequence_.size(); ++r) {
        const std::size_t i = sequence_[r];
        if (i >= sequence_.size() || rank_[i] != sequence_.size()) {
            throw DimensionMismatch("basis order is not a permutation");
        }
        rank_[i] = r;
    }
}

BasisOrder BasisOrder::natural(std::size_t n) {
    std::vector<std::size_t> seq(n);
    for (std::size_t i = 0; i < n; ++i) {
        seq[i] = i;
    }
    return BasisOrder(std::move(seq), std::vector<Block>(n, Block::Other));
}

bool BasisOrder::blocks_in_order(const std::vector<Block>& order) const {
    std::size_t pos = 0;
    for (std::size_t idx : sequence_) {
        const Block b = tags_[idx];
        while (pos < order.size() && order[pos] != b) {
            ++pos;
        }
        if (pos == order.size()) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// UEAElement

UEAElement::UEAElement(std::uint64_t algebra, Terms terms) : algebra_(algebra) {
    for (auto& [m, s] : terms) {
        if (!s.is_zero()) {
            terms_.emplace(m, s);
        }
    }
}

int UEAElement::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

Scalar UEAElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void UEAElement::add_term(const Monomial& m, const Scalar& s) {
    if (s.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void UEAElement::adopt(const UEAElement& rhs) {
    if (algebra_ == 0) {
        algebra_ = rhs.algebra_;
    } else if (rhs.algebra_ != 0 && rhs.algebra_ != algebra_) {
        throw MixedAlgebras("enveloping algebra elements of different algebras");
    }
}

UEAElement& UEAElement::operator+=(const UEAElement& rhs) {
    adopt(rhs);
    for (const auto& [m, s] : rhs.terms_) {
        add_term(m, s);
    }
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& rhs) {
    adopt(rhs);
    for (const auto& [m, s] : rhs.terms_) {
        add_term(m, -s);
    }
    return *this;
}

UEAElement operator*(const Scalar& s, const UEAElement& u) {
    UEAElement out(u.algebra_);
    if (s.is_zero()) {
        return out;
    }
    for (const auto& [m, c] : u.terms_) {
        out.terms_.emplace(m, c * s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// SymElement

SymElement SymElement::one() {
    SymElement p;
    p.terms_.emplace(Monomial{}, Scalar(1));
    return p;
}

SymElement SymElement::generator(std::size_t i) {
    SymElement p;
    p.terms_.emplace(Monomial{i}, Scalar(1));
    return p;
}

int SymElement::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }

void SymElement::add_term(const Monomial& sorted, const Scalar& s) {
    if (s.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(sorted, s);
    if (!inserted) {
        it->second += s;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

SymElement& SymElement::operator+=(const SymElement& rhs) {
    for (const auto& [m, s] : rhs.terms_) {
        add_term(m, s);
    }
    return *this;
}

SymElement& SymElement::operator-=(const SymElement& rhs) {
    for (const auto& [m, s] : rhs.terms_) {
        add_term(m, -s);
    }
    return *this;
}

SymElement operator*(const Scalar& s, const SymElement& p) {
    SymElement out;
    for (const auto& [m, c] : p.terms_) {
        out.add_term(m, c * s);
    }
    return out;
}

std::pair<Monomial, int> sym_normalize(const LieSuperalgebra& g, Monomial word) {
    int sign = 1;
    // insertion sort, counting exchanges of two odd generators
    for (std::size_t i = 1; i < word.size(); ++i) {
        for (std::size_t j = i; j > 0 && word[j - 1] > word[j]; --j) {
            if (g.parity(word[j - 1]) == 1 && g.parity(word[j]) == 1) {
                sign = -sign;
            }
            std::swap(word[j - 1], word[j]);
        }
    }
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i] == word[i - 1] && g.parity(word[i]) == 1) {
            return {word, 0};
        }
    }
    return {word, sign};
}

SymElement sym_multiply(const LieSuperalgebra& g, const SymElement& a, const SymElement& b) {
    SymElement out;
    for (const auto& [ma, sa] : a.terms()) {
        for (const auto& [mb, sb] : b.terms()) {
            Monomial w = ma;
            w.insert(w.end(), mb.begin(), mb.end());
            auto [m, sign] = sym_normalize(g, std::move(w));
            if (sign != 0) {
                out.add_term(m, sa * sb * Scalar(sign));
            }
        }
    }
    return out;
}

SymElement sym_linear(const SparseVec& v) {
    SymElement out;
    for (const auto& [i, s] : v) {
        out.add_term(Monomial{i}, s);
    }
    return out;
}

SymElement sym_power(const LieSuperalgebra& g, const SymElement& p, unsigned k) {
    SymElement out = SymElement::one();
    for (unsigned i = 0; i < k; ++i) {
        out = sym_multiply(g, out, p);
    }
    return out;
}

SymElement sym_adjoint(const LieSuperalgebra& g, const SparseVec& x, const SymElement& p) {
    const auto px = g.parity_of(x);
    if (!px) {
        throw DimensionMismatch("adjoint by an inhomogeneous vector");
    }
    SymElement out;
    for (const auto& [m, s] : p.terms()) {
        int passed = 0;
        for (std::size_t t = 0; t < m.size(); ++t) {
            SymElement term = SymElement::one();
            for (std::size_t u = 0; u < t; ++u) {
                term = sym_multiply(g, term, SymElement::generator(m[u]));
            }
            term = sym_multiply(g, term, sym_linear(g.bracket(x, SparseVec{{m[t], Scalar(1)}})));
            for (std::size_t u = t + 1; u < m.size(); ++u) {
                term = sym_multiply(g, term, SymElement::generator(m[u]));
            }
            const int sign = (*px == 1 && passed % 2 == 1) ? -1 : 1;
            out += (s * Scalar(sign)) * term;
            passed += g.parity(m[t]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// EnvelopingAlgebra

EnvelopingAlgebra::EnvelopingAlgebra(std::shared_ptr<const LieSuperalgebra> g, BasisOrder order)
    : g_(std::move(g)), order_(std::move(order)) {
    if (order_.size() != g_->dim()) {
        throw DimensionMismatch("basis order does not match algebra dimension");
    }
}

void EnvelopingAlgebra::check(const UEAElement& u) const {
    if (u.algebra() != 0 && u.algebra() != g_->id()) {
        throw MixedAlgebras("element belongs to a different enveloping algebra");
    }
}

UEAElement EnvelopingAlgebra::one() const { return from_monomial(Monomial{}); }

UEAElement EnvelopingAlgebra::generator(std::size_t i) const { return from_monomial(Monomial{i}); }

UEAElement EnvelopingAlgebra::from_vector(const SparseVec& v) const {
    UEAElement out(g_->id());
    for (const auto& [i, s] : v) {
        out.add_term(Monomial{i}, s);
    }
    return out;
}

UEAElement EnvelopingAlgebra::from_monomial(const Monomial& m, const Scalar& s) const {
    if (!is_pbw(m)) {
        return s * word_product(m);
    }
    UEAElement out(g_->id());
    out.add_term(m, s);
    return out;
}

int EnvelopingAlgebra::parity(const Monomial& m) const {
    int p = 0;
    for (std::size_t i : m) {
        p += g_->parity(i);
    }
    return p % 2;
}

bool EnvelopingAlgebra::is_pbw(const Monomial& m) const {
    for (std::size_t t = 1; t < m.size(); ++t) {
        const std::size_t a = order_.rank(m[t - 1]);
        const std::size_t b = order_.rank(m[t]);
        if (a > b || (a == b && g_->parity(m[t]) == 1)) {
            return false;
        }
    }
    return true;
}

std::vector<Monomial> EnvelopingAlgebra::monomials_up_to(int d) const {
    std::vector<Monomial> out;
    const std::size_t n = g_->dim();
    Monomial cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t r = start; r < n; ++r) {
            const std::size_t idx = order_.at(r);
            cur.push_back(idx);
            rec(g_->parity(idx) == 1 ? r + 1 : r, remaining - 1);
            cur.pop_back();
        }
    };
    for (int k = 0; k <= d; ++k) {
        rec(0, k);
    }
    return out;
}

const UEAElement& EnvelopingAlgebra::left_mul(std::size_t x, const Monomial& m) const {
    auto key = std::make_pair(x, m);
    if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
    }
    UEAElement r(g_->id());
    if (m.empty() || order_.rank(x) < order_.rank(m.front())) {
        Monomial out{x};
        out.insert(out.end(), m.begin(), m.end());
        r.add_term(out, Scalar(1));
    } else if (x == m.front()) {
        if (g_->parity(x) == 0) {
            Monomial out{x};
            out.insert(out.end(), m.begin(), m.end());
            r.add_term(out, Scalar(1));
        } else {
            // xx = 1/2 [x,x] for odd x
            const Monomial rest(m.begin() + 1, m.end());
            for (const auto& [k, c] : g_->bracket_basis(x, x)) {
                r += (c / Scalar(2)) * left_mul(k, rest);
            }
        }
    } else {
        // x m1 m' = (-1)^{|x||m1|} m1 (x m') + [x, m1] m'
        const std::size_t m1 = m.front();
        const Monomial rest(m.begin() + 1, m.end());
        const UEAElement tail = left_mul(x, rest);
        r += Scalar(koszul(g_->parity(x), g_->parity(m1))) * left_mul(m1, tail);
        for (const auto& [k, c] : g_->bracket_basis(x, m1)) {
            r += c * left_mul(k, rest);
        }
    }
    return memo_.emplace(std::move(key), std::move(r)).first->second;
}

UEAElement EnvelopingAlgebra::left_mul(std::size_t x, const UEAElement& u) const {
    UEAElement out(g_->id());
    for (const auto& [m, s] : u.terms()) {
        out += s * left_mul(x, m);
    }
    return out;
}

UEAElement EnvelopingAlgebra::left_mul(const SparseVec& x, const UEAElement& u) const {
    UEAElement out(g_->id());
    for (const auto& [i, s] : x) {
        out += s * left_mul(i, u);
    }
    return out;
}

UEAElement EnvelopingAlgebra::word_product(const std::vector<std::size_t>& word) const {
    UEAElement out(g_->id());
    out.add_term(Monomial{}, Scalar(1));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        out = left_mul(*it, out);
    }
    return out;
}

UEAElement EnvelopingAlgebra::multiply(const UEAElement& u, const UEAElement& v) const {
    check(u);
    check(v);
    UEAElement out(g_->id());
    for (const auto& [m, s] : u.terms()) {
        UEAElement cur = v;
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            cur = left_mul(*it, cur);
        }
        out += s * cur;
    }
    return out;
}

UEAElement EnvelopingAlgebra::normal_form(const std::vector<std::size_t>& word, Strategy strategy) const {
    std::map<std::vector<std::size_t>, Scalar> pending;
    pending.emplace(word, Scalar(1));
    UEAElement done(g_->id());
    auto push = [&pending](std::vector<std::size_t> w, const Scalar& s) {
        if (s.is_zero()) {
            return;
        }
        auto [it, inserted] = pending.try_emplace(std::move(w), s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) {
                pending.erase(it);
            }
        }
    };
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const auto& w = node.key();
        const Scalar c = node.mapped();
        std::size_t pos = w.size();
        for (std::size_t t = 0; t + 1 < w.size(); ++t) {
            const std::size_t i = strategy == Strategy::Leftmost ? t : w.size() - 2 - t;
            const bool odd_square = w[i] == w[i + 1] && g_->parity(w[i]) == 1;
            if (odd_square || order_.rank(w[i]) > order_.rank(w[i + 1])) {
                pos = i;
                break;
            }
        }
        if (pos == w.size()) {
            done.add_term(w, c);
            continue;
        }
        const std::size_t x = w[pos];
        const std::size_t y = w[pos + 1];
        auto replaced = [&](std::size_t k) {
            std::vector<std::size_t> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            out.push_back(k);
            out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
            return out;
        };
        if (x == y) {
            for (const auto& [k, s] : g_->bracket_basis(x, x)) {
                push(replaced(k), c * s / Scalar(2));
            }
            continue;
        }
        std::vector<std::size_t> swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        push(std::move(swapped), c * Scalar(koszul(g_->parity(x), g_->parity(y))));
        for (const auto& [k, s] : g_->bracket_basis(x, y)) {
            push(replaced(k), c * s);
        }
    }
    return done;
}

UEAElement EnvelopingAlgebra::normal_form(const std::vector<SuperVector>& word, Strategy strategy) const {
    for (const auto& v : word) {
        if (!v.is_zero() && v.algebra() != g_->id()) {
            throw MixedAlgebras("word contains a vector of a different algebra");
        }
    }
    // expand multilinearly into basis words
    std::map<std::vector<std::size_t>, Scalar> words{{{}, Scalar(1)}};
    for (const auto& v : word) {
        std::map<std::vector<std::size_t>, Scalar> next;
        for (const auto& [w, s] : words) {
            for (const auto& [i, c] : v.coeffs()) {
                auto w2 = w;
                w2.push_back(i);
                next[w2] += s * c;
            }
        }
        words = std::move(next);
    }
    UEAElement out(g_->id());
    for (const auto& [w, s] : words) {
        if (!s.is_zero()) {
            out += s * normal_form(w, strategy);
        }
    }
    return out;
}

UEAElement EnvelopingAlgebra::adjoint(const SparseVec& x, const UEAElement& u) const {
    check(u);
    UEAElement out(g_->id());
    for (const auto& [i, c] : x) {
        const UEAElement xi = generator(i);
        for (const auto& [m, s] : u.terms()) {
            const Scalar sign(koszul(g_->parity(i), parity(m)));
            out += (c * s) * left_mul(i, m);
            out -= (c * s * sign) * multiply(from_monomial(m), xi);
        }
    }
    return out;
}

UEAElement EnvelopingAlgebra::supersymmetrize(const SymElement& p) const {
    UEAElement out(g_->id());
    for (const auto& [m, c] : p.terms()) {
        // distinct arrangements; each stands for prod(mult!) permutations of equal sign
        Scalar weight = Scalar(1) / factorial(static_cast<unsigned>(m.size()));
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) {
                ++j;
            }
            weight *= factorial(static_cast<unsigned>(j - i));
            i = j;
        }
        Monomial arr = m;
        std::sort(arr.begin(), arr.end());
        do {
            int sign = 1;
            for (std::size_t a = 0; a < arr.size(); ++a) {
                for (std::size_t b = a + 1; b < arr.size(); ++b) {
                    if (arr[a] > arr[b] && g_->parity(arr[a]) == 1 && g_->parity(arr[b]) == 1) {
                        sign = -sign;
                    }
                }
            }
            out += (c * weight * Scalar(sign)) * word_product(arr);
        } while (std::next_permutation(arr.begin(), arr.end()));
    }
    return out;
}

SymElement EnvelopingAlgebra::leading_symbol(const UEAElement& u) const {
    check(u);
    SymElement out;
    const int d = u.degree();
    for (const auto& [m, s] : u.terms()) {
        if (static_cast<int>(m.size()) != d) {
            continue;
        }
        auto [sorted, sign] = sym_normalize(*g_, m);
        if (sign != 0) {
            out.add_term(sorted, s * Scalar(sign));
        }
    }
    return out;
}

UEAElement EnvelopingAlgebra::convert(const UEAElement& u, const EnvelopingAlgebra& from) const {
    if (from.g_->id() != g_->id()) {
        throw MixedAlgebras("conversion between enveloping algebras of different algebras");
    }
    UEAElement out(g_->id());
    for (const auto& [m, s] : u.terms()) {
        out += s * word_product(m);
    }
    return out;
}

TensorElement EnvelopingAlgebra::coproduct(const UEAElement& u) const {
    check(u);
    TensorElement out;
    for (const auto& [m, s] : u.terms()) {
        const std::size_t n = m.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Monomial left;
            Monomial right;
            int right_parity = 0;
            int sign = 1;
            for (std::size_t t = 0; t < n; ++t) {
                const int p = g_->parity(m[t]);
                if ((mask >> t) & 1U) {
                    right.push_back(m[t]);
                    right_parity ^= p;
                } else {
                    // (L (x) R)(x (x) 1) = (-1)^{|R||x|} Lx (x) R
                    sign *= koszul(right_parity, p);
                    left.push_back(m[t]);
                }
            }
            auto key = std::make_pair(std::move(left), std::move(right));
            auto& slot = out[key];
            slot += s * Scalar(sign);
            if (slot.is_zero()) {
                out.erase(key);
            }
        }
    }
    return out;
}

TensorElement EnvelopingAlgebra::tensor_multiply(const TensorElement& a, const TensorElement& b) const {
    TensorElement out;
    for (const auto& [ka, sa] : a) {
        for (const auto& [kb, sb] : b) {
            const Scalar sign(koszul(parity(ka.second), parity(kb.first)));
            const UEAElement l = multiply(from_monomial(ka.first), from_monomial(kb.first));
            const UEAElement r = multiply(from_monomial(ka.second), from_monomial(kb.second));
            for (const auto& [ml, cl] : l.terms()) {
                for (const auto& [mr, cr] : r.terms()) {
                    auto key = std::make_pair(ml, mr);
                    auto& slot = out[key];
                    slot += sa * sb * sign * cl * cr;
                    if (slot.is_zero()) {
                        out.erase(key);
                    }
                }
            }
        }
    }
    return out;
}

UEAElement EnvelopingAlgebra::antipode(const UEAElement& u) const {
    check(u);
    UEAElement out(g_->id());
    for (const auto& [m, s] : u.terms()) {
        long odd = 0;
        for (std::size_t i : m) {
            odd += g_->parity(i);
        }
        const bool negative = (m.size() % 2 == 1) != ((odd * (odd - 1) / 2) % 2 == 1);
        std::vector<std::size_t> reversed(m.rbegin(), m.rend());
        out += (negative ? -s : s) * word_product(reversed);
    }
    return out;
}

Scalar EnvelopingAlgebra::counit(const UEAElement& u) const {
    check(u);
    return u.coeff(Monomial{});
}

UEAElement EnvelopingAlgebra::antipode_contract(const TensorElement& t) const {
    UEAElement out(g_->id());
    for (const auto& [k, s] : t) {
        out += s * multiply(antipode(from_monomial(k.first)), from_monomial(k.second));
    }
    return out;
}

} // namespace hcsuper
