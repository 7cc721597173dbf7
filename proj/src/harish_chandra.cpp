#include "hcsuper/harish_chandra.hpp"

#include "hcsuper/errors.hpp"
#include "hcsuper/invariant_rings.hpp"

#include <algorithm>
#include <set>

namespace hcsuper {

namespace {

std::string monomial_string(const LieSuperalgebra& g, const Monomial& m) {
    std::string out;
    for (std::size_t i : m) {
        out += (out.empty() ? "" : " ") + g.name(i);
    }
    return out.empty() ? "1" : out;
}

SparseVec poly_vector(const APolynomial& p, std::map<Exponent, std::size_t>& ids) {
    SparseVec v;
    for (const auto& [e, c] : p.terms()) {
        auto it = ids.emplace(e, ids.size()).first;
        v[it->second] = c;
    }
    return v;
}

} // namespace

APolynomial project_to_a(const EnvelopingAlgebra& env, const UEAElement& d) {
    const auto& order = env.order();
    if (!order.blocks_in_order({Block::K, Block::A, Block::N})) {
        throw OrderNotIwasawa("PBW order must list the K, A and N blocks in that order");
    }
    if (!d.is_zero() && d.algebra() != env.algebra().id()) {
        throw MixedAlgebras("element belongs to a different algebra");
    }
    std::map<std::size_t, std::size_t> var;
    for (std::size_t idx : order.sequence()) {
        if (order.block(idx) == Block::A) {
            var.emplace(idx, var.size());
        }
    }
    APolynomial out(var.size());
    for (const auto& [m, c] : d.terms()) {
        const bool pure = std::all_of(m.begin(), m.end(), [&](std::size_t i) { return order.block(i) == Block::A; });
        if (pure) {
            Exponent e(var.size(), 0);
            for (std::size_t i : m) {
                ++e[var.at(i)];
            }
            out.add_term(e, c);
        } else if (order.block(m.front()) != Block::K && order.block(m.back()) != Block::N) {
            throw OrderNotIwasawa("monomial " + monomial_string(env.algebra(), m) + " is not in kU(g) + U(g)n");
        }
    }
    return out;
}

HarishChandra::Setup HarishChandra::make_setup(const SymmetricPair& pair, const Subspace& n) {
    const auto& g = *pair.g;
    const Subspace k = pair.k();
    Setup s;
    s.k_dim = k.size();
    s.a_dim = pair.a.size();
    if (k.size() + pair.a.size() + n.size() != g.dim()) {
        throw DimensionMismatch("dim k + dim a + dim n = " + std::to_string(k.size() + pair.a.size() + n.size()) +
                                ", expected " + std::to_string(g.dim()));
    }
    std::vector<std::string> names;
    std::set<std::string> used;
    auto add = [&](const Subspace& part, const std::string& prefix) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            const auto& v = part[i];
            std::string name;
            if (v.size() == 1 && v.begin()->second == Scalar(1)) {
                name = g.name(v.begin()->first);
            } else {
                name = prefix + std::to_string(i + 1);
            }
            while (!used.insert(name).second) {
                name += "'";
            }
            names.push_back(name);
            s.basis.push_back(v);
        }
    };
    add(k, "k");
    add(pair.a, "a");
    add(n, "n");
    try {
        s.adapted = std::make_shared<const LieSuperalgebra>(g.change_basis(s.basis, names));
    } catch (const InvalidAlgebra&) {
        throw DimensionMismatch("k + a + n is not a direct sum");
    }
    return s;
}

namespace {

Subspace opposite_n(const RestrictedRootSystem& system) {
    Subspace out;
    for (const auto& r : system.roots) {
        if (!r.positive) {
            out.insert(out.end(), r.even_space.begin(), r.even_space.end());
            out.insert(out.end(), r.odd_space.begin(), r.odd_space.end());
        }
    }
    return out;
}

} // namespace

HarishChandra::HarishChandra(SymmetricPair pair, RestrictedRootSystem system, std::optional<Subspace> n_override)
    : HarishChandra(pair, system, make_setup(pair, n_override ? *n_override : opposite_n(system))) {}

namespace {

BasisOrder tagged(std::size_t k, std::size_t a, std::size_t n, bool k_last) {
    std::vector<Block> tags;
    tags.insert(tags.end(), k, Block::K);
    tags.insert(tags.end(), a, Block::A);
    tags.insert(tags.end(), n, Block::N);
    std::vector<std::size_t> seq;
    for (std::size_t i = k_last ? k : 0; i < k + a + n; ++i) {
        seq.push_back(i);
    }
    if (k_last) {
        for (std::size_t i = 0; i < k; ++i) {
            seq.push_back(i);
        }
    }
    return BasisOrder(std::move(seq), std::move(tags));
}

} // namespace

HarishChandra::HarishChandra(SymmetricPair pair, RestrictedRootSystem system, Setup setup)
    : pair_(std::move(pair)),
      system_(std::move(system)),
      adapted_(setup.adapted),
      k_dim_(setup.k_dim),
      a_dim_(setup.a_dim),
      adapted_basis_(std::move(setup.basis)),
      orig_(pair_.g, BasisOrder::natural(pair_.g->dim())),
      kan_(adapted_, tagged(k_dim_, a_dim_, adapted_->dim() - k_dim_ - a_dim_, false)),
      ank_(adapted_, tagged(k_dim_, a_dim_, adapted_->dim() - k_dim_ - a_dim_, true)) {
    Echelon span;
    for (const auto& v : adapted_basis_) {
        span.insert(v);
    }
    for (std::size_t i = 0; i < pair_.g->dim(); ++i) {
        images_.push_back(*span.coordinates(SparseVec{{i, Scalar(1)}}));
    }
    auto inv = inverse(pair_.gram);
    if (!inv) {
        throw DegenerateFormOnA("form on a is degenerate");
    }
    gram_inverse_ = *inv;
}

UEAElement HarishChandra::word(const EnvelopingAlgebra& env, const std::vector<SparseVec>& images,
                               const Monomial& m) const {
    UEAElement u = env.one();
    for (std::size_t i : m) {
        u = env.multiply(u, env.from_vector(images.at(i)));
    }
    return u;
}

SparseVec HarishChandra::adapt(const SparseVec& x) const {
    SparseVec out;
    for (const auto& [i, c] : x) {
        axpy(out, c, images_.at(i));
    }
    return out;
}

UEAElement HarishChandra::transport(const UEAElement& u) const {
    if (u.is_zero()) {
        return kan_.zero();
    }
    if (u.algebra() == adapted_->id()) {
        return u;
    }
    if (u.algebra() != pair_.g->id()) {
        throw MixedAlgebras("element belongs to neither g nor its adapted form");
    }
    UEAElement out = kan_.zero();
    for (const auto& [m, c] : u.terms()) {
        out += c * word(kan_, images_, m);
    }
    return out;
}

UEAElement HarishChandra::to_original(const UEAElement& u) const {
    if (!u.is_zero() && u.algebra() != adapted_->id()) {
        throw MixedAlgebras("element is not over the adapted basis");
    }
    UEAElement out = orig_.zero();
    for (const auto& [m, c] : u.terms()) {
        out += c * word(orig_, adapted_basis_, m);
    }
    return out;
}

UEAElement HarishChandra::beta(const SymElement& p) const {
    return transport(orig_.supersymmetrize(p));
}

UEAElement HarishChandra::symmetrized_product(const std::vector<SparseVec>& xs) const {
    std::vector<int> parity;
    std::vector<SparseVec> adapted;
    for (const auto& x : xs) {
        auto p = pair_.g->parity_of(x);
        if (!p) {
            throw DimensionMismatch("symmetrized product needs homogeneous vectors");
        }
        parity.push_back(*p);
        adapted.push_back(adapt(x));
    }
    std::vector<std::size_t> perm(xs.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        perm[i] = i;
    }
    UEAElement out = kan_.zero();
    Scalar count(0);
    do {
        int sign = 1;
        for (std::size_t a = 0; a < perm.size(); ++a) {
            for (std::size_t b = a + 1; b < perm.size(); ++b) {
                if (perm[a] > perm[b] && parity[perm[a]] == 1 && parity[perm[b]] == 1) {
                    sign = -sign;
                }
            }
        }
        UEAElement u = kan_.one();
        for (std::size_t i : perm) {
            u = kan_.multiply(u, kan_.from_vector(adapted[i]));
        }
        out += Scalar(sign) * u;
        count += Scalar(1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return (Scalar(1) / count) * out;
}

APolynomial HarishChandra::project_to_a(const UEAElement& d) const {
    return hcsuper::project_to_a(kan_, transport(d));
}

APolynomial HarishChandra::gamma(const UEAElement& d) const {
    return project_to_a(d).shift(system_.rho);
}

InvariantBasis HarishChandra::invariants(unsigned d) const {
    const auto monomials = kan_.monomials_up_to(static_cast<int>(d));
    std::map<Monomial, std::size_t, MonomialLess> column;
    for (const auto& m : monomials) {
        column.emplace(m, column.size());
    }
    // one row per (k generator, output monomial)
    std::map<std::pair<std::size_t, Monomial>, SparseVec> rows;
    for (std::size_t j = 0; j < k_dim_; ++j) {
        const SparseVec x{{j, Scalar(1)}};
        for (std::size_t c = 0; c < monomials.size(); ++c) {
            const UEAElement image = kan_.adjoint(x, kan_.from_monomial(monomials[c]));
            for (const auto& [m, s] : image.terms()) {
                rows[{j, m}][c] = s;
            }
        }
    }
    std::vector<SparseVec> row_list;
    row_list.reserve(rows.size());
    for (auto& [key, r] : rows) {
        row_list.push_back(std::move(r));
    }
    InvariantBasis out;
    out.degree = d;
    for (const auto& v : nullspace_sparse(monomials.size(), row_list)) {
        UEAElement u = kan_.zero();
        for (const auto& [c, s] : v) {
            u.add_term(monomials[c], s);
        }
        out.invariants.push_back(std::move(u));
    }

    // companion: combinations with no monomial free of K in the A < N < K order
    std::map<Monomial, SparseVec, MonomialLess> free_rows;
    for (std::size_t i = 0; i < out.invariants.size(); ++i) {
        const UEAElement u = ank_.convert(out.invariants[i], kan_);
        for (const auto& [m, s] : u.terms()) {
            if (m.empty() || ank_.order().block(m.back()) != Block::K) {
                free_rows[m][i] = s;
            }
        }
    }
    std::vector<SparseVec> free_list;
    for (auto& [m, r] : free_rows) {
        free_list.push_back(std::move(r));
    }
    for (const auto& v : nullspace_sparse(out.invariants.size(), free_list)) {
        UEAElement u = kan_.zero();
        for (const auto& [i, s] : v) {
            u += s * out.invariants[i];
        }
        out.companion.push_back(std::move(u));
    }
    return out;
}

bool HarishChandra::is_invariant(const UEAElement& u) const {
    const UEAElement t = transport(u);
    for (std::size_t j = 0; j < k_dim_; ++j) {
        if (!kan_.adjoint(SparseVec{{j, Scalar(1)}}, t).is_zero()) {
            return false;
        }
    }
    return true;
}

bool HarishChandra::in_right_ideal_k(const UEAElement& u) const {
    const UEAElement t = ank_.convert(transport(u), kan_);
    return std::all_of(t.terms().begin(), t.terms().end(), [&](const auto& term) {
        return !term.first.empty() && ank_.order().block(term.first.back()) == Block::K;
    });
}

Vec HarishChandra::a_coordinates(const SparseVec& x) const {
    const auto& g = *pair_.g;
    Vec pairings;
    for (const auto& h : pair_.a) {
        pairings.push_back(g.b(x, h));
    }
    return gram_inverse_.apply(pairings);
}

APolynomial HarishChandra::gr_restriction(const std::vector<SparseVec>& xs) const {
    APolynomial out = APolynomial::constant(a_dim_, Scalar(1));
    for (const auto& x : xs) {
        out *= APolynomial::linear(a_coordinates(x));
    }
    return out;
}

APolynomial HarishChandra::gr_restriction(const SymElement& p) const {
    APolynomial out(a_dim_);
    for (const auto& [m, c] : p.terms()) {
        std::vector<SparseVec> xs;
        for (std::size_t i : m) {
            xs.push_back(SparseVec{{i, Scalar(1)}});
        }
        out += c * gr_restriction(xs);
    }
    return out;
}

std::optional<UEAElement> HarishChandra::gamma_preimage(const APolynomial& p, const InvariantBasis& basis) const {
    std::map<Exponent, std::size_t> ids;
    Echelon span;
    for (const auto& d : basis.invariants) {
        span.insert(poly_vector(gamma(d), ids));
    }
    const std::size_t known = ids.size();
    const SparseVec target = poly_vector(p, ids);
    if (ids.size() != known) {
        return std::nullopt;
    }
    auto coords = span.coordinates(target);
    if (!coords) {
        return std::nullopt;
    }
    UEAElement out = kan_.zero();
    for (const auto& [i, s] : *coords) {
        out += s * basis.invariants[i];
    }
    return out;
}

ExactSequenceReport verify_exact_sequence(const HarishChandra& hc, const WeylGroup& w, unsigned d) {
    const InvariantBasis basis = hc.invariants(d);
    ExactSequenceReport r;
    r.degree = d;
    r.dim_invariants = basis.invariants.size();
    r.dim_kernel = basis.companion.size();
    for (const auto& c : basis.companion) {
        if (!hc.gamma(c).is_zero()) {
            r.kernel_vanishes = false;
        }
    }
    std::map<Exponent, std::size_t> ids;
    Echelon span;
    for (const auto& inv : basis.invariants) {
        const APolynomial g = hc.gamma(inv);
        for (const auto& el : w.elements) {
            if (weyl_act(el, g) != g) {
                r.weyl_invariant = false;
            }
        }
        if (!membership_J(g, hc.system(), w)) {
            r.in_J = false;
        }
        if (span.insert(poly_vector(g, ids))) {
            r.images.push_back(g);
        }
    }
    r.dim_image = span.rank();
    r.exact = r.dim_invariants == r.dim_kernel + r.dim_image;
    return r;
}

std::vector<std::string> check_degree_drop(const HarishChandra& hc, unsigned max_degree) {
    const auto& g = *hc.pair().g;
    const Subspace p = hc.pair().p();
    std::vector<std::string> failures;
    // multisets of p-basis indices, odd ones at most once
    std::vector<std::vector<std::size_t>> current{{}};
    for (unsigned deg = 1; deg <= max_degree; ++deg) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& m : current) {
            for (std::size_t i = m.empty() ? 0 : m.back(); i < p.size(); ++i) {
                if (!m.empty() && m.back() == i && g.parity_of(p[i]) == 1) {
                    continue;
                }
                auto m2 = m;
                m2.push_back(i);
                next.push_back(std::move(m2));
            }
        }
        for (const auto& m : next) {
            std::vector<SparseVec> xs;
            for (std::size_t i : m) {
                xs.push_back(p[i]);
            }
            const APolynomial diff = hc.gamma(hc.symmetrized_product(xs)) - hc.gr_restriction(xs);
            if (diff.degree() >= static_cast<int>(deg)) {
                std::string name;
                for (std::size_t i : m) {
                    name += "p" + std::to_string(i) + " ";
                }
                failures.push_back("degree does not drop for " + name);
            }
        }
        current = std::move(next);
    }
    return failures;
}

} // namespace hcsuper
