#include "hcsuper/symmetric_pair.hpp"

#include "hcsuper/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace hcsuper {

namespace {

std::pair<Subspace, Subspace> split_parity(const LieSuperalgebra& g, const Subspace& s) {
    Subspace even;
    Subspace odd;
    for (const auto& v : s) {
        SparseVec e;
        SparseVec o;
        for (const auto& [i, c] : v) {
            (g.parity(i) == 0 ? e : o).emplace(i, c);
        }
        if (!e.empty()) {
            even.push_back(std::move(e));
        }
        if (!o.empty()) {
            odd.push_back(std::move(o));
        }
    }
    return {span_basis(even), span_basis(odd)};
}

Subspace concat(std::initializer_list<const Subspace*> parts) {
    Subspace out;
    for (const auto* p : parts) {
        out.insert(out.end(), p->begin(), p->end());
    }
    return out;
}

bool lex_less(const Vec& x, const Vec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) {
            return x[i] < y[i];
        }
    }
    return false;
}

Vec negated(const Vec& v) {
    Vec out;
    for (const auto& s : v) {
        out.push_back(-s);
    }
    return out;
}

Vec sum(const Vec& x, const Vec& y) {
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + y[i];
    }
    return out;
}

std::string coords_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? ", " : "") << v[i];
    }
    os << ")";
    return os.str();
}

Scalar direction_value(const Vec& w, const Vec& lambda) {
    Scalar s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += w[i] * lambda[i];
    }
    return s;
}

void fill_odd_data(RestrictedRootSystem& sys) {
    sys.odd.clear();
    const std::size_t r = sys.rank();
    for (std::size_t idx = 0; idx < sys.roots.size(); ++idx) {
        const auto& root = sys.roots[idx];
        if (!root.positive || root.m1() == 0) {
            continue;
        }
        OddRootDatum d;
        d.root = idx;
        d.lambda = root.coords;
        d.q = root.m1() / 2;
        d.c = sys.pairing(root.coords, root.coords);
        d.A = sys.dual_form.apply(root.coords);
        d.gated = sys.find(sum(root.coords, root.coords)).has_value();
        Vec bA = sys.gram.apply(d.A);
        std::vector<SparseVec> conditions{to_sparse(bA)};
        if (d.c.is_zero()) {
            d.iso = IsoClass::Isotropic;
            std::size_t i = 0;
            while (root.coords[i].is_zero()) {
                ++i;
            }
            Vec h(r);
            h[i] = root.coords[i].inverse();
            Scalar bhh;
            Vec bh = sys.gram.apply(h);
            for (std::size_t j = 0; j < r; ++j) {
                bhh += h[j] * bh[j];
            }
            d.h0 = h;
            for (std::size_t j = 0; j < r; ++j) {
                d.h0[j] -= Scalar(1, 2) * bhh * d.A[j];
            }
            conditions.push_back(to_sparse(sys.gram.apply(d.h0)));
        } else {
            d.iso = IsoClass::Anisotropic;
            d.a = d.A;
            for (auto& s : d.a) {
                s /= d.c;
            }
        }
        for (const auto& v : nullspace_sparse(r, conditions)) {
            d.a_perp.push_back(to_dense(v, r));
        }
        sys.odd.push_back(std::move(d));
    }
}

} // namespace

Subspace SymmetricPair::k() const {
    return concat({&k0, &k1});
}

Subspace SymmetricPair::p() const {
    return concat({&p0, &p1});
}

SymmetricPair build_pair(std::shared_ptr<const LieSuperalgebra> g, const Subspace& a_basis) {
    if (!g->has_form()) {
        throw MissingForm("symmetric pair needs an invariant form");
    }
    if (!g->has_theta()) {
        throw MissingInvolution("symmetric pair needs an involution");
    }
    SymmetricPair pair;
    pair.g = g;
    const auto split = theta_eigenspaces(*g);
    std::tie(pair.k0, pair.k1) = split_parity(*g, split.k);
    std::tie(pair.p0, pair.p1) = split_parity(*g, split.p);

    for (const auto& v : a_basis) {
        const auto par = g->parity_of(v);
        if (v.empty() || !par || *par != 0) {
            throw NotInEvenP("a contains a vector that is not even");
        }
        SparseVec t = g->apply_theta(v);
        axpy(t, Scalar(1), v);
        if (!t.empty()) {
            throw NotInEvenP("a contains a vector outside p");
        }
    }
    if (span_dim(a_basis) != a_basis.size()) {
        throw DimensionMismatch("a basis is linearly dependent");
    }
    pair.a = a_basis;
    for (std::size_t i = 0; i < a_basis.size(); ++i) {
        for (std::size_t j = i + 1; j < a_basis.size(); ++j) {
            if (!g->bracket(a_basis[i], a_basis[j]).empty()) {
                throw NotAbelian("a is not abelian");
            }
        }
    }
    const auto zp = centralizer(*g, a_basis, pair.p());
    if (zp.size() > a_basis.size()) {
        std::ostringstream os;
        os << "z_p(a) has dimension " << zp.size() << " > dim a = " << a_basis.size();
        throw CentralizerTooLarge(os.str());
    }
    std::vector<Vec> rows;
    for (const auto& x : a_basis) {
        Vec row;
        for (const auto& y : a_basis) {
            row.push_back(g->b(x, y));
        }
        rows.push_back(std::move(row));
    }
    pair.gram = rows.empty() ? ScalarMatrix(0, 0) : ScalarMatrix::from_rows(rows);
    if (rank(pair.gram) != a_basis.size()) {
        throw DegenerateFormOnA("b is degenerate on a");
    }
    pair.m = centralizer(*g, a_basis, pair.k());
    return pair;
}

Scalar RestrictedRootSystem::pairing(const Vec& x, const Vec& y) const {
    Vec dy = dual_form.apply(y);
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * dy[i];
    }
    return s;
}

std::optional<std::size_t> RestrictedRootSystem::find(const Vec& coords) const {
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].coords == coords) {
            return i;
        }
    }
    return std::nullopt;
}

Subspace RestrictedRootSystem::n() const {
    Subspace out;
    for (const auto& r : roots) {
        if (r.positive) {
            out.insert(out.end(), r.even_space.begin(), r.even_space.end());
            out.insert(out.end(), r.odd_space.begin(), r.odd_space.end());
        }
    }
    return out;
}

RestrictedRootSystem restricted_roots(const SymmetricPair& pair) {
    return restricted_roots(pair, Vec{});
}

RestrictedRootSystem restricted_roots(const SymmetricPair& pair, const Vec& direction) {
    const auto& g = *pair.g;
    const std::size_t r = pair.a.size();
    RestrictedRootSystem sys;
    sys.gram = pair.gram;
    sys.dual_form = r == 0 ? ScalarMatrix(0, 0) : *inverse(pair.gram);

    std::vector<ScalarMatrix> ads;
    for (const auto& h : pair.a) {
        ads.push_back(g.ad_matrix(h));
    }
    std::size_t zero_weight = 0;
    for (int parity = 0; parity < 2; ++parity) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < g.dim(); ++i) {
            if (g.parity(i) == parity) {
                idx.push_back(i);
            }
        }
        if (idx.empty()) {
            continue;
        }
        std::vector<EigenBlock> blocks;
        if (r == 0) {
            EigenBlock all;
            for (std::size_t t = 0; t < idx.size(); ++t) {
                Vec v(idx.size());
                v[t] = Scalar(1);
                all.basis.push_back(std::move(v));
            }
            blocks.push_back(std::move(all));
        } else {
            std::vector<ScalarMatrix> subs;
            for (const auto& ad : ads) {
                std::vector<Vec> rows;
                for (std::size_t i : idx) {
                    Vec row;
                    for (std::size_t j : idx) {
                        row.push_back(ad.at(i, j));
                    }
                    rows.push_back(std::move(row));
                }
                subs.push_back(ScalarMatrix::from_rows(rows));
            }
            blocks = simultaneous_eigenspaces(subs);
        }
        for (const auto& block : blocks) {
            Subspace space;
            for (const auto& v : block.basis) {
                SparseVec full;
                for (std::size_t t = 0; t < idx.size(); ++t) {
                    if (!v[t].is_zero()) {
                        full.emplace(idx[t], v[t]);
                    }
                }
                space.push_back(std::move(full));
            }
            const bool is_zero = std::all_of(block.eigenvalues.begin(), block.eigenvalues.end(),
                                             [](const Scalar& s) { return s.is_zero(); });
            if (is_zero) {
                zero_weight += space.size();
                continue;
            }
            auto found = sys.find(block.eigenvalues);
            if (!found) {
                RestrictedRoot root;
                root.coords = block.eigenvalues;
                sys.roots.push_back(std::move(root));
                found = sys.roots.size() - 1;
            }
            auto& target = parity == 0 ? sys.roots[*found].even_space : sys.roots[*found].odd_space;
            target.insert(target.end(), space.begin(), space.end());
        }
    }
    if (zero_weight != pair.m.size() + r) {
        throw InvalidAlgebra("zero weight space is not m + a");
    }
    std::sort(sys.roots.begin(), sys.roots.end(),
              [](const RestrictedRoot& x, const RestrictedRoot& y) { return lex_less(x.coords, y.coords); });
    choose_positive_system(sys, direction.empty() ? default_direction(sys.roots, r) : direction);
    return sys;
}

Vec default_direction(const std::vector<RestrictedRoot>& roots, std::size_t rank) {
    for (long t = 1;; ++t) {
        Vec w;
        Scalar p(1);
        for (std::size_t i = 0; i < rank; ++i) {
            w.push_back(p);
            p *= Scalar(t);
        }
        const bool generic = std::none_of(roots.begin(), roots.end(), [&](const RestrictedRoot& root) {
            return direction_value(w, root.coords).is_zero();
        });
        if (generic) {
            return w;
        }
    }
}

void choose_positive_system(RestrictedRootSystem& system, const Vec& direction) {
    if (direction.size() != system.rank()) {
        throw DimensionMismatch("direction has the wrong dimension");
    }
    for (auto& root : system.roots) {
        const Scalar v = direction_value(direction, root.coords);
        if (v.is_zero()) {
            throw DirectionOnWall("direction vanishes on root " + coords_string(root.coords));
        }
        root.positive = v.sign() > 0;
    }
    for (const auto& x : system.roots) {
        for (const auto& y : system.roots) {
            if (!x.positive || !y.positive) {
                continue;
            }
            auto s = system.find(sum(x.coords, y.coords));
            if (s && !system.roots[*s].positive) {
                throw DirectionOnWall("positive system is not closed");
            }
        }
    }
    system.direction = direction;
    auto parts = rho_from_multiplicities(system);
    system.rho = parts.rho;
    system.rho0 = parts.rho0;
    system.rho1 = parts.rho1;
    fill_odd_data(system);
}

RhoParts rho_from_multiplicities(const RestrictedRootSystem& system) {
    const std::size_t r = system.rank();
    RhoParts out{Vec(r), Vec(r), Vec(r)};
    for (const auto& root : system.roots) {
        if (!root.positive) {
            continue;
        }
        for (std::size_t i = 0; i < r; ++i) {
            out.rho0[i] += Scalar(static_cast<long>(root.m0()), 2) * root.coords[i];
            out.rho1[i] += Scalar(static_cast<long>(root.m1()), 2) * root.coords[i];
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        out.rho[i] = out.rho0[i] - out.rho1[i];
    }
    return out;
}

Vec rho_supertrace(const SymmetricPair& pair, const RestrictedRootSystem& system) {
    const auto& g = *pair.g;
    const Subspace n = system.n();
    Echelon e;
    for (const auto& v : n) {
        e.insert(v);
    }
    Vec out;
    for (const auto& h : pair.a) {
        Scalar str;
        for (std::size_t t = 0; t < n.size(); ++t) {
            auto coords = e.coordinates(g.bracket(h, n[t]));
            if (!coords) {
                throw InvalidAlgebra("n is not a-stable");
            }
            auto it = coords->find(t);
            if (it != coords->end()) {
                const int par = g.parity_of(n[t]).value_or(0);
                str += par == 0 ? it->second : -it->second;
            }
        }
        out.push_back(Scalar(1, 2) * str);
    }
    return out;
}

WeylGroup even_weyl_group(const RestrictedRootSystem& system) {
    const std::size_t r = system.rank();
    WeylGroup w;
    const auto id = ScalarMatrix::identity(r);
    for (const auto& root : system.roots) {
        if (root.m0() == 0 || !root.positive) {
            continue;
        }
        const Scalar norm = system.pairing(root.coords, root.coords);
        if (norm.is_zero()) {
            continue;
        }
        // s(mu) = mu - 2 <mu, alpha> / <alpha, alpha> alpha
        Vec dual = system.dual_form.apply(root.coords);
        std::vector<Vec> rows(r, Vec(r));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                rows[i][j] = id.at(i, j) - Scalar(2) * root.coords[i] * dual[j] / norm;
            }
        }
        auto s = ScalarMatrix::from_rows(rows);
        if (std::find(w.generators.begin(), w.generators.end(), s) == w.generators.end()) {
            w.generators.push_back(std::move(s));
        }
    }
    w.elements.push_back(id);
    for (std::size_t next = 0; next < w.elements.size(); ++next) {
        for (const auto& s : w.generators) {
            auto prod = s * w.elements[next];
            if (std::find(w.elements.begin(), w.elements.end(), prod) == w.elements.end()) {
                w.elements.push_back(std::move(prod));
            }
        }
    }
    return w;
}

APolynomial weyl_act(const ScalarMatrix& w, const APolynomial& p) {
    auto inv = inverse(w);
    if (!inv) {
        throw DimensionMismatch("Weyl group element is singular");
    }
    return p.linear_substitute(*inv);
}

IwasawaReport iwasawa_check(const SymmetricPair& pair, const RestrictedRootSystem& system,
                            std::uint64_t seed, std::size_t samples,
                            const std::optional<Subspace>& n_override) {
    const auto& g = *pair.g;
    IwasawaReport report;
    const Subspace n = n_override ? *n_override : system.n();
    const auto [n0, n1] = split_parity(g, n);

    std::size_t g0 = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        g0 += g.parity(i) == 0 ? 1 : 0;
    }
    const std::size_t g1 = g.dim() - g0;
    if (pair.k0.size() + pair.a.size() + n0.size() != g0) {
        std::ostringstream os;
        os << "even dimensions: k " << pair.k0.size() << " + a " << pair.a.size() << " + n " << n0.size()
           << " != g " << g0;
        report.failures.push_back(os.str());
    }
    if (pair.k1.size() + n1.size() != g1) {
        std::ostringstream os;
        os << "odd dimensions: k " << pair.k1.size() << " + n " << n1.size() << " != g " << g1;
        report.failures.push_back(os.str());
    }
    const Subspace an = concat({&pair.a, &n});
    const Subspace k = pair.k();
    const Subspace kan = concat({&k, &an});
    if (span_dim(an) != an.size() || span_dim(kan) != k.size() + an.size()) {
        report.failures.push_back("k meets a + n");
    }

    const long expected = static_cast<long>(pair.k1.size()) - static_cast<long>(pair.p1.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (std::size_t s = 0; s <= samples; ++s) {
        SparseVec x;
        if (s > 0) {
            for (const auto& v : pair.p0) {
                axpy(x, Scalar(coeff(rng)), v);
            }
        }
        const Subspace xs{x};
        const long zk = static_cast<long>(centralizer(g, xs, pair.k1).size());
        const long zp = static_cast<long>(centralizer(g, xs, pair.p1).size());
        if (zk - zp != expected) {
            std::ostringstream os;
            os << "centralizer dimensions at sample " << s << ": " << zk << " - " << zp << " != " << expected;
            report.failures.push_back(os.str());
        }
        ++report.samples;
    }
    return report;
}

std::vector<std::string> check_root_grading(const SymmetricPair& pair, const RestrictedRootSystem& system) {
    const auto& g = *pair.g;
    std::vector<std::string> failures;
    Echelon zero_space;
    for (const auto* s : {&pair.m, &pair.a}) {
        for (const auto& v : *s) {
            zero_space.insert(v);
        }
    }
    std::vector<Echelon> spaces(system.roots.size());
    for (std::size_t i = 0; i < system.roots.size(); ++i) {
        for (const auto* s : {&system.roots[i].even_space, &system.roots[i].odd_space}) {
            for (const auto& v : *s) {
                spaces[i].insert(v);
            }
        }
    }
    for (std::size_t i = 0; i < system.roots.size(); ++i) {
        for (std::size_t j = 0; j < system.roots.size(); ++j) {
            const Vec target = sum(system.roots[i].coords, system.roots[j].coords);
            const bool zero = std::all_of(target.begin(), target.end(), [](const Scalar& s) { return s.is_zero(); });
            const auto t = system.find(target);
            const Subspace xi = concat({&system.roots[i].even_space, &system.roots[i].odd_space});
            const Subspace yj = concat({&system.roots[j].even_space, &system.roots[j].odd_space});
            for (const auto& x : xi) {
                for (const auto& y : yj) {
                    const SparseVec z = g.bracket(x, y);
                    const bool ok = zero ? zero_space.contains(z) : (t ? spaces[*t].contains(z) : z.empty());
                    if (!ok) {
                        failures.push_back("[g^" + coords_string(system.roots[i].coords) + ", g^" +
                                           coords_string(system.roots[j].coords) + "] leaves g^" +
                                           coords_string(target));
                    }
                }
            }
        }
    }
    return failures;
}

std::vector<std::string> check_theta_on_roots(const SymmetricPair& pair, const RestrictedRootSystem& system) {
    const auto& g = *pair.g;
    std::vector<std::string> failures;
    for (const auto& root : system.roots) {
        const auto opposite = system.find(negated(root.coords));
        if (!opposite) {
            failures.push_back("-" + coords_string(root.coords) + " is not a root");
            continue;
        }
        const auto& other = system.roots[*opposite];
        if (other.m0() != root.m0() || other.m1() != root.m1()) {
            failures.push_back("multiplicities of +-" + coords_string(root.coords) + " differ");
            continue;
        }
        Echelon target;
        for (const auto* s : {&other.even_space, &other.odd_space}) {
            for (const auto& v : *s) {
                target.insert(v);
            }
        }
        Subspace images;
        for (const auto* s : {&root.even_space, &root.odd_space}) {
            for (const auto& v : *s) {
                images.push_back(g.apply_theta(v));
                if (!target.contains(images.back())) {
                    failures.push_back("theta moves g^" + coords_string(root.coords) + " off g^" +
                                       coords_string(other.coords));
                }
            }
        }
        if (span_dim(images) != target.rank()) {
            failures.push_back("theta(g^" + coords_string(root.coords) + ") is not all of the opposite space");
        }
    }
    return failures;
}

std::vector<std::string> check_weyl_permutes(const RestrictedRootSystem& system, const WeylGroup& w) {
    std::vector<std::string> failures;
    for (std::size_t e = 0; e < w.elements.size(); ++e) {
        for (const auto& root : system.roots) {
            const Vec image = w.elements[e].apply(root.coords);
            const auto t = system.find(image);
            if (!t) {
                failures.push_back("element " + std::to_string(e) + " sends " + coords_string(root.coords) +
                                   " outside the roots");
            } else if (system.roots[*t].m0() != root.m0() || system.roots[*t].m1() != root.m1()) {
                failures.push_back("element " + std::to_string(e) + " changes multiplicities of " +
                                   coords_string(root.coords));
            }
        }
    }
    return failures;
}

} // namespace hcsuper
