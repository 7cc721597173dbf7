#include "hcsuper/catalog.hpp"

#include "hcsuper/algebras.hpp"
#include "hcsuper/errors.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <thread>

namespace hcsuper {

namespace {

bool is_diagonal(const ScalarMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (const auto& [j, s] : m.row(i)) {
            if (j != i && !s.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

SymmetricPair group_type_pair(const LieSuperalgebra& g0) {
    if (!g0.certificate()) {
        throw NoCertificate("base algebra declares no decomposition certificate");
    }
    for (const auto& v : verify_algebra(g0)) {
        if (v.kind.rfind("certificate_", 0) == 0) {
            throw NoCertificate("certificate rejected: " + describe(g0, v));
        }
    }
    require_valid(g0);

    std::vector<std::size_t> cartan;
    for (std::size_t i = 0; i < g0.dim(); ++i) {
        if (g0.parity(i) == 0 && is_diagonal(g0.ad_matrix(SparseVec{{i, Scalar(1)}}))) {
            cartan.push_back(i);
        }
    }
    if (cartan.empty()) {
        throw NotEvenType("no even basis element acts diagonally");
    }
    Subspace h;
    for (std::size_t i : cartan) {
        h.push_back(SparseVec{{i, Scalar(1)}});
    }
    Subspace odd;
    for (std::size_t i = 0; i < g0.dim(); ++i) {
        if (g0.parity(i) == 1) {
            odd.push_back(SparseVec{{i, Scalar(1)}});
        }
    }
    if (!odd.empty() && !centralizer(g0, h, odd).empty()) {
        throw NotEvenType("the Cartan subalgebra centralizes odd elements");
    }

    auto g = std::make_shared<const LieSuperalgebra>(make_group_type(g0));
    Subspace a;
    for (std::size_t i : cartan) {
        a.push_back(SparseVec{{g->index_of(g0.name(i) + "-"), Scalar(1)}});
    }
    return build_pair(g, a);
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries{
        {"rank1-aniso-q1", Construction::RankOne, "rank-one anisotropic model, q = 1, c = 1", 3},
        {"rank1-aniso-q2", Construction::RankOne, "rank-one anisotropic model, q = 2, c = 1", 3},
        {"rank1-iso-q1", Construction::RankOne, "rank-one isotropic model, q = 1", 3},
        {"group-sl2", Construction::GroupType, "group type on sl(2)", 4},
        {"group-osp12", Construction::GroupType, "group type on osp(1|2)", 4},
        {"group-gl12", Construction::GroupType, "group type on gl(1|2)", 2},
    };
    return entries;
}

const CatalogEntry& find_entry(const std::string& name) {
    for (const auto& e : catalog()) {
        if (e.name == name) {
            return e;
        }
    }
    throw UnknownEntry("unknown catalog entry '" + name + "'");
}

std::vector<std::string> PairData::a_names() const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < pair.a.size(); ++i) {
        const auto& v = pair.a[i];
        if (v.size() == 1 && v.begin()->second == Scalar(1)) {
            names.push_back(pair.g->name(v.begin()->first));
        } else {
            names.push_back("a" + std::to_string(i + 1));
        }
    }
    return names;
}

PairData build_entry(const std::string& name, const std::optional<Vec>& direction) {
    const CatalogEntry& e = find_entry(name);
    PairData out;
    out.name = e.name;
    out.default_degree = e.default_degree;
    if (e.construction == Construction::RankOne) {
        const bool iso = e.name == "rank1-iso-q1";
        const std::size_t q = e.name == "rank1-aniso-q2" ? 2 : 1;
        out.model = build_rank_one_model(q, iso ? IsoClass::Isotropic : IsoClass::Anisotropic,
                                         iso ? Scalar(0) : Scalar(1));
        out.pair = build_pair(out.model->algebra, out.model->a_basis());
    } else if (e.name == "group-sl2") {
        out.pair = group_type_pair(make_sl2());
    } else if (e.name == "group-osp12") {
        out.pair = group_type_pair(make_osp12());
    } else {
        out.pair = group_type_pair(make_gl(1, 2));
    }
    out.system = direction ? restricted_roots(out.pair, *direction) : restricted_roots(out.pair);
    out.weyl = even_weyl_group(out.system);
    return out;
}

namespace {

// Reports m1 + 2 for the first odd root with a rank-one condition (q + 1, rho - lambda),
// or else m0 + 2 for the first positive even root (rho + lambda).
void plant_wrong_multiplicity(RestrictedRootSystem& sys) {
    for (auto& d : sys.odd) {
        if (!d.gated) {
            ++d.q;
            for (std::size_t i = 0; i < sys.rho.size(); ++i) {
                sys.rho[i] -= d.lambda[i];
                sys.rho1[i] += d.lambda[i];
            }
            return;
        }
    }
    for (const auto& r : sys.roots) {
        if (r.positive && r.m0() > 0) {
            for (std::size_t i = 0; i < sys.rho.size(); ++i) {
                sys.rho[i] += r.coords[i];
                sys.rho0[i] += r.coords[i];
            }
            return;
        }
    }
}

VerificationRow compute_row(const HarishChandra& hc, const WeylGroup& w, unsigned k, bool& weyl, bool& in_j,
                            bool& kernel) {
    const auto es = verify_exact_sequence(hc, w, k);
    VerificationRow row;
    row.degree = k;
    row.dim_invariants = es.dim_invariants;
    row.dim_kernel = es.dim_kernel;
    row.dim_image = es.dim_image;
    row.dim_J = filtered_dimension(Space::J, hc.system(), w, k);
    row.dim_I = filtered_dimension(Space::I, hc.system(), w, k);
    weyl = es.weyl_invariant;
    in_j = es.in_J;
    kernel = es.kernel_vanishes && es.exact;
    return row;
}

} // namespace

VerificationReport verify_main_theorem(const PairData& entry, unsigned d, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.entry = entry.name;
    report.degree = d;

    RestrictedRootSystem sys = entry.system;
    std::optional<Subspace> n;
    if (options.defect == Defect::WrongMultiplicity) {
        plant_wrong_multiplicity(sys);
    } else if (options.defect == Defect::TruncatedN) {
        n = sys.n();
        n->pop_back();
    }

    const auto iw = iwasawa_check(entry.pair, sys, options.seed, 20, n);
    for (const auto& f : iw.failures) {
        report.failures.push_back("iwasawa: " + f);
    }
    report.iwasawa = iw.ok();

    std::vector<std::unique_ptr<HarishChandra>> hcs;
    const unsigned threads = std::max(1U, std::min(options.threads, d + 1));
    try {
        for (unsigned t = 0; t < threads; ++t) {
            hcs.push_back(std::make_unique<HarishChandra>(entry.pair, sys, n));
        }
    } catch (const DimensionMismatch& e) {
        report.failures.push_back(std::string("decomposition: ") + e.what());
        report.iwasawa = false;
        report.dims_match = false;
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }

    report.rows.resize(d + 1);
    std::vector<char> weyl(d + 1), in_j(d + 1), kernel(d + 1);
    auto work = [&](unsigned t) {
        // largest degrees first, spread over the threads
        for (unsigned k = d - t;; k -= threads) {
            bool a = true;
            bool b = true;
            bool c = true;
            report.rows[k] = compute_row(*hcs[t], entry.weyl, k, a, b, c);
            weyl[k] = a;
            in_j[k] = b;
            kernel[k] = c;
            if (k < threads) {
                break;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    for (const auto& row : report.rows) {
        const unsigned k = row.degree;
        const std::string at = " at degree " + std::to_string(k);
        if (!weyl[k]) {
            report.weyl_invariance = false;
            report.failures.push_back("image not W0-invariant" + at);
        }
        if (!in_j[k]) {
            report.image_in_J = false;
            report.failures.push_back("image not in J(a)" + at);
        }
        if (!kernel[k]) {
            report.kernel_vanishes = false;
            report.failures.push_back("(U(g)k)^k is not the kernel" + at);
        }
        if (row.dim_image != row.dim_J) {
            report.dims_match = false;
            report.failures.push_back("dim image " + std::to_string(row.dim_image) + " != dim J " +
                                      std::to_string(row.dim_J) + at);
        }
    }

    if (options.product_samples > 0) {
        const HarishChandra& hc = *hcs.front();
        const auto basis = hc.invariants((d + 1) / 2);
        std::mt19937_64 rng(options.seed);
        for (std::size_t s = 0; s < options.product_samples; ++s) {
            const auto& x = basis.invariants[rng() % basis.invariants.size()];
            const auto& y = basis.invariants[rng() % basis.invariants.size()];
            if (hc.gamma(hc.kan().multiply(x, y)) != hc.gamma(x) * hc.gamma(y)) {
                report.multiplicative = false;
                report.failures.push_back("Gamma(DD') != Gamma(D)Gamma(D') for sample " + std::to_string(s));
            }
        }
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

VerificationReport verify_main_theorem(const std::string& entry, unsigned d, const VerifyOptions& options) {
    return verify_main_theorem(build_entry(entry), d, options);
}

LieSuperalgebra planted_jacobi_defect() {
    LieSuperalgebra::Builder b({{"e", 0}, {"h", 0}, {"f", 0}});
    b.bracket("h", "e", {{"e", Scalar(3)}});
    b.bracket("h", "f", {{"f", Scalar(-2)}});
    b.bracket("e", "f", {{"h", Scalar(1)}});
    return b.build();
}

} // namespace hcsuper
