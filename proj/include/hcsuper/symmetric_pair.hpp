#ifndef HCSUPER_SYMMETRIC_PAIR_HPP
#define HCSUPER_SYMMETRIC_PAIR_HPP

#include "hcsuper/apoly.hpp"
#include "hcsuper/liesuper.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hcsuper {

/// (g, k, theta) with an even Cartan subspace a. All bases are homogeneous.
struct SymmetricPair {
    std::shared_ptr<const LieSuperalgebra> g;
    Subspace k0, k1, p0, p1;
    Subspace a;
    /// z_k(a)
    Subspace m;
    /// b restricted to a
    ScalarMatrix gram;

    [[nodiscard]] Subspace k() const;
    [[nodiscard]] Subspace p() const;
};

/// Validates a as an even Cartan subspace. Checks run in the order
/// NotInEvenP, NotAbelian, CentralizerTooLarge, DegenerateFormOnA.
SymmetricPair build_pair(std::shared_ptr<const LieSuperalgebra> g, const Subspace& a_basis);

struct RestrictedRoot {
    /// lambda(a_i) for the a basis
    Vec coords;
    Subspace even_space;
    Subspace odd_space;
    bool positive = false;

    [[nodiscard]] std::size_t m0() const { return even_space.size(); }
    [[nodiscard]] std::size_t m1() const { return odd_space.size(); }
};

enum class IsoClass { Isotropic, Anisotropic };

struct OddRootDatum {
    std::size_t root = 0;
    Vec lambda;
    IsoClass iso = IsoClass::Anisotropic;
    std::size_t q = 0;
    /// <lambda, lambda>
    Scalar c;
    /// A_lambda, over the a basis
    Vec A;
    /// isotropic: lambda(h0) = 1 and b(h0, h0) = 0
    Vec h0;
    /// anisotropic: A / c
    Vec a;
    std::vector<Vec> a_perp;
    /// 2 lambda is a root; the rank-one formulas do not apply
    bool gated = false;
};

struct RestrictedRootSystem {
    std::vector<RestrictedRoot> roots;
    Vec direction;
    Vec rho, rho0, rho1;
    ScalarMatrix gram;
    /// dual form on a* in the coordinates lambda(a_i)
    ScalarMatrix dual_form;
    /// one datum per positive odd root
    std::vector<OddRootDatum> odd;

    [[nodiscard]] std::size_t rank() const { return gram.rows(); }
    [[nodiscard]] Scalar pairing(const Vec& x, const Vec& y) const;
    [[nodiscard]] std::optional<std::size_t> find(const Vec& coords) const;
    /// Sum of the positive root spaces.
    [[nodiscard]] Subspace n() const;
};

/// Root decomposition with the default positive system.
RestrictedRootSystem restricted_roots(const SymmetricPair& pair);
RestrictedRootSystem restricted_roots(const SymmetricPair& pair, const Vec& direction);

/// Weights (1, t, t^2, ...) for the first t = 1, 2, ... that avoids every wall.
Vec default_direction(const std::vector<RestrictedRoot>& roots, std::size_t rank);

/// lambda is positive iff sum_i direction_i lambda(a_i) > 0. Recomputes rho and the odd root data.
void choose_positive_system(RestrictedRootSystem& system, const Vec& direction);

struct RhoParts {
    Vec rho, rho0, rho1;
};
RhoParts rho_from_multiplicities(const RestrictedRootSystem& system);
/// rho(a_i) = 1/2 str_n ad(a_i), traced on n directly.
Vec rho_supertrace(const SymmetricPair& pair, const RestrictedRootSystem& system);

struct WeylGroup {
    std::vector<ScalarMatrix> generators;
    std::vector<ScalarMatrix> elements;
};

/// Generated by the reflections in the even roots, acting on coordinate columns of a*.
WeylGroup even_weyl_group(const RestrictedRootSystem& system);
/// (w.p)(mu) = p(w^{-1} mu)
APolynomial weyl_act(const ScalarMatrix& w, const APolynomial& p);

struct IwasawaReport {
    std::vector<std::string> failures;
    std::size_t samples = 0;
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Checks g = k + a + n per parity, k and a + n independent, and the odd centralizer
/// dimension formula on x = 0 and `samples` seeded random x in p0. A non-empty n_override
/// replaces the computed n.
IwasawaReport iwasawa_check(const SymmetricPair& pair, const RestrictedRootSystem& system,
                            std::uint64_t seed, std::size_t samples = 20,
                            const std::optional<Subspace>& n_override = std::nullopt);

/// [g^lambda, g^mu] inside g^{lambda+mu} on basis pairs; returns the offending descriptions.
std::vector<std::string> check_root_grading(const SymmetricPair& pair, const RestrictedRootSystem& system);
/// theta maps g^lambda onto g^{-lambda}.
std::vector<std::string> check_theta_on_roots(const SymmetricPair& pair, const RestrictedRootSystem& system);
/// Every element permutes the even roots and preserves multiplicities.
std::vector<std::string> check_weyl_permutes(const RestrictedRootSystem& system, const WeylGroup& w);

} // namespace hcsuper

#endif
