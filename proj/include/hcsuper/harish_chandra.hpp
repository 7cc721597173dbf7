#ifndef HCSUPER_HARISH_CHANDRA_HPP
#define HCSUPER_HARISH_CHANDRA_HPP

#include "hcsuper/apoly.hpp"
#include "hcsuper/pbw.hpp"
#include "hcsuper/symmetric_pair.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hcsuper {

struct InvariantBasis {
    unsigned degree = 0;
    /// U(g)^k of filtration degree <= degree, in the K < A < N order
    std::vector<UEAElement> invariants;
    /// (U(g)k)^k of filtration degree <= degree
    std::vector<UEAElement> companion;
};

/// D_a for an element written in a K < A < N order; the variables are the A-tagged
/// indices in order. Throws OrderNotIwasawa for any other order.
APolynomial project_to_a(const EnvelopingAlgebra& env, const UEAElement& d);

/// Works in g rewritten over a basis k | a | n, so that every block is a run of
/// basis indices. Elements of U(g) over the original basis are transported on entry.
///
/// D_a is read modulo kU(g) + U(g)n with n = theta(n+), the sum of the negative root
/// spaces. This is the choice for which D_a(mu + rho), rho = 1/2 str_{n+} ad, is W0-invariant.
class HarishChandra {
public:
    /// n defaults to theta(n+). Throws DimensionMismatch unless g = k + a + n is direct.
    HarishChandra(SymmetricPair pair, RestrictedRootSystem system, std::optional<Subspace> n_override = std::nullopt);

    [[nodiscard]] const SymmetricPair& pair() const { return pair_; }
    [[nodiscard]] const RestrictedRootSystem& system() const { return system_; }
    [[nodiscard]] const LieSuperalgebra& adapted() const { return *adapted_; }
    [[nodiscard]] const EnvelopingAlgebra& original() const { return orig_; }
    [[nodiscard]] const EnvelopingAlgebra& kan() const { return kan_; }
    [[nodiscard]] const EnvelopingAlgebra& ank() const { return ank_; }
    [[nodiscard]] std::size_t k_dim() const { return k_dim_; }

    /// Element of U(g) over the original basis (any PBW order) to the K < A < N order.
    [[nodiscard]] UEAElement transport(const UEAElement& u) const;
    /// Back to the natural order of the original basis.
    [[nodiscard]] UEAElement to_original(const UEAElement& u) const;
    /// Vector of g (original coordinates) in adapted coordinates.
    [[nodiscard]] SparseVec adapt(const SparseVec& x) const;
    /// Supersymmetrization of an element of S(g) over the original basis.
    [[nodiscard]] UEAElement beta(const SymElement& p) const;
    /// Supersymmetrized product of homogeneous vectors in original coordinates.
    [[nodiscard]] UEAElement symmetrized_product(const std::vector<SparseVec>& xs) const;

    [[nodiscard]] APolynomial project_to_a(const UEAElement& d) const;
    /// Gamma(D)(mu) = D_a(mu + rho)
    [[nodiscard]] APolynomial gamma(const UEAElement& d) const;

    [[nodiscard]] InvariantBasis invariants(unsigned d) const;
    [[nodiscard]] bool is_invariant(const UEAElement& u) const;
    /// True iff u lies in the right ideal U(g)k.
    [[nodiscard]] bool in_right_ideal_k(const UEAElement& u) const;

    /// x -> its a-component along k + (a^perp in p); coordinates over the a basis.
    [[nodiscard]] Vec a_coordinates(const SparseVec& x) const;
    /// Restriction S(g) -> S(a) induced by the projection above (original basis).
    [[nodiscard]] APolynomial gr_restriction(const SymElement& p) const;
    /// Product of the projections of the given vectors.
    [[nodiscard]] APolynomial gr_restriction(const std::vector<SparseVec>& xs) const;

    /// Some D in the span of the basis with Gamma(D) = p, if there is one.
    [[nodiscard]] std::optional<UEAElement> gamma_preimage(const APolynomial& p, const InvariantBasis& basis) const;

private:
    struct Setup {
        std::shared_ptr<const LieSuperalgebra> adapted;
        std::size_t k_dim = 0;
        std::size_t a_dim = 0;
        Subspace basis;
    };
    static Setup make_setup(const SymmetricPair& pair, const Subspace& n);
    HarishChandra(SymmetricPair pair, RestrictedRootSystem system, Setup setup);

    [[nodiscard]] UEAElement word(const EnvelopingAlgebra& env, const std::vector<SparseVec>& images,
                                  const Monomial& m) const;

    SymmetricPair pair_;
    RestrictedRootSystem system_;
    std::shared_ptr<const LieSuperalgebra> adapted_;
    std::size_t k_dim_;
    std::size_t a_dim_;
    Subspace adapted_basis_;
    std::vector<SparseVec> images_;
    ScalarMatrix gram_inverse_;
    EnvelopingAlgebra orig_;
    EnvelopingAlgebra kan_;
    EnvelopingAlgebra ank_;
};

struct ExactSequenceReport {
    unsigned degree = 0;
    std::size_t dim_invariants = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_image = 0;
    bool weyl_invariant = true;
    bool in_J = true;
    /// Gamma vanishes on the companion basis
    bool kernel_vanishes = true;
    /// dim_invariants == dim_kernel + dim_image
    bool exact = true;
    /// basis of Gamma(U(g)^k_{<= degree})
    std::vector<APolynomial> images;
};

ExactSequenceReport verify_exact_sequence(const HarishChandra& hc, const WeylGroup& w, unsigned d);

/// Degree drop of Gamma(beta(p)) - restriction(p) for all monomials of degree 1..max_degree
/// in the p basis; returns descriptions of the failures.
std::vector<std::string> check_degree_drop(const HarishChandra& hc, unsigned max_degree);

} // namespace hcsuper

#endif
