#ifndef HCSUPER_INVARIANT_RINGS_HPP
#define HCSUPER_INVARIANT_RINGS_HPP

#include "hcsuper/apoly.hpp"
#include "hcsuper/pbw.hpp"
#include "hcsuper/symmetric_pair.hpp"

#include <map>
#include <memory>
#include <vector>

namespace hcsuper {

/// The rank-one algebra m_lambda = k_lambda + a_lambda + n_lambda.
///
/// Anisotropic models use the normalized generators a, v_i, vt_i (in k) and
/// w_i, wt_i (in p), whose brackets do not depend on c; c only scales the form.
/// The even part of k is sp(2q), spanned by the brackets of odd k generators.
/// Isotropic models use h0, A, y_i, yt_i (in k), z_i, zt_i (in p) with m0 = 0.
struct RankOneModel {
    std::shared_ptr<const LieSuperalgebra> algebra;
    std::size_t q = 0;
    IsoClass iso = IsoClass::Anisotropic;
    Scalar c;
    std::vector<std::size_t> m0;
    /// anisotropic: {a}; isotropic: {h0, A}
    std::vector<std::size_t> a;
    /// odd generators of k and p; names v/vt/w/wt or y/yt/z/zt
    std::vector<std::size_t> k_odd, k_odd_tilde, p_odd, p_odd_tilde;

    [[nodiscard]] Subspace a_basis() const;
    /// W = sum w_i wt_i (anisotropic) or Z = sum z_i zt_i (isotropic) in S(p).
    [[nodiscard]] SymElement pairing_element() const;
};

RankOneModel build_rank_one_model(std::size_t q, IsoClass iso, const Scalar& c);

/// Closed-form sum a_{Nk}.
Scalar coefficient_aNk(long n, long k);

/// Anisotropic: {P2, P_{2q+1}} with P_{2q+1} = sum_k c_k a^{2(q-k)+1} W^k, where
/// c_0 = 1 and c_{k+1} = c_k (2q - 2k + 1) / (k + 1) is forced by k-invariance.
/// Throws BadIsoClass for isotropic models.
std::vector<SymElement> generators(const RankOneModel& model);
/// Isotropic p_{kl} = sum_j binom(k, j) h0^{k-j} A^{l-j} Z^j for l >= min(k, q).
SymElement p_kl(const RankOneModel& model, unsigned k, unsigned l);
/// True iff every generator of k annihilates p under the adjoint action.
bool is_k_invariant(const RankOneModel& model, const SymElement& p);

/// Linear obstruction to membership: zero iff p belongs to the space.
using Obstruction = std::map<std::vector<long>, Scalar>;

Obstruction obstruction_I_lambda(const APolynomial& p, const OddRootDatum& d);
Obstruction obstruction_J_lambda(const APolynomial& p, const OddRootDatum& d);
Obstruction obstruction_weyl(const APolynomial& p, const WeylGroup& w);

bool membership_I_lambda(const APolynomial& p, const OddRootDatum& d);
bool membership_J_lambda(const APolynomial& p, const OddRootDatum& d);
bool is_weyl_invariant(const APolynomial& p, const WeylGroup& w);

enum class Space { I, J, SW0, INoWeyl };

/// Membership in I(a) (W0-invariant unless Space::INoWeyl), J(a) or S(a)^W0.
/// Gated odd roots impose no condition.
bool membership(Space space, const APolynomial& p, const RestrictedRootSystem& system, const WeylGroup& w);
bool membership_J(const APolynomial& p, const RestrictedRootSystem& system, const WeylGroup& w);
bool membership_I(const APolynomial& p, const RestrictedRootSystem& system, const WeylGroup& w);

/// Basis of the degree <= d part of the space, from the nullspace of the obstruction map.
std::vector<APolynomial> filtered_basis(Space space, const RestrictedRootSystem& system, const WeylGroup& w,
                                        unsigned d);
std::size_t filtered_dimension(Space space, const RestrictedRootSystem& system, const WeylGroup& w, unsigned d);

/// Variants for a single datum in a rank-r space.
std::size_t filtered_dimension_lambda(bool j_space, const OddRootDatum& d, std::size_t rank, unsigned degree);

} // namespace hcsuper

#endif
