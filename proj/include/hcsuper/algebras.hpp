#ifndef HCSUPER_ALGEBRAS_HPP
#define HCSUPER_ALGEBRAS_HPP

#include "hcsuper/liesuper.hpp"

namespace hcsuper {

/// sl(2) on e, h, f with the trace form.
LieSuperalgebra make_sl2();
/// osp(1|2) on e, h, f (even) and x, y (odd).
LieSuperalgebra make_osp12();
/// gl(m|n) on matrix units E{i}{j} (1-based) with the supertrace form.
/// The certificate is z = scalars plus sl(m|n); it is only valid when m != n.
LieSuperalgebra make_gl(std::size_t m, std::size_t n);
/// Abelian algebra of the given even dimension with form b = id and theta = -id.
LieSuperalgebra make_abelian(std::size_t dim);

/// g0 + g0 on x+ = (x, x) and x- = (x, -x) with theta the flip and
/// b(x+-, y+-) = b0(x, y). A certificate of g0 is carried over to both copies.
LieSuperalgebra make_group_type(const LieSuperalgebra& g0);

} // namespace hcsuper

#endif
