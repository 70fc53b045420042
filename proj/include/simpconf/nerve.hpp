/**
 * Combinatorial nerve machinery: the minimal-non-face cover of |X|-|A|, its
 * intersection rule, and nerves of covers by subcomplexes.
 *
 * The open stars U_sigma are never materialized as point sets; a finite
 * intersection of stars is nonempty exactly when some simplex of X contains
 * every generating simplex, which is what the enumeration below tests.
 */

#ifndef SIMPCONF_NERVE_HPP
#define SIMPCONF_NERVE_HPP

#include <vector>

#include "simpconf/complex.hpp"

namespace simpconf {

/**
 * Nerve of the cover {U_sigma : sigma a minimal non-face of A in X} of
 * |X|-|A|, computed from the star-intersection rule. Vertices carry Bary
 * labels; the result is labeled-equal to simplicial_difference(x, a) by the
 * nerve identity, but computed along an independent route.
 *
 * @throws PreconditionError when a is not a subcomplex of x.
 */
SimplicialComplex minimal_nonface_nerve(const SimplicialComplex& x, const SimplicialComplex& a);

/**
 * Nerve of a covering of k by closed subcomplexes: an index set spans a
 * simplex when the parts share at least one simplex (equivalently, a
 * vertex). Nerve vertices are Atom labels "U0", "U1", ...
 *
 * @throws PreconditionError when a part is not a subcomplex, a part is
 *         empty, or the union of the parts is not all of k.
 */
SimplicialComplex nerve_of_subcomplex_cover(const SimplicialComplex& k,
                                            const std::vector<SimplicialComplex>& parts);

/** True iff the minimal-non-face nerve agrees with the simplicial difference. */
bool nerve_matches_difference(const SimplicialComplex& x, const SimplicialComplex& a);

}  // namespace simpconf

#endif
