/**
 * Finite simplicial group actions: the S_n coordinate-permutation action on
 * ordered powers, induced actions on derived complexes, orbit analysis, the
 * semiregularity/regularity predicates, and quotient complexes.
 *
 * Groups are materialized as explicit element lists; group axioms and
 * simpliciality of every element are verified at construction. Desk-scale
 * groups only.
 */

#ifndef SIMPCONF_ACTION_HPP
#define SIMPCONF_ACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "simpconf/complex.hpp"

namespace simpconf {

/** A bijection on the vertex set of a target complex, sending simplices to
 * simplices. Order preservation is not required, only simplex preservation. */
struct VertexPermutation {
    std::string name;
    std::vector<VertexId> map;  // map[v] = image of vertex v
};

class SimplicialAction {
  public:
    /** The trivial group acting on k. */
    static SimplicialAction trivial(SimplicialComplex k);

    /**
     * Wraps an explicit element list. Verifies that every element is a
     * simplicial bijection, that the identity is present, and that the
     * list is closed under composition and inverses.
     *
     * @throws PreconditionError when verification fails.
     */
    static SimplicialAction from_elements(SimplicialComplex k,
                                          std::vector<VertexPermutation> elements);

    /** Completes the given generators to the full group they generate. */
    static SimplicialAction from_generators(SimplicialComplex k,
                                            const std::vector<VertexPermutation>& generators);

    const SimplicialComplex& complex() const { return complex_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<VertexPermutation>& elements() const { return elements_; }
    const VertexPermutation& element(int g) const { return elements_.at(std::size_t(g)); }
    int identity_index() const { return identity_; }

    /** Index of g after h (first h, then g). */
    int compose(int g, int h) const;
    int inverse(int g) const;

    VertexId apply(int g, VertexId v) const {
        return elements_[std::size_t(g)].map[std::size_t(v)];
    }
    Simplex apply_simplex(int g, const Simplex& s) const;

    /** Orbit id per vertex; ids are the minimal vertex of each orbit. */
    const std::vector<VertexId>& vertex_orbit_rep() const { return orbit_rep_; }

  private:
    SimplicialComplex complex_;
    std::vector<VertexPermutation> elements_;
    int identity_ = 0;
    std::vector<VertexId> orbit_rep_;
};

/**
 * The S_n action permuting coordinates of ordered_power(x, n). Elements are
 * named in cycle notation on 1-based coordinates ("e", "(1 2)", ...).
 *
 * @throws PreconditionError when n < 1 or n > 6.
 */
SimplicialAction symmetric_group_action(const SimplicialComplex& x, int n);

/** Same, acting on an already-built copy of ordered_power(x, n). */
SimplicialAction symmetric_group_action_on(const SimplicialComplex& x,
                                           const SimplicialComplex& power, int n);

/** How a derived complex was produced from the action's complex. */
enum class DerivedKind { Bs, Difference, InducedSubcomplex, Power };

/**
 * Pushes the parent action onto a derived complex: g.Bary(s) = Bary(g.s)
 * for bs and difference vertices, the restriction for induced subcomplexes,
 * and the coordinatewise action for powers. Every element is re-verified as
 * simplicial on the derived complex.
 *
 * @throws PreconditionError on a parent/derived mismatch or when some
 *         element fails to act simplicially on the derived complex.
 */
SimplicialAction induced_action(const SimplicialAction& parent, const SimplicialComplex& derived,
                                DerivedKind kind);

/** Orbits of the dim-simplices; each orbit sorted, orbits sorted by least element. */
std::vector<std::vector<Simplex>> orbit_partition(const SimplicialAction& act, int dim);

/** True iff no edge joins two vertices of one orbit. */
bool is_semiregular(const SimplicialAction& act);

/**
 * A failure certificate for regularity: simplex {v_0,...,v_d} and elements
 * (g_0,...,g_d) with {g_0 v_0,...,g_d v_d} a simplex that no single group
 * element realizes vertexwise.
 */
struct RegularityWitness {
    Simplex simplex;
    std::vector<int> elements;
    Simplex image;
};

/** First witness in enumeration order, or nullopt when the action is regular. */
std::optional<RegularityWitness> regularity_witness(const SimplicialAction& act);

bool is_regular(const SimplicialAction& act);

std::string describe_witness(const SimplicialAction& act, const RegularityWitness& w);

struct IsotropySubgroup {
    Simplex simplex;
    std::vector<int> elements;  // indices of the elements fixing it setwise
};

/** @throws PreconditionError when s is not a simplex of the complex. */
IsotropySubgroup isotropy_subgroup(const SimplicialAction& act, const Simplex& s);

struct QuotientResult {
    SimplicialComplex complex;
    /** projection[v] = quotient vertex id of parent vertex v. */
    std::vector<VertexId> projection;
};

/**
 * The quotient complex: vertices are Orbit labels, simplices the orbitwise
 * images. Requires a regular action; there is no unchecked mode.
 *
 * @throws PreconditionError naming a witness pair when the action is not
 *         regular.
 */
QuotientResult quotient_complex(const SimplicialAction& act);

}  // namespace simpconf

#endif
