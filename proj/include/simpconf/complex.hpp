/**
 * Finite abstract simplicial complexes with a linear vertex order.
 *
 * A SimplicialComplex stores the full downward-closed simplex family, not
 * just the facets: target instances are desk-scale and every downstream
 * predicate becomes a set lookup. Vertices are identified internally by
 * their position in the vertex order; a Simplex is a sorted duplicate-free
 * vector of such positions. All values are immutable after construction and
 * all operations are pure functions.
 */

#ifndef SIMPCONF_COMPLEX_HPP
#define SIMPCONF_COMPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "simpconf/label.hpp"

namespace simpconf {

using VertexId = std::int32_t;

/** Sorted, duplicate-free vertex ids of the owning complex. */
using Simplex = std::vector<VertexId>;

/** counts[k] = number of k-simplices; empty for the empty complex. */
using FVector = std::vector<long long>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : s) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using SimplexSet = std::unordered_set<Simplex, SimplexHash>;

class SimplicialComplex {
  public:
    /** The empty complex: no vertices, no simplices. */
    SimplicialComplex();

    /**
     * Builds the closure of the given facets, plus every vertex of
     * vertex_order as a 0-simplex.
     *
     * @throws SchemaError on duplicate vertex labels, a facet label missing
     *         from vertex_order, or a duplicate label inside one facet.
     */
    static SimplicialComplex from_facets(std::vector<VertexLabel> vertex_order,
                                         const std::vector<std::vector<VertexLabel>>& facets);

    /**
     * Builds a complex from an explicit simplex family given in ids of
     * vertex_order. With close=false the family must already be closed
     * (verified); with close=true missing faces are added.
     */
    static SimplicialComplex from_simplices(std::vector<VertexLabel> vertex_order,
                                            const std::vector<Simplex>& simplices,
                                            bool close = false);

    // ---- vertices ----------------------------------------------------

    int vertex_count() const;
    const std::vector<VertexLabel>& vertex_order() const;
    const VertexLabel& label(VertexId v) const;
    std::optional<VertexId> index_of(const VertexLabel& l) const;

    // ---- simplex family ----------------------------------------------

    bool empty() const { return vertex_count() == 0; }
    /** Dimension; -1 for the empty complex. */
    int dim() const;
    std::size_t simplex_count() const;
    /** All k-simplices in lexicographic id order. */
    const std::vector<Simplex>& simplices(int k) const;
    const std::vector<std::vector<Simplex>>& simplices_by_dim() const;
    bool contains(const Simplex& s) const;
    /** Maximal simplices, sorted by (dimension, lexicographic ids). */
    std::vector<Simplex> maximal_simplices() const;

    // ---- label bridging ----------------------------------------------

    /** @throws PreconditionError on unknown or duplicate labels. */
    Simplex simplex_from_labels(const std::vector<VertexLabel>& labels) const;
    std::vector<VertexLabel> labels_of(const Simplex& s) const;
    /** Membership by labels; unknown labels simply yield false. */
    bool contains_labels(const std::vector<VertexLabel>& labels) const;

    // ---- invariants of the family ------------------------------------

    FVector f_vector() const;
    long long euler_characteristic() const;

    /**
     * Full subcomplex spanned by the given vertices; the vertex order is
     * the restriction of this complex's order.
     *
     * @throws PreconditionError if a vertex is unknown.
     */
    SimplicialComplex induced_subcomplex(const std::vector<VertexLabel>& vertices) const;
    SimplicialComplex induced_subcomplex_ids(const std::vector<VertexId>& keep) const;

    /** Exact equality: identical vertex order and simplex family. */
    bool operator==(const SimplicialComplex& other) const;
    bool operator!=(const SimplicialComplex& other) const { return !(*this == other); }

  private:
    struct Impl;
    explicit SimplicialComplex(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/** True iff every simplex of a (by labels) is a simplex of k. */
bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& a);

/**
 * True iff every simplex of k whose vertices all lie in a belongs to a.
 *
 * @throws PreconditionError when a is not a subcomplex of k.
 */
bool is_full_subcomplex(const SimplicialComplex& k, const SimplicialComplex& a);

/**
 * The minimal simplices of k not in a: every proper nonempty face lies in
 * a (vertices of k outside a qualify vacuously). Returned in k's ids,
 * sorted by (dimension, lexicographic ids).
 *
 * @throws PreconditionError when a is not a subcomplex of k.
 */
std::vector<Simplex> minimal_nonfaces(const SimplicialComplex& k, const SimplicialComplex& a);

/** Same vertex label set and same simplex family, ignoring vertex order. */
bool labeled_equal(const SimplicialComplex& a, const SimplicialComplex& b);

/**
 * Copy of k with every vertex label replaced by fn(label). The map must be
 * injective on V(k); vertex order and simplex family carry over.
 */
SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::function<VertexLabel(const VertexLabel&)>& fn);

}  // namespace simpconf

#endif
