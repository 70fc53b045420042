/**
 * The derived-complex builders: ordered simplicial power X^n, fat diagonal
 * F_n, barycentric subdivision bs, simplicial difference X (-) A, the
 * complement model C_{X,A}, and the composite configuration-space models
 * C(X,n) and C_bs(X,n).
 *
 * A simplex of the ordered power X^n is an n x k matrix of vertices whose
 * columns are distinct n-tuples, whose rows are non-decreasing in the base
 * vertex order, and whose row value-sets are simplices of X. Power vertices
 * carry Tuple labels ordered lexicographically; bs and difference vertices
 * carry Bary labels ordered by (dimension of the underlying simplex,
 * descending, then canonical label order) so that listing a chain follows
 * reverse set-inclusion.
 */

#ifndef SIMPCONF_CONSTRUCTIONS_HPP
#define SIMPCONF_CONSTRUCTIONS_HPP

#include <vector>

#include "simpconf/complex.hpp"

namespace simpconf {

/**
 * Matrix view of a candidate power simplex: columns are n-tuples of base
 * vertex ids, kept in chain (column-sorted) order.
 */
struct PowerSimplexMatrix {
    int factors = 0;                             // n, the number of rows
    std::vector<std::vector<VertexId>> columns;  // each of length n

    /** Sorts columns lexicographically (the only possible chain order). */
    void sort_columns();

    bool columns_distinct() const;
    /** Every row non-decreasing and its value-set a simplex of base. */
    bool rows_admissible(const SimplicialComplex& base) const;
    /** Two identical rows (the fat-diagonal condition). */
    bool has_equal_rows() const;

    /** Row r as a value sequence over the columns. */
    std::vector<VertexId> row(int r) const;
};

/** Decodes Tuple-labeled columns against the base complex. @throws SchemaError */
PowerSimplexMatrix power_matrix_from_labels(const SimplicialComplex& base, int factors,
                                            const std::vector<std::vector<VertexLabel>>& columns);

/**
 * The ordered simplicial power X^n. Vertices are all n-tuples of vertices
 * of X with Tuple labels, ordered lexicographically; simplices are the
 * admissible matrices. Enumerated as monotone staircase shuffles over
 * n-tuples of facets of X, closed downward.
 *
 * @throws PreconditionError when n < 1; BudgetError on blow-up.
 */
SimplicialComplex ordered_power(const SimplicialComplex& x, int n);

/**
 * Membership oracle for the power: true iff the given distinct n-tuples
 * admit a column order with all rows non-decreasing and row sets simplices
 * of x. Independent of the staircase enumeration above.
 *
 * @throws SchemaError on a malformed tuple (wrong arity, unknown vertex).
 */
bool is_power_simplex(const SimplicialComplex& x, int n,
                      const std::vector<std::vector<VertexLabel>>& columns);

/**
 * The fat diagonal F_n: the subcomplex of X^n of simplices whose matrix has
 * two identical rows. F_1 is the empty complex.
 */
SimplicialComplex fat_diagonal(const SimplicialComplex& x, int n);

/** Fat diagonal carved out of an already-built power (same result). */
SimplicialComplex fat_diagonal_in(const SimplicialComplex& base, const SimplicialComplex& power,
                                  int n);

/**
 * Barycentric subdivision: one Bary vertex per nonempty simplex of x,
 * simplices the chains under strict inclusion.
 */
SimplicialComplex barycentric_subdivision(const SimplicialComplex& x);

/**
 * The simplicial difference X (-) A. Vertices are the minimal non-faces of
 * A in X as Bary labels; a collection of them spans a simplex exactly when
 * its union is a simplex of X.
 *
 * @throws PreconditionError when a is not a subcomplex of x.
 */
SimplicialComplex simplicial_difference(const SimplicialComplex& x, const SimplicialComplex& a);

struct ComplementResult {
    SimplicialComplex complex;
    /**
     * Whether A was a full subcomplex of X. When false the deformation
     * retraction theorem does not apply and callers should surface a
     * warning; the complex is still computed.
     */
    bool subcomplex_was_full = true;
};

/**
 * The complement model C_{X,A}: the subcomplex of X induced on the vertices
 * outside A.
 *
 * @throws PreconditionError when a is not a subcomplex of x.
 */
ComplementResult complement_model(const SimplicialComplex& x, const SimplicialComplex& a);

/** C(X,n) = X^n (-) F_n, the ordered configuration-space model. */
SimplicialComplex conf_model(const SimplicialComplex& x, int n);

/** C_bs(X,n) = C_{bs(X^n), bs(F_n)}, the regularized model. */
SimplicialComplex conf_model_bs(const SimplicialComplex& x, int n);

/** The Bary label of a simplex of x. */
VertexLabel bary_label(const SimplicialComplex& x, const Simplex& s);

}  // namespace simpconf

#endif
