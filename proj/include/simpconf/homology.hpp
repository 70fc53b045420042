/**
 * Exact integer simplicial homology: boundary matrices, Smith normal form,
 * Betti numbers and torsion coefficients.
 *
 * All arithmetic is arbitrary-precision (boost cpp_int); intermediate entry
 * growth during elimination is real even at desk scale. Matrices are dense;
 * a sparse elimination path is an optimization, not a contract.
 */

#ifndef SIMPCONF_HOMOLOGY_HPP
#define SIMPCONF_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "simpconf/complex.hpp"

namespace simpconf {

using Int = boost::multiprecision::cpp_int;

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;
    bool is_zero() const;

    /** Exact determinant (Bareiss fraction-free elimination); square only. */
    Int determinant() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> a_;
};

/**
 * Integer chain complex of a simplicial complex. boundary[k] is the matrix
 * of d_k : C_k -> C_{k-1} with columns indexed by the k-simplices in their
 * stored order; boundary[0] is the 0 x f_0 zero map. Orientation comes from
 * the complex's vertex order via the usual alternating signs. d d = 0 is
 * verified on construction.
 */
struct ChainComplex {
    std::vector<IntMatrix> boundary;

    int dim() const { return static_cast<int>(boundary.size()) - 1; }
    const IntMatrix& d(int k) const { return boundary.at(std::size_t(k)); }
};

ChainComplex chain_complex(const SimplicialComplex& k);

/** d = u * m * v with u, v unimodular and d diagonal, d1 | d2 | ... */
struct SmithResult {
    IntMatrix d, u, v;
};

SmithResult smith_normal_form(const IntMatrix& m);

/** The nonzero diagonal of the Smith form, without tracking u and v. */
std::vector<Int> invariant_factors(const IntMatrix& m);

struct HomologyProfile {
    std::vector<long long> betti;
    /** torsion[k]: invariant factors > 1 of d_{k+1}, sorted. */
    std::vector<std::vector<Int>> torsion;
    long long euler = 0;

    bool torsion_free() const {
        for (const auto& t : torsion)
            if (!t.empty()) return false;
        return true;
    }
};

/**
 * Homology of the complex over the integers. betti_k = f_k - rank d_k -
 * rank d_{k+1}; with reduced=true, betti_0 is lowered by one for nonempty
 * complexes.
 */
HomologyProfile homology_profile(const SimplicialComplex& k, bool reduced = false);

namespace detail {
/** Mod-2 Betti numbers; internal cross-check only. */
std::vector<long long> betti_mod2(const SimplicialComplex& k);
}  // namespace detail

}  // namespace simpconf

#endif
