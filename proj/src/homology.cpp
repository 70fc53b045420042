#include "simpconf/homology.hpp"

#include <algorithm>
#include <unordered_map>

#include "simpconf/errors.hpp"

namespace simpconf {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw PreconditionError("matrix shape mismatch in product");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Int& bkj = other.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw PreconditionError("determinant of a non-square matrix");
    const int n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Chain complex

ChainComplex chain_complex(const SimplicialComplex& k) {
    ChainComplex cc;
    const int dim = k.dim();
    if (dim < 0) return cc;

    // Column index of each simplex within its dimension.
    std::unordered_map<Simplex, int, SimplexHash> col;
    for (int d = 0; d <= dim; ++d) {
        const auto& level = k.simplices(d);
        for (std::size_t i = 0; i < level.size(); ++i) col[level[i]] = static_cast<int>(i);
    }

    cc.boundary.reserve(std::size_t(dim) + 1);
    cc.boundary.emplace_back(0, static_cast<int>(k.simplices(0).size()));
    for (int d = 1; d <= dim; ++d) {
        const auto& level = k.simplices(d);
        const auto& faces = k.simplices(d - 1);
        check_budget(faces.size() * level.size(), "boundary matrix");
        IntMatrix m(static_cast<int>(faces.size()), static_cast<int>(level.size()));
        for (std::size_t j = 0; j < level.size(); ++j) {
            const Simplex& s = level[j];
            int sign = 1;
            Simplex face(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::size_t t = 0;
                for (std::size_t q = 0; q < s.size(); ++q)
                    if (q != i) face[t++] = s[q];
                m.at(col.at(face), static_cast<int>(j)) = sign;
                sign = -sign;
            }
        }
        cc.boundary.push_back(std::move(m));
    }

    // dd = 0, verified sparsely: the boundary of each simplex's boundary
    // cancels termwise.
    for (int d = 2; d <= dim; ++d) {
        for (const Simplex& s : k.simplices(d)) {
            std::unordered_map<Simplex, long long, SimplexHash> acc;
            int sign_i = 1;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t q = 0; q < s.size(); ++q)
                    if (q != i) face.push_back(s[q]);
                int sign_j = 1;
                for (std::size_t j = 0; j < face.size(); ++j) {
                    Simplex sub;
                    sub.reserve(face.size() - 1);
                    for (std::size_t q = 0; q < face.size(); ++q)
                        if (q != j) sub.push_back(face[q]);
                    acc[sub] += sign_i * sign_j;
                    sign_j = -sign_j;
                }
                sign_i = -sign_i;
            }
            for (const auto& [sub, coeff] : acc)
                if (coeff != 0) throw Error("boundary of boundary is nonzero");
        }
    }
    return cc;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

/**
 * In-place Smith elimination. Row operations are mirrored into *u, column
 * operations into *v when non-null. Pivot rule: minimal absolute nonzero
 * entry, ties broken row-major.
 */
void smith_core(IntMatrix& m, IntMatrix* u, IntMatrix* v) {
    const int rows = m.rows(), cols = m.cols();
    auto swap_rows = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
        if (u)
            for (int j = 0; j < u->cols(); ++j) std::swap(u->at(a, j), u->at(b, j));
    };
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
        if (v)
            for (int i = 0; i < v->rows(); ++i) std::swap(v->at(i, a), v->at(i, b));
    };
    auto row_axpy = [&](int dst, int src, const Int& q) {  // row dst -= q * row src
        for (int j = 0; j < cols; ++j) m.at(dst, j) -= q * m.at(src, j);
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(dst, j) -= q * u->at(src, j);
    };
    auto col_axpy = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < rows; ++i) m.at(i, dst) -= q * m.at(i, src);
        if (v)
            for (int i = 0; i < v->rows(); ++i) v->at(i, dst) -= q * v->at(i, src);
    };
    auto negate_row = [&](int r) {
        for (int j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(r, j) = -u->at(r, j);
    };

    const int steps = std::min(rows, cols);
    for (int t = 0; t < steps; ++t) {
        for (;;) {
            // Minimal absolute nonzero pivot in the trailing submatrix.
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j) {
                    const Int& x = m.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs_int(x);
                    if (pi < 0 || ax < best) {
                        pi = i;
                        pj = j;
                        best = std::move(ax);
                    }
                }
            if (pi < 0) return;  // trailing submatrix is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / m.at(t, t);
                row_axpy(i, t, q);
                if (m.at(i, t) != 0) clean = false;
            }
            if (!clean) continue;  // a smaller remainder exists; re-pivot
            for (int j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / m.at(t, t);
                col_axpy(j, t, q);
                if (m.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: the pivot must divide the rest of the submatrix.
            bool divides = true;
            for (int i = t + 1; i < rows && divides; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        row_axpy(t, i, Int(-1));  // pull the offending row up
                        divides = false;
                        break;
                    }
            if (!divides) continue;

            if (m.at(t, t) < 0) negate_row(t);
            break;
        }
    }
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    smith_core(r.d, &r.u, &r.v);
    return r;
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
    IntMatrix d = m;
    smith_core(d, nullptr, nullptr);
    std::vector<Int> out;
    for (int t = 0; t < std::min(d.rows(), d.cols()); ++t)
        if (d.at(t, t) != 0) out.push_back(d.at(t, t));
    return out;
}

// ---------------------------------------------------------------------------
// Homology profile

HomologyProfile homology_profile(const SimplicialComplex& k, bool reduced) {
    HomologyProfile p;
    p.euler = k.euler_characteristic();
    const int dim = k.dim();
    if (dim < 0) return p;

    const ChainComplex cc = chain_complex(k);
    std::vector<long long> rank(std::size_t(dim) + 2, 0);
    std::vector<std::vector<Int>> tors(std::size_t(dim) + 2);
    for (int d = 1; d <= dim; ++d) {
        auto factors = invariant_factors(cc.d(d));
        rank[std::size_t(d)] = static_cast<long long>(factors.size());
        for (const Int& x : factors)
            if (x > 1) tors[std::size_t(d)].push_back(x);
    }

    const FVector f = k.f_vector();
    p.betti.resize(std::size_t(dim) + 1);
    p.torsion.resize(std::size_t(dim) + 1);
    for (int d = 0; d <= dim; ++d) {
        p.betti[std::size_t(d)] = f[std::size_t(d)] - rank[std::size_t(d)] - rank[std::size_t(d) + 1];
        p.torsion[std::size_t(d)] = tors[std::size_t(d) + 1];
        std::sort(p.torsion[std::size_t(d)].begin(), p.torsion[std::size_t(d)].end());
    }
    if (reduced && !k.empty()) p.betti[0] -= 1;
    return p;
}

namespace detail {

std::vector<long long> betti_mod2(const SimplicialComplex& k) {
    const int dim = k.dim();
    if (dim < 0) return {};
    const FVector f = k.f_vector();

    std::unordered_map<Simplex, int, SimplexHash> col;
    for (int d = 0; d <= dim; ++d) {
        const auto& level = k.simplices(d);
        for (std::size_t i = 0; i < level.size(); ++i) col[level[i]] = static_cast<int>(i);
    }

    std::vector<long long> rank(std::size_t(dim) + 2, 0);
    for (int d = 1; d <= dim; ++d) {
        const auto& level = k.simplices(d);
        const std::size_t nrows = k.simplices(d - 1).size();
        std::vector<std::vector<char>> m(nrows, std::vector<char>(level.size(), 0));
        for (std::size_t j = 0; j < level.size(); ++j) {
            const Simplex& s = level[j];
            Simplex face(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::size_t t = 0;
                for (std::size_t q = 0; q < s.size(); ++q)
                    if (q != i) face[t++] = s[q];
                m[std::size_t(col.at(face))][j] = 1;
            }
        }
        long long r = 0;
        std::size_t lead = 0;
        for (std::size_t j = 0; j < level.size() && lead < nrows; ++j) {
            std::size_t piv = lead;
            while (piv < nrows && !m[piv][j]) ++piv;
            if (piv == nrows) continue;
            std::swap(m[piv], m[lead]);
            for (std::size_t i = 0; i < nrows; ++i)
                if (i != lead && m[i][j])
                    for (std::size_t q = j; q < level.size(); ++q) m[i][q] ^= m[lead][q];
            ++lead;
            ++r;
        }
        rank[std::size_t(d)] = r;
    }

    std::vector<long long> betti(std::size_t(dim) + 1);
    for (int d = 0; d <= dim; ++d)
        betti[std::size_t(d)] = f[std::size_t(d)] - rank[std::size_t(d)] - rank[std::size_t(d) + 1];
    return betti;
}

}  // namespace detail

}  // namespace simpconf
