#include "simpconf/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "simpconf/errors.hpp"

namespace simpconf {

// ---------------------------------------------------------------------------
// PowerSimplexMatrix

void PowerSimplexMatrix::sort_columns() { std::sort(columns.begin(), columns.end()); }

bool PowerSimplexMatrix::columns_distinct() const {
    for (std::size_t i = 0; i + 1 < columns.size(); ++i)
        if (columns[i] == columns[i + 1]) return false;
    return true;  // assumes sorted columns
}

std::vector<VertexId> PowerSimplexMatrix::row(int r) const {
    std::vector<VertexId> out;
    out.reserve(columns.size());
    for (const auto& c : columns) out.push_back(c[static_cast<std::size_t>(r)]);
    return out;
}

bool PowerSimplexMatrix::rows_admissible(const SimplicialComplex& base) const {
    for (int r = 0; r < factors; ++r) {
        Simplex values;
        VertexId prev = -1;
        for (const auto& c : columns) {
            VertexId v = c[static_cast<std::size_t>(r)];
            if (v < prev) return false;
            if (v != prev) values.push_back(v);
            prev = v;
        }
        if (!base.contains(values)) return false;
    }
    return true;
}

bool PowerSimplexMatrix::has_equal_rows() const {
    for (int r = 0; r < factors; ++r)
        for (int t = r + 1; t < factors; ++t) {
            bool equal = true;
            for (const auto& c : columns)
                if (c[static_cast<std::size_t>(r)] != c[static_cast<std::size_t>(t)]) {
                    equal = false;
                    break;
                }
            if (equal) return true;
        }
    return false;
}

PowerSimplexMatrix power_matrix_from_labels(
    const SimplicialComplex& base, int factors,
    const std::vector<std::vector<VertexLabel>>& columns) {
    PowerSimplexMatrix m;
    m.factors = factors;
    for (const auto& col : columns) {
        if (static_cast<int>(col.size()) != factors)
            throw SchemaError("power tuple has arity " + std::to_string(col.size()) +
                              ", expected " + std::to_string(factors));
        std::vector<VertexId> ids;
        ids.reserve(col.size());
        for (const auto& l : col) {
            auto idx = base.index_of(l);
            if (!idx) throw SchemaError("power tuple entry " + l.str() + " is not a base vertex");
            ids.push_back(*idx);
        }
        m.columns.push_back(std::move(ids));
    }
    m.sort_columns();
    return m;
}

// ---------------------------------------------------------------------------
// Ordered power

namespace {

/** Mixed-radix rank of a tuple of base ids; the lexicographic vertex id. */
std::int64_t tuple_rank(const std::vector<VertexId>& t, std::int64_t radix) {
    std::int64_t r = 0;
    for (VertexId v : t) r = r * radix + v;
    return r;
}

template <typename Emit>
void staircases(const std::vector<const Simplex*>& facets, std::vector<std::size_t>& pos,
                std::vector<VertexId>& column_scratch, std::vector<std::int64_t>& chain,
                std::int64_t radix, Emit&& emit) {
    const std::size_t n = facets.size();
    for (std::size_t i = 0; i < n; ++i) column_scratch[i] = (*facets[i])[pos[i]];
    chain.push_back(tuple_rank(column_scratch, radix));
    bool done = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (pos[i] + 1 < facets[i]->size()) {
            done = false;
            ++pos[i];
            staircases(facets, pos, column_scratch, chain, radix, emit);
            --pos[i];
        }
    }
    if (done) emit(chain);
    chain.pop_back();
}

}  // namespace

SimplicialComplex ordered_power(const SimplicialComplex& x, int n) {
    if (n < 1) throw PreconditionError("ordered_power requires n >= 1");
    const std::int64_t radix = x.vertex_count();

    // All |V|^n tuples are vertices; they bound the family size from below.
    std::int64_t vcount = 1;
    for (int i = 0; i < n; ++i) {
        vcount *= radix;
        check_budget(static_cast<std::size_t>(vcount), "ordered power vertex set");
    }
    if (radix == 0) return SimplicialComplex();

    std::vector<VertexLabel> order;
    order.reserve(static_cast<std::size_t>(vcount));
    {
        std::vector<VertexId> t(static_cast<std::size_t>(n), 0);
        for (std::int64_t id = 0; id < vcount; ++id) {
            std::vector<VertexLabel> parts;
            parts.reserve(static_cast<std::size_t>(n));
            for (VertexId v : t) parts.push_back(x.label(v));
            order.push_back(VertexLabel::tuple(std::move(parts)));
            for (int i = n - 1; i >= 0; --i) {
                if (++t[static_cast<std::size_t>(i)] < radix) break;
                t[static_cast<std::size_t>(i)] = 0;
            }
        }
    }

    // Maximal simplices are monotone staircase shuffles over n-tuples of
    // facets of x; every simplex of X^n is a column subset of one of them.
    SimplexSet family;
    for (std::int64_t id = 0; id < vcount; ++id)
        family.insert({static_cast<VertexId>(id)});
    auto close_cell = [&](const std::vector<std::int64_t>& cell) {
        const std::size_t m = cell.size();
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) s.push_back(static_cast<VertexId>(cell[i]));
            family.insert(std::move(s));
            check_budget(family.size(), "ordered power");
        }
    };
    const std::vector<Simplex> facets = x.maximal_simplices();
    {
        std::vector<const Simplex*> pick(static_cast<std::size_t>(n));
        std::vector<std::size_t> tuple_idx(static_cast<std::size_t>(n), 0);
        std::vector<std::size_t> pos(static_cast<std::size_t>(n));
        std::vector<VertexId> scratch(static_cast<std::size_t>(n));
        std::vector<std::int64_t> chain;
        while (true) {
            std::size_t width = 1;
            for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
                pick[i] = &facets[tuple_idx[i]];
                width += pick[i]->size() - 1;
            }
            if (width > 24) throw BudgetError("ordered power cell with more than 24 columns");
            std::fill(pos.begin(), pos.end(), 0);
            staircases(pick, pos, scratch, chain, radix, close_cell);
            int i = n - 1;
            for (; i >= 0; --i) {
                if (++tuple_idx[static_cast<std::size_t>(i)] < facets.size()) break;
                tuple_idx[static_cast<std::size_t>(i)] = 0;
            }
            if (i < 0) break;
        }
    }

    std::vector<Simplex> list(family.begin(), family.end());
    return SimplicialComplex::from_simplices(std::move(order), list, /*close=*/false);
}

bool is_power_simplex(const SimplicialComplex& x, int n,
                      const std::vector<std::vector<VertexLabel>>& columns) {
    if (n < 1) throw PreconditionError("is_power_simplex requires n >= 1");
    if (columns.empty()) return false;
    PowerSimplexMatrix m = power_matrix_from_labels(x, n, columns);
    // If any column order works, the lexicographic one does.
    return m.columns_distinct() && m.rows_admissible(x);
}

// ---------------------------------------------------------------------------
// Fat diagonal

SimplicialComplex fat_diagonal_in(const SimplicialComplex& base, const SimplicialComplex& power,
                                  int n) {
    // Decode power vertices back to base-id tuples once.
    std::vector<std::vector<VertexId>> decode(static_cast<std::size_t>(power.vertex_count()));
    for (VertexId v = 0; v < power.vertex_count(); ++v) {
        const auto& parts = power.label(v).parts();
        std::vector<VertexId> t;
        t.reserve(parts.size());
        for (const auto& p : parts) t.push_back(*base.index_of(p));
        decode[static_cast<std::size_t>(v)] = std::move(t);
    }

    std::vector<Simplex> kept;
    std::vector<char> vertex_in(static_cast<std::size_t>(power.vertex_count()), 0);
    for (const auto& level : power.simplices_by_dim()) {
        for (const Simplex& s : level) {
            PowerSimplexMatrix m;
            m.factors = n;
            for (VertexId v : s) m.columns.push_back(decode[static_cast<std::size_t>(v)]);
            if (!m.has_equal_rows()) continue;
            kept.push_back(s);
            for (VertexId v : s) vertex_in[static_cast<std::size_t>(v)] = 1;
        }
    }

    // Re-index onto the diagonal vertex set.
    std::vector<VertexId> old_to_new(static_cast<std::size_t>(power.vertex_count()), -1);
    std::vector<VertexLabel> order;
    for (VertexId v = 0; v < power.vertex_count(); ++v)
        if (vertex_in[static_cast<std::size_t>(v)]) {
            old_to_new[static_cast<std::size_t>(v)] = static_cast<VertexId>(order.size());
            order.push_back(power.label(v));
        }
    for (Simplex& s : kept)
        for (VertexId& v : s) v = old_to_new[static_cast<std::size_t>(v)];
    return SimplicialComplex::from_simplices(std::move(order), kept, /*close=*/false);
}

SimplicialComplex fat_diagonal(const SimplicialComplex& x, int n) {
    if (n < 1) throw PreconditionError("fat_diagonal requires n >= 1");
    if (n == 1) return SimplicialComplex();  // no pair of rows exists
    return fat_diagonal_in(x, ordered_power(x, n), n);
}

// ---------------------------------------------------------------------------
// Barycentric subdivision

VertexLabel bary_label(const SimplicialComplex& x, const Simplex& s) {
    return VertexLabel::bary(x.labels_of(s));
}

namespace {

/** Vertex order shared by bs and difference: reverse inclusion, linearized. */
std::vector<std::size_t> bary_vertex_order(const std::vector<Simplex>& simplices,
                                           const std::vector<VertexLabel>& labels) {
    std::vector<std::size_t> idx(simplices.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (simplices[a].size() != simplices[b].size())
            return simplices[a].size() > simplices[b].size();
        return labels[a] < labels[b];
    });
    return idx;
}

}  // namespace

SimplicialComplex barycentric_subdivision(const SimplicialComplex& x) {
    std::vector<Simplex> simplices;
    simplices.reserve(x.simplex_count());
    for (const auto& level : x.simplices_by_dim())
        for (const Simplex& s : level) simplices.push_back(s);

    std::vector<VertexLabel> labels;
    labels.reserve(simplices.size());
    for (const Simplex& s : simplices) labels.push_back(bary_label(x, s));

    const auto perm = bary_vertex_order(simplices, labels);
    std::vector<VertexLabel> order;
    order.reserve(perm.size());
    std::unordered_map<Simplex, VertexId, SimplexHash> id_of;
    std::vector<Simplex> ordered_simplices;
    ordered_simplices.reserve(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        order.push_back(labels[perm[i]]);
        ordered_simplices.push_back(simplices[perm[i]]);
        id_of[simplices[perm[i]]] = static_cast<VertexId>(i);
    }

    // Chains under strict inclusion; extending downward by proper subsets
    // produces every chain exactly once, in ascending bs-vertex order.
    std::vector<Simplex> family;
    Simplex chain;
    auto grow = [&](auto&& self, const Simplex& bottom) -> void {
        family.push_back(chain);
        check_budget(family.size(), "barycentric subdivision");
        const std::size_t m = bottom.size();
        if (m <= 1) return;
        if (m > 24) throw BudgetError("barycentric subdivision of a simplex with >24 vertices");
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            if (mask == (1u << m) - 1) continue;  // proper subsets only
            Simplex sub;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) sub.push_back(bottom[i]);
            chain.push_back(id_of.at(sub));
            self(self, sub);
            chain.pop_back();
        }
    };
    for (const Simplex& s : ordered_simplices) {
        chain.assign(1, id_of.at(s));
        grow(grow, s);
    }
    return SimplicialComplex::from_simplices(std::move(order), family, /*close=*/false);
}

// ---------------------------------------------------------------------------
// Simplicial difference and complement model

SimplicialComplex simplicial_difference(const SimplicialComplex& x, const SimplicialComplex& a) {
    const std::vector<Simplex> mnf = minimal_nonfaces(x, a);

    std::vector<VertexLabel> labels;
    labels.reserve(mnf.size());
    for (const Simplex& s : mnf) labels.push_back(bary_label(x, s));
    const auto perm = bary_vertex_order(mnf, labels);
    std::vector<VertexLabel> order;
    std::vector<Simplex> gens;  // mnf in derived vertex order
    for (std::size_t i : perm) {
        order.push_back(labels[i]);
        gens.push_back(mnf[i]);
    }

    // A set of minimal non-faces spans a simplex whenever its union is a
    // simplex of x; the family is downward closed since unions shrink.
    std::vector<Simplex> family;
    Simplex members;
    auto grow = [&](auto&& self, const Simplex& uni) -> void {
        family.push_back(members);
        check_budget(family.size(), "simplicial difference");
        for (VertexId j = members.back() + 1; j < static_cast<VertexId>(gens.size()); ++j) {
            Simplex u2;
            std::set_union(uni.begin(), uni.end(), gens[static_cast<std::size_t>(j)].begin(),
                           gens[static_cast<std::size_t>(j)].end(), std::back_inserter(u2));
            if (!x.contains(u2)) continue;
            members.push_back(j);
            self(self, u2);
            members.pop_back();
        }
    };
    for (VertexId i = 0; i < static_cast<VertexId>(gens.size()); ++i) {
        members.assign(1, i);
        grow(grow, gens[static_cast<std::size_t>(i)]);
    }
    return SimplicialComplex::from_simplices(std::move(order), family, /*close=*/false);
}

ComplementResult complement_model(const SimplicialComplex& x, const SimplicialComplex& a) {
    const bool full = is_full_subcomplex(x, a);  // also checks the subcomplex precondition
    std::vector<char> in_a(static_cast<std::size_t>(x.vertex_count()), 0);
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        in_a[static_cast<std::size_t>(*x.index_of(a.label(v)))] = 1;
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < x.vertex_count(); ++v)
        if (!in_a[static_cast<std::size_t>(v)]) keep.push_back(v);
    return ComplementResult{x.induced_subcomplex_ids(keep), full};
}

// ---------------------------------------------------------------------------
// Configuration-space models

SimplicialComplex conf_model(const SimplicialComplex& x, int n) {
    if (n < 1) throw PreconditionError("conf_model requires n >= 1");
    SimplicialComplex power = ordered_power(x, n);
    SimplicialComplex fat =
        n == 1 ? SimplicialComplex() : fat_diagonal_in(x, power, n);
    return simplicial_difference(power, fat);
}

SimplicialComplex conf_model_bs(const SimplicialComplex& x, int n) {
    if (n < 1) throw PreconditionError("conf_model_bs requires n >= 1");
    SimplicialComplex power = ordered_power(x, n);
    SimplicialComplex fat =
        n == 1 ? SimplicialComplex() : fat_diagonal_in(x, power, n);
    return complement_model(barycentric_subdivision(power), barycentric_subdivision(fat)).complex;
}

}  // namespace simpconf
