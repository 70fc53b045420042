#include "simpconf/nerve.hpp"

#include <algorithm>
#include <numeric>

#include "simpconf/constructions.hpp"
#include "simpconf/errors.hpp"

namespace simpconf {

SimplicialComplex minimal_nonface_nerve(const SimplicialComplex& x, const SimplicialComplex& a) {
    const std::vector<Simplex> mnf = minimal_nonfaces(x, a);

    // Derived vertex order: same convention as the difference.
    std::vector<VertexLabel> labels;
    labels.reserve(mnf.size());
    for (const Simplex& s : mnf) labels.push_back(bary_label(x, s));
    std::vector<std::size_t> perm(mnf.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t p, std::size_t q) {
        if (mnf[p].size() != mnf[q].size()) return mnf[p].size() > mnf[q].size();
        return labels[p] < labels[q];
    });

    // Star of each generator: the simplices of x containing it, as sorted
    // global indices. The intersection rule reads off these sets.
    std::vector<Simplex> all;
    all.reserve(x.simplex_count());
    for (const auto& level : x.simplices_by_dim())
        for (const Simplex& s : level) all.push_back(s);

    std::vector<VertexLabel> order;
    std::vector<std::vector<int>> star(mnf.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        const Simplex& g = mnf[perm[i]];
        order.push_back(labels[perm[i]]);
        for (std::size_t t = 0; t < all.size(); ++t)
            if (std::includes(all[t].begin(), all[t].end(), g.begin(), g.end()))
                star[i].push_back(static_cast<int>(t));
    }

    std::vector<Simplex> family;
    Simplex members;
    auto grow = [&](auto&& self, const std::vector<int>& common) -> void {
        family.push_back(members);
        check_budget(family.size(), "minimal non-face nerve");
        for (VertexId j = members.back() + 1; j < static_cast<VertexId>(star.size()); ++j) {
            std::vector<int> next;
            std::set_intersection(common.begin(), common.end(),
                                  star[static_cast<std::size_t>(j)].begin(),
                                  star[static_cast<std::size_t>(j)].end(),
                                  std::back_inserter(next));
            if (next.empty()) continue;
            members.push_back(j);
            self(self, next);
            members.pop_back();
        }
    };
    for (VertexId i = 0; i < static_cast<VertexId>(star.size()); ++i) {
        members.assign(1, i);
        grow(grow, star[static_cast<std::size_t>(i)]);
    }
    return SimplicialComplex::from_simplices(std::move(order), family, /*close=*/false);
}

SimplicialComplex nerve_of_subcomplex_cover(const SimplicialComplex& k,
                                            const std::vector<SimplicialComplex>& parts) {
    // Translate each part's simplices into k and check coverage.
    SimplexSet covered;
    std::vector<std::vector<VertexId>> part_vertices(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (!is_subcomplex(k, parts[p]))
            throw PreconditionError("cover part " + std::to_string(p) +
                                    " is not a subcomplex of the complex");
        if (parts[p].empty())
            throw PreconditionError("cover part " + std::to_string(p) + " is empty");
        for (VertexId v = 0; v < parts[p].vertex_count(); ++v)
            part_vertices[p].push_back(*k.index_of(parts[p].label(v)));
        std::sort(part_vertices[p].begin(), part_vertices[p].end());
        for (const auto& level : parts[p].simplices_by_dim())
            for (const Simplex& s : level) {
                Simplex t;
                t.reserve(s.size());
                for (VertexId v : s) t.push_back(*k.index_of(parts[p].label(v)));
                std::sort(t.begin(), t.end());
                covered.insert(std::move(t));
            }
    }
    for (const auto& level : k.simplices_by_dim())
        for (const Simplex& s : level)
            if (!covered.count(s))
                throw PreconditionError("the cover parts do not cover the complex");

    std::vector<VertexLabel> order;
    order.reserve(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p)
        order.push_back(VertexLabel::atom("U" + std::to_string(p)));

    // Closed parts intersect in a subcomplex; nonempty means a shared
    // vertex, so the nerve predicate is vertex-set intersection.
    std::vector<Simplex> family;
    Simplex members;
    auto grow = [&](auto&& self, const std::vector<VertexId>& common) -> void {
        family.push_back(members);
        for (VertexId j = members.back() + 1; j < static_cast<VertexId>(parts.size()); ++j) {
            std::vector<VertexId> next;
            std::set_intersection(common.begin(), common.end(),
                                  part_vertices[static_cast<std::size_t>(j)].begin(),
                                  part_vertices[static_cast<std::size_t>(j)].end(),
                                  std::back_inserter(next));
            if (next.empty()) continue;
            members.push_back(j);
            self(self, next);
            members.pop_back();
        }
    };
    for (VertexId i = 0; i < static_cast<VertexId>(parts.size()); ++i) {
        if (part_vertices[static_cast<std::size_t>(i)].empty()) continue;
        members.assign(1, i);
        grow(grow, part_vertices[static_cast<std::size_t>(i)]);
    }
    return SimplicialComplex::from_simplices(std::move(order), family, /*close=*/false);
}

bool nerve_matches_difference(const SimplicialComplex& x, const SimplicialComplex& a) {
    return labeled_equal(minimal_nonface_nerve(x, a), simplicial_difference(x, a));
}

}  // namespace simpconf
