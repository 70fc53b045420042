#include "simpconf/complex.hpp"

#include <algorithm>

#include "simpconf/errors.hpp"

namespace simpconf {

struct SimplicialComplex::Impl {
    std::vector<VertexLabel> vertex_order;
    std::unordered_map<VertexLabel, VertexId, LabelHash> index_of;
    std::vector<std::vector<Simplex>> by_dim;  // by_dim[k] sorted lexicographically
    SimplexSet all;
};

namespace {

void sort_family(std::vector<std::vector<Simplex>>& by_dim) {
    for (auto& level : by_dim) std::sort(level.begin(), level.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex() : impl_(std::make_shared<Impl>()) {}

SimplicialComplex::SimplicialComplex(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<VertexLabel> vertex_order, const std::vector<std::vector<VertexLabel>>& facets) {
    auto impl = std::make_shared<Impl>();
    for (std::size_t i = 0; i < vertex_order.size(); ++i) {
        if (!impl->index_of.emplace(vertex_order[i], static_cast<VertexId>(i)).second)
            throw SchemaError("duplicate vertex label " + vertex_order[i].str() +
                              " in vertex order");
    }
    impl->vertex_order = std::move(vertex_order);

    std::vector<Simplex> id_facets;
    id_facets.reserve(facets.size());
    for (const auto& facet : facets) {
        Simplex s;
        s.reserve(facet.size());
        for (const auto& l : facet) {
            auto it = impl->index_of.find(l);
            if (it == impl->index_of.end())
                throw SchemaError("facet vertex " + l.str() + " is not in the vertex order");
            s.push_back(it->second);
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw SchemaError("facet contains a duplicate vertex");
        id_facets.push_back(std::move(s));
    }

    std::vector<VertexLabel> order = impl->vertex_order;
    return from_simplices(std::move(order), id_facets, /*close=*/true);
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<VertexLabel> vertex_order,
                                                    const std::vector<Simplex>& simplices,
                                                    bool close) {
    auto impl = std::make_shared<Impl>();
    for (std::size_t i = 0; i < vertex_order.size(); ++i) {
        if (!impl->index_of.emplace(vertex_order[i], static_cast<VertexId>(i)).second)
            throw SchemaError("duplicate vertex label " + vertex_order[i].str() +
                              " in vertex order");
    }
    impl->vertex_order = std::move(vertex_order);
    const auto n = static_cast<VertexId>(impl->vertex_order.size());

    // Every vertex is a 0-simplex; no phantom vertices.
    std::vector<Simplex> stack;
    for (VertexId v = 0; v < n; ++v) stack.push_back({v});
    for (const Simplex& s : simplices) {
        if (s.empty()) throw SchemaError("empty simplex in family");
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw SchemaError("simplex ids must be sorted and duplicate-free");
        if (s.front() < 0 || s.back() >= n) throw SchemaError("simplex vertex id out of range");
        stack.push_back(s);
    }

    while (!stack.empty()) {
        Simplex s = std::move(stack.back());
        stack.pop_back();
        if (!impl->all.insert(s).second) continue;
        check_budget(impl->all.size(), "simplex family");
        if (close && s.size() > 1) {
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face;
                face.reserve(s.size() - 1);
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face.push_back(s[j]);
                if (!impl->all.count(face)) stack.push_back(std::move(face));
            }
        }
    }

    if (!close) {
        // The family must already be downward closed.
        for (const Simplex& s : impl->all) {
            if (s.size() == 1) continue;
            Simplex face(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::size_t t = 0;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face[t++] = s[j];
                if (!impl->all.count(face))
                    throw SchemaError("simplex family is not closed under taking faces");
            }
        }
    }

    int dim = -1;
    for (const Simplex& s : impl->all) dim = std::max(dim, static_cast<int>(s.size()) - 1);
    impl->by_dim.resize(dim + 1);
    for (const Simplex& s : impl->all) impl->by_dim[s.size() - 1].push_back(s);
    sort_family(impl->by_dim);
    return SimplicialComplex(std::move(impl));
}

int SimplicialComplex::vertex_count() const {
    return static_cast<int>(impl_->vertex_order.size());
}

const std::vector<VertexLabel>& SimplicialComplex::vertex_order() const {
    return impl_->vertex_order;
}

const VertexLabel& SimplicialComplex::label(VertexId v) const {
    return impl_->vertex_order.at(static_cast<std::size_t>(v));
}

std::optional<VertexId> SimplicialComplex::index_of(const VertexLabel& l) const {
    auto it = impl_->index_of.find(l);
    if (it == impl_->index_of.end()) return std::nullopt;
    return it->second;
}

int SimplicialComplex::dim() const { return static_cast<int>(impl_->by_dim.size()) - 1; }

std::size_t SimplicialComplex::simplex_count() const { return impl_->all.size(); }

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
    static const std::vector<Simplex> none;
    if (k < 0 || k >= static_cast<int>(impl_->by_dim.size())) return none;
    return impl_->by_dim[static_cast<std::size_t>(k)];
}

const std::vector<std::vector<Simplex>>& SimplicialComplex::simplices_by_dim() const {
    return impl_->by_dim;
}

bool SimplicialComplex::contains(const Simplex& s) const { return impl_->all.count(s) > 0; }

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    SimplexSet covered;
    for (int k = dim(); k >= 1; --k) {
        for (const Simplex& s : simplices(k)) {
            Simplex face(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i) {
                std::size_t t = 0;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != i) face[t++] = s[j];
                covered.insert(face);
            }
        }
    }
    std::vector<Simplex> out;
    for (const auto& level : impl_->by_dim)
        for (const Simplex& s : level)
            if (!covered.count(s)) out.push_back(s);
    return out;
}

Simplex SimplicialComplex::simplex_from_labels(const std::vector<VertexLabel>& labels) const {
    Simplex s;
    s.reserve(labels.size());
    for (const auto& l : labels) {
        auto idx = index_of(l);
        if (!idx) throw PreconditionError("vertex " + l.str() + " is not in the complex");
        s.push_back(*idx);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw PreconditionError("duplicate vertex in simplex");
    return s;
}

std::vector<VertexLabel> SimplicialComplex::labels_of(const Simplex& s) const {
    std::vector<VertexLabel> out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(label(v));
    return out;
}

bool SimplicialComplex::contains_labels(const std::vector<VertexLabel>& labels) const {
    Simplex s;
    s.reserve(labels.size());
    for (const auto& l : labels) {
        auto idx = index_of(l);
        if (!idx) return false;
        s.push_back(*idx);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
    return contains(s);
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    f.reserve(impl_->by_dim.size());
    for (const auto& level : impl_->by_dim) f.push_back(static_cast<long long>(level.size()));
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    long long sign = 1;
    for (const auto& level : impl_->by_dim) {
        chi += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    return chi;
}

SimplicialComplex SimplicialComplex::induced_subcomplex(
    const std::vector<VertexLabel>& vertices) const {
    std::vector<VertexId> keep;
    keep.reserve(vertices.size());
    for (const auto& l : vertices) {
        auto idx = index_of(l);
        if (!idx) throw PreconditionError("vertex " + l.str() + " is not in the complex");
        keep.push_back(*idx);
    }
    return induced_subcomplex_ids(keep);
}

SimplicialComplex SimplicialComplex::induced_subcomplex_ids(
    const std::vector<VertexId>& keep) const {
    std::vector<VertexId> old_to_new(static_cast<std::size_t>(vertex_count()), -1);
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<VertexLabel> order;
    order.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= vertex_count())
            throw PreconditionError("vertex id out of range in induced subcomplex");
        old_to_new[static_cast<std::size_t>(sorted[i])] = static_cast<VertexId>(i);
        order.push_back(label(sorted[i]));
    }
    std::vector<Simplex> family;
    for (const auto& level : impl_->by_dim) {
        for (const Simplex& s : level) {
            Simplex mapped;
            mapped.reserve(s.size());
            bool ok = true;
            for (VertexId v : s) {
                VertexId w = old_to_new[static_cast<std::size_t>(v)];
                if (w < 0) {
                    ok = false;
                    break;
                }
                mapped.push_back(w);
            }
            if (ok) family.push_back(std::move(mapped));
        }
    }
    return from_simplices(std::move(order), family, /*close=*/false);
}

bool SimplicialComplex::operator==(const SimplicialComplex& other) const {
    if (impl_ == other.impl_) return true;
    return impl_->vertex_order == other.impl_->vertex_order && impl_->by_dim == other.impl_->by_dim;
}

// ---------------------------------------------------------------------------

namespace {

/**
 * Translation of a's simplices into k's ids; nullopt when some vertex of a
 * is unknown to k.
 */
std::optional<std::vector<VertexId>> vertex_translation(const SimplicialComplex& k,
                                                        const SimplicialComplex& a) {
    std::vector<VertexId> map(static_cast<std::size_t>(a.vertex_count()));
    for (VertexId v = 0; v < a.vertex_count(); ++v) {
        auto idx = k.index_of(a.label(v));
        if (!idx) return std::nullopt;
        map[static_cast<std::size_t>(v)] = *idx;
    }
    return map;
}

Simplex translate(const Simplex& s, const std::vector<VertexId>& map) {
    Simplex out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(map[static_cast<std::size_t>(v)]);
    std::sort(out.begin(), out.end());
    return out;
}

void require_subcomplex(const SimplicialComplex& k, const SimplicialComplex& a,
                        const char* who) {
    if (!is_subcomplex(k, a))
        throw PreconditionError(std::string(who) + ": second complex is not a subcomplex of the first");
}

}  // namespace

bool is_subcomplex(const SimplicialComplex& k, const SimplicialComplex& a) {
    auto map = vertex_translation(k, a);
    if (!map) return false;
    for (const auto& level : a.simplices_by_dim())
        for (const Simplex& s : level)
            if (!k.contains(translate(s, *map))) return false;
    return true;
}

bool is_full_subcomplex(const SimplicialComplex& k, const SimplicialComplex& a) {
    require_subcomplex(k, a, "is_full_subcomplex");
    std::vector<char> in_a(static_cast<std::size_t>(k.vertex_count()), 0);
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        in_a[static_cast<std::size_t>(*k.index_of(a.label(v)))] = 1;
    for (const auto& level : k.simplices_by_dim()) {
        for (const Simplex& s : level) {
            bool spanned = true;
            for (VertexId v : s)
                if (!in_a[static_cast<std::size_t>(v)]) {
                    spanned = false;
                    break;
                }
            if (!spanned) continue;
            Simplex in_a_ids;
            in_a_ids.reserve(s.size());
            for (VertexId v : s) in_a_ids.push_back(*a.index_of(k.label(v)));
            std::sort(in_a_ids.begin(), in_a_ids.end());
            if (!a.contains(in_a_ids)) return false;
        }
    }
    return true;
}

std::vector<Simplex> minimal_nonfaces(const SimplicialComplex& k, const SimplicialComplex& a) {
    require_subcomplex(k, a, "minimal_nonfaces");
    // Membership of k-simplices in a, by translated ids.
    std::vector<VertexId> k_to_a(static_cast<std::size_t>(k.vertex_count()), -1);
    for (VertexId v = 0; v < a.vertex_count(); ++v)
        k_to_a[static_cast<std::size_t>(*k.index_of(a.label(v)))] = v;
    auto in_a = [&](const Simplex& s) {
        Simplex t;
        t.reserve(s.size());
        for (VertexId v : s) {
            VertexId w = k_to_a[static_cast<std::size_t>(v)];
            if (w < 0) return false;
            t.push_back(w);
        }
        std::sort(t.begin(), t.end());
        return a.contains(t);
    };

    std::vector<Simplex> out;
    for (const auto& level : k.simplices_by_dim()) {
        for (const Simplex& s : level) {
            if (in_a(s)) continue;
            bool minimal = true;
            if (s.size() > 1) {
                Simplex face(s.size() - 1);
                for (std::size_t i = 0; i < s.size() && minimal; ++i) {
                    std::size_t t = 0;
                    for (std::size_t j = 0; j < s.size(); ++j)
                        if (j != i) face[t++] = s[j];
                    if (!in_a(face)) minimal = false;
                }
            }
            if (minimal) out.push_back(s);
        }
    }
    return out;  // by_dim iteration is already (dimension, lexicographic)
}

bool labeled_equal(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count() || a.simplex_count() != b.simplex_count())
        return false;
    auto map = vertex_translation(b, a);  // a's labels looked up in b
    if (!map) return false;
    for (const auto& level : a.simplices_by_dim())
        for (const Simplex& s : level)
            if (!b.contains(translate(s, *map))) return false;
    return true;
}

SimplicialComplex relabel(const SimplicialComplex& k,
                          const std::function<VertexLabel(const VertexLabel&)>& fn) {
    std::vector<VertexLabel> order;
    order.reserve(static_cast<std::size_t>(k.vertex_count()));
    for (const auto& l : k.vertex_order()) order.push_back(fn(l));
    std::vector<Simplex> family;
    for (const auto& level : k.simplices_by_dim())
        for (const Simplex& s : level) family.push_back(s);
    return SimplicialComplex::from_simplices(std::move(order), family, /*close=*/false);
}

}  // namespace simpconf
