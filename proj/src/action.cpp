#include "simpconf/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "simpconf/constructions.hpp"
#include "simpconf/errors.hpp"

namespace simpconf {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<VertexId>& v) const {
        return SimplexHash()(v);
    }
};

void require_bijection(const SimplicialComplex& k, const VertexPermutation& g) {
    const std::size_t n = static_cast<std::size_t>(k.vertex_count());
    if (g.map.size() != n)
        throw PreconditionError("element " + g.name + " has the wrong domain size");
    std::vector<char> hit(n, 0);
    for (VertexId w : g.map) {
        if (w < 0 || static_cast<std::size_t>(w) >= n || hit[static_cast<std::size_t>(w)])
            throw PreconditionError("element " + g.name + " is not a bijection on the vertices");
        hit[static_cast<std::size_t>(w)] = 1;
    }
}

void require_simplicial(const SimplicialComplex& k, const VertexPermutation& g) {
    Simplex image;
    for (const auto& level : k.simplices_by_dim()) {
        for (const Simplex& s : level) {
            image.clear();
            for (VertexId v : s) image.push_back(g.map[static_cast<std::size_t>(v)]);
            std::sort(image.begin(), image.end());
            if (!k.contains(image))
                throw PreconditionError("element " + g.name +
                                        " is not simplicial: the image of a simplex is missing");
        }
    }
}

}  // namespace

SimplicialAction SimplicialAction::trivial(SimplicialComplex k) {
    VertexPermutation e;
    e.name = "e";
    e.map.resize(static_cast<std::size_t>(k.vertex_count()));
    std::iota(e.map.begin(), e.map.end(), 0);
    return from_elements(std::move(k), {std::move(e)});
}

SimplicialAction SimplicialAction::from_elements(SimplicialComplex k,
                                                 std::vector<VertexPermutation> elements) {
    if (elements.empty()) throw PreconditionError("an action needs at least the identity element");
    SimplicialAction act;
    act.complex_ = std::move(k);

    std::unordered_map<std::vector<VertexId>, int, VecHash> index;
    for (auto& g : elements) {
        require_bijection(act.complex_, g);
        require_simplicial(act.complex_, g);
        if (!index.emplace(g.map, static_cast<int>(index.size())).second)
            throw PreconditionError("duplicate element " + g.name + " in the element list");
    }
    act.elements_ = std::move(elements);

    const std::size_t n = static_cast<std::size_t>(act.complex_.vertex_count());
    std::vector<VertexId> id_map(n);
    std::iota(id_map.begin(), id_map.end(), 0);
    auto it = index.find(id_map);
    if (it == index.end()) throw PreconditionError("the identity element is missing");
    act.identity_ = it->second;

    // Closure and inverses over the finite element list.
    std::vector<VertexId> comp(n);
    for (const auto& g : act.elements_) {
        bool has_inverse = false;
        for (const auto& h : act.elements_) {
            for (std::size_t v = 0; v < n; ++v)
                comp[v] = g.map[static_cast<std::size_t>(h.map[v])];
            auto c = index.find(comp);
            if (c == index.end())
                throw PreconditionError("element list is not closed: " + g.name + " after " +
                                        h.name + " is missing");
            if (c->second == act.identity_) has_inverse = true;
        }
        if (!has_inverse) throw PreconditionError("element " + g.name + " has no inverse");
    }

    // Vertex orbits, used by semiregularity and the quotient.
    act.orbit_rep_.assign(n, -1);
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        if (act.orbit_rep_[static_cast<std::size_t>(v)] >= 0) continue;
        std::vector<VertexId> orbit;
        for (const auto& g : act.elements_) orbit.push_back(g.map[static_cast<std::size_t>(v)]);
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        for (VertexId w : orbit) act.orbit_rep_[static_cast<std::size_t>(w)] = orbit.front();
    }
    return act;
}

SimplicialAction SimplicialAction::from_generators(
    SimplicialComplex k, const std::vector<VertexPermutation>& generators) {
    const std::size_t n = static_cast<std::size_t>(k.vertex_count());
    std::vector<VertexPermutation> elements;
    std::unordered_map<std::vector<VertexId>, int, VecHash> index;

    VertexPermutation e;
    e.name = "e";
    e.map.resize(n);
    std::iota(e.map.begin(), e.map.end(), 0);
    index.emplace(e.map, 0);
    elements.push_back(std::move(e));

    for (const auto& g : generators) {
        require_bijection(k, g);
        if (index.emplace(g.map, static_cast<int>(elements.size())).second)
            elements.push_back(g);
    }

    // Breadth-first products until closed.
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            std::vector<VertexId> comp(n);
            for (std::size_t v = 0; v < n; ++v)
                comp[v] = g.map[static_cast<std::size_t>(elements[head].map[v])];
            if (index.emplace(comp, static_cast<int>(elements.size())).second) {
                VertexPermutation word;
                word.name = g.name + "*" + elements[head].name;
                word.map = std::move(comp);
                elements.push_back(std::move(word));
                if (elements.size() > 100000)
                    throw PreconditionError("generated group has more than 100000 elements");
            }
        }
    }
    return from_elements(std::move(k), std::move(elements));
}

int SimplicialAction::compose(int g, int h) const {
    const auto& gm = elements_[std::size_t(g)].map;
    const auto& hm = elements_[std::size_t(h)].map;
    std::vector<VertexId> comp(gm.size());
    for (std::size_t v = 0; v < gm.size(); ++v)
        comp[v] = gm[static_cast<std::size_t>(hm[v])];
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].map == comp) return static_cast<int>(i);
    throw Error("internal: composition left the element list");
}

int SimplicialAction::inverse(int g) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (compose(static_cast<int>(i), g) == identity_) return static_cast<int>(i);
    throw Error("internal: element without inverse");
}

Simplex SimplicialAction::apply_simplex(int g, const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(apply(g, v));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// The S_n coordinate action

namespace {

std::string cycle_name(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::ostringstream out;
    bool any = false;
    for (int i = 0; i < n; ++i) {
        if (seen[std::size_t(i)] || perm[std::size_t(i)] == i) continue;
        any = true;
        out << '(' << (i + 1);
        seen[std::size_t(i)] = 1;
        for (int j = perm[std::size_t(i)]; j != i; j = perm[std::size_t(j)]) {
            seen[std::size_t(j)] = 1;
            out << ' ' << (j + 1);
        }
        out << ')';
    }
    return any ? out.str() : "e";
}

}  // namespace

SimplicialAction symmetric_group_action_on(const SimplicialComplex& x,
                                           const SimplicialComplex& power, int n) {
    if (n < 1) throw PreconditionError("symmetric_group_action requires n >= 1");
    if (n > 6) throw PreconditionError("n! element enumeration is unsupported beyond n = 6");

    // Decode power vertices to base-id tuples once.
    std::vector<std::vector<VertexId>> decode(static_cast<std::size_t>(power.vertex_count()));
    for (VertexId v = 0; v < power.vertex_count(); ++v) {
        const auto& parts = power.label(v).parts();
        if (power.label(v).kind() != LabelKind::Tuple || static_cast<int>(parts.size()) != n)
            throw PreconditionError("complex is not an ordered power with " + std::to_string(n) +
                                    " factors");
        std::vector<VertexId> t;
        t.reserve(parts.size());
        for (const auto& p : parts) {
            auto idx = x.index_of(p);
            if (!idx) throw PreconditionError("power vertex refers to an unknown base vertex");
            t.push_back(*idx);
        }
        decode[static_cast<std::size_t>(v)] = std::move(t);
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexPermutation> elements;
    do {
        VertexPermutation g;
        g.name = cycle_name(perm);
        g.map.resize(static_cast<std::size_t>(power.vertex_count()));
        std::vector<VertexLabel> parts;
        for (VertexId v = 0; v < power.vertex_count(); ++v) {
            const auto& t = decode[static_cast<std::size_t>(v)];
            std::vector<VertexId> image(t.size());
            for (int i = 0; i < n; ++i)
                image[static_cast<std::size_t>(perm[std::size_t(i)])] = t[std::size_t(i)];
            parts.clear();
            for (VertexId b : image) parts.push_back(x.label(b));
            auto idx = power.index_of(VertexLabel::tuple(parts));
            if (!idx) throw PreconditionError("permuted power vertex is missing from the power");
            g.map[static_cast<std::size_t>(v)] = *idx;
        }
        elements.push_back(std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));

    return SimplicialAction::from_elements(power, std::move(elements));
}

SimplicialAction symmetric_group_action(const SimplicialComplex& x, int n) {
    return symmetric_group_action_on(x, ordered_power(x, n), n);
}

// ---------------------------------------------------------------------------
// Induced actions

SimplicialAction induced_action(const SimplicialAction& parent, const SimplicialComplex& derived,
                                DerivedKind kind) {
    const SimplicialComplex& base = parent.complex();

    // Underlying parent data per derived vertex.
    std::vector<Simplex> carrier(static_cast<std::size_t>(derived.vertex_count()));
    for (VertexId v = 0; v < derived.vertex_count(); ++v) {
        const VertexLabel& l = derived.label(v);
        Simplex ids;
        switch (kind) {
            case DerivedKind::Bs:
            case DerivedKind::Difference: {
                if (l.kind() != LabelKind::Bary)
                    throw PreconditionError("derived vertex " + l.str() +
                                            " is not a barycenter label");
                for (const auto& m : l.parts()) {
                    auto idx = base.index_of(m);
                    if (!idx)
                        throw PreconditionError("derived vertex " + l.str() +
                                                " does not come from the parent complex");
                    ids.push_back(*idx);
                }
                std::sort(ids.begin(), ids.end());
                break;
            }
            case DerivedKind::InducedSubcomplex: {
                auto idx = base.index_of(l);
                if (!idx)
                    throw PreconditionError("derived vertex " + l.str() +
                                            " does not come from the parent complex");
                ids.push_back(*idx);
                break;
            }
            case DerivedKind::Power: {
                if (l.kind() != LabelKind::Tuple)
                    throw PreconditionError("derived vertex " + l.str() + " is not a tuple label");
                for (const auto& m : l.parts()) {
                    auto idx = base.index_of(m);
                    if (!idx)
                        throw PreconditionError("derived vertex " + l.str() +
                                                " does not come from the parent complex");
                    ids.push_back(*idx);  // tuple order preserved, not sorted
                }
                break;
            }
        }
        carrier[static_cast<std::size_t>(v)] = std::move(ids);
    }

    std::vector<VertexPermutation> elements;
    elements.reserve(static_cast<std::size_t>(parent.size()));
    for (int g = 0; g < parent.size(); ++g) {
        VertexPermutation out;
        out.name = parent.element(g).name;
        out.map.resize(static_cast<std::size_t>(derived.vertex_count()));
        for (VertexId v = 0; v < derived.vertex_count(); ++v) {
            const Simplex& ids = carrier[static_cast<std::size_t>(v)];
            std::vector<VertexLabel> labels;
            labels.reserve(ids.size());
            for (VertexId b : ids) labels.push_back(base.label(parent.apply(g, b)));
            VertexLabel image = [&] {
                switch (kind) {
                    case DerivedKind::Bs:
                    case DerivedKind::Difference:
                        return VertexLabel::bary(std::move(labels));
                    case DerivedKind::Power:
                        return VertexLabel::tuple(std::move(labels));
                    default:
                        return labels.front();
                }
            }();
            auto idx = derived.index_of(image);
            if (!idx)
                throw PreconditionError("element " + out.name +
                                        " does not act on the derived complex: image vertex " +
                                        image.str() + " is missing");
            out.map[static_cast<std::size_t>(v)] = *idx;
        }
        elements.push_back(std::move(out));
    }
    return SimplicialAction::from_elements(derived, std::move(elements));
}

// ---------------------------------------------------------------------------
// Orbits, regularity, quotient

std::vector<std::vector<Simplex>> orbit_partition(const SimplicialAction& act, int dim) {
    std::map<Simplex, std::vector<Simplex>> by_rep;
    for (const Simplex& s : act.complex().simplices(dim)) {
        Simplex rep = s;
        std::vector<Simplex> orbit;
        for (int g = 0; g < act.size(); ++g) {
            Simplex image = act.apply_simplex(g, s);
            if (image < rep) rep = image;
            orbit.push_back(std::move(image));
        }
        if (rep == s) {
            std::sort(orbit.begin(), orbit.end());
            orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
            by_rep.emplace(rep, std::move(orbit));
        }
    }
    std::vector<std::vector<Simplex>> out;
    out.reserve(by_rep.size());
    for (auto& [rep, orbit] : by_rep) out.push_back(std::move(orbit));
    return out;
}

bool is_semiregular(const SimplicialAction& act) {
    const auto& rep = act.vertex_orbit_rep();
    for (const Simplex& e : act.complex().simplices(1))
        if (rep[static_cast<std::size_t>(e[0])] == rep[static_cast<std::size_t>(e[1])])
            return false;
    return true;
}

namespace {

bool tuple_realizable(const SimplicialAction& act, const Simplex& s,
                      const std::vector<VertexId>& images) {
    for (int g = 0; g < act.size(); ++g) {
        bool ok = true;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (act.apply(g, s[i]) != images[i]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

}  // namespace

std::optional<RegularityWitness> regularity_witness(const SimplicialAction& act) {
    const SimplicialComplex& k = act.complex();
    std::vector<int> chosen;
    std::vector<VertexId> images;
    std::optional<RegularityWitness> found;

    auto search = [&](auto&& self, const Simplex& s, Simplex image_set) -> bool {
        const std::size_t level = chosen.size();
        if (level == s.size()) {
            if (!tuple_realizable(act, s, images)) {
                found = RegularityWitness{s, chosen, image_set};
                return true;
            }
            return false;
        }
        for (int g = 0; g < act.size(); ++g) {
            VertexId w = act.apply(g, s[level]);
            Simplex next = image_set;
            auto it = std::lower_bound(next.begin(), next.end(), w);
            if (it == next.end() || *it != w) next.insert(it, w);
            // Translate sets stay inside the complex or the tuple is moot.
            if (!k.contains(next)) continue;
            chosen.push_back(g);
            images.push_back(w);
            bool done = self(self, s, std::move(next));
            chosen.pop_back();
            images.pop_back();
            if (done) return true;
        }
        return false;
    };

    for (const auto& level : k.simplices_by_dim())
        for (const Simplex& s : level) {
            chosen.clear();
            images.clear();
            if (search(search, s, {})) return found;
        }
    return std::nullopt;
}

bool is_regular(const SimplicialAction& act) { return !regularity_witness(act).has_value(); }

std::string describe_witness(const SimplicialAction& act, const RegularityWitness& w) {
    const SimplicialComplex& k = act.complex();
    auto simplex_str = [&](const Simplex& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += k.label(s[i]).str();
        }
        return out + "}";
    };
    std::string elems;
    for (std::size_t i = 0; i < w.elements.size(); ++i) {
        if (i) elems += ",";
        elems += act.element(w.elements[static_cast<std::size_t>(i)]).name;
    }
    return "simplex " + simplex_str(w.simplex) + " and its translate " + simplex_str(w.image) +
           " under (" + elems + ") lie in no common group orbit";
}

IsotropySubgroup isotropy_subgroup(const SimplicialAction& act, const Simplex& s) {
    if (!act.complex().contains(s))
        throw PreconditionError("isotropy_subgroup: unknown simplex");
    IsotropySubgroup out;
    out.simplex = s;
    for (int g = 0; g < act.size(); ++g)
        if (act.apply_simplex(g, s) == s) out.elements.push_back(g);
    return out;
}

QuotientResult quotient_complex(const SimplicialAction& act) {
    if (auto w = regularity_witness(act))
        throw PreconditionError("quotient_complex requires a regular action: " +
                                describe_witness(act, *w));

    const SimplicialComplex& k = act.complex();
    const auto& rep = act.vertex_orbit_rep();

    // Quotient vertex ids follow the order of orbit representatives.
    std::vector<VertexId> rep_list;
    for (VertexId v = 0; v < k.vertex_count(); ++v)
        if (rep[static_cast<std::size_t>(v)] == v) rep_list.push_back(v);
    std::vector<VertexId> qid_of_rep(static_cast<std::size_t>(k.vertex_count()), -1);
    for (std::size_t i = 0; i < rep_list.size(); ++i)
        qid_of_rep[static_cast<std::size_t>(rep_list[i])] = static_cast<VertexId>(i);

    std::vector<std::vector<VertexLabel>> members(rep_list.size());
    for (VertexId v = 0; v < k.vertex_count(); ++v)
        members[static_cast<std::size_t>(qid_of_rep[static_cast<std::size_t>(
            rep[static_cast<std::size_t>(v)])])]
            .push_back(k.label(v));
    std::vector<VertexLabel> order;
    order.reserve(rep_list.size());
    for (auto& m : members) order.push_back(VertexLabel::orbit(std::move(m)));

    SimplexSet family;
    for (const auto& level : k.simplices_by_dim()) {
        for (const Simplex& s : level) {
            Simplex q;
            q.reserve(s.size());
            for (VertexId v : s)
                q.push_back(qid_of_rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(v)])]);
            std::sort(q.begin(), q.end());
            if (std::adjacent_find(q.begin(), q.end()) != q.end())
                throw Error("internal: a regular action collapsed a simplex");
            family.insert(std::move(q));
        }
    }
    std::vector<Simplex> list(family.begin(), family.end());

    QuotientResult out;
    out.complex = SimplicialComplex::from_simplices(std::move(order), list, /*close=*/false);
    out.projection.resize(static_cast<std::size_t>(k.vertex_count()));
    for (VertexId v = 0; v < k.vertex_count(); ++v)
        out.projection[static_cast<std::size_t>(v)] =
            qid_of_rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(v)])];
    return out;
}

}  // namespace simpconf
