#include "simpconf/json_io.hpp"

#include <fstream>
#include <sstream>

#include "simpconf/errors.hpp"

namespace simpconf {

VertexLabel label_from_json(const json& j) {
    if (j.is_string()) return VertexLabel::parse(j.get<std::string>());
    if (j.is_number_integer()) return VertexLabel::atom(std::to_string(j.get<long long>()));
    if (j.is_array()) {
        std::vector<VertexLabel> parts;
        for (const auto& p : j) parts.push_back(label_from_json(p));
        return VertexLabel::tuple(std::move(parts));
    }
    if (j.is_object()) {
        if (j.size() == 1 && j.contains("bary") && j["bary"].is_array()) {
            std::vector<VertexLabel> parts;
            for (const auto& p : j["bary"]) parts.push_back(label_from_json(p));
            return VertexLabel::bary(std::move(parts));
        }
        if (j.size() == 1 && j.contains("orbit") && j["orbit"].is_array()) {
            std::vector<VertexLabel> parts;
            for (const auto& p : j["orbit"]) parts.push_back(label_from_json(p));
            return VertexLabel::orbit(std::move(parts));
        }
    }
    throw SchemaError("cannot read a vertex label from " + j.dump());
}

namespace {

struct ParsedDocument {
    std::vector<VertexLabel> vertices;
    std::vector<std::vector<VertexLabel>> families;  // facets or explicit simplices
    bool explicit_family = false;                    // "simplices" instead of "facets"
};

ParsedDocument parse_document(const json& doc) {
    if (!doc.is_object()) throw SchemaError("complex document must be a JSON object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw SchemaError("complex document needs a \"vertices\" array");
    const bool has_facets = doc.contains("facets");
    const bool has_simplices = doc.contains("simplices");
    if (has_facets == has_simplices)
        throw SchemaError("complex document needs exactly one of \"facets\" or \"simplices\"");
    const json& family = has_facets ? doc["facets"] : doc["simplices"];
    if (!family.is_array())
        throw SchemaError(std::string(has_facets ? "\"facets\"" : "\"simplices\"") +
                          " must be an array of label arrays");

    ParsedDocument out;
    out.explicit_family = has_simplices;
    for (const auto& v : doc["vertices"]) out.vertices.push_back(label_from_json(v));
    for (const auto& f : family) {
        if (!f.is_array()) throw SchemaError("each facet must be an array of labels");
        std::vector<VertexLabel> labels;
        for (const auto& v : f) labels.push_back(label_from_json(v));
        out.families.push_back(std::move(labels));
    }
    return out;
}

}  // namespace

SimplicialComplex complex_from_json(const json& doc) {
    ParsedDocument p = parse_document(doc);
    return SimplicialComplex::from_facets(std::move(p.vertices), p.families);
}

json complex_to_json(const SimplicialComplex& k) {
    json vertices = json::array();
    for (const auto& l : k.vertex_order()) vertices.push_back(l.str());
    json facets = json::array();
    for (const Simplex& s : k.maximal_simplices()) {
        json f = json::array();
        for (VertexId v : s) f.push_back(k.label(v).str());
        facets.push_back(std::move(f));
    }
    return json{{"vertices", std::move(vertices)}, {"facets", std::move(facets)}};
}

DocumentCheck validate_complex_document(const json& doc) {
    DocumentCheck out;
    ParsedDocument parsed;
    try {
        parsed = parse_document(doc);
    } catch (const SchemaError& e) {
        out.diagnostics.push_back({"error", e.what()});
        return out;
    }

    // Vertex-level defects, reported one by one.
    std::unordered_map<VertexLabel, int, LabelHash> seen;
    for (const auto& v : parsed.vertices)
        if (++seen[v] == 2)
            out.diagnostics.push_back({"error", "duplicate vertex label " + v.str()});
    for (const auto& f : parsed.families) {
        std::unordered_map<VertexLabel, int, LabelHash> in_facet;
        for (const auto& v : f) {
            if (!seen.count(v))
                out.diagnostics.push_back({"error", "facet vertex " + v.str() +
                                                        " is not in the vertex list"});
            if (++in_facet[v] == 2)
                out.diagnostics.push_back(
                    {"error", "facet repeats the vertex " + v.str()});
        }
    }
    for (const auto& d : out.diagnostics)
        if (d.severity == "error") return out;

    SimplicialComplex k = SimplicialComplex::from_facets(parsed.vertices, parsed.families);

    if (parsed.explicit_family) {
        // Closure warning: faces implied but not listed.
        SimplexSet listed;
        for (const auto& f : parsed.families) listed.insert(k.simplex_from_labels(f));
        for (VertexId v = 0; v < k.vertex_count(); ++v) listed.insert({v});
        for (const auto& level : k.simplices_by_dim())
            for (const Simplex& s : level)
                if (!listed.count(s)) {
                    std::string names;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        names += (i ? "," : "") + k.label(s[i]).str();
                    out.diagnostics.push_back(
                        {"warning", "simplex family is not closed: missing face {" + names + "}"});
                }
    }
    out.complex = std::move(k);
    return out;
}

std::vector<VertexPermutation> generators_from_json(const SimplicialComplex& k, const json& doc) {
    if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
        throw SchemaError("action document needs a \"generators\" array");
    std::vector<VertexPermutation> out;
    int index = 0;
    for (const auto& g : doc["generators"]) {
        if (!g.is_object() || !g.contains("map") || !g["map"].is_object())
            throw SchemaError("each generator needs a \"map\" object");
        VertexPermutation perm;
        perm.name = "g" + std::to_string(index++);
        perm.map.assign(static_cast<std::size_t>(k.vertex_count()), -1);
        for (const auto& [key, value] : g["map"].items()) {
            auto from = k.index_of(VertexLabel::parse(key));
            if (!from) throw SchemaError("generator maps unknown vertex " + key);
            auto to = k.index_of(label_from_json(value));
            if (!to) throw SchemaError("generator maps " + key + " to an unknown vertex");
            if (perm.map[static_cast<std::size_t>(*from)] != -1)
                throw SchemaError("generator maps " + key + " twice");
            perm.map[static_cast<std::size_t>(*from)] = *to;
        }
        for (VertexId v = 0; v < k.vertex_count(); ++v)
            if (perm.map[static_cast<std::size_t>(v)] == -1)
                throw SchemaError("generator does not map vertex " + k.label(v).str());
        out.push_back(std::move(perm));
    }
    return out;
}

json fvector_to_json(const FVector& f) { return json{{"fvector", f}}; }

namespace {

json int_to_json(const Int& x) {
    if (x <= Int(9007199254740992ll)) return json(static_cast<long long>(x));
    return json(x.str());  // too wide for a double-safe integer
}

}  // namespace

json profile_to_json(const HomologyProfile& p) {
    json torsion = json::array();
    for (const auto& level : p.torsion) {
        json t = json::array();
        for (const Int& x : level) t.push_back(int_to_json(x));
        torsion.push_back(std::move(t));
    }
    return json{{"betti", p.betti}, {"torsion", std::move(torsion)}, {"euler", p.euler}};
}

json quotient_to_json(const SimplicialAction& act, const QuotientResult& q) {
    json projection = json::object();
    for (VertexId v = 0; v < act.complex().vertex_count(); ++v)
        projection[act.complex().label(v).str()] =
            q.complex.label(q.projection[static_cast<std::size_t>(v)]).str();
    return json{{"complex", complex_to_json(q.complex)}, {"projection", std::move(projection)}};
}

json orbits_to_json(const SimplicialAction& act, int dim) {
    json orbits = json::array();
    for (const auto& orbit : orbit_partition(act, dim)) {
        json o = json::array();
        for (const Simplex& s : orbit) {
            json labels = json::array();
            for (VertexId v : s) labels.push_back(act.complex().label(v).str());
            o.push_back(std::move(labels));
        }
        orbits.push_back(std::move(o));
    }
    return json{{"dim", dim}, {"orbits", std::move(orbits)}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw SchemaError("cannot parse " + path + ": " + e.what());
    }
    return doc;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("failed while writing " + path);
}

}  // namespace simpconf
