/**
 * JSON documents for complexes, actions, and homology profiles.
 *
 * Complex document: {"vertices": [label, ...], "facets": [[label, ...], ...]}
 * where a label is a canonical-serialization string, a number (shorthand for
 * an atom), a nested array (Tuple), {"bary": [...]} or {"orbit": [...]}.
 * A "simplices" key may replace "facets" to supply an explicit family.
 * Emission always uses canonical serialization strings.
 *
 * Action document: {"generators": [{"map": {label: label, ...}}, ...]};
 * the library completes generators to the full group.
 */

#ifndef SIMPCONF_JSON_IO_HPP
#define SIMPCONF_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "simpconf/action.hpp"
#include "simpconf/complex.hpp"
#include "simpconf/homology.hpp"

namespace simpconf {

using json = nlohmann::json;

VertexLabel label_from_json(const json& j);

/** Parses a complex document. @throws SchemaError on any defect. */
SimplicialComplex complex_from_json(const json& doc);

/** Canonical emission; parse(emit(k)) == k exactly. */
json complex_to_json(const SimplicialComplex& k);

struct Diagnostic {
    std::string severity;  // "error" | "warning"
    std::string message;
};

struct DocumentCheck {
    std::vector<Diagnostic> diagnostics;
    std::optional<SimplicialComplex> complex;  // set when there was no error

    bool ok() const { return complex.has_value(); }
};

/**
 * Schema and closure diagnostics for a complex document; never throws on
 * content defects, collecting them instead. An explicit "simplices" family
 * that is not closed yields a warning naming the missing faces.
 */
DocumentCheck validate_complex_document(const json& doc);

/** Parses the generators of an action document against a complex. */
std::vector<VertexPermutation> generators_from_json(const SimplicialComplex& k, const json& doc);

json fvector_to_json(const FVector& f);
json profile_to_json(const HomologyProfile& p);
json quotient_to_json(const SimplicialAction& act, const QuotientResult& q);
json orbits_to_json(const SimplicialAction& act, int dim);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace simpconf

#endif
