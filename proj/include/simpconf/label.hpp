/**
 * Vertex labels.
 *
 * Every vertex of every complex carries a VertexLabel, a small recursive
 * value giving canonical names to derived vertices:
 *
 *   Atom("v")            a plain named vertex, serialized as-is
 *   Tuple(l1,...,ln)     a coordinate tuple, serialized "(l1,...,ln)"
 *   Bary(l1,...,lk)      the barycenter of the simplex {l1,...,lk},
 *                        serialized "{l1,...,lk}" with members sorted
 *   Orbit(l1,...,lk)     a group orbit of vertices, serialized "[l1|...|lk]"
 *                        with members sorted
 *
 * Bary and Orbit member lists are kept sorted by canonical label order and
 * duplicate-free, so the serialization is injective: distinct labels always
 * serialize to distinct strings. To preserve injectivity, atom text may not
 * contain the delimiter characters ()[]{},| and may not be empty.
 *
 * Canonical label order: first by kind (Atom < Tuple < Bary < Orbit), then
 * Atoms by text and composite labels lexicographically on their members.
 */

#ifndef SIMPCONF_LABEL_HPP
#define SIMPCONF_LABEL_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace simpconf {

enum class LabelKind { Atom = 0, Tuple = 1, Bary = 2, Orbit = 3 };

class VertexLabel {
  public:
    /** @throws SchemaError on empty text or forbidden characters. */
    static VertexLabel atom(std::string_view text);

    /** Coordinate tuple; member order is significant. */
    static VertexLabel tuple(std::vector<VertexLabel> parts);

    /**
     * Barycenter of the simplex with the given vertex labels. Members are
     * sorted canonically; duplicates are rejected.
     */
    static VertexLabel bary(std::vector<VertexLabel> members);

    /** Orbit of the given vertex labels; sorted, duplicates removed. */
    static VertexLabel orbit(std::vector<VertexLabel> members);

    /** Parses the canonical serialization back into a label. */
    static VertexLabel parse(std::string_view text);

    LabelKind kind() const { return node_->kind; }
    bool is_atom() const { return node_->kind == LabelKind::Atom; }

    /** Atom text; only valid for atoms. */
    const std::string& text() const { return node_->text; }

    /** Members of a Tuple/Bary/Orbit; empty for atoms. */
    const std::vector<VertexLabel>& parts() const { return node_->parts; }

    /** Canonical serialization. */
    const std::string& str() const { return node_->repr; }

    bool operator==(const VertexLabel& other) const {
        return node_ == other.node_ || node_->repr == other.node_->repr;
    }
    bool operator!=(const VertexLabel& other) const { return !(*this == other); }
    bool operator<(const VertexLabel& other) const { return compare(other) < 0; }

    /** Canonical order: kind, then text / member-lexicographic. */
    int compare(const VertexLabel& other) const;

  private:
    struct Node {
        LabelKind kind;
        std::string text;                // Atom payload
        std::vector<VertexLabel> parts;  // composite payload
        std::string repr;                // cached canonical serialization
    };

    explicit VertexLabel(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct LabelHash {
    std::size_t operator()(const VertexLabel& l) const {
        return std::hash<std::string>()(l.str());
    }
};

}  // namespace simpconf

#endif
