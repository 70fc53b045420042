#include "simpconf/label.hpp"

#include <algorithm>

#include "simpconf/errors.hpp"

namespace simpconf {

namespace {

constexpr std::string_view kDelims = "()[]{},|";

bool is_delim(char c) { return kDelims.find(c) != std::string_view::npos; }

std::string join(const std::vector<VertexLabel>& parts, char open, char sep, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i].str();
    }
    out += close;
    return out;
}

}  // namespace

VertexLabel VertexLabel::atom(std::string_view text) {
    if (text.empty()) throw SchemaError("atom label must be nonempty");
    for (char c : text)
        if (is_delim(c))
            throw SchemaError("atom label '" + std::string(text) +
                              "' contains a reserved delimiter character");
    auto node = std::make_shared<Node>();
    node->kind = LabelKind::Atom;
    node->text = std::string(text);
    node->repr = node->text;
    return VertexLabel(std::move(node));
}

VertexLabel VertexLabel::tuple(std::vector<VertexLabel> parts) {
    if (parts.empty()) throw SchemaError("tuple label must have at least one entry");
    auto node = std::make_shared<Node>();
    node->kind = LabelKind::Tuple;
    node->parts = std::move(parts);
    node->repr = join(node->parts, '(', ',', ')');
    return VertexLabel(std::move(node));
}

VertexLabel VertexLabel::bary(std::vector<VertexLabel> members) {
    if (members.empty()) throw SchemaError("bary label must have at least one member");
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i + 1 < members.size(); ++i)
        if (members[i] == members[i + 1])
            throw SchemaError("bary label has duplicate member " + members[i].str());
    auto node = std::make_shared<Node>();
    node->kind = LabelKind::Bary;
    node->parts = std::move(members);
    node->repr = join(node->parts, '{', ',', '}');
    return VertexLabel(std::move(node));
}

VertexLabel VertexLabel::orbit(std::vector<VertexLabel> members) {
    if (members.empty()) throw SchemaError("orbit label must have at least one member");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto node = std::make_shared<Node>();
    node->kind = LabelKind::Orbit;
    node->parts = std::move(members);
    node->repr = join(node->parts, '[', '|', ']');
    return VertexLabel(std::move(node));
}

int VertexLabel::compare(const VertexLabel& other) const {
    if (node_ == other.node_) return 0;
    if (node_->kind != other.node_->kind)
        return static_cast<int>(node_->kind) < static_cast<int>(other.node_->kind) ? -1 : 1;
    if (node_->kind == LabelKind::Atom) return node_->text.compare(other.node_->text);
    const auto& a = node_->parts;
    const auto& b = other.node_->parts;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = a[i].compare(b[i]);
        if (c) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

// ---------------------------------------------------------------------------
// Parsing of the canonical serialization.

namespace {

struct Parser {
    std::string_view in;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw SchemaError("cannot parse label '" + std::string(in) + "': " + why +
                          " at position " + std::to_string(pos));
    }

    char peek() const { return pos < in.size() ? in[pos] : '\0'; }

    VertexLabel parse_one() {
        char c = peek();
        if (c == '(') return composite('(', ',', ')');
        if (c == '{') return composite('{', ',', '}');
        if (c == '[') return composite('[', '|', ']');
        std::size_t start = pos;
        while (pos < in.size() && !is_delim(in[pos])) ++pos;
        if (pos == start) fail("expected a label");
        return VertexLabel::atom(in.substr(start, pos - start));
    }

    VertexLabel composite(char open, char sep, char close) {
        ++pos;  // consume open
        std::vector<VertexLabel> parts;
        parts.push_back(parse_one());
        while (peek() == sep) {
            ++pos;
            parts.push_back(parse_one());
        }
        if (peek() != close) fail(std::string("expected '") + close + "'");
        ++pos;
        switch (open) {
            case '(': return VertexLabel::tuple(std::move(parts));
            case '{': return VertexLabel::bary(std::move(parts));
            default: return VertexLabel::orbit(std::move(parts));
        }
    }
};

}  // namespace

VertexLabel VertexLabel::parse(std::string_view text) {
    Parser p{text};
    VertexLabel out = p.parse_one();
    if (p.pos != text.size()) p.fail("trailing characters");
    return out;
}

}  // namespace simpconf
