#include <catch2/catch_amalgamated.hpp>
#include <map>
#include <random>
#include <set>

#include "simpconf/errors.hpp"
#include "simpconf/label.hpp"

using namespace simpconf;

namespace {

VertexLabel random_label(std::mt19937& rng, int depth) {
    const int kind = depth == 0 ? 0 : static_cast<int>(rng() % 4);
    if (kind == 0) return VertexLabel::atom(std::string(1, static_cast<char>('a' + rng() % 6)));
    const int width = 1 + static_cast<int>(rng() % 3);
    std::vector<VertexLabel> parts;
    std::set<std::string> seen;
    for (int i = 0; i < width; ++i) {
        VertexLabel l = random_label(rng, depth - 1);
        if (kind != 1 && !seen.insert(l.str()).second) continue;  // Bary/Orbit dedupe
        parts.push_back(std::move(l));
    }
    switch (kind) {
        case 1: return VertexLabel::tuple(std::move(parts));
        case 2: return VertexLabel::bary(std::move(parts));
        default: return VertexLabel::orbit(std::move(parts));
    }
}

}  // namespace

TEST_CASE("atom validation") {
    CHECK(VertexLabel::atom("v12").str() == "v12");
    CHECK_THROWS_AS(VertexLabel::atom(""), SchemaError);
    CHECK_THROWS_AS(VertexLabel::atom("a,b"), SchemaError);
    CHECK_THROWS_AS(VertexLabel::atom("(x"), SchemaError);
    CHECK_THROWS_AS(VertexLabel::atom("x|y"), SchemaError);
}

TEST_CASE("canonical serialization") {
    auto a = VertexLabel::atom("a");
    auto b = VertexLabel::atom("b");
    CHECK(VertexLabel::tuple({b, a}).str() == "(b,a)");     // tuples keep order
    CHECK(VertexLabel::bary({b, a}).str() == "{a,b}");      // bary members sorted
    CHECK(VertexLabel::orbit({b, a, b}).str() == "[a|b]");  // orbit sorted, deduped
    CHECK_THROWS_AS(VertexLabel::bary({a, a}), SchemaError);
    CHECK(VertexLabel::bary({VertexLabel::tuple({a, b})}).str() == "{(a,b)}");
}

TEST_CASE("canonical order: kind first, then members") {
    auto a = VertexLabel::atom("a");
    auto b = VertexLabel::atom("b");
    auto t = VertexLabel::tuple({a});
    auto s = VertexLabel::bary({a});
    auto o = VertexLabel::orbit({a});
    CHECK(a < t);
    CHECK(t < s);
    CHECK(s < o);
    CHECK(a < b);
    CHECK(VertexLabel::bary({a}) < VertexLabel::bary({a, b}));  // prefix first
    CHECK(VertexLabel::tuple({a, a}) < VertexLabel::tuple({a, b}));
}

TEST_CASE("parse is inverse to serialization") {
    std::mt19937 rng(12345u);
    for (int i = 0; i < 300; ++i) {
        VertexLabel l = random_label(rng, 3);
        VertexLabel back = VertexLabel::parse(l.str());
        CHECK(back == l);
        CHECK(back.str() == l.str());
    }
}

TEST_CASE("serialization is injective across random labels") {
    std::mt19937 rng(999u);
    std::map<std::string, VertexLabel> by_repr;
    for (int i = 0; i < 500; ++i) {
        VertexLabel l = random_label(rng, 3);
        auto [it, fresh] = by_repr.emplace(l.str(), l);
        if (!fresh) CHECK(it->second == l);
    }
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(VertexLabel::parse(""), SchemaError);
    CHECK_THROWS_AS(VertexLabel::parse("(a,b"), SchemaError);
    CHECK_THROWS_AS(VertexLabel::parse("{a,a}"), SchemaError);
    CHECK_THROWS_AS(VertexLabel::parse("a)b"), SchemaError);
    CHECK_THROWS_AS(VertexLabel::parse("()"), SchemaError);
}
