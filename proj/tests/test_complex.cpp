#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "simpconf/errors.hpp"

using namespace simpconf;
using namespace simpconf::testing;

TEST_CASE("build_from_facets on the paper's triangles") {
    CHECK(bd_delta2().f_vector() == FVector{3, 3});
    CHECK(delta2().f_vector() == FVector{3, 3, 1});
    CHECK(sd_triangle().f_vector() == FVector{4, 6, 3});
}

TEST_CASE("build_from_facets input defects") {
    CHECK_THROWS_AS(make_complex({"0", "0"}, {}), SchemaError);
    CHECK_THROWS_AS(make_complex({"0", "1"}, {{"0", "2"}}), SchemaError);
    CHECK_THROWS_AS(make_complex({"0", "1"}, {{"0", "0"}}), SchemaError);
}

TEST_CASE("isolated vertices are 0-simplices, never phantoms") {
    SimplicialComplex k = make_complex({"0", "1", "2"}, {{"0", "1"}});
    CHECK(k.f_vector() == FVector{3, 1});
    CHECK(k.contains_labels({A("2")}));
}

TEST_CASE("closure holds for random facet inputs") {
    std::mt19937 rng(424242u);
    for (int trial = 0; trial < 20; ++trial) {
        const int nv = 3 + static_cast<int>(rng() % 4);
        std::vector<std::string> vertices;
        for (int v = 0; v < nv; ++v) vertices.push_back(std::to_string(v));
        std::vector<std::vector<std::string>> facets;
        const int nf = 1 + static_cast<int>(rng() % 4);
        for (int f = 0; f < nf; ++f) {
            std::set<int> picked;
            const int size = 1 + static_cast<int>(rng() % 4);
            while (static_cast<int>(picked.size()) < std::min(size, nv))
                picked.insert(static_cast<int>(rng() % nv));
            std::vector<std::string> facet;
            for (int v : picked) facet.push_back(std::to_string(v));
            facets.push_back(std::move(facet));
        }
        SimplicialComplex k = make_complex(vertices, facets);
        // every subset of every stored simplex is stored
        for (const auto& level : k.simplices_by_dim())
            for (const Simplex& s : level)
                for (std::uint32_t mask = 1; mask < (1u << s.size()); ++mask) {
                    Simplex sub;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (mask & (1u << i)) sub.push_back(s[i]);
                    CHECK(k.contains(sub));
                }
    }
}

TEST_CASE("euler characteristic equals the alternating sum, recomputed") {
    for (const auto& [name, k] : corpus_complexes()) {
        INFO(name);
        long long chi = 0;
        for (const auto& level : k.simplices_by_dim())
            for (const Simplex& s : level) chi += (s.size() % 2 == 1) ? 1 : -1;
        CHECK(chi == k.euler_characteristic());
    }
    CHECK(bd_delta2().euler_characteristic() == 0);
    CHECK(delta2().euler_characteristic() == 1);
}

TEST_CASE("contains_simplex") {
    CHECK_FALSE(bd_delta2().contains_labels({A("0"), A("1"), A("2")}));
    CHECK(delta2().contains_labels({A("0"), A("1"), A("2")}));
    CHECK_FALSE(delta2().contains_labels({A("0"), A("zzz")}));  // unknown label: just false
}

TEST_CASE("induced subcomplex basics") {
    SimplicialComplex edge = delta2().induced_subcomplex({A("0"), A("1")});
    CHECK(edge.f_vector() == FVector{2, 1});
    CHECK(delta2().induced_subcomplex({A("0"), A("1"), A("2")}) == delta2());
    CHECK_THROWS_AS(delta2().induced_subcomplex({A("9")}), PreconditionError);
}

TEST_CASE("induced subcomplex is monotone in the vertex set") {
    std::mt19937 rng(777u);
    for (const auto& [name, k] : corpus_complexes()) {
        if (k.vertex_count() < 2) continue;
        INFO(name);
        std::vector<VertexLabel> small, large;
        for (VertexId v = 0; v < k.vertex_count(); ++v) {
            const bool in_large = rng() % 4 != 0;
            if (in_large) {
                large.push_back(k.label(v));
                if (rng() % 2) small.push_back(k.label(v));
            }
        }
        SimplicialComplex ks = k.induced_subcomplex(small);
        SimplicialComplex kl = k.induced_subcomplex(large);
        CHECK(is_subcomplex(kl, ks));
        CHECK(is_subcomplex(k, kl));
    }
}

TEST_CASE("is_subcomplex") {
    CHECK(is_subcomplex(delta2(), bd_delta2()));
    CHECK_FALSE(is_subcomplex(bd_delta2(), delta2()));
    SimplicialComplex x2 = ordered_power(bd_delta2(), 2);
    CHECK(is_subcomplex(x2, fat_diagonal(bd_delta2(), 2)));
}

TEST_CASE("is_full_subcomplex") {
    SimplicialComplex x2 = ordered_power(bd_delta2(), 2);
    CHECK(is_full_subcomplex(x2, fat_diagonal(bd_delta2(), 2)));
    CHECK_FALSE(is_full_subcomplex(delta2(), bd_delta2()));
    SimplicialComplex boundary_in_sd =
        make_complex({"0", "1", "2"}, {{"0", "1"}, {"0", "2"}, {"1", "2"}});
    CHECK(is_full_subcomplex(sd_triangle(), boundary_in_sd));
    CHECK_THROWS_AS(is_full_subcomplex(bd_delta2(), delta2()), PreconditionError);
}

TEST_CASE("minimal_nonfaces on the paper's pairs") {
    auto mnf = minimal_nonfaces(delta2(), bd_delta2());
    REQUIRE(mnf.size() == 1);
    CHECK(mnf[0] == Simplex{0, 1, 2});

    SimplicialComplex x2 = ordered_power(bd_delta2(), 2);
    auto mnf2 = minimal_nonfaces(x2, fat_diagonal(bd_delta2(), 2));
    CHECK(mnf2.size() == 6);
    for (const Simplex& s : mnf2) CHECK(s.size() == 1);  // the off-diagonal vertices

    CHECK(minimal_nonfaces(delta2(), delta2()).empty());
}

TEST_CASE("minimal_nonfaces: definition checked directly on the corpus") {
    for (const auto& [name, x, a] : corpus_pairs()) {
        INFO(name);
        std::vector<VertexId> x_to_a(static_cast<std::size_t>(x.vertex_count()), -1);
        for (VertexId v = 0; v < a.vertex_count(); ++v)
            x_to_a[static_cast<std::size_t>(*x.index_of(a.label(v)))] = v;
        auto in_a = [&](const Simplex& s) {
            Simplex t;
            for (VertexId v : s) {
                if (x_to_a[static_cast<std::size_t>(v)] < 0) return false;
                t.push_back(x_to_a[static_cast<std::size_t>(v)]);
            }
            std::sort(t.begin(), t.end());
            return a.contains(t);
        };
        const bool full = is_full_subcomplex(x, a);
        for (const Simplex& s : minimal_nonfaces(x, a)) {
            CHECK_FALSE(in_a(s));
            for (std::uint32_t mask = 1; mask + 1 < (1u << s.size()); ++mask) {
                Simplex sub;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (mask & (1u << i)) sub.push_back(s[i]);
                CHECK(in_a(sub));
            }
            if (full) CHECK(s.size() == 1);
        }
    }
}

TEST_CASE("empty and zero-dimensional complexes are legal") {
    SimplicialComplex e = empty_complex();
    CHECK(e.empty());
    CHECK(e.dim() == -1);
    CHECK(e.f_vector().empty());
    CHECK(e.euler_characteristic() == 0);
    CHECK(is_subcomplex(delta2(), e));
    CHECK(point().f_vector() == FVector{1});
}

TEST_CASE("labeled equality and relabeling") {
    SimplicialComplex k = bd_delta2();
    SimplicialComplex r = relabel(k, [](const VertexLabel& l) {
        return VertexLabel::atom(l.text() + "x");
    });
    CHECK_FALSE(labeled_equal(k, r));
    SimplicialComplex back = relabel(r, [](const VertexLabel& l) {
        return VertexLabel::atom(l.text().substr(0, l.text().size() - 1));
    });
    CHECK(labeled_equal(k, back));
    CHECK(k == back);
}
