#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "simpconf/errors.hpp"
#include "simpconf/nerve.hpp"

using namespace simpconf;
using namespace simpconf::testing;

TEST_CASE("minimal-non-face nerve on the paper's pairs") {
    CHECK(minimal_nonface_nerve(delta2(), bd_delta2()).f_vector() == FVector{1});

    SimplicialComplex x2 = ordered_power(bd_delta2(), 2);
    SimplicialComplex nerve = minimal_nonface_nerve(x2, fat_diagonal(bd_delta2(), 2));
    CHECK(nerve.f_vector() == FVector{6, 8, 2});
    CHECK(labeled_equal(nerve, conf_model(bd_delta2(), 2)));

    CHECK(minimal_nonface_nerve(delta2(), delta2()).empty());
    CHECK_THROWS_AS(minimal_nonface_nerve(bd_delta2(), delta2()), PreconditionError);
}

TEST_CASE("nerve matches difference everywhere in the corpus") {
    CHECK(nerve_matches_difference(delta2(), bd_delta2()));
    CHECK(nerve_matches_difference(bd_delta2(), empty_complex()));
    for (const auto& [name, x, a] : corpus_pairs()) {
        INFO(name);
        CHECK(nerve_matches_difference(x, a));
    }
}

TEST_CASE("intersection rule: star intersections against union membership") {
    std::mt19937 rng(314159u);
    SimplicialComplex x = ordered_power(bd_delta2(), 2);
    SimplicialComplex a = fat_diagonal(bd_delta2(), 2);
    SimplicialComplex nerve = minimal_nonface_nerve(x, a);
    const auto mnf = minimal_nonfaces(x, a);
    // identify nerve vertices with their generating simplices
    std::vector<Simplex> generator(static_cast<std::size_t>(nerve.vertex_count()));
    for (VertexId v = 0; v < nerve.vertex_count(); ++v) {
        Simplex g;
        for (const auto& m : nerve.label(v).parts()) g.push_back(*x.index_of(m));
        std::sort(g.begin(), g.end());
        generator[static_cast<std::size_t>(v)] = g;
    }
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t k = 1 + rng() % 3;
        Simplex picked;
        for (std::size_t i = 0; i < k; ++i)
            picked.push_back(static_cast<VertexId>(rng() % nerve.vertex_count()));
        std::sort(picked.begin(), picked.end());
        picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
        Simplex uni;
        for (VertexId v : picked)
            for (VertexId b : generator[static_cast<std::size_t>(v)]) uni.push_back(b);
        std::sort(uni.begin(), uni.end());
        uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
        CHECK(nerve.contains(picked) == x.contains(uni));
    }
}

TEST_CASE("nerve of a cover by subcomplexes") {
    // two closed stars covering the interval meet in a vertex
    SimplicialComplex k = path3();
    SimplicialComplex star0 = make_complex({"0", "1"}, {{"0", "1"}});
    SimplicialComplex star2 = make_complex({"1", "2"}, {{"1", "2"}});
    CHECK(nerve_of_subcomplex_cover(k, {star0, star2}).f_vector() == FVector{2, 1});

    // the three closed edges of the triangle boundary: pairwise meet,
    // empty triple intersection
    SimplicialComplex x = bd_delta2();
    std::vector<SimplicialComplex> edges = {make_complex({"0", "1"}, {{"0", "1"}}),
                                            make_complex({"0", "2"}, {{"0", "2"}}),
                                            make_complex({"1", "2"}, {{"1", "2"}})};
    CHECK(nerve_of_subcomplex_cover(x, edges).f_vector() == FVector{3, 3});

    CHECK(nerve_of_subcomplex_cover(x, {x}).f_vector() == FVector{1});

    CHECK_THROWS_AS(nerve_of_subcomplex_cover(x, {edges[0], edges[1]}), PreconditionError);
    CHECK_THROWS_AS(nerve_of_subcomplex_cover(x, {delta2()}), PreconditionError);
}

TEST_CASE("the minimal-non-face cover is equivariant") {
    SimplicialAction s2 = symmetric_group_action(bd_delta2(), 2);
    const SimplicialComplex& x2 = s2.complex();
    SimplicialComplex fat = fat_diagonal(bd_delta2(), 2);
    const auto mnf = minimal_nonfaces(x2, fat);
    SimplexSet mnf_set(mnf.begin(), mnf.end());
    for (int g = 0; g < s2.size(); ++g)
        for (const Simplex& m : mnf) CHECK(mnf_set.count(s2.apply_simplex(g, m)) == 1);

    // induced nerve action equals induced difference action
    SimplicialComplex nerve = minimal_nonface_nerve(x2, fat);
    SimplicialComplex diff = simplicial_difference(x2, fat);
    SimplicialAction on_nerve = induced_action(s2, nerve, DerivedKind::Difference);
    SimplicialAction on_diff = induced_action(s2, diff, DerivedKind::Difference);
    REQUIRE(nerve == diff);  // same order, same family
    for (int g = 0; g < s2.size(); ++g)
        CHECK(on_nerve.element(g).map == on_diff.element(g).map);
}

TEST_CASE("isotropy of a nerve simplex embeds into the isotropy of the union") {
    SimplicialAction s2 = symmetric_group_action(bd_delta2(), 2);
    const SimplicialComplex& x2 = s2.complex();
    SimplicialComplex fat = fat_diagonal(bd_delta2(), 2);
    SimplicialComplex nerve = minimal_nonface_nerve(x2, fat);
    SimplicialAction on_nerve = induced_action(s2, nerve, DerivedKind::Difference);

    for (const auto& level : nerve.simplices_by_dim()) {
        for (const Simplex& s : level) {
            Simplex uni;
            for (VertexId v : s)
                for (const auto& m : nerve.label(v).parts()) uni.push_back(*x2.index_of(m));
            std::sort(uni.begin(), uni.end());
            uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
            const auto iso_nerve = isotropy_subgroup(on_nerve, s).elements;
            const auto iso_union = isotropy_subgroup(s2, uni).elements;
            for (int g : iso_nerve)
                CHECK(std::find(iso_union.begin(), iso_union.end(), g) != iso_union.end());
        }
    }
}
