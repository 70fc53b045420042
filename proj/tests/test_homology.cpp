#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "oracles.hpp"
#include "simpconf/constructions.hpp"
#include "simpconf/homology.hpp"

using namespace simpconf;
using namespace simpconf::testing;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int max_side) {
    const int rows = 1 + static_cast<int>(rng() % max_side);
    const int cols = 1 + static_cast<int>(rng() % max_side);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<int>(rng() % 19) - 9;
    return m;
}

void check_smith(const IntMatrix& m) {
    SmithResult r = smith_normal_form(m);
    // d is diagonal with a divisibility chain
    for (int i = 0; i < r.d.rows(); ++i)
        for (int j = 0; j < r.d.cols(); ++j)
            if (i != j) CHECK(r.d.at(i, j) == 0);
    Int prev = 0;
    for (int t = 0; t < std::min(r.d.rows(), r.d.cols()); ++t) {
        const Int& x = r.d.at(t, t);
        CHECK(x >= 0);
        if (prev != 0 && x != 0) CHECK(x % prev == 0);
        if (prev == 0 && t > 0) CHECK(x == 0);  // zeros come last
        prev = x;
    }
    // u m v == d with unimodular u, v
    CHECK(r.u * m * r.v == r.d);
    Int du = r.u.determinant();
    Int dv = r.v.determinant();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
}

}  // namespace

TEST_CASE("boundary of an edge") {
    ChainComplex cc = chain_complex(delta1());
    REQUIRE(cc.dim() == 1);
    const IntMatrix& d1 = cc.d(1);
    REQUIRE(d1.rows() == 2);
    REQUIRE(d1.cols() == 1);
    CHECK(d1.at(0, 0) == -1);
    CHECK(d1.at(1, 0) == 1);
}

TEST_CASE("boundary rank of the triangle boundary") {
    ChainComplex cc = chain_complex(bd_delta2());
    CHECK(invariant_factors(cc.d(1)).size() == 2);
}

TEST_CASE("dd = 0 as a dense product on small complexes") {
    for (const SimplicialComplex& k :
         {delta2(), sd_triangle(), rp2_six(), barycentric_subdivision(delta2())}) {
        ChainComplex cc = chain_complex(k);
        for (int d = 2; d <= cc.dim(); ++d) CHECK((cc.d(d - 1) * cc.d(d)).is_zero());
    }
}

TEST_CASE("smith normal form worked example") {
    IntMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 4;
    m.at(1, 0) = 6;
    m.at(1, 1) = 8;
    SmithResult r = smith_normal_form(m);
    CHECK(r.d.at(0, 0) == 2);
    CHECK(r.d.at(1, 1) == 4);
    check_smith(m);

    IntMatrix id = IntMatrix::identity(3);
    CHECK(smith_normal_form(id).d == id);

    IntMatrix zero(2, 3);
    CHECK(smith_normal_form(zero).d == zero);
}

TEST_CASE("smith normal form on 200 random matrices") {
    std::mt19937 rng(680130u);
    for (int trial = 0; trial < 200; ++trial) check_smith(random_matrix(rng, 12));
}

TEST_CASE("homology of the circle and the torus") {
    HomologyProfile circle = homology_profile(bd_delta2());
    CHECK(circle.betti == std::vector<long long>{1, 1});
    CHECK(circle.torsion_free());

    SimplicialComplex torus = barycentric_subdivision(ordered_power(bd_delta2(), 2));
    HomologyProfile h = homology_profile(torus);
    CHECK(h.betti == std::vector<long long>{1, 2, 1});
    CHECK(h.torsion_free());
    CHECK(h.euler == 0);
}

TEST_CASE("homology of the projective plane has 2-torsion") {
    HomologyProfile h = homology_profile(rp2_six());
    CHECK(h.betti == std::vector<long long>{1, 0, 0});
    REQUIRE(h.torsion.size() == 3);
    CHECK(h.torsion[0].empty());
    REQUIRE(h.torsion[1].size() == 1);
    CHECK(h.torsion[1][0] == 2);
    CHECK(h.torsion[2].empty());
    CHECK(h.euler == 1);

    HomologyProfile reduced = homology_profile(rp2_six(), /*reduced=*/true);
    CHECK(reduced.betti == std::vector<long long>{0, 0, 0});
}

TEST_CASE("degenerate inputs") {
    CHECK(homology_profile(empty_complex()).betti.empty());
    HomologyProfile pt = homology_profile(point());
    CHECK(pt.betti == std::vector<long long>{1});
    CHECK(homology_profile(point(), /*reduced=*/true).betti == std::vector<long long>{0});
}

TEST_CASE("euler-poincare identity on the corpus") {
    for (const auto& [name, k] : corpus_complexes()) {
        INFO(name);
        HomologyProfile h = homology_profile(k);
        long long alt = 0, sign = 1;
        for (long long b : h.betti) {
            alt += sign * b;
            sign = -sign;
        }
        CHECK(alt == k.euler_characteristic());
        CHECK(h.euler == k.euler_characteristic());
    }
}

TEST_CASE("subdivision invariance of homology") {
    for (const auto& [name, k] : corpus_complexes()) {
        if (k.simplex_count() > 40) continue;
        INFO(name);
        HomologyProfile a = homology_profile(k);
        HomologyProfile b = homology_profile(barycentric_subdivision(k));
        CHECK(a.betti == b.betti);
        CHECK(a.torsion == b.torsion);
    }
}

TEST_CASE("mod-2 betti numbers agree with the integral profile") {
    for (const SimplicialComplex& k :
         {bd_delta2(), rp2_six(), delta2(), ordered_power(bd_delta2(), 2)}) {
        HomologyProfile h = homology_profile(k);
        const auto b2 = detail::betti_mod2(k);
        REQUIRE(b2.size() == h.betti.size());
        for (std::size_t d = 0; d < b2.size(); ++d) {
            long long even_here = 0, even_below = 0;
            for (const Int& t : h.torsion[d])
                if (t % 2 == 0) ++even_here;
            if (d > 0)
                for (const Int& t : h.torsion[d - 1])
                    if (t % 2 == 0) ++even_below;
            CHECK(b2[d] == h.betti[d] + even_here + even_below);
        }
    }
}

TEST_CASE("both homotopy models of the complement have the same homology") {
    for (const auto& [name, x, a] : corpus_pairs()) {
        if (x.simplex_count() > 60) continue;
        INFO(name);
        HomologyProfile ha = homology_profile(simplicial_difference(x, a));
        HomologyProfile hb = homology_profile(
            complement_model(barycentric_subdivision(x), barycentric_subdivision(a)).complex);
        CHECK(ha.betti == hb.betti);
        CHECK(ha.torsion == hb.torsion);
    }
}
