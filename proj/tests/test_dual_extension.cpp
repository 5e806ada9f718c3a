#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dualext/dual_extension.hpp"
#include "dualext/fixtures.hpp"
#include "dualext/random_quiver.hpp"

using namespace dualext;

TEST_CASE("star of a path reverses and stars every arrow") {
    Path p;
    p.arrows = {"alpha", "beta"};  // label beta.alpha
    Path s = star_path(p);
    CHECK(s.arrows == std::vector<std::string>{"beta*", "alpha*"});
    CHECK(s.label() == "alpha*.beta*");
}

TEST_CASE("dual extension of a single vertex") {
    Quiver q = parse_quiver("quiver { vertices: 1; }");
    DualExtensionAlgebra dx = build_dual_extension(q);
    CHECK(dx.algebra.dim == 1);
    CHECK(dx.algebra.labels == std::vector<std::string>{"e_1"});
}

TEST_CASE("dual extension dimensions of the bundled examples") {
    CHECK(build_dual_extension(parse_quiver(fixtures::a2)).algebra.dim == 5);
    CHECK(build_dual_extension(parse_quiver(fixtures::ex2_2)).algebra.dim == 11);
    CHECK(build_dual_extension(parse_quiver(fixtures::ex2_3)).algebra.dim == 21);
    CHECK(build_dual_extension(parse_quiver(fixtures::ex4_9)).algebra.dim == 9);
}

TEST_CASE("exact basis of the first example") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    std::set<std::string> got(dx.algebra.labels.begin(), dx.algebra.labels.end());
    std::set<std::string> want = {"e_1",   "e_2",   "e_3",         "alpha",       "beta",
                                  "alpha*", "beta*", "alpha*.alpha", "alpha*.beta",
                                  "beta*.alpha", "beta*.beta"};
    CHECK(got == want);
}

TEST_CASE("defining relations hold in the product") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    // alpha and beta share target 2, so every unstarred-after-starred product dies
    for (const char* a : {"alpha", "beta"})
        for (const char* b : {"alpha*", "beta*"})
            CHECK(alg.multiply(alg.from_label(a), alg.from_label(b)).is_zero());
    // starred-after-unstarred products with matching sources survive
    CHECK(alg.multiply(alg.from_label("alpha*"), alg.from_label("alpha")) ==
          alg.from_label("alpha*.alpha"));
    CHECK(alg.multiply(alg.from_label("beta*"), alg.from_label("alpha")) ==
          alg.from_label("beta*.alpha"));
}

TEST_CASE("source relations and their stars both hold") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex4_9));
    const FiniteDimAlgebra& alg = dx.algebra;
    CHECK(alg.multiply(alg.from_label("beta"), alg.from_label("alpha")).is_zero());
    CHECK(alg.multiply(alg.from_label("alpha*"), alg.from_label("beta*")).is_zero());
    CHECK(alg.labels == std::vector<std::string>{"e_1", "e_2", "e_3", "alpha", "alpha*",
                                                 "beta", "beta*", "alpha*.alpha",
                                                 "beta*.beta"});
}

TEST_CASE("basis shape never puts a starred arrow before an unstarred one") {
    for (const char* src : {fixtures::ex2_2, fixtures::ex2_3, fixtures::ex4_9}) {
        DualExtensionAlgebra dx = build_dual_extension(parse_quiver(src));
        for (const auto& p : dx.algebra.basis) {
            bool seen_star = false;
            for (const auto& a : p.arrows) {
                if (a.back() == '*')
                    seen_star = true;
                else
                    CHECK_FALSE(seen_star);
            }
        }
    }
}

TEST_CASE("shape splits each basis label into starred and unstarred parts") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    auto shape = dx.shape();
    REQUIRE(shape.size() == dx.algebra.dim);
    int i = dx.algebra.index_of("alpha*.beta");
    CHECK(shape[i].first == "alpha*");
    CHECK(shape[i].second == "beta");
    int j = dx.algebra.index_of("alpha");
    CHECK(shape[j].first == "");
    CHECK(shape[j].second == "alpha");
}

TEST_CASE("dual extension dimension formula on random quivers") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        Quiver q = random_acyclic_quiver(seed);
        FiniteDimAlgebra lam = build_path_algebra(q, q.relations, longest_path_length(q));
        std::map<std::string, std::size_t> ending;
        for (const auto& p : lam.basis) ending[q.path_target(p)]++;
        std::size_t want = 0;
        for (const auto& [v, c] : ending) {
            (void)v;
            want += c * c;
        }
        CHECK(build_dual_extension(q).algebra.dim == want);
    }
}

TEST_CASE("one-point extension dimension is twice the base minus the vertex count") {
    for (const char* src : {fixtures::a2, fixtures::ex2_2, fixtures::ex2_3, fixtures::ex4_9}) {
        Quiver q = parse_quiver(src);
        FiniteDimAlgebra lam = build_path_algebra(q, q.relations, longest_path_length(q));
        DualExtensionAlgebra ex = build_one_point_extension(q);
        CHECK(ex.algebra.dim == 2 * lam.dim - q.vertices.size());
        CHECK(ex.one_point);
    }
}

TEST_CASE("one-point extension of A2") {
    DualExtensionAlgebra ex = build_one_point_extension(parse_quiver(fixtures::a2));
    const FiniteDimAlgebra& alg = ex.algebra;
    CHECK(alg.dim == 4);
    CHECK(alg.labels == std::vector<std::string>{"e_1", "e_2", "alpha", "alpha*"});
    // both mixed products vanish
    CHECK(alg.multiply(alg.from_label("alpha"), alg.from_label("alpha*")).is_zero());
    CHECK(alg.multiply(alg.from_label("alpha*"), alg.from_label("alpha")).is_zero());
}

TEST_CASE("one-point basis never mixes starred and unstarred arrows") {
    DualExtensionAlgebra ex = build_one_point_extension(parse_quiver(fixtures::ex2_3));
    for (const auto& p : ex.algebra.basis) {
        bool star = false, plain = false;
        for (const auto& a : p.arrows) (a.back() == '*' ? star : plain) = true;
        CHECK_FALSE((star && plain));
    }
}

TEST_CASE("builders reject bad input") {
    Quiver cyc = parse_quiver("quiver { vertices: 1, 2; arrows: a: 1 -> 2; b: 2 -> 1; }");
    CHECK_THROWS(build_dual_extension(cyc));
    CHECK_THROWS(build_one_point_extension(cyc));
    Quiver one = parse_quiver("quiver { vertices: 1; }");
    CHECK_THROWS(build_one_point_extension(one));
}
