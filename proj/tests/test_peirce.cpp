#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dualext/dual_extension.hpp"
#include "dualext/fixtures.hpp"
#include "dualext/peirce.hpp"
#include "dualext/spaces.hpp"

using namespace dualext;

namespace {

Element vertex_complement(const FiniteDimAlgebra& alg, const std::string& v) {
    return alg.unit - alg.basis_element(alg.vertex_idempotents.at(v));
}

}  // namespace

TEST_CASE("Peirce blocks of the first example") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    CHECK(v.A.dim() == 5);
    CHECK(v.M.dim() == 2);
    CHECK(v.N.dim() == 2);
    CHECK(v.B.dim() == 2);
    CHECK(check_block_closure(v));

    CHECK(v.A.contains(alg.from_label("beta").coeffs));
    CHECK(v.M.contains(alg.from_label("alpha").coeffs));
    CHECK(v.M.contains(alg.from_label("beta*.alpha").coeffs));
    CHECK(v.N.contains(alg.from_label("alpha*").coeffs));
    CHECK(v.B.contains(alg.from_label("alpha*.alpha").coeffs));
}

TEST_CASE("annihilator witnesses of the first example") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));

    Subspace m_left = bimodule_annihilator(v, 'M', BimoduleSide::Left);
    CHECK(m_left.contains(alg.from_label("beta").coeffs));
    Subspace m_right = bimodule_annihilator(v, 'M', BimoduleSide::Right);
    CHECK(m_right.contains(alg.from_label("alpha*.alpha").coeffs));
    Subspace n_left = bimodule_annihilator(v, 'N', BimoduleSide::Left);
    CHECK(n_left.contains(alg.from_label("alpha*.alpha").coeffs));
    Subspace n_right = bimodule_annihilator(v, 'N', BimoduleSide::Right);
    CHECK(n_right.contains(alg.from_label("beta*.beta").coeffs));
}

TEST_CASE("Peirce blocks and faithfulness in the second example") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_3));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    CHECK(v.A.dim() == 5);
    CHECK(v.M.dim() == 5);
    CHECK(v.N.dim() == 5);
    CHECK(v.B.dim() == 6);

    // M is faithful as a left A-module but not as a right B-module
    CHECK(bimodule_annihilator(v, 'M', BimoduleSide::Left).dim() == 0);
    Subspace m_right = bimodule_annihilator(v, 'M', BimoduleSide::Right);
    CHECK(m_right.dim() > 0);
    CHECK(m_right.contains(alg.from_label("alpha*.beta*.beta.alpha").coeffs));
    // N is faithful as a right A-module but not as a left B-module
    CHECK(bimodule_annihilator(v, 'N', BimoduleSide::Right).dim() == 0);
    CHECK(bimodule_annihilator(v, 'N', BimoduleSide::Left).dim() > 0);
}

TEST_CASE("Peirce view at the unit is trivial") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::a2));
    PeirceView v = peirce_decompose(dx.algebra, dx.algebra.unit);
    CHECK(v.A.dim() == static_cast<int>(dx.algebra.dim));
    CHECK(v.M.dim() == 0);
    CHECK(v.N.dim() == 0);
    CHECK(v.B.dim() == 0);
}

TEST_CASE("peirce_decompose rejects non-idempotents") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::a2));
    CHECK_THROWS(peirce_decompose(dx.algebra, dx.algebra.from_label("alpha")));
}

TEST_CASE("pairing images") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    CHECK(pairing_image(v, PairingSide::MN).dim() == 0);
    Subspace nm = pairing_image(v, PairingSide::NM);
    CHECK(nm.dim() > 0);
    CHECK(nm.contains(alg.from_label("alpha*.alpha").coeffs));

    DualExtensionAlgebra ex = build_one_point_extension(parse_quiver(fixtures::ex2_2));
    PeirceView ev = peirce_decompose(ex.algebra, vertex_complement(ex.algebra, "1"));
    CHECK(pairing_image(ev, PairingSide::MN).dim() == 0);
    CHECK(pairing_image(ev, PairingSide::NM).dim() == 0);
}

TEST_CASE("extract and reassemble round-trips every Lie derivation") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex4_9));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    MapSpace lie = lie_derivation_space(alg);
    for (const auto& f : lie.basis) {
        BlockMapData d = extract_block_data(v, f);
        CHECK(reassemble_block_form(v, d) == f);
        CHECK(verify_lie_block_conditions(v, d).all());
    }
}

TEST_CASE("derivations satisfy the diagonal block conditions") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    for (const auto& f : derivation_space(alg).basis) {
        BlockMapData d = extract_block_data(v, f);
        DerBlockReport rep = verify_der_block_conditions(v, d);
        CHECK(rep.all());
    }
}

TEST_CASE("the identity map fails the Lie block conditions") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    LinearMap id(alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) id.at(i, i) = 1;
    REQUIRE_FALSE(is_lie_derivation(alg, id));
    BlockMapData d = extract_block_data(v, id);
    CHECK_FALSE(verify_lie_block_conditions(v, d).all());
}

TEST_CASE("a map outside the block form is rejected during extraction") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    LinearMap f(alg.dim);
    f.at(alg.index_of("e_2"), alg.index_of("alpha")) = 1;  // sends M into A freely
    CHECK_THROWS_AS(extract_block_data(v, f), AlgebraError);
}

TEST_CASE("standardizing maps exist for every Lie derivation") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    for (const auto& f : lie_derivation_space(alg).basis) {
        BlockMapData d = extract_block_data(v, f);
        auto maps = find_standardizing_maps(v, d);
        CHECK(maps.has_value());
    }
}

TEST_CASE("defect symmetry and identities") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    for (const auto& f : lie_derivation_space(alg).basis) {
        BlockMapData d = extract_block_data(v, f);
        GDefectReport rep = g_defect(v, d.delta1, d.mu1);
        CHECK(rep.symmetric);
        CHECK(rep.identity_m);
        CHECK(rep.identity_n);
    }
}

TEST_CASE("square-zero cycles at a source keep central images") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    MapSpace lie = lie_derivation_space(dx.algebra);
    for (const auto& f : lie.basis) {
        CycleCentralityReport rep = source_cycle_space_check(dx, "1", f);
        CHECK(rep.all_central);
        CHECK(std::find(rep.cycle_labels.begin(), rep.cycle_labels.end(), "alpha*.alpha") !=
              rep.cycle_labels.end());
    }
}

TEST_CASE("block center matches the center restricted to the block") {
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex2_2));
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, vertex_complement(alg, "1"));
    Subspace za = block_center(v, v.A, v.A_basis);
    // e and beta*.beta commute with all of A
    CHECK(za.contains(v.e.coeffs));
    CHECK(za.contains(alg.from_label("beta*.beta").coeffs));
    CHECK_FALSE(za.contains(alg.from_label("beta").coeffs));
}
