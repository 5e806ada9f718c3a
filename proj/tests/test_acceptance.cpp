// Acceptance gate: one pass/fail line per criterion, exit status 0 iff all
// criteria pass.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "dualext/dual_extension.hpp"
#include "dualext/fixtures.hpp"
#include "dualext/json_io.hpp"
#include "dualext/peirce.hpp"
#include "dualext/random_quiver.hpp"
#include "dualext/spaces.hpp"
#include "oracles.hpp"

using namespace dualext;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    std::ostringstream detail;
    bool ok = true;

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }

    void finish() {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name;
        if (!ok) std::cout << "  [" << detail.str() << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Element source_complement(const FiniteDimAlgebra& alg, const Quiver& q) {
    return alg.unit - alg.basis_element(alg.vertex_idempotents.at(source_vertices(q).front()));
}

struct CorpusEntry {
    std::string name;
    Quiver quiver;
    DualExtensionAlgebra dual;
    DualExtensionAlgebra onepoint;  // dim 0 when the quiver has a single vertex
    MapSpace der, lie, cann;
};

std::vector<CorpusEntry> the_corpus;
double corpus_seconds = 0;

void build_corpus() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, Quiver>> inputs = {
        {"a2", parse_quiver(fixtures::a2)},
        {"ex2_2", parse_quiver(fixtures::ex2_2)},
        {"ex2_3", parse_quiver(fixtures::ex2_3)},
        {"ex4_9", parse_quiver(fixtures::ex4_9)},
    };
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        inputs.emplace_back("random-" + std::to_string(seed), random_acyclic_quiver(seed));
    for (auto& [name, q] : inputs) {
        CorpusEntry e;
        e.name = name;
        e.quiver = q;
        e.dual = build_dual_extension(q);
        if (q.vertices.size() >= 2) e.onepoint = build_one_point_extension(q);
        e.der = derivation_space(e.dual.algebra);
        e.lie = lie_derivation_space(e.dual.algebra);
        e.cann = central_annihilating_maps(e.dual.algebra);
        the_corpus.push_back(std::move(e));
    }
    corpus_seconds = seconds_since(t0);
}

void criterion_1() {
    Criterion c("1 first example: dimension, basis, block dims, annihilator witnesses");
    auto t0 = std::chrono::steady_clock::now();
    Quiver q = parse_quiver(fixtures::ex2_2);
    DualExtensionAlgebra dx = build_dual_extension(q);
    const FiniteDimAlgebra& alg = dx.algebra;
    c.require(alg.dim == 11, "dim != 11");
    std::set<std::string> got(alg.labels.begin(), alg.labels.end());
    std::set<std::string> want = {"e_1",   "e_2",   "e_3",          "alpha",       "beta",
                                  "alpha*", "beta*", "alpha*.alpha", "alpha*.beta",
                                  "beta*.alpha", "beta*.beta"};
    c.require(got == want, "basis labels differ");
    PeirceView v = peirce_decompose(alg, source_complement(alg, q));
    c.require(v.A.dim() == 5 && v.M.dim() == 2 && v.N.dim() == 2 && v.B.dim() == 2,
              "block dims != (5,2,2,2)");
    c.require(bimodule_annihilator(v, 'M', BimoduleSide::Left)
                  .contains(alg.from_label("beta").coeffs),
              "beta not in left annihilator of M");
    c.require(bimodule_annihilator(v, 'M', BimoduleSide::Right)
                  .contains(alg.from_label("alpha*.alpha").coeffs),
              "alpha*.alpha not in right annihilator of M");
    c.require(bimodule_annihilator(v, 'N', BimoduleSide::Left)
                  .contains(alg.from_label("alpha*.alpha").coeffs),
              "alpha*.alpha not in left annihilator of N");
    c.require(bimodule_annihilator(v, 'N', BimoduleSide::Right)
                  .contains(alg.from_label("beta*.beta").coeffs),
              "beta*.beta not in right annihilator of N");
    c.require(seconds_since(t0) < 1.0, "slower than 1 s");
    c.finish();
}

void criterion_2() {
    Criterion c("2 second example: block dims and faithfulness");
    auto t0 = std::chrono::steady_clock::now();
    Quiver q = parse_quiver(fixtures::ex2_3);
    DualExtensionAlgebra dx = build_dual_extension(q);
    const FiniteDimAlgebra& alg = dx.algebra;
    PeirceView v = peirce_decompose(alg, source_complement(alg, q));
    c.require(v.A.dim() == 5 && v.M.dim() == 5 && v.N.dim() == 5 && v.B.dim() == 6,
              "block dims != (5,5,5,6)");
    c.require(bimodule_annihilator(v, 'M', BimoduleSide::Left).dim() == 0,
              "M not faithful as left module");
    Subspace m_right = bimodule_annihilator(v, 'M', BimoduleSide::Right);
    c.require(m_right.dim() > 0 &&
                  m_right.contains(alg.from_label("alpha*.beta*.beta.alpha").coeffs),
              "right annihilator of M misses its witness");
    c.require(bimodule_annihilator(v, 'N', BimoduleSide::Right).dim() == 0,
              "N not faithful as right module");
    c.require(bimodule_annihilator(v, 'N', BimoduleSide::Left).dim() > 0,
              "N unexpectedly faithful as left module");
    c.require(seconds_since(t0) < 5.0, "slower than 5 s");
    c.finish();
}

void criterion_3() {
    Criterion c("3 pairing law across the corpus");
    for (const auto& e : the_corpus) {
        if (e.quiver.vertices.size() < 2) continue;
        PeirceView v = peirce_decompose(e.dual.algebra,
                                        source_complement(e.dual.algebra, e.quiver));
        c.require(pairing_image(v, PairingSide::MN).dim() == 0, e.name + ": MN nonzero");
        if (!v.M_basis.empty())
            c.require(pairing_image(v, PairingSide::NM).dim() > 0, e.name + ": NM zero");
        PeirceView ev = peirce_decompose(e.onepoint.algebra,
                                         source_complement(e.onepoint.algebra, e.quiver));
        c.require(pairing_image(ev, PairingSide::MN).dim() == 0 &&
                      pairing_image(ev, PairingSide::NM).dim() == 0,
                  e.name + ": one-point pairing nonzero");
    }
    c.finish();
}

void criterion_4() {
    Criterion c("4 dimension split, zero intersection, decomposability (corpus)");
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : the_corpus) {
        c.require(e.lie.dim() == e.der.dim() + e.cann.dim(), e.name + ": dim split");
        c.require(Subspace::intersection_dim(e.der.span, e.cann.span) == 0,
                  e.name + ": nonzero intersection");
        for (const auto& f : e.lie.basis) {
            StandardDecomposition sd = decompose_standard(e.dual.algebra, f, e.der, e.cann);
            c.require(sd.unique && sd.derivation_part + sd.central_part == f,
                      e.name + ": decomposition failed");
            if (!c.ok) break;
        }
    }
    c.require(corpus_seconds + seconds_since(t0) < 60.0, "corpus run slower than 60 s");
    c.finish();
}

void criterion_5() {
    Criterion c("5 derivations with central image vanish (corpus)");
    for (const auto& e : the_corpus) {
        c.require(central_image_derivations(e.dual.algebra).dim() == 0, e.name + ": dual");
        if (e.quiver.vertices.size() >= 2)
            c.require(central_image_derivations(e.onepoint.algebra).dim() == 0,
                      e.name + ": one-point");
    }
    c.finish();
}

void criterion_6() {
    Criterion c("6 center inside span of 1 and square-zero cycles (corpus)");
    for (const auto& e : the_corpus) {
        CenterFormReport rep = verify_center_form(e.dual);
        if (rep.skipped) continue;
        c.require(rep.inclusion, e.name + ": " + rep.status);
    }
    c.finish();
}

void criterion_7() {
    Criterion c("7 vertex idempotents generate everything (corpus)");
    for (const auto& e : the_corpus) {
        auto gens = [](const FiniteDimAlgebra& alg) {
            std::vector<Element> out;
            for (const auto& [v, idx] : alg.vertex_idempotents) {
                (void)v;
                out.push_back(alg.basis_element(idx));
            }
            return out;
        };
        c.require(w_lower_bound(e.dual.algebra, gens(e.dual.algebra)).dim() ==
                      static_cast<int>(e.dual.algebra.dim),
                  e.name + ": dual");
        if (e.quiver.vertices.size() >= 2)
            c.require(w_lower_bound(e.onepoint.algebra, gens(e.onepoint.algebra)).dim() ==
                          static_cast<int>(e.onepoint.algebra.dim),
                      e.name + ": one-point");
    }
    c.finish();
}

void criterion_8() {
    Criterion c("8 decomposition of the published map");
    DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex4_9));
    const FiniteDimAlgebra& alg = dx.algebra;
    LinearMap keep = fixtures::ex4_9_theta(alg, 1, 2, 3, false);
    LinearMap star = fixtures::ex4_9_theta(alg, 1, 2, 3, true);
    bool keep_lie = is_lie_derivation(alg, keep);
    bool star_lie = is_lie_derivation(alg, star);
    c.require(keep_lie != star_lie, "not exactly one variant is a Lie derivation");
    const LinearMap& good0 = keep_lie ? keep : star;
    c.require(!is_derivation(alg, good0), "the Lie variant is a derivation");
    for (auto [k1, k2, k3] : {std::tuple<int, int, int>{0, 0, 0}, {1, 2, 3}}) {
        LinearMap theta = fixtures::ex4_9_theta(alg, k1, k2, k3, !keep_lie);
        StandardDecomposition sd = decompose_standard(alg, theta);
        c.require(sd.unique, "not unique");
        LinearMap want = fixtures::ex4_9_delta(alg, k1, k2, k3);
        for (const char* l : {"e_1", "e_2", "e_3"})
            c.require(sd.central_part.column(alg.index_of(l)) ==
                          want.column(alg.index_of(l)),
                      std::string("Delta differs on ") + l);
    }
    c.finish();
}

void criterion_9() {
    Criterion c("9 block-form suite");
    for (const auto& e : the_corpus) {
        if (e.quiver.vertices.size() < 2) continue;
        const FiniteDimAlgebra& alg = e.dual.algebra;
        PeirceView v = peirce_decompose(alg, source_complement(alg, e.quiver));
        for (const auto& f : e.lie.basis) {
            BlockMapData d = extract_block_data(v, f);
            c.require(verify_lie_block_conditions(v, d).all(),
                      e.name + ": Lie block condition failed");
            bool feasible = find_standardizing_maps(v, d).has_value();
            bool decomposes = true;
            try {
                decompose_standard(alg, f, e.der, e.cann);
            } catch (const DecompositionError&) {
                decomposes = false;
            }
            c.require(feasible == decomposes, e.name + ": feasibility disagreement");
            c.require(g_defect(v, d.delta1, d.mu1).all(), e.name + ": defect identity failed");
            if (!c.ok) break;
        }
        for (const auto& f : e.der.basis) {
            BlockMapData d = extract_block_data(v, f);
            c.require(verify_der_block_conditions(v, d).all(),
                      e.name + ": derivation block condition failed");
            if (!c.ok) break;
        }
        if (!c.ok) break;
    }
    c.finish();
}

void criterion_10() {
    Criterion c("10 property suite");
    for (const auto& e : the_corpus) {
        c.require(e.dual.algebra.check_associativity(), e.name + ": associativity");
        for (const auto& f : e.der.basis)
            c.require(e.lie.contains(f), e.name + ": derivation outside Lie space");
        for (const auto& f : e.lie.basis) {
            StandardDecomposition sd = decompose_standard(e.dual.algebra, f, e.der, e.cann);
            for (std::size_t i = 0; i < e.dual.algebra.dim; ++i)
                if (!e.dual.algebra.basis[i].trivial())
                    c.require(sd.central_part.column(i).is_zero(),
                              e.name + ": Delta nonzero on a nontrivial path");
            for (const auto& s : source_vertices(e.quiver))
                c.require(source_cycle_space_check(e.dual, s, f).all_central,
                          e.name + ": cycle centrality");
            if (!c.ok) break;
        }
        if (!c.ok) break;
    }

    // oracle equivalence of the two derivation systems
    {
        DualExtensionAlgebra dx = build_dual_extension(parse_quiver(fixtures::ex4_9));
        MapSpace der = derivation_space(dx.algebra);
        oracles::DenseSolver all = oracles::allpairs_derivation_system(dx.algebra);
        oracles::DenseSolver gen = oracles::generator_derivation_system(dx.algebra);
        c.require(der.dim() == all.nullity() && der.dim() == gen.nullity(),
                  "oracle dimension mismatch");
        for (const auto& v : gen.nullspace())
            c.require(der.span.contains(v), "generator oracle solution outside space");
    }

    // deterministic JSON: two independent builds serialize identically
    {
        json a = dual_extension_to_json(build_dual_extension(parse_quiver(fixtures::ex2_2)));
        json b = dual_extension_to_json(build_dual_extension(parse_quiver(fixtures::ex2_2)));
        c.require(a.dump() == b.dump(), "JSON not byte-identical across runs");
    }
    c.finish();
}

}  // namespace

int main() {
    build_corpus();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
