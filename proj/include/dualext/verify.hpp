#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "dualext/dual_extension.hpp"
#include "dualext/peirce.hpp"
#include "dualext/spaces.hpp"

namespace dualext {

struct CheckRecord {
    std::string name;
    std::string anchor;  // which structural statement this record verifies
    bool pass = false;
    std::string detail;
    double millis = 0;
};

struct ReportBundle {
    std::vector<CheckRecord> records;

    bool all_pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        return true;
    }
};

namespace detail {

inline std::pair<bool, std::string> check_result(bool ok, std::string detail = "") {
    return {ok, std::move(detail)};
}

inline void run_check(ReportBundle& bundle, const std::string& name,
                      const std::string& anchor,
                      const std::function<std::pair<bool, std::string>()>& body) {
    CheckRecord rec;
    rec.name = name;
    rec.anchor = anchor;
    auto t0 = std::chrono::steady_clock::now();
    try {
        auto [ok, detail_msg] = body();
        rec.pass = ok;
        rec.detail = detail_msg;
    } catch (const std::exception& ex) {
        rec.pass = false;
        rec.detail = std::string("exception: ") + ex.what();
    }
    rec.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    bundle.records.push_back(std::move(rec));
}

}  // namespace detail

/// The full structure-theorem suite for one source quiver: builds the dual
/// extension (and the one-point variant when possible) and checks every
/// statement the library certifies.
inline ReportBundle verify_quiver(const Quiver& q) {
    using detail::run_check;
    using detail::check_result;
    ReportBundle bundle;

    DualExtensionAlgebra dx = build_dual_extension(q);
    const FiniteDimAlgebra& alg = dx.algebra;

    run_check(bundle, "associativity", "structure-constant self-test", [&] {
        return check_result(alg.check_associativity(), "all basis triples");
    });

    MapSpace der = derivation_space(alg);
    MapSpace lie = lie_derivation_space(alg);
    MapSpace cann = central_annihilating_maps(alg);

    run_check(bundle, "derivations are Lie derivations", "inclusion of spaces", [&] {
        for (const auto& f : der.basis)
            if (!lie.contains(f)) return check_result(false, "inclusion violated");
        return check_result(true, "dim Der = " + std::to_string(der.dim()));
    });

    run_check(bundle, "standard-form dimension split", "Lie space = derivations + central maps",
              [&] {
                  bool ok = lie.dim() == der.dim() + cann.dim();
                  std::string d = "Lie " + std::to_string(lie.dim()) + " = Der " +
                                  std::to_string(der.dim()) + " + CentralAnn " +
                                  std::to_string(cann.dim());
                  return check_result(ok, d);
              });

    run_check(bundle, "decomposition uniqueness", "zero intersection of the two summand spaces",
              [&] {
                  int d = Subspace::intersection_dim(der.span, cann.span);
                  return check_result(d == 0, "intersection dim " + std::to_string(d));
              });

    run_check(bundle, "every Lie derivation decomposes", "standard decomposition, zero residual",
              [&] {
                  for (const auto& f : lie.basis) {
                      StandardDecomposition sd = decompose_standard(alg, f, der, cann);
                      if (!(sd.derivation_part + sd.central_part == f))
                          return check_result(false, "nonzero residual");
                      if (!sd.unique) return check_result(false, "non-unique");
                      if (!is_derivation(alg, sd.derivation_part))
                          return check_result(false, "D part not a derivation");
                  }
                  return check_result(true, std::to_string(lie.dim()) + " basis elements");
              });

    run_check(bundle, "central-valued part vanishes on nontrivial paths",
              "Lie derivation agrees with its derivation part on paths", [&] {
                  for (const auto& f : lie.basis) {
                      StandardDecomposition sd = decompose_standard(alg, f, der, cann);
                      for (std::size_t i = 0; i < alg.dim; ++i) {
                          if (alg.basis[i].trivial()) continue;
                          if (!sd.central_part.column(i).is_zero())
                              return check_result(false,
                                                    "Delta nonzero on " + alg.labels[i]);
                      }
                  }
                  return check_result(true, "");
              });

    run_check(bundle, "derivations with central image vanish",
              "no nonzero derivation maps into the center", [&] {
                  int d = central_image_derivations(alg).dim();
                  return check_result(d == 0, "space dim " + std::to_string(d));
              });

    run_check(bundle, "center shape", "center inside span of 1 and square-zero cycles", [&] {
        CenterFormReport rep = verify_center_form(dx);
        if (rep.skipped) return check_result(true, rep.status);
        return check_result(rep.inclusion, rep.status + ", center dim " +
                                                 std::to_string(rep.center_dim));
    });

    run_check(bundle, "idempotent-commutator closure", "generated subalgebra is everything", [&] {
        std::vector<Element> idems;
        for (const auto& [v, idx] : alg.vertex_idempotents) {
            (void)v;
            idems.push_back(alg.basis_element(idx));
        }
        Subspace w = w_lower_bound(alg, idems);
        return check_result(w.dim() == static_cast<int>(alg.dim),
                              "dim " + std::to_string(w.dim()) + " of " +
                                  std::to_string(alg.dim));
    });

    run_check(bundle, "source-cycle centrality", "images of square-zero source cycles are central",
              [&] {
                  for (const auto& s : source_vertices(q))
                      for (const auto& f : lie.basis) {
                          auto rep = source_cycle_space_check(dx, s, f);
                          if (!rep.all_central)
                              return check_result(false, "failure at source " + s);
                      }
                  return check_result(true, "");
              });

    // Block-form battery at the complement of the first source vertex.
    if (q.vertices.size() >= 2) {
        const std::string src = source_vertices(q).front();
        Element e = alg.unit - alg.basis_element(alg.vertex_idempotents.at(src));
        PeirceView view = peirce_decompose(alg, e);

        run_check(bundle, "Peirce block closure", "block products land in predicted blocks",
                  [&] { return check_result(check_block_closure(view), ""); });

        run_check(bundle, "pairing law", "M*N vanishes, N*M does not when M is nonzero", [&] {
            Subspace mn = pairing_image(view, PairingSide::MN);
            Subspace nm = pairing_image(view, PairingSide::NM);
            bool ok = mn.dim() == 0 && (view.M_basis.empty() || nm.dim() > 0);
            return check_result(ok, "MN dim " + std::to_string(mn.dim()) + ", NM dim " +
                                          std::to_string(nm.dim()));
        });

        run_check(bundle, "Lie block conditions", "five block identities per Lie derivation",
                  [&] {
                      for (const auto& f : lie.basis) {
                          BlockMapData data = extract_block_data(view, f);
                          if (!(reassemble_block_form(view, data) == f))
                              return check_result(false, "reassembly mismatch");
                          if (!verify_lie_block_conditions(view, data).all())
                              return check_result(false, "a block condition failed");
                      }
                      return check_result(true, "");
                  });

        run_check(bundle, "derivation block conditions", "four block identities per derivation",
                  [&] {
                      for (const auto& f : der.basis) {
                          BlockMapData data = extract_block_data(view, f);
                          if (!verify_der_block_conditions(view, data).all())
                              return check_result(false, "a block condition failed");
                      }
                      return check_result(true, "");
                  });

        run_check(bundle, "block standardization feasibility",
                  "block-level feasibility matches global decomposability", [&] {
                      for (const auto& f : lie.basis) {
                          BlockMapData data = extract_block_data(view, f);
                          bool feasible = find_standardizing_maps(view, data).has_value();
                          bool decomposes = true;
                          try {
                              decompose_standard(alg, f, der, cann);
                          } catch (const DecompositionError&) {
                              decomposes = false;
                          }
                          if (feasible != decomposes)
                              return check_result(false, "feasibility disagreement");
                      }
                      return check_result(true, "");
                  });

        run_check(bundle, "derivation-defect symmetry and identities",
                  "G symmetric, bimodule identities hold", [&] {
                      for (const auto& f : lie.basis) {
                          BlockMapData data = extract_block_data(view, f);
                          if (!g_defect(view, data.delta1, data.mu1).all())
                              return check_result(false, "G identity failed");
                      }
                      return check_result(true, "");
                  });
    }

    // One-point variant battery.
    if (q.vertices.size() >= 2) {
        DualExtensionAlgebra ex = build_one_point_extension(q);
        const FiniteDimAlgebra& ealg = ex.algebra;
        MapSpace elie = lie_derivation_space(ealg);
        MapSpace eder = derivation_space(ealg);
        MapSpace ecann = central_annihilating_maps(ealg);

        run_check(bundle, "one-point: both pairings vanish", "zero bilinear pairings", [&] {
            const std::string src = source_vertices(q).front();
            Element e = ealg.unit - ealg.basis_element(ealg.vertex_idempotents.at(src));
            PeirceView view = peirce_decompose(ealg, e);
            bool ok = pairing_image(view, PairingSide::MN).dim() == 0 &&
                      pairing_image(view, PairingSide::NM).dim() == 0;
            return check_result(ok, "");
        });

        run_check(bundle, "one-point: standard form and uniqueness",
                  "every Lie derivation splits uniquely", [&] {
                      if (elie.dim() != eder.dim() + ecann.dim())
                          return check_result(false, "dimension split failed");
                      if (Subspace::intersection_dim(eder.span, ecann.span) != 0)
                          return check_result(false, "nonzero intersection");
                      for (const auto& f : elie.basis) {
                          StandardDecomposition sd = decompose_standard(ealg, f, eder, ecann);
                          if (!sd.unique || !(sd.derivation_part + sd.central_part == f))
                              return check_result(false, "decomposition failed");
                      }
                      return check_result(true, "");
                  });

        run_check(bundle, "one-point: generated subalgebra is everything",
                  "idempotent-commutator closure of the one-point extension", [&] {
                      std::vector<Element> idems;
                      for (const auto& [v, idx] : ealg.vertex_idempotents) {
                          (void)v;
                          idems.push_back(ealg.basis_element(idx));
                      }
                      Subspace w = w_lower_bound(ealg, idems);
                      return check_result(w.dim() == static_cast<int>(ealg.dim), "");
                  });

        run_check(bundle, "one-point: derivations with central image vanish",
                  "no nonzero central-valued derivation", [&] {
                      int d = central_image_derivations(ealg).dim();
                      return check_result(d == 0, "space dim " + std::to_string(d));
                  });
    }

    return bundle;
}

}  // namespace dualext
