#pragma once

#include <random>
#include <string>

#include "dualext/algebra.hpp"
#include "dualext/quiver.hpp"

namespace dualext {

/// Seeded random acyclic quiver: up to 5 vertices, up to 6 arrows, monomial
/// length-2 relations. Arrows respect a fixed topological order, so the
/// result is acyclic by construction. Candidates whose dual extension would
/// exceed `dim_cap` are skipped deterministically.
inline Quiver random_acyclic_quiver(std::uint64_t seed, std::size_t dim_cap = 24) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed * 1000003 + attempt);
        Quiver q;
        const std::size_t nv = 2 + rng() % 4;  // 2..5
        for (std::size_t i = 1; i <= nv; ++i) q.vertices.push_back("v" + std::to_string(i));
        const std::size_t na = 1 + rng() % 6;  // 1..6
        for (std::size_t k = 0; k < na; ++k) {
            std::size_t i = rng() % nv;
            std::size_t j = rng() % nv;
            if (i == j) continue;
            if (i > j) std::swap(i, j);  // arrows go forward in vertex order
            q.arrows.push_back({"a" + std::to_string(q.arrows.size() + 1),
                                q.vertices[i], q.vertices[j]});
        }
        if (q.arrows.empty()) continue;
        // monomial relations on some composable arrow pairs
        for (const auto& a : q.arrows)
            for (const auto& b : q.arrows) {
                if (a.target != b.source) continue;
                if (rng() % 3 != 0) continue;
                Relation r;
                Path p;
                p.arrows = {a.name, b.name};
                r.terms.emplace_back(Rat(1), p);
                q.relations.push_back(r);
            }
        q.validate();
        if (!validate_acyclic(q)) continue;

        // estimate dim D(Lambda) from Lambda path counts per end vertex
        try {
            FiniteDimAlgebra lam = build_path_algebra(q, q.relations, longest_path_length(q));
            std::map<std::string, std::size_t> ending;
            for (const auto& p : lam.basis) ending[q.path_target(p)]++;
            std::size_t dim = 0;
            for (const auto& [v, c] : ending) {
                (void)v;
                dim += c * c;
            }
            if (dim > dim_cap) continue;
        } catch (const AlgebraError&) {
            continue;
        }
        return q;
    }
}

}  // namespace dualext
