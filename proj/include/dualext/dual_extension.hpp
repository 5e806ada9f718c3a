#pragma once

#include <map>
#include <string>
#include <vector>

#include "dualext/algebra.hpp"
#include "dualext/quiver.hpp"

namespace dualext {

/// Reverse a path and star every arrow: (b.a)* = a*.b*. Trivial paths are
/// fixed points.
inline Path star_path(const Path& p) {
    Path out;
    out.base_vertex = p.base_vertex;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
        out.arrows.push_back(*it + "*");
    return out;
}

/// The dual extension D(Lambda) or its one-point variant E(Lambda), together
/// with its source quiver and the doubled quiver it lives on.
struct DualExtensionAlgebra {
    FiniteDimAlgebra algebra;
    Quiver source_quiver;
    Quiver doubled_quiver;
    std::map<std::string, std::string> star_map;  // arrow -> starred partner
    bool one_point = false;

    /// For each basis element, the (q*, p) factorization labels. For the
    /// one-point variant at most one of the two parts is nontrivial.
    std::vector<std::pair<std::string, std::string>> shape() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& b : algebra.basis) {
            Path unstarred, starred;
            unstarred.base_vertex = starred.base_vertex = b.base_vertex;
            for (const auto& a : b.arrows) {
                if (a.back() == '*')
                    starred.arrows.push_back(a);
                else
                    unstarred.arrows.push_back(a);
            }
            out.emplace_back(starred.trivial() ? "" : starred.label(),
                             unstarred.trivial() ? "" : unstarred.label());
        }
        return out;
    }
};

namespace detail {

/// Nonzero paths of Lambda itself (unstarred quotient representatives).
inline std::vector<Path> lambda_basis_paths(const Quiver& q) {
    FiniteDimAlgebra lam = build_path_algebra(q, q.relations, longest_path_length(q));
    return lam.basis;
}

inline DualExtensionAlgebra build_doubled(const Quiver& q, bool one_point) {
    if (!validate_acyclic(q))
        throw QuiverError("dual extension requires an acyclic quiver");
    if (one_point && q.vertices.size() < 2)
        throw QuiverError("one-point extension requires at least 2 vertices");

    DualExtensionAlgebra dx;
    dx.source_quiver = q;
    dx.doubled_quiver = double_quiver(q);
    dx.one_point = one_point;
    for (const auto& a : q.arrows) dx.star_map[a.name] = a.name + "*";

    std::vector<Relation> rels = q.relations;  // rho
    for (const auto& r : q.relations) {        // rho*, coefficients unchanged
        Relation s;
        for (const auto& [k, p] : r.terms) s.terms.emplace_back(k, star_path(p));
        rels.push_back(s);
    }
    // {alpha beta*}: an unstarred arrow composed after a starred one
    for (const auto& b : q.arrows) {
        for (const auto& a : q.arrows) {
            if (a.source != b.source) continue;  // e(b*) = s(b); need = s(a)
            Relation r;
            Path p;
            p.arrows = {b.name + "*", a.name};
            r.terms.emplace_back(Rat(1), p);
            rels.push_back(r);
        }
    }
    if (one_point) {
        // {alpha* beta}: a starred arrow composed after an unstarred one
        for (const auto& b : q.arrows) {
            for (const auto& a : q.arrows) {
                if (a.target != b.target) continue;  // e(b) = s(a*)
                Relation r;
                Path p;
                p.arrows = {b.name, a.name + "*"};
                r.terms.emplace_back(Rat(1), p);
                rels.push_back(r);
            }
        }
    }

    const std::size_t bound = 2 * longest_path_length(q);
    dx.algebra = build_path_algebra(dx.doubled_quiver, rels, std::max<std::size_t>(bound, 1));

    // Basis-shape invariant: every nonzero basis path is q*.p with p, q
    // unstarred paths (a starred tail never precedes an unstarred arrow).
    for (const auto& b : dx.algebra.basis) {
        bool seen_star = false;
        bool seen_plain = false;
        for (const auto& name : b.arrows) {
            const bool starred = name.back() == '*';
            if (seen_star && !starred)
                throw AlgebraError("basis shape violated: " + b.label());
            seen_star = seen_star || starred;
            seen_plain = seen_plain || !starred;
        }
        // in E(Lambda) the starred and unstarred worlds never mix
        if (one_point && seen_star && seen_plain)
            throw AlgebraError("one-point basis shape violated: " + b.label());
    }

    // Dimension identity for D(Lambda): sum over vertices of the squared
    // number of Lambda-basis paths ending there.
    std::vector<Path> lam = lambda_basis_paths(q);
    if (!one_point) {
        std::map<std::string, std::size_t> ending;
        for (const auto& p : lam) ending[q.path_target(p)]++;
        std::size_t expect = 0;
        for (const auto& [v, c] : ending) {
            (void)v;
            expect += c * c;
        }
        if (expect != dx.algebra.dim)
            throw AlgebraError("dual extension dimension check failed");
    } else {
        // purely starred plus purely unstarred paths, idempotents shared
        std::size_t expect = 2 * lam.size() - q.vertices.size();
        if (expect != dx.algebra.dim)
            throw AlgebraError("one-point extension dimension check failed");
    }
    return dx;
}

}  // namespace detail

inline DualExtensionAlgebra build_dual_extension(const Quiver& q) {
    return detail::build_doubled(q, false);
}

inline DualExtensionAlgebra build_one_point_extension(const Quiver& q) {
    return detail::build_doubled(q, true);
}

}  // namespace dualext
