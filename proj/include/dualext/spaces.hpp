#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualext/algebra.hpp"
#include "dualext/dual_extension.hpp"
#include "dualext/linalg.hpp"

namespace dualext {

/// Square matrix over the canonical basis; column c is the image of basis
/// element c.
struct LinearMap {
    std::size_t n = 0;
    std::vector<Rat> m;

    LinearMap() = default;
    explicit LinearMap(std::size_t dim) : n(dim), m(dim * dim) {}

    Rat& at(std::size_t r, std::size_t c) { return m[r * n + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return m[r * n + c]; }

    Element apply(const Element& x) const {
        Element out(n);
        for (std::size_t c = 0; c < n; ++c) {
            if (x.coeffs[c] == 0) continue;
            for (std::size_t r = 0; r < n; ++r)
                if (at(r, c) != 0) out.coeffs[r] += at(r, c) * x.coeffs[c];
        }
        return out;
    }

    Element column(std::size_t c) const {
        Element out(n);
        for (std::size_t r = 0; r < n; ++r) out.coeffs[r] = at(r, c);
        return out;
    }

    bool is_zero() const {
        for (const auto& v : m)
            if (v != 0) return false;
        return true;
    }

    /// Flattened column-major vector, the coordinate convention of every
    /// map-space system in this library.
    std::vector<Rat> flatten() const {
        std::vector<Rat> v(n * n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) v[c * n + r] = at(r, c);
        return v;
    }

    static LinearMap unflatten(std::size_t n, const std::vector<Rat>& v) {
        LinearMap out(n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) out.at(r, c) = v[c * n + r];
        return out;
    }

    friend LinearMap operator-(const LinearMap& a, const LinearMap& b) {
        LinearMap out(a.n);
        for (std::size_t i = 0; i < a.m.size(); ++i) out.m[i] = a.m[i] - b.m[i];
        return out;
    }
    friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
        LinearMap out(a.n);
        for (std::size_t i = 0; i < a.m.size(); ++i) out.m[i] = a.m[i] + b.m[i];
        return out;
    }
    bool operator==(const LinearMap& o) const { return n == o.n && m == o.m; }
};

/// A space of linear maps: nullspace basis plus the subspace it spans in the
/// flattened coordinates.
struct MapSpace {
    std::size_t map_dim = 0;
    std::vector<LinearMap> basis;
    Subspace span{0};

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const LinearMap& f) const { return span.contains(f.flatten()); }

    static MapSpace from_nullspace(std::size_t n, const std::vector<std::vector<Rat>>& vecs) {
        MapSpace s;
        s.map_dim = n;
        s.span = Subspace(static_cast<int>(n * n));
        for (const auto& v : vecs) {
            s.basis.push_back(LinearMap::unflatten(n, v));
            s.span.add(v);
        }
        return s;
    }
};

namespace detail {

inline int unknown(std::size_t n, std::size_t r, std::size_t c) {
    return static_cast<int>(c * n + r);
}

inline SparseRow row_from_map(const std::map<int, Rat>& acc) {
    SparseRow r;
    for (const auto& [c, v] : acc)
        if (v != 0) r.emplace_back(c, v);
    return r;
}

/// Center constraints as rows over dim unknowns: x b_j = b_j x for all j.
inline void add_commutation_rows(const FiniteDimAlgebra& alg, RowEchelon& ech,
                                 std::size_t col_offset = 0) {
    const std::size_t n = alg.dim;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::map<int, Rat>> eq(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Element& ij = alg.basis_product(i, j);
            const Element& ji = alg.basis_product(j, i);
            for (std::size_t t = 0; t < n; ++t) {
                Rat d = ij.coeffs[t] - ji.coeffs[t];
                if (d != 0) eq[t][static_cast<int>(col_offset + i)] += d;
            }
        }
        for (auto& e : eq) ech.insert(row_from_map(e));
    }
}

}  // namespace detail

/// Nullspace of the associative derivation law over all basis pairs.
inline MapSpace derivation_space(const FiniteDimAlgebra& alg) {
    const std::size_t n = alg.dim;
    RowEchelon ech(static_cast<int>(n * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::map<int, Rat>> eq(n);
            const Element& z = alg.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (z.coeffs[k] != 0)
                    for (std::size_t t = 0; t < n; ++t)
                        eq[t][detail::unknown(n, t, k)] += z.coeffs[k];
            for (std::size_t r = 0; r < n; ++r) {
                const Element& rj = alg.basis_product(r, j);
                for (std::size_t t = 0; t < n; ++t)
                    if (rj.coeffs[t] != 0)
                        eq[t][detail::unknown(n, r, i)] -= rj.coeffs[t];
                const Element& ir = alg.basis_product(i, r);
                for (std::size_t t = 0; t < n; ++t)
                    if (ir.coeffs[t] != 0)
                        eq[t][detail::unknown(n, r, j)] -= ir.coeffs[t];
            }
            for (auto& e : eq) ech.insert(detail::row_from_map(e));
        }
    }
    return MapSpace::from_nullspace(n, ech.nullspace());
}

/// Nullspace of the Lie derivation law over all basis pairs.
inline MapSpace lie_derivation_space(const FiniteDimAlgebra& alg) {
    const std::size_t n = alg.dim;
    auto bracket = [&](std::size_t i, std::size_t j) {
        return alg.basis_product(i, j) - alg.basis_product(j, i);
    };
    RowEchelon ech(static_cast<int>(n * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::map<int, Rat>> eq(n);
            const Element z = bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (z.coeffs[k] != 0)
                    for (std::size_t t = 0; t < n; ++t)
                        eq[t][detail::unknown(n, t, k)] += z.coeffs[k];
            for (std::size_t r = 0; r < n; ++r) {
                const Element rj = bracket(r, j);
                for (std::size_t t = 0; t < n; ++t)
                    if (rj.coeffs[t] != 0)
                        eq[t][detail::unknown(n, r, i)] -= rj.coeffs[t];
                const Element ir = bracket(i, r);
                for (std::size_t t = 0; t < n; ++t)
                    if (ir.coeffs[t] != 0)
                        eq[t][detail::unknown(n, r, j)] -= ir.coeffs[t];
            }
            for (auto& e : eq) ech.insert(detail::row_from_map(e));
        }
    }
    return MapSpace::from_nullspace(n, ech.nullspace());
}

/// Direct evaluation of the derivation law.
inline bool is_derivation(const FiniteDimAlgebra& alg, const LinearMap& f) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = 0; j < alg.dim; ++j) {
            Element lhs = f.apply(alg.basis_product(i, j));
            Element rhs = alg.multiply(f.column(i), alg.basis_element(j)) +
                          alg.multiply(alg.basis_element(i), f.column(j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

/// Direct evaluation of the Lie derivation law.
inline bool is_lie_derivation(const FiniteDimAlgebra& alg, const LinearMap& f) {
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = i + 1; j < alg.dim; ++j) {
            Element lhs = f.apply(alg.commutator(alg.basis_element(i), alg.basis_element(j)));
            Element rhs = alg.commutator(f.column(i), alg.basis_element(j)) +
                          alg.commutator(alg.basis_element(i), f.column(j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

/// Elements commuting with every basis element.
inline Subspace center(const FiniteDimAlgebra& alg) {
    RowEchelon ech(static_cast<int>(alg.dim));
    detail::add_commutation_rows(alg, ech);
    Subspace out(static_cast<int>(alg.dim));
    for (const auto& v : ech.nullspace()) out.add(v);
    return out;
}

/// Span of all basis commutators.
inline Subspace commutator_subspace(const FiniteDimAlgebra& alg) {
    Subspace out(static_cast<int>(alg.dim));
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t j = i + 1; j < alg.dim; ++j)
            out.add((alg.basis_product(i, j) - alg.basis_product(j, i)).coeffs);
    return out;
}

/// Maps with image in the center that kill the commutator subspace.
inline MapSpace central_annihilating_maps(const FiniteDimAlgebra& alg) {
    const std::size_t n = alg.dim;
    RowEchelon ech(static_cast<int>(n * n));
    // every column lies in the center
    for (std::size_t c = 0; c < n; ++c)
        detail::add_commutation_rows(alg, ech, c * n);
    // the commutator subspace is in the kernel
    for (const auto& v : commutator_subspace(alg).basis()) {
        for (std::size_t t = 0; t < n; ++t) {
            std::map<int, Rat> eq;
            for (std::size_t c = 0; c < n; ++c)
                if (v[c] != 0) eq[detail::unknown(n, t, c)] += v[c];
            ech.insert(detail::row_from_map(eq));
        }
    }
    return MapSpace::from_nullspace(n, ech.nullspace());
}

/// Derivations whose image lies in the center; zero on every dual extension.
inline MapSpace central_image_derivations(const FiniteDimAlgebra& alg) {
    const std::size_t n = alg.dim;
    // derivation system
    RowEchelon ech(static_cast<int>(n * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::map<int, Rat>> eq(n);
            const Element& z = alg.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (z.coeffs[k] != 0)
                    for (std::size_t t = 0; t < n; ++t)
                        eq[t][detail::unknown(n, t, k)] += z.coeffs[k];
            for (std::size_t r = 0; r < n; ++r) {
                const Element& rj = alg.basis_product(r, j);
                for (std::size_t t = 0; t < n; ++t)
                    if (rj.coeffs[t] != 0)
                        eq[t][detail::unknown(n, r, i)] -= rj.coeffs[t];
                const Element& ir = alg.basis_product(i, r);
                for (std::size_t t = 0; t < n; ++t)
                    if (ir.coeffs[t] != 0)
                        eq[t][detail::unknown(n, r, j)] -= ir.coeffs[t];
            }
            for (auto& e : eq) ech.insert(detail::row_from_map(e));
        }
    for (std::size_t c = 0; c < n; ++c)
        detail::add_commutation_rows(alg, ech, c * n);
    return MapSpace::from_nullspace(n, ech.nullspace());
}

struct StandardDecomposition {
    LinearMap derivation_part;
    LinearMap central_part;
    bool unique = false;
};

struct DecompositionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Split a Lie derivation as Theta = D + Delta with D a derivation and Delta
/// a central-valued map killing all commutators. Infeasibility is reported,
/// never silently repaired.
inline StandardDecomposition decompose_standard(const FiniteDimAlgebra& alg,
                                                const LinearMap& theta, const MapSpace& der,
                                                const MapSpace& cann) {
    if (!is_lie_derivation(alg, theta))
        throw DecompositionError("not a Lie derivation");
    const int d1 = der.dim();
    const int d2 = cann.dim();
    std::vector<std::vector<Rat>> cols;
    for (const auto& f : der.basis) cols.push_back(f.flatten());
    for (const auto& f : cann.basis) cols.push_back(f.flatten());
    std::vector<Rat> target = theta.flatten();
    std::vector<std::pair<SparseRow, Rat>> eqs;
    for (std::size_t r = 0; r < target.size(); ++r) {
        std::map<int, Rat> eq;
        for (int c = 0; c < d1 + d2; ++c)
            if (cols[c][r] != 0) eq[c] += cols[c][r];
        SparseRow row = detail::row_from_map(eq);
        if (!row.empty() || target[r] != 0) eqs.emplace_back(std::move(row), target[r]);
    }
    auto sol = solve_linear(eqs, d1 + d2);
    if (!sol) throw DecompositionError("no standard decomposition exists");
    LinearMap d(alg.dim);
    for (int c = 0; c < d1; ++c)
        if ((*sol)[c] != 0)
            for (std::size_t i = 0; i < d.m.size(); ++i)
                d.m[i] += (*sol)[c] * der.basis[c].m[i];
    StandardDecomposition out;
    out.derivation_part = d;
    out.central_part = theta - d;
    out.unique = Subspace::intersection_dim(der.span, cann.span) == 0;
    return out;
}

inline StandardDecomposition decompose_standard(const FiniteDimAlgebra& alg,
                                                const LinearMap& theta) {
    return decompose_standard(alg, theta, derivation_space(alg),
                              central_annihilating_maps(alg));
}

struct CenterFormReport {
    bool skipped = false;
    std::string status;
    int center_dim = 0;
    int candidate_dim = 0;
    bool inclusion = false;
};

/// Check that the center sits inside span({1} + {cycle basis paths p with
/// p^2 = 0}); applies to connected quivers with at least two vertices.
inline CenterFormReport verify_center_form(const DualExtensionAlgebra& dx) {
    CenterFormReport rep;
    if (!is_connected(dx.source_quiver)) {
        rep.skipped = true;
        rep.status = "skipped: disconnected";
        return rep;
    }
    const FiniteDimAlgebra& alg = dx.algebra;
    Subspace candidate(static_cast<int>(alg.dim));
    candidate.add(alg.unit.coeffs);
    for (std::size_t i = 0; i < alg.dim; ++i) {
        const Path& p = alg.basis[i];
        if (p.trivial()) continue;
        if (dx.doubled_quiver.path_source(p) != dx.doubled_quiver.path_target(p)) continue;
        if (!alg.basis_product(i, i).is_zero()) continue;
        candidate.add(alg.basis_element(i).coeffs);
    }
    Subspace z = center(alg);
    rep.center_dim = z.dim();
    rep.candidate_dim = candidate.dim();
    rep.inclusion = candidate.contains(z);
    rep.status = rep.inclusion ? "center contained in candidate span" : "inclusion FAILED";
    return rep;
}

/// Smallest product-closed subspace containing the unit, the given
/// idempotents and the commutator subspace. Lower bound for W: the
/// polynomial closure rule is not applied.
inline Subspace w_lower_bound(const FiniteDimAlgebra& alg,
                              const std::vector<Element>& idempotents) {
    for (const auto& e : idempotents)
        if (!(alg.multiply(e, e) == e))
            throw AlgebraError("w_lower_bound: input element is not idempotent");
    Subspace s(static_cast<int>(alg.dim));
    s.add(alg.unit.coeffs);
    for (const auto& e : idempotents) s.add(e.coeffs);
    for (const auto& v : commutator_subspace(alg).basis()) s.add(v);
    bool grew = true;
    while (grew) {
        grew = false;
        auto vecs = s.basis();
        for (const auto& x : vecs) {
            for (const auto& y : vecs) {
                Element ex, ey;
                ex.coeffs = x;
                ey.coeffs = y;
                if (s.add(alg.multiply(ex, ey).coeffs)) grew = true;
            }
        }
    }
    return s;
}

/// Inner derivation x -> [a, x].
inline LinearMap inner_derivation(const FiniteDimAlgebra& alg, const Element& a) {
    LinearMap f(alg.dim);
    for (std::size_t c = 0; c < alg.dim; ++c) {
        Element col = alg.commutator(a, alg.basis_element(c));
        for (std::size_t r = 0; r < alg.dim; ++r) f.at(r, c) = col.coeffs[r];
    }
    return f;
}

}  // namespace dualext
