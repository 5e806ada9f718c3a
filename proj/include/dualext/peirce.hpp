#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualext/algebra.hpp"
#include "dualext/dual_extension.hpp"
#include "dualext/linalg.hpp"
#include "dualext/spaces.hpp"

namespace dualext {

/// The four Peirce blocks at an idempotent e: A = eXe, M = eX(1-e),
/// N = (1-e)Xe, B = (1-e)X(1-e).
class PeirceView {
public:
    const FiniteDimAlgebra* alg = nullptr;
    Element e, f;  // f = 1 - e
    Subspace A{0}, M{0}, N{0}, B{0};
    std::vector<Element> A_basis, M_basis, N_basis, B_basis;

    Element project_A(const Element& x) const { return sandwich(e, x, e); }
    Element project_M(const Element& x) const { return sandwich(e, x, f); }
    Element project_N(const Element& x) const { return sandwich(f, x, e); }
    Element project_B(const Element& x) const { return sandwich(f, x, f); }

    Element mul(const Element& x, const Element& y) const { return alg->multiply(x, y); }
    Element bracket(const Element& x, const Element& y) const { return alg->commutator(x, y); }

private:
    Element sandwich(const Element& l, const Element& x, const Element& r) const {
        return alg->multiply(l, alg->multiply(x, r));
    }
};

/// A linear map between two Peirce blocks, stored by its images of the
/// domain block basis (ambient elements).
struct BlockMap {
    const Subspace* domain = nullptr;
    std::vector<Element> images;

    Element apply(const Element& x) const {
        auto coords = domain->coordinates(x.coeffs);
        if (!coords) throw AlgebraError("block map applied outside its domain block");
        Element out(x.dim());
        for (std::size_t i = 0; i < coords->size(); ++i)
            if ((*coords)[i] != 0) out += (*coords)[i] * images[i];
        return out;
    }

    bool is_zero() const {
        for (const auto& im : images)
            if (!im.is_zero()) return false;
        return true;
    }
};

/// The block components of a Lie derivation at a Peirce view; carries every
/// symbol of the block form: delta1, tau2, nu3, mu1, delta4, mu4, m0, n0.
struct BlockMapData {
    BlockMap delta1, tau2, nu3, mu1, delta4, mu4;
    Element m0, n0;
};

inline PeirceView peirce_decompose(const FiniteDimAlgebra& alg, const Element& e) {
    if (!(alg.multiply(e, e) == e))
        throw AlgebraError("peirce_decompose: element is not idempotent");
    PeirceView v;
    v.alg = &alg;
    v.e = e;
    v.f = alg.unit - e;
    const int n = static_cast<int>(alg.dim);
    v.A = Subspace(n);
    v.M = Subspace(n);
    v.N = Subspace(n);
    v.B = Subspace(n);
    for (std::size_t i = 0; i < alg.dim; ++i) {
        Element b = alg.basis_element(i);
        v.A.add(v.project_A(b).coeffs);
        v.M.add(v.project_M(b).coeffs);
        v.N.add(v.project_N(b).coeffs);
        v.B.add(v.project_B(b).coeffs);
    }
    if (v.A.dim() + v.M.dim() + v.N.dim() + v.B.dim() != n)
        throw AlgebraError("Peirce blocks do not split the algebra");
    auto to_elems = [&](const Subspace& s) {
        std::vector<Element> out;
        for (const auto& vec : s.basis()) {
            Element el;
            el.coeffs = vec;
            out.push_back(el);
        }
        return out;
    };
    v.A_basis = to_elems(v.A);
    v.M_basis = to_elems(v.M);
    v.N_basis = to_elems(v.N);
    v.B_basis = to_elems(v.B);
    return v;
}

/// True iff every product of block basis elements lands in the predicted
/// block (A*M in M, M*B in M, N*A in N, B*N in N, M*N in A, N*M in B, ...).
inline bool check_block_closure(const PeirceView& v) {
    auto in = [&](const Subspace& s, const Element& x) { return s.contains(x.coeffs); };
    for (const auto& a : v.A_basis) {
        for (const auto& a2 : v.A_basis)
            if (!in(v.A, v.mul(a, a2))) return false;
        for (const auto& m : v.M_basis)
            if (!in(v.M, v.mul(a, m))) return false;
        for (const auto& n : v.N_basis)
            if (!in(v.N, v.mul(n, a))) return false;
    }
    for (const auto& b : v.B_basis) {
        for (const auto& b2 : v.B_basis)
            if (!in(v.B, v.mul(b, b2))) return false;
        for (const auto& m : v.M_basis)
            if (!in(v.M, v.mul(m, b))) return false;
        for (const auto& n : v.N_basis)
            if (!in(v.N, v.mul(b, n))) return false;
    }
    for (const auto& m : v.M_basis)
        for (const auto& n : v.N_basis) {
            if (!in(v.A, v.mul(m, n))) return false;
            if (!in(v.B, v.mul(n, m))) return false;
        }
    return true;
}

enum class PairingSide { MN, NM };

/// Span of the pairing image: products m*n (landing in A) or n*m (in B).
inline Subspace pairing_image(const PeirceView& v, PairingSide side) {
    Subspace out(static_cast<int>(v.alg->dim));
    for (const auto& m : v.M_basis)
        for (const auto& n : v.N_basis)
            out.add((side == PairingSide::MN ? v.mul(m, n) : v.mul(n, m)).coeffs);
    return out;
}

enum class BimoduleSide { Left, Right };

/// Annihilator of the M or N bimodule inside its acting algebra:
///   (M, Left)  -> {a in A : a m = 0}     (M, Right) -> {b in B : m b = 0}
///   (N, Left)  -> {b in B : b n = 0}     (N, Right) -> {a in A : n a = 0}
inline Subspace bimodule_annihilator(const PeirceView& v, char module, BimoduleSide side) {
    const bool on_M = module == 'M';
    const auto& mod_basis = on_M ? v.M_basis : v.N_basis;
    const bool actor_is_A = (on_M && side == BimoduleSide::Left) ||
                            (!on_M && side == BimoduleSide::Right);
    const auto& act_basis = actor_is_A ? v.A_basis : v.B_basis;
    const std::size_t dim = v.alg->dim;
    RowEchelon ech(static_cast<int>(act_basis.size()));
    for (const auto& x : mod_basis) {
        std::vector<std::map<int, Rat>> eq(dim);
        for (std::size_t i = 0; i < act_basis.size(); ++i) {
            Element prod = side == BimoduleSide::Left ? v.mul(act_basis[i], x)
                                                      : v.mul(x, act_basis[i]);
            for (std::size_t t = 0; t < dim; ++t)
                if (prod.coeffs[t] != 0) eq[t][static_cast<int>(i)] += prod.coeffs[t];
        }
        for (auto& m : eq) {
            SparseRow row;
            for (const auto& [c, k] : m)
                if (k != 0) row.emplace_back(c, k);
            ech.insert(std::move(row));
        }
    }
    Subspace out(static_cast<int>(dim));
    for (const auto& sol : ech.nullspace()) {
        Element el(dim);
        for (std::size_t i = 0; i < act_basis.size(); ++i)
            if (sol[i] != 0) el += sol[i] * act_basis[i];
        out.add(el.coeffs);
    }
    return out;
}

/// Pull the block components out of a Lie derivation; the residual against
/// the block form must vanish identically (exact arithmetic, no epsilon).
inline BlockMapData extract_block_data(const PeirceView& v, const LinearMap& theta) {
    BlockMapData d;
    Element te = theta.apply(v.e);
    d.m0 = v.project_M(te);
    d.n0 = v.project_N(te);
    d.delta1.domain = &v.A;
    d.mu1.domain = &v.A;
    d.tau2.domain = &v.M;
    d.nu3.domain = &v.N;
    d.delta4.domain = &v.B;
    d.mu4.domain = &v.B;

    auto expect = [&](const Element& got, const Element& want, const char* where) {
        if (!(got == want))
            throw AlgebraError(std::string("block form residual mismatch at ") + where);
    };
    for (const auto& a : v.A_basis) {
        Element ta = theta.apply(a);
        d.delta1.images.push_back(v.project_A(ta));
        d.mu1.images.push_back(v.project_B(ta));
        expect(v.project_M(ta), v.mul(a, d.m0), "A->M");
        expect(v.project_N(ta), v.mul(d.n0, a), "A->N");
    }
    for (const auto& m : v.M_basis) {
        Element tm = theta.apply(m);
        d.tau2.images.push_back(v.project_M(tm));
        expect(v.project_A(tm), Rat(-1) * v.mul(m, d.n0), "M->A");
        expect(v.project_B(tm), v.mul(d.n0, m), "M->B");
        expect(v.project_N(tm), Element(v.alg->dim), "M->N");
    }
    for (const auto& n : v.N_basis) {
        Element tn = theta.apply(n);
        d.nu3.images.push_back(v.project_N(tn));
        expect(v.project_A(tn), Rat(-1) * v.mul(d.m0, n), "N->A");
        expect(v.project_B(tn), v.mul(n, d.m0), "N->B");
        expect(v.project_M(tn), Element(v.alg->dim), "N->M");
    }
    for (const auto& b : v.B_basis) {
        Element tb = theta.apply(b);
        d.delta4.images.push_back(v.project_A(tb));
        d.mu4.images.push_back(v.project_B(tb));
        expect(v.project_M(tb), Rat(-1) * v.mul(d.m0, b), "B->M");
        expect(v.project_N(tb), Rat(-1) * v.mul(b, d.n0), "B->N");
    }
    return d;
}

/// Rebuild the full map from its block data (the block form evaluated on
/// every ambient basis element).
inline LinearMap reassemble_block_form(const PeirceView& v, const BlockMapData& d) {
    const std::size_t n = v.alg->dim;
    LinearMap out(n);
    for (std::size_t c = 0; c < n; ++c) {
        Element x = v.alg->basis_element(c);
        Element a = v.project_A(x), m = v.project_M(x), nn = v.project_N(x), b = v.project_B(x);
        Element img =
            d.delta1.apply(a) - v.mul(m, d.n0) - v.mul(d.m0, nn) + d.delta4.apply(b) +
            v.mul(a, d.m0) - v.mul(d.m0, b) + d.tau2.apply(m) +
            v.mul(d.n0, a) - v.mul(b, d.n0) + d.nu3.apply(nn) +
            d.mu1.apply(a) + v.mul(d.n0, m) + v.mul(nn, d.m0) + d.mu4.apply(b);
        for (std::size_t r = 0; r < n; ++r) out.at(r, c) = img.coeffs[r];
    }
    return out;
}

struct LieBlockReport {
    bool cond1 = false, cond2 = false, cond3 = false, cond4 = false, cond5 = false;
    bool all() const { return cond1 && cond2 && cond3 && cond4 && cond5; }
};

/// The five conditions a Lie derivation's block data must satisfy.
inline LieBlockReport verify_lie_block_conditions(const PeirceView& v, const BlockMapData& d) {
    LieBlockReport rep;
    auto eq = [](const Element& x, const Element& y) { return x == y; };

    rep.cond1 = true;
    for (const auto& x : v.A_basis)
        for (const auto& y : v.A_basis)
            if (!eq(d.delta1.apply(v.bracket(x, y)),
                    v.bracket(d.delta1.apply(x), y) + v.bracket(x, d.delta1.apply(y))))
                rep.cond1 = false;
    for (const auto& m : v.M_basis)
        for (const auto& n : v.N_basis)
            if (!eq(d.delta1.apply(v.mul(m, n)),
                    d.delta4.apply(v.mul(n, m)) + v.mul(d.tau2.apply(m), n) +
                        v.mul(m, d.nu3.apply(n))))
                rep.cond1 = false;

    rep.cond2 = true;
    for (const auto& x : v.B_basis)
        for (const auto& y : v.B_basis)
            if (!eq(d.mu4.apply(v.bracket(x, y)),
                    v.bracket(d.mu4.apply(x), y) + v.bracket(x, d.mu4.apply(y))))
                rep.cond2 = false;
    for (const auto& m : v.M_basis)
        for (const auto& n : v.N_basis)
            if (!eq(d.mu4.apply(v.mul(n, m)),
                    d.mu1.apply(v.mul(m, n)) + v.mul(n, d.tau2.apply(m)) +
                        v.mul(d.nu3.apply(n), m)))
                rep.cond2 = false;

    rep.cond3 = true;
    for (const auto& x : v.B_basis)
        for (const auto& y : v.B_basis)
            if (!d.delta4.apply(v.bracket(x, y)).is_zero()) rep.cond3 = false;
    for (const auto& x : v.A_basis)
        for (const auto& y : v.A_basis)
            if (!d.mu1.apply(v.bracket(x, y)).is_zero()) rep.cond3 = false;

    rep.cond4 = true;
    for (const auto& a : v.A_basis)
        for (const auto& m : v.M_basis)
            if (!eq(d.tau2.apply(v.mul(a, m)),
                    v.mul(a, d.tau2.apply(m)) + v.mul(d.delta1.apply(a), m) -
                        v.mul(m, d.mu1.apply(a))))
                rep.cond4 = false;
    for (const auto& m : v.M_basis)
        for (const auto& b : v.B_basis)
            if (!eq(d.tau2.apply(v.mul(m, b)),
                    v.mul(d.tau2.apply(m), b) + v.mul(m, d.mu4.apply(b)) -
                        v.mul(d.delta4.apply(b), m)))
                rep.cond4 = false;

    rep.cond5 = true;
    for (const auto& n : v.N_basis)
        for (const auto& a : v.A_basis)
            if (!eq(d.nu3.apply(v.mul(n, a)),
                    v.mul(d.nu3.apply(n), a) + v.mul(n, d.delta1.apply(a)) -
                        v.mul(d.mu1.apply(a), n)))
                rep.cond5 = false;
    for (const auto& b : v.B_basis)
        for (const auto& n : v.N_basis)
            if (!eq(d.nu3.apply(v.mul(b, n)),
                    v.mul(b, d.nu3.apply(n)) + v.mul(d.mu4.apply(b), n) -
                        v.mul(n, d.delta4.apply(b))))
                rep.cond5 = false;

    return rep;
}

struct DerBlockReport {
    bool no_off_diagonal = false;  // delta4 = 0 and mu1 = 0
    bool cond1 = false, cond2 = false, cond3 = false, cond4 = false;
    bool all() const { return no_off_diagonal && cond1 && cond2 && cond3 && cond4; }
};

/// The derivation block form: like the Lie form but with no delta4/mu1
/// contribution and genuine derivations on the diagonal.
inline DerBlockReport verify_der_block_conditions(const PeirceView& v, const BlockMapData& d) {
    DerBlockReport rep;
    auto eq = [](const Element& x, const Element& y) { return x == y; };

    rep.no_off_diagonal = d.delta4.is_zero() && d.mu1.is_zero();

    rep.cond1 = true;
    for (const auto& x : v.A_basis)
        for (const auto& y : v.A_basis)
            if (!eq(d.delta1.apply(v.mul(x, y)),
                    v.mul(d.delta1.apply(x), y) + v.mul(x, d.delta1.apply(y))))
                rep.cond1 = false;
    for (const auto& m : v.M_basis)
        for (const auto& n : v.N_basis)
            if (!eq(d.delta1.apply(v.mul(m, n)),
                    v.mul(d.tau2.apply(m), n) + v.mul(m, d.nu3.apply(n))))
                rep.cond1 = false;

    rep.cond2 = true;
    for (const auto& x : v.B_basis)
        for (const auto& y : v.B_basis)
            if (!eq(d.mu4.apply(v.mul(x, y)),
                    v.mul(d.mu4.apply(x), y) + v.mul(x, d.mu4.apply(y))))
                rep.cond2 = false;
    for (const auto& m : v.M_basis)
        for (const auto& n : v.N_basis)
            if (!eq(d.mu4.apply(v.mul(n, m)),
                    v.mul(n, d.tau2.apply(m)) + v.mul(d.nu3.apply(n), m)))
                rep.cond2 = false;

    rep.cond3 = true;
    for (const auto& a : v.A_basis)
        for (const auto& m : v.M_basis)
            if (!eq(d.tau2.apply(v.mul(a, m)),
                    v.mul(a, d.tau2.apply(m)) + v.mul(d.delta1.apply(a), m)))
                rep.cond3 = false;
    for (const auto& m : v.M_basis)
        for (const auto& b : v.B_basis)
            if (!eq(d.tau2.apply(v.mul(m, b)),
                    v.mul(d.tau2.apply(m), b) + v.mul(m, d.mu4.apply(b))))
                rep.cond3 = false;

    rep.cond4 = true;
    for (const auto& n : v.N_basis)
        for (const auto& a : v.A_basis)
            if (!eq(d.nu3.apply(v.mul(n, a)),
                    v.mul(d.nu3.apply(n), a) + v.mul(n, d.delta1.apply(a))))
                rep.cond4 = false;
    for (const auto& b : v.B_basis)
        for (const auto& n : v.N_basis)
            if (!eq(d.nu3.apply(v.mul(b, n)),
                    v.mul(b, d.nu3.apply(n)) + v.mul(d.mu4.apply(b), n)))
                rep.cond4 = false;

    return rep;
}

/// Center of a block subalgebra, as a subspace of the ambient algebra.
inline Subspace block_center(const PeirceView& v, const Subspace& block,
                             const std::vector<Element>& block_basis) {
    RowEchelon ech(static_cast<int>(block_basis.size()));
    const std::size_t dim = v.alg->dim;
    for (const auto& y : block_basis) {
        std::vector<std::map<int, Rat>> eq(dim);
        for (std::size_t i = 0; i < block_basis.size(); ++i) {
            Element c = v.bracket(block_basis[i], y);
            for (std::size_t t = 0; t < dim; ++t)
                if (c.coeffs[t] != 0) eq[t][static_cast<int>(i)] += c.coeffs[t];
        }
        for (auto& m : eq) {
            SparseRow row;
            for (const auto& [c, k] : m)
                if (k != 0) row.emplace_back(c, k);
            ech.insert(std::move(row));
        }
    }
    Subspace out(static_cast<int>(dim));
    for (const auto& sol : ech.nullspace()) {
        Element el(dim);
        for (std::size_t i = 0; i < block_basis.size(); ++i)
            if (sol[i] != 0) el += sol[i] * block_basis[i];
        out.add(el.coeffs);
    }
    (void)block;
    return out;
}

struct StandardizingMaps {
    BlockMap l_A, l_B;
};

/// Joint linear feasibility for the block-level standardization conditions.
/// Returns one canonical solution or nullopt when infeasible.
inline std::optional<StandardizingMaps> find_standardizing_maps(const PeirceView& v,
                                                                const BlockMapData& d) {
    const std::size_t dim = v.alg->dim;
    std::vector<Element> ZA, ZB;
    for (const auto& vec : block_center(v, v.A, v.A_basis).basis()) {
        Element el;
        el.coeffs = vec;
        ZA.push_back(el);
    }
    for (const auto& vec : block_center(v, v.B, v.B_basis).basis()) {
        Element el;
        el.coeffs = vec;
        ZB.push_back(el);
    }
    const std::size_t nA = v.A_basis.size(), nB = v.B_basis.size();
    const std::size_t zA = ZA.size(), zB = ZB.size();
    const int ncols = static_cast<int>(nA * zA + nB * zB);
    auto uA = [&](std::size_t ai, std::size_t zi) { return static_cast<int>(ai * zA + zi); };
    auto uB = [&](std::size_t bi, std::size_t zi) {
        return static_cast<int>(nA * zA + bi * zB + zi);
    };

    std::vector<std::pair<SparseRow, Rat>> eqs;
    // Each abstract equation says: constant + sum(unknown * element) = 0,
    // expanded into one scalar equation per ambient coordinate.
    struct Lin {
        Element constant;
        std::vector<std::pair<int, Element>> terms;
    };
    auto emit = [&](const Lin& L) {
        for (std::size_t t = 0; t < dim; ++t) {
            std::map<int, Rat> eq;
            for (const auto& [col, el] : L.terms)
                if (el.coeffs[t] != 0) eq[col] += el.coeffs[t];
            SparseRow row;
            for (const auto& [c, k] : eq)
                if (k != 0) row.emplace_back(c, k);
            if (!row.empty() || L.constant.coeffs[t] != 0)
                eqs.emplace_back(std::move(row), -L.constant.coeffs[t]);
        }
    };
    // l_A(x) for x in the A block, as a Lin with zero constant
    auto lA_of = [&](const Element& x) {
        Lin L{Element(dim), {}};
        auto coords = *v.A.coordinates(x.coeffs);
        for (std::size_t ai = 0; ai < nA; ++ai)
            if (coords[ai] != 0)
                for (std::size_t zi = 0; zi < zA; ++zi)
                    L.terms.emplace_back(uA(ai, zi), coords[ai] * ZA[zi]);
        return L;
    };
    auto lB_of = [&](const Element& x) {
        Lin L{Element(dim), {}};
        auto coords = *v.B.coordinates(x.coeffs);
        for (std::size_t bi = 0; bi < nB; ++bi)
            if (coords[bi] != 0)
                for (std::size_t zi = 0; zi < zB; ++zi)
                    L.terms.emplace_back(uB(bi, zi), coords[bi] * ZB[zi]);
        return L;
    };
    auto lin_add = [&](Lin a, const Lin& b, const Rat& k) {
        a.constant += k * b.constant;
        for (const auto& [c, el] : b.terms) a.terms.emplace_back(c, k * el);
        return a;
    };
    auto lin_mul_left = [&](const Element& x, Lin L) {  // x * L
        L.constant = v.mul(x, L.constant);
        for (auto& [c, el] : L.terms) el = v.mul(x, el);
        return L;
    };
    auto lin_mul_right = [&](Lin L, const Element& x) {  // L * x
        L.constant = v.mul(L.constant, x);
        for (auto& [c, el] : L.terms) el = v.mul(el, x);
        return L;
    };
    auto lin_const = [&](const Element& x) { return Lin{x, {}}; };

    // Condition (1): p_A = delta1 - l_A is a derivation on A
    for (const auto& x : v.A_basis) {
        for (const auto& y : v.A_basis) {
            Element xy = v.mul(x, y);
            // delta1(xy) - lA(xy) - (delta1(x)-lA(x))y - x(delta1(y)-lA(y)) = 0
            Lin L = lin_const(d.delta1.apply(xy) - v.mul(d.delta1.apply(x), y) -
                              v.mul(x, d.delta1.apply(y)));
            L = lin_add(L, lA_of(xy), Rat(-1));
            L = lin_add(L, lin_mul_right(lA_of(x), y), Rat(1));
            L = lin_add(L, lin_mul_left(x, lA_of(y)), Rat(1));
            emit(L);
            // lA([x, y]) = 0
            emit(lA_of(v.bracket(x, y)));
        }
        // lA(a)m = m mu1(a) and n lA(a) = mu1(a) n
        for (const auto& m : v.M_basis) {
            Lin L = lin_mul_right(lA_of(x), m);
            L = lin_add(L, lin_const(v.mul(m, d.mu1.apply(x))), Rat(-1));
            emit(L);
        }
        for (const auto& n : v.N_basis) {
            Lin L = lin_mul_left(n, lA_of(x));
            L = lin_add(L, lin_const(v.mul(d.mu1.apply(x), n)), Rat(-1));
            emit(L);
        }
    }
    // lA(mn) = delta4(nm)
    for (const auto& m : v.M_basis)
        for (const auto& n : v.N_basis) {
            Lin L = lA_of(v.mul(m, n));
            L = lin_add(L, lin_const(d.delta4.apply(v.mul(n, m))), Rat(-1));
            emit(L);
        }

    // Condition (2): p_B = mu4 - l_B is a derivation on B
    for (const auto& x : v.B_basis) {
        for (const auto& y : v.B_basis) {
            Element xy = v.mul(x, y);
            Lin L = lin_const(d.mu4.apply(xy) - v.mul(d.mu4.apply(x), y) -
                              v.mul(x, d.mu4.apply(y)));
            L = lin_add(L, lB_of(xy), Rat(-1));
            L = lin_add(L, lin_mul_right(lB_of(x), y), Rat(1));
            L = lin_add(L, lin_mul_left(x, lB_of(y)), Rat(1));
            emit(L);
            emit(lB_of(v.bracket(x, y)));
        }
        // lB(b)n = n delta4(b) and m lB(b) = delta4(b) m
        for (const auto& n : v.N_basis) {
            Lin L = lin_mul_right(lB_of(x), n);
            L = lin_add(L, lin_const(v.mul(n, d.delta4.apply(x))), Rat(-1));
            emit(L);
        }
        for (const auto& m : v.M_basis) {
            Lin L = lin_mul_left(m, lB_of(x));
            L = lin_add(L, lin_const(v.mul(d.delta4.apply(x), m)), Rat(-1));
            emit(L);
        }
    }
    // lB(nm) = mu1(mn)
    for (const auto& m : v.M_basis)
        for (const auto& n : v.N_basis) {
            Lin L = lB_of(v.mul(n, m));
            L = lin_add(L, lin_const(d.mu1.apply(v.mul(m, n))), Rat(-1));
            emit(L);
        }

    auto sol = solve_linear(eqs, ncols);
    if (!sol) return std::nullopt;
    StandardizingMaps out;
    out.l_A.domain = &v.A;
    out.l_B.domain = &v.B;
    for (std::size_t ai = 0; ai < nA; ++ai) {
        Element img(dim);
        for (std::size_t zi = 0; zi < zA; ++zi)
            if ((*sol)[uA(ai, zi)] != 0) img += (*sol)[uA(ai, zi)] * ZA[zi];
        out.l_A.images.push_back(img);
    }
    for (std::size_t bi = 0; bi < nB; ++bi) {
        Element img(dim);
        for (std::size_t zi = 0; zi < zB; ++zi)
            if ((*sol)[uB(bi, zi)] != 0) img += (*sol)[uB(bi, zi)] * ZB[zi];
        out.l_B.images.push_back(img);
    }
    return out;
}

struct GDefectReport {
    bool symmetric = false;
    bool identity_m = false;
    bool identity_n = false;
    bool all() const { return symmetric && identity_m && identity_n; }
};

/// The defect G(x,y) = delta1(xy) - x delta1(y) - delta1(x) y on A-basis
/// pairs: symmetry plus the two bimodule identities against mu1.
inline GDefectReport g_defect(const PeirceView& v, const BlockMap& delta1,
                              const BlockMap& mu1) {
    GDefectReport rep{true, true, true};
    auto G = [&](const Element& x, const Element& y) {
        return delta1.apply(v.mul(x, y)) - v.mul(x, delta1.apply(y)) -
               v.mul(delta1.apply(x), y);
    };
    for (const auto& x : v.A_basis) {
        for (const auto& y : v.A_basis) {
            Element g = G(x, y);
            if (!(g == G(y, x))) rep.symmetric = false;
            Element mu_xy = mu1.apply(v.mul(x, y));
            Element mu_x = mu1.apply(x), mu_y = mu1.apply(y);
            for (const auto& m : v.M_basis) {
                Element lhs = v.mul(g, m);
                Element rhs = v.mul(m, mu_xy) - v.mul(v.mul(x, m), mu_y) -
                              v.mul(v.mul(y, m), mu_x);
                if (!(lhs == rhs)) rep.identity_m = false;
            }
            for (const auto& n : v.N_basis) {
                Element lhs = v.mul(n, g);
                Element rhs = v.mul(mu_xy, n) - v.mul(mu_y, v.mul(n, x)) -
                              v.mul(mu_x, v.mul(n, y));
                if (!(lhs == rhs)) rep.identity_n = false;
            }
        }
    }
    return rep;
}

struct CycleCentralityReport {
    std::vector<std::string> cycle_labels;
    bool all_central = false;
};

/// Images of square-zero cycles at a source vertex stay central.
inline CycleCentralityReport source_cycle_space_check(const DualExtensionAlgebra& dx,
                                                      const std::string& source_vertex,
                                                      const LinearMap& theta) {
    const auto sources = source_vertices(dx.source_quiver);
    if (std::find(sources.begin(), sources.end(), source_vertex) == sources.end())
        throw QuiverError("vertex is not a source: " + source_vertex);
    const FiniteDimAlgebra& alg = dx.algebra;
    Subspace z = center(alg);
    CycleCentralityReport rep;
    rep.all_central = true;
    for (std::size_t i = 0; i < alg.dim; ++i) {
        const Path& p = alg.basis[i];
        if (p.trivial()) continue;
        if (dx.doubled_quiver.path_source(p) != source_vertex ||
            dx.doubled_quiver.path_target(p) != source_vertex)
            continue;
        if (!alg.basis_product(i, i).is_zero()) continue;
        rep.cycle_labels.push_back(p.label());
        if (!z.contains(theta.column(i).coeffs)) rep.all_central = false;
    }
    return rep;
}

}  // namespace dualext
