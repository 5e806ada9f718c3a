#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualext/linalg.hpp"
#include "dualext/quiver.hpp"
#include "dualext/rational.hpp"

namespace dualext {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Coefficient vector over the canonical basis of an algebra.
struct Element {
    std::vector<Rat> coeffs;

    Element() = default;
    explicit Element(std::size_t dim) : coeffs(dim) {}

    std::size_t dim() const { return coeffs.size(); }
    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }

    Element& operator+=(const Element& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        return *this;
    }
    Element& operator*=(const Rat& k) {
        for (auto& c : coeffs) c *= k;
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Rat& k, Element a) { return a *= k; }
    bool operator==(const Element& o) const { return coeffs == o.coeffs; }
};

/// Finite-dimensional algebra with an ordered path-label basis and exact
/// rational structure constants. Immutable once built.
class FiniteDimAlgebra {
public:
    std::vector<Path> basis;
    std::vector<std::string> labels;
    std::size_t dim = 0;
    std::vector<Element> table;  // table[i * dim + j] = b_i * b_j
    Element unit;
    std::map<std::string, int> vertex_idempotents;  // vertex -> basis index

    int index_of(const std::string& label) const {
        auto it = label_index_.find(label);
        if (it == label_index_.end()) throw AlgebraError("no basis element " + label);
        return it->second;
    }
    bool has_label(const std::string& label) const { return label_index_.count(label) != 0; }

    Element zero() const { return Element(dim); }

    Element basis_element(std::size_t i) const {
        Element e(dim);
        e.coeffs[i] = 1;
        return e;
    }

    Element from_label(const std::string& label) const { return basis_element(index_of(label)); }

    const Element& basis_product(std::size_t i, std::size_t j) const {
        return table[i * dim + j];
    }

    Element multiply(const Element& x, const Element& y) const {
        if (x.dim() != dim || y.dim() != dim)
            throw AlgebraError("element dimension mismatch");
        Element out(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (x.coeffs[i] == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (y.coeffs[j] == 0) continue;
                const Rat k = x.coeffs[i] * y.coeffs[j];
                const Element& p = basis_product(i, j);
                for (std::size_t t = 0; t < dim; ++t)
                    if (p.coeffs[t] != 0) out.coeffs[t] += k * p.coeffs[t];
            }
        }
        return out;
    }

    Element commutator(const Element& x, const Element& y) const {
        return multiply(x, y) - multiply(y, x);
    }

    bool check_associativity() const {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                for (std::size_t k = 0; k < dim; ++k) {
                    Element lhs = multiply(basis_product(i, j), basis_element(k));
                    Element rhs = multiply(basis_element(i), basis_product(j, k));
                    if (!(lhs == rhs)) return false;
                }
        return true;
    }

    void finalize() {
        label_index_.clear();
        for (std::size_t i = 0; i < basis.size(); ++i) label_index_[labels[i]] = static_cast<int>(i);
    }

private:
    std::map<std::string, int> label_index_;
};

namespace detail {

/// Graded reduction data for one path length: which paths survive to the
/// basis and how pivot paths rewrite over the surviving ones.
struct GradedReduction {
    std::vector<Path> paths;                       // all paths of this length
    std::map<std::string, int> index;              // label -> position
    RowEchelon ideal;                              // ideal rows over `paths`
    std::vector<int> free_columns;                 // surviving paths
};

inline Path concat(const Path& first_applied, const Path& then) {
    if (first_applied.trivial()) return then;
    if (then.trivial()) return first_applied;
    Path out = first_applied;
    out.arrows.insert(out.arrows.end(), then.arrows.begin(), then.arrows.end());
    return out;
}

}  // namespace detail

/// Quotient path algebra K(Gamma)/<relations>, with basis certified complete
/// at the given length bound: every path of length bound+1 must lie in the
/// ideal, otherwise finite-dimensionality at this bound is not certified and
/// construction fails.
inline FiniteDimAlgebra build_path_algebra(const Quiver& q,
                                           const std::vector<Relation>& relations,
                                           std::size_t length_bound) {
    for (const auto& r : relations) q.validate_relation(r);

    std::vector<Path> all = enumerate_paths(q, length_bound + 1);
    std::map<std::size_t, detail::GradedReduction> grades;
    for (std::size_t len = 0; len <= length_bound + 1; ++len)
        grades.emplace(len, detail::GradedReduction{{}, {}, RowEchelon(0), {}});
    for (const auto& p : all) {
        auto& g = grades.at(p.length());
        g.index[p.label()] = static_cast<int>(g.paths.size());
        g.paths.push_back(p);
    }

    // Ideal rows per grade: u * r * v with matching endpoints and total length.
    for (auto& [len, g] : grades) {
        g.ideal = RowEchelon(static_cast<int>(g.paths.size()));
        if (len < 2) continue;
        for (const auto& rel : relations) {
            const std::size_t rl = rel.terms.front().second.length();
            if (rl > len) continue;
            const std::string rs = q.path_source(rel.terms.front().second);
            const std::string re = q.path_target(rel.terms.front().second);
            for (std::size_t vl = 0; vl + rl <= len; ++vl) {
                const std::size_t ul = len - rl - vl;
                for (const auto& v : grades.at(vl).paths) {
                    if (q.path_target(v) != rs) continue;
                    for (const auto& u : grades.at(ul).paths) {
                        if (q.path_source(u) != re) continue;
                        SparseRow row;
                        std::map<int, Rat> acc;
                        for (const auto& [k, p] : rel.terms) {
                            Path full = detail::concat(detail::concat(v, p), u);
                            acc[g.index.at(full.label())] += k;
                        }
                        for (const auto& [c, k] : acc)
                            if (k != 0) row.emplace_back(c, k);
                        g.ideal.insert(std::move(row));
                    }
                }
            }
        }
    }

    for (auto& [len, g] : grades)
        for (int c = 0; c < static_cast<int>(g.paths.size()); ++c)
            if (!g.ideal.is_pivot(c)) g.free_columns.push_back(c);

    // Certificate: the quotient must vanish one step past the bound.
    if (!grades.at(length_bound + 1).free_columns.empty())
        throw AlgebraError("not finite-dimensional within bound " + std::to_string(length_bound));

    FiniteDimAlgebra alg;
    std::map<std::string, int> global_index;
    for (std::size_t len = 0; len <= length_bound; ++len) {
        for (int c : grades.at(len).free_columns) {
            const Path& p = grades.at(len).paths[c];
            global_index[p.label()] = static_cast<int>(alg.basis.size());
            alg.basis.push_back(p);
            alg.labels.push_back(p.label());
        }
    }
    alg.dim = alg.basis.size();

    // Rewrite any enumerated path as an Element over the surviving basis.
    auto reduce_path = [&](const Path& p) -> Element {
        Element out(alg.dim);
        const auto& g = grades.at(p.length());
        int col = g.index.at(p.label());
        auto piv = g.ideal.pivots().find(col);
        if (piv == g.ideal.pivots().end()) {
            out.coeffs[global_index.at(p.label())] = 1;
            return out;
        }
        const SparseRow& row = g.ideal.rows()[piv->second];
        for (const auto& [c, k] : row) {
            if (c == col) continue;  // the pivot entry itself
            out.coeffs[global_index.at(g.paths[c].label())] = -k;
        }
        return out;
    };

    alg.table.assign(alg.dim * alg.dim, Element(alg.dim));
    for (std::size_t i = 0; i < alg.dim; ++i) {
        for (std::size_t j = 0; j < alg.dim; ++j) {
            const Path& x = alg.basis[i];
            const Path& y = alg.basis[j];  // product x*y applies y first
            if (q.path_target(y) != q.path_source(x)) continue;
            if (x.length() + y.length() > length_bound) continue;  // certified zero
            alg.table[i * alg.dim + j] = reduce_path(detail::concat(y, x));
        }
    }

    alg.unit = Element(alg.dim);
    for (const auto& v : q.vertices) {
        Path p;
        p.base_vertex = v;
        int idx = global_index.at(p.label());
        alg.vertex_idempotents[v] = idx;
        alg.unit.coeffs[idx] = 1;
    }

    alg.finalize();
    if (!alg.check_associativity())
        throw AlgebraError("structure constants failed the associativity self-test");
    return alg;
}

/// Pretty-print an element as a combination of basis labels.
inline std::string element_to_string(const FiniteDimAlgebra& alg, const Element& x) {
    std::string s;
    for (std::size_t i = 0; i < alg.dim; ++i) {
        if (x.coeffs[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (x.coeffs[i] != 1) s += rat_to_string(x.coeffs[i]) + "*";
        s += alg.labels[i];
    }
    return s.empty() ? "0" : s;
}

}  // namespace dualext
