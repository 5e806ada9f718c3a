#pragma once

#include <string>

#include "dualext/spaces.hpp"

namespace dualext::fixtures {

/// 1 --alpha--> 2 <--beta-- 3
inline const char* ex2_2 = R"(
quiver {
  vertices: 1, 2, 3;
  arrows:
    alpha: 1 -> 2;
    beta: 3 -> 2;
}
)";

/// 1 --alpha--> 2 --beta--> 3, plus gamma: 1 -> 3
inline const char* ex2_3 = R"(
quiver {
  vertices: 1, 2, 3;
  arrows:
    alpha: 1 -> 2;
    beta: 2 -> 3;
    gamma: 1 -> 3;
}
)";

/// 1 --alpha--> 2 --beta--> 3 with relation beta.alpha
inline const char* ex4_9 = R"(
quiver {
  vertices: 1, 2, 3;
  arrows:
    alpha: 1 -> 2;
    beta: 2 -> 3;
  relations:
    beta.alpha;
}
)";

inline const char* a2 = R"(
quiver {
  vertices: 1, 2;
  arrows:
    alpha: 1 -> 2;
}
)";

/// The Lie derivation of the dual extension of ex4_9, over the canonical
/// basis {e_1, e_2, e_3, alpha, alpha*, beta, beta*, alpha*.alpha,
/// beta*.beta}. The source lists two candidate values for the image of beta;
/// `beta_to_star` selects between beta* (as printed) and beta.
inline LinearMap ex4_9_theta(const FiniteDimAlgebra& alg, const Rat& k1, const Rat& k2,
                             const Rat& k3, bool beta_to_star) {
    LinearMap f(alg.dim);
    auto set_col = [&](const std::string& from, const Element& img) {
        std::size_t c = alg.index_of(from);
        for (std::size_t r = 0; r < alg.dim; ++r) f.at(r, c) = img.coeffs[r];
    };
    Element one = alg.unit;
    set_col("e_1", k1 * one + alg.from_label("alpha*.alpha"));
    set_col("e_2", k2 * one + alg.from_label("beta*.beta"));
    set_col("e_3", k3 * one);
    set_col("alpha", alg.from_label("alpha"));
    set_col("alpha*", alg.from_label("alpha*"));
    set_col("beta", beta_to_star ? alg.from_label("beta*") : alg.from_label("beta"));
    set_col("beta*", alg.from_label("beta*"));
    set_col("alpha*.alpha", Rat(2) * alg.from_label("alpha*.alpha"));
    set_col("beta*.beta", Rat(2) * alg.from_label("beta*.beta"));
    return f;
}

/// The central part of the standard decomposition given in the source for
/// ex4_9_theta: Delta(e_i) = k_i + cycle term, zero on nontrivial paths.
inline LinearMap ex4_9_delta(const FiniteDimAlgebra& alg, const Rat& k1, const Rat& k2,
                             const Rat& k3) {
    LinearMap f(alg.dim);
    auto set_col = [&](const std::string& from, const Element& img) {
        std::size_t c = alg.index_of(from);
        for (std::size_t r = 0; r < alg.dim; ++r) f.at(r, c) = img.coeffs[r];
    };
    Element one = alg.unit;
    set_col("e_1", k1 * one + alg.from_label("alpha*.alpha"));
    set_col("e_2", k2 * one + alg.from_label("beta*.beta"));
    set_col("e_3", k3 * one);
    return f;
}

}  // namespace dualext::fixtures
