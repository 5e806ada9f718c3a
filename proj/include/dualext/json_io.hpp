#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <string>

#include "dualext/algebra.hpp"
#include "dualext/dual_extension.hpp"
#include "dualext/peirce.hpp"
#include "dualext/spaces.hpp"

namespace dualext {

using json = nlohmann::ordered_json;

/// Algebra dump: basis labels, dimension and a sparse structure-constant
/// table, all in canonical basis order so output is byte-identical per input.
inline json algebra_to_json(const FiniteDimAlgebra& alg) {
    json j;
    j["basis"] = alg.labels;
    j["dim"] = alg.dim;
    json table = json::array();
    for (std::size_t i = 0; i < alg.dim; ++i)
        for (std::size_t k = 0; k < alg.dim; ++k) {
            const Element& p = alg.basis_product(i, k);
            if (p.is_zero()) continue;
            json entry = json::array();
            entry.push_back(i);
            entry.push_back(k);
            json coeffs = json::array();
            for (std::size_t t = 0; t < alg.dim; ++t)
                if (p.coeffs[t] != 0)
                    coeffs.push_back(json::array({t, rat_to_string(p.coeffs[t])}));
            entry.push_back(coeffs);
            table.push_back(entry);
        }
    j["table"] = table;
    return j;
}

inline json dual_extension_to_json(const DualExtensionAlgebra& dx) {
    json j = algebra_to_json(dx.algebra);
    json shape = json::array();
    for (const auto& [qs, ps] : dx.shape())
        shape.push_back(json::array({qs, ps}));
    j["shape"] = shape;
    return j;
}

inline json linear_map_to_json(const FiniteDimAlgebra& alg, const LinearMap& f) {
    json j;
    j["basis"] = alg.labels;
    json matrix = json::array();
    for (std::size_t r = 0; r < f.n; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < f.n; ++c) row.push_back(rat_to_string(f.at(r, c)));
        matrix.push_back(row);
    }
    j["matrix"] = matrix;
    return j;
}

/// Parse a LinearMap file; the basis list must match the algebra's canonical
/// basis exactly, guarding against stale fixtures.
inline LinearMap linear_map_from_json(const FiniteDimAlgebra& alg, const json& j) {
    std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
    if (basis != alg.labels)
        throw AlgebraError("linear map basis does not match the algebra's canonical basis");
    LinearMap f(alg.dim);
    const auto& matrix = j.at("matrix");
    if (matrix.size() != alg.dim)
        throw AlgebraError("linear map matrix has wrong row count");
    for (std::size_t r = 0; r < alg.dim; ++r) {
        if (matrix[r].size() != alg.dim)
            throw AlgebraError("linear map matrix has wrong column count");
        for (std::size_t c = 0; c < alg.dim; ++c)
            f.at(r, c) = rat_from_string(matrix[r][c].get<std::string>());
    }
    return f;
}

inline json map_space_to_json(const FiniteDimAlgebra& alg, const MapSpace& s) {
    json j;
    j["ambient_dim"] = s.map_dim * s.map_dim;
    j["dim"] = s.dim();
    json basis = json::array();
    for (const auto& f : s.basis) basis.push_back(linear_map_to_json(alg, f));
    j["basis"] = basis;
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace dualext
