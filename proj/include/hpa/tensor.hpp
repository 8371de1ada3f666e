#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpa/exactlin.hpp"

// Dense tensors are flat coordinate vectors; leg k of a tensor with leg
// dimensions (d_0, ..., d_{r-1}) is addressed row-major, so index
// (i_0, ..., i_{r-1}) sits at ((i_0 d_1 + i_1) d_2 + ...) + i_{r-1}.
namespace hpa {

using Dims = std::vector<std::size_t>;
using Witness = std::vector<std::size_t>;

std::size_t volume(const Dims& dims);
std::vector<std::size_t> unflatten(std::size_t index, const Dims& dims);
std::size_t flatten(const std::vector<std::size_t>& index, const Dims& dims);

// Applies m to the block of legs [first, first + count) (taken together as a
// single leg of dimension m.cols()); the block is replaced by one leg of
// dimension m.rows().
Vec map_legs(const Vec& v, const Dims& dims, std::size_t first, std::size_t count, const Matrix& m);
inline Vec map_leg(const Vec& v, const Dims& dims, std::size_t leg, const Matrix& m) {
    return map_legs(v, dims, leg, 1, m);
}

// Output leg k is input leg perm[k].
Vec permute_legs(const Vec& v, const Dims& dims, const std::vector<std::size_t>& perm);

// Matrix whose j-th column is f(j).
Matrix matrix_of(Field f, std::size_t rows, std::size_t cols,
                 const std::function<Vec(std::size_t)>& column);

// Compares two sides of an identity on every basis input (flat index in
// lexicographic order). On the first mismatch returns the input multi-index
// followed by the multi-index of the first differing output coordinate.
std::optional<Witness> first_violation(const Dims& in, const Dims& out,
                                       const std::function<std::pair<Vec, Vec>(std::size_t)>& sides);

std::string witness_string(const Witness& w);

}  // namespace hpa
