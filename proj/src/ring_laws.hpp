#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "hpa/presentations.hpp"
#include "hpa/tensor.hpp"

namespace hpa::detail {

inline std::optional<Witness> associativity(const AlgebraPresentation& p, const Matrix& inputs) {
    std::size_t k = inputs.cols();
    return first_violation({k, k, k}, {p.dim()}, [&](std::size_t idx) {
        Vec x = inputs.column(idx / (k * k)), y = inputs.column(idx / k % k), z = inputs.column(idx % k);
        return std::pair<Vec, Vec>{p.multiply(p.multiply(x, y), z), p.multiply(x, p.multiply(y, z))};
    });
}

// r = 1 r = r 1 style laws: compares (u r, r u) with (target(r), target(r)).
inline std::optional<Witness> unit_law(const AlgebraPresentation& p, const Vec& u, const Matrix& inputs,
                                       const std::function<Vec(const Vec&)>& target) {
    std::size_t d = p.dim();
    return first_violation({inputs.cols()}, {2, d}, [&](std::size_t i) {
        Vec r = inputs.column(i);
        Vec lhs = p.multiply(u, r), rr = p.multiply(r, u);
        lhs.insert(lhs.end(), rr.begin(), rr.end());
        Vec t = target(r);
        Vec rhs = t;
        rhs.insert(rhs.end(), t.begin(), t.end());
        return std::pair<Vec, Vec>{lhs, rhs};
    });
}

}  // namespace hpa::detail
