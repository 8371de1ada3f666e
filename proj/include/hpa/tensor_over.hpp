#pragma once

#include <vector>

#include "hpa/exactlin.hpp"

namespace hpa {

// A vector space with left and right actions of a finite-dimensional algebra,
// one matrix per basis element of the algebra.
struct Bimodule {
    std::size_t dim = 0;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    Matrix left_action(const Vec& a) const;
    Matrix right_action(const Vec& a) const;
};

// X (x)_T Y realized as (X (x) Y) / span{ x t (x) y - x (x) t y }, for t running
// over a basis of T given by its action matrices. Coordinates of the quotient
// are the non-pivot positions of the reduced relation basis; the section puts
// a quotient vector back on exactly those positions.
class TensorOverSub {
public:
    TensorOverSub(Field f, std::size_t left_dim, std::size_t right_dim,
                  const std::vector<Matrix>& right_on_left, const std::vector<Matrix>& left_on_right);

    std::size_t left_dim() const noexcept { return left_dim_; }
    std::size_t right_dim() const noexcept { return right_dim_; }
    std::size_t dim() const noexcept { return free_.size(); }
    const Subspace& relations() const noexcept { return relations_; }
    const Matrix& projection() const noexcept { return projection_; }
    const Matrix& section() const noexcept { return section_; }

    Vec project(const Vec& v) const { return projection_ * v; }
    Vec lift(const Vec& q) const { return section_ * q; }
    Vec project_pure(const Vec& x, const Vec& y) const { return project(tensor(x, y)); }

private:
    std::size_t left_dim_;
    std::size_t right_dim_;
    Subspace relations_;
    std::vector<std::size_t> free_;
    Matrix projection_;
    Matrix section_;
};

// Shorthand for the bimodule case X (x)_A Y.
TensorOverSub tensor_over(const Bimodule& x, const Bimodule& y);

}  // namespace hpa
