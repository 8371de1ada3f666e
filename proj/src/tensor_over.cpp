#include "hpa/tensor_over.hpp"

#include "hpa/errors.hpp"

namespace hpa {

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vec& a, std::size_t dim, Field f) {
    if (a.size() != mats.size()) throw DimensionError("action: coefficient count mismatch");
    Matrix r(f, dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) r = r + mats[i].scaled(a[i]);
    return r;
}

}  // namespace

Matrix Bimodule::left_action(const Vec& a) const {
    return combine(left, a, dim, a.at(0).field());
}

Matrix Bimodule::right_action(const Vec& a) const {
    return combine(right, a, dim, a.at(0).field());
}

TensorOverSub::TensorOverSub(Field f, std::size_t left_dim, std::size_t right_dim,
                             const std::vector<Matrix>& right_on_left, const std::vector<Matrix>& left_on_right)
    : left_dim_(left_dim), right_dim_(right_dim), relations_(f, left_dim * right_dim),
      projection_(f, 0, 0), section_(f, 0, 0) {
    if (right_on_left.size() != left_on_right.size())
        throw DimensionError("tensor over a subalgebra: action counts differ");
    std::size_t n = left_dim * right_dim;
    std::vector<Vec> rel;
    for (std::size_t t = 0; t < right_on_left.size(); ++t) {
        const Matrix& rt = right_on_left[t];
        const Matrix& lt = left_on_right[t];
        if (rt.rows() != left_dim || rt.cols() != left_dim || lt.rows() != right_dim || lt.cols() != right_dim)
            throw DimensionError("tensor over a subalgebra: action matrix shape mismatch");
        for (std::size_t i = 0; i < left_dim; ++i)
            for (std::size_t j = 0; j < right_dim; ++j) {
                Vec v = zero_vec(f, n);
                for (std::size_t k = 0; k < left_dim; ++k)
                    if (!rt(k, i).is_zero()) v[k * right_dim + j] += rt(k, i);
                for (std::size_t k = 0; k < right_dim; ++k)
                    if (!lt(k, j).is_zero()) v[i * right_dim + k] -= lt(k, j);
                if (!is_zero(v)) rel.push_back(std::move(v));
            }
    }
    relations_ = Subspace::span(f, n, rel);
    std::vector<bool> pivot(n, false);
    for (auto p : relations_.pivots()) pivot[p] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!pivot[i]) free_.push_back(i);
    projection_ = Matrix(f, free_.size(), n);
    section_ = Matrix(f, n, free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k) {
        projection_(k, free_[k]) = Scalar::one(f);
        section_(free_[k], k) = Scalar::one(f);
    }
    const Matrix& b = relations_.basis();
    for (std::size_t c = 0; c < relations_.dim(); ++c) {
        std::size_t p = relations_.pivots()[c];
        for (std::size_t k = 0; k < free_.size(); ++k)
            if (!b(free_[k], c).is_zero()) projection_(k, p) = -b(free_[k], c);
    }
}

TensorOverSub tensor_over(const Bimodule& x, const Bimodule& y) {
    if (x.right.empty()) throw DimensionError("tensor over an algebra with no basis");
    return TensorOverSub(x.right[0].field(), x.dim, y.dim, x.right, y.left);
}

}  // namespace hpa
