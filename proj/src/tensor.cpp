#include "hpa/tensor.hpp"

#include "hpa/errors.hpp"

namespace hpa {

std::size_t volume(const Dims& dims) {
    std::size_t v = 1;
    for (auto d : dims) v *= d;
    return v;
}

std::vector<std::size_t> unflatten(std::size_t index, const Dims& dims) {
    std::vector<std::size_t> out(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        out[k] = index % dims[k];
        index /= dims[k];
    }
    return out;
}

std::size_t flatten(const std::vector<std::size_t>& index, const Dims& dims) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) r = r * dims[k] + index[k];
    return r;
}

Vec map_legs(const Vec& v, const Dims& dims, std::size_t first, std::size_t count, const Matrix& m) {
    if (first + count > dims.size()) throw DimensionError("map_legs: leg range out of bounds");
    if (v.size() != volume(dims)) throw DimensionError("map_legs: tensor size mismatch");
    std::size_t pre = 1, mid = 1, post = 1;
    for (std::size_t k = 0; k < first; ++k) pre *= dims[k];
    for (std::size_t k = first; k < first + count; ++k) mid *= dims[k];
    for (std::size_t k = first + count; k < dims.size(); ++k) post *= dims[k];
    if (m.cols() != mid) throw DimensionError("map_legs: matrix does not fit the legs");
    std::size_t out = m.rows();
    Vec r = zero_vec(m.field(), pre * out * post);
    for (std::size_t p = 0; p < pre; ++p)
        for (std::size_t q = 0; q < mid; ++q)
            for (std::size_t s = 0; s < post; ++s) {
                const Scalar& x = v[(p * mid + q) * post + s];
                if (x.is_zero()) continue;
                for (std::size_t o = 0; o < out; ++o) {
                    const Scalar& a = m(o, q);
                    if (!a.is_zero()) r[(p * out + o) * post + s].add_product(a, x);
                }
            }
    return r;
}

Vec permute_legs(const Vec& v, const Dims& dims, const std::vector<std::size_t>& perm) {
    if (perm.size() != dims.size()) throw DimensionError("permute_legs: permutation size mismatch");
    if (v.size() != volume(dims)) throw DimensionError("permute_legs: tensor size mismatch");
    Dims out_dims(dims.size());
    for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims[perm[k]];
    Vec r = v;
    std::vector<std::size_t> out_idx(dims.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto idx = unflatten(i, dims);
        for (std::size_t k = 0; k < perm.size(); ++k) out_idx[k] = idx[perm[k]];
        r[flatten(out_idx, out_dims)] = v[i];
    }
    return r;
}

Matrix matrix_of(Field f, std::size_t rows, std::size_t cols,
                 const std::function<Vec(std::size_t)>& column) {
    Matrix m(f, rows, cols);
    for (std::size_t j = 0; j < cols; ++j) m.set_column(j, column(j));
    return m;
}

std::optional<Witness> first_violation(const Dims& in, const Dims& out,
                                       const std::function<std::pair<Vec, Vec>(std::size_t)>& sides) {
    std::size_t n_in = volume(in);
    std::size_t n_out = volume(out);
    for (std::size_t i = 0; i < n_in; ++i) {
        auto [lhs, rhs] = sides(i);
        if (lhs.size() != n_out || rhs.size() != n_out)
            throw DimensionError("identity sides have the wrong length");
        for (std::size_t o = 0; o < n_out; ++o) {
            if (lhs[o] == rhs[o]) continue;
            Witness w = unflatten(i, in);
            auto tail = unflatten(o, out);
            w.insert(w.end(), tail.begin(), tail.end());
            return w;
        }
    }
    return std::nullopt;
}

std::string witness_string(const Witness& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

}  // namespace hpa
