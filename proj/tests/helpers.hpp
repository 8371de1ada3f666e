#pragma once

#include <random>
#include <vector>

#include "hpa/exactlin.hpp"

namespace testing_util {

inline hpa::Field Q() { return hpa::Field::rationals(); }

inline hpa::Scalar q(long v) { return hpa::Scalar::from_int(Q(), v); }
inline hpa::Scalar q(long a, long b) { return hpa::Scalar::from_fraction(Q(), a, b); }

inline hpa::Vec vec(hpa::Field f, std::initializer_list<long> xs) {
    hpa::Vec v;
    for (long x : xs) v.push_back(hpa::Scalar::from_int(f, x));
    return v;
}
inline hpa::Vec vec(std::initializer_list<long> xs) { return vec(Q(), xs); }

inline hpa::Matrix mat(hpa::Field f, const std::vector<std::vector<long>>& rows) {
    return hpa::Matrix::from_ints(f, rows);
}
inline hpa::Matrix mat(const std::vector<std::vector<long>>& rows) { return mat(Q(), rows); }

// Entries drawn from {-2..2}/{1,2}.
inline hpa::Matrix random_matrix(std::mt19937& rng, hpa::Field f, std::size_t r, std::size_t c, int zero_bias = 0) {
    std::uniform_int_distribution<int> num(-2 - zero_bias, 2 + zero_bias), den(1, 2);
    hpa::Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            int a = num(rng);
            if (a < -2 || a > 2) a = 0;
            m(i, j) = hpa::Scalar::from_fraction(f, a, den(rng));
        }
    return m;
}

// Unit lower times unit upper, entries in {-1,0,1}: always invertible.
inline hpa::Matrix random_invertible(std::mt19937& rng, hpa::Field f, std::size_t n) {
    std::uniform_int_distribution<int> d(-1, 1);
    hpa::Matrix l = hpa::Matrix::identity(f, n), u = hpa::Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l(i, j) = hpa::Scalar::from_int(f, d(rng));
            u(j, i) = hpa::Scalar::from_int(f, d(rng));
        }
    return l * u;
}

}  // namespace testing_util
