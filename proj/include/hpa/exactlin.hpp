#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hpa {

// Either the rationals or a prime field F_p. Two scalars can only be combined
// when their fields compare equal; nothing is ever coerced.
class Field {
public:
    static Field rationals() noexcept { return Field(0); }
    static Field prime(std::uint64_t p);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) noexcept : p_(p) {}
    std::uint64_t p_;
};

class Scalar {
public:
    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return from_int(f, 1); }
    static Scalar from_int(Field f, long v);
    static Scalar from_fraction(Field f, long num, long den);
    static Scalar from_rational(Field f, const mpq_class& q);
    // Accepts "a", "a/b" and "r mod p".
    static Scalar parse(Field f, std::string_view text);

    Field field() const noexcept { return f_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const;
    Scalar inverse() const;
    // *this += a * b without a temporary Scalar.
    void add_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    // "p/q" with q omitted when 1, or "r mod p".
    std::string to_string() const;
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const noexcept { return r_; }

private:
    explicit Scalar(Field f) : f_(f) {}
    void require_same(const Scalar& o) const;

    Field f_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(Field f, std::size_t n);
Vec unit_vec(Field f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x
// Kronecker product of coordinate vectors, (i,j) -> i*|b| + j.
Vec tensor(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

class Matrix {
public:
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols);
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_ints(Field f, const std::vector<std::vector<long>>& rows);

    Field field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    void set_column(std::size_t j, const Vec& v);
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& s) const;
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field f_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct Rref {
    Matrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// A subspace of F^ambient. The basis columns are in reduced column-echelon
// form: column j has a 1 in row pivots()[j], zeros above it and zeros in the
// pivot rows of every other column.
class Subspace {
public:
    Subspace(Field f, std::size_t ambient);
    static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace column_space(const Matrix& m);
    static Subspace whole(Field f, std::size_t ambient);

    Field field() const noexcept { return basis_.field(); }
    std::size_t ambient() const noexcept { return basis_.rows(); }
    std::size_t dim() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }
    Vec vector(std::size_t j) const { return basis_.column(j); }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    std::optional<Vec> coordinates(const Vec& v) const;
    // dim x ambient; reads off coordinates of members (pivot-row selection).
    Matrix coordinate_map() const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots);
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersection(const Subspace& u, const Subspace& v);

}  // namespace hpa
