#include "hpa/exactlin.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hpa/errors.hpp"

namespace hpa {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s) {
    s = trim(s);
    if (s.empty()) throw InputError("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InputError("malformed integer literal '" + std::string(s) + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw InputError("malformed integer literal '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return mpz_class(digits, 10);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32)) throw InputError("prime modulus must be below 2^32");
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    return Field(p);
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::from_int(Field f, long v) {
    Scalar s(f);
    if (f.is_rational())
        s.q_ = v;
    else
        s.r_ = reduce(mpz_class(v), f.characteristic());
    return s;
}

Scalar Scalar::from_fraction(Field f, long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = q;
        s.q_.canonicalize();
        return s;
    }
    std::uint64_t p = f.characteristic();
    std::uint64_t den = reduce(q.get_den(), p);
    if (den == 0) throw std::domain_error("denominator vanishes in " + f.to_string());
    s.r_ = reduce(q.get_num(), p) * mod_pow(den, p - 2, p) % p;
    return s;
}

Scalar Scalar::parse(Field f, std::string_view text) {
    std::string_view t = trim(text);
    auto mod = t.find("mod");
    if (mod != std::string_view::npos) {
        mpz_class r = parse_integer(t.substr(0, mod));
        mpz_class p = parse_integer(t.substr(mod + 3));
        if (f.is_rational() || p != static_cast<unsigned long>(f.characteristic()))
            throw FieldMismatch("scalar '" + std::string(t) + "' does not belong to " + f.to_string());
        return from_rational(f, mpq_class(r));
    }
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return from_rational(f, mpq_class(parse_integer(t)));
    mpz_class num = parse_integer(t.substr(0, slash));
    mpz_class den = parse_integer(t.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(t) + "'");
    return from_rational(f, mpq_class(num, den));
}

bool Scalar::is_zero() const noexcept {
    return f_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const noexcept {
    return f_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::require_same(const Scalar& o) const {
    if (!(f_ == o.f_))
        throw FieldMismatch("cannot combine scalars from " + f_.to_string() + " and " +
                            o.f_.to_string());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same(o);
    if (f_.is_rational())
        q_ += o.q_;
    else
        r_ = (r_ + o.r_) % f_.characteristic();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same(o);
    if (f_.is_rational())
        q_ -= o.q_;
    else
        r_ = (r_ + f_.characteristic() - o.r_) % f_.characteristic();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same(o);
    if (f_.is_rational())
        q_ *= o.q_;
    else
        r_ = r_ * o.r_ % f_.characteristic();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same(o);
    return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(f_);
    if (f_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = (f_.characteristic() - r_) % f_.characteristic();
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar s(f_);
    if (f_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = mod_pow(r_, f_.characteristic() - 2, f_.characteristic());
    return s;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    require_same(a);
    require_same(b);
    if (f_.is_rational()) {
        if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
        q_ += a.q_ * b.q_;
    } else {
        r_ = (r_ + a.r_ * b.r_) % f_.characteristic();
    }
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.f_ == b.f_)) return false;
    return a.f_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
    if (!f_.is_rational())
        return std::to_string(r_) + " mod " + std::to_string(f_.characteristic());
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Vec zero_vec(Field f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(Field f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= s;
    return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (y.size() != x.size()) throw DimensionError("vector length mismatch");
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (!x[i].is_zero()) y[i].add_product(a, x[i]);
}

Vec tensor(const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Field f = a[0].field();
    Vec r = zero_vec(f, a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
    }
    return r;
}

std::string to_string(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + ")";
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(rows[i][j].field() == f)) throw FieldMismatch("matrix entry in wrong field");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from_int(f, rows[i][j]);
    }
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_column(std::size_t j, const Vec& v) {
    if (v.size() != rows_) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) {
        if (!(v[i].field() == f_)) throw FieldMismatch("column entry in wrong field");
        (*this)(i, j) = v[i];
    }
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(f_, rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (!(f_ == o.f_)) throw FieldMismatch("matrix product across fields");
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) r(i, j).add_product(a, b);
            }
        }
    return r;
}

Vec Matrix::operator*(const Vec& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    Vec r = zero_vec(f_, rows_);
    for (std::size_t k = 0; k < cols_; ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = (*this)(i, k);
            if (!a.is_zero()) r[i].add_product(a, v[k]);
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("kron across fields");
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& s = a(i, j);
            if (s.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
        }
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    if (!(a.field() == b.field())) throw FieldMismatch("hstack across fields");
    Matrix r(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    if (!(a.field() == b.field())) throw FieldMismatch("vstack across fields");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) r(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) r(a.rows() + i, j) = b(i, j);
    }
    return r;
}

Rref rref(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t p = row;
        while (p < r.rows() && r(p, col).is_zero()) ++p;
        if (p == r.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(row, j));
        Scalar inv = r(row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, col).is_zero()) continue;
            Scalar f = -r(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                if (!r(row, j).is_zero()) r(i, j).add_product(f, r(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), pivots.size(), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
    Matrix aug = hstack(m, Matrix::from_columns(m.field(), m.rows(), {b}));
    Rref r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
    std::size_t n = m.rows();
    Rref r = rref(hstack(m, Matrix::identity(m.field(), n)));
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
    return inv;
}

Subspace::Subspace(Field f, std::size_t ambient) : basis_(f, ambient, 0) {}

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return Subspace(f, ambient);
    Rref r = rref(Matrix::from_rows(f, ambient, vectors));
    Matrix basis(f, ambient, r.rank);
    for (std::size_t j = 0; j < r.rank; ++j)
        for (std::size_t i = 0; i < ambient; ++i) basis(i, j) = r.reduced(j, i);
    return Subspace(std::move(basis), std::move(r.pivots));
}

Subspace Subspace::column_space(const Matrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return span(m.field(), m.rows(), cols);
}

Subspace Subspace::whole(Field f, std::size_t ambient) {
    std::vector<std::size_t> piv(ambient);
    for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
    return Subspace(Matrix::identity(f, ambient), std::move(piv));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient()) throw DimensionError("subspace membership: length mismatch");
    Vec c = zero_vec(field(), dim());
    Vec rest = v;
    for (std::size_t j = 0; j < dim(); ++j) {
        c[j] = v[pivots_[j]];
        axpy(rest, -c[j], basis_.column(j));
    }
    if (!is_zero(rest)) return std::nullopt;
    return c;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t j = 0; j < other.dim(); ++j)
        if (!contains(other.vector(j))) return false;
    return true;
}

Matrix Subspace::coordinate_map() const {
    Matrix m(field(), dim(), ambient());
    for (std::size_t j = 0; j < dim(); ++j) m(j, pivots_[j]) = Scalar::one(field());
    return m;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
}

Subspace kernel_basis(const Matrix& m) {
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> vecs;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v = unit_vec(m.field(), m.cols(), free);
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
        vecs.push_back(std::move(v));
    }
    return Subspace::span(m.field(), m.cols(), vecs);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw DimensionError("subspace sum: ambient mismatch");
    if (!(u.field() == v.field())) throw FieldMismatch("subspace sum across fields");
    std::vector<Vec> vecs;
    for (std::size_t j = 0; j < u.dim(); ++j) vecs.push_back(u.vector(j));
    for (std::size_t j = 0; j < v.dim(); ++j) vecs.push_back(v.vector(j));
    return Subspace::span(u.field(), u.ambient(), vecs);
}

Subspace intersection(const Subspace& u, const Subspace& v) {
    if (u.ambient() != v.ambient()) throw DimensionError("subspace intersection: ambient mismatch");
    if (!(u.field() == v.field())) throw FieldMismatch("subspace intersection across fields");
    Matrix stacked = hstack(u.basis(), v.basis().scaled(-Scalar::one(u.field())));
    Subspace k = kernel_basis(stacked);
    std::vector<Vec> vecs;
    for (std::size_t j = 0; j < k.dim(); ++j) {
        Vec c = k.vector(j);
        Vec cu(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(u.dim()));
        vecs.push_back(u.basis() * cu);
    }
    return Subspace::span(u.field(), u.ambient(), vecs);
}

}  // namespace hpa
