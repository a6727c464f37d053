#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "apseq/error.hpp"
#include "apseq/exactnum/gaussian_rational.hpp"
#include "apseq/exactnum/rational.hpp"

namespace apseq {

inline Rational scalar_norm(const Rational& r) { return r * r; }
inline Rational scalar_norm(const GaussianRational& z) { return z.norm(); }
inline double scalar_abs(const Rational& r) { return std::fabs(r.to_double()); }
inline double scalar_abs(const GaussianRational& z) { return z.abs_double(); }
inline bool scalar_is_real(const Rational&) { return true; }
inline bool scalar_is_real(const GaussianRational& z) { return z.is_real(); }

/// Dense column vector over an exact scalar field.
template <class S>
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : data_(dim) {}
    explicit Vec(std::vector<S> data) : data_(std::move(data)) {}
    Vec(std::initializer_list<S> init) : data_(init) {}

    std::size_t dim() const noexcept { return data_.size(); }
    const S& operator[](std::size_t i) const { return data_[i]; }
    S& operator[](std::size_t i) { return data_[i]; }
    const std::vector<S>& data() const noexcept { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    static Vec basis(std::size_t dim, std::size_t i) {
        Vec v(dim);
        v[i] = S(1);
        return v;
    }

    Vec operator-() const {
        Vec r(*this);
        for (auto& x : r.data_) x = -x;
        return r;
    }
    Vec& operator+=(const Vec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Vec& operator*=(const S& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(Vec a, const S& s) { return a *= s; }
    friend Vec operator*(const S& s, Vec a) { return a *= s; }
    friend bool operator==(const Vec&, const Vec&) = default;

private:
    void check_dim(const Vec& o) const {
        if (o.dim() != dim()) throw input_error("vector dimension mismatch");
    }
    std::vector<S> data_;
};

/// <x, y> = sum x_i conj(y_i)
template <class S>
S inner(const Vec<S>& x, const Vec<S>& y) {
    if (x.dim() != y.dim()) throw input_error("vector dimension mismatch");
    S r{};
    for (std::size_t i = 0; i < x.dim(); ++i) r += x[i] * conj(y[i]);
    return r;
}

/// ||x||_2^2, exact.
template <class S>
Rational norm_squared(const Vec<S>& x) {
    Rational r;
    for (const auto& v : x.data()) r += scalar_norm(v);
    return r;
}

/// Square matrix over an exact scalar field, stored row-major.
template <class S>
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    Matrix(std::initializer_list<std::initializer_list<S>> rows) : dim_(rows.size()) {
        data_.reserve(dim_ * dim_);
        for (const auto& row : rows) {
            if (row.size() != dim_) throw input_error("matrix must be square");
            for (const auto& x : row) data_.push_back(x);
        }
    }
    static Matrix from_rows(const std::vector<std::vector<S>>& rows) {
        Matrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw input_error("matrix must be square");
            for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = S(1);
        return m;
    }
    static Matrix zero(std::size_t dim) { return Matrix(dim); }

    std::size_t dim() const noexcept { return dim_; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    S& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Conjugate transpose.
    Matrix adjoint() const {
        Matrix r(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) r(j, i) = conj((*this)(i, j));
        return r;
    }

    /// Largest entry modulus, as a double.
    double max_abs() const {
        double m = 0.0;
        for (const auto& x : data_) m = std::max(m, scalar_abs(x));
        return m;
    }

    Matrix operator-() const {
        Matrix r(*this);
        for (auto& x : r.data_) x = -x;
        return r;
    }
    Matrix& operator+=(const Matrix& o) {
        check_dim(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_dim(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Matrix& operator*=(const S& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
    friend Matrix operator*(const S& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.check_dim(b);
        const std::size_t n = a.dim_;
        Matrix r(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const S& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
                }
            }
        return r;
    }
    friend Vec<S> operator*(const Matrix& a, const Vec<S>& v) {
        if (v.dim() != a.dim_) throw input_error("matrix-vector dimension mismatch");
        Vec<S> r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; ++i)
            for (std::size_t j = 0; j < a.dim_; ++j)
                if (!a(i, j).is_zero()) r[i] += a(i, j) * v[j];
        return r;
    }
    Matrix& operator*=(const Matrix& o) { return *this = *this * o; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    void check_dim(const Matrix& o) const {
        if (o.dim_ != dim_) throw input_error("matrix dimension mismatch");
    }
    std::size_t dim_ = 0;
    std::vector<S> data_;
};

/// Non-negative integer power; M^0 is the identity.
template <class S>
Matrix<S> pow(const Matrix<S>& m, std::int64_t e) {
    if (e < 0) throw input_error("negative matrix power");
    Matrix<S> result = Matrix<S>::identity(m.dim());
    Matrix<S> base = m;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

/// Block-diagonal sum A (+) B.
template <class S>
Matrix<S> direct_sum(const Matrix<S>& a, const Matrix<S>& b) {
    Matrix<S> r(a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) r(a.dim() + i, a.dim() + j) = b(i, j);
    return r;
}

template <class S>
bool commute(const Matrix<S>& a, const Matrix<S>& b) {
    return a * b == b * a;
}

using ExactMatrix = Matrix<GaussianRational>;
using RationalVector = Vec<Rational>;
using ComplexVector = Vec<GaussianRational>;

}  // namespace apseq
