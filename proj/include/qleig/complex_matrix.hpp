#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qleig/errors.hpp"

namespace qleig {

using Complex = std::complex<double>;

// Dense square complex matrix, row major. Just enough linear algebra for
// the quaternionic layer sitting on top: products, determinants via LU,
// linear solves and inverses.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {
        if (n == 0) throw DimensionMismatchError("matrix dimension must be at least 1");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n);
        for (std::size_t r = 0; r < n; ++r) m(r, r) = 1.0;
        return m;
    }

    std::size_t size() const { return n_; }

    Complex& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs) {
        require_same_size(rhs);
        for (std::size_t t = 0; t < a_.size(); ++t) a_[t] += rhs.a_[t];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& rhs) {
        require_same_size(rhs);
        for (std::size_t t = 0; t < a_.size(); ++t) a_[t] -= rhs.a_[t];
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        a.require_same_size(b);
        const std::size_t n = a.n_;
        ComplexMatrix out(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t m = 0; m < n; ++m) {
                const Complex arm = a(r, m);
                if (arm == Complex{}) continue;
                for (std::size_t c = 0; c < n; ++c) out(r, c) += arm * b(m, c);
            }
        return out;
    }

    friend ComplexMatrix operator*(const Complex& t, ComplexMatrix m) {
        for (auto& v : m.a_) v *= t;
        return m;
    }

private:
    void require_same_size(const ComplexMatrix& rhs) const {
        if (n_ != rhs.n_)
            throw DimensionMismatchError("complex matrix dimensions differ: " +
                                         std::to_string(n_) + " vs " + std::to_string(rhs.n_));
    }

    std::size_t n_;
    std::vector<Complex> a_;
};

// LU factorization with partial pivoting, PA = LU. A zero pivot column
// just marks the factorization singular; determinant() then reports an
// exact 0 while solve()/inverse() refuse.
class LuDecomposition {
public:
    explicit LuDecomposition(ComplexMatrix a)
        : lu_(std::move(a)), perm_(lu_.size()), parity_(1.0), singular_(false) {
        const std::size_t n = lu_.size();
        for (std::size_t r = 0; r < n; ++r) perm_[r] = r;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            double best = std::abs(lu_(col, col));
            for (std::size_t r = col + 1; r < n; ++r) {
                double cand = std::abs(lu_(r, col));
                if (cand > best) {
                    best = cand;
                    pivot = r;
                }
            }
            if (best == 0.0) {
                singular_ = true;
                continue;
            }
            if (pivot != col) {
                for (std::size_t c = 0; c < n; ++c) std::swap(lu_(pivot, c), lu_(col, c));
                std::swap(perm_[pivot], perm_[col]);
                parity_ = -parity_;
            }
            const Complex d = lu_(col, col);
            for (std::size_t r = col + 1; r < n; ++r) {
                const Complex f = lu_(r, col) / d;
                lu_(r, col) = f;
                if (f == Complex{}) continue;
                for (std::size_t c = col + 1; c < n; ++c) lu_(r, c) -= f * lu_(col, c);
            }
        }
    }

    bool singular() const { return singular_; }

    Complex determinant() const {
        if (singular_) return {};
        Complex d = parity_;
        for (std::size_t t = 0; t < lu_.size(); ++t) d *= lu_(t, t);
        return d;
    }

    std::vector<Complex> solve(const std::vector<Complex>& rhs) const {
        const std::size_t n = lu_.size();
        if (rhs.size() != n)
            throw DimensionMismatchError("right-hand side length does not match matrix size");
        if (singular_) throw SingularError("linear solve on a singular matrix");
        std::vector<Complex> x(n);
        for (std::size_t r = 0; r < n; ++r) {
            Complex s = rhs[perm_[r]];
            for (std::size_t c = 0; c < r; ++c) s -= lu_(r, c) * x[c];
            x[r] = s;
        }
        for (std::size_t r = n; r-- > 0;) {
            Complex s = x[r];
            for (std::size_t c = r + 1; c < n; ++c) s -= lu_(r, c) * x[c];
            x[r] = s / lu_(r, r);
        }
        return x;
    }

    ComplexMatrix inverse() const {
        const std::size_t n = lu_.size();
        ComplexMatrix out(n);
        std::vector<Complex> e(n);
        for (std::size_t col = 0; col < n; ++col) {
            e.assign(n, Complex{});
            e[col] = 1.0;
            std::vector<Complex> x = solve(e);
            for (std::size_t r = 0; r < n; ++r) out(r, col) = x[r];
        }
        return out;
    }

private:
    ComplexMatrix lu_;
    std::vector<std::size_t> perm_;
    double parity_;
    bool singular_;
};

inline Complex determinant(const ComplexMatrix& a) { return LuDecomposition(a).determinant(); }

inline Complex trace(const ComplexMatrix& a) {
    Complex t;
    for (std::size_t r = 0; r < a.size(); ++r) t += a(r, r);
    return t;
}

inline std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& v) {
    const std::size_t n = a.size();
    if (v.size() != n)
        throw DimensionMismatchError("vector length does not match matrix size");
    std::vector<Complex> out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r] += a(r, c) * v[c];
    return out;
}

}  // namespace qleig
