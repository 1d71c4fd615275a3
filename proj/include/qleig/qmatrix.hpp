#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "qleig/complex_matrix.hpp"
#include "qleig/errors.hpp"
#include "qleig/quaternion.hpp"

namespace qleig {

// Square matrix over the quaternions. Entries act on column vectors from
// the left, so (A v)_r = sum_c A(r,c) * v[c]; scalar multiples keep track
// of the side they act on.
class QMatrix {
public:
    explicit QMatrix(std::size_t n) : n_(n), e_(n * n) {
        if (n == 0) throw DimensionMismatchError("matrix dimension must be at least 1");
    }

    static QMatrix identity(std::size_t n) {
        QMatrix m(n);
        for (std::size_t r = 0; r < n; ++r) m(r, r) = Quaternion::one();
        return m;
    }

    static QMatrix diagonal(const std::vector<Quaternion>& d) {
        QMatrix m(d.size());
        for (std::size_t r = 0; r < d.size(); ++r) m(r, r) = d[r];
        return m;
    }

    static QMatrix from_rows(std::initializer_list<std::initializer_list<Quaternion>> rows) {
        QMatrix m(rows.size());
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != rows.size())
                throw DimensionMismatchError("row length does not match matrix dimension");
            std::size_t c = 0;
            for (const auto& q : row) m(r, c++) = q;
            ++r;
        }
        return m;
    }

    std::size_t size() const { return n_; }

    Quaternion& operator()(std::size_t r, std::size_t c) { return e_[r * n_ + c]; }
    const Quaternion& operator()(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }

    QMatrix& operator+=(const QMatrix& rhs) {
        require_same_size(rhs);
        for (std::size_t t = 0; t < e_.size(); ++t) e_[t] += rhs.e_[t];
        return *this;
    }
    QMatrix& operator-=(const QMatrix& rhs) {
        require_same_size(rhs);
        for (std::size_t t = 0; t < e_.size(); ++t) e_[t] -= rhs.e_[t];
        return *this;
    }

    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
        a.require_same_size(b);
        const std::size_t n = a.n_;
        QMatrix out(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t m = 0; m < n; ++m) {
                const Quaternion& arm = a(r, m);
                if (arm.is_zero()) continue;
                for (std::size_t c = 0; c < n; ++c) out(r, c) += arm * b(m, c);
            }
        return out;
    }

    // Left scalar action q * A and right scalar action A * q. These differ
    // over the quaternions, so both are spelled out.
    friend QMatrix operator*(const Quaternion& q, QMatrix a) {
        for (auto& v : a.e_) v = q * v;
        return a;
    }
    friend QMatrix operator*(QMatrix a, const Quaternion& q) {
        for (auto& v : a.e_) v = v * q;
        return a;
    }
    friend QMatrix operator*(double t, QMatrix a) {
        for (auto& v : a.e_) v = t * v;
        return a;
    }

private:
    void require_same_size(const QMatrix& rhs) const {
        if (n_ != rhs.n_)
            throw DimensionMismatchError("matrix dimensions differ: " + std::to_string(n_) +
                                         " vs " + std::to_string(rhs.n_));
    }

    std::size_t n_;
    std::vector<Quaternion> e_;
};

inline std::vector<Quaternion> operator*(const QMatrix& a, const std::vector<Quaternion>& v) {
    const std::size_t n = a.size();
    if (v.size() != n)
        throw DimensionMismatchError("vector length does not match matrix dimension");
    std::vector<Quaternion> out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r] += a(r, c) * v[c];
    return out;
}

inline double max_entry_norm(const QMatrix& a) {
    double best = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) best = std::max(best, norm(a(r, c)));
    return best;
}

inline bool approx_equal(const QMatrix& a, const QMatrix& b, double tol = kDefaultTol) {
    if (a.size() != b.size()) return false;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c)
            if (!approx_equal(a(r, c), b(r, c), tol)) return false;
    return true;
}

// Complex form of A: writing each entry as q = alpha + j beta with
// alpha = w + x i and beta = y - z i splits A = X + j Y, and
//
//     c(A) = [ X        -conj(Y) ]
//            [ Y         conj(X) ]   in M(2n, C).
//
// c is a ring homomorphism, which is what makes everything downstream
// (determinants, inverses, null vectors) transportable.
inline ComplexMatrix complex_form(const QMatrix& a) {
    const std::size_t n = a.size();
    ComplexMatrix out(2 * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Quaternion& q = a(r, c);
            const Complex alpha(q.w, q.x);
            const Complex beta(q.y, -q.z);
            out(r, c) = alpha;
            out(r, n + c) = -std::conj(beta);
            out(n + r, c) = beta;
            out(n + r, n + c) = std::conj(alpha);
        }
    return out;
}

// Inverse of complex_form. Only the left block column is read; the right
// half of a matrix in the image of c is redundant.
inline QMatrix from_complex_form(const ComplexMatrix& m) {
    if (m.size() % 2 != 0)
        throw DimensionMismatchError("complex form must have even dimension");
    const std::size_t n = m.size() / 2;
    QMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Complex alpha = m(r, c);
            const Complex beta = m(n + r, c);
            out(r, c) = {alpha.real(), alpha.imag(), beta.real(), -beta.imag()};
        }
    return out;
}

// Same identification for vectors: u = [u1; u2] in C^{2n} corresponds to
// the quaternion vector with components u1_l + j u2_l, and c(M) u = 0
// exactly when M v = 0.
inline std::vector<Quaternion> from_complex_vector(const std::vector<Complex>& u) {
    if (u.size() % 2 != 0)
        throw DimensionMismatchError("complex vector must have even length");
    const std::size_t n = u.size() / 2;
    std::vector<Quaternion> v(n);
    for (std::size_t l = 0; l < n; ++l)
        v[l] = {u[l].real(), u[l].imag(), u[n + l].real(), -u[n + l].imag()};
    return v;
}

namespace detail {

// det c(A) is real and nonnegative in exact arithmetic; enforce that
// numerically and hand back the real part.
inline double real_nonneg_det(const Complex& d) {
    if (std::abs(d.imag()) > 1e-8 * std::max(1.0, std::abs(d)))
        throw NumericalInstabilityError(
            "determinant of a complex form came back with imaginary part " +
            double_to_string(d.imag()));
    return std::max(d.real(), 0.0);
}

}  // namespace detail

// Study determinant sdet(A) = det(c(A))^{1/2}. Multiplicative, zero
// exactly on the singular matrices, and equal to the product of the
// diagonal entry norms on triangular matrices.
inline double sdet(const QMatrix& a) {
    return std::sqrt(detail::real_nonneg_det(determinant(complex_form(a))));
}

// Scale-aware cutoff below which a Study determinant is treated as zero.
inline double singular_threshold(const QMatrix& a) {
    return 1e-9 * std::pow(1.0 + max_entry_norm(a), static_cast<double>(a.size()));
}

inline QMatrix inverse(const QMatrix& a) {
    LuDecomposition lu(complex_form(a));
    const double s = std::sqrt(detail::real_nonneg_det(lu.determinant()));
    if (s <= singular_threshold(a))
        throw SingularError("matrix is singular within tolerance (sdet = " +
                            detail::double_to_string(s) + ", threshold = " +
                            detail::double_to_string(singular_threshold(a)) + ")");
    return from_complex_form(lu.inverse());
}

// Conjugation by a permutation: B(s, t) = A(perm[s], perm[t]), i.e.
// B = P A P^{-1} for the corresponding 0/1 matrix P. Being real, P
// commutes with every quaternion scalar.
inline QMatrix perm_similar(const QMatrix& a, const std::vector<std::size_t>& perm) {
    const std::size_t n = a.size();
    if (perm.size() != n)
        throw DimensionMismatchError("permutation length does not match matrix dimension");
    std::vector<bool> seen(n, false);
    for (std::size_t s : perm) {
        if (s >= n || seen[s])
            throw DimensionMismatchError("index list is not a permutation of 0.." +
                                         std::to_string(n - 1));
        seen[s] = true;
    }
    QMatrix out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = a(perm[r], perm[c]);
    return out;
}

}  // namespace qleig
