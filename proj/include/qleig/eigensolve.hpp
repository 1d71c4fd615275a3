#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qleig/complex_matrix.hpp"
#include "qleig/errors.hpp"
#include "qleig/qmatrix.hpp"
#include "qleig/quaternion.hpp"

namespace qleig {

// Real polynomial p(z) = sum coeffs[t] z^t. The characteristic polynomial
// of a complex form has even degree and real coefficients, and with the
// convention p(z) = det(z Id - c(A)) it is monic.
struct RealPoly {
    std::vector<double> coeffs;

    std::size_t degree() const { return coeffs.size() - 1; }

    Complex operator()(const Complex& z) const {
        Complex acc;
        for (std::size_t t = coeffs.size(); t-- > 0;) acc = acc * z + coeffs[t];
        return acc;
    }

    // sum |c_t| r^t, the natural magnitude scale for residuals at |z| = r.
    double magnitude_at(double r) const {
        double acc = 0.0;
        for (std::size_t t = coeffs.size(); t-- > 0;) acc = acc * r + std::fabs(coeffs[t]);
        return acc;
    }
};

// Characteristic polynomial of the 2n x 2n complex form of A by the
// Faddeev-LeVerrier recursion:
//   B_0 = Id;  c_{m-k} = -tr(M B_{k-1}) / k;  B_k = M B_{k-1} + c_{m-k} Id.
// The coefficients are provably real; imaginary residue above 1e-8
// relative is treated as a failure rather than silently dropped.
inline RealPoly complex_char_poly(const QMatrix& a) {
    const ComplexMatrix m = complex_form(a);
    const std::size_t deg = m.size();
    std::vector<Complex> c(deg + 1);
    c[deg] = 1.0;
    ComplexMatrix b = ComplexMatrix::identity(deg);
    for (std::size_t k = 1; k <= deg; ++k) {
        b = m * b;
        const Complex ck = -trace(b) * (1.0 / static_cast<double>(k));
        c[deg - k] = ck;
        for (std::size_t r = 0; r < deg; ++r) b(r, r) += ck;
    }
    RealPoly p;
    p.coeffs.resize(deg + 1);
    for (std::size_t t = 0; t <= deg; ++t) {
        if (std::abs(c[t].imag()) > 1e-8 * std::max(1.0, std::abs(c[t])))
            throw NumericalInstabilityError(
                "characteristic polynomial coefficient " + std::to_string(t) +
                " has imaginary part " + detail::double_to_string(c[t].imag()));
        p.coeffs[t] = c[t].real();
    }
    return p;
}

// Plugs A into its complex form's characteristic polynomial, with
// quaternionic matrix powers (real coefficients commute with everything).
// The result is the zero matrix for every A; the returned residual is the
// largest entry norm actually obtained.
inline double right_hc_check(const QMatrix& a) {
    const RealPoly p = complex_char_poly(a);
    const QMatrix id = QMatrix::identity(a.size());
    QMatrix acc = p.coeffs.back() * id;
    for (std::size_t t = p.coeffs.size() - 1; t-- > 0;) {
        acc = acc * a;
        acc += p.coeffs[t] * id;
    }
    return max_entry_norm(acc);
}

// Durand-Kerner simultaneous root iteration. Two stopping rules, either
// suffices: every step is below 1e-12 relative, or every residual |p(z)|
// is below 1e-13 of the polynomial's magnitude at |z| (multiple roots
// stall the step criterion long before the residual one gives out).
inline std::vector<Complex> durand_kerner(const RealPoly& p) {
    const std::size_t deg = p.degree();
    if (p.coeffs.back() == 0.0)
        throw ConvergenceFailureError("leading polynomial coefficient is zero");
    std::vector<double> mc(p.coeffs);
    for (double& v : mc) v /= p.coeffs.back();
    const RealPoly monic{mc};

    double radius = 0.0;
    for (std::size_t t = 0; t < deg; ++t) radius = std::max(radius, std::fabs(mc[t]));
    radius += 1.0;  // Cauchy bound: all roots lie in |z| < radius

    std::vector<Complex> z(deg);
    const Complex spread(0.4, 0.9);
    Complex seed = 1.0;
    for (std::size_t t = 0; t < deg; ++t) {
        seed *= spread;
        z[t] = std::max(1.0, radius) * seed;
    }

    for (int iter = 0; iter < 500; ++iter) {
        double worst_step = 0.0;
        for (std::size_t t = 0; t < deg; ++t) {
            Complex denom = 1.0;
            for (std::size_t l = 0; l < deg; ++l)
                if (l != t) denom *= z[t] - z[l];
            if (denom == Complex{}) {
                // collided points; nudge apart and retry next sweep
                z[t] += Complex(1e-8 * (1.0 + std::abs(z[t])), 0.0);
                worst_step = 1.0;
                continue;
            }
            const Complex step = monic(z[t]) / denom;
            z[t] -= step;
            worst_step = std::max(worst_step, std::abs(step) / (1.0 + std::abs(z[t])));
        }
        if (worst_step <= 1e-12) return z;
        bool residual_ok = true;
        for (std::size_t t = 0; t < deg && residual_ok; ++t)
            residual_ok = std::abs(monic(z[t])) <= 1e-13 * monic.magnitude_at(std::abs(z[t]));
        if (residual_ok) return z;
    }
    throw ConvergenceFailureError("root iteration did not settle within 500 sweeps");
}

// A spectrum plus per-value residuals. kind is "left" (residuals are
// sdet(A - lambda Id)) or "right-representative" (residuals are |p(z)| at
// the representative).
struct SpectrumResult {
    std::string kind;
    std::vector<Quaternion> values;
    std::vector<double> residuals;
};

namespace detail {

inline bool lex_less(const Quaternion& a, const Quaternion& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

}  // namespace detail

// Right eigenvalues up to similarity: the right spectrum consists of full
// conjugacy classes q z q^-1, so only the complex representatives with
// nonnegative imaginary part are listed. They are the eigenvalues of the
// complex form, which come in conjugate pairs; each pair is averaged into
// one representative.
inline SpectrumResult right_eigenvalues(const QMatrix& a) {
    const RealPoly p = complex_char_poly(a);
    std::vector<Complex> roots = durand_kerner(p);

    std::vector<bool> used(roots.size(), false);
    std::vector<Quaternion> reps;
    for (std::size_t pair = 0; pair < roots.size() / 2; ++pair) {
        std::size_t pick = roots.size();
        for (std::size_t t = 0; t < roots.size(); ++t)
            if (!used[t] &&
                (pick == roots.size() ||
                 std::abs(roots[t].imag()) > std::abs(roots[pick].imag())))
                pick = t;
        used[pick] = true;
        const Complex target = std::conj(roots[pick]);
        std::size_t mate = roots.size();
        for (std::size_t t = 0; t < roots.size(); ++t)
            if (!used[t] && (mate == roots.size() ||
                             std::abs(roots[t] - target) < std::abs(roots[mate] - target)))
                mate = t;
        used[mate] = true;
        reps.push_back({0.5 * (roots[pick].real() + roots[mate].real()),
                        0.5 * (std::abs(roots[pick].imag()) + std::abs(roots[mate].imag())),
                        0.0, 0.0});
    }
    std::sort(reps.begin(), reps.end(), detail::lex_less);

    SpectrumResult out{"right-representative", std::move(reps), {}};
    out.residuals.reserve(out.values.size());
    for (const Quaternion& v : out.values)
        out.residuals.push_back(std::abs(p(Complex(v.w, v.x))));
    return out;
}

// Null-vector certificate for a claimed left eigenvalue: a unit vector v
// with residual = |A v - lambda v|. Obtained by inverse iteration on the
// complex form (an exactly singular factorization gets a tiny diagonal
// shift first); several deterministic starting vectors are tried and the
// best kept.
struct NullVectorCertificate {
    std::vector<Quaternion> vector;
    double residual;
};

inline NullVectorCertificate certify_null_vector(const QMatrix& a, const Quaternion& lambda) {
    const std::size_t n = a.size();
    const ComplexMatrix m = complex_form(a - lambda * QMatrix::identity(n));
    double entry_scale = 0.0;
    for (std::size_t r = 0; r < 2 * n; ++r)
        for (std::size_t c = 0; c < 2 * n; ++c) entry_scale = std::max(entry_scale, std::abs(m(r, c)));

    LuDecomposition lu(m);
    if (lu.singular()) {
        ComplexMatrix shifted = m;
        const double delta = 1e-13 * (1.0 + entry_scale);
        for (std::size_t r = 0; r < 2 * n; ++r) shifted(r, r) += delta;
        lu = LuDecomposition(shifted);
        if (lu.singular())
            throw NumericalInstabilityError("could not factor the shifted complex form");
    }

    auto normalize = [](std::vector<Complex>& u) {
        double s = 0.0;
        for (const Complex& v : u) s += std::norm(v);
        s = std::sqrt(s);
        if (s > 0.0)
            for (Complex& v : u) v /= s;
        return s;
    };

    std::vector<Complex> best;
    double best_residual = -1.0;
    for (std::size_t attempt = 0; attempt <= 2 * n; ++attempt) {
        std::vector<Complex> u(2 * n);
        if (attempt == 0)
            u.assign(2 * n, Complex(1.0, 0.0));
        else
            u[attempt - 1] = 1.0;
        normalize(u);
        bool degenerate = false;
        for (int it = 0; it < 3 && !degenerate; ++it) {
            u = lu.solve(u);
            degenerate = normalize(u) == 0.0;
        }
        if (degenerate) continue;
        std::vector<Complex> image = m * u;
        double res = 0.0;
        for (const Complex& v : image) res += std::norm(v);
        res = std::sqrt(res);
        if (best_residual < 0.0 || res < best_residual) {
            best_residual = res;
            best = std::move(u);
        }
        if (best_residual <= 1e-14 * static_cast<double>(2 * n) * (1.0 + entry_scale)) break;
    }
    if (best_residual < 0.0)
        throw NumericalInstabilityError("inverse iteration kept collapsing to zero");
    return {from_complex_vector(best), best_residual};
}

namespace detail {

// Uniform double in [0, 1) straight from the engine's bits, so results do
// not depend on the standard library's distribution implementation.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Nelder-Mead over R^4. Plain textbook simplex: reflect / expand /
// contract / shrink with the usual coefficients. Stops on the target
// value, on simplex collapse, or after max_iter sweeps.
template <typename F>
std::array<double, 4> nelder_mead(const F& f, std::array<double, 4> start, double step,
                                  int max_iter, double f_stop, double& f_best) {
    constexpr int kDim = 4;
    std::array<std::array<double, 4>, kDim + 1> xs;
    std::array<double, kDim + 1> fs;
    xs[0] = start;
    fs[0] = f(start);
    for (int d = 0; d < kDim; ++d) {
        xs[d + 1] = start;
        xs[d + 1][d] += step;
        fs[d + 1] = f(xs[d + 1]);
    }

    auto order = [&] {
        std::array<int, kDim + 1> idx{0, 1, 2, 3, 4};
        std::sort(idx.begin(), idx.end(), [&](int l, int r) { return fs[l] < fs[r]; });
        std::array<std::array<double, 4>, kDim + 1> nx;
        std::array<double, kDim + 1> nf;
        for (int t = 0; t <= kDim; ++t) {
            nx[t] = xs[idx[t]];
            nf[t] = fs[idx[t]];
        }
        xs = nx;
        fs = nf;
    };
    auto blend = [](const std::array<double, 4>& a, const std::array<double, 4>& b, double t) {
        std::array<double, 4> out;
        for (int d = 0; d < 4; ++d) out[d] = a[d] + t * (b[d] - a[d]);
        return out;
    };

    for (int iter = 0; iter < max_iter; ++iter) {
        order();
        if (fs[0] <= f_stop) break;
        double diameter = 0.0, base = 0.0;
        for (int d = 0; d < kDim; ++d) {
            base = std::max(base, std::fabs(xs[0][d]));
            for (int t = 1; t <= kDim; ++t)
                diameter = std::max(diameter, std::fabs(xs[t][d] - xs[0][d]));
        }
        if (diameter <= 1e-12 * (1.0 + base)) break;

        std::array<double, 4> centroid{};
        for (int t = 0; t < kDim; ++t)
            for (int d = 0; d < kDim; ++d) centroid[d] += xs[t][d] / kDim;

        const std::array<double, 4> reflected = blend(centroid, xs[kDim], -1.0);
        const double fr = f(reflected);
        if (fr < fs[0]) {
            const std::array<double, 4> expanded = blend(centroid, xs[kDim], -2.0);
            const double fe = f(expanded);
            xs[kDim] = fe < fr ? expanded : reflected;
            fs[kDim] = std::min(fe, fr);
        } else if (fr < fs[kDim - 1]) {
            xs[kDim] = reflected;
            fs[kDim] = fr;
        } else {
            const bool outside = fr < fs[kDim];
            const std::array<double, 4> contracted =
                outside ? blend(centroid, reflected, 0.5) : blend(centroid, xs[kDim], 0.5);
            const double fc = f(contracted);
            if (fc < std::min(fr, fs[kDim])) {
                xs[kDim] = contracted;
                fs[kDim] = fc;
            } else {
                for (int t = 1; t <= kDim; ++t) {
                    xs[t] = blend(xs[0], xs[t], 0.5);
                    fs[t] = f(xs[t]);
                }
            }
        }
    }
    order();
    f_best = fs[0];
    return xs[0];
}

}  // namespace detail

struct LeftSearchOptions {
    std::uint64_t seed = 1;
    int random_starts = 64;
    double tol = 1e-6;  // acceptance: sdet(A - lambda Id) < tol * (1 + max entry norm)^n
};

// Numerical left spectrum: multistart minimization of
// F(lambda) = |det c(A - lambda Id)| over the four real coordinates of
// lambda. Starts are seeded from the right-eigenvalue representatives,
// the diagonal entries, and a deterministic pseudo-random batch. Accepted
// minima are deduplicated and each survivor is certified by an explicit
// null vector; the reported residuals are sdet(A - lambda Id).
//
// Left spectra can be infinite, so the certified list never claims to be
// complete. Finding nothing at all is reported as SearchIncomplete.
inline SpectrumResult left_eigenvalues(const QMatrix& a, const LeftSearchOptions& opt = {}) {
    const std::size_t n = a.size();
    if (n > 3)
        throw UnsupportedError("left eigenvalue search is limited to matrices of size at most "
                               "3x3, got " +
                               std::to_string(n) + "x" + std::to_string(n));

    const double scale = std::pow(1.0 + max_entry_norm(a), static_cast<double>(n));
    const double accept_sdet = opt.tol * scale;
    const double accept_f = accept_sdet * accept_sdet;

    const auto objective = [&a, n](const std::array<double, 4>& v) {
        QMatrix shifted = a;
        const Quaternion lambda(v[0], v[1], v[2], v[3]);
        for (std::size_t r = 0; r < n; ++r) shifted(r, r) -= lambda;
        return std::abs(determinant(complex_form(shifted)));
    };

    std::vector<Quaternion> starts;
    for (const Quaternion& rep : right_eigenvalues(a).values) starts.push_back(rep);
    for (std::size_t r = 0; r < n; ++r) starts.push_back(a(r, r));
    std::mt19937_64 eng(opt.seed);
    const double box = 1.0 + 2.0 * max_entry_norm(a);
    for (int t = 0; t < opt.random_starts; ++t) {
        Quaternion q;
        q.w = box * (2.0 * detail::uniform01(eng) - 1.0);
        q.x = box * (2.0 * detail::uniform01(eng) - 1.0);
        q.y = box * (2.0 * detail::uniform01(eng) - 1.0);
        q.z = box * (2.0 * detail::uniform01(eng) - 1.0);
        starts.push_back(q);
    }

    struct Candidate {
        Quaternion lambda;
        double f;
    };
    std::vector<Candidate> candidates;
    for (const Quaternion& s : starts) {
        double f_coarse = 0.0;
        std::array<double, 4> v{s.w, s.x, s.y, s.z};
        v = detail::nelder_mead(objective, v, 0.25 * (1.0 + norm(s)), 300,
                                1e-8 * accept_f, f_coarse);
        if (f_coarse > accept_f * 1e4) continue;  // nowhere near a root
        double f_fine = 0.0;
        const double fine_step = 1e-7 * (1.0 + std::sqrt(norm_sq(Quaternion(v[0], v[1], v[2], v[3]))));
        v = detail::nelder_mead(objective, v, fine_step, 150, 1e-10 * accept_f, f_fine);
        if (f_fine < accept_f)
            candidates.push_back({Quaternion(v[0], v[1], v[2], v[3]), f_fine});
    }

    // cluster: coordinate noise can interleave nearby minima under a plain
    // lexicographic sort, so compare against every kept representative
    std::vector<Candidate> merged;
    for (const Candidate& c : candidates) {
        Candidate* home = nullptr;
        for (Candidate& kept : merged)
            if (norm(c.lambda - kept.lambda) <= 1e-6) {
                home = &kept;
                break;
            }
        if (home == nullptr)
            merged.push_back(c);
        else if (c.f < home->f)
            *home = c;
    }
    std::sort(merged.begin(), merged.end(), [](const Candidate& l, const Candidate& r) {
        return detail::lex_less(l.lambda, r.lambda);
    });

    SpectrumResult out{"left", {}, {}};
    for (const Candidate& c : merged) {
        const NullVectorCertificate cert = certify_null_vector(a, c.lambda);
        if (cert.residual >= accept_sdet) continue;
        out.values.push_back(c.lambda);
        out.residuals.push_back(std::sqrt(c.f));
    }
    if (out.values.empty())
        throw SearchIncompleteError("no certified left eigenvalue after " +
                                    std::to_string(starts.size()) + " starts");
    return out;
}

// sigma(x, y) = det c(A - lambda Id) for lambda = x + j y, which equals
// sdet(A - lambda Id)^2. Real in exact arithmetic; the imaginary part is
// checked against a 1e-8 relative bound and discarded.
inline double sigma(const QMatrix& a, const Complex& x, const Complex& y) {
    const Quaternion lambda(x.real(), x.imag(), y.real(), -y.imag());
    const Complex d = determinant(complex_form(a - lambda * QMatrix::identity(a.size())));
    if (std::abs(d.imag()) > 1e-8 * std::max(1.0, std::abs(d)))
        throw NumericalInstabilityError("sigma came back with imaginary part " +
                                        detail::double_to_string(d.imag()));
    return d.real();
}

// Fixed demonstration that sigma does not extend to matrix arguments: for
// A = [[0, i], [j, 0]] the complex form splits as X = X1 + i X2 and
// Y = Y1 + i Y2 with real 2x2 blocks, and substituting those blocks into
// the closed form 1 + (x1^2+x2^2+y1^2+y2^2)^2 - 4 x2 y1 (products in the
// written order) yields diag(-3, 1) instead of a zero matrix, even though
// the scalar sigma vanishes on every left eigenvalue.
inline QMatrix sigma_counterexample_check() {
    const QMatrix a =
        QMatrix::from_rows({{Quaternion::zero(), Quaternion::i()},
                            {Quaternion::j(), Quaternion::zero()}});
    const std::size_t n = a.size();
    const ComplexMatrix cf = complex_form(a);
    QMatrix x1(n), x2(n), y1(n), y2(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            x1(r, c) = Quaternion::real(cf(r, c).real());
            x2(r, c) = Quaternion::real(cf(r, c).imag());
            y1(r, c) = Quaternion::real(cf(n + r, c).real());
            y2(r, c) = Quaternion::real(cf(n + r, c).imag());
        }
    const QMatrix s = x1 * x1 + x2 * x2 + y1 * y1 + y2 * y2;
    return QMatrix::identity(n) + s * s - 4.0 * (x2 * y1);
}

}  // namespace qleig
