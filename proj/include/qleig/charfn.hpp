#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qleig/errors.hpp"
#include "qleig/ncexpr.hpp"
#include "qleig/qmatrix.hpp"
#include "qleig/quaternion.hpp"

namespace qleig {

// Which reduction produced a characteristic function. The split is on
// exact zero patterns of the input entries, so the kind is reproducible.
enum class CharFnKind {
    Poly2x2,       // standard 2x2 form (polynomial for any top-right entry)
    Wood2x2,       // alternative 2x2 form built around the bottom-left entry
    Triangular3,   // 3x3, lower triangular
    ColB0,         // 3x3, top row (0, *, 0): a 1x1 and a 2x2 block
    CZeroReduced,  // 3x3, zero top-right corner, nonzero (0,1) entry
    Generic3x3     // 3x3, nonzero top-right corner; has a pole
};

inline std::string to_string(CharFnKind k) {
    switch (k) {
        case CharFnKind::Poly2x2: return "Poly2x2";
        case CharFnKind::Wood2x2: return "Wood2x2";
        case CharFnKind::Triangular3: return "Triangular3";
        case CharFnKind::ColB0: return "ColB0";
        case CharFnKind::CZeroReduced: return "CZeroReduced";
        default: return "Generic3x3";
    }
}

// Removable-singularity data for the generic 3x3 form: the expression has
// an inv(pole - x) factor, but the function extends to the pole with the
// finite value q0 * f0. The extension is genuinely discontinuous there:
// approaching along direction q gives -q q0 q^-1 f0 instead.
struct PoleInfo {
    Quaternion location;
    Quaternion q0;
    Quaternion f0;
    Quaternion value;  // q0 * f0
};

// A characteristic function mu for the matrix A it was built from:
//
//     kappa * |mu(lambda)| = sdet(A - lambda Id)   for every lambda,
//
// so the zeros of mu are exactly the left eigenvalues of A. kappa is a
// positive constant determined by the reduction branch.
struct CharFn {
    CharFnKind kind;
    NCExpr expr;
    double kappa;
    std::optional<PoleInfo> pole;

    bool has_pole() const { return pole.has_value(); }

    bool at_pole(const Quaternion& lambda) const {
        return pole && norm(lambda - pole->location) <= 1e-9 * (1.0 + norm(pole->location));
    }

    // Value of the (pole-patched) characteristic function. Within the pole
    // tolerance this returns the defined extension value q0 * f0; use
    // directional_pole_limit to probe the raw expression near the pole.
    Quaternion eval(const Quaternion& lambda) const {
        if (at_pole(lambda)) return pole->value;
        return expr.eval(lambda);
    }
};

namespace detail {

inline const Quaternion& entry_or_throw(const QMatrix& a, std::size_t r, std::size_t c,
                                        const char* what) {
    const Quaternion& q = a(r, c);
    if (q.is_zero())
        throw RequiresNonzeroEntryError(std::string(what) + " requires entry (" +
                                        std::to_string(r) + "," + std::to_string(c) +
                                        ") to be nonzero");
    return q;
}

inline void require_size(const QMatrix& a, std::size_t n, const char* what) {
    if (a.size() != n)
        throw DimensionMismatchError(std::string(what) + " expects a " + std::to_string(n) +
                                     "x" + std::to_string(n) + " matrix, got " +
                                     std::to_string(a.size()) + "x" + std::to_string(a.size()));
}

}  // namespace detail

// 2x2 characteristic function for A = [[a, b], [c, d]]:
//   b != 0:  mu(lambda) = c - (d - lambda) b^-1 (a - lambda),   kappa = |b|
//   b == 0:  mu(lambda) = (d - lambda)(a - lambda),             kappa = 1
// Both are quadratic polynomials; b^-1 is just a constant coefficient.
inline CharFn charfn_2x2(const QMatrix& m) {
    detail::require_size(m, 2, "charfn_2x2");
    const Quaternion a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    if (b.is_zero())
        return {CharFnKind::Poly2x2, linear_factor(d) * linear_factor(a), 1.0, std::nullopt};
    NCExpr expr = NCExpr::constant(c) -
                  linear_factor(d) * NCExpr::constant(inverse(b)) * linear_factor(a);
    return {CharFnKind::Poly2x2, expr, norm(b), std::nullopt};
}

// Mirror image of charfn_2x2 built around the bottom-left entry:
//   mu(lambda) = b - (a - lambda) c^-1 (d - lambda),   kappa = |c|.
// Same zero set as the standard form wherever both exist.
inline CharFn wood_charfn_2x2(const QMatrix& m) {
    detail::require_size(m, 2, "wood_charfn_2x2");
    const Quaternion a = m(0, 0), b = m(0, 1), d = m(1, 1);
    const Quaternion c = detail::entry_or_throw(m, 1, 0, "the alternative 2x2 form");
    NCExpr expr = NCExpr::constant(b) -
                  linear_factor(a) * NCExpr::constant(inverse(c)) * linear_factor(d);
    return {CharFnKind::Wood2x2, expr, norm(c), std::nullopt};
}

// Pole of the generic 3x3 reduction of A = [[a,b,c],[f,g,h],[p,q,r]],
// defined when the corner entry c is nonzero:
//   lambda_0 = g - h c^-1 b.
inline Quaternion pole(const QMatrix& m) {
    detail::require_size(m, 3, "pole");
    const Quaternion c = detail::entry_or_throw(m, 0, 2, "the generic 3x3 reduction");
    return m(1, 1) - m(1, 2) * inverse(c) * m(0, 1);
}

// 3x3 characteristic function for A = [[a,b,c],[f,g,h],[p,q,r]]. The
// reduction eliminates the first column by right-multiplying with
// elementary matrices, which multiplies the Study determinant by known
// entry norms; kappa collects those norms. Branches on exact zero
// entries:
//
//   c != 0 (Generic3x3): with lambda_0 = g - h c^-1 b and
//       P(x) = p - (r - x) c^-1 (a - x)
//       Q(x) = q - (r - x) c^-1 b
//       F(x) = f - h c^-1 (a - x)
//     mu(x) = (lambda_0 - x) (P(x) - Q(x) (lambda_0 - x)^-1 F(x)),
//     kappa = |c|. At the pole itself the reduction degenerates to a
//     triangular block shape and gives the finite value Q(l0) F(l0).
//
//   c == 0, b != 0 (CZeroReduced): eliminate via b (and h when h != 0):
//       h != 0: mu = p - q b^-1 (a-x) - (r-x) h^-1 (f - (g-x) b^-1 (a-x)),
//               kappa = |b| |h|
//       h == 0: mu = (r-x)(f - (g-x) b^-1 (a-x)), kappa = |b|
//
//   c == 0, b == 0, h != 0 (ColB0): the top row is (a-x, 0, 0), leaving a
//     2x2 block: mu = (q - (r-x) h^-1 (g-x))(a-x), kappa = |h|
//
//   c == 0, b == 0, h == 0 (Triangular3): lower triangular,
//     mu = (r-x)(g-x)(a-x), kappa = 1.
//
// Every branch is a polynomial except Generic3x3.
inline CharFn charfn_3x3(const QMatrix& m) {
    detail::require_size(m, 3, "charfn_3x3");
    const Quaternion a = m(0, 0), b = m(0, 1), c = m(0, 2);
    const Quaternion f = m(1, 0), g = m(1, 1), h = m(1, 2);
    const Quaternion p = m(2, 0), q = m(2, 1), r = m(2, 2);

    const NCExpr la = linear_factor(a), lg = linear_factor(g), lr = linear_factor(r);

    if (!c.is_zero()) {
        const Quaternion ci = inverse(c);
        const Quaternion lambda0 = g - h * ci * b;
        const NCExpr P = NCExpr::constant(p) - lr * NCExpr::constant(ci) * la;
        const NCExpr Q = NCExpr::constant(q) - lr * NCExpr::constant(ci) * NCExpr::constant(b);
        const NCExpr F = NCExpr::constant(f) - NCExpr::constant(h) * NCExpr::constant(ci) * la;
        const NCExpr gap = linear_factor(lambda0);
        NCExpr expr = gap * (P - Q * inv(gap) * F);
        const Quaternion q0 = q - (r - lambda0) * ci * b;
        const Quaternion f0 = f - h * ci * (a - lambda0);
        return {CharFnKind::Generic3x3, expr, norm(c),
                PoleInfo{lambda0, q0, f0, q0 * f0}};
    }
    if (!b.is_zero()) {
        const Quaternion bi = inverse(b);
        const NCExpr inner = NCExpr::constant(f) - lg * NCExpr::constant(bi) * la;
        if (!h.is_zero()) {
            const Quaternion hi = inverse(h);
            NCExpr expr = NCExpr::constant(p) -
                          NCExpr::constant(q) * NCExpr::constant(bi) * la -
                          lr * NCExpr::constant(hi) * inner;
            return {CharFnKind::CZeroReduced, expr, norm(b) * norm(h), std::nullopt};
        }
        return {CharFnKind::CZeroReduced, lr * inner, norm(b), std::nullopt};
    }
    if (!h.is_zero()) {
        const Quaternion hi = inverse(h);
        NCExpr expr = (NCExpr::constant(q) - lr * NCExpr::constant(hi) * lg) * la;
        return {CharFnKind::ColB0, expr, norm(h), std::nullopt};
    }
    return {CharFnKind::Triangular3, lr * lg * la, 1.0, std::nullopt};
}

// Size dispatch. Characteristic functions are provided for 2x2 and 3x3
// matrices only; larger sizes have no published closed reduction here and
// 1x1 is trivial.
inline CharFn charfn_for(const QMatrix& m) {
    switch (m.size()) {
        case 2: return charfn_2x2(m);
        case 3: return charfn_3x3(m);
        default:
            throw UnsupportedError("characteristic functions are available for 2x2 and 3x3 "
                                   "matrices, got " +
                                   std::to_string(m.size()) + "x" + std::to_string(m.size()));
    }
}

// Raw expression values mu(pole + t * dir) for each step t. These probe
// the discontinuity: as t -> 0 they tend to -dir * q0 * dir^-1 * f0, which
// depends on dir and generally differs from the defined pole value q0*f0.
// Deliberately bypasses the pole patch in CharFn::eval.
inline std::vector<Quaternion> directional_pole_limit(const CharFn& fn, const Quaternion& dir,
                                                      const std::vector<double>& steps) {
    if (!fn.pole)
        throw UnsupportedError("directional limits need a characteristic function with a pole");
    if (dir.is_zero()) throw ZeroDivisionError("direction must be nonzero");
    std::vector<Quaternion> out;
    out.reserve(steps.size());
    for (double t : steps) {
        if (t == 0.0) throw ZeroDivisionError("step sizes must be nonzero");
        out.push_back(fn.expr.eval(fn.pole->location + t * dir));
    }
    return out;
}

// The three matrix coefficients of the generic reduction evaluated at the
// matrix itself, plus the scalar pole data. These satisfy
//     p_term = q_term * (pole Id - A)^-1 * f_term
// whenever pole Id - A is invertible.
struct HcFactors {
    Quaternion pole;
    Quaternion q0;
    Quaternion f0;
    QMatrix p_term;
    QMatrix q_term;
    QMatrix f_term;
};

inline HcFactors hc_factors(const QMatrix& m) {
    detail::require_size(m, 3, "hc_factors");
    const Quaternion a = m(0, 0), b = m(0, 1);
    const Quaternion c = detail::entry_or_throw(m, 0, 2, "the generic 3x3 reduction");
    const Quaternion f = m(1, 0), g = m(1, 1), h = m(1, 2);
    const Quaternion p = m(2, 0), q = m(2, 1), r = m(2, 2);
    const Quaternion ci = inverse(c);
    const Quaternion lambda0 = g - h * ci * b;

    const QMatrix id = QMatrix::identity(3);
    const QMatrix ra = r * id - m;
    const QMatrix aa = a * id - m;
    HcFactors out{lambda0,
                  q - (r - lambda0) * ci * b,
                  f - h * ci * (a - lambda0),
                  p * id - ra * ci * aa,
                  q * id - ra * (ci * b),
                  f * id - (h * ci) * aa};
    return out;
}

// Extension of a characteristic function to matrix arguments. Polynomial
// kinds evaluate directly. The generic 3x3 kind inverts pole*Id - B when
// that matrix is invertible; otherwise the defined extension value is the
// scalar q0 * f0 (times the identity), mirroring the scalar pole patch.
inline QMatrix hc_extension(const CharFn& fn, const QMatrix& arg) {
    if (fn.pole) {
        const QMatrix gap = fn.pole->location * QMatrix::identity(arg.size()) - arg;
        if (sdet(gap) <= singular_threshold(gap)) {
            return fn.pole->value * QMatrix::identity(arg.size());
        }
    }
    return fn.expr.eval(arg);
}

// Largest entry norm of mu(A) where mu is A's own characteristic function.
// Zero in exact arithmetic for every 2x2 and 3x3 matrix: the matrices
// annihilate their characteristic functions.
inline double hc_residual(const QMatrix& m) {
    return max_entry_norm(hc_extension(charfn_for(m), m));
}

}  // namespace qleig
