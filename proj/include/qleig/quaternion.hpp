#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "qleig/errors.hpp"

namespace qleig {

inline constexpr double kDefaultTol = 1e-9;

// Quaternion q = w + x i + y j + z k over the reals, with the Hamilton
// relations i^2 = j^2 = k^2 = ijk = -1 (so ij = k, ji = -k, ...).
// Multiplication is noncommutative; nothing in this library ever reorders
// factors.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double t) { return {t, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& r) {
        w += r.w; x += r.x; y += r.y; z += r.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        w -= r.w; x -= r.x; y -= r.y; z -= r.z;
        return *this;
    }

    constexpr bool is_zero() const { return w == 0.0 && x == 0.0 && y == 0.0 && z == 0.0; }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(double t, const Quaternion& q) {
    return {t * q.w, t * q.x, t * q.y, t * q.z};
}
constexpr Quaternion operator*(const Quaternion& q, double t) { return t * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr double norm_sq(const Quaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

// q^-1 = conj(q) / |q|^2; only the exact zero quaternion is rejected.
inline Quaternion inverse(const Quaternion& q) {
    if (q.is_zero())
        throw ZeroDivisionError("cannot invert the zero quaternion");
    return (1.0 / norm_sq(q)) * conj(q);
}

inline Quaternion operator/(const Quaternion& a, const Quaternion& b) {
    return a * inverse(b);
}

// Tolerance-based comparison (Euclidean distance in R^4). Exact bitwise
// equality is deliberately not provided.
inline bool approx_equal(const Quaternion& a, const Quaternion& b, double tol = kDefaultTol) {
    return norm(a - b) <= tol;
}

namespace detail {

// Shortest round-trip decimal form of a double.
inline std::string double_to_string(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline bool starts_number(char c) {
    return (c >= '0' && c <= '9') || c == '.';
}

}  // namespace detail

// Renders q in the same textual form parse_quaternion accepts, e.g.
// "1-2.5i+k", "0", "-j". Unit coefficients are left implicit.
inline std::string format_quaternion(const Quaternion& q) {
    const double comps[4] = {q.w, q.x, q.y, q.z};
    const char* units[4] = {"", "i", "j", "k"};
    std::string out;
    for (int c = 0; c < 4; ++c) {
        double v = comps[c];
        if (v == 0.0) continue;
        if (v < 0.0)
            out += '-';
        else if (!out.empty())
            out += '+';
        double mag = std::fabs(v);
        if (c == 0 || mag != 1.0) out += detail::double_to_string(mag);
        out += units[c];
    }
    return out.empty() ? "0" : out;
}

// Parses a sum of signed real terms with optional unit suffix i/j/k:
//   quat  := ws term (ws sign ws term)* ws
//   term  := number unit? | unit
// Coefficients use the usual decimal/scientific forms. Whitespace is
// ignored between tokens. Errors carry the byte offset of the offender.
inline Quaternion parse_quaternion(std::string_view text) {
    Quaternion out;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (pos < n && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };

    skip_ws();
    if (pos == n) throw ParseError("empty quaternion literal", 0);

    bool first = true;
    while (true) {
        skip_ws();
        if (pos == n) {
            if (first) throw ParseError("empty quaternion literal", pos);
            break;
        }
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -1.0;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError(std::string("expected '+' or '-' before next term, got '") +
                                 text[pos] + "'",
                             pos);
        }
        if (pos == n) throw ParseError("dangling sign at end of quaternion literal", pos);

        double coef = 1.0;
        bool have_number = false;
        if (detail::starts_number(text[pos])) {
            const char* begin = text.data() + pos;
            const char* end = text.data() + n;
            auto res = std::from_chars(begin, end, coef);
            if (res.ec != std::errc() || res.ptr == begin)
                throw ParseError("malformed numeric coefficient", pos);
            pos += static_cast<std::size_t>(res.ptr - begin);
            have_number = true;
        }
        skip_ws();

        int slot = 0;  // real part
        if (pos < n && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
            slot = 1 + (text[pos] - 'i');
            ++pos;
        } else if (!have_number) {
            throw ParseError(std::string("expected a number or unit i/j/k, got '") +
                                 text[pos] + "'",
                             pos);
        }

        double v = sign * coef;
        switch (slot) {
            case 0: out.w += v; break;
            case 1: out.x += v; break;
            case 2: out.y += v; break;
            default: out.z += v; break;
        }
        first = false;
    }
    return out;
}

}  // namespace qleig
