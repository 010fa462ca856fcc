// Binary cubic forms: invariants, seminvariants, covariants and the twisted
// GL(2) action.
//
// Conventions. A form g = a*X^3 + b*X^2*Y + c*X*Y^2 + d*Y^3 is acted on by
// M = (r s; t u) via
//
//   g^M(X,Y) = det(M)^{-1} * g(r*X + t*Y, s*X + u*Y),
//
// i.e. the variables transform as the row vector (X Y)M and the result is
// divided by the determinant. Under this action -g = g^{-I}, discriminants of
// det +-1 transforms are preserved, and the Hessian H and cubic covariant G
// satisfy H(g^M) = det(M) H(g)^M and G(g^M) = det(M) G(g)^M.
#pragma once

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubiform/rat.hpp"

namespace cubiform {

struct BinaryCubicForm {
    Rat a, b, c, d;

    Rat operator()(const Rat& x, const Rat& y) const {
        return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y;
    }

    std::array<Rat, 4> coeffs() const { return {a, b, c, d}; }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

    BinaryCubicForm operator-() const { return {-a, -b, -c, -d}; }

    friend bool operator==(const BinaryCubicForm&, const BinaryCubicForm&) = default;
};

struct QuadraticForm {
    Rat q0, q1, q2;  // q0*X^2 + q1*X*Y + q2*Y^2

    Rat operator()(const Rat& x, const Rat& y) const {
        return q0 * x * x + q1 * x * y + q2 * y * y;
    }

    Rat discriminant() const { return q1 * q1 - 4 * q0 * q2; }

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// 2x2 rational matrix with rows (r s) and (t u).
struct Mat2 {
    Rat r, s, t, u;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Rat det() const { return r * u - s * t; }

    bool is_integral() const {
        return is_integer(r) && is_integer(s) && is_integer(t) && is_integer(u);
    }

    Mat2 operator-() const { return {-r, -s, -t, -u}; }

    Mat2 operator*(const Mat2& o) const {
        return {r * o.r + s * o.t, r * o.s + s * o.u, t * o.r + u * o.t, t * o.s + u * o.u};
    }

    friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// disc(g) = b^2 c^2 - 4 a c^3 - 4 b^3 d - 27 a^2 d^2 + 18 a b c d.
inline Rat discriminant(const BinaryCubicForm& g) {
    const Rat &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d +
           18 * a * b * c * d;
}

/// Seminvariants (P, U) with P = b^2 - 3ac and U = 2b^3 + 27a^2 d - 9abc;
/// they satisfy 4P^3 = U^2 + 27 disc(g) a^2.
inline std::pair<Rat, Rat> seminvariants(const BinaryCubicForm& g) {
    const Rat &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    return {b * b - 3 * a * c, 2 * b * b * b + 27 * a * a * d - 9 * a * b * c};
}

/// Quadratic Hessian covariant; its discriminant is -3 disc(g).
inline QuadraticForm hessian(const BinaryCubicForm& g) {
    const Rat &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    return {b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d};
}

/// Cubic covariant G; its leading coefficient is the seminvariant U and its
/// discriminant is 729 disc(g)^3.
inline BinaryCubicForm cubic_covariant(const BinaryCubicForm& g) {
    const Rat &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    return {2 * b * b * b + 27 * a * a * d - 9 * a * b * c,
            3 * (b * b * c + 9 * a * b * d - 6 * a * c * c),
            -3 * (b * c * c + 9 * a * c * d - 6 * b * b * d),
            -(2 * c * c * c + 27 * a * d * d - 9 * b * c * d)};
}

/// Twisted action g^M. Requires det(M) != 0.
inline BinaryCubicForm act(const BinaryCubicForm& g, const Mat2& m) {
    const Rat det = m.det();
    if (det == 0) throw std::domain_error("singular matrix");
    const Rat &a = g.a, &b = g.b, &c = g.c, &d = g.d;
    const Rat &r = m.r, &s = m.s, &t = m.t, &u = m.u;
    BinaryCubicForm h{
        g(r, s),
        3 * a * r * r * t + b * (r * r * u + 2 * r * s * t) + c * (s * s * t + 2 * r * s * u) +
            3 * d * s * s * u,
        3 * a * r * t * t + b * (s * t * t + 2 * r * t * u) + c * (r * u * u + 2 * s * t * u) +
            3 * d * s * u * u,
        g(t, u)};
    h.a /= det;
    h.b /= det;
    h.c /= det;
    h.d /= det;
    return h;
}

namespace detail {

// Product of dense coefficient vectors of homogeneous binary forms.
inline std::vector<Rat> conv(const std::vector<Rat>& f, const std::vector<Rat>& g) {
    std::vector<Rat> out(f.size() + g.size() - 1, Rat(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    return out;
}

}  // namespace detail

/// Exact coefficientwise check of the covariant syzygy
/// 4 H(X,Y)^3 = G(X,Y)^2 + 27 disc(g) g(X,Y)^2.
inline bool syzygy_holds(const BinaryCubicForm& g) {
    const QuadraticForm h = hessian(g);
    const BinaryCubicForm gc = cubic_covariant(g);
    const Rat delta = discriminant(g);
    const std::vector<Rat> hv{h.q0, h.q1, h.q2};
    const std::vector<Rat> gv{g.a, g.b, g.c, g.d};
    const std::vector<Rat> cv{gc.a, gc.b, gc.c, gc.d};
    std::vector<Rat> lhs = detail::conv(detail::conv(hv, hv), hv);
    const std::vector<Rat> c2 = detail::conv(cv, cv);
    const std::vector<Rat> g2 = detail::conv(gv, gv);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (4 * lhs[i] != c2[i] + 27 * delta * g2[i]) return false;
    }
    return true;
}

}  // namespace cubiform
