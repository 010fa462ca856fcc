// The quadratic resolvent algebra L = Q[delta] with delta^2 = -3*disc, the
// Cardano covariant C = (G + 3*delta*g)/2, and the class tests built on them.
//
// The class of a unit value C(x,y) in L*/(L*)^3 is a complete SL(2,Q)-orbit
// invariant for forms of fixed discriminant: it is trivial exactly when the
// form has a rational linear factor, and two forms lie in the same orbit
// exactly when their classes agree. Equality of classes is decided without
// cube-root extraction, through a rational root test on a monic cubic.
#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cubiform/forms.hpp"
#include "cubiform/poly.hpp"
#include "cubiform/rat.hpp"

namespace cubiform {

/// The etale algebra Q[delta], delta^2 = -3*disc, attached to a nonzero
/// discriminant. It is a field unless -3*disc is a rational square.
struct ResolventAlgebra {
    Rat disc;         // the discriminant, so delta^2 = -3*disc
    bool split;       // true iff -3*disc is a rational square

    explicit ResolventAlgebra(const Rat& discriminant_value)
        : disc(discriminant_value), split(is_square(-3 * discriminant_value)) {
        if (disc == 0) throw std::domain_error("resolvent algebra requires nonzero discriminant");
    }

    friend bool operator==(const ResolventAlgebra& a, const ResolventAlgebra& b) {
        return a.disc == b.disc;
    }
};

/// Element u + v*delta of a resolvent algebra.
struct ResolventElement {
    Rat u, v;
    ResolventAlgebra algebra;

    bool is_unit() const { return norm() != 0; }

    Rat norm() const { return u * u + 3 * algebra.disc * v * v; }

    friend bool operator==(const ResolventElement& a, const ResolventElement& b) {
        return a.algebra == b.algebra && a.u == b.u && a.v == b.v;
    }
};

inline void require_same_algebra(const ResolventElement& a, const ResolventElement& b) {
    if (!(a.algebra == b.algebra)) throw std::domain_error("resolvent algebra mismatch");
}

inline ResolventElement res_add(const ResolventElement& a, const ResolventElement& b) {
    require_same_algebra(a, b);
    return {a.u + b.u, a.v + b.v, a.algebra};
}

inline ResolventElement res_mul(const ResolventElement& a, const ResolventElement& b) {
    require_same_algebra(a, b);
    const Rat& d = a.algebra.disc;
    return {a.u * b.u - 3 * d * a.v * b.v, a.u * b.v + a.v * b.u, a.algebra};
}

inline ResolventElement res_scale(const Rat& s, const ResolventElement& a) {
    return {s * a.u, s * a.v, a.algebra};
}

inline ResolventElement res_conj(const ResolventElement& a) { return {a.u, -a.v, a.algebra}; }

inline Rat res_norm(const ResolventElement& a) { return a.norm(); }

namespace detail {

inline Rat require_nonzero_disc(const BinaryCubicForm& g) {
    const Rat d = discriminant(g);
    if (d == 0) throw std::domain_error("form has zero discriminant");
    return d;
}

}  // namespace detail

/// The Cardano covariant C(X,Y) = (G(X,Y) + 3*delta*g(X,Y)) / 2 in L[X,Y],
/// stored by its four L-coefficients. Its norm is H^3 as a polynomial
/// identity, and 27 c0^2 C(X,Y) = (3 c0 X + c1 Y)^3.
struct CardanoCovariant {
    std::array<ResolventElement, 4> c;

    ResolventElement operator()(const Rat& x, const Rat& y) const {
        const Rat x3 = x * x * x, x2y = x * x * y, xy2 = x * y * y, y3 = y * y * y;
        ResolventElement out = res_scale(x3, c[0]);
        out = res_add(out, res_scale(x2y, c[1]));
        out = res_add(out, res_scale(xy2, c[2]));
        return res_add(out, res_scale(y3, c[3]));
    }
};

inline CardanoCovariant cardano_covariant(const BinaryCubicForm& g) {
    const Rat d = detail::require_nonzero_disc(g);
    const ResolventAlgebra alg(d);
    const BinaryCubicForm gc = cubic_covariant(g);
    const std::array<Rat, 4> gs = g.coeffs(), cs = gc.coeffs();
    return {{ResolventElement{cs[0] / 2, 3 * gs[0] / 2, alg},
             ResolventElement{cs[1] / 2, 3 * gs[1] / 2, alg},
             ResolventElement{cs[2] / 2, 3 * gs[2] / 2, alg},
             ResolventElement{cs[3] / 2, 3 * gs[3] / 2, alg}}};
}

namespace detail {

// Deterministic evaluation point sequence (1,0), (0,1), (1,1), (1,-1),
// (1,2), (2,1), (1,-2), (2,-1), (1,3), (3,1), ... At most two points up to
// scaling can be rejected, so the scan always terminates early.
inline std::pair<Rat, Rat> evaluation_point(int k) {
    switch (k) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {1, 1};
        case 3: return {1, -1};
    }
    const int n = (k - 4) / 4 + 2;
    switch ((k - 4) % 4) {
        case 0: return {1, n};
        case 1: return {n, 1};
        case 2: return {1, -n};
        default: return {n, -1};
    }
}

}  // namespace detail

/// A representative of the Cardano invariant: the value z = C(x, y) at the
/// first point of the fixed search order with H(x, y) != 0, together with
/// that point. The representative is a unit with norm H(x, y)^3.
struct CardanoRepresentative {
    ResolventElement z;
    std::pair<Rat, Rat> point;
};

inline CardanoRepresentative cardano_representative(const BinaryCubicForm& g) {
    detail::require_nonzero_disc(g);
    const QuadraticForm h = hessian(g);
    const CardanoCovariant cov = cardano_covariant(g);
    for (int k = 0;; ++k) {
        const auto [x, y] = detail::evaluation_point(k);
        if (h(x, y) == 0) continue;
        return {cov(x, y), {x, y}};
    }
}

/// Checks the bilinear cube identity C(p1)^2 C(p2) = F(p1, p2)^3 with
/// 3F = (3c0 X1^2 + 2c1 X1 Y1 + c2 Y1^2) X2 + (c1 X1^2 + 2c2 X1 Y1 + 3c3 Y1^2) Y2,
/// together with N(F(p1, p2)) = H(p1)^2 H(p2).
inline bool check_F_identity(const BinaryCubicForm& g, const std::pair<Rat, Rat>& p1,
                             const std::pair<Rat, Rat>& p2) {
    detail::require_nonzero_disc(g);
    const CardanoCovariant cov = cardano_covariant(g);
    const auto& [x1, y1] = p1;
    const auto& [x2, y2] = p2;
    ResolventElement f = res_scale(x2, res_add(res_add(res_scale(3 * x1 * x1, cov.c[0]),
                                                       res_scale(2 * x1 * y1, cov.c[1])),
                                               res_scale(y1 * y1, cov.c[2])));
    f = res_add(f, res_scale(y2, res_add(res_add(res_scale(x1 * x1, cov.c[1]),
                                                 res_scale(2 * x1 * y1, cov.c[2])),
                                         res_scale(3 * y1 * y1, cov.c[3]))));
    f = res_scale(Rat(1, 3), f);
    const ResolventElement c1v = cov(x1, y1);
    const ResolventElement lhs = res_mul(res_mul(c1v, c1v), cov(x2, y2));
    const ResolventElement rhs = res_mul(res_mul(f, f), f);
    const QuadraticForm h = hessian(g);
    return lhs == rhs && res_norm(f) == h(x1, y1) * h(x1, y1) * h(x2, y2);
}

/// The Cardano class of g is trivial exactly when g has a rational linear
/// factor.
inline bool is_trivial_class(const BinaryCubicForm& g) {
    detail::require_nonzero_disc(g);
    return !linear_factors_binary_cubic(g).empty();
}

namespace detail {

// Shears a form by (1 n; 0 1), n = 0, 1, -1, 2, -2, ..., until the leading
// coefficient and both seminvariants are nonzero. Each condition rules out
// finitely many n (they are the values at (1, n) of g, G and H, all nonzero
// forms when disc != 0), so at most eight shifts are skipped.
inline BinaryCubicForm normalize_aUP_nonzero(const BinaryCubicForm& g) {
    for (int k = 0;; ++k) {
        const int n = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
        const BinaryCubicForm h = act(g, Mat2{1, n, 0, 1});
        const auto [p, u] = seminvariants(h);
        if (h.a != 0 && u != 0 && p != 0) return h;
    }
}

inline bool has_rational_root(const UniCubic& f) { return !rational_roots_cubic(f).empty(); }

}  // namespace detail

/// Decides z(g1) = z(g2) (orientation +1) or z(g1) = z(g2)^{-1} (orientation
/// -1) for forms of equal nonzero discriminant; by the orbit criterion this
/// is SL(2,Q)-equivalence of g1 with g2, resp. with g2(X, -Y). Reducible
/// forms all share the trivial class; for irreducible forms, after shearing
/// both so that a, U, P are nonzero, the classes agree exactly when
/// 16 X^3 - 12 P1 P2 X - (U1 U2 + 27 a1 a2 disc) has a rational root.
inline bool classes_equal(const BinaryCubicForm& g1, const BinaryCubicForm& g2, int orientation) {
    if (orientation != 1 && orientation != -1)
        throw std::invalid_argument("orientation must be +1 or -1");
    const Rat d1 = detail::require_nonzero_disc(g1);
    const Rat d2 = detail::require_nonzero_disc(g2);
    if (d1 != d2) throw std::domain_error("different discriminants");
    BinaryCubicForm h2 = g2;
    if (orientation == -1) h2 = BinaryCubicForm{g2.a, -g2.b, g2.c, -g2.d};  // g2(X, -Y)
    const bool t1 = is_trivial_class(g1), t2 = is_trivial_class(h2);
    if (t1 || t2) return t1 && t2;
    const BinaryCubicForm n1 = detail::normalize_aUP_nonzero(g1);
    const BinaryCubicForm n2 = detail::normalize_aUP_nonzero(h2);
    const auto [p1, u1] = seminvariants(n1);
    const auto [p2, u2] = seminvariants(n2);
    const UniCubic f{-(u1 * u2 + 27 * n1.a * n2.a * d1), -12 * p1 * p2, 0, 16};
    return detail::has_rational_root(f);
}

/// Rational roots of g(X, 1) plus a flag for the root at infinity (the
/// factor Y, present exactly when a = 0).
struct FormRoots {
    std::vector<Rat> roots;
    bool at_infinity = false;
};

inline FormRoots rational_roots_of_form(const BinaryCubicForm& g) {
    detail::require_nonzero_disc(g);
    FormRoots out;
    if (g.a == 0) {
        // disc != 0 forces b != 0 here, so the finite part is an honest
        // quadratic.
        out.at_infinity = true;
        out.roots = rational_roots_cubic(UniCubic{g.d, g.c, g.b, 0});
        return out;
    }
    const auto [p, u] = seminvariants(g);
    const UniCubic f{-u, -6 * p, 0, 8};  // a^{-1} g(2X + b, -3a)
    for (const Rat& x : rational_roots_cubic(f)) out.roots.push_back((2 * x + g.b) / (-3 * g.a));
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

/// Floating-point roots of g(X, 1) by the Cardano formula
/// -(b + w + P/w) / (3a) over the three cube-root branches w of
/// z = (U + 3a sqrt(-3*disc)) / 2. Requires a != 0.
inline std::array<std::complex<double>, 3> cardano_roots_numeric(const BinaryCubicForm& g) {
    if (g.a == 0)
        throw std::domain_error("leading coefficient zero; use rational_roots_of_form");
    const double a = g.a.convert_to<double>();
    const double b = g.b.convert_to<double>();
    const Rat delta = discriminant(g);
    const auto [pr, ur] = seminvariants(g);
    const double p = pr.convert_to<double>();
    const double u = ur.convert_to<double>();
    const std::complex<double> sq = std::sqrt(std::complex<double>((-3 * delta).convert_to<double>(), 0.0));
    std::complex<double> z = (u + 3.0 * a * sq) / 2.0;
    // In the split case one square-root branch can make z vanish; the
    // conjugate branch then carries the whole invariant.
    if (std::abs(z) <= 1e-14 * (std::abs(u) + std::abs(3.0 * a * sq)))
        z = (u - 3.0 * a * sq) / 2.0;
    const std::complex<double> w0 = std::pow(z, 1.0 / 3.0);
    const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);
    std::array<std::complex<double>, 3> roots;
    std::complex<double> w = w0;
    for (int k = 0; k < 3; ++k, w *= omega) roots[k] = -(b + w + p / w) / (3.0 * a);
    return roots;
}

/// Builds a form with prescribed discriminant and Cardano representative:
/// given x^2 + 3*disc*y^2 = P^3 with P != 0, the result g satisfies
/// disc(g) = disc, U(g) = 2x and P(g) = P, hence z(g) = x + y*delta.
inline BinaryCubicForm construct_from_invariant(const Rat& disc, const Rat& x, const Rat& y,
                                                const Rat& p) {
    if (disc == 0) throw std::domain_error("zero discriminant");
    if (p == 0) throw std::domain_error("P must be nonzero");
    if (x == 0 && y == 0) throw std::domain_error("zero resolvent element");
    if (x * x + 3 * disc * y * y != p * p * p)
        throw std::domain_error("not a norm-P^3 element");
    BinaryCubicForm g = (y != 0)
                            ? BinaryCubicForm{2 * y / 3, 0, -p / (2 * y), x / (6 * y * y)}
                            : BinaryCubicForm{0, x / p, 0, -disc / (4 * x)};
    const auto [pg, ug] = seminvariants(g);
    if (discriminant(g) != disc || ug != 2 * x || pg != p)
        throw std::logic_error("construct_from_invariant verification failed");
    return g;
}

}  // namespace cubiform
