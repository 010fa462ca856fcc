// Exact polynomial substrate: rational roots of (at most) cubics, linear
// factors of binary cubics, and dense bihomogeneous polynomial arithmetic
// with exact division.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cubiform/forms.hpp"
#include "cubiform/rat.hpp"

namespace cubiform {

/// Univariate polynomial p3 x^3 + p2 x^2 + p1 x + p0 of degree at most 3.
/// Leading coefficients may be zero.
struct UniCubic {
    Rat p0, p1, p2, p3;

    Rat operator()(const Rat& x) const { return ((p3 * x + p2) * x + p1) * x + p0; }

    bool is_zero() const { return p0 == 0 && p1 == 0 && p2 == 0 && p3 == 0; }

    int degree() const {
        if (p3 != 0) return 3;
        if (p2 != 0) return 2;
        if (p1 != 0) return 1;
        return 0;
    }
};

namespace detail {

// All integer roots of the monic cubic w(T) = T^3 + A T^2 + B T + C, found by
// exact bisection. The derivative w' = 3T^2 + 2AT + B partitions the integers
// into at most three ranges on which w is monotone; the range boundaries are
// located by bisection on w' (monotone on either side of its vertex -A/3), so
// no floating point or radical approximation enters anywhere.
inline std::vector<Int> integer_roots_monic_cubic(const Int& A, const Int& B, const Int& C) {
    const auto w = [&](const Int& t) { return ((t + A) * t + B) * t + C; };
    const auto wp = [&](const Int& t) { return (3 * t + 2 * A) * t + B; };

    Int bound = 1;
    for (const Int* coef : {&A, &B, &C})
        if (abs(*coef) + 1 > bound) bound = Int(abs(*coef) + 1);

    // Largest t in [lo, hi] with w'(t) > 0, where w' is decreasing there
    // (dir = -1), or smallest such t where w' is increasing (dir = +1).
    // Returns empty when w' <= 0 on the whole range.
    const auto positive_boundary = [&](Int lo, Int hi, int dir) -> std::optional<Int> {
        if (lo > hi) return std::nullopt;
        if (dir < 0) {
            if (wp(lo) <= 0) return std::nullopt;
            while (lo < hi) {
                Int mid = floor_div(lo + hi + 1, 2);
                if (wp(mid) > 0)
                    lo = mid;
                else
                    hi = mid - 1;
            }
            return lo;
        }
        if (wp(hi) <= 0) return std::nullopt;
        while (lo < hi) {
            Int mid = floor_div(lo + hi, 2);
            if (wp(mid) > 0)
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    };

    const Int vertex_floor = floor_div(-A, 3);
    // b1: rightmost integer <= vertex with w' > 0; b2: leftmost integer >
    // vertex with w' > 0. Between them w is non-increasing, outside strictly
    // increasing.
    const std::optional<Int> b1 =
        positive_boundary(-bound, std::min(vertex_floor, bound), -1);
    const std::optional<Int> b2 =
        positive_boundary(std::max(Int(vertex_floor + 1), Int(-bound)), bound, +1);

    struct Range {
        Int lo, hi;
        bool increasing;
    };
    std::vector<Range> ranges;
    const Int lo_all = -bound, hi_all = bound;
    const Int left_end = b1 ? *b1 : Int(lo_all - 1);
    const Int right_start = b2 ? *b2 : Int(hi_all + 1);
    if (b1) ranges.push_back({lo_all, left_end, true});
    if (left_end + 1 <= right_start - 1)
        ranges.push_back({std::max(Int(left_end + 1), lo_all), std::min(Int(right_start - 1), hi_all),
                          false});
    if (b2) ranges.push_back({right_start, hi_all, true});

    std::vector<Int> roots;
    for (const Range& rg : ranges) {
        if (rg.lo > rg.hi) continue;
        Int lo = rg.lo, hi = rg.hi;
        Int wlo = w(lo), whi = w(hi);
        if (wlo == 0) roots.push_back(lo);
        if (whi == 0 && hi != lo) roots.push_back(hi);
        const bool sign_change = rg.increasing ? (wlo < 0 && whi > 0) : (wlo > 0 && whi < 0);
        if (!sign_change) continue;
        while (hi - lo > 1) {
            Int mid = floor_div(lo + hi, 2);
            Int wm = w(mid);
            if (wm == 0) {
                roots.push_back(mid);
                break;
            }
            if ((wm < 0) == rg.increasing)
                lo = mid;
            else
                hi = mid;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Primitive integer coefficient vector (trailing first) of a nonzero
// rational polynomial given as p0..p_deg.
inline std::vector<Int> primitive_integer_coeffs(const std::vector<Rat>& p) {
    Int l = 1;
    for (const Rat& c : p) l = boost::multiprecision::lcm(l, den(c));
    std::vector<Int> v;
    v.reserve(p.size());
    Int content = 0;
    for (const Rat& c : p) {
        Rat scaled = c * l;
        v.push_back(num(scaled));
        content = boost::multiprecision::gcd(content, v.back());
    }
    for (Int& x : v) x /= content;
    return v;
}

// One rational root of the nonzero polynomial v (trailing first, primitive
// integer, degree = v.size()-1 with nonzero lead), if any.
inline std::optional<Rat> one_rational_root(const std::vector<Int>& v) {
    const std::size_t n = v.size() - 1;
    if (n == 0) return std::nullopt;
    if (v[0] == 0) return Rat(0);
    if (n == 1) return Rat(Int(-v[0]), v[1]);
    if (n == 2) {
        const Int disc = v[1] * v[1] - 4 * v[0] * v[2];
        const auto s = isqrt_exact(disc);
        if (!s) return std::nullopt;
        return Rat(Int(-v[1] - *s), Int(2 * v[2]));
    }
    // Rational roots of v correspond to integer roots T of the monic
    // transform T^3 + v2 T^2 + v1 v3 T + v0 v3^2 under x = T / v3.
    const std::vector<Int> t =
        integer_roots_monic_cubic(v[2], Int(v[1] * v[3]), Int(v[0] * v[3] * v[3]));
    if (t.empty()) return std::nullopt;
    return Rat(t.front(), v[3]);
}

}  // namespace detail

/// All rational roots of p with multiplicity, in ascending order. Roots are
/// found on a primitive integer model of p and the polynomial is deflated
/// after each root, so repeated roots are reported repeatedly.
inline std::vector<Rat> rational_roots_cubic(const UniCubic& p) {
    if (p.is_zero()) throw std::domain_error("undefined roots: zero polynomial");
    std::vector<Rat> work{p.p0, p.p1, p.p2, p.p3};
    while (work.size() > 1 && work.back() == 0) work.pop_back();
    std::vector<Rat> roots;
    while (work.size() > 1) {
        const auto root = detail::one_rational_root(detail::primitive_integer_coeffs(work));
        if (!root) break;
        roots.push_back(*root);
        // Synthetic division by (x - root); the remainder is exactly zero.
        std::vector<Rat> q(work.size() - 1);
        Rat carry = 0;
        for (std::size_t i = work.size(); i-- > 1;) {
            carry = work[i] + carry * *root;
            q[i - 1] = carry;
        }
        work = std::move(q);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// A primitive linear factor r*X + s*Y of a binary cubic, with gcd(r,s) = 1
/// and the first nonzero entry positive.
struct LinearFactor {
    Int r, s;
    int multiplicity = 1;

    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// All linear factors of g over the rationals, with multiplicity, sorted by
/// (r, s). The factor Y, i.e. (0, 1), appears exactly when a = 0.
inline std::vector<LinearFactor> linear_factors_binary_cubic(const BinaryCubicForm& g) {
    if (g.is_zero()) throw std::domain_error("zero form has no factorization");
    const UniCubic dehom{g.d, g.c, g.b, g.a};  // g(x, 1)
    std::vector<LinearFactor> out;
    if (g.a == 0) out.push_back({0, 1, 3 - dehom.degree()});
    const std::vector<Rat> roots = rational_roots_cubic(dehom);
    for (std::size_t i = 0; i < roots.size();) {
        std::size_t j = i;
        while (j < roots.size() && roots[j] == roots[i]) ++j;
        // Root p/q in lowest terms corresponds to the factor q*X - p*Y.
        out.push_back({den(roots[i]), Int(-num(roots[i])), static_cast<int>(j - i)});
        i = j;
    }
    std::sort(out.begin(), out.end(), [](const LinearFactor& x, const LinearFactor& y) {
        return x.r != y.r ? x.r < y.r : x.s < y.s;
    });
    return out;
}

/// Dense bihomogeneous polynomial of bidegree (m, n) in the variable pairs
/// (X1, Y1) and (X2, Y2). Entry (i, j) multiplies X1^{m-i} Y1^i X2^{n-j} Y2^j.
class BiForm {
public:
    BiForm(int m, int n) : m_(m), n_(n), c_(static_cast<std::size_t>((m + 1) * (n + 1)), Rat(0)) {
        if (m < 0 || n < 0) throw std::invalid_argument("negative bidegree");
    }

    int deg1() const { return m_; }
    int deg2() const { return n_; }

    Rat& at(int i, int j) { return c_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }
    const Rat& at(int i, int j) const { return c_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& x) { return x == 0; });
    }

    BiForm& operator+=(const BiForm& o) {
        require_same_bidegree(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }

    BiForm& operator-=(const BiForm& o) {
        require_same_bidegree(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }

    BiForm& operator*=(const Rat& s) {
        for (Rat& x : c_) x *= s;
        return *this;
    }

    friend BiForm operator+(BiForm a, const BiForm& b) { return a += b; }
    friend BiForm operator-(BiForm a, const BiForm& b) { return a -= b; }
    friend BiForm operator*(BiForm a, const Rat& s) { return a *= s; }
    friend BiForm operator*(const Rat& s, BiForm a) { return a *= s; }

    friend BiForm operator*(const BiForm& a, const BiForm& b) {
        BiForm out(a.m_ + b.m_, a.n_ + b.n_);
        for (int i = 0; i <= a.m_; ++i)
            for (int j = 0; j <= a.n_; ++j) {
                if (a.at(i, j) == 0) continue;
                for (int k = 0; k <= b.m_; ++k)
                    for (int l = 0; l <= b.n_; ++l) out.at(i + k, j + l) += a.at(i, j) * b.at(k, l);
            }
        return out;
    }

    friend bool operator==(const BiForm&, const BiForm&) = default;

    Rat evaluate(const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2) const {
        Rat total = 0;
        for (int i = 0; i <= m_; ++i)
            for (int j = 0; j <= n_; ++j) {
                if (at(i, j) == 0) continue;
                Rat term = at(i, j);
                for (int k = 0; k < m_ - i; ++k) term *= x1;
                for (int k = 0; k < i; ++k) term *= y1;
                for (int k = 0; k < n_ - j; ++k) term *= x2;
                for (int k = 0; k < j; ++k) term *= y2;
                total += term;
            }
        return total;
    }

private:
    void require_same_bidegree(const BiForm& o) const {
        if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("bidegree mismatch");
    }

    int m_, n_;
    std::vector<Rat> c_;
};

namespace detail {

// Term scan order for division: higher X2 exponent first (smaller j), then
// higher X1 exponent (smaller i). Within a fixed bidegree this is a monomial
// order, so long division by a single divisor leaves remainder zero exactly
// when the divisor divides.
inline std::optional<std::pair<int, int>> lead_cell(const BiForm& f) {
    for (int j = 0; j <= f.deg2(); ++j)
        for (int i = 0; i <= f.deg1(); ++i)
            if (f.at(i, j) != 0) return std::make_pair(i, j);
    return std::nullopt;
}

}  // namespace detail

/// Exact division of bihomogeneous forms: returns Q with B = L * Q if L
/// divides B, and empty otherwise. Requires L nonzero and bidegrees
/// componentwise compatible.
inline std::optional<BiForm> biform_exact_divide(const BiForm& B, const BiForm& L) {
    if (L.is_zero()) throw std::domain_error("division by zero biform");
    const int qm = B.deg1() - L.deg1(), qn = B.deg2() - L.deg2();
    if (qm < 0 || qn < 0) return std::nullopt;
    const auto llead = *detail::lead_cell(L);
    BiForm rem = B, quot(qm, qn);
    while (true) {
        const auto rlead = detail::lead_cell(rem);
        if (!rlead) break;
        const int qi = rlead->first - llead.first, qj = rlead->second - llead.second;
        if (qi < 0 || qi > qm || qj < 0 || qj > qn) return std::nullopt;
        const Rat coef = rem.at(rlead->first, rlead->second) / L.at(llead.first, llead.second);
        quot.at(qi, qj) += coef;
        BiForm shift(qm, qn);
        shift.at(qi, qj) = coef;
        rem -= L * shift;
    }
    return quot;
}

/// Substitutes (x, y) for the chosen variable pair of a bidegree-(3,3) form
/// and returns the resulting binary cubic in the remaining pair.
inline BinaryCubicForm specialize_biform(const BiForm& B, int side, const Rat& x, const Rat& y) {
    if (x == 0 && y == 0) throw std::domain_error("specialization point (0,0)");
    if (side != 1 && side != 2) throw std::invalid_argument("side must be 1 or 2");
    const int sdeg = side == 1 ? B.deg1() : B.deg2();
    const int odeg = side == 1 ? B.deg2() : B.deg1();
    if (odeg != 3) throw std::invalid_argument("remaining variable pair must have degree 3");
    std::vector<Rat> pow_x(sdeg + 1, Rat(1)), pow_y(sdeg + 1, Rat(1));
    for (int k = 1; k <= sdeg; ++k) {
        pow_x[k] = pow_x[k - 1] * x;
        pow_y[k] = pow_y[k - 1] * y;
    }
    std::array<Rat, 4> out{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int i = 0; i <= sdeg; ++i) {
        const Rat weight = pow_x[sdeg - i] * pow_y[i];
        for (int j = 0; j <= 3; ++j) {
            const Rat& coef = side == 1 ? B.at(i, j) : B.at(j, i);
            out[static_cast<std::size_t>(j)] += coef * weight;
        }
    }
    return {out[0], out[1], out[2], out[3]};
}

}  // namespace cubiform
