#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "qslice/jet.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

// Slice preserving entire functions
//   cos_sqrt(q)  = cos(sqrt(q))          (cos_sqrt(q^2) = cos q)
//   sinc_sqrt(q) = sin(sqrt(q))/sqrt(q)  (sinc_sqrt(q^2) q = sin q)
// and the inverse of cos_sqrt on its fundamental domain,
//   acos_squared(xi) = (arccos xi)^2, defined off the cut (-inf,-1].
// Both square-root branches give the same value, so the functions are entire.

namespace detail {

inline constexpr int kSeriesTerms = 30;
inline constexpr double kSeriesRadius = 0.25;

template <class T>
std::complex<T> cos_sqrt_series(const std::complex<T>& z) {
    std::complex<T> term{T(1)}, acc{T(1)};
    for (int m = 1; m < kSeriesTerms; ++m) {
        term *= -z / T((2 * m - 1) * (2 * m));
        acc += term;
    }
    return acc;
}

template <class T>
std::complex<T> sinc_sqrt_series(const std::complex<T>& z) {
    std::complex<T> term{T(1)}, acc{T(1)};
    for (int m = 1; m < kSeriesTerms; ++m) {
        term *= -z / T((2 * m) * (2 * m + 1));
        acc += term;
    }
    return acc;
}

}  // namespace detail

template <class T>
std::complex<T> cos_sqrt(const std::complex<T>& z) {
    if (std::abs(z) <= T(detail::kSeriesRadius)) return detail::cos_sqrt_series(z);
    return std::cos(std::sqrt(z));
}

template <class T>
std::complex<T> sinc_sqrt(const std::complex<T>& z) {
    if (std::abs(z) <= T(detail::kSeriesRadius)) return detail::sinc_sqrt_series(z);
    std::complex<T> s = std::sqrt(z);
    return std::sin(s) / s;
}

template <class T>
Quaternion<T> cos_sqrt(const Quaternion<T>& q) {
    SlicePoint<T> s = slice_decompose(q);
    return from_slice(cos_sqrt(std::complex<T>(s.alpha, s.beta)), s.axis);
}

template <class T>
Quaternion<T> sinc_sqrt(const Quaternion<T>& q) {
    SlicePoint<T> s = slice_decompose(q);
    return from_slice(sinc_sqrt(std::complex<T>(s.alpha, s.beta)), s.axis);
}

/// True when xi lies on the branch cut (-inf,-1] within tolerance.
template <class T>
bool on_branch_cut(const Quaternion<T>& xi) {
    SlicePoint<T> s = slice_decompose(xi);
    return s.beta <= T(1e-12) && s.alpha <= T(-1) + T(1e-12);
}

template <class T>
T acos_squared_real(T xi) {
    using std::acos;
    using std::acosh;
    if (xi >= T(1)) {
        T a = acosh(std::max(xi, T(1)));
        return -a * a;
    }
    T a = acos(xi);
    return a * a;
}

/// Inverse of cos_sqrt on the fundamental domain: the unique w with
/// cos_sqrt(w) = xi and w in D0. Principal arccos branch (Re in [0, pi]).
template <class T>
Quaternion<T> acos_squared(const Quaternion<T>& xi) {
    if (on_branch_cut(xi))
        throw std::domain_error("acos_squared: argument lies on the cut (-inf,-1]");
    SlicePoint<T> s = slice_decompose(xi);
    if (s.beta <= T(1e-12)) return Quaternion<T>{acos_squared_real(s.alpha)};
    std::complex<T> t = std::acos(std::complex<T>(s.alpha, s.beta));
    return from_slice(t * t, s.axis);
}

// ---- fundamental domains D_n and their boundary parabolas Gamma_n ----

template <class T>
struct DomainLocation {
    bool inside = false;
    bool on_boundary = false;
};

namespace detail {

// x-coordinate of Gamma_n at height y.
template <class T>
T gamma_parabola(int n, T y) {
    T npi2 = T(n) * T(n) * std::numbers::pi_v<T> * std::numbers::pi_v<T>;
    return npi2 - y * y / (T(4) * npi2);
}

}  // namespace detail

template <class T>
bool on_gamma(const Quaternion<T>& q, int n, T tol = T(1e-9)) {
    SlicePoint<T> s = slice_decompose(q);
    T bound = detail::gamma_parabola(n, s.beta);
    return std::abs(s.alpha - bound) <= tol * std::max(T(1), std::abs(s.alpha));
}

template <class T>
DomainLocation<T> in_fundamental_domain(const Quaternion<T>& q, int n, T tol = T(1e-9)) {
    SlicePoint<T> s = slice_decompose(q);
    T scale = std::max(T(1), std::abs(s.alpha));
    DomainLocation<T> loc;
    T hi = detail::gamma_parabola(n + 1, s.beta);
    bool near_hi = std::abs(s.alpha - hi) <= tol * scale;
    if (n == 0) {
        loc.on_boundary = near_hi;
        loc.inside = !near_hi && s.alpha < hi;
        return loc;
    }
    T lo = detail::gamma_parabola(n, s.beta);
    bool near_lo = std::abs(s.alpha - lo) <= tol * scale;
    loc.on_boundary = near_lo || near_hi;
    loc.inside = !loc.on_boundary && lo < s.alpha && s.alpha < hi;
    return loc;
}

// ---- Taylor coefficients about a real center ----

namespace detail {

// Recentered global series: coefficient k of cos_sqrt at c is
// sum_m (-1)^m C(m,k) c^(m-k) / (2m)!, and likewise with (2m+1)! for
// sinc_sqrt. Termwise stable for |c| <= 1.
template <class T>
std::pair<std::vector<T>, std::vector<T>> taylor_recentered(T c, std::size_t order) {
    std::vector<T> mu(order + 1), nu(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        // running values at m = k: (-1)^m C(m,k)/(2m)! resp. /(2m+1)!
        T sign = (k % 2 == 0) ? T(1) : T(-1);
        T fact2m = T(1);
        for (std::size_t i = 1; i <= 2 * k; ++i) fact2m *= T(i);
        T binom = T(1);
        T cpow = T(1);
        T am = sign * binom / fact2m;
        T bm = am / T(2 * k + 1);
        T accm = am, accn = bm;
        for (std::size_t m = k + 1; m <= k + 60; ++m) {
            binom *= T(m) / T(m - k);
            cpow *= c;
            sign = -sign;
            fact2m *= T(2 * m - 1) * T(2 * m);
            am = sign * binom * cpow / fact2m;
            bm = am / T(2 * m + 1);
            accm += am;
            accn += bm;
            if (std::abs(am) < T(1e-20) * std::max(std::abs(accm), T(1e-30))) break;
        }
        mu[k] = accm;
        nu[k] = accn;
    }
    return {mu, nu};
}

// Coefficient recurrences from mu' = -nu/2 and nu'(q) = (mu(q)-nu(q))/(2q),
// seeded with the pointwise values at c. Requires |c| >= 1: for smaller
// centers the subtraction in the nu step amplifies rounding by ~|c|^-k.
template <class T>
std::pair<std::vector<T>, std::vector<T>> taylor_recurrence(T c, std::size_t order) {
    std::vector<T> mu(order + 1), nu(order + 1);
    std::complex<T> zc(c, T(0));
    mu[0] = cos_sqrt(zc).real();
    nu[0] = sinc_sqrt(zc).real();
    for (std::size_t k = 0; k < order; ++k) {
        mu[k + 1] = -nu[k] / (T(2) * T(k + 1));
        nu[k + 1] = (mu[k] - T(2 * k + 1) * nu[k]) / (T(2) * c * T(k + 1));
    }
    return {mu, nu};
}

}  // namespace detail

/// Taylor coefficients of cos_sqrt and sinc_sqrt about the real center c.
template <class T>
std::pair<RJet<T>, RJet<T>> taylor_cos_sinc(T c, std::size_t order) {
    auto [mu, nu] = std::abs(c) <= T(1) ? detail::taylor_recentered(c, order)
                                        : detail::taylor_recurrence(c, order);
    RJet<T> rm, rn;
    rm.c = std::move(mu);
    rn.c = std::move(nu);
    return {rm, rn};
}

// ---- formal composition with real jets ----

namespace detail {

// outer(inner) where outer holds Taylor coefficients about inner's constant
// term; Horner in the zero-constant part of inner.
template <class T>
RJet<T> compose_about_center(const RJet<T>& outer, const RJet<T>& inner) {
    RJet<T> tail = inner;
    tail.c[0] = T(0);
    RJet<T> acc = rjet_const(outer.c.back(), inner.order());
    acc.trust_radius = inner.trust_radius;
    acc.tol = inner.tol;
    for (std::size_t k = outer.c.size() - 1; k-- > 0;) {
        acc = acc * tail;
        acc.c[0] += outer.c[k];
    }
    return acc;
}

}  // namespace detail

/// cos_sqrt composed with a real jet.
template <class T>
RJet<T> compose_cos_sqrt(const RJet<T>& s) {
    auto [mu, nu] = taylor_cos_sinc(s.c[0], s.order());
    return detail::compose_about_center(mu, s);
}

/// sinc_sqrt composed with a real jet.
template <class T>
RJet<T> compose_sinc_sqrt(const RJet<T>& s) {
    auto [mu, nu] = taylor_cos_sinc(s.c[0], s.order());
    return detail::compose_about_center(nu, s);
}

/// acos_squared composed with a real jet: the unique w with
/// cos_sqrt(w) = s and w(0) = acos_squared(s(0)), obtained order by order
/// from sinc_sqrt(w) w' = -2 s'.
template <class T>
RJet<T> compose_acos_squared(const RJet<T>& s) {
    if (s.c[0] <= T(-1) + T(1e-12))
        throw std::domain_error("compose_acos_squared: center lies on the cut (-inf,-1]");
    std::size_t n = s.order();
    T w0 = acos_squared_real(s.c[0]);
    auto [mu_t, nu_t] = taylor_cos_sinc(w0, n);
    RJet<T> w = s;
    w.c.assign(n + 1, T(0));
    w.c[0] = w0;
    T v0 = nu_t.c[0];  // sinc_sqrt never vanishes on D0
    for (std::size_t m = 1; m <= n; ++m) {
        RJet<T> v = detail::compose_about_center(truncate(nu_t, m - 1), truncate(w, m - 1));
        T acc = T(-2) * T(m) * s[m];
        for (std::size_t j = 1; j < m; ++j) acc -= v[j] * T(m - j) * w.c[m - j];
        w.c[m] = acc / (T(m) * v0);
    }
    return w;
}

}  // namespace qslice
