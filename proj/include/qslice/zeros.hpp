#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qslice/jet.hpp"
#include "qslice/quaternion.hpp"

namespace qslice {

/// Classified zero set of a quaternionic polynomial. A conjugate root pair
/// of P^s carries either a whole sphere of zeros or exactly one point zero.
template <class T = double>
struct ZeroReport {
    std::vector<std::pair<T, int>> real_zeros;   // (point, multiplicity)
    std::vector<std::pair<T, T>> spherical_zeros;  // sphere alpha + beta*S
    std::vector<Quaternion<T>> isolated_zeros;
    T max_residual = T(0);  // worst |P| over all reported zeros
};

/// Witness that a normalized function cannot have a star-logarithm:
/// a non-real isolated zero of g_v where g differs from 1.
template <class T = double>
struct Obstruction {
    Quaternion<T> zero_point;
    Quaternion<T> g_value;
};

template <class T = double>
struct ClassifyOptions {
    T strip_tol = T(1e-10);
    // roots beyond this radius are discarded before classification
    T radius_cap = std::numeric_limits<T>::infinity();
    T spherical_tol = T(1e-8);
};

namespace detail {

template <class T>
std::complex<T> horner(const std::vector<T>& p, const std::complex<T>& z) {
    std::complex<T> r{p.back()};
    for (std::size_t k = p.size() - 1; k-- > 0;) r = r * z + p[k];
    return r;
}

template <class T>
std::vector<T> poly_derivative(const std::vector<T>& p) {
    std::vector<T> d(std::max<std::size_t>(p.size() - 1, 1), T(0));
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = T(k) * p[k];
    return d;
}

// Newton on u = p/p', which has simple roots at every root of p; this keeps
// multiple roots from scattering into spurious clusters.
template <class T>
std::complex<T> polish_root(const std::vector<T>& p, const std::vector<T>& dp,
                            const std::vector<T>& ddp, std::complex<T> z) {
    for (int it = 0; it < 12; ++it) {
        std::complex<T> f = horner(p, z);
        std::complex<T> f1 = horner(dp, z);
        std::complex<T> f2 = horner(ddp, z);
        std::complex<T> den = f1 * f1 - f * f2;
        std::complex<T> step;
        if (std::abs(den) > T(0))
            step = f * f1 / den;
        else if (std::abs(f1) > T(0))
            step = f / f1;
        else
            break;
        z -= step;
        if (std::abs(step) <= T(1e-16) * std::max(T(1), std::abs(z))) break;
    }
    return z;
}

// Full (untruncated) coefficients of P^s for a degree-d polynomial.
template <class T>
std::vector<T> full_symmetrized(const std::vector<Quaternion<T>>& a) {
    std::vector<T> s(2 * a.size() - 1, T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) s[i + j] += (a[i] * conj(a[j])).w;
    return s;
}

template <class T>
std::vector<std::complex<T>> companion_roots(std::vector<T> s) {
    std::size_t n = s.size() - 1;
    for (T& v : s) v /= s[n];
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> comp =
        Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
    for (std::size_t k = 0; k + 1 < n; ++k) comp(k + 1, k) = T(1);
    for (std::size_t k = 0; k < n; ++k) comp(k, n - 1) = -s[k];
    Eigen::EigenSolver<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>> es(comp, false);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("classify_zeros: companion eigensolver did not converge");
    std::vector<std::complex<T>> roots(n);
    for (std::size_t k = 0; k < n; ++k) roots[k] = es.eigenvalues()[k];
    return roots;
}

// Quaternion-coefficient Horner at a quaternion point (left powers).
template <class T>
Quaternion<T> qpoly_eval(const std::vector<Quaternion<T>>& a, const Quaternion<T>& q) {
    Quaternion<T> r = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) r = q * r + a[k];
    return r;
}

// Synthetic division of P by (q - x) for real x; remainder in *rem.
template <class T>
std::vector<Quaternion<T>> qpoly_divide_linear(const std::vector<Quaternion<T>>& a, T x,
                                               Quaternion<T>* rem) {
    std::vector<Quaternion<T>> b(a.size() - 1);
    Quaternion<T> carry = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        b[k] = carry;
        carry = a[k] + carry * x;
    }
    *rem = carry;
    return b;
}

}  // namespace detail

/// Classify the zero set of a quaternionic polynomial (given as a jet with
/// trailing coefficients at or below the strip tolerance).
///
/// The real polynomial P^s is rooted via companion-matrix eigenvalues with
/// Newton polish; each conjugate pair is resolved into a spherical zero or
/// the single isolated zero on its sphere through the affine restriction
/// P(alpha + J beta) = c + J d given by the representation formula.
template <class T>
ZeroReport<T> classify_zeros(const QJet<T>& p, const ClassifyOptions<T>& opts = {}) {
    std::size_t deg = stripped_degree(p, opts.strip_tol);
    T scale = std::max(T(1), max_coeff_norm(p));
    if (deg == 0) {
        if (abs(p.c[0]) <= opts.strip_tol * scale)
            throw std::domain_error("classify_zeros: zero polynomial");
        return {};
    }
    std::vector<Quaternion<T>> a(p.c.begin(), p.c.begin() + deg + 1);

    std::vector<T> s = detail::full_symmetrized(a);
    std::vector<T> ds = detail::poly_derivative(s);
    std::vector<T> dds = detail::poly_derivative(ds);

    std::vector<std::complex<T>> roots = detail::companion_roots(s);

    // A root of multiplicity m scatters over a radius ~eps^(1/m) disc, both
    // under eigenvalue rounding and under the strip perturbation, while the
    // fragment mean stays first-order accurate (the fragments spread
    // symmetrically). Cluster the raw eigenvalues and classify the mean;
    // when that fails (a genuine root merged with unrelated truncation
    // noise) the members are polished and classified individually instead.
    struct Cluster {
        std::complex<T> mean;
        std::vector<std::complex<T>> members;
    };
    std::vector<Cluster> clusters;
    for (const auto& z : roots) {
        if (!(std::abs(z) <= opts.radius_cap)) continue;  // drops NaN too
        bool merged = false;
        for (Cluster& cl : clusters) {
            if (std::abs(z - cl.mean) <= T(1e-3) * std::max(T(1), std::abs(cl.mean))) {
                cl.members.push_back(z);
                cl.mean = {};
                for (const auto& m : cl.members) cl.mean += m;
                cl.mean /= T(cl.members.size());
                merged = true;
                break;
            }
        }
        if (!merged) clusters.push_back({z, {z}});
    }

    ZeroReport<T> rep;
    T small = opts.spherical_tol * (T(1) + scale);

    auto try_classify = [&](const std::complex<T>& z) -> bool {
        T alpha = z.real(), beta = z.imag();
        if (std::abs(beta) <= T(1e-10) * std::max(T(1), std::abs(alpha))) {
            // real zero of P^s; multiplicity read off P by synthetic division
            std::vector<Quaternion<T>> cur = a;
            int mult = 0;
            while (cur.size() > 1) {
                Quaternion<T> r;
                auto next = detail::qpoly_divide_linear(cur, alpha, &r);
                if (abs(r) > T(1e-6) * scale) break;
                ++mult;
                cur = next;
            }
            if (mult == 0) return false;
            rep.real_zeros.emplace_back(alpha, mult);
            rep.max_residual =
                std::max(rep.max_residual, abs(detail::qpoly_eval(a, Quaternion<T>{alpha})));
            return true;
        }
        if (beta < T(0)) return true;  // conjugate partner carries the pair

        Quaternion<T> qi{T(0), T(1), T(0), T(0)};
        Quaternion<T> zq = Quaternion<T>{alpha} + qi * beta;
        Quaternion<T> A = detail::qpoly_eval(a, zq);
        Quaternion<T> B = detail::qpoly_eval(a, conj(zq));
        Quaternion<T> c = (A + B) * T(0.5);
        Quaternion<T> d = qi * (B - A) * T(0.5);

        if (abs(c) <= small && abs(d) <= small) {
            rep.spherical_zeros.emplace_back(alpha, beta);
            T worst = T(0);
            for (const Quaternion<T>& J : {Quaternion<T>{0, 1, 0, 0}, Quaternion<T>{0, 0, 1, 0},
                                           Quaternion<T>{0, 0, 0, 1}}) {
                worst = std::max(worst,
                                 abs(detail::qpoly_eval(a, Quaternion<T>{alpha} + J * beta)));
            }
            rep.max_residual = std::max(rep.max_residual, worst);
            return true;
        }
        if (abs(d) <= small) return false;  // no zero on this sphere
        Quaternion<T> J = -(c * inverse(d));
        Quaternion<T> J2 = J * J;
        if (abs(J2 + Quaternion<T>{T(1)}) > T(1e-6) * std::max(T(1), norm_sq(J))) return false;
        J = vector_part(J);
        J = J / abs(J);
        Quaternion<T> q0 = Quaternion<T>{alpha} + J * beta;
        rep.isolated_zeros.push_back(q0);
        rep.max_residual = std::max(rep.max_residual, abs(detail::qpoly_eval(a, q0)));
        return true;
    };

    for (const Cluster& cl : clusters) {
        std::complex<T> z =
            cl.members.size() == 1 ? detail::polish_root(s, ds, dds, cl.mean) : cl.mean;
        if (try_classify(z)) continue;
        if (cl.members.size() > 1)
            for (const auto& m : cl.members) (void)try_classify(detail::polish_root(s, ds, dds, m));
    }

    // fallback classification can record near-duplicates; collapse them
    auto near = [](T u, T v) { return std::abs(u - v) <= T(1e-6) * std::max(T(1), std::abs(u)); };
    std::sort(rep.real_zeros.begin(), rep.real_zeros.end());
    rep.real_zeros.erase(std::unique(rep.real_zeros.begin(), rep.real_zeros.end(),
                                     [&](const auto& u, const auto& v) {
                                         return near(u.first, v.first);
                                     }),
                         rep.real_zeros.end());
    std::sort(rep.spherical_zeros.begin(), rep.spherical_zeros.end());
    rep.spherical_zeros.erase(
        std::unique(rep.spherical_zeros.begin(), rep.spherical_zeros.end(),
                    [&](const auto& u, const auto& v) {
                        return near(u.first, v.first) && near(u.second, v.second);
                    }),
        rep.spherical_zeros.end());
    std::sort(rep.isolated_zeros.begin(), rep.isolated_zeros.end(),
              [](const Quaternion<T>& u, const Quaternion<T>& v) {
                  return std::tie(u.w, u.x, u.y, u.z) < std::tie(v.w, v.x, v.y, v.z);
              });
    rep.isolated_zeros.erase(std::unique(rep.isolated_zeros.begin(), rep.isolated_zeros.end(),
                                         [&](const auto& u, const auto& v) {
                                             return abs(u - v) <= T(1e-6) * std::max(T(1), abs(u));
                                         }),
                             rep.isolated_zeros.end());
    return rep;
}

/// The star-logarithm obstruction test: every non-real isolated zero of the
/// vector part of a normalized function must carry the value 1. Zeros beyond
/// the trust radius are outside the representable ball and are not checked.
template <class T>
std::vector<Obstruction<T>> obstruction_check(const QJet<T>& ghat, const ZeroReport<T>& report,
                                              T value_tol = T(1e-6)) {
    std::vector<Obstruction<T>> found;
    for (const auto& q0 : report.isolated_zeros) {
        if (abs(q0) > ghat.trust_radius * (T(1) + T(1e-6))) continue;
        Quaternion<T> v = eval(ghat, q0);
        if (abs(v - Quaternion<T>{T(1)}) > value_tol) found.push_back({q0, v});
    }
    return found;
}

}  // namespace qslice
