#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qslice/quaternion.hpp"

namespace qslice {

/// Truncated power series at center 0 with real coefficients: a model of a
/// slice preserving function on a ball. Coefficient k multiplies q^k.
template <class T = double>
struct RJet {
    std::vector<T> c{T(0)};
    T trust_radius = T(1);
    T tol = T(1e-10);

    std::size_t order() const { return c.size() - 1; }
    T operator[](std::size_t k) const { return k < c.size() ? c[k] : T(0); }
};

/// Truncated power series sum_k q^k a_k with right quaternion coefficients.
template <class T = double>
struct QJet {
    std::vector<Quaternion<T>> c{Quaternion<T>{}};
    T trust_radius = T(1);
    T tol = T(1e-10);

    std::size_t order() const { return c.size() - 1; }
    Quaternion<T> operator[](std::size_t k) const {
        return k < c.size() ? c[k] : Quaternion<T>{};
    }
};

/// The four slice preserving components of f = f0 + f1 i + f2 j + f3 k.
template <class T = double>
struct VectorSplit {
    RJet<T> f0, f1, f2, f3;
};

namespace detail {

template <class T>
void merge_meta(const T& ra, const T& ta, const T& rb, const T& tb, T& r, T& t) {
    r = std::min(ra, rb);
    t = std::max(ta, tb);
}

}  // namespace detail

template <class T>
RJet<T> rjet_const(T v, std::size_t order = 0) {
    RJet<T> r;
    r.c.assign(order + 1, T(0));
    r.c[0] = v;
    return r;
}

template <class T>
QJet<T> qjet_const(const Quaternion<T>& v, std::size_t order = 0) {
    QJet<T> r;
    r.c.assign(order + 1, Quaternion<T>{});
    r.c[0] = v;
    return r;
}

template <class T>
QJet<T> to_qjet(const RJet<T>& f) {
    QJet<T> r;
    r.c.resize(f.c.size());
    for (std::size_t k = 0; k < f.c.size(); ++k) r.c[k] = Quaternion<T>{f.c[k]};
    r.trust_radius = f.trust_radius;
    r.tol = f.tol;
    return r;
}

template <class T>
RJet<T> pad(RJet<T> f, std::size_t order) {
    f.c.resize(std::max(f.c.size(), order + 1), T(0));
    return f;
}

template <class T>
QJet<T> pad(QJet<T> f, std::size_t order) {
    f.c.resize(std::max(f.c.size(), order + 1), Quaternion<T>{});
    return f;
}

template <class T>
QJet<T> truncate(QJet<T> f, std::size_t order) {
    f.c.resize(order + 1, Quaternion<T>{});
    return f;
}

template <class T>
RJet<T> truncate(RJet<T> f, std::size_t order) {
    f.c.resize(order + 1, T(0));
    return f;
}

template <class T>
T max_coeff_norm(const RJet<T>& f) {
    T m = T(0);
    for (T v : f.c) m = std::max(m, std::abs(v));
    return m;
}

template <class T>
T max_coeff_norm(const QJet<T>& f) {
    T m = T(0);
    for (const auto& v : f.c) m = std::max(m, abs(v));
    return m;
}

// ---- additive structure ----

template <class T>
RJet<T> operator+(const RJet<T>& a, const RJet<T>& b) {
    RJet<T> r;
    r.c.assign(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a[k] + b[k];
    detail::merge_meta(a.trust_radius, a.tol, b.trust_radius, b.tol, r.trust_radius, r.tol);
    return r;
}

template <class T>
RJet<T> operator-(const RJet<T>& a, const RJet<T>& b) {
    RJet<T> r;
    r.c.assign(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a[k] - b[k];
    detail::merge_meta(a.trust_radius, a.tol, b.trust_radius, b.tol, r.trust_radius, r.tol);
    return r;
}

template <class T>
RJet<T> operator-(RJet<T> a) {
    for (T& v : a.c) v = -v;
    return a;
}

template <class T>
QJet<T> operator+(const QJet<T>& a, const QJet<T>& b) {
    QJet<T> r;
    r.c.assign(std::max(a.c.size(), b.c.size()), Quaternion<T>{});
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a[k] + b[k];
    detail::merge_meta(a.trust_radius, a.tol, b.trust_radius, b.tol, r.trust_radius, r.tol);
    return r;
}

template <class T>
QJet<T> operator-(const QJet<T>& a, const QJet<T>& b) {
    QJet<T> r;
    r.c.assign(std::max(a.c.size(), b.c.size()), Quaternion<T>{});
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a[k] - b[k];
    detail::merge_meta(a.trust_radius, a.tol, b.trust_radius, b.tol, r.trust_radius, r.tol);
    return r;
}

template <class T>
QJet<T> operator-(QJet<T> a) {
    for (auto& v : a.c) v = -v;
    return a;
}

template <class T>
QJet<T> operator+(const QJet<T>& a, const RJet<T>& b) { return a + to_qjet(b); }
template <class T>
QJet<T> operator+(const RJet<T>& a, const QJet<T>& b) { return to_qjet(a) + b; }

// ---- products ----

/// The regular (*) product. On power series it is the coefficient
/// convolution c_n = sum_k a_k b_{n-k}, truncated at the padded order.
template <class T>
QJet<T> star_mul(const QJet<T>& a, const QJet<T>& b) {
    QJet<T> r;
    std::size_t n = std::max(a.c.size(), b.c.size());
    r.c.assign(n, Quaternion<T>{});
    for (std::size_t i = 0; i < std::min(a.c.size(), n); ++i)
        for (std::size_t j = 0; i + j < n && j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    detail::merge_meta(a.trust_radius, a.tol, b.trust_radius, b.tol, r.trust_radius, r.tol);
    return r;
}

template <class T>
RJet<T> operator*(const RJet<T>& a, const RJet<T>& b) {
    RJet<T> r;
    std::size_t n = std::max(a.c.size(), b.c.size());
    r.c.assign(n, T(0));
    for (std::size_t i = 0; i < std::min(a.c.size(), n); ++i)
        for (std::size_t j = 0; i + j < n && j < b.c.size(); ++j)
            r.c[i + j] += a.c[i] * b.c[j];
    detail::merge_meta(a.trust_radius, a.tol, b.trust_radius, b.tol, r.trust_radius, r.tol);
    return r;
}

/// Slice preserving factors commute with everything, and the product keeps
/// the component structure of b exactly (no cross-component rounding).
template <class T>
QJet<T> operator*(const RJet<T>& a, const QJet<T>& b) {
    QJet<T> r;
    std::size_t n = std::max(a.c.size(), b.c.size());
    r.c.assign(n, Quaternion<T>{});
    for (std::size_t i = 0; i < std::min(a.c.size(), n); ++i)
        for (std::size_t j = 0; i + j < n && j < b.c.size(); ++j)
            r.c[i + j] += b.c[j] * a.c[i];
    detail::merge_meta(a.trust_radius, a.tol, b.trust_radius, b.tol, r.trust_radius, r.tol);
    return r;
}

template <class T>
QJet<T> operator*(const QJet<T>& a, const RJet<T>& b) { return b * a; }

template <class T>
QJet<T> operator*(const QJet<T>& a, const QJet<T>& b) { return star_mul(a, b); }

template <class T>
RJet<T> operator*(RJet<T> a, T s) {
    for (T& v : a.c) v *= s;
    return a;
}
template <class T>
RJet<T> operator*(T s, RJet<T> a) { return a * s; }

template <class T>
QJet<T> operator*(QJet<T> a, T s) {
    for (auto& v : a.c) v *= s;
    return a;
}
template <class T>
QJet<T> operator*(T s, QJet<T> a) { return a * s; }

// ---- conjugation / symmetrization / split ----

/// Slice conjugate: coefficientwise quaternion conjugation.
template <class T>
QJet<T> conj(QJet<T> f) {
    for (auto& v : f.c) v = conj(v);
    return f;
}

/// f^s = f * f^c, a real jet. The vector parts of the product cancel in
/// exact arithmetic; residuals above tol indicate corrupted inputs.
template <class T>
RJet<T> symmetrize(const QJet<T>& f) {
    QJet<T> p = star_mul(f, conj(f));
    T scale = std::max(T(1), max_coeff_norm(p));
    RJet<T> r;
    r.c.resize(p.c.size());
    r.trust_radius = p.trust_radius;
    r.tol = p.tol;
    for (std::size_t k = 0; k < p.c.size(); ++k) {
        if (abs(vector_part(p.c[k])) > f.tol * scale)
            throw std::runtime_error("symmetrize: residual vector part above tolerance");
        r.c[k] = p.c[k].w;
    }
    return r;
}

template <class T>
VectorSplit<T> split(const QJet<T>& f) {
    VectorSplit<T> s;
    for (RJet<T>* p : {&s.f0, &s.f1, &s.f2, &s.f3}) {
        p->c.resize(f.c.size());
        p->trust_radius = f.trust_radius;
        p->tol = f.tol;
    }
    for (std::size_t k = 0; k < f.c.size(); ++k) {
        s.f0.c[k] = f.c[k].w;
        s.f1.c[k] = f.c[k].x;
        s.f2.c[k] = f.c[k].y;
        s.f3.c[k] = f.c[k].z;
    }
    return s;
}

template <class T>
QJet<T> assemble(const VectorSplit<T>& s) {
    QJet<T> f;
    f.c.resize(s.f0.c.size());
    f.trust_radius = s.f0.trust_radius;
    f.tol = s.f0.tol;
    for (std::size_t k = 0; k < f.c.size(); ++k)
        f.c[k] = Quaternion<T>{s.f0[k], s.f1[k], s.f2[k], s.f3[k]};
    return f;
}

/// Real part f0 and vector part f_v of a jet, both exact componentwise.
template <class T>
std::pair<RJet<T>, QJet<T>> real_vector_split(const QJet<T>& f) {
    RJet<T> f0;
    QJet<T> fv;
    f0.c.resize(f.c.size());
    fv.c.resize(f.c.size());
    f0.trust_radius = fv.trust_radius = f.trust_radius;
    f0.tol = fv.tol = f.tol;
    for (std::size_t k = 0; k < f.c.size(); ++k) {
        f0.c[k] = f.c[k].w;
        fv.c[k] = vector_part(f.c[k]);
    }
    return {f0, fv};
}

template <class T>
bool is_real_jet(const QJet<T>& f) {
    T scale = std::max(T(1), max_coeff_norm(f));
    for (const auto& v : f.c)
        if (abs(vector_part(v)) > f.tol * scale) return false;
    return true;
}

// ---- evaluation ----

/// Horner evaluation of sum q^n a_n (left powers, right coefficients).
/// Sets *outside_trust when |q| exceeds the trust radius; truncation error
/// beyond that point is the caller's concern.
template <class T>
Quaternion<T> eval(const QJet<T>& f, const Quaternion<T>& q, bool* outside_trust = nullptr) {
    if (outside_trust) *outside_trust = abs(q) > f.trust_radius;
    Quaternion<T> r = f.c.back();
    for (std::size_t k = f.c.size() - 1; k-- > 0;) r = q * r + f.c[k];
    return r;
}

template <class T>
Quaternion<T> eval(const RJet<T>& f, const Quaternion<T>& q, bool* outside_trust = nullptr) {
    if (outside_trust) *outside_trust = abs(q) > f.trust_radius;
    Quaternion<T> r{f.c.back()};
    for (std::size_t k = f.c.size() - 1; k-- > 0;) r = q * r + Quaternion<T>{f.c[k]};
    return r;
}

template <class T>
T eval(const RJet<T>& f, T t) {
    T r = f.c.back();
    for (std::size_t k = f.c.size() - 1; k-- > 0;) r = t * r + f.c[k];
    return r;
}

// ---- comparison ----

template <class T>
T max_coeff_dist(const QJet<T>& a, const QJet<T>& b) {
    T m = T(0);
    for (std::size_t k = 0; k < std::max(a.c.size(), b.c.size()); ++k)
        m = std::max(m, abs(a[k] - b[k]));
    return m;
}

template <class T>
T max_coeff_dist(const RJet<T>& a, const RJet<T>& b) {
    T m = T(0);
    for (std::size_t k = 0; k < std::max(a.c.size(), b.c.size()); ++k)
        m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

/// Coefficientwise comparison, absolute up to the larger coefficient scale.
template <class T, class Jet>
bool jets_close(const Jet& a, const Jet& b, T tol) {
    T scale = std::max(T(1), std::max(max_coeff_norm(a), max_coeff_norm(b)));
    return max_coeff_dist(a, b) <= tol * scale;
}

// ---- real-jet calculus ----

template <class T>
RJet<T> derivative(const RJet<T>& f) {
    RJet<T> r;
    r.trust_radius = f.trust_radius;
    r.tol = f.tol;
    if (f.c.size() <= 1) return r;
    r.c.resize(f.c.size() - 1);
    for (std::size_t k = 1; k < f.c.size(); ++k) r.c[k - 1] = T(k) * f.c[k];
    return r;
}

/// Antiderivative with constant term 0; raises the order by one.
template <class T>
RJet<T> integrate(const RJet<T>& f) {
    RJet<T> r;
    r.trust_radius = f.trust_radius;
    r.tol = f.tol;
    r.c.assign(f.c.size() + 1, T(0));
    for (std::size_t k = 0; k < f.c.size(); ++k) r.c[k + 1] = f.c[k] / T(k + 1);
    return r;
}

template <class T>
RJet<T> exp(const RJet<T>& f) {
    using std::exp;
    RJet<T> r = f;
    std::size_t n = f.order();
    r.c.assign(n + 1, T(0));
    r.c[0] = T(1);
    for (std::size_t m = 1; m <= n; ++m) {
        T acc = T(0);
        for (std::size_t k = 1; k <= m; ++k) acc += T(k) * f[k] * r.c[m - k];
        r.c[m] = acc / T(m);
    }
    T e0 = exp(f.c[0]);
    for (T& v : r.c) v *= e0;
    return r;
}

template <class T>
RJet<T> log(const RJet<T>& f) {
    using std::log;
    if (!(f.c[0] > T(0)))
        throw std::domain_error("log: constant term " + std::to_string(double(f.c[0])) +
                                " is not positive");
    RJet<T> r = f;
    std::size_t n = f.order();
    r.c.assign(n + 1, T(0));
    r.c[0] = log(f.c[0]);
    for (std::size_t m = 1; m <= n; ++m) {
        T acc = T(m) * f[m];
        for (std::size_t k = 1; k < m; ++k) acc -= T(k) * r.c[k] * f[m - k];
        r.c[m] = acc / (T(m) * f.c[0]);
    }
    return r;
}

/// Square root with positive constant term; the positive branch is taken.
template <class T>
RJet<T> sqrt(const RJet<T>& f) {
    using std::sqrt;
    if (!(f.c[0] > T(0)))
        throw std::domain_error("sqrt: constant term " + std::to_string(double(f.c[0])) +
                                " is not positive");
    RJet<T> r = f;
    std::size_t n = f.order();
    r.c.assign(n + 1, T(0));
    r.c[0] = sqrt(f.c[0]);
    for (std::size_t m = 1; m <= n; ++m) {
        T acc = f[m];
        for (std::size_t k = 1; k < m; ++k) acc -= r.c[k] * r.c[m - k];
        r.c[m] = acc / (T(2) * r.c[0]);
    }
    return r;
}

template <class T>
RJet<T> recip(const RJet<T>& f) {
    if (f.c[0] == T(0))
        throw std::domain_error("recip: constant term vanishes");
    RJet<T> r = f;
    std::size_t n = f.order();
    r.c.assign(n + 1, T(0));
    r.c[0] = T(1) / f.c[0];
    for (std::size_t m = 1; m <= n; ++m) {
        T acc = T(0);
        for (std::size_t k = 1; k <= m; ++k) acc += f[k] * r.c[m - k];
        r.c[m] = -acc / f.c[0];
    }
    return r;
}

/// cos and sin of a real jet in one pass (coupled recurrence on the
/// zero-constant part, then the angle addition with the constant term).
template <class T>
std::pair<RJet<T>, RJet<T>> cos_sin(const RJet<T>& f) {
    using std::cos;
    using std::sin;
    std::size_t n = f.order();
    std::vector<T> cc(n + 1, T(0)), ss(n + 1, T(0));
    cc[0] = T(1);
    for (std::size_t m = 0; m < n; ++m) {
        T ac = T(0), as = T(0);
        for (std::size_t k = 0; k <= m; ++k) {
            T g = T(k + 1) * f[k + 1];
            ac -= g * ss[m - k];
            as += g * cc[m - k];
        }
        cc[m + 1] = ac / T(m + 1);
        ss[m + 1] = as / T(m + 1);
    }
    T c0 = cos(f.c[0]), s0 = sin(f.c[0]);
    RJet<T> rc = f, rs = f;
    rc.c.assign(n + 1, T(0));
    rs.c.assign(n + 1, T(0));
    for (std::size_t k = 0; k <= n; ++k) {
        rc.c[k] = c0 * cc[k] - s0 * ss[k];
        rs.c[k] = s0 * cc[k] + c0 * ss[k];
    }
    return {rc, rs};
}

template <class T>
RJet<T> cos(const RJet<T>& f) { return cos_sin(f).first; }
template <class T>
RJet<T> sin(const RJet<T>& f) { return cos_sin(f).second; }

// ---- star inverse ----

/// f^{-*} = (f^s)^{-1} f^c. Requires f^s to have a nonzero constant term.
template <class T>
QJet<T> star_inverse(const QJet<T>& f) {
    RJet<T> s = symmetrize(f);
    if (std::abs(s.c[0]) <= f.tol)
        throw std::domain_error("star_inverse: symmetrized constant term vanishes");
    return recip(s) * conj(f);
}

// ---- polynomial helpers ----

/// Degree after dropping trailing coefficients below tol * max(1, scale).
template <class T>
std::size_t stripped_degree(const QJet<T>& f, T tol) {
    T cutoff = tol * std::max(T(1), max_coeff_norm(f));
    std::size_t d = 0;
    for (std::size_t k = 0; k < f.c.size(); ++k)
        if (abs(f.c[k]) > cutoff) d = k;
    return d;
}

template <class T>
QJet<T> strip(const QJet<T>& f, T tol) {
    return truncate(f, stripped_degree(f, tol));
}

}  // namespace qslice
