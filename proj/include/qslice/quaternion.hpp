#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qslice {

/// Quaternion w + xi + yj + zk with componentwise storage.
/// Multiplication is the Hamilton product (non-commutative).
template <class T = double>
struct Quaternion {
    T w{}, x{}, y{}, z{};

    constexpr Quaternion() = default;
    constexpr Quaternion(T w_, T x_ = T(0), T y_ = T(0), T z_ = T(0))
        : w(w_), x(x_), y(y_), z(z_) {}

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    constexpr Quaternion& operator*=(T s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(T s) { return *this *= T(1) / s; }
};

template <class T>
constexpr Quaternion<T> operator+(Quaternion<T> a, const Quaternion<T>& b) { return a += b; }
template <class T>
constexpr Quaternion<T> operator-(Quaternion<T> a, const Quaternion<T>& b) { return a -= b; }
template <class T>
constexpr Quaternion<T> operator*(Quaternion<T> a, T s) { return a *= s; }
template <class T>
constexpr Quaternion<T> operator*(T s, Quaternion<T> a) { return a *= s; }
template <class T>
constexpr Quaternion<T> operator/(Quaternion<T> a, T s) { return a /= s; }

// Hamilton product, ij = -ji = k.
template <class T>
constexpr Quaternion<T> operator*(const Quaternion<T>& a, const Quaternion<T>& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

template <class T>
constexpr Quaternion<T> conj(const Quaternion<T>& q) { return {q.w, -q.x, -q.y, -q.z}; }

template <class T>
constexpr T norm_sq(const Quaternion<T>& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

template <class T>
T abs(const Quaternion<T>& q) {
    using std::sqrt;
    return sqrt(norm_sq(q));
}

template <class T>
constexpr Quaternion<T> inverse(const Quaternion<T>& q) {
    return conj(q) / norm_sq(q);
}

template <class T>
constexpr T real_part(const Quaternion<T>& q) { return q.w; }

template <class T>
constexpr Quaternion<T> vector_part(const Quaternion<T>& q) { return {T(0), q.x, q.y, q.z}; }

/// Split q = q0 + qv into the real scalar and the purely imaginary part.
template <class T>
constexpr std::pair<T, Quaternion<T>> real_vector_split(const Quaternion<T>& q) {
    return {q.w, vector_part(q)};
}

/// Scale-aware reality test: |q_v| <= 1e-12 * max(1, |q|).
template <class T>
bool is_real(const Quaternion<T>& q, T tol = T(1e-12)) {
    using std::sqrt;
    T v = sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    return v <= tol * std::max(T(1), abs(q));
}

/// q = alpha + axis * beta with beta >= 0 and axis a unit imaginary quaternion.
/// For real q the axis degenerates; by convention it is set to i.
template <class T = double>
struct SlicePoint {
    T alpha{};
    T beta{};
    Quaternion<T> axis{T(0), T(1), T(0), T(0)};
};

template <class T>
SlicePoint<T> slice_decompose(const Quaternion<T>& q) {
    using std::sqrt;
    SlicePoint<T> s;
    s.alpha = q.w;
    s.beta = sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (s.beta > T(0))
        s.axis = Quaternion<T>{T(0), q.x / s.beta, q.y / s.beta, q.z / s.beta};
    return s;
}

template <class T>
constexpr Quaternion<T> recompose(const SlicePoint<T>& s) {
    return Quaternion<T>{s.alpha} + s.axis * s.beta;
}

/// The normalized vector part q_v/|q_v|, defined away from the reals only.
template <class T>
Quaternion<T> imaginary_unit(const Quaternion<T>& q) {
    if (is_real(q))
        throw std::domain_error("imaginary_unit: undefined for real arguments");
    using std::sqrt;
    T v = sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    return {T(0), q.x / v, q.y / v, q.z / v};
}

/// Embed a complex slice value back into the slice spanned by 1 and axis.
template <class T>
constexpr Quaternion<T> from_slice(const std::complex<T>& zval, const Quaternion<T>& axis) {
    return Quaternion<T>{zval.real()} + axis * zval.imag();
}

/// Pointwise quaternion exponential e^q = e^{q0}(cos|q_v| + sin|q_v| q_v/|q_v|).
template <class T>
Quaternion<T> exp(const Quaternion<T>& q) {
    using std::cos;
    using std::exp;
    using std::sin;
    SlicePoint<T> s = slice_decompose(q);
    T e0 = exp(s.alpha);
    return Quaternion<T>{e0 * cos(s.beta)} + s.axis * (e0 * sin(s.beta));
}

}  // namespace qslice
