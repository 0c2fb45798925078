#pragma once

#include <cstddef>
#include <type_traits>
#include <utility>

#include "qslice/entire.hpp"
#include "qslice/jet.hpp"

namespace qslice {

namespace detail {

// Working scalar for direct series summation. The partial sums of
// sum F^{*n}/n! pass through terms as large as exp(sum_k |a_k|) before
// cancelling, so the accumulation runs at extended precision when the
// ambient scalar is double.
template <class T>
using SeriesScalar = std::conditional_t<std::is_same_v<T, double>, long double, T>;

template <class W, class T>
QJet<W> jet_cast(const QJet<T>& f) {
    QJet<W> r;
    r.c.resize(f.c.size());
    for (std::size_t k = 0; k < f.c.size(); ++k)
        r.c[k] = Quaternion<W>{W(f.c[k].w), W(f.c[k].x), W(f.c[k].y), W(f.c[k].z)};
    r.trust_radius = W(f.trust_radius);
    r.tol = W(f.tol);
    return r;
}

inline constexpr std::size_t kDefaultSeriesTerms = 4 * 65;  // 4x the default order 64

}  // namespace detail

/// Partial sums of the defining series sum_n F^{*n}/n!.
/// max_terms defaults to 4x the truncation order (at least 4x64); terms
/// whose coefficients fall below 1e-3 * tol stop the summation early.
template <class T>
QJet<T> star_exp_series(const QJet<T>& f, std::size_t max_terms = 0) {
    using W = detail::SeriesScalar<T>;
    if (max_terms == 0)
        max_terms = std::max<std::size_t>(4 * (f.order() + 1), detail::kDefaultSeriesTerms);
    QJet<W> fw = detail::jet_cast<W>(f);
    QJet<W> acc = qjet_const(Quaternion<W>{W(1)}, f.order());
    QJet<W> term = acc;
    for (std::size_t n = 1; n <= max_terms; ++n) {
        term = star_mul(term, fw) * (W(1) / W(n));
        acc = acc + term;
        if (max_coeff_norm(term) < W(1e-3) * W(f.tol)) break;
    }
    QJet<T> out = detail::jet_cast<T>(acc);
    out.trust_radius = f.trust_radius;
    out.tol = f.tol;
    return out;
}

/// Closed form through the split f = f0 + f_v:
///   exp_*(f) = exp(f0) (cos_sqrt(f_v^s) + sinc_sqrt(f_v^s) f_v).
template <class T>
QJet<T> star_exp(const QJet<T>& f) {
    auto [f0, fv] = real_vector_split(f);
    RJet<T> sigma = symmetrize(fv);
    RJet<T> e0 = exp(f0);
    QJet<T> core = compose_cos_sqrt(sigma) + compose_sinc_sqrt(sigma) * fv;
    return e0 * core;
}

/// cos_* and sin_* from the defining alternating series.
template <class T>
std::pair<QJet<T>, QJet<T>> star_cos_sin(const QJet<T>& f, std::size_t max_terms = 0) {
    using W = detail::SeriesScalar<T>;
    if (max_terms == 0)
        max_terms = std::max<std::size_t>(4 * (f.order() + 1), detail::kDefaultSeriesTerms);
    QJet<W> fw = detail::jet_cast<W>(f);
    QJet<W> term = qjet_const(Quaternion<W>{W(1)}, f.order());
    QJet<W> c = term, s = term * W(0);
    for (std::size_t n = 1; n <= max_terms; ++n) {
        term = star_mul(term, fw) * (W(1) / W(n));
        // sign pattern of i^n split into real/odd parts
        switch (n % 4) {
            case 0: c = c + term; break;
            case 1: s = s + term; break;
            case 2: c = c - term; break;
            default: s = s - term; break;
        }
        if (max_coeff_norm(term) < W(1e-3) * W(f.tol)) break;
    }
    QJet<T> oc = detail::jet_cast<T>(c), os = detail::jet_cast<T>(s);
    oc.trust_radius = os.trust_radius = f.trust_radius;
    oc.tol = os.tol = f.tol;
    return {oc, os};
}

}  // namespace qslice
