#pragma once

#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qslice/entire.hpp"
#include "qslice/jet.hpp"
#include "qslice/rng.hpp"
#include "qslice/star_exp.hpp"
#include "qslice/zeros.hpp"

namespace qslice {

/// Thrown when a computed logarithm fails its own exp_* round-trip check.
struct ResidualError : std::runtime_error {
    double residual;
    ResidualError(const std::string& what, double r) : std::runtime_error(what), residual(r) {}
};

enum class LogRoute { InverseCos, SqrtAngle, SlicePreserving, MinusOneShift };

inline const char* to_string(LogRoute r) {
    switch (r) {
        case LogRoute::InverseCos: return "phi";
        case LogRoute::SqrtAngle: return "tau";
        case LogRoute::SlicePreserving: return "slice_preserving";
        default: return "minus_one_shift";
    }
}

template <class T = double>
struct NormalizedFunction {
    RJet<T> psi;   // exp(psi) = G^s
    QJet<T> ghat;  // exp(-psi/2) G, with ghat^s = 1
};

/// Reduce to the symmetrized-one case: psi = log(G^s) and
/// ghat = exp(-psi/2) G satisfies ghat^s = 1.
template <class T>
NormalizedFunction<T> normalize_symmetrized(const QJet<T>& g) {
    RJet<T> s = symmetrize(g);
    if (!(s.c[0] > g.tol))
        throw std::domain_error("normalize_symmetrized: function vanishes at the center");
    NormalizedFunction<T> n;
    n.psi = log(s);
    n.ghat = exp(T(-0.5) * n.psi) * g;
    RJet<T> check = symmetrize(n.ghat);
    if (!jets_close(check, rjet_const(T(1)), std::max(T(1e-8), g.tol)))
        throw std::runtime_error("normalize_symmetrized: ghat^s deviates from 1");
    return n;
}

/// Solve cos(gamma) = a0, sin(gamma) = a1 for a real jet gamma.
/// gamma' = a0 a1' - a1 a0' integrates termwise; the constant term is the
/// angle of (a0(0), a1(0)).
template <class T>
RJet<T> solve_cos_sin(const RJet<T>& a0, const RJet<T>& a1) {
    using std::atan2;
    T tol = std::max(a0.tol, a1.tol);
    RJet<T> circle = a0 * a0 + a1 * a1;
    if (!jets_close(circle, rjet_const(T(1)), tol))
        throw std::domain_error("solve_cos_sin: a0^2 + a1^2 is not identically 1");
    std::size_t order = std::max(a0.order(), a1.order());
    RJet<T> gamma = truncate(integrate(a0 * derivative(a1) - a1 * derivative(a0)), order);
    gamma.c[0] = atan2(a1.c[0], a0.c[0]);
    gamma.trust_radius = std::min(a0.trust_radius, a1.trust_radius);
    gamma.tol = tol;
    auto [rc, rs] = cos_sin(gamma);
    if (!jets_close(rc, a0, tol) || !jets_close(rs, a1, tol))
        throw std::runtime_error("solve_cos_sin: reconstruction check failed");
    return gamma;
}

/// Logarithm of a normalized function through the inverse of cos_sqrt:
/// f_v = g_v / sinc_sqrt(acos_squared(g_0)). Requires the center value of
/// g_0 to lie off the cut; the denominator never vanishes on the
/// fundamental domain.
template <class T>
QJet<T> log_inverse_route(const QJet<T>& ghat) {
    auto [g0, gv] = real_vector_split(ghat);
    if (g0.c[0] <= T(-1) + T(1e-12))
        throw std::domain_error(
            "log_inverse_route: center value of g_0 lies on the cut (-inf,-1]");
    RJet<T> w = compose_acos_squared(g0);
    RJet<T> denom = compose_sinc_sqrt(w);
    return recip(denom) * gv;
}

/// Logarithm of a normalized function through a square root of g_v^s:
/// tau = sqrt(g_v^s), gamma solves cos/sin(gamma) = (g_0, tau), and
/// f_v = (gamma/tau) g_v. Applicable when g_v^s(0) > 0.
template <class T>
QJet<T> log_sqrt_route(const QJet<T>& ghat) {
    auto [g0, gv] = real_vector_split(ghat);
    RJet<T> sigma = symmetrize(gv);
    if (!(sigma.c[0] > ghat.tol))
        throw std::domain_error("log_sqrt_route: g_v^s vanishes at the center");
    RJet<T> tau = sqrt(sigma);
    RJet<T> gamma = solve_cos_sin(g0, tau);
    RJet<T> beta = gamma * recip(tau);
    return beta * gv;
}

template <class T = double>
struct LogResult {
    QJet<T> f;
    LogRoute route = LogRoute::InverseCos;
    T residual_coeff = T(0);  // max coefficient error of exp_*(f) - g
    T residual_point = T(0);  // max error over sampled points in the ball
};

template <class T = double>
struct LogOptions {
    T coeff_threshold = T(1e-7);
    T point_threshold = T(1e-6);
    int samples = 64;
    std::uint64_t seed = 0x51a9e5c3b1ull;
    bool check_obstructions = true;
    T obstruction_value_tol = T(1e-6);
};

namespace detail {

template <class T>
std::pair<T, T> exp_residuals(const QJet<T>& f, const QJet<T>& g, const LogOptions<T>& opts) {
    QJet<T> e = star_exp(f);
    T rc = max_coeff_dist(e, g);
    T rp = T(0);
    Rng rng(opts.seed);
    for (int k = 0; k < opts.samples; ++k) {
        Quaternion<T> q = rng.quaternion_in_ball(0.97 * double(g.trust_radius));
        rp = std::max(rp, abs(eval(e, q) - eval(g, q)));
    }
    return {rc, rp};
}

// The zero classification is meaningful only when the vector part decays to
// a genuine polynomial well inside the truncation order; otherwise the
// residual verification is the arbiter.
template <class T>
bool polynomial_like(const QJet<T>& gv, T tol) {
    std::size_t d = stripped_degree(gv, tol);
    return d + 8 <= gv.order();
}

}  // namespace detail

/// Constructive star-logarithm of a jet G with G(0) != 0.
///
/// Returns either a LogResult whose exp_* reproduces G within the configured
/// thresholds, or the list of obstructions (non-real isolated zeros of g_v
/// where the normalized function differs from 1) that rule a logarithm out.
template <class T>
std::variant<LogResult<T>, std::vector<Obstruction<T>>> star_log(const QJet<T>& g,
                                                                 const LogOptions<T>& opts = {}) {
    if (abs(g.c[0]) <= g.tol * std::max(T(1), max_coeff_norm(g)))
        throw std::domain_error("star_log: function vanishes at the center");
    NormalizedFunction<T> n = normalize_symmetrized(g);
    RJet<T> half_psi = T(0.5) * n.psi;

    LogResult<T> result;
    if (is_real_jet(n.ghat)) {
        // ghat^2 = ghat^s = 1, so ghat is the constant 1 or -1
        QJet<T> f = to_qjet(half_psi);
        if (std::abs(n.ghat.c[0].w - T(1)) <= T(1e-8)) {
            result.route = LogRoute::SlicePreserving;
        } else if (std::abs(n.ghat.c[0].w + T(1)) <= T(1e-8)) {
            f.c[0] += Quaternion<T>{T(0), std::numbers::pi_v<T>};
            result.route = LogRoute::MinusOneShift;
        } else {
            throw std::runtime_error("star_log: normalized slice preserving function is not +-1");
        }
        result.f = f;
    } else {
        auto [g0, gv] = real_vector_split(n.ghat);
        if (opts.check_obstructions && detail::polynomial_like(gv, g.tol)) {
            ClassifyOptions<T> copts;
            copts.strip_tol = g.tol;
            copts.radius_cap = g.trust_radius * T(1.25);
            ZeroReport<T> zr = classify_zeros(gv, copts);
            std::vector<Obstruction<T>> obs =
                obstruction_check(n.ghat, zr, opts.obstruction_value_tol);
            if (!obs.empty()) return obs;
        }
        QJet<T> fv;
        try {
            fv = log_inverse_route(n.ghat);
            result.route = LogRoute::InverseCos;
        } catch (const std::domain_error&) {
            fv = log_sqrt_route(n.ghat);  // rethrows when inapplicable too
            result.route = LogRoute::SqrtAngle;
        }
        result.f = to_qjet(half_psi) + fv;
    }

    auto [rc, rp] = detail::exp_residuals(result.f, g, opts);
    result.residual_coeff = rc;
    result.residual_point = rp;
    if (rc > opts.coeff_threshold)
        throw ResidualError("star_log: coefficient residual " + std::to_string(double(rc)) +
                                " exceeds threshold",
                            double(rc));
    if (rp > opts.point_threshold)
        throw ResidualError("star_log: pointwise residual " + std::to_string(double(rp)) +
                                " exceeds threshold",
                            double(rp));
    return result;
}

}  // namespace qslice
