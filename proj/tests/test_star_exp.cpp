#include <doctest.h>

#include <numbers>

#include "qslice/rng.hpp"
#include "qslice/star_exp.hpp"

using namespace qslice;
using std::numbers::pi;

namespace {
const Quaternion<double> Qi{0, 1, 0, 0};
const Quaternion<double> Qj{0, 0, 1, 0};

QJet<double> random_jet(Rng& rng, std::size_t order, double scale) {
    QJet<double> f;
    f.c.resize(order + 1);
    for (auto& a : f.c)
        a = Quaternion<double>{rng.uniform(-scale, scale), rng.uniform(-scale, scale),
                               rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
    return f;
}
}  // namespace

TEST_CASE("closed-form constant exponentials") {
    CHECK(max_coeff_dist(star_exp_series(qjet_const(Quaternion<double>{}, 4)),
                         to_qjet(rjet_const(1.0, 4))) <= 1e-15);

    QJet<double> pii = qjet_const(Qi * pi, 4);
    CHECK(abs(star_exp_series(pii).c[0] + Quaternion<double>{1}) <= 1e-12);
    CHECK(abs(star_exp(pii).c[0] + Quaternion<double>{1}) <= 1e-12);

    QJet<double> piij = qjet_const(Qi * pi + Qj * pi, 4);
    double s2 = std::sqrt(2.0);
    Quaternion<double> expect =
        Quaternion<double>{std::cos(s2 * pi)} + (Qi + Qj) * (std::sin(s2 * pi) / s2);
    CHECK(abs(star_exp_series(piij).c[0] - expect) <= 1e-10);
    CHECK(abs(star_exp(piij).c[0] - expect) <= 1e-10);
}

TEST_CASE("exp of i + qj evaluated at j") {
    QJet<double> f;
    f.c = {Qi, Qj};
    f = pad(f, 24);
    for (const QJet<double>& e : {star_exp(f), star_exp_series(f)})
        CHECK(abs(eval(e, Qj) - Qi) <= 1e-12);
}

TEST_CASE("exp of qi is cos + i sin as a jet") {
    QJet<double> f;
    f.c.assign(17, Quaternion<double>{});
    f.c[1] = Qi;
    QJet<double> e = star_exp(f);
    // compare against the scalar Taylor coefficients of cos and sin
    double fact = 1.0;
    for (std::size_t k = 0; k < e.c.size(); ++k) {
        if (k > 0) fact *= double(k);
        double cosk = (k % 2 == 0) ? ((k / 2) % 2 == 0 ? 1.0 : -1.0) / fact : 0.0;
        double sink = (k % 2 == 1) ? (((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0) / fact : 0.0;
        CHECK(abs(e.c[k] - (Quaternion<double>{cosk} + Qi * sink)) <= 1e-14);
    }
}

TEST_CASE("slice preserving jets exponentiate through exp") {
    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        RJet<double> r;
        r.c.resize(13);
        for (auto& v : r.c) v = rng.uniform(-0.8, 0.8);
        QJet<double> e = star_exp(to_qjet(r));
        CHECK(max_coeff_dist(e, to_qjet(exp(r))) <= 1e-12);
    }
}

TEST_CASE("route agreement on random jets") {
    Rng rng(42);
    double worst = 0;
    for (int t = 0; t < 60; ++t) {
        std::size_t order = 2 + std::size_t(rng.uniform() * 15);
        QJet<double> f = random_jet(rng, order, 1.0);  // coefficient norms up to 2
        worst = std::max(worst, max_coeff_dist(star_exp(f), star_exp_series(f)));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("exp_* structural identities") {
    Rng rng(43);
    for (int t = 0; t < 30; ++t) {
        QJet<double> f = random_jet(rng, 10, 1.0);
        QJet<double> e = star_exp(f);

        auto [f0, fv] = real_vector_split(f);
        CHECK(max_coeff_dist(to_qjet(symmetrize(e)), to_qjet(exp(2.0 * f0))) <= 1e-9);

        QJet<double> idj = star_mul(star_exp(-f), e);
        CHECK(abs(idj[0] - Quaternion<double>{1}) <= 1e-9);
        for (std::size_t k = 1; k < idj.c.size(); ++k) CHECK(abs(idj[k]) <= 1e-9);

        CHECK(max_coeff_dist(star_inverse(e), star_exp(-f)) <= 1e-8);
    }
}

TEST_CASE("additivity holds exactly when the factors commute") {
    Rng rng(44);
    for (int t = 0; t < 20; ++t) {
        // commuting pair: real jet and a random jet
        RJet<double> r;
        r.c.resize(11);
        for (auto& v : r.c) v = rng.uniform(-0.5, 0.5);
        QJet<double> f = random_jet(rng, 10, 0.5);
        QJet<double> g = to_qjet(r);
        REQUIRE(max_coeff_dist(star_mul(f, g), star_mul(g, f)) <= 1e-13);
        CHECK(max_coeff_dist(star_exp(f + g), star_mul(star_exp(f), star_exp(g))) <= 1e-9);
    }

    // non-commuting witness: pi*i and pi*j
    QJet<double> a = qjet_const(Qi * pi, 2), b = qjet_const(Qj * pi, 2);
    QJet<double> sum = star_exp(a + b);
    QJet<double> prod = star_mul(star_exp(a), star_exp(b));
    CHECK(max_coeff_dist(sum, prod) > 0.5);  // they genuinely differ
    double s2 = std::sqrt(2.0);
    Quaternion<double> expect =
        Quaternion<double>{std::cos(s2 * pi)} + (Qi + Qj) * (std::sin(s2 * pi) / s2);
    CHECK(abs(sum.c[0] - expect) <= 1e-10);
    CHECK(abs(prod.c[0] - Quaternion<double>{1}) <= 1e-12);
}

TEST_CASE("star cosine and sine") {
    auto [c0, s0] = star_cos_sin(qjet_const(Quaternion<double>{}, 4));
    CHECK(max_coeff_dist(c0, to_qjet(rjet_const(1.0, 4))) <= 1e-15);
    CHECK(max_coeff_norm(s0) <= 1e-15);

    Rng rng(45);
    for (int t = 0; t < 20; ++t) {
        RJet<double> r;
        r.c.resize(11);
        for (auto& v : r.c) v = rng.uniform(-0.8, 0.8);
        auto [cj, sj] = star_cos_sin(to_qjet(r));
        auto [cr, sr] = cos_sin(r);
        CHECK(max_coeff_dist(cj, to_qjet(cr)) <= 1e-11);
        CHECK(max_coeff_dist(sj, to_qjet(sr)) <= 1e-11);
        CHECK(max_coeff_dist(star_mul(cj, cj) + star_mul(sj, sj),
                             to_qjet(rjet_const(1.0, r.order()))) <= 1e-10);
    }
}

TEST_CASE("cos/sin of a vector part against the entire-function shortcut") {
    // for f with no real part, f*f = -f_v^s, so
    // cos_*(f) = cos_sqrt(-f_v^s) and sin_*(f) = sinc_sqrt(-f_v^s) * f
    Rng rng(46);
    for (int t = 0; t < 20; ++t) {
        QJet<double> f = random_jet(rng, 10, 0.7);
        for (auto& a : f.c) a.w = 0;
        auto [cj, sj] = star_cos_sin(f);
        RJet<double> sigma = symmetrize(f);
        RJet<double> minus_sigma = -sigma;
        CHECK(max_coeff_dist(cj, to_qjet(compose_cos_sqrt(minus_sigma))) <= 1e-10);
        CHECK(max_coeff_dist(sj, compose_sinc_sqrt(minus_sigma) * f) <= 1e-10);
    }
}
