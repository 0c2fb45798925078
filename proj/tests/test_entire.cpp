#include <doctest.h>

#include <complex>
#include <numbers>

#include "qslice/entire.hpp"
#include "qslice/rng.hpp"

using namespace qslice;
using std::numbers::pi;

namespace {
const Quaternion<double> one{1};

Quaternion<double> sample_off_cut(Rng& rng, double radius) {
    for (;;) {
        Quaternion<double> q = rng.quaternion_in_ball(radius);
        if (!on_branch_cut(q)) return q;
    }
}

Quaternion<double> sample_d0(Rng& rng) {
    double y = rng.uniform(0.0, 12.0);
    double bound = pi * pi - y * y / (4 * pi * pi);
    double x = bound - rng.uniform(0.05, 25.0);
    return recompose(SlicePoint<double>{x, y, rng.unit_axis()});
}
}  // namespace

TEST_CASE("cos_sqrt closed-form values") {
    CHECK(abs(cos_sqrt(Quaternion<double>{pi * pi}) + one) <= 1e-12);
    CHECK(abs(cos_sqrt(Quaternion<double>{0}) - one) <= 1e-12);
    CHECK(abs(cos_sqrt(Quaternion<double>{pi * pi / 4})) <= 1e-12);
    for (int n = 0; n <= 5; ++n) {
        double expect = (n % 2 == 0) ? 1.0 : -1.0;
        CHECK(abs(cos_sqrt(Quaternion<double>{pi * pi * n * n}) -
                  Quaternion<double>{expect}) <= 1e-10);
    }
}

TEST_CASE("sinc_sqrt closed-form values") {
    CHECK(abs(sinc_sqrt(Quaternion<double>{0}) - one) <= 1e-12);
    CHECK(abs(sinc_sqrt(Quaternion<double>{pi * pi})) <= 1e-12);
    CHECK(abs(sinc_sqrt(Quaternion<double>{4 * pi * pi})) <= 1e-12);
}

TEST_CASE("series and closed form agree in the crossover band") {
    Rng rng(21);
    for (int n = 0; n < 500; ++n) {
        double r = rng.uniform(0.15, 0.4);
        double t = rng.uniform(0.0, 2 * pi);
        std::complex<double> z = std::polar(r, t);
        CHECK(std::abs(detail::cos_sqrt_series(z) - std::cos(std::sqrt(z))) <= 1e-13);
        CHECK(std::abs(detail::sinc_sqrt_series(z) - std::sin(std::sqrt(z)) / std::sqrt(z)) <=
              1e-13);
    }
}

TEST_CASE("mu^2 + nu^2 q = 1 everywhere") {
    Rng rng(22);
    double worst = 0;
    for (int n = 0; n < 10000; ++n) {
        Quaternion<double> q = rng.quaternion_in_ball(20.0);
        Quaternion<double> m = cos_sqrt(q), v = sinc_sqrt(q);
        worst = std::max(worst, abs(m * m + v * v * q - one));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("cos_sqrt(z^2) = cos(z) on complex slices") {
    Rng rng(23);
    double worst = 0;
    for (int n = 0; n < 1000; ++n) {
        std::complex<double> z(rng.uniform(-4, 4), rng.uniform(-4, 4));
        worst = std::max(worst, std::abs(cos_sqrt(z * z) - std::cos(z)));
    }
    CHECK(worst <= 1e-11);
}

TEST_CASE("acos_squared point values and the cut") {
    CHECK(abs(acos_squared(one)) <= 1e-12);
    // cos_sqrt(-1) = cosh(1), so acos_squared(cosh 1) = -1
    CHECK(abs(acos_squared(Quaternion<double>{std::cosh(1.0)}) - Quaternion<double>{-1}) <=
          1e-10);
    CHECK_THROWS_AS((void)acos_squared(Quaternion<double>{-1}), std::domain_error);
    CHECK_THROWS_AS((void)acos_squared(Quaternion<double>{-5}), std::domain_error);
    CHECK_NOTHROW((void)acos_squared(Quaternion<double>{-5, 1, 0, 0}));
}

TEST_CASE("acos_squared inverts cos_sqrt") {
    Rng rng(24);
    double worst_fw = 0, worst_bw = 0;
    for (int n = 0; n < 10000; ++n) {
        Quaternion<double> xi = sample_off_cut(rng, 15.0);
        Quaternion<double> w = acos_squared(xi);
        CHECK(in_fundamental_domain(w, 0).inside);
        worst_fw = std::max(worst_fw, abs(cos_sqrt(w) - xi));
    }
    for (int n = 0; n < 1000; ++n) {
        Quaternion<double> q = sample_d0(rng);
        worst_bw = std::max(worst_bw, abs(acos_squared(cos_sqrt(q)) - q));
    }
    CHECK(worst_fw <= 1e-9);
    CHECK(worst_bw <= 1e-9);
}

TEST_CASE("fundamental domain membership") {
    auto loc = in_fundamental_domain(Quaternion<double>{0}, 0);
    CHECK(loc.inside);
    CHECK(!loc.on_boundary);

    loc = in_fundamental_domain(Quaternion<double>{pi * pi}, 0);
    CHECK(!loc.inside);
    CHECK(loc.on_boundary);
    CHECK(on_gamma(Quaternion<double>{pi * pi}, 1));

    loc = in_fundamental_domain(Quaternion<double>{2 * pi * pi}, 1);
    CHECK(loc.inside);
    CHECK(!loc.on_boundary);

    // a point of Gamma_1 off the real axis: x = pi^2 - y^2/(4 pi^2)
    double y = 3.0;
    Quaternion<double> g{pi * pi - y * y / (4 * pi * pi), 0, y, 0};
    CHECK(on_gamma(g, 1));
    CHECK(in_fundamental_domain(g, 0).on_boundary);
}

TEST_CASE("taylor coefficients at zero match the defining series") {
    auto [mu, nu] = taylor_cos_sinc(0.0, 2);
    CHECK(mu.c[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(mu.c[1] == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(mu.c[2] == doctest::Approx(1.0 / 24).epsilon(1e-15));
    CHECK(nu.c[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(nu.c[1] == doctest::Approx(-1.0 / 6).epsilon(1e-15));
    CHECK(nu.c[2] == doctest::Approx(1.0 / 120).epsilon(1e-15));
    // derivative relation mu' = -nu/2 at the level of coefficients
    CHECK(mu.c[1] == doctest::Approx(-nu.c[0] / 2).epsilon(1e-15));
}

TEST_CASE("taylor coefficients at pi^2") {
    auto [mu, nu] = taylor_cos_sinc(pi * pi, 8);
    CHECK(std::abs(mu.c[0] + 1.0) <= 1e-12);
    CHECK(std::abs(nu.c[0]) <= 1e-12);
}

TEST_CASE("taylor resummation matches pointwise evaluation") {
    const double centers[] = {0.0, 0.13, 0.3,  0.7, 1.0,  1.7, 2.5,
                              5.0, pi * pi,    20., 43.0, -0.5, -3.0, -15.0};
    const double offsets[] = {-0.5, -0.25, -0.05, 0.1, 0.33, 0.5};
    for (double c : centers) {
        auto [mu, nu] = taylor_cos_sinc(c, 64);
        for (double h : offsets) {
            double msum = eval(mu, h);
            double nsum = eval(nu, h);
            std::complex<double> z(c + h, 0);
            CHECK(std::abs(msum - cos_sqrt(z).real()) <= 1e-9);
            CHECK(std::abs(nsum - sinc_sqrt(z).real()) <= 1e-9);
        }
    }
}

TEST_CASE("composition with jets") {
    // cos_sqrt(q^2 + 1) evaluated on the sphere S gives cos_sqrt(0) = 1
    RJet<double> s;
    s.c = {1.0, 0.0, 1.0};
    s = pad(s, 40);
    RJet<double> comp = compose_cos_sqrt(s);
    Quaternion<double> qi{0, 1, 0, 0};
    CHECK(abs(eval(comp, qi) - Quaternion<double>{1}) <= 1e-10);

    // acos_squared of the constant 1 is 0
    RJet<double> onej = rjet_const(1.0, 8);
    RJet<double> w = compose_acos_squared(onej);
    CHECK(max_coeff_norm(w) <= 1e-12);
}

TEST_CASE("compose_acos_squared inverts compose_cos_sqrt on jets") {
    Rng rng(25);
    for (int n = 0; n < 50; ++n) {
        RJet<double> s;
        s.c.resize(13);
        s.c[0] = rng.uniform(-0.9, 3.0);
        for (std::size_t k = 1; k < s.c.size(); ++k) s.c[k] = rng.uniform(-0.5, 0.5);

        RJet<double> w = compose_acos_squared(s);
        RJet<double> back = compose_cos_sqrt(w);
        CHECK(max_coeff_dist(back, s) <= 1e-9 * std::max(1.0, max_coeff_norm(s)));
    }
    for (int n = 0; n < 50; ++n) {
        RJet<double> s;  // center inside D0, the branch acos inverts
        s.c.resize(13);
        s.c[0] = rng.uniform(-3.0, 3.0);
        for (std::size_t k = 1; k < s.c.size(); ++k) s.c[k] = rng.uniform(-0.5, 0.5);
        RJet<double> m = compose_cos_sqrt(s);
        RJet<double> w = compose_acos_squared(m);
        CHECK(max_coeff_dist(w, s) <= 1e-9 * std::max(1.0, max_coeff_norm(s)));
    }
}
