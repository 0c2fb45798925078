#include <doctest.h>

#include "qslice/rng.hpp"
#include "qslice/star_exp.hpp"
#include "qslice/zeros.hpp"

using namespace qslice;

namespace {
const Quaternion<double> Qi{0, 1, 0, 0};
const Quaternion<double> Qj{0, 0, 1, 0};
const Quaternion<double> Qk{0, 0, 0, 1};

QJet<double> linear(const Quaternion<double>& root, std::size_t order) {
    QJet<double> f;
    f.c = {-root, Quaternion<double>{1}};
    return pad(f, order);
}

struct SphereScan {
    double lo = 1e300, hi = 0;
    Quaternion<double> argmin_axis;
};

// |P| over a dense set of axes on the sphere alpha + beta*S
SphereScan sphere_scan(const QJet<double>& p, double alpha, double beta, int axes = 1000) {
    Rng rng(777);
    SphereScan r;
    for (int n = 0; n < axes; ++n) {
        Quaternion<double> J = rng.unit_axis();
        double v = abs(eval(p, Quaternion<double>{alpha} + J * beta));
        if (v < r.lo) {
            r.lo = v;
            r.argmin_axis = J;
        }
        r.hi = std::max(r.hi, v);
    }
    return r;
}
}  // namespace

TEST_CASE("spec classification examples") {
    QJet<double> sphere;  // q^2 + 1
    sphere.c = {Quaternion<double>{1}, Quaternion<double>{}, Quaternion<double>{1}};
    ZeroReport<double> r1 = classify_zeros(sphere);
    REQUIRE(r1.spherical_zeros.size() == 1);
    CHECK(r1.real_zeros.empty());
    CHECK(r1.isolated_zeros.empty());
    CHECK(r1.spherical_zeros[0].first == doctest::Approx(0.0));
    CHECK(r1.spherical_zeros[0].second == doctest::Approx(1.0));

    QJet<double> iso;  // qj - k = (q - i) * j
    iso.c = {-Qk, Qj};
    ZeroReport<double> r2 = classify_zeros(iso);
    REQUIRE(r2.isolated_zeros.size() == 1);
    CHECK(abs(r2.isolated_zeros[0] - Qi) <= 1e-9);
    CHECK(r2.spherical_zeros.empty());

    QJet<double> real1;  // q - 1
    real1.c = {Quaternion<double>{-1}, Quaternion<double>{1}};
    ZeroReport<double> r3 = classify_zeros(real1);
    REQUIRE(r3.real_zeros.size() == 1);
    CHECK(r3.real_zeros[0].first == doctest::Approx(1.0));
    CHECK(r3.real_zeros[0].second == 1);
}

TEST_CASE("real multiplicities") {
    // (q-1)^2 (q+2): P^s has a quadruple root at 1 and a double at -2
    QJet<double> sq;
    sq.c = {Quaternion<double>{1}, Quaternion<double>{-2}, Quaternion<double>{1}};
    QJet<double> p = star_mul(pad(sq, 3), pad(linear(Quaternion<double>{-2}, 1), 3));
    ZeroReport<double> r = classify_zeros(p);
    REQUIRE(r.real_zeros.size() == 2);
    CHECK(r.real_zeros[0].first == doctest::Approx(-2.0));
    CHECK(r.real_zeros[0].second == 1);
    CHECK(r.real_zeros[1].first == doctest::Approx(1.0));
    CHECK(r.real_zeros[1].second == 2);
}

TEST_CASE("zero polynomial is rejected") {
    QJet<double> z = qjet_const(Quaternion<double>{}, 5);
    CHECK_THROWS_AS((void)classify_zeros(z), std::domain_error);
    CHECK_NOTHROW((void)classify_zeros(qjet_const(Quaternion<double>{2}, 5)));
}

TEST_CASE("random polynomials: reported zeros annihilate the polynomial") {
    Rng rng(51);
    double worst = 0;
    for (int t = 0; t < 100; ++t) {
        std::size_t deg = 1 + std::size_t(rng.uniform() * 6);
        QJet<double> p;
        p.c.resize(deg + 1);
        for (auto& a : p.c)
            a = Quaternion<double>{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                                   rng.uniform(-1, 1)};
        while (abs(p.c[deg]) < 0.5) p.c[deg] += Quaternion<double>{rng.uniform(0.5, 1.0)};
        ZeroReport<double> r = classify_zeros(p);
        worst = std::max(worst, r.max_residual);
        // distinct non-real root pairs of P^s all get classified
        std::size_t pairs = r.spherical_zeros.size() + r.isolated_zeros.size();
        CHECK(pairs <= deg);
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("real-coefficient polynomials have only real and spherical zeros") {
    Rng rng(52);
    for (int t = 0; t < 50; ++t) {
        std::size_t deg = 1 + std::size_t(rng.uniform() * 6);
        QJet<double> p;
        p.c.resize(deg + 1);
        for (auto& a : p.c) a = Quaternion<double>{rng.uniform(-1, 1)};
        while (std::abs(p.c[deg].w) < 0.5) p.c[deg].w += 1.0;
        ZeroReport<double> r = classify_zeros(p);
        CHECK(r.isolated_zeros.empty());
    }
}

TEST_CASE("constructed spheres versus brute-force scans") {
    Rng rng(53);
    for (int t = 0; t < 10; ++t) {
        // spherical fixture: (q - p)*(q - p^c) * c has the whole sphere S_p
        Quaternion<double> p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                             rng.uniform(-1, 1)};
        SlicePoint<double> sp = slice_decompose(p);
        if (sp.beta < 0.3) {
            p += Qj;
            sp = slice_decompose(p);
        }
        QJet<double> fac = star_mul(linear(p, 2), linear(conj(p), 2));
        ZeroReport<double> r = classify_zeros(fac);
        REQUIRE(r.spherical_zeros.size() == 1);
        auto [alpha, beta] = r.spherical_zeros[0];
        CHECK(alpha == doctest::Approx(sp.alpha));
        CHECK(beta == doctest::Approx(sp.beta));
        SphereScan scan = sphere_scan(fac, alpha, beta);
        CHECK(scan.hi <= 1e-8 * (1 + max_coeff_norm(fac)));  // vanishes on the whole sphere
    }
    for (int t = 0; t < 10; ++t) {
        // isolated fixture: (q - p)*(q - r), zero at p plus one point on S_r
        Quaternion<double> p{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                             rng.uniform(-1, 1)};
        Quaternion<double> r0{rng.uniform(-1, 1), 0, rng.uniform(1.5, 2.5), 0};
        if (slice_decompose(p).beta < 0.3) p += Qi;
        QJet<double> prod = star_mul(linear(p, 2), linear(r0, 2));
        ZeroReport<double> rep = classify_zeros(prod);
        CHECK(rep.spherical_zeros.empty());
        REQUIRE(rep.isolated_zeros.size() == 2);
        for (const auto& q0 : rep.isolated_zeros) {
            // the sphere of an isolated zero vanishes at the classified point
            // only; the scan's minimizer must sit next to the classified axis
            SlicePoint<double> sz = slice_decompose(q0);
            CHECK(abs(eval(prod, q0)) <= 1e-8 * (1 + max_coeff_norm(prod)));
            SphereScan scan = sphere_scan(prod, sz.alpha, sz.beta);
            CHECK(scan.hi >= 0.05);
            CHECK(abs(scan.argmin_axis - sz.axis) <= 0.3);
        }
        CHECK(abs(eval(prod, p)) <= 1e-10);  // the left factor's root is a true zero
    }
}

TEST_CASE("obstruction check on normalized exponentials") {
    QJet<double> f = star_mul(linear(Qi, 32), qjet_const(Qj, 32));  // (q-i)*j
    QJet<double> g = star_exp(f);

    auto [g0, gv] = real_vector_split(g);
    ClassifyOptions<double> copts;
    copts.radius_cap = 1.25;
    ZeroReport<double> zr = classify_zeros(gv, copts);

    // the normalized function takes the value 1 at the isolated zero of g_v
    CHECK(obstruction_check(g, zr).empty());

    QJet<double> ng = -g;
    auto [n0, nv] = real_vector_split(ng);
    ZeroReport<double> zrn = classify_zeros(nv, copts);
    std::vector<Obstruction<double>> obs = obstruction_check(ng, zrn);
    REQUIRE(obs.size() == 1);
    CHECK(abs(obs[0].zero_point - Qi) <= 1e-6);
    CHECK(abs(obs[0].g_value + Quaternion<double>{1}) <= 1e-6);

    // spherical zeros never obstruct
    QJet<double> sphere;
    sphere.c = {Quaternion<double>{1}, Quaternion<double>{}, Quaternion<double>{1}};
    ZeroReport<double> zs = classify_zeros(sphere);
    REQUIRE(zs.spherical_zeros.size() == 1);
    CHECK(obstruction_check(g, zs).empty());

    // zeros beyond the trust radius are not tested
    QJet<double> far = star_mul(linear(Qi * 3.0, 8), qjet_const(Qj, 8));
    ZeroReport<double> zf = classify_zeros(far);
    REQUIRE(zf.isolated_zeros.size() == 1);
    CHECK(obstruction_check(-star_exp(pad(far, 32)), zf).empty());
}
