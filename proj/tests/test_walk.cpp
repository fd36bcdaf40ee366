#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "qwlab/errors.hpp"
#include "qwlab/walk.hpp"
#include "test_util.hpp"

using namespace qwlab;
using qwtest::close;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;
}  // namespace

TEST_CASE("coin_at: defect site and bulk sites") {
    const CoinField f6 = CoinField::one_defect(pi / 6);
    const CoinMatrix h = hadamard_coin();

    const CoinMatrix bulk = f6.coin_at(7);
    CHECK(bulk.a == h.a);
    CHECK(bulk.b == h.b);
    CHECK(bulk.c == h.c);
    CHECK(bulk.d == h.d);

    const CoinMatrix defect = f6.coin_at(0);
    CHECK(close(defect.a, std::sqrt(3.0) / 2, 1e-15));
    CHECK(close(defect.b, 0.5, 1e-15));
    CHECK(close(defect.c, 0.5, 1e-15));
    CHECK(close(defect.d, -std::sqrt(3.0) / 2, 1e-15));

    // at xi = pi/4 the defect coin is the Hadamard coin, bit for bit
    const CoinField f4 = CoinField::one_defect(pi / 4);
    CHECK(f4.coin_at(0).a == h.a);
    CHECK(f4.coin_at(0).b == h.b);
    CHECK(f4.coin_at(0).c == h.c);
    CHECK(f4.coin_at(0).d == h.d);
}

TEST_CASE("coins are unitary with unimodular determinant") {
    qwtest::Lcg rng;
    for (double xi : {0.05, pi / 8, pi / 6, pi / 4, pi / 3, 1.5}) {
        const CoinMatrix u = CoinField::one_defect(xi).coin_at(0);
        CHECK(unitarity_defect(u) < 1e-12);
        CHECK(close(std::abs(u.det), 1.0));
    }
    for (double phi : {0.1, 0.5, 0.9}) {
        const CoinMatrix u = CoinField::wojcik(phi).coin_at(0);
        CHECK(unitarity_defect(u) < 1e-12);
        CHECK(close(std::abs(u.det), 1.0));
    }
}

TEST_CASE("coin field domain validation") {
    CHECK_THROWS_AS(CoinField::one_defect(0.0), std::domain_error);
    CHECK_THROWS_AS(CoinField::one_defect(pi / 2), std::domain_error);
    CHECK_THROWS_AS(CoinField::one_defect(-0.3), std::domain_error);
    CHECK_THROWS_AS(CoinField::wojcik(0.0), std::domain_error);
    CHECK_THROWS_AS(CoinField::wojcik(1.0), std::domain_error);

    // non-unitary custom coin is rejected
    std::map<int, CoinMatrix> table{{0, make_coin(1.0, 1.0, 0.0, 1.0)}};
    CHECK_THROWS_AS(CoinField::custom(table), std::invalid_argument);
}

TEST_CASE("split: P keeps the top row, Q the bottom, P + Q = U") {
    const CoinSplit h = split(hadamard_coin());
    CHECK(close(h.p.a, 1 / sqrt2, 1e-15));
    CHECK(close(h.p.b, 1 / sqrt2, 1e-15));
    CHECK(h.p.c == cplx(0.0));
    CHECK(h.p.d == cplx(0.0));
    CHECK(h.q.a == cplx(0.0));
    CHECK(h.q.b == cplx(0.0));
    CHECK(close(h.q.c, 1 / sqrt2, 1e-15));
    CHECK(close(h.q.d, -1 / sqrt2, 1e-15));

    const CoinMatrix defect = defect_coin(0.7);
    const CoinSplit d = split(defect);
    CHECK(d.p.a == defect.a);
    CHECK(d.p.b == defect.b);
    CHECK(d.p.c == cplx(0.0));
    CHECK(d.p.d == cplx(0.0));
    CHECK(d.q.a == cplx(0.0));
    CHECK(d.q.b == cplx(0.0));
    CHECK(d.q.c == defect.c);
    CHECK(d.q.d == defect.d);
    CHECK(d.p.a + d.q.a == defect.a);
    CHECK(d.p.d + d.q.d == defect.d);

    const CoinSplit id = split(make_coin(1.0, 0.0, 0.0, 1.0));
    CHECK(id.p.a == cplx(1.0));
    CHECK(id.p.d == cplx(0.0));
    CHECK(id.q.a == cplx(0.0));
    CHECK(id.q.d == cplx(1.0));
}

TEST_CASE("step: one Hadamard step from a point mass") {
    WalkState s = point_mass(Amplitude2{1.0, 0.0}, 4);
    s = step(s, CoinField::hadamard());
    CHECK(close(s.at(-1).left, 1 / sqrt2, 1e-15));
    CHECK(s.at(-1).right == cplx(0.0));
    CHECK(s.at(1).left == cplx(0.0));
    CHECK(close(s.at(1).right, 1 / sqrt2, 1e-15));
    CHECK(norm_sq(s.at(0)) == 0.0);
    CHECK(close(s.total_norm_sq(), 1.0, 1e-15));
}

TEST_CASE("step: two defect-mediated steps return the rotated qubit to the origin") {
    qwtest::Lcg rng;
    for (double xi : {pi / 8, pi / 6, pi / 3}) {
        const double c = std::cos(xi);
        const double s = std::sin(xi);
        for (int trial = 0; trial < 5; ++trial) {
            const Amplitude2 q = qwtest::random_unit_qubit(rng);
            WalkState st = point_mass(q, 4);
            st = step(step(st, CoinField::one_defect(xi)), CoinField::one_defect(xi));
            const Amplitude2 expect{(s * q.left - c * q.right) / sqrt2,
                                    (c * q.left + s * q.right) / sqrt2};
            CHECK(close(st.at(0), expect, 1e-14));
        }
    }
}

TEST_CASE("step conserves the norm for every field") {
    qwtest::Lcg rng;
    for (const CoinField& field :
         {CoinField::one_defect(0.9), CoinField::wojcik(0.37), CoinField::hadamard()}) {
        WalkState s = point_mass(qwtest::random_unit_qubit(rng), 40);
        for (int n = 0; n < 39; ++n) {
            s = step(s, field);
            CHECK(std::abs(s.total_norm_sq() - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("step refuses to overflow the window") {
    WalkState s = point_mass(Amplitude2{1.0, 0.0}, 3);
    const CoinField f = CoinField::hadamard();
    s = step(step(step(s, f), f), f);
    CHECK(s.time == 3);
    CHECK_THROWS_AS(step(s, f), window_overflow);
    CHECK_THROWS_AS(evolve(point_mass(Amplitude2{1.0, 0.0}, 3), f, 4), window_overflow);
}

TEST_CASE("evolve: composition and odd-time origin vanishing") {
    const CoinField f = CoinField::one_defect(0.6);
    const WalkState s0 = point_mass(Amplitude2{0.6, cplx(0.0, 0.8)}, 12);

    const WalkState same = evolve(s0, f, 0);
    for (size_t i = 0; i < s0.amps.size(); ++i) {
        CHECK(same.amps[i].left == s0.amps[i].left);
        CHECK(same.amps[i].right == s0.amps[i].right);
    }

    const WalkState two = evolve(s0, f, 2);
    const WalkState stepped = step(step(s0, f), f);
    for (size_t i = 0; i < two.amps.size(); ++i) {
        CHECK(two.amps[i].left == stepped.amps[i].left);
        CHECK(two.amps[i].right == stepped.amps[i].right);
    }

    for (int n : {1, 3, 5, 7, 9, 11}) {
        const WalkState odd = evolve(s0, f, n);
        CHECK(odd.at(0).left == cplx(0.0));
        CHECK(odd.at(0).right == cplx(0.0));
    }
}

TEST_CASE("light cone and parity zeros are exact") {
    WalkState s = point_mass(Amplitude2{cplx(1 / sqrt2, 0.0), cplx(0.0, 1 / sqrt2)}, 20);
    const CoinField f = CoinField::one_defect(1.1);
    for (int n = 1; n <= 18; ++n) {
        s = step(s, f);
        for (int x = -20; x <= 20; ++x) {
            if (std::abs(x) > n) CHECK(norm_sq(s.at(x)) == 0.0);
            if ((n + x) % 2 != 0) CHECK(norm_sq(s.at(x)) == 0.0);
        }
    }
}

TEST_CASE("one-defect at pi/4 evolves bitwise like the Hadamard walk") {
    const Amplitude2 q{cplx(0.28, -0.4), cplx(0.1, 0.86)};
    const double n = std::sqrt(norm_sq(q));
    const Amplitude2 unit{q.left / n, q.right / n};
    WalkState a = point_mass(unit, 25);
    WalkState b = point_mass(unit, 25);
    for (int t = 0; t < 24; ++t) {
        a = step(a, CoinField::one_defect(pi / 4));
        b = step(b, CoinField::hadamard());
    }
    for (size_t i = 0; i < a.amps.size(); ++i) {
        CHECK(a.amps[i].left == b.amps[i].left);
        CHECK(a.amps[i].right == b.amps[i].right);
    }
}

TEST_CASE("measure: totals and pointwise values") {
    WalkState s = point_mass(Amplitude2{cplx(0.6, 0.0), cplx(0.0, 0.8)}, 5);
    MeasureProfile m0 = measure(s);
    CHECK(close(m0.total, 1.0, 1e-15));
    CHECK(close(m0.at(0), 1.0, 1e-15));

    s = step(s, CoinField::hadamard());
    const MeasureProfile m1 = measure(s);
    CHECK(close(m1.at(-1), 0.5, 1e-15));
    CHECK(close(m1.at(1), 0.5, 1e-15));
    CHECK(close(m1.total, 1.0, 1e-15));

    WalkState zero = point_mass(Amplitude2{1.0, 0.0}, 3);
    zero.at(0) = Amplitude2{};
    const MeasureProfile mz = measure(zero);
    CHECK(mz.total == 0.0);
    for (double v : mz.values) CHECK(v == 0.0);
}

TEST_CASE("cesaro_average: point profile at N = 1, unit totals") {
    const Amplitude2 q{cplx(1 / sqrt2, 0.0), cplx(0.0, -1 / sqrt2)};
    const MeasureProfile one = cesaro_average(CoinField::one_defect(0.5), q, 1);
    CHECK(close(one.at(0), 1.0, 1e-15));
    CHECK(close(one.total, 1.0, 1e-15));

    const MeasureProfile avg = cesaro_average(CoinField::one_defect(pi / 6), q, 300);
    CHECK(close(avg.total, 1.0, 1e-12));

    CHECK_THROWS_AS(cesaro_average(CoinField::hadamard(), Amplitude2{0.5, 0.5}, 10),
                    std::invalid_argument);
}

TEST_CASE("cesaro_average approaches the localized mass at the defect") {
    const Amplitude2 q{cplx(1 / sqrt2, 0.0), cplx(0.0, 1 / sqrt2)};
    // closed form 2(1 - sqrt2 S)^2/(3 - 2 sqrt2 S)^2 at S = 1/2
    const double s = 0.5;
    const double expect = 2.0 * std::pow(1.0 - sqrt2 * s, 2) / std::pow(3.0 - 2.0 * sqrt2 * s, 2);
    const MeasureProfile localized = cesaro_average(CoinField::one_defect(pi / 6), q, 2000);
    CHECK(std::abs(localized.at(0) - expect) / expect < 0.05);

    const MeasureProfile flat = cesaro_average(CoinField::one_defect(pi / 4), q, 2000);
    CHECK(flat.at(0) < 0.01);
}
