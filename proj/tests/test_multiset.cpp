#include <doctest.h>

#include <stdexcept>

#include "pglab/generate.hpp"
#include "pglab/multiset.hpp"

using namespace pglab;

namespace {

/// One full line of weight-1 points plus one extra point off the line.
struct LinePlusPoint {
    Plane pl;
    WeightedMultiset m;
    std::uint32_t base_line;
    std::uint32_t extra;

    LinePlusPoint()
        : pl(Field::make(3, 1)), m(pl), base_line(pl.line_index(pl.normalize_line({1, 0, 0}))) {
        for (std::uint32_t pt : pl.line_points(base_line)) m.add_weight(pt, 1);
        extra = pl.point_index(pl.normalize_point({1, 0, 0}));
        REQUIRE_FALSE(pl.incident(extra, base_line));
        m.add_weight(extra, 1);
    }
};

} // namespace

TEST_CASE("secant spectrum of a line plus an off-line point") {
    LinePlusPoint fx;
    SecantSpectrum spec = secant_spectrum(fx.m, 1);
    // every line through the extra point picks up weight 2, all others weight 1
    CHECK(spec.delta == 4);
    CHECK(spec.point_index[fx.extra] == 4);
    for (std::uint32_t pi = 0; pi < fx.pl.size(); ++pi)
        if (pi != fx.extra) CHECK(spec.point_index[pi] == 1);
    long long sum = 0;
    for (std::uint32_t pi = 0; pi < fx.pl.size(); ++pi) sum += spec.point_index[pi];
    CHECK(sum == spec.delta * (fx.pl.q() + 1));
}

TEST_CASE("spectra of exact k mod p multisets have delta zero") {
    Plane pl(Field::make(3, 1));
    WeightedMultiset empty(pl);
    CHECK(secant_spectrum(empty, 0).delta == 0);

    WeightedMultiset line(pl);
    for (std::uint32_t pt : pl.line_points(0)) line.add_weight(pt, 1);
    CHECK(secant_spectrum(line, 1).delta == 0);

    Rng rng(11);
    for (int k = 0; k < 3; ++k) {
        WeightedMultiset m = random_kmod_multiset(pl, k, rng);
        CHECK(secant_spectrum(m, k).delta == 0);
    }
}

TEST_CASE("affine chart round trips") {
    Plane pl(Field::make(2, 2));
    WeightedMultiset m(pl);
    const std::uint32_t linf = 5;
    AffineChart chart(m, linf);
    CHECK(chart.linf() == linf);
    CHECK(pl.incident(chart.distinguished_point(), linf));
    const int q = pl.q();
    for (Fel a = 0; a < static_cast<Fel>(q); ++a)
        for (Fel b = 0; b < static_cast<Fel>(q); ++b) {
            std::uint32_t pt = chart.affine_point(a, b);
            CHECK_FALSE(chart.on_linf(pt));
            CHECK(chart.affine_coords(pt) == std::pair{a, b});
        }
    for (Fel s = 0; s < static_cast<Fel>(q); ++s) {
        std::uint32_t pt = chart.ideal_point(s);
        CHECK(chart.on_linf(pt));
        CHECK(pt != chart.distinguished_point());
        CHECK(chart.ideal_slope(pt) == s);
    }
    // slope_line(s, i) carries the ideal point of slope s and the graph of
    // Y = s X + i
    const Field& f = pl.field();
    for (Fel s = 0; s < static_cast<Fel>(q); ++s)
        for (Fel i = 0; i < static_cast<Fel>(q); ++i) {
            std::uint32_t li = chart.slope_line(s, i);
            CHECK(pl.incident(chart.ideal_point(s), li));
            for (Fel x = 0; x < static_cast<Fel>(q); ++x)
                CHECK(pl.incident(chart.affine_point(x, f.add(f.mul(s, x), i)), li));
        }
}

TEST_CASE("affine chart requires a weight-zero point at infinity") {
    Plane pl(Field::make(3, 1));
    WeightedMultiset m(pl);
    for (std::uint32_t pt : pl.line_points(2)) m.add_weight(pt, 1);
    CHECK_THROWS_AS(AffineChart(m, 2), std::invalid_argument);
    CHECK_NOTHROW(AffineChart(m, 3));
}

TEST_CASE("detector polynomial matches line weights everywhere") {
    LinePlusPoint fx;
    const int k = 1, p = 3, q = 3;
    SecantSpectrum spec = secant_spectrum(fx.m, k);
    // pick a k-residue line carrying a weight-zero point
    std::uint32_t linf = *find_chart_line(fx.m, k);
    DetectorPoly g(fx.m, k, linf);
    for (Fel x = 0; x < q; ++x)
        for (Fel y = 0; y < q; ++y) {
            std::uint32_t li = g.chart().slope_line(y, x);
            CHECK(g.eval(x, y) == ((k - spec.line_residue[li]) % p + p) % p);
        }
}

TEST_CASE("detector of a single affine point is a squared linear form") {
    Plane pl(Field::make(3, 1));
    WeightedMultiset m(pl);
    std::uint32_t pt = pl.point_index(pl.normalize_point({1, 1, 2}));
    m.add_weight(pt, 1);
    // l_inf through the point has residue 1
    std::uint32_t linf = pl.point_lines(pt)[0];
    DetectorPoly g(m, 1, linf);
    for (Fel x = 0; x < 3; ++x)
        for (Fel y = 0; y < 3; ++y) {
            std::uint32_t li = g.chart().slope_line(y, x);
            bool through = pl.incident(pt, li);
            CHECK(g.eval(x, y) == (through ? 0 : 1));
        }
}

TEST_CASE("root counts agree with secant counts") {
    LinePlusPoint fx;
    SecantSpectrum spec = secant_spectrum(fx.m, 1);
    DetectorPoly g(fx.m, 1, *find_chart_line(fx.m, 1));
    for (Fel y = 0; y < 3; ++y) {
        RootCheck rc = detector_root_check(g, spec, y);
        CHECK(rc.agree);
        CHECK(rc.root_count == 3 - rc.secants);
    }
}

TEST_CASE("index deficiency inequality on fixtures") {
    LinePlusPoint fx;
    std::uint32_t linf = *find_chart_line(fx.m, 1);
    IndexDeficiencyCheck chk = index_deficiency_check(fx.m, 1, linf);
    CHECK(chk.holds);
    CHECK(chk.lhs <= chk.rhs);
}

TEST_CASE("index thresholds reproduce hand-computed rationals") {
    IndexThresholds th = index_thresholds(19, 20);
    CHECK(th.small_bound == Rat(11, 10));
    CHECK(th.large_bound == Rat(189, 10));
    CHECK(th.dichotomy_hypothesis);  // 20 < (3/16) * 400 = 75

    IndexThresholds z = index_thresholds(25, 0);
    CHECK(z.small_bound == Rat(0));
    CHECK(z.large_bound == Rat(26));
    CHECK(z.structural_hypothesis);
    CHECK(z.structural_small == Rat(2));
    CHECK(z.structural_large == Rat(24));

    CHECK_FALSE(index_thresholds(16, 1).dichotomy_hypothesis);  // q <= 17
}

TEST_CASE("stability range boundary at q = 25") {
    // bound is (floor(sqrt q)+1)(q+1-floor(sqrt q)) = 6 * 21 = 126
    CHECK(stability_range_ok(25, 125));
    CHECK_FALSE(stability_range_ok(25, 126));
}

TEST_CASE("multiset weight bookkeeping") {
    Plane pl(Field::make(5, 1));
    WeightedMultiset m(pl);
    m.add_weight(3, 7);  // reduces mod 5
    CHECK(m.w[3] == 2);
    m.add_weight(3, -4);
    CHECK(m.w[3] == 3);
    CHECK(m.total_residue() == 3);
    WeightedMultiset other(pl);
    CHECK(m.changed_points_vs(other) == 1);
}
