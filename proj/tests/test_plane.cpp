#include <doctest.h>

#include <stdexcept>

#include "pglab/linecode.hpp"
#include "pglab/plane.hpp"

using namespace pglab;

TEST_CASE("point and line counts") {
    for (auto [p, h] : {std::pair{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        Plane pl(Field::make(p, h));
        const std::uint32_t q = static_cast<std::uint32_t>(pl.q());
        CHECK(pl.size() == q * q + q + 1);
        for (std::uint32_t li = 0; li < pl.size(); ++li)
            CHECK(pl.line_points(li).size() == q + 1);
        for (std::uint32_t pi = 0; pi < pl.size(); ++pi)
            CHECK(pl.point_lines(pi).size() == q + 1);
    }
}

TEST_CASE("canonical enumeration order at q = 3") {
    Plane pl(Field::make(3, 1));
    CHECK(pl.point(0).c == Triple{0, 0, 1});
    CHECK(pl.point(1).c == Triple{0, 1, 0});
    CHECK(pl.point(2).c == Triple{0, 1, 1});
    CHECK(pl.point(3).c == Triple{0, 1, 2});
    CHECK(pl.point(4).c == Triple{1, 0, 0});
    CHECK(pl.point(12).c == Triple{1, 2, 2});
    // the same triples enumerate the lines
    for (std::uint32_t i = 0; i < pl.size(); ++i) CHECK(pl.line(i).c == pl.point(i).c);
    // index round trips
    for (std::uint32_t i = 0; i < pl.size(); ++i) {
        CHECK(pl.point_index(pl.point(i)) == i);
        CHECK(pl.line_index(pl.line(i)) == i);
    }
}

TEST_CASE("normalization scales the leftmost nonzero coordinate to 1") {
    Plane pl(Field::make(3, 1));
    CHECK(pl.normalize_point({0, 2, 1}).c == Triple{0, 1, 2});
    CHECK(pl.normalize_line({2, 1, 0}).c == Triple{1, 2, 0});
    CHECK_THROWS_AS(pl.normalize_point({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("join and meet") {
    Plane pl(Field::make(3, 1));
    ProjPoint a = pl.normalize_point({0, 0, 1});
    ProjPoint b = pl.normalize_point({0, 1, 0});
    CHECK(pl.join(a, b).c == Triple{1, 0, 0});
    ProjLine l1 = pl.normalize_line({1, 0, 0});
    ProjLine l2 = pl.normalize_line({0, 1, 0});
    CHECK(pl.meet(l1, l2).c == Triple{0, 0, 1});
    CHECK_THROWS_AS(pl.join(a, a), std::invalid_argument);
}

TEST_CASE("incidence is the vanishing dot product") {
    Plane pl(Field::make(3, 2));
    const Field& f = pl.field();
    for (std::uint32_t li = 0; li < pl.size(); li += 7) {
        for (std::uint32_t pi = 0; pi < pl.size(); ++pi) {
            const Triple& pt = pl.point(pi).c;
            const Triple& ln = pl.line(li).c;
            Fel d = f.add(f.add(f.mul(pt[0], ln[0]), f.mul(pt[1], ln[1])), f.mul(pt[2], ln[2]));
            CHECK(pl.incident(pi, li) == (d == 0));
        }
    }
}

TEST_CASE("two distinct points lie on exactly one common line") {
    for (auto [p, h] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
        Plane pl(Field::make(p, h));
        for (std::uint32_t a = 0; a < pl.size(); ++a)
            for (std::uint32_t b = a + 1; b < pl.size(); ++b) {
                int common = 0;
                for (std::uint32_t li = 0; li < pl.size(); ++li)
                    common += pl.incident(a, li) && pl.incident(b, li);
                CHECK(common == 1);
                std::uint32_t j = pl.join_idx(a, b);
                CHECK(pl.incident(a, j));
                CHECK(pl.incident(b, j));
            }
    }
}

TEST_CASE("line_points and point_lines agree with incidence and are sorted") {
    Plane pl(Field::make(2, 2));
    for (std::uint32_t li = 0; li < pl.size(); ++li) {
        auto pts = pl.line_points(li);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            CHECK(pl.incident(pts[i], li));
            if (i) CHECK(pts[i - 1] < pts[i]);
        }
    }
    for (std::uint32_t pi = 0; pi < pl.size(); ++pi)
        for (std::uint32_t li : pl.point_lines(pi)) CHECK(pl.incident(pi, li));
}

TEST_CASE("identity collineation fixes everything") {
    Plane pl(Field::make(3, 1));
    Collineation id = Collineation::identity(pl.field());
    for (std::uint32_t i = 0; i < pl.size(); ++i) {
        CHECK(id.apply(pl, pl.point(i)) == pl.point(i));
        CHECK(id.apply(pl, pl.line(i)) == pl.line(i));
    }
}

TEST_CASE("from_frame maps the standard frame to the requested images") {
    Plane pl(Field::make(5, 1));
    ProjPoint i001 = pl.normalize_point({1, 2, 3});
    ProjPoint i010 = pl.normalize_point({0, 1, 4});
    ProjPoint i100 = pl.normalize_point({1, 0, 1});
    ProjPoint i111 = pl.normalize_point({1, 1, 1});
    auto t = Collineation::from_frame(pl, i001, i010, i100, i111);
    REQUIRE(t.has_value());
    CHECK(t->apply(pl, pl.normalize_point({0, 0, 1})) == i001);
    CHECK(t->apply(pl, pl.normalize_point({0, 1, 0})) == i010);
    CHECK(t->apply(pl, pl.normalize_point({1, 0, 0})) == i100);
    CHECK(t->apply(pl, pl.normalize_point({1, 1, 1})) == i111);

    // collinear images admit no collineation
    ProjPoint c1 = pl.normalize_point({0, 0, 1});
    ProjPoint c2 = pl.normalize_point({0, 1, 0});
    ProjPoint c3 = pl.normalize_point({0, 1, 1});
    CHECK_FALSE(Collineation::from_frame(pl, c1, c2, c3, i111).has_value());
}

TEST_CASE("collineations preserve incidence") {
    Plane pl(Field::make(3, 2));
    Rng rng(42);
    for (int trial = 0; trial < 5; ++trial) {
        Collineation t = Collineation::random(pl, rng);
        for (std::uint32_t li = 0; li < pl.size(); li += 11) {
            std::uint32_t tl = pl.line_index(t.apply(pl, pl.line(li)));
            for (std::uint32_t pi : pl.line_points(li)) {
                std::uint32_t tp = pl.point_index(t.apply(pl, pl.point(pi)));
                CHECK(pl.incident(tp, tl));
            }
        }
    }
}

TEST_CASE("push_values carries line indicators to image lines") {
    Plane pl(Field::make(3, 1));
    Rng rng(7);
    Collineation t = Collineation::random(pl, rng);
    for (std::uint32_t li = 0; li < pl.size(); ++li) {
        Codeword v = incidence_vector(pl, li);
        std::uint32_t tl = pl.line_index(t.apply(pl, pl.line(li)));
        Codeword expect = incidence_vector(pl, tl);
        CHECK(t.push_values(pl, v.v) == expect.v);
    }
}

TEST_CASE("inverse collineation undoes the permutation") {
    Plane pl(Field::make(2, 2));
    Rng rng(3);
    Collineation t = Collineation::random(pl, rng);
    Collineation ti = t.inverse();
    for (std::uint32_t i = 0; i < pl.size(); ++i)
        CHECK(ti.apply(pl, t.apply(pl, pl.point(i))) == pl.point(i));
    auto perm = t.point_permutation(pl);
    for (std::uint32_t i = 0; i < pl.size(); ++i)
        CHECK(perm[i] == pl.point_index(t.apply(pl, pl.point(i))));
}
