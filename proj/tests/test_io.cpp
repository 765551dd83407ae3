#include <doctest.h>

#include <sstream>

#include "pglab/generate.hpp"
#include "pglab/io.hpp"

using namespace pglab;

TEST_CASE("modulus strings round trip") {
    CHECK(parse_modulus("").empty());
    CHECK(parse_modulus("1,0,1") == std::vector<int>{1, 0, 1});
    CHECK_THROWS_AS(parse_modulus("1,x,1"), ParseError);
}

TEST_CASE("multiset files round trip") {
    Plane pl(Field::make(3, 2));
    Rng rng(5);
    WeightedMultiset m = random_kmod_multiset(pl, 2, rng);
    plant_perturbation(m, rng, 2);

    std::ostringstream os;
    write_multiset(os, m, 2);
    std::istringstream is(os.str());
    LoadedMultiset back = read_multiset(is);

    CHECK(back.k == 2);
    CHECK(back.plane->q() == 9);
    CHECK(back.plane->field().modulus_string() == pl.field().modulus_string());
    CHECK(back.m.w == m.w);

    // writing again produces identical bytes
    std::ostringstream os2;
    write_multiset(os2, back.m, back.k);
    CHECK(os2.str() == os.str());
}

TEST_CASE("codeword files round trip, sparse and dense") {
    Plane pl(Field::make(5, 1));
    Codeword c(pl);
    c.v[0] = 2;
    c.v[7] = 4;
    c.v[30] = 1;

    std::ostringstream sparse;
    write_codeword(sparse, c);
    std::istringstream is(sparse.str());
    LoadedCodeword back = read_codeword(is);
    CHECK(back.c.v == c.v);

    std::ostringstream dense;
    write_codeword_dense(dense, c);
    CHECK(dense.str().find("pg-codeword v1") == 0);
    std::istringstream is2(dense.str());
    LoadedCodeword back2 = read_codeword(is2);
    CHECK(back2.c.v == c.v);

    // dense output lists every point
    int rows = 0;
    for (char ch : dense.str()) rows += ch == '\n';
    CHECK(rows == 2 + static_cast<int>(pl.size()));
}

TEST_CASE("duplicate rows accumulate mod p") {
    std::istringstream is(
        "pg-multiset v1\n"
        "p=3 h=1 modulus= k=1\n"
        "0 0 1 2\n"
        "0 0 1 2\n"
        "0 1 2 1\n");
    LoadedMultiset lm = read_multiset(is);
    const Plane& pl = *lm.plane;
    CHECK(lm.m.w[pl.point_index(pl.normalize_point({0, 0, 1}))] == 1);
    CHECK(lm.m.w[pl.point_index(pl.normalize_point({0, 1, 2}))] == 1);
    CHECK(lm.m.total_residue() == 2);
}

TEST_CASE("unnormalized coordinates are normalized on input") {
    std::istringstream is(
        "pg-multiset v1\n"
        "p=3 h=1 modulus= k=0\n"
        "0 2 1 1\n");
    LoadedMultiset lm = read_multiset(is);
    const Plane& pl = *lm.plane;
    CHECK(lm.m.w[pl.point_index(pl.normalize_point({0, 1, 2}))] == 1);
}

TEST_CASE("malformed inputs raise parse errors with line numbers") {
    auto reject = [](const std::string& text) {
        std::istringstream is(text);
        CHECK_THROWS_AS(read_multiset(is), ParseError);
    };
    reject("pg-multiset v2\np=3 h=1 modulus= k=0\n");
    reject("pg-multiset v1\np=3 h=1 k=0\n");                        // missing modulus key
    reject("pg-multiset v1\np=3 h=1 modulus= k=0\n1 2\n");          // short row
    reject("pg-multiset v1\np=3 h=1 modulus= k=0\n0 0 3 1\n");      // coordinate out of range
    reject("pg-multiset v1\np=3 h=1 modulus= k=0\n0 0 0 1\n");      // zero triple
    reject("pg-multiset v1\np=4 h=1 modulus= k=0\n");               // non-prime p
    reject("pg-multiset v1\np=3 h=1 modulus= k=0\n0 0 1 x\n");      // non-numeric

    std::istringstream is("pg-multiset v1\np=3 h=1 modulus= k=0\n0 0 3 1\n");
    try {
        read_multiset(is);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("codeword header carries the field parameters") {
    Plane pl(Field::make(3, 2));
    Codeword c(pl);
    c.v[4] = 2;
    std::ostringstream os;
    write_codeword(os, c);
    CHECK(os.str().find("p=3 h=2 modulus=1,0,1") != std::string::npos);
}

TEST_CASE("missing files raise parse errors naming the path") {
    CHECK_THROWS_AS(read_multiset_file("/nonexistent/x.ms"), ParseError);
    CHECK_THROWS_AS(read_codeword_file("/nonexistent/x.cw"), ParseError);
}
