#include <doctest.h>

#include <json.hpp>

#include "helpers.hpp"
#include "pglab/generate.hpp"
#include "pglab/io.hpp"

using namespace pglab;
using testutil::CliResult;
using testutil::TempDir;
using testutil::run_cli;

using JsonIn = nlohmann::json;

TEST_CASE("plane-info reports plane parameters") {
    CliResult r = run_cli({"plane-info", "--p", "3", "--h", "2"});
    REQUIRE(r.exit_code == 0);
    JsonIn j = JsonIn::parse(r.out);
    CHECK(j["q"] == 9);
    CHECK(j["points"] == 91);
    CHECK(j["modulus"] == "1,0,1");
}

TEST_CASE("analyze is deterministic and reports delta") {
    TempDir tmp;
    std::string ms = tmp.file("m.ms");
    {
        Plane pl(Field::make(5, 1));
        Rng rng(3);
        WeightedMultiset m = random_kmod_multiset(pl, 2, rng);
        plant_perturbation(m, rng, 1);
        write_multiset_file(ms, m, 2);
    }
    CliResult a = run_cli({"analyze", "--in", ms});
    REQUIRE(a.exit_code == 0);
    CliResult b = run_cli({"analyze", "--in", ms});
    CHECK(a.out == b.out);
    JsonIn j = JsonIn::parse(a.out);
    CHECK(j["delta"] == 6);  // one perturbed point at q = 5
    CHECK(j["k"] == 2);

    CliResult t = run_cli({"analyze", "--in", ms, "--format", "text"});
    REQUIRE(t.exit_code == 0);
    CHECK(t.out.find("delta") != std::string::npos);
}

TEST_CASE("repair emits the report schema and can save the result") {
    TempDir tmp;
    std::string ms = tmp.file("m.ms"), fixed = tmp.file("fixed.ms");
    {
        Plane pl(Field::make(5, 2));
        Rng rng(8);
        WeightedMultiset m = random_kmod_multiset(pl, 1, rng);
        plant_perturbation(m, rng, 2);
        write_multiset_file(ms, m, 1);
    }
    CliResult r = run_cli({"repair", "--in", ms, "--out-multiset", fixed});
    REQUIRE(r.exit_code == 0);
    JsonIn j = JsonIn::parse(r.out);
    CHECK(j["final_delta"] == 0);
    CHECK(j["changed_points"] == 2);
    CHECK(j["target"] == 2);
    CHECK(j["hypothesis_ok"] == true);
    REQUIRE(j["steps"].size() == 2);
    for (const auto& step : j["steps"]) {
        CHECK(step.contains("point"));
        CHECK(step.contains("added"));
        CHECK(step.contains("k_i"));
        CHECK(step.contains("delta_after"));
    }
    CHECK(j["verdicts"]["status"] == "success");

    LoadedMultiset lm = read_multiset_file(fixed);
    CHECK(secant_spectrum(lm.m, lm.k).delta == 0);
}

TEST_CASE("cover reports the blocking set of a planted fixture") {
    TempDir tmp;
    std::string ms = tmp.file("m.ms");
    {
        Plane pl(Field::make(5, 2));
        Rng rng(21);
        WeightedMultiset m = random_kmod_multiset(pl, 0, rng);
        plant_perturbation(m, rng, 3);
        write_multiset_file(ms, m, 0);
    }
    CliResult r = run_cli({"cover", "--in", ms});
    REQUIRE(r.exit_code == 0);
    JsonIn j = JsonIn::parse(r.out);
    CHECK(j["size"] == 3);
    CHECK(j["target"] == 3);
    CHECK(j["blocks_all"] == true);
}

TEST_CASE("dbv generates a file the code subcommands understand") {
    TempDir tmp;
    std::string cw = tmp.file("c.cw");
    CliResult gen = run_cli({"dbv", "--p", "19", "--out", cw});
    REQUIRE(gen.exit_code == 0);

    CliResult w = run_cli({"code", "weight", "--in", cw});
    REQUIRE(w.exit_code == 0);
    CHECK(JsonIn::parse(w.out)["weight"] == 54);

    CliResult d = run_cli({"code", "dual", "--in", cw});
    REQUIRE(d.exit_code == 0);
    CHECK(JsonIn::parse(d.out)["dual"] == true);

    CliResult m = run_cli({"code", "member", "--in", cw});
    REQUIRE(m.exit_code == 0);
    CHECK(JsonIn::parse(m.out)["member"] == true);

    CliResult cls = run_cli({"classify", "--in", cw});
    REQUIRE(cls.exit_code == 0);
    CHECK(JsonIn::parse(cls.out)["verdict"] == "DbvType");
    CHECK(JsonIn::parse(cls.out)["certificate_ok"] == true);
}

TEST_CASE("dbv literal variant is diagnosed as a non-member") {
    TempDir tmp;
    std::string cw = tmp.file("lit.cw");
    REQUIRE(run_cli({"dbv", "--p", "5", "--variant", "literal", "--out", cw}).exit_code == 0);
    CliResult m = run_cli({"code", "member", "--in", cw});
    REQUIRE(m.exit_code == 0);
    CHECK(JsonIn::parse(m.out)["member"] == false);
}

TEST_CASE("dbv with random collineation is seed-deterministic") {
    TempDir tmp;
    std::string a = tmp.file("a.cw"), b = tmp.file("b.cw"), c = tmp.file("c.cw");
    auto args = [&](const std::string& path, const std::string& seed) {
        return std::vector<std::string>{"dbv",          "--p",   "7",  "--gamma", "3",
                                        "--lambdas",    "1,0,2", "--random-pi",
                                        "--seed",       seed,    "--out", path};
    };
    REQUIRE(run_cli(args(a, "11")).exit_code == 0);
    REQUIRE(run_cli(args(b, "11")).exit_code == 0);
    REQUIRE(run_cli(args(c, "12")).exit_code == 0);
    CHECK(testutil::read_file(a) == testutil::read_file(b));
    CHECK(testutil::read_file(a) != testutil::read_file(c));
}

TEST_CASE("code decompose answers over chosen lines") {
    TempDir tmp;
    std::string cw = tmp.file("c.cw");
    Plane pl(Field::make(3, 1));
    Codeword c(pl);
    for (std::uint32_t pt : pl.line_points(pl.line_index(pl.normalize_line({1, 0, 0}))))
        c.v[pt] = static_cast<std::uint8_t>((c.v[pt] + 2) % 3);
    for (std::uint32_t pt : pl.line_points(pl.line_index(pl.normalize_line({0, 1, 0}))))
        c.v[pt] = static_cast<std::uint8_t>((c.v[pt] + 1) % 3);
    write_codeword_file(cw, c);

    CliResult ok = run_cli(
        {"code", "decompose", "--in", cw, "--line", "1,0,0", "--line", "0,1,0"});
    REQUIRE(ok.exit_code == 0);
    JsonIn j = JsonIn::parse(ok.out);
    CHECK(j["found"] == true);
    // entries follow line index order: [0,1,0] precedes [1,0,0]
    CHECK(j["combination"]["coefficients"] == JsonIn::array({1, 2}));

    CliResult no = run_cli({"code", "decompose", "--in", cw, "--line", "1,0,0"});
    REQUIRE(no.exit_code == 0);
    CHECK(JsonIn::parse(no.out)["found"] == false);
}

TEST_CASE("code dump --dense round trips byte-exactly") {
    TempDir tmp;
    std::string cw = tmp.file("c.cw"), d1 = tmp.file("d1.cw"), d2 = tmp.file("d2.cw");
    REQUIRE(run_cli({"dbv", "--p", "5", "--out", cw}).exit_code == 0);
    REQUIRE(run_cli({"code", "dump", "--in", cw, "--dense", "--out", d1}).exit_code == 0);
    REQUIRE(run_cli({"code", "dump", "--in", d1, "--dense", "--out", d2}).exit_code == 0);
    CHECK(testutil::read_file(d1) == testutil::read_file(d2));
    CHECK_FALSE(testutil::read_file(d1).empty());
}

TEST_CASE("census is deterministic across thread counts") {
    CliResult one = run_cli({"census", "--p", "3", "--max-weight", "10"}, "PGLAB_THREADS=1");
    REQUIRE(one.exit_code == 0);
    CliResult four = run_cli({"census", "--p", "3", "--max-weight", "10"}, "PGLAB_THREADS=4");
    REQUIRE(four.exit_code == 0);
    CHECK(one.out == four.out);
    JsonIn j = JsonIn::parse(one.out);
    REQUIRE(j.is_array());
    for (const auto& e : j) CHECK(e["weight"] != 5);
}

TEST_CASE("verify suites pass on healthy planes") {
    CliResult li = run_cli({"verify", "lemma-index", "--q", "9", "--trials", "20", "--seed", "7"});
    REQUIRE(li.exit_code == 0);
    CHECK(JsonIn::parse(li.out)["pass"] == true);

    CliResult hn = run_cli({"verify", "hn", "--q", "13", "--trials", "20"});
    REQUIRE(hn.exit_code == 0);
    CHECK(JsonIn::parse(hn.out)["pass"] == true);

    CliResult th = run_cli({"verify", "thresholds", "--q", "9", "--trials", "20"});
    REQUIRE(th.exit_code == 0);

    CliResult rp = run_cli({"verify", "repair", "--q", "25", "--trials", "8"});
    REQUIRE(rp.exit_code == 0);
    CHECK(JsonIn::parse(rp.out)["failures"] == 0);

    CliResult cd = run_cli({"verify", "codes", "--q", "3", "--trials", "10"});
    REQUIRE(cd.exit_code == 0);
    CHECK(JsonIn::parse(cd.out)["pass"] == true);

    // non-prime plane: the dual-containment identities do not apply there
    CliResult c4 = run_cli({"verify", "codes", "--q", "4", "--trials", "10"});
    REQUIRE(c4.exit_code == 0);
    CHECK(JsonIn::parse(c4.out)["pass"] == true);
}

TEST_CASE("exit codes separate input errors from guards") {
    CHECK(run_cli({"analyze", "--in", "/nonexistent/m.ms"}).exit_code == 2);
    CHECK(run_cli({"verify", "bogus-suite", "--q", "9"}).exit_code == 2);
    CHECK(run_cli({"dbv", "--p", "2"}).exit_code == 2);       // p = 2 has no such word
    CHECK(run_cli({"census", "--p", "11"}).exit_code == 2);   // census is p <= 7 only
    CHECK(run_cli({"verify", "repair", "--q", "9"}).exit_code == 2);  // needs q > 17

    TempDir tmp;
    std::string bad = tmp.file("bad.ms");
    testutil::write_file(bad, "pg-multiset v1\np=3 h=1 modulus= k=0\n0 0 9 1\n");
    CHECK(run_cli({"analyze", "--in", bad}).exit_code == 2);

    // a valid codeword file whose vector is not in the code: classify rejects
    std::string cw = tmp.file("bad.cw");
    testutil::write_file(cw, "pg-codeword v1\np=3 h=1 modulus=\n0 0 1 1\n");
    CHECK(run_cli({"classify", "--in", cw}).exit_code == 2);
}
