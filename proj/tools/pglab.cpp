#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pglab/classify.hpp"
#include "pglab/generate.hpp"
#include "pglab/io.hpp"
#include "pglab/report.hpp"
#include "pglab/stability.hpp"

namespace {

using namespace pglab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInvariant = 4;

struct Config {
    int p = 0;
    int h = 1;
    std::string modulus;
    int k = 0;
    bool k_given = false;
    std::string in;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 0;
    int trials = 100;
};

void emit(const Config& cfg, const Json& j) {
    std::string text = cfg.format == "text" ? render_text(j) : j.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error(cfg.out + ": cannot open for writing");
    f << text;
    if (!f) throw std::runtime_error(cfg.out + ": write failed");
}

void emit_raw(const Config& cfg, const std::function<void(std::ostream&)>& writer) {
    if (cfg.out.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error(cfg.out + ": cannot open for writing");
    writer(f);
    if (!f) throw std::runtime_error(cfg.out + ": write failed");
}

Plane make_plane(const Config& cfg) {
    if (cfg.p <= 0) throw std::invalid_argument("--p is required for this command");
    return Plane(Field::make(cfg.p, cfg.h, parse_modulus(cfg.modulus)));
}

/// Factors a prime power into (p, h); rejects everything else.
std::pair<int, int> factor_prime_power(long long q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
    long long p = 0;
    for (long long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (!p) return {static_cast<int>(q), 1};
    int h = 0;
    long long r = q;
    while (r > 1) {
        if (r % p) throw std::invalid_argument("q must be a prime power");
        r /= p;
        ++h;
    }
    return {static_cast<int>(p), h};
}

Triple parse_triple(const std::string& text, const Plane& pl) {
    std::istringstream is(text);
    std::string part;
    Triple t{};
    int i = 0;
    while (std::getline(is, part, ',')) {
        if (i >= 3) throw std::invalid_argument("expected three coordinates in \"" + text + "\"");
        long long v = 0;
        std::size_t pos = 0;
        try {
            v = std::stoll(part, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coordinate \"" + part + "\"");
        }
        if (pos != part.size() || v < 0 || v >= pl.q())
            throw std::invalid_argument("bad coordinate \"" + part + "\"");
        t[i++] = static_cast<Fel>(v);
    }
    if (i != 3) throw std::invalid_argument("expected three coordinates in \"" + text + "\"");
    return t;
}

int effective_k(const Config& cfg, int file_k) { return cfg.k_given ? cfg.k : file_k; }

// ---- subcommand bodies ----

int cmd_analyze(const Config& cfg) {
    LoadedMultiset lm = read_multiset_file(cfg.in);
    emit(cfg, analyze_report(lm.m, effective_k(cfg, lm.k)));
    return kExitOk;
}

int cmd_repair(const Config& cfg, const std::string& out_multiset) {
    LoadedMultiset lm = read_multiset_file(cfg.in);
    const int k = effective_k(cfg, lm.k);
    RepairReport rep = repair(lm.m, k);
    emit(cfg, repair_report_json(rep));
    if (!out_multiset.empty()) write_multiset_file(out_multiset, rep.result, k);
    return rep.status == RepairStatus::success ? kExitOk : kExitGuard;
}

int cmd_cover(const Config& cfg) {
    LoadedMultiset lm = read_multiset_file(cfg.in);
    BlockingSetReport rep = blocking_set(lm.m, effective_k(cfg, lm.k));
    emit(cfg, blocking_report_json(*lm.plane, rep));
    return kExitOk;
}

int cmd_code_weight(const Config& cfg) {
    LoadedCodeword lc = read_codeword_file(cfg.in);
    Json j;
    j["weight"] = lc.c.weight();
    j["support_size"] = static_cast<long long>(lc.c.support().size());
    emit(cfg, j);
    return kExitOk;
}

Json combination_json(const Plane& pl, const LineCombination& combo) {
    Json lines = Json::array(), coefs = Json::array();
    for (auto [li, coef] : combo) {
        lines.push_back(line_json(pl, li));
        coefs.push_back(coef);
    }
    Json j;
    j["lines"] = std::move(lines);
    j["coefficients"] = std::move(coefs);
    return j;
}

int cmd_code_member(const Config& cfg) {
    LoadedCodeword lc = read_codeword_file(cfg.in);
    LineCode code(*lc.plane);
    auto combo = code.membership(lc.c);
    Json j;
    j["member"] = combo.has_value();
    if (combo) j["combination"] = combination_json(*lc.plane, *combo);
    emit(cfg, j);
    return kExitOk;
}

int cmd_code_dual(const Config& cfg) {
    LoadedCodeword lc = read_codeword_file(cfg.in);
    Json j;
    j["dual"] = is_dual(lc.c);
    emit(cfg, j);
    return kExitOk;
}

int cmd_code_decompose(const Config& cfg, const std::vector<std::string>& line_args) {
    LoadedCodeword lc = read_codeword_file(cfg.in);
    const Plane& pl = *lc.plane;
    if (line_args.empty()) throw std::invalid_argument("--line is required (up to four times)");
    std::vector<std::uint32_t> lines;
    for (const std::string& s : line_args)
        lines.push_back(pl.line_index(pl.normalize_line(parse_triple(s, pl))));
    auto combo = decompose(lc.c, lines);
    Json j;
    j["found"] = combo.has_value();
    if (combo) j["combination"] = combination_json(pl, *combo);
    emit(cfg, j);
    return kExitOk;
}

int cmd_code_dump(const Config& cfg, bool dense) {
    LoadedCodeword lc = read_codeword_file(cfg.in);
    emit_raw(cfg, [&](std::ostream& os) {
        if (dense)
            write_codeword_dense(os, lc.c);
        else
            write_codeword(os, lc.c);
    });
    return kExitOk;
}

int cmd_classify(const Config& cfg) {
    LoadedCodeword lc = read_codeword_file(cfg.in);
    LineCode code(*lc.plane);
    Classification cls = classify(code, lc.c);
    emit(cfg, classification_json(*lc.plane, cls));
    return kExitOk;
}

int cmd_census(const Config& cfg, int max_weight) {
    Plane pl = make_plane(cfg);
    LineCode code(pl);
    if (max_weight <= 0) max_weight = 3 * pl.p() + 1;
    CensusReport rep = triple_support_census(code, max_weight);
    emit(cfg, census_json(rep));
    return rep.certificates_ok ? kExitOk : kExitInvariant;
}

int cmd_dbv(const Config& cfg, const std::string& variant, int gamma, const std::string& lambdas,
            bool random_pi) {
    Plane pl = make_plane(cfg);
    DbvVariant var;
    if (variant == "canonical")
        var = DbvVariant::canonical;
    else if (variant == "literal")
        var = DbvVariant::literal;
    else
        throw std::invalid_argument("--variant must be canonical or literal");

    std::array<int, 3> ls{0, 0, 0};
    {
        std::istringstream is(lambdas);
        std::string part;
        int i = 0;
        while (std::getline(is, part, ',')) {
            if (i >= 3) throw std::invalid_argument("--lambdas takes three comma-separated residues");
            ls[i++] = std::stoi(part);
        }
        if (i != 3) throw std::invalid_argument("--lambdas takes three comma-separated residues");
    }
    Rng rng(cfg.seed);
    Collineation pi =
        random_pi ? Collineation::random(pl, rng) : Collineation::identity(pl.field());
    Codeword c = dbv_general(pl, DbvParams{gamma, ls, pi, var});
    emit_raw(cfg, [&](std::ostream& os) { write_codeword(os, c); });
    return kExitOk;
}

int cmd_plane_info(const Config& cfg) {
    Plane pl = make_plane(cfg);
    emit(cfg, plane_info_json(pl));
    return kExitOk;
}

// ---- verify suites ----

struct SuiteState {
    long long checks = 0;
    long long failures = 0;
    long long skipped = 0;
    Json details = Json::array();

    void expect(bool ok, const std::string& what, long long trial) {
        ++checks;
        if (ok) return;
        ++failures;
        if (details.size() < 20)
            details.push_back({{"trial", trial}, {"check", what}});
    }
};

WeightedMultiset suite_multiset(const Plane& pl, Rng& rng, long long trial) {
    if (trial % 2 == 0) return random_multiset(pl, rng, static_cast<int>(rng.below(pl.q() + 1)));
    int k0 = static_cast<int>(rng.below(pl.p()));
    WeightedMultiset m = random_kmod_multiset(pl, k0, rng);
    plant_perturbation(m, rng, static_cast<int>(1 + rng.below(4)));
    return m;
}

void suite_lemma_index(const Plane& pl, const Config& cfg, SuiteState& st) {
    const int q = pl.q();
    const int p = pl.p();
    for (long long t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
        WeightedMultiset m = random_multiset(pl, rng, static_cast<int>(rng.below(q + 1)));
        auto pick = random_chart_pick(m, rng);
        if (!pick) {
            ++st.skipped;
            continue;
        }
        const int k = pick->k;
        SecantSpectrum spec = secant_spectrum(m, k);
        DetectorPoly g(m, k, pick->line);
        auto check_xy = [&](Fel x, Fel y) {
            std::uint32_t line = g.chart().slope_line(y, x);
            int expect = ((k - spec.line_residue[line]) % p + p) % p;
            st.expect(g.eval(x, y) == expect, "detector value identity", t);
        };
        if (q <= 13) {
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < q; ++y) check_xy(static_cast<Fel>(x), static_cast<Fel>(y));
            for (int y = 0; y < q; ++y) {
                RootCheck rc = detector_root_check(g, spec, static_cast<Fel>(y));
                st.expect(rc.agree, "root count equals q - s", t);
            }
        } else {
            for (int i = 0; i < 50; ++i)
                check_xy(static_cast<Fel>(rng.below(q)), static_cast<Fel>(rng.below(q)));
            for (int i = 0; i < 10; ++i) {
                RootCheck rc = detector_root_check(g, spec, static_cast<Fel>(rng.below(q)));
                st.expect(rc.agree, "root count equals q - s", t);
            }
        }
    }
}

void suite_hn(const Plane& pl, const Config& cfg, SuiteState& st) {
    for (long long t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
        WeightedMultiset m = suite_multiset(pl, rng, t);
        auto pick = random_chart_pick(m, rng);
        if (!pick) {
            ++st.skipped;
            continue;
        }
        IndexDeficiencyCheck chk = index_deficiency_check(m, pick->k, pick->line);
        st.expect(chk.holds, "sum h*n_h <= s(s-1)", t);
    }
}

void suite_thresholds(const Plane& pl, const Config& cfg, SuiteState& st) {
    const long long q = pl.q();
    for (long long t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
        WeightedMultiset m = suite_multiset(pl, rng, t);
        int k = static_cast<int>(rng.below(pl.p()));
        SecantSpectrum spec = secant_spectrum(m, k);
        IndexThresholds th = index_thresholds(q, spec.delta);
        if (th.dichotomy_hypothesis) {
            bool ok = true;
            for (std::uint32_t pi = 0; pi < pl.size(); ++pi) {
                Rat s(spec.point_index[pi]);
                if (th.small_bound < s && s < th.large_bound) ok = false;
            }
            st.expect(ok, "index dichotomy", t);
        }
        bool quad = true;
        for (std::uint32_t pi = 0; pi < pl.size(); ++pi) {
            long long s = spec.point_index[pi];
            if (s <= q && q * s - s * (s - 1) > spec.delta) quad = false;
        }
        st.expect(quad, "quadratic index bound", t);
        st.expect(delta_bound_check(m, k).holds, "delta upper bound", t);
    }
}

void suite_repair(const Plane& pl, const Config& cfg, SuiteState& st) {
    if (pl.q() <= 17) throw std::invalid_argument("the repair suite needs q > 17");
    for (long long t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
        const int eps = static_cast<int>(t % 4) + 1;
        const int k = static_cast<int>(rng.below(pl.p()));
        WeightedMultiset base = random_kmod_multiset(pl, k, rng);
        WeightedMultiset m = base;
        std::vector<std::uint32_t> planted = plant_perturbation(m, rng, eps);

        RepairReport rep = repair(m, k);
        st.expect(rep.status == RepairStatus::success, "repair completes", t);
        st.expect(rep.final_delta == 0, "final delta is zero", t);
        st.expect(rep.changed_points == eps, "changed points equal the planted count", t);
        st.expect(rep.target == eps, "target equals the planted count", t);
        st.expect(rep.hypothesis_ok, "stability hypothesis holds", t);
        st.expect(rep.result.w == base.w, "planted weights restored exactly", t);

        BlockingSetReport bs = blocking_set(m, k);
        st.expect(static_cast<int>(bs.set.size()) == eps, "blocking set size", t);
        st.expect(bs.blocks_all, "blocking set covers every bad line", t);
        st.expect(bs.set == planted, "blocking set equals the planted points", t);
    }
}

void suite_codes(const Plane& pl, const Config& cfg, SuiteState& st) {
    const int p = pl.p();
    const int q = pl.q();
    const std::uint32_t n = pl.size();
    LineCode code(pl);

    long long want_rank = 1;
    for (int i = 0; i < pl.field().h(); ++i) want_rank *= static_cast<long long>(p) * (p + 1) / 2;
    st.expect(code.rank() == want_rank + 1, "rank is (p(p+1)/2)^h + 1", -1);
    const std::vector<Codeword>& dual = code.dual_basis();
    st.expect(static_cast<int>(dual.size()) == code.dual_dim(), "dual basis size", -1);
    for (const Codeword& d : dual) st.expect(is_dual(d), "dual basis vector has zero line sums", -1);
    if (pl.field().h() == 1) {
        // prime planes only: the code contains its dual with codimension one
        st.expect(2 * code.rank() == static_cast<int>(n) + 1, "dim C1 = dim dual + 1", -1);
        for (const Codeword& d : dual)
            st.expect(code.membership(d).has_value(), "dual code lies inside the line code", -1);
    }

    for (long long t = 0; t < cfg.trials; ++t) {
        Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(t));
        int nl = static_cast<int>(1 + rng.below(4));
        std::vector<std::uint32_t> lines;
        while (static_cast<int>(lines.size()) < nl) {
            std::uint32_t li = static_cast<std::uint32_t>(rng.below(n));
            if (std::find(lines.begin(), lines.end(), li) == lines.end()) lines.push_back(li);
        }
        Codeword c(pl);
        int coef_sum = 0;
        std::map<std::uint32_t, int> expect_combo;
        for (std::uint32_t li : lines) {
            int coef = static_cast<int>(rng.below(p));
            if (!coef) continue;
            expect_combo[li] = coef;
            coef_sum = (coef_sum + coef) % p;
            for (std::uint32_t pi : pl.line_points(li))
                c.v[pi] = static_cast<std::uint8_t>((c.v[pi] + coef) % p);
        }
        st.expect(code.membership(c).has_value(), "line combination is a codeword", t);
        bool sums_ok = true;
        for (int i = 0; i < 50; ++i) {
            std::uint32_t li = static_cast<std::uint32_t>(rng.below(n));
            if (line_sum(c, li) != coef_sum) sums_ok = false;
        }
        st.expect(sums_ok, "line sums equal the coefficient sum", t);
        st.expect(is_dual(c) == (coef_sum == 0), "dual membership matches zero sum", t);
        auto got = decompose(c, lines);
        st.expect(got.has_value() && *got == expect_combo, "decomposition round trip", t);
    }

    if (p <= 3 && pl.field().h() == 1) {
        std::vector<std::uint32_t> all(n);
        for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
        std::vector<Codeword> basis = code.supported_subspace(all);
        std::vector<int> digits(basis.size(), 0);
        Codeword cur(pl);
        long long min_weight = n + 1;
        long long at_min = 0, gap_words = 0;
        bool min_words_are_lines = true;
        for (;;) {
            std::size_t pos = 0;
            while (pos < basis.size()) {
                for (std::uint32_t i = 0; i < n; ++i)
                    cur.v[i] = static_cast<std::uint8_t>((cur.v[i] + basis[pos].v[i]) % p);
                if (++digits[pos] < p) break;
                digits[pos] = 0;
                ++pos;
            }
            if (pos == basis.size()) break;
            int w = cur.weight();
            if (w == 0) continue;
            if (w < min_weight) {
                min_weight = w;
                at_min = 0;
                min_words_are_lines = true;
            }
            if (w == min_weight) {
                ++at_min;
                std::vector<std::uint32_t> supp = cur.support();
                bool is_line = false;
                if (static_cast<int>(supp.size()) == q + 1) {
                    std::uint32_t li = pl.join_idx(supp[0], supp[1]);
                    auto pts = pl.line_points(li);
                    is_line = std::equal(pts.begin(), pts.end(), supp.begin(), supp.end());
                    std::uint8_t v0 = cur.v[supp[0]];
                    for (std::uint32_t pi : supp) is_line = is_line && cur.v[pi] == v0;
                }
                min_words_are_lines = min_words_are_lines && is_line;
            }
            if (p == 3 && w == 5) ++gap_words;
        }
        st.expect(min_weight == q + 1, "minimum weight is q+1", -1);
        st.expect(at_min == static_cast<long long>(p - 1) * n, "minimum words are scalar lines", -1);
        st.expect(min_words_are_lines, "every minimum word is a scalar line", -1);
        if (p == 3) st.expect(gap_words == 0, "no words of weight 5", -1);
    }

    if (p > 2 && pl.field().h() == 1) {
        Codeword canon = dbv_base(pl, DbvVariant::canonical);
        st.expect(canon.weight() == 3 * p - 3, "base word weight 3p-3", -1);
        st.expect(is_dual(canon), "base word has zero line sums", -1);
        Codeword lit = dbv_base(pl, DbvVariant::literal);
        bool saw0 = false, sawm2 = false, constant = true;
        int first = line_sum(lit, 0);
        for (std::uint32_t li = 0; li < n; ++li) {
            int s = line_sum(lit, li);
            if (s == 0) saw0 = true;
            if (s == (p - 2) % p) sawm2 = true;
            if (s != first) constant = false;
        }
        st.expect(saw0 && sawm2, "literal variant attains sums 0 and -2", -1);
        st.expect(!constant, "literal variant line sums are not constant", -1);
        st.expect(!code.membership(lit).has_value(), "literal variant is not a codeword", -1);
    }
}

int cmd_verify(const Config& cfg, const std::string& suite, long long q_flag) {
    Config run = cfg;
    if (q_flag > 0) {
        auto [p, h] = factor_prime_power(q_flag);
        run.p = p;
        run.h = h;
        run.modulus.clear();
    }
    Plane pl = make_plane(run);

    SuiteState st;
    if (suite == "lemma-index")
        suite_lemma_index(pl, run, st);
    else if (suite == "hn")
        suite_hn(pl, run, st);
    else if (suite == "thresholds")
        suite_thresholds(pl, run, st);
    else if (suite == "repair")
        suite_repair(pl, run, st);
    else if (suite == "codes")
        suite_codes(pl, run, st);
    else
        throw std::invalid_argument("unknown suite \"" + suite +
                                    "\" (lemma-index, hn, thresholds, repair, codes)");

    Json j;
    j["suite"] = suite;
    j["q"] = pl.q();
    j["trials"] = run.trials;
    j["seed"] = run.seed;
    j["checks"] = st.checks;
    j["failures"] = st.failures;
    j["skipped_trials"] = st.skipped;
    j["pass"] = st.failures == 0;
    if (!st.details.empty()) j["failing_checks"] = st.details;
    emit(run, j);
    return st.failures == 0 ? kExitOk : kExitInvariant;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for k mod p multisets in PG(2,q) and the code of lines"};
    app.require_subcommand(1);
    // --h is the extension degree, so help must not claim the short -h name.
    app.set_help_flag("--help", "Print usage and exit");

    Config cfg;
    app.add_option("--p", cfg.p, "Field characteristic (prime)");
    app.add_option("--h", cfg.h, "Extension degree, q = p^h");
    app.add_option("--modulus", cfg.modulus,
                   "Modulus coefficients, constant first (default: smallest irreducible)");
    auto* kopt = app.add_option("--k", cfg.k, "Target residue k (default: from the input file)");
    app.add_option("--in", cfg.in, "Input file");
    app.add_option("--out", cfg.out, "Output file (default: stdout)");
    app.add_option("--format", cfg.format, "Report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--trials", cfg.trials, "Trial count for randomized suites");

    auto need_in = [&](CLI::App* sub) {
        sub->fallthrough();
        return sub;
    };

    auto* analyze = need_in(app.add_subcommand("analyze", "Secant spectrum diagnostics"));
    auto* repair_cmd = need_in(app.add_subcommand("repair", "Make the multiset k mod p type"));
    std::string out_multiset;
    repair_cmd->add_option("--out-multiset", out_multiset, "Write the repaired multiset here");
    auto* cover = need_in(app.add_subcommand("cover", "Blocking set of the non-k lines"));

    auto* code = app.add_subcommand("code", "Line code queries");
    code->fallthrough();
    code->require_subcommand(1);
    auto* code_weight = need_in(code->add_subcommand("weight", "Weight and support size"));
    auto* code_member = need_in(code->add_subcommand("member", "Membership with certificate"));
    auto* code_dual = need_in(code->add_subcommand("dual", "Dual code membership"));
    auto* code_decomp = need_in(code->add_subcommand("decompose", "Solve over given lines"));
    std::vector<std::string> line_args;
    code_decomp->add_option("--line", line_args, "Line x0,x1,x2 (repeatable, up to four)");
    auto* code_dump = need_in(code->add_subcommand("dump", "Re-emit the codeword file"));
    bool dense = false;
    code_dump->add_flag("--dense", dense, "Every point in canonical order, zeros included");

    auto* classify_cmd = need_in(app.add_subcommand("classify", "Small-weight codeword structure"));

    auto* census = need_in(app.add_subcommand("census", "Exhaustive three-line codeword census"));
    int max_weight = 0;
    census->add_option("--max-weight", max_weight, "Weight cap (default 3p+1)");

    auto* dbv = need_in(app.add_subcommand("dbv", "Generate a three-concurrent-line codeword"));
    std::string variant = "canonical";
    int gamma = 1;
    std::string lambdas = "0,0,0";
    bool random_pi = false;
    dbv->add_option("--variant", variant, "canonical or literal");
    dbv->add_option("--gamma", gamma, "Nonzero scale on the base word");
    dbv->add_option("--lambdas", lambdas, "Three line coefficients l0,l1,l2");
    dbv->add_flag("--random-pi", random_pi, "Apply a random collineation");

    auto* verify = need_in(app.add_subcommand("verify", "Batch invariant suites"));
    std::string suite;
    long long q_flag = 0;
    verify->add_option("suite", suite, "lemma-index, hn, thresholds, repair, or codes")
        ->required();
    verify->add_option("--q", q_flag, "Plane order (prime power; alternative to --p/--h)");

    auto* plane_info = need_in(app.add_subcommand("plane-info", "Plane parameters"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }
    cfg.k_given = kopt->count() > 0;

    try {
        if (*analyze) return cmd_analyze(cfg);
        if (*repair_cmd) return cmd_repair(cfg, out_multiset);
        if (*cover) return cmd_cover(cfg);
        if (*code_weight) return cmd_code_weight(cfg);
        if (*code_member) return cmd_code_member(cfg);
        if (*code_dual) return cmd_code_dual(cfg);
        if (*code_decomp) return cmd_code_decompose(cfg, line_args);
        if (*code_dump) return cmd_code_dump(cfg, dense);
        if (*classify_cmd) return cmd_classify(cfg);
        if (*census) return cmd_census(cfg, max_weight);
        if (*dbv) return cmd_dbv(cfg, variant, gamma, lambdas, random_pi);
        if (*verify) return cmd_verify(cfg, suite, q_flag);
        if (*plane_info) return cmd_plane_info(cfg);
        std::cerr << "no subcommand selected\n";
        return kExitInput;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }
}
