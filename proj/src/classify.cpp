#include "pglab/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pglab/parallel.hpp"

namespace pglab {

DbvLines dbv_lines(const Plane& pl) {
    const Fel pm1 = pl.field().neg(1);
    DbvLines out;
    out.m0 = pl.line_index(pl.normalize_line(Triple{1, 0, 0}));
    out.m1 = pl.line_index(pl.normalize_line(Triple{0, 1, 0}));
    out.m2 = pl.line_index(pl.normalize_line(Triple{1, pm1, 0}));
    return out;
}

Codeword dbv_base(const Plane& pl, DbvVariant variant) {
    const int p = pl.p();
    if (pl.field().h() != 1) throw std::invalid_argument("construction needs a prime plane");
    if (p == 2) throw std::invalid_argument("construction needs an odd prime");
    Codeword c(pl);
    for (int a = 0; a < p; ++a) {
        c.v[pl.point_index(pl.normalize_point(Triple{0, 1, static_cast<Fel>(a)}))] =
            static_cast<std::uint8_t>(a);
        c.v[pl.point_index(pl.normalize_point(Triple{1, 0, static_cast<Fel>(a)}))] =
            static_cast<std::uint8_t>(a);
        int third = variant == DbvVariant::canonical ? (p - a) % p : a;
        c.v[pl.point_index(pl.normalize_point(Triple{1, 1, static_cast<Fel>(a)}))] =
            static_cast<std::uint8_t>(third);
    }
    return c;
}

Codeword dbv_general(const Plane& pl, const DbvParams& params) {
    const int p = pl.p();
    const int gamma = ((params.gamma % p) + p) % p;
    if (gamma == 0) throw std::invalid_argument("gamma must be nonzero mod p");
    Codeword c = dbv_base(pl, params.variant);
    for (std::uint8_t& x : c.v) x = static_cast<std::uint8_t>(x * gamma % p);
    DbvLines lines = dbv_lines(pl);
    const std::uint32_t ls[3] = {lines.m0, lines.m1, lines.m2};
    for (int i = 0; i < 3; ++i) {
        int lam = ((params.lambdas[i] % p) + p) % p;
        if (!lam) continue;
        for (std::uint32_t pi : pl.line_points(ls[i]))
            c.v[pi] = static_cast<std::uint8_t>((c.v[pi] + lam) % p);
    }
    Codeword out(pl);
    out.v = params.pi.push_values(pl, c.v);
    return out;
}

namespace {

// Cover search state: support positions are indexed 0..|S|-1 and tracked in
// word-packed masks; line coverage masks are built lazily per line.
struct CoverSearch {
    const Plane& pl;
    std::vector<std::uint32_t> supp;              // support point indices, ascending
    std::vector<std::uint32_t> pos_of;            // point -> position+1 (0 = absent)
    std::size_t words;
    std::vector<std::uint64_t> full;
    std::vector<std::vector<std::uint64_t>> line_mask;
    std::vector<char> line_mask_ready;
    bool collect_all = false;
    int target_size = 0;
    std::set<std::vector<std::uint32_t>> found;

    explicit CoverSearch(const Codeword& c) : pl(*c.plane) {
        supp = c.support();
        pos_of.assign(pl.size(), 0);
        for (std::uint32_t i = 0; i < supp.size(); ++i) pos_of[supp[i]] = i + 1;
        words = (supp.size() + 63) / 64;
        full.assign(words, 0);
        for (std::size_t i = 0; i < supp.size(); ++i) full[i / 64] |= 1ULL << (i % 64);
        line_mask.resize(pl.size());
        line_mask_ready.assign(pl.size(), 0);
    }

    const std::vector<std::uint64_t>& mask_of(std::uint32_t line) {
        if (!line_mask_ready[line]) {
            line_mask_ready[line] = 1;
            line_mask[line].assign(words, 0);
            for (std::uint32_t pi : pl.line_points(line)) {
                std::uint32_t pos = pos_of[pi];
                if (pos) line_mask[line][(pos - 1) / 64] |= 1ULL << ((pos - 1) % 64);
            }
        }
        return line_mask[line];
    }

    static long long popcnt(const std::vector<std::uint64_t>& v) {
        long long s = 0;
        for (std::uint64_t w : v) s += __builtin_popcountll(w);
        return s;
    }

    bool search(std::vector<std::uint64_t>& covered, long long uncovered, int depth,
                std::vector<std::uint32_t>& chosen) {
        if (uncovered == 0) {
            std::vector<std::uint32_t> cov = chosen;
            std::sort(cov.begin(), cov.end());
            found.insert(std::move(cov));
            return !collect_all;
        }
        int remaining = target_size - depth;
        if (remaining <= 0) return false;
        if (uncovered > static_cast<long long>(remaining) * (pl.q() + 1)) return false;

        // branch over the lines through the first uncovered support point
        std::uint32_t first = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t rem = full[w] & ~covered[w];
            if (rem) {
                first = supp[w * 64 + static_cast<std::uint32_t>(__builtin_ctzll(rem))];
                break;
            }
        }
        auto cand = pl.point_lines(first);
        std::vector<std::pair<long long, std::uint32_t>> order;
        order.reserve(cand.size());
        for (std::uint32_t li : cand) {
            const auto& m = mask_of(li);
            long long fresh = 0;
            for (std::size_t w = 0; w < words; ++w) fresh += __builtin_popcountll(m[w] & ~covered[w]);
            order.emplace_back(-fresh, li);
        }
        std::sort(order.begin(), order.end());
        for (auto [negfresh, li] : order) {
            if (-negfresh == 0) continue;
            const auto& m = mask_of(li);
            std::vector<std::uint64_t> next(words);
            long long still = 0;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] = covered[w] | m[w];
                still += __builtin_popcountll(full[w] & ~next[w]);
            }
            chosen.push_back(li);
            bool stop = search(next, still, depth + 1, chosen);
            chosen.pop_back();
            if (stop) return true;
        }
        return false;
    }

    bool run(int size, bool all) {
        target_size = size;
        collect_all = all;
        found.clear();
        std::vector<std::uint64_t> covered(words, 0);
        std::vector<std::uint32_t> chosen;
        search(covered, static_cast<long long>(supp.size()), 0, chosen);
        return !found.empty();
    }
};

} // namespace

std::optional<std::vector<std::uint32_t>> cover_support(const Codeword& c, int m) {
    if (c.weight() == 0) return std::vector<std::uint32_t>{};
    CoverSearch cs(c);
    for (int size = 1; size <= m; ++size)
        if (cs.run(size, false)) return *cs.found.begin();
    return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> minimal_covers(const Codeword& c, int m) {
    if (c.weight() == 0) return {{}};
    CoverSearch cs(c);
    for (int size = 1; size <= m; ++size) {
        if (cs.run(size, true))
            return {cs.found.begin(), cs.found.end()};
    }
    return {};
}

namespace {

// DBV matching of a dual-code word supported on three concurrent lines.
// Tries each assignment of the cover lines to the roles (m0, m2, m1): the
// zero-valued point of the m0-role line goes to (0,1,0), the zero-valued
// point of the m1-role line to (1,0,0), the (-1)-valued point of the m2-role
// line to (1,1,1), and the common point to (0,0,1). On success the pushed
// word must equal gamma * base for some gamma.
struct DbvMatch {
    DbvParams params;
    std::array<std::uint32_t, 3> roles;  // cover lines in role order m0, m1, m2
};

std::optional<DbvMatch> match_dbv(const LineCode& code, const Codeword& cprime, std::uint32_t center,
                                  const std::vector<std::uint32_t>& cover) {
    const Plane& pl = code.plane();
    const int p = pl.p();
    if (pl.field().h() != 1 || p == 2) return std::nullopt;
    if (cprime.v[center] != 0) return std::nullopt;

    // per-line values off the center; every role needs pairwise distinct ones
    struct LineVals {
        std::uint32_t zero_pt = 0, minus1_pt = 0;
        bool distinct = false;
    };
    std::array<LineVals, 3> lv;
    for (int i = 0; i < 3; ++i) {
        std::vector<char> seen(p, 0);
        bool ok = true;
        for (std::uint32_t pi : pl.line_points(cover[i])) {
            if (pi == center) continue;
            int v = cprime.v[pi];
            if (seen[v]) {
                ok = false;
                break;
            }
            seen[v] = 1;
            if (v == 0) lv[i].zero_pt = pi;
            if (v == p - 1) lv[i].minus1_pt = pi;
        }
        lv[i].distinct = ok;
    }

    Codeword base = dbv_base(pl, DbvVariant::canonical);
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& pr : perms) {
        int r0 = pr[0], r2 = pr[1], r1 = pr[2];  // roles m0, m2, m1
        if (!lv[r0].distinct || !lv[r1].distinct || !lv[r2].distinct) continue;
        auto t = Collineation::from_frame(pl, pl.point(center), pl.point(lv[r0].zero_pt),
                                          pl.point(lv[r1].zero_pt), pl.point(lv[r2].minus1_pt));
        if (!t) continue;
        Collineation to_std = t->inverse();
        std::vector<std::uint8_t> pushed = to_std.push_values(pl, cprime.v);
        for (int gamma = 1; gamma < p; ++gamma) {
            bool eq = true;
            for (std::size_t i = 0; i < pushed.size() && eq; ++i)
                eq = pushed[i] == base.v[i] * gamma % p;
            if (eq)
                return DbvMatch{DbvParams{.gamma = gamma, .pi = *t},
                                {cover[static_cast<std::size_t>(r0)],
                                 cover[static_cast<std::size_t>(r1)],
                                 cover[static_cast<std::size_t>(r2)]}};
        }
    }
    return std::nullopt;
}

} // namespace

Classification classify(const LineCode& code, const Codeword& c) {
    const Plane& pl = code.plane();
    const int p = pl.p();

    Classification out;
    out.regime.weight = c.weight();
    out.regime.weight_in_range = 2 * p + 1 < out.regime.weight && out.regime.weight <= 3 * p + 1;
    out.regime.prime_plane = pl.field().h() == 1;
    out.regime.p_gt_17 = p > 17;

    if (!code.membership(c)) throw std::invalid_argument("word is not in the line code");

    if (out.regime.weight == 0) {
        out.kind = VerdictKind::LinesCombo;
        out.combo = {};
        out.certificate = Codeword(pl);
        out.certificate_ok = true;
        return out;
    }

    std::vector<std::vector<std::uint32_t>> covers = minimal_covers(c, 3);
    if (covers.empty()) {
        out.reason = "support has no cover by three lines";
        return out;
    }

    for (const std::vector<std::uint32_t>& cover : covers) {
        // plain combination over the cover
        if (auto combo = decompose(c, cover)) {
            out.kind = VerdictKind::LinesCombo;
            out.combo = *combo;
            Codeword cert(pl);
            for (auto [li, coef] : *combo)
                for (std::uint32_t pi : pl.line_points(li))
                    cert.v[pi] = static_cast<std::uint8_t>((cert.v[pi] + coef) % p);
            out.certificate_ok = cert == c;
            out.certificate = std::move(cert);
            return out;
        }
        if (cover.size() != 3) continue;

        // concurrent cover: shift into the dual code along a cover line and
        // match the frame-normalized word against the base construction
        std::uint32_t ab = pl.meet_idx(cover[0], cover[1]);
        std::uint32_t ac = pl.meet_idx(cover[0], cover[2]);
        if (ab != ac || ab != pl.meet_idx(cover[1], cover[2])) continue;

        int ls = line_sum(c, cover[0]);
        for (std::size_t ref = 0; ref < 3; ++ref) {
            Codeword cprime = c;
            if (ls) {
                int shift = p - ls;
                for (std::uint32_t pi : pl.line_points(cover[ref]))
                    cprime.v[pi] = static_cast<std::uint8_t>((cprime.v[pi] + shift) % p);
            }
            auto match = match_dbv(code, cprime, ab, cover);
            if (!match) continue;

            DbvParams params = match->params;
            if (ls) {
                // c = cprime - shift * v_cover[ref]; fold the correction into
                // the lambda of the role that cover[ref] plays
                for (int role = 0; role < 3; ++role)
                    if (match->roles[role] == cover[ref]) params.lambdas[role] = ls % p;
            }
            Codeword cert = dbv_general(pl, params);
            if (!(cert == c)) continue;
            out.kind = VerdictKind::DbvType;
            out.dbv = params;
            out.certificate = std::move(cert);
            out.certificate_ok = true;
            return out;
        }
    }

    out.reason = "no cover admits a line combination or a base-word match";
    return out;
}

WeightGapCheck weight_gap(long long q, long long k, long long w) {
    WeightGapCheck out;
    out.lo = k * q + 1;
    Rat hi = Rat((k + 1) * q) - Rat(3 * k * k, 2) - Rat(5 * k, 2) - Rat(1);
    // 3k^2/2 + 5k/2 = k(3k+5)/2 is an integer, so the endpoint is integral
    out.hi = hi.num / hi.den;
    out.hypothesis_ok = q > 17 && k >= 0 && 2 * (k + 1) * (k + 1) < q;
    out.in_gap = Rat(w) > Rat(out.lo) && Rat(w) < hi;
    return out;
}

namespace {

using Packed = std::array<std::uint64_t, 3>;

Packed pack_word(const std::vector<std::uint8_t>& v) {
    Packed out{0, 0, 0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t bit = 3 * i;
        out[bit / 64] |= static_cast<std::uint64_t>(v[i]) << (bit % 64);
        // a 3-bit field starting at offset 62 or 63 spills into the next word
        if (bit % 64 > 61) out[bit / 64 + 1] |= static_cast<std::uint64_t>(v[i]) >> (64 - bit % 64);
    }
    return out;
}

std::vector<std::uint8_t> unpack_word(const Packed& pk, std::size_t n) {
    std::vector<std::uint8_t> v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t bit = 3 * i;
        std::uint64_t x = pk[bit / 64] >> (bit % 64);
        if (bit % 64 > 61) x |= pk[bit / 64 + 1] << (64 - bit % 64);
        v[i] = static_cast<std::uint8_t>(x & 7);
    }
    return v;
}

} // namespace

CensusReport triple_support_census(const LineCode& code, int max_weight) {
    const Plane& pl = code.plane();
    const int p = pl.p();
    if (pl.field().h() != 1 || p > 7)
        throw std::invalid_argument("census is exhaustive and limited to prime planes with p <= 7");
    if (max_weight < 1) throw std::invalid_argument("max_weight must be positive");
    const std::uint32_t n = pl.size();
    code.rank();  // force the lazy echelon build before the worker threads share it

    std::vector<std::array<std::uint32_t, 3>> triples;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (std::uint32_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});

    const int threads = thread_budget();
    std::vector<std::vector<Packed>> chunk_words(threads);
    std::vector<std::string> chunk_error(threads);

    parallel_chunks(triples.size(), threads, [&](int chunk, std::size_t lo, std::size_t hi) {
        std::vector<Packed>& sink = chunk_words[chunk];
        try {
            std::vector<int> inv(p, 0);
            for (int a = 1; a < p; ++a)
                for (int b = 1; b < p; ++b)
                    if (a * b % p == 1) inv[a] = b;

            for (std::size_t t = lo; t < hi; ++t) {
                const auto& tr = triples[t];
                std::vector<std::uint32_t> pts;
                for (std::uint32_t li : tr)
                    for (std::uint32_t pi : pl.line_points(li)) pts.push_back(pi);
                std::sort(pts.begin(), pts.end());
                pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

                std::vector<Codeword> basis = code.supported_subspace(pts);
                const std::size_t d = basis.size();
                if (d > 8) throw GuardError("supported subspace exceeds dimension 8");
                if (d == 0) continue;

                // restrict the basis to the union, positions in point order
                std::vector<std::vector<std::uint8_t>> b(d, std::vector<std::uint8_t>(pts.size()));
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t s = 0; s < pts.size(); ++s) b[i][s] = basis[i].v[pts[s]];

                // enumerate combinations with leading coefficient 1 via a
                // p-ary odometer on the tail coefficients
                std::vector<std::uint8_t> cur(pts.size());
                std::vector<int> digits(d, 0);
                std::vector<std::uint8_t> fullv(n);
                for (std::size_t lead = 0; lead < d; ++lead) {
                    std::fill(digits.begin(), digits.end(), 0);
                    cur.assign(b[lead].begin(), b[lead].end());
                    for (;;) {
                        int w = 0;
                        for (std::uint8_t x : cur) w += x != 0;
                        if (w > 0 && w <= max_weight) {
                            int first = -1;
                            for (std::size_t s = 0; s < cur.size(); ++s) {
                                if (cur[s]) {
                                    first = static_cast<int>(s);
                                    break;
                                }
                            }
                            int scale = inv[cur[first]];
                            std::fill(fullv.begin(), fullv.end(), 0);
                            for (std::size_t s = 0; s < cur.size(); ++s)
                                fullv[pts[s]] = static_cast<std::uint8_t>(cur[s] * scale % p);
                            sink.push_back(pack_word(fullv));
                        }
                        // advance the odometer over positions lead+1..d-1
                        std::size_t pos = lead + 1;
                        while (pos < d) {
                            for (std::size_t s = 0; s < cur.size(); ++s)
                                cur[s] = static_cast<std::uint8_t>((cur[s] + b[pos][s]) % p);
                            if (++digits[pos] < p) break;
                            digits[pos] = 0;
                            ++pos;
                        }
                        if (pos == d) break;
                    }
                }
            }
        } catch (const std::exception& e) {
            chunk_error[chunk] = e.what();
        }
    });

    for (const std::string& err : chunk_error)
        if (!err.empty()) throw GuardError(err);

    std::vector<Packed> words;
    for (auto& cw : chunk_words) {
        words.insert(words.end(), cw.begin(), cw.end());
        cw.clear();
        cw.shrink_to_fit();
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());

    CensusReport rep;
    rep.p = p;
    rep.max_weight = max_weight;
    rep.triples = static_cast<long long>(triples.size());
    rep.distinct = static_cast<long long>(words.size());

    struct Verdict {
        int weight;
        VerdictKind kind;
        bool cert_ok;
    };
    std::vector<Verdict> verdicts(words.size());
    std::vector<std::string> phase2_error(threads);
    parallel_chunks(words.size(), threads, [&](int chunk, std::size_t lo, std::size_t hi) {
        try {
            for (std::size_t i = lo; i < hi; ++i) {
                Codeword cw(pl);
                cw.v = unpack_word(words[i], n);
                Classification cls = classify(code, cw);
                verdicts[i] = {cls.regime.weight, cls.kind,
                               cls.kind == VerdictKind::Unclassified || cls.certificate_ok};
            }
        } catch (const std::exception& e) {
            phase2_error[chunk] = e.what();
        }
    });
    for (const std::string& err : phase2_error)
        if (!err.empty()) throw GuardError(err);

    auto kind_name = [](VerdictKind k) {
        switch (k) {
            case VerdictKind::LinesCombo: return "LinesCombo";
            case VerdictKind::DbvType: return "DbvType";
            default: return "Unclassified";
        }
    };

    std::map<std::pair<int, std::string>, std::pair<long long, std::size_t>> tally;
    for (std::size_t i = 0; i < words.size(); ++i) {
        rep.certificates_ok = rep.certificates_ok && verdicts[i].cert_ok;
        auto key = std::make_pair(verdicts[i].weight, std::string(kind_name(verdicts[i].kind)));
        auto it = tally.find(key);
        if (it == tally.end())
            tally.emplace(key, std::make_pair(1LL, i));
        else
            ++it->second.first;
    }
    for (const auto& [key, val] : tally) {
        CensusEntry e;
        e.weight = key.first;
        e.verdict = key.second;
        e.count = val.first;
        std::vector<std::uint8_t> v = unpack_word(words[val.second], n);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (v[i]) {
                const Triple& t = pl.point(i).c;
                e.example.push_back({t[0], t[1], t[2], v[i]});
            }
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

} // namespace pglab
