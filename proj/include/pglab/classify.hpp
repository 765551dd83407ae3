#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pglab/linecode.hpp"
#include "pglab/rational.hpp"

namespace pglab {

/// Guard failures that map to the algorithm-guard exit code.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DbvVariant { canonical, literal };

/// The three concurrent lines X0=0, X1=0, X0=X1 through (0,0,1).
struct DbvLines {
    std::uint32_t m0, m1, m2;
};
DbvLines dbv_lines(const Plane& pl);

/// Weight 3p-3 word on the three concurrent lines of a prime plane: value a
/// at (0,1,a) and b at (1,0,b). The canonical variant takes -c at (1,1,c),
/// which makes every line sum vanish; the literal variant takes +c, whose
/// line sums are not constant (it lies outside the line code). Requires an
/// odd prime plane (h = 1).
Codeword dbv_base(const Plane& pl, DbvVariant variant);

struct DbvParams {
    int gamma = 1;                       // nonzero scale on the base word
    std::array<int, 3> lambdas{0, 0, 0}; // line coefficients on m0, m1, m2
    Collineation pi;                     // applied last
    DbvVariant variant = DbvVariant::canonical;
};

/// pi(gamma * base + l0 v_m0 + l1 v_m1 + l2 v_m2); weight is at most 3p+1.
Codeword dbv_general(const Plane& pl, const DbvParams& params);

/// Exact search for at most m lines covering the support (branch and bound;
/// candidate lines at each level ordered by fresh coverage, descending).
/// Returns a smallest cover of size <= m, or absent.
std::optional<std::vector<std::uint32_t>> cover_support(const Codeword& c, int m);

/// All covers of the support by exactly the minimal achievable size <= m,
/// each sorted, listed in lexicographic order.
std::vector<std::vector<std::uint32_t>> minimal_covers(const Codeword& c, int m);

enum class VerdictKind { LinesCombo, DbvType, Unclassified };

struct Classification {
    VerdictKind kind = VerdictKind::Unclassified;
    LineCombination combo;                // LinesCombo
    std::optional<DbvParams> dbv;         // DbvType
    std::string reason;                   // Unclassified
    std::optional<Codeword> certificate;  // reconstruction from the verdict data
    bool certificate_ok = false;
    struct Regime {
        int weight = 0;
        bool weight_in_range = false;  // 2p+1 < w <= 3p+1
        bool prime_plane = false;
        bool p_gt_17 = false;
    } regime;
};

/// Structure of a small-weight codeword: a combination of at most three
/// lines, or a transformed three-concurrent-line word. Mirrors the
/// normalization proof: pick a 3-line cover, shift into the dual code, and
/// either decompose over the cover or frame-normalize onto the base word.
/// Throws std::invalid_argument when c is not in the code.
Classification classify(const LineCode& code, const Codeword& c);

struct WeightGapCheck {
    bool in_gap = false;         // kq+1 < w < (k+1)q - (3/2)k^2 - (5/2)k - 1
    bool hypothesis_ok = false;  // q > 17 and 0 < k+1 < sqrt(q/2)
    long long lo = 0;            // kq + 1
    long long hi = 0;            // the upper endpoint (always an integer)
};

WeightGapCheck weight_gap(long long q, long long k, long long w);

struct CensusEntry {
    int weight = 0;
    std::string verdict;
    long long count = 0;
    // sparse example: rows (x0, x1, x2, value)
    std::vector<std::array<long long, 4>> example;
};

struct CensusReport {
    int p = 0;
    int max_weight = 0;
    long long triples = 0;
    long long distinct = 0;
    bool certificates_ok = true;
    std::vector<CensusEntry> entries;  // sorted by (weight, verdict)
};

/// Exhaustive sweep over unordered line triples: every codeword supported
/// inside a triple's union with weight in (0, max_weight], deduplicated
/// across triples and up to scalar (first nonzero entry scaled to 1), then
/// classified. Prime planes with p <= 7 only; a subspace of dimension > 8
/// raises GuardError. Parallelizes across triples; output is deterministic.
CensusReport triple_support_census(const LineCode& code, int max_weight);

} // namespace pglab
