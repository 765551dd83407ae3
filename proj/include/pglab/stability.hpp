#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pglab/multiset.hpp"

namespace pglab {

/// Points whose index (number of non-k lines through them) reaches the large
/// branch of the index dichotomy, q+1 - (delta/(q+1) + 2 delta^2/(q+1)^3).
std::vector<std::uint32_t> large_index_points(const WeightedMultiset& m, int k);

struct BlockingSetReport {
    std::vector<std::uint32_t> set;
    long long delta = 0;
    long long target_size = 0;  // ceil(delta / (q+1))
    bool blocks_all = false;    // every non-k line meets the set
    std::map<std::uint32_t, long long> per_point_index;
    bool hypothesis_ok = false;  // q > 17 and 2 delta^2 < q (q+1)^2
};

/// The large-index points as a blocking set of the non-k lines, with
/// coverage diagnostics. Emitted regardless of the hypothesis flag.
BlockingSetReport blocking_set(const WeightedMultiset& m, int k);

struct DominantResidue {
    bool present = false;
    int residue = 0;       // intersection residue r != k shared by many lines
    long long count = 0;   // how many non-k lines through the point carry it
    std::string reason;    // set when absent
};

/// Looks for a residue r != k attained by more than 2 delta/(q+1) + 5 of the
/// non-k lines through the point. Requires more than q/2 non-k lines through
/// the point; violations are reported as an absent value with a reason.
/// Ties between residues break toward the smallest residue.
DominantResidue dominant_residue(const WeightedMultiset& m, int k, std::uint32_t point);

enum class RepairStatus { success, guard_trip, no_dominant_residue };

struct RepairStep {
    std::uint32_t point = 0;
    int added = 0;             // weight added, (k - k_i) mod p
    int majority_residue = 0;  // k_i
    long long delta_after = 0;
    bool progress_ok = false;  // step repaired >= q+1 - 2(delta0/(q+1)+2) lines
};

struct RepairReport {
    RepairStatus status = RepairStatus::success;
    long long delta0 = 0;
    long long final_delta = 0;
    long long target = 0;  // ceil(delta0/(q+1))
    int changed_points = 0;
    std::vector<RepairStep> steps;
    WeightedMultiset result;
    /// The hypothesis the loop itself relies on: q > 17 and delta0 below the
    /// stability range bound. The dominant-residue property is checked at
    /// every step rather than assumed.
    bool hypothesis_ok = false;
    /// The h-specific smallness bounds (p^h with h=2 has its own threshold);
    /// reported for diagnostics, not used to gate the loop.
    bool strong_hypothesis_ok = false;
    bool pointset_consistent = true;   // large-index set shrinks exactly by the processed points
    bool all_progress_ok = true;
    bool changed_equals_target = false;
    std::string failure_reason;
};

/// Iteratively raises the weight of a large-index point by (k - k_i) mod p,
/// where k_i is the dominant intersection residue through it, until no
/// large-index point remains. Gives up after ceil(delta0/(q+1)) + 2 steps.
RepairReport repair(const WeightedMultiset& m, int k);

struct DeltaBoundCheck {
    long long delta = 0;
    long long max_index = 0;
    long long bound = 0;        // floor(sqrt q) q - q + 2 floor(sqrt q) + 1
    bool hypothesis_ok = false; // q > 17, stability range, and all indices < q - floor(sqrt q)
    bool holds = false;         // hypothesis -> delta <= bound
};

/// When no point has index reaching q - floor(sqrt q) (and delta is in the
/// stability range), delta cannot exceed floor(sqrt q) q - q + 2 floor(sqrt q) + 1.
DeltaBoundCheck delta_bound_check(const WeightedMultiset& m, int k);

} // namespace pglab
