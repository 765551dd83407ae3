#pragma once

#include <optional>
#include <vector>

#include "pglab/multiset.hpp"
#include "pglab/rng.hpp"

namespace pglab {

/// Sparse random multiset: `points` distinct points, each with a uniform
/// nonzero weight.
WeightedMultiset random_multiset(const Plane& pl, Rng& rng, int points);

/// Random multiset meeting every line in k mod p points: a constant blanket
/// of weight b on all points plus one to three full lines at weights chosen
/// so that b plus the line weights sums to k mod p.
WeightedMultiset random_kmod_multiset(const Plane& pl, int k, Rng& rng);

/// Raises eps distinct uniformly chosen points by uniform nonzero residues.
/// Returns the chosen points, ascending.
std::vector<std::uint32_t> plant_perturbation(WeightedMultiset& m, Rng& rng, int eps);

/// Canonically first line with residue k and a weight-zero point on it (the
/// chart precondition); absent when no line qualifies.
std::optional<std::uint32_t> find_chart_line(const WeightedMultiset& m, int k);

/// Uniform choice among all chart-admissible k-residue lines.
std::optional<std::uint32_t> random_chart_line(const WeightedMultiset& m, int k, Rng& rng);

/// A uniformly chosen line carrying a weight-zero point, together with its
/// own residue as k; absent only when every line is fully weighted.
struct ChartPick {
    std::uint32_t line = 0;
    int k = 0;
};
std::optional<ChartPick> random_chart_pick(const WeightedMultiset& m, Rng& rng);

} // namespace pglab
