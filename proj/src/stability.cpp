#include "pglab/stability.hpp"

#include <algorithm>
#include <set>

namespace pglab {
namespace {

std::vector<std::uint32_t> large_points_from(const Plane& pl, const SecantSpectrum& spec) {
    IndexThresholds t = index_thresholds(pl.q(), spec.delta);
    std::vector<std::uint32_t> out;
    for (std::uint32_t pi = 0; pi < pl.size(); ++pi)
        if (Rat(spec.point_index[pi]) >= t.large_bound) out.push_back(pi);
    return out;
}

} // namespace

std::vector<std::uint32_t> large_index_points(const WeightedMultiset& m, int k) {
    SecantSpectrum spec = secant_spectrum(m, k);
    return large_points_from(*m.plane, spec);
}

BlockingSetReport blocking_set(const WeightedMultiset& m, int k) {
    const Plane& pl = *m.plane;
    const long long q = pl.q();
    SecantSpectrum spec = secant_spectrum(m, k);

    BlockingSetReport rep;
    rep.set = large_points_from(pl, spec);
    rep.delta = spec.delta;
    rep.target_size = spec.delta == 0 ? 0 : ceil_div(spec.delta, q + 1);
    for (std::uint32_t pi : rep.set) rep.per_point_index[pi] = spec.point_index[pi];
    rep.hypothesis_ok = q > 17 && 2 * rep.delta * rep.delta < q * (q + 1) * (q + 1);

    rep.blocks_all = true;
    std::vector<std::uint8_t> in_set(pl.size(), 0);
    for (std::uint32_t pi : rep.set) in_set[pi] = 1;
    for (std::uint32_t li = 0; li < pl.size() && rep.blocks_all; ++li) {
        if (spec.line_residue[li] == k) continue;
        bool hit = false;
        for (std::uint32_t pi : pl.line_points(li)) {
            if (in_set[pi]) {
                hit = true;
                break;
            }
        }
        rep.blocks_all = hit;
    }
    return rep;
}

namespace {

DominantResidue dominant_from(const Plane& pl, const SecantSpectrum& spec, std::uint32_t point) {
    const long long q = pl.q();
    const int p = pl.p();
    DominantResidue out;
    long long bad = spec.point_index[point];
    if (2 * bad <= q) {
        out.reason = "point does not lie on more than q/2 non-k lines";
        return out;
    }
    std::vector<long long> tally(p, 0);
    for (std::uint32_t li : pl.point_lines(point))
        if (spec.line_residue[li] != spec.k) ++tally[spec.line_residue[li]];
    int best = -1;
    for (int r = 0; r < p; ++r) {
        if (r == spec.k) continue;
        if (best < 0 || tally[r] > tally[best]) best = r;
    }
    // present only when the best residue clears 2 delta/(q+1) + 5
    if (best >= 0 && Rat(tally[best]) > Rat(2 * spec.delta, q + 1) + Rat(5)) {
        out.present = true;
        out.residue = best;
        out.count = tally[best];
    } else {
        out.reason = "no residue clears 2*delta/(q+1) + 5";
    }
    return out;
}

} // namespace

DominantResidue dominant_residue(const WeightedMultiset& m, int k, std::uint32_t point) {
    SecantSpectrum spec = secant_spectrum(m, k);
    return dominant_from(*m.plane, spec, point);
}

RepairReport repair(const WeightedMultiset& m, int k) {
    const Plane& pl = *m.plane;
    const long long q = pl.q();
    const int p = pl.p();
    const int h = pl.field().h();

    SecantSpectrum spec = secant_spectrum(m, k);
    RepairReport rep{.result = m};
    rep.delta0 = spec.delta;
    rep.target = spec.delta == 0 ? 0 : ceil_div(spec.delta, q + 1);
    rep.hypothesis_ok = q > 17 && stability_range_ok(q, spec.delta);
    if (h == 2) {
        // delta < (p-1)(p-4)(p^2+1)/(2p-1)
        rep.strong_hypothesis_ok =
            q > 27 && Rat(spec.delta) < Rat(static_cast<long long>(p - 1) * (p - 4) * (static_cast<long long>(p) * p + 1), 2 * p - 1);
    } else {
        rep.strong_hypothesis_ok = q > 27 && h > 2 && stability_range_ok(q, spec.delta);
    }

    const long long guard = rep.target + 2;
    // per-step progress floor: q+1 - 2(delta0/(q+1) + 2)
    const Rat progress_floor = Rat(q + 1) - (Rat(2 * rep.delta0, q + 1) + Rat(4));

    std::vector<std::uint32_t> large = large_points_from(pl, spec);
    std::set<std::uint32_t> expected(large.begin(), large.end());

    while (!large.empty()) {
        if (static_cast<long long>(rep.steps.size()) >= guard) {
            rep.status = RepairStatus::guard_trip;
            rep.failure_reason = "iteration guard exceeded";
            break;
        }
        std::uint32_t pt = large.front();  // canonically first
        DominantResidue dom = dominant_from(pl, spec, pt);
        if (!dom.present) {
            rep.status = RepairStatus::no_dominant_residue;
            rep.failure_reason = "no dominant residue at point " + std::to_string(pt) + ": " + dom.reason;
            break;
        }
        int added = ((k - dom.residue) % p + p) % p;
        long long before = spec.delta;
        rep.result.add_weight(pt, added);
        spec = secant_spectrum(rep.result, k);

        RepairStep step;
        step.point = pt;
        step.added = added;
        step.majority_residue = dom.residue;
        step.delta_after = spec.delta;
        step.progress_ok = Rat(before - spec.delta) >= progress_floor;
        rep.all_progress_ok = rep.all_progress_ok && step.progress_ok;
        rep.steps.push_back(step);

        expected.erase(pt);
        large = large_points_from(pl, spec);
        if (std::set<std::uint32_t>(large.begin(), large.end()) != expected)
            rep.pointset_consistent = false;
        expected = std::set<std::uint32_t>(large.begin(), large.end());
    }

    rep.final_delta = spec.delta;
    rep.changed_points = rep.result.changed_points_vs(m);
    rep.changed_equals_target = rep.status == RepairStatus::success && rep.final_delta == 0 &&
                                rep.changed_points == rep.target;
    return rep;
}

DeltaBoundCheck delta_bound_check(const WeightedMultiset& m, int k) {
    const Plane& pl = *m.plane;
    const long long q = pl.q();
    const long long r = isqrt_floor(q);
    SecantSpectrum spec = secant_spectrum(m, k);

    DeltaBoundCheck out;
    out.delta = spec.delta;
    for (std::uint32_t pi = 0; pi < pl.size(); ++pi)
        out.max_index = std::max(out.max_index, static_cast<long long>(spec.point_index[pi]));
    out.bound = r * q - q + 2 * r + 1;
    out.hypothesis_ok = q > 17 && stability_range_ok(q, out.delta) && out.max_index < q - r;
    out.holds = !out.hypothesis_ok || out.delta <= out.bound;
    return out;
}

} // namespace pglab
