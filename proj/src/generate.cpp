#include "pglab/generate.hpp"

#include <algorithm>
#include <set>

namespace pglab {

namespace {

std::vector<std::uint32_t> distinct_indices(std::uint32_t n, Rng& rng, int count) {
    std::set<std::uint32_t> seen;
    while (seen.size() < static_cast<std::size_t>(count))
        seen.insert(static_cast<std::uint32_t>(rng.below(n)));
    return {seen.begin(), seen.end()};
}

bool has_zero_point(const WeightedMultiset& m, std::uint32_t line) {
    for (std::uint32_t pi : m.plane->line_points(line))
        if (m.w[pi] == 0) return true;
    return false;
}

} // namespace

WeightedMultiset random_multiset(const Plane& pl, Rng& rng, int points) {
    WeightedMultiset m(pl);
    const int p = pl.p();
    for (std::uint32_t pi : distinct_indices(pl.size(), rng, points))
        m.w[pi] = static_cast<std::uint8_t>(p == 2 ? 1 : rng.range(1, p - 1));
    return m;
}

WeightedMultiset random_kmod_multiset(const Plane& pl, int k, Rng& rng) {
    WeightedMultiset m(pl);
    const int p = pl.p();
    const int blanket = static_cast<int>(rng.below(p));
    if (blanket)
        for (std::uint32_t i = 0; i < pl.size(); ++i) m.w[i] = static_cast<std::uint8_t>(blanket);

    const int nlines = static_cast<int>(rng.range(1, 3));
    std::vector<std::uint32_t> lines = distinct_indices(pl.size(), rng, nlines);
    int acc = blanket;
    for (int i = 0; i < nlines; ++i) {
        int u = i + 1 < nlines ? static_cast<int>(rng.below(p)) : (((k - acc) % p) + p) % p;
        acc = (acc + u) % p;
        if (!u) continue;
        for (std::uint32_t pi : pl.line_points(lines[i])) m.add_weight(pi, u);
    }
    return m;
}

std::vector<std::uint32_t> plant_perturbation(WeightedMultiset& m, Rng& rng, int eps) {
    const int p = m.p();
    std::vector<std::uint32_t> pts = distinct_indices(m.plane->size(), rng, eps);
    for (std::uint32_t pi : pts) m.add_weight(pi, p == 2 ? 1 : rng.range(1, p - 1));
    return pts;
}

std::optional<std::uint32_t> find_chart_line(const WeightedMultiset& m, int k) {
    SecantSpectrum spec = secant_spectrum(m, k);
    for (std::uint32_t li = 0; li < m.plane->size(); ++li)
        if (spec.line_residue[li] == k && has_zero_point(m, li)) return li;
    return std::nullopt;
}

std::optional<std::uint32_t> random_chart_line(const WeightedMultiset& m, int k, Rng& rng) {
    SecantSpectrum spec = secant_spectrum(m, k);
    std::vector<std::uint32_t> ok;
    for (std::uint32_t li = 0; li < m.plane->size(); ++li)
        if (spec.line_residue[li] == k && has_zero_point(m, li)) ok.push_back(li);
    if (ok.empty()) return std::nullopt;
    return ok[static_cast<std::size_t>(rng.below(ok.size()))];
}

std::optional<ChartPick> random_chart_pick(const WeightedMultiset& m, Rng& rng) {
    SecantSpectrum spec = secant_spectrum(m, 0);
    std::vector<std::uint32_t> ok;
    for (std::uint32_t li = 0; li < m.plane->size(); ++li)
        if (has_zero_point(m, li)) ok.push_back(li);
    if (ok.empty()) return std::nullopt;
    std::uint32_t line = ok[static_cast<std::size_t>(rng.below(ok.size()))];
    return ChartPick{line, spec.line_residue[line]};
}

} // namespace pglab
