#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pglab/plane.hpp"
#include "pglab/rational.hpp"

namespace pglab {

/// Multiset of plane points with multiplicities in Z_p (characteristic of
/// the plane's field). Dense point-indexed storage; absent points have
/// weight 0.
struct WeightedMultiset {
    const Plane* plane = nullptr;
    std::vector<std::uint8_t> w;

    explicit WeightedMultiset(const Plane& pl) : plane(&pl), w(pl.size(), 0) {}

    int p() const { return plane->p(); }

    void add_weight(std::uint32_t point, long long amount) {
        long long v = (w[point] + amount) % p();
        if (v < 0) v += p();
        w[point] = static_cast<std::uint8_t>(v);
    }

    /// Total weight mod p.
    int total_residue() const {
        long long s = 0;
        for (std::uint8_t x : w) s += x;
        return static_cast<int>(s % p());
    }

    int changed_points_vs(const WeightedMultiset& other) const {
        int c = 0;
        for (std::size_t i = 0; i < w.size(); ++i) c += w[i] != other.w[i];
        return c;
    }
};

/// Line-by-line intersection residues for a fixed k.
struct SecantSpectrum {
    int k = 0;
    std::vector<std::uint8_t> line_residue;  // weight of line ∩ M mod p
    std::vector<std::uint32_t> point_index;  // # lines through the point with residue != k
    long long delta = 0;                     // # lines with residue != k
};

SecantSpectrum secant_spectrum(const WeightedMultiset& m, int k);

/// Affine coordinatization with a chosen line at infinity. A fixed frame maps
/// l_inf to the line {X0 = 0}; the distinguished infinite point (the one
/// playing the vertical-direction role) is the canonically first weight-zero
/// point of l_inf, and is required to exist. Affine points read off as
/// (1, a, b) -> (a, b); other infinite points as (0, 1, y) -> slope y.
class AffineChart {
public:
    /// Throws std::invalid_argument when every point of l_inf has positive
    /// weight (the coordinatization needs an unweighted distinguished point).
    AffineChart(const WeightedMultiset& m, std::uint32_t linf);

    std::uint32_t linf() const { return linf_; }
    std::uint32_t distinguished_point() const { return distinguished_; }

    bool on_linf(std::uint32_t point) const;
    std::pair<Fel, Fel> affine_coords(std::uint32_t point) const;
    Fel ideal_slope(std::uint32_t point) const;

    std::uint32_t affine_point(Fel a, Fel b) const;
    std::uint32_t ideal_point(Fel slope) const;

    /// Index of the line whose chart equation is Y = slope*X + intercept.
    std::uint32_t slope_line(Fel slope, Fel intercept) const;

private:
    const Plane* plane_;
    std::uint32_t linf_;
    std::uint32_t distinguished_;
    Collineation to_std_;    // plane frame -> standard frame
    Collineation from_std_;  // inverse
};

/// Pointwise evaluator for the secant-detector polynomial of a multiset with
/// respect to a k-residue line at infinity:
///
///   g(X,Y) = sum_v w_v (X + a_v Y - b_v)^(q-1)
///          + sum_i w_i (Y - y_i)^(q-1) - |M| + k
///
/// over the affine part (a_v, b_v) and the infinite part (slopes y_i) of the
/// multiset. For every x,y the value lies in the prime subfield and equals
/// k - |l ∩ M| mod p, where l is the line Y = yX + x. Powers are evaluated
/// via pow(., q-1); the polynomial is never expanded.
class DetectorPoly {
public:
    /// Throws std::invalid_argument when l_inf does not meet the multiset in
    /// k mod p points or no chart exists.
    DetectorPoly(const WeightedMultiset& m, int k, std::uint32_t linf);

    /// g(x, y) as a residue in [0, p).
    int eval(Fel x, Fel y) const;

    const AffineChart& chart() const { return chart_; }
    const Plane& plane() const { return *plane_; }

private:
    const Plane* plane_;
    AffineChart chart_;
    int k_;
    int msize_;  // |M| mod p
    struct AffineTerm {
        Fel a, b;
        Fel w;
    };
    struct IdealTerm {
        Fel y;
        Fel w;
    };
    std::vector<AffineTerm> affine_;
    std::vector<IdealTerm> ideal_;
};

/// Root-count comparison at a fixed slope: the number of roots of g(X, y)
/// equals deg gcd(g(X,y), X^q - X), and should be q - s where s is the
/// number of non-k affine secants through the ideal point of slope y.
struct RootCheck {
    int root_count = 0;   // = deg gcd(g(X,y), X^q - X)
    int secants = 0;      // non-k secants through the ideal point (affine ones)
    bool agree = false;
};

RootCheck detector_root_check(const DetectorPoly& g, const SecantSpectrum& spec, Fel y);

/// The counting inequality on indices of infinite points: with s the largest
/// index among points of l_inf other than the distinguished one, and n_h the
/// number of such points of index s-h, sum h*n_h over h=1..s is at most
/// s(s-1).
struct IndexDeficiencyCheck {
    long long s = 0;
    std::vector<long long> n;  // n[h] for h in [1, s]; n[0] unused
    long long lhs = 0;         // sum h * n_h
    long long rhs = 0;         // s(s-1)
    bool holds = false;
};

IndexDeficiencyCheck index_deficiency_check(const WeightedMultiset& m, int k, std::uint32_t linf);

/// Exact rational index thresholds for a given delta.
struct IndexThresholds {
    long long q = 0;
    long long delta = 0;
    // dichotomy bounds: index <= small or >= large
    Rat small_bound;  // delta/(q+1) + 2 delta^2/(q+1)^3
    Rat large_bound;  // q+1 - small_bound
    bool dichotomy_hypothesis = false;  // q > 17 and delta < (3/16)(q+1)^2
    // structural bounds available when delta < (floor(sqrt q)+1)(q+1-floor(sqrt q))
    bool structural_hypothesis = false;  // q > 17 and the bound above
    Rat structural_small;  // min(delta/(q+1)+2, floor(sqrt q)+1)
    Rat structural_large;  // max(q+1-(delta/(q+1)+2), q-floor(sqrt q))
};

IndexThresholds index_thresholds(long long q, long long delta);

/// delta < (floor(sqrt q)+1)(q+1-floor(sqrt q)), the stability range bound.
bool stability_range_ok(long long q, long long delta);

} // namespace pglab
