#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pglab/field.hpp"
#include "pglab/rng.hpp"

namespace pglab {

using Triple = std::array<Fel, 3>;

/// Normalized homogeneous point coordinates: leftmost nonzero entry is 1.
struct ProjPoint {
    Triple c{0, 0, 0};
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// Normalized dual (line) coordinates, same normalization. A point lies on a
/// line when the dot product of the two triples vanishes.
struct ProjLine {
    Triple c{0, 0, 0};
    friend bool operator==(const ProjLine&, const ProjLine&) = default;
};

/// PG(2,q) over a fixed field: canonical point/line enumerations (triples
/// sorted lexicographically by coordinate encodings, so points and lines
/// share the same enumeration of triples) and incidence tables. Per-line
/// incidence bitmaps are kept for q <= 128.
class Plane {
public:
    explicit Plane(Field f);

    const Field& field() const { return fld_; }
    int q() const { return fld_.q(); }
    int p() const { return fld_.p(); }

    std::uint32_t size() const { return n_; }

    const ProjPoint& point(std::uint32_t i) const { return pts_[i]; }
    const ProjLine& line(std::uint32_t i) const { return lns_[i]; }

    std::uint32_t point_index(const ProjPoint& pt) const;
    std::uint32_t line_index(const ProjLine& ln) const;

    /// Throws std::invalid_argument on the zero triple.
    ProjPoint normalize_point(const Triple& raw) const;
    ProjLine normalize_line(const Triple& raw) const;

    /// Line through two distinct points (cross product); throws if equal.
    ProjLine join(const ProjPoint& a, const ProjPoint& b) const;
    ProjPoint meet(const ProjLine& a, const ProjLine& b) const;
    std::uint32_t join_idx(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t meet_idx(std::uint32_t a, std::uint32_t b) const;

    bool incident(std::uint32_t point, std::uint32_t line) const;

    std::span<const std::uint32_t> line_points(std::uint32_t line) const {
        return {line_pts_.data() + static_cast<std::size_t>(line) * (q() + 1),
                static_cast<std::size_t>(q() + 1)};
    }
    std::span<const std::uint32_t> point_lines(std::uint32_t point) const {
        return {pt_lines_.data() + static_cast<std::size_t>(point) * (q() + 1),
                static_cast<std::size_t>(q() + 1)};
    }

private:
    Fel dot(const Triple& a, const Triple& b) const;
    Triple cross(const Triple& a, const Triple& b) const;
    Triple normalize_raw(const Triple& raw) const;
    std::uint32_t index_of(const Triple& t) const;

    Field fld_;
    std::uint32_t n_ = 0;
    std::vector<ProjPoint> pts_;
    std::vector<ProjLine> lns_;
    std::vector<std::uint32_t> line_pts_;  // (q+1) point indices per line, sorted
    std::vector<std::uint32_t> pt_lines_;  // (q+1) line indices per point, sorted
    std::vector<std::uint64_t> bits_;      // line-major incidence bitmap (q <= 128)
    std::size_t words_per_line_ = 0;
};

/// Projective collineation, stored as an invertible 3x3 matrix over the
/// field. Points transform by the matrix (column-vector action), lines by
/// the inverse transpose.
class Collineation {
public:
    using Mat = std::array<std::array<Fel, 3>, 3>;

    static Collineation identity(const Field& f);

    /// Collineation sending the standard frame (0,0,1),(0,1,0),(1,0,0),(1,1,1)
    /// to the four given points; absent when they are not in general position.
    static std::optional<Collineation> from_frame(const Plane& pl, const ProjPoint& img001,
                                                  const ProjPoint& img010, const ProjPoint& img100,
                                                  const ProjPoint& img111);

    /// Uniformly random collineation (uniform over ordered frames).
    static Collineation random(const Plane& pl, Rng& rng);

    ProjPoint apply(const Plane& pl, const ProjPoint& pt) const;
    ProjLine apply(const Plane& pl, const ProjLine& ln) const;

    Collineation inverse() const;

    /// perm[i] = index of the image of point i.
    std::vector<std::uint32_t> point_permutation(const Plane& pl) const;

    /// Moves point-indexed values along the induced permutation:
    /// out[index(T P)] = vals[index(P)].
    std::vector<std::uint8_t> push_values(const Plane& pl, const std::vector<std::uint8_t>& vals) const;

    const Mat& matrix() const { return m_; }

private:
    Collineation(const Field* f, const Mat& m, const Mat& minv) : f_(f), m_(m), minv_(minv) {}

    const Field* f_ = nullptr;
    Mat m_{};
    Mat minv_{};
};

} // namespace pglab
