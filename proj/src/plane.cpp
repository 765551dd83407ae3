#include "pglab/plane.hpp"

#include <algorithm>
#include <stdexcept>

namespace pglab {

Plane::Plane(Field f) : fld_(std::move(f)) {
    const int q = fld_.q();
    n_ = static_cast<std::uint32_t>(static_cast<long long>(q) * q + q + 1);
    pts_.reserve(n_);
    lns_.reserve(n_);

    // canonical order: (0,0,1), then (0,1,y), then (1,a,b); this is exactly
    // lexicographic order on the normalized coordinate encodings
    pts_.push_back({Triple{0, 0, 1}});
    for (int y = 0; y < q; ++y) pts_.push_back({Triple{0, 1, static_cast<Fel>(y)}});
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            pts_.push_back({Triple{1, static_cast<Fel>(a), static_cast<Fel>(b)}});
    for (const ProjPoint& pt : pts_) lns_.push_back({pt.c});

    const int per = q + 1;
    line_pts_.assign(static_cast<std::size_t>(n_) * per, 0);
    pt_lines_.assign(static_cast<std::size_t>(n_) * per, 0);
    std::vector<std::uint32_t> lfill(n_, 0), pfill(n_, 0);

    const bool bitmap = q <= 128;
    if (bitmap) {
        words_per_line_ = (n_ + 63) / 64;
        bits_.assign(words_per_line_ * n_, 0);
    }

    for (std::uint32_t li = 0; li < n_; ++li) {
        const Triple& l = lns_[li].c;
        for (std::uint32_t pi = 0; pi < n_; ++pi) {
            if (dot(pts_[pi].c, l) == 0) {
                line_pts_[static_cast<std::size_t>(li) * per + lfill[li]++] = pi;
                pt_lines_[static_cast<std::size_t>(pi) * per + pfill[pi]++] = li;
                if (bitmap) bits_[words_per_line_ * li + pi / 64] |= 1ULL << (pi % 64);
            }
        }
        if (lfill[li] != static_cast<std::uint32_t>(per))
            throw std::logic_error("line does not carry q+1 points");
    }
    for (std::uint32_t pi = 0; pi < n_; ++pi)
        if (pfill[pi] != static_cast<std::uint32_t>(per))
            throw std::logic_error("point does not lie on q+1 lines");
}

Fel Plane::dot(const Triple& a, const Triple& b) const {
    Fel s = fld_.mul(a[0], b[0]);
    s = fld_.add(s, fld_.mul(a[1], b[1]));
    return fld_.add(s, fld_.mul(a[2], b[2]));
}

Triple Plane::cross(const Triple& a, const Triple& b) const {
    const Field& f = fld_;
    return Triple{f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
                  f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
                  f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

Triple Plane::normalize_raw(const Triple& raw) const {
    int lead = -1;
    for (int i = 0; i < 3; ++i) {
        if (raw[i] != 0) {
            lead = i;
            break;
        }
    }
    if (lead < 0) throw std::invalid_argument("zero triple has no projective class");
    Fel s = fld_.inv(raw[lead]);
    Triple out{};
    for (int i = 0; i < 3; ++i) out[i] = fld_.mul(raw[i], s);
    return out;
}

ProjPoint Plane::normalize_point(const Triple& raw) const { return {normalize_raw(raw)}; }
ProjLine Plane::normalize_line(const Triple& raw) const { return {normalize_raw(raw)}; }

std::uint32_t Plane::index_of(const Triple& t) const {
    const std::uint32_t q = static_cast<std::uint32_t>(fld_.q());
    if (t[0] == 1) return 1 + q + t[1] * q + t[2];
    if (t[0] == 0 && t[1] == 1) return 1 + t[2];
    if (t[0] == 0 && t[1] == 0 && t[2] == 1) return 0;
    throw std::invalid_argument("triple is not normalized");
}

std::uint32_t Plane::point_index(const ProjPoint& pt) const { return index_of(pt.c); }
std::uint32_t Plane::line_index(const ProjLine& ln) const { return index_of(ln.c); }

ProjLine Plane::join(const ProjPoint& a, const ProjPoint& b) const {
    Triple c = cross(a.c, b.c);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw std::invalid_argument("join of equal points");
    return normalize_line(c);
}

ProjPoint Plane::meet(const ProjLine& a, const ProjLine& b) const {
    Triple c = cross(a.c, b.c);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw std::invalid_argument("meet of equal lines");
    return normalize_point(c);
}

std::uint32_t Plane::join_idx(std::uint32_t a, std::uint32_t b) const {
    return line_index(join(pts_[a], pts_[b]));
}

std::uint32_t Plane::meet_idx(std::uint32_t a, std::uint32_t b) const {
    return point_index(meet(lns_[a], lns_[b]));
}

bool Plane::incident(std::uint32_t point, std::uint32_t line) const {
    if (!bits_.empty())
        return (bits_[words_per_line_ * line + point / 64] >> (point % 64)) & 1ULL;
    return dot(pts_[point].c, lns_[line].c) == 0;
}

Collineation Collineation::identity(const Field& f) {
    Mat id{};
    for (int i = 0; i < 3; ++i) id[i][i] = 1;
    return Collineation(&f, id, id);
}

namespace {

using Mat = Collineation::Mat;

Triple mat_apply(const Field& f, const Mat& m, const Triple& v) {
    Triple out{};
    for (int i = 0; i < 3; ++i) {
        Fel s = f.mul(m[i][0], v[0]);
        s = f.add(s, f.mul(m[i][1], v[1]));
        out[i] = f.add(s, f.mul(m[i][2], v[2]));
    }
    return out;
}

Fel det3(const Field& f, const Mat& m) {
    Fel t0 = f.mul(m[0][0], f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1])));
    Fel t1 = f.mul(m[0][1], f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0])));
    Fel t2 = f.mul(m[0][2], f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0])));
    return f.add(f.sub(t0, t1), t2);
}

std::optional<Mat> mat_inverse(const Field& f, const Mat& m) {
    Fel d = det3(f, m);
    if (d == 0) return std::nullopt;
    Fel di = f.inv(d);
    Mat adj{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
            int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
            // adjugate entry (j,i): cofactor expansion without sign juggling
            Fel cof = f.sub(f.mul(m[r0][c0], m[r1][c1]), f.mul(m[r0][c1], m[r1][c0]));
            adj[j][i] = f.mul(cof, di);
        }
    }
    return adj;
}

} // namespace

std::optional<Collineation> Collineation::from_frame(const Plane& pl, const ProjPoint& img001,
                                                     const ProjPoint& img010, const ProjPoint& img100,
                                                     const ProjPoint& img111) {
    const Field& f = pl.field();
    // columns carry the images of the basis points; the column scales are
    // fixed by the image of the unit point
    Mat m{};
    for (int i = 0; i < 3; ++i) {
        m[i][0] = img100.c[i];
        m[i][1] = img010.c[i];
        m[i][2] = img001.c[i];
    }
    auto mi = mat_inverse(f, m);
    if (!mi) return std::nullopt;
    Triple t = mat_apply(f, *mi, img111.c);
    if (t[0] == 0 || t[1] == 0 || t[2] == 0) return std::nullopt;
    for (int i = 0; i < 3; ++i) {
        m[i][0] = f.mul(m[i][0], t[0]);
        m[i][1] = f.mul(m[i][1], t[1]);
        m[i][2] = f.mul(m[i][2], t[2]);
    }
    auto inv = mat_inverse(f, m);
    if (!inv) return std::nullopt;
    return Collineation(&f, m, *inv);
}

Collineation Collineation::random(const Plane& pl, Rng& rng) {
    const std::uint32_t n = pl.size();
    for (;;) {
        ProjPoint a = pl.point(static_cast<std::uint32_t>(rng.below(n)));
        ProjPoint b = pl.point(static_cast<std::uint32_t>(rng.below(n)));
        ProjPoint c = pl.point(static_cast<std::uint32_t>(rng.below(n)));
        ProjPoint d = pl.point(static_cast<std::uint32_t>(rng.below(n)));
        auto t = from_frame(pl, a, b, c, d);
        if (t) return *t;
    }
}

ProjPoint Collineation::apply(const Plane& pl, const ProjPoint& pt) const {
    return pl.normalize_point(mat_apply(*f_, m_, pt.c));
}

ProjLine Collineation::apply(const Plane& pl, const ProjLine& ln) const {
    // lines transform by the inverse transpose
    Mat it{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) it[i][j] = minv_[j][i];
    return pl.normalize_line(mat_apply(*f_, it, ln.c));
}

Collineation Collineation::inverse() const { return Collineation(f_, minv_, m_); }

std::vector<std::uint32_t> Collineation::point_permutation(const Plane& pl) const {
    std::vector<std::uint32_t> perm(pl.size());
    for (std::uint32_t i = 0; i < pl.size(); ++i) perm[i] = pl.point_index(apply(pl, pl.point(i)));
    return perm;
}

std::vector<std::uint8_t> Collineation::push_values(const Plane& pl,
                                                    const std::vector<std::uint8_t>& vals) const {
    std::vector<std::uint32_t> perm = point_permutation(pl);
    std::vector<std::uint8_t> out(vals.size(), 0);
    for (std::uint32_t i = 0; i < pl.size(); ++i) out[perm[i]] = vals[i];
    return out;
}

} // namespace pglab
