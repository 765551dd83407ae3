#include "pglab/multiset.hpp"

#include <algorithm>
#include <stdexcept>

namespace pglab {

SecantSpectrum secant_spectrum(const WeightedMultiset& m, int k) {
    const Plane& pl = *m.plane;
    const int p = pl.p();
    if (k < 0 || k >= p) throw std::invalid_argument("k must be a residue in [0, p)");
    SecantSpectrum spec;
    spec.k = k;
    spec.line_residue.assign(pl.size(), 0);
    spec.point_index.assign(pl.size(), 0);
    for (std::uint32_t li = 0; li < pl.size(); ++li) {
        long long s = 0;
        for (std::uint32_t pi : pl.line_points(li)) s += m.w[pi];
        spec.line_residue[li] = static_cast<std::uint8_t>(s % p);
    }
    for (std::uint32_t li = 0; li < pl.size(); ++li) {
        if (spec.line_residue[li] != k) {
            ++spec.delta;
            for (std::uint32_t pi : pl.line_points(li)) ++spec.point_index[pi];
        }
    }
    return spec;
}

AffineChart::AffineChart(const WeightedMultiset& m, std::uint32_t linf)
    : plane_(m.plane), linf_(linf), to_std_(Collineation::identity(m.plane->field())),
      from_std_(to_std_) {
    const Plane& pl = *plane_;
    auto pts = pl.line_points(linf);

    std::uint32_t z = pl.size();
    for (std::uint32_t pi : pts) {
        if (m.w[pi] == 0) {
            z = pi;
            break;
        }
    }
    if (z == pl.size())
        throw std::invalid_argument("no weight-zero point available on the line at infinity");
    distinguished_ = z;

    std::uint32_t a = pl.size();
    for (std::uint32_t pi : pts) {
        if (pi != z) {
            a = pi;
            break;
        }
    }

    std::uint32_t o = pl.size();
    for (std::uint32_t pi = 0; pi < pl.size(); ++pi) {
        if (!pl.incident(pi, linf)) {
            o = pi;
            break;
        }
    }
    std::uint32_t zo = pl.join_idx(z, o);
    std::uint32_t ao = pl.join_idx(a, o);
    std::uint32_t u = pl.size();
    for (std::uint32_t pi = 0; pi < pl.size(); ++pi) {
        if (!pl.incident(pi, linf) && !pl.incident(pi, zo) && !pl.incident(pi, ao)) {
            u = pi;
            break;
        }
    }
    auto t = Collineation::from_frame(pl, pl.point(z), pl.point(a), pl.point(o), pl.point(u));
    if (!t) throw std::logic_error("chart frame degenerate");
    from_std_ = *t;
    to_std_ = t->inverse();
}

bool AffineChart::on_linf(std::uint32_t point) const { return plane_->incident(point, linf_); }

std::pair<Fel, Fel> AffineChart::affine_coords(std::uint32_t point) const {
    ProjPoint s = to_std_.apply(*plane_, plane_->point(point));
    if (s.c[0] != 1) throw std::invalid_argument("point lies on the line at infinity");
    return {s.c[1], s.c[2]};
}

Fel AffineChart::ideal_slope(std::uint32_t point) const {
    ProjPoint s = to_std_.apply(*plane_, plane_->point(point));
    if (s.c[0] != 0 || s.c[1] != 1)
        throw std::invalid_argument("point is affine or distinguished");
    return s.c[2];
}

std::uint32_t AffineChart::affine_point(Fel a, Fel b) const {
    ProjPoint s{Triple{1, a, b}};
    return plane_->point_index(from_std_.apply(*plane_, s));
}

std::uint32_t AffineChart::ideal_point(Fel slope) const {
    ProjPoint s{Triple{0, 1, slope}};
    return plane_->point_index(from_std_.apply(*plane_, s));
}

std::uint32_t AffineChart::slope_line(Fel slope, Fel intercept) const {
    // Y = slope X + intercept reads [intercept, slope, -1] in dual coordinates
    const Field& f = plane_->field();
    ProjLine std_line{Triple{intercept, slope, f.neg(1)}};
    return plane_->line_index(from_std_.apply(*plane_, plane_->normalize_line(std_line.c)));
}

DetectorPoly::DetectorPoly(const WeightedMultiset& m, int k, std::uint32_t linf)
    : plane_(m.plane), chart_(m, linf), k_(k) {
    const Plane& pl = *plane_;
    const int p = pl.p();
    if (k < 0 || k >= p) throw std::invalid_argument("k must be a residue in [0, p)");

    long long on_linf_weight = 0;
    for (std::uint32_t pi : pl.line_points(linf)) on_linf_weight += m.w[pi];
    if (on_linf_weight % p != k)
        throw std::invalid_argument("the line at infinity must meet the multiset in k mod p points");

    long long total = 0;
    for (std::uint32_t pi = 0; pi < pl.size(); ++pi) {
        if (m.w[pi] == 0) continue;
        total += m.w[pi];
        Fel wf = static_cast<Fel>(m.w[pi]);
        if (pl.incident(pi, linf)) {
            // the distinguished point has weight zero by chart construction
            ideal_.push_back({chart_.ideal_slope(pi), wf});
        } else {
            auto [a, b] = chart_.affine_coords(pi);
            affine_.push_back({a, b, wf});
        }
    }
    msize_ = static_cast<int>(total % p);
}

int DetectorPoly::eval(Fel x, Fel y) const {
    const Field& f = plane_->field();
    const long long e = f.q() - 1;
    Fel acc = 0;
    for (const AffineTerm& t : affine_) {
        Fel v = f.sub(f.add(x, f.mul(t.a, y)), t.b);
        acc = f.add(acc, f.mul(t.w, f.pow(v, e)));
    }
    for (const IdealTerm& t : ideal_) {
        Fel v = f.sub(y, t.y);
        acc = f.add(acc, f.mul(t.w, f.pow(v, e)));
    }
    acc = f.sub(acc, f.from_residue(msize_));
    acc = f.add(acc, f.from_residue(k_));
    return f.as_residue(acc);
}

RootCheck detector_root_check(const DetectorPoly& g, const SecantSpectrum& spec, Fel y) {
    const Field& f = g.plane().field();
    RootCheck out;
    for (Fel x = 0; x < static_cast<Fel>(f.q()); ++x)
        if (g.eval(x, y) == 0) ++out.root_count;
    // the line at infinity is a k-secant, so every non-k line through the
    // ideal point is affine and the spectrum index is exactly s
    std::uint32_t ip = g.chart().ideal_point(y);
    out.secants = static_cast<int>(spec.point_index[ip]);
    out.agree = out.root_count == f.q() - out.secants;
    return out;
}

IndexDeficiencyCheck index_deficiency_check(const WeightedMultiset& m, int k, std::uint32_t linf) {
    const Plane& pl = *m.plane;
    SecantSpectrum spec = secant_spectrum(m, k);
    if (spec.line_residue[linf] != k)
        throw std::invalid_argument("the line at infinity must meet the multiset in k mod p points");
    AffineChart chart(m, linf);

    IndexDeficiencyCheck out;
    std::vector<long long> idx;
    for (std::uint32_t pi : pl.line_points(linf)) {
        if (pi == chart.distinguished_point()) continue;
        idx.push_back(spec.point_index[pi]);
    }
    out.s = 0;
    for (long long v : idx) out.s = std::max(out.s, v);
    out.n.assign(out.s + 1, 0);
    for (long long v : idx) {
        long long h = out.s - v;
        if (h >= 1) ++out.n[h];
    }
    out.lhs = 0;
    for (long long h = 1; h <= out.s; ++h) out.lhs += h * out.n[h];
    out.rhs = out.s * (out.s - 1);
    out.holds = out.lhs <= out.rhs;
    return out;
}

IndexThresholds index_thresholds(long long q, long long delta) {
    IndexThresholds t;
    t.q = q;
    t.delta = delta;
    const Rat q1(q + 1);
    t.small_bound = Rat(delta, q + 1) + Rat(2 * delta * delta, (q + 1) * (q + 1) * (q + 1));
    t.large_bound = q1 - t.small_bound;
    t.dichotomy_hypothesis = q > 17 && Rat(delta) < Rat(3, 16) * q1 * q1;

    const long long r = isqrt_floor(q);
    t.structural_hypothesis = q > 17 && delta < (r + 1) * (q + 1 - r);
    Rat a = Rat(delta, q + 1) + Rat(2);
    t.structural_small = std::min(a, Rat(r + 1));
    t.structural_large = std::max(q1 - a, Rat(q - r));
    return t;
}

bool stability_range_ok(long long q, long long delta) {
    const long long r = isqrt_floor(q);
    return delta < (r + 1) * (q + 1 - r);
}

} // namespace pglab
