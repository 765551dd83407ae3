#include "pglab/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pglab {

namespace {

Json triple_json(const Triple& t) { return Json::array({t[0], t[1], t[2]}); }

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::LinesCombo: return "LinesCombo";
        case VerdictKind::DbvType: return "DbvType";
        default: return "Unclassified";
    }
}

const char* status_name(RepairStatus s) {
    switch (s) {
        case RepairStatus::success: return "success";
        case RepairStatus::guard_trip: return "guard_trip";
        default: return "no_dominant_residue";
    }
}

Json field_params_json(const Field& f) {
    Json j;
    j["p"] = f.p();
    j["h"] = f.h();
    j["q"] = f.q();
    j["modulus"] = f.modulus_string();
    return j;
}

} // namespace

Json point_json(const Plane& pl, std::uint32_t point) { return triple_json(pl.point(point).c); }

Json line_json(const Plane& pl, std::uint32_t line) { return triple_json(pl.line(line).c); }

Json sparse_codeword_json(const Codeword& c) {
    const Plane& pl = *c.plane;
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < pl.size(); ++i) {
        if (!c.v[i]) continue;
        const Triple& t = pl.point(i).c;
        rows.push_back(Json::array({t[0], t[1], t[2], c.v[i]}));
    }
    return rows;
}

Json analyze_report(const WeightedMultiset& m, int k) {
    const Plane& pl = *m.plane;
    const int p = pl.p();
    const long long q = pl.q();
    const std::uint32_t n = pl.size();
    SecantSpectrum spec = secant_spectrum(m, k);

    Json j = field_params_json(pl.field());
    j["k"] = k;
    j["total_weight"] = m.total_residue();
    j["delta"] = spec.delta;

    std::vector<long long> residue_hist(p, 0);
    for (std::uint32_t li = 0; li < n; ++li) ++residue_hist[spec.line_residue[li]];
    j["residue_histogram"] = residue_hist;

    std::map<std::uint32_t, long long> index_hist;
    for (std::uint32_t pi = 0; pi < n; ++pi) ++index_hist[spec.point_index[pi]];
    Json ih = Json::array();
    for (auto [idx, cnt] : index_hist) ih.push_back(Json::array({idx, cnt}));
    j["index_histogram"] = ih;

    IndexThresholds th = index_thresholds(q, spec.delta);
    Json jt;
    jt["small_bound"] = th.small_bound.str();
    jt["large_bound"] = th.large_bound.str();
    jt["dichotomy_hypothesis"] = th.dichotomy_hypothesis;
    jt["structural_hypothesis"] = th.structural_hypothesis;
    jt["structural_small"] = th.structural_small.str();
    jt["structural_large"] = th.structural_large.str();
    j["thresholds"] = jt;

    long long dichotomy_violations = 0;
    for (std::uint32_t pi = 0; pi < n; ++pi) {
        Rat s(spec.point_index[pi]);
        if (th.small_bound < s && s < th.large_bound) ++dichotomy_violations;
    }
    j["index_dichotomy"] = {{"hypothesis_ok", th.dichotomy_hypothesis},
                            {"violations", dichotomy_violations},
                            {"holds", dichotomy_violations == 0}};

    // qs - s(s-1) <= delta for every point on at least one k-residue line
    long long quad_violations = 0;
    for (std::uint32_t pi = 0; pi < n; ++pi) {
        long long s = spec.point_index[pi];
        if (s > q) continue;
        if (q * s - s * (s - 1) > spec.delta) ++quad_violations;
    }
    j["quadratic_bound"] = {{"violations", quad_violations}, {"holds", quad_violations == 0}};

    DeltaBoundCheck db = delta_bound_check(m, k);
    j["delta_bound"] = {{"delta", db.delta},
                        {"max_index", db.max_index},
                        {"bound", db.bound},
                        {"hypothesis_ok", db.hypothesis_ok},
                        {"holds", db.holds}};

    // deficiency inequality with every chart-admissible k-residue line at
    // infinity; the distinguished point is the first weight-zero point
    long long checked = 0, failures = 0;
    Json fail_lines = Json::array();
    for (std::uint32_t li = 0; li < n; ++li) {
        if (spec.line_residue[li] != k) continue;
        auto pts = pl.line_points(li);
        std::uint32_t distinguished = n;
        for (std::uint32_t pi : pts) {
            if (m.w[pi] == 0) {
                distinguished = pi;
                break;
            }
        }
        if (distinguished == n) continue;
        long long s = 0;
        for (std::uint32_t pi : pts)
            if (pi != distinguished) s = std::max<long long>(s, spec.point_index[pi]);
        long long lhs = 0;
        for (std::uint32_t pi : pts) {
            if (pi == distinguished) continue;
            long long h = s - spec.point_index[pi];
            if (h >= 1) lhs += h;
        }
        ++checked;
        if (lhs > s * (s - 1)) {
            ++failures;
            fail_lines.push_back(line_json(pl, li));
        }
    }
    j["deficiency_inequality"] = {{"lines_checked", checked},
                                  {"failures", failures},
                                  {"holds", failures == 0},
                                  {"failing_lines", fail_lines}};
    return j;
}

Json repair_report_json(const RepairReport& rep) {
    const Plane& pl = *rep.result.plane;
    Json j;
    j["delta0"] = rep.delta0;
    j["target"] = rep.target;
    Json steps = Json::array();
    for (const RepairStep& st : rep.steps) {
        Json js;
        js["point"] = point_json(pl, st.point);
        js["added"] = st.added;
        js["k_i"] = st.majority_residue;
        js["delta_after"] = st.delta_after;
        steps.push_back(std::move(js));
    }
    j["steps"] = std::move(steps);
    j["final_delta"] = rep.final_delta;
    j["changed_points"] = rep.changed_points;
    j["hypothesis_ok"] = rep.hypothesis_ok;
    Json v;
    v["status"] = status_name(rep.status);
    v["strong_hypothesis_ok"] = rep.strong_hypothesis_ok;
    v["pointset_consistent"] = rep.pointset_consistent;
    v["all_progress_ok"] = rep.all_progress_ok;
    v["changed_equals_target"] = rep.changed_equals_target;
    if (!rep.failure_reason.empty()) v["failure_reason"] = rep.failure_reason;
    j["verdicts"] = std::move(v);
    return j;
}

Json blocking_report_json(const Plane& pl, const BlockingSetReport& rep) {
    Json j;
    j["delta"] = rep.delta;
    j["target"] = rep.target_size;
    j["size"] = static_cast<long long>(rep.set.size());
    Json pts = Json::array();
    for (std::uint32_t pi : rep.set) pts.push_back(point_json(pl, pi));
    j["points"] = std::move(pts);
    j["blocks_all"] = rep.blocks_all;
    j["hypothesis_ok"] = rep.hypothesis_ok;
    Json idx = Json::array();
    for (auto [pi, s] : rep.per_point_index) idx.push_back(Json::array({point_json(pl, pi), s}));
    j["per_point_index"] = std::move(idx);
    return j;
}

Json classification_json(const Plane& pl, const Classification& cls) {
    Json j;
    j["verdict"] = verdict_name(cls.kind);
    if (cls.kind == VerdictKind::LinesCombo) {
        Json lines = Json::array(), coefs = Json::array();
        for (auto [li, coef] : cls.combo) {
            lines.push_back(line_json(pl, li));
            coefs.push_back(coef);
        }
        j["lines"] = std::move(lines);
        j["coefficients"] = std::move(coefs);
    } else if (cls.kind == VerdictKind::DbvType) {
        const DbvParams& dp = *cls.dbv;
        Json d;
        d["gamma"] = dp.gamma;
        d["lambdas"] = Json::array({dp.lambdas[0], dp.lambdas[1], dp.lambdas[2]});
        Json mat = Json::array();
        for (const auto& row : dp.pi.matrix()) mat.push_back(Json::array({row[0], row[1], row[2]}));
        d["pi"] = std::move(mat);
        d["variant"] = dp.variant == DbvVariant::canonical ? "canonical" : "literal";
        j["dbv_params"] = std::move(d);
    } else {
        j["reason"] = cls.reason;
    }
    j["certificate_ok"] = cls.certificate_ok;
    j["regime_flags"] = {{"weight", cls.regime.weight},
                         {"weight_in_range", cls.regime.weight_in_range},
                         {"prime_plane", cls.regime.prime_plane},
                         {"p_gt_17", cls.regime.p_gt_17}};
    return j;
}

Json census_json(const CensusReport& rep) {
    Json arr = Json::array();
    for (const CensusEntry& e : rep.entries) {
        Json je;
        je["weight"] = e.weight;
        je["verdict"] = e.verdict;
        je["count"] = e.count;
        Json ex = Json::array();
        for (const auto& row : e.example) ex.push_back(Json::array({row[0], row[1], row[2], row[3]}));
        je["example"] = std::move(ex);
        arr.push_back(std::move(je));
    }
    return arr;
}

Json plane_info_json(const Plane& pl) {
    Json j = field_params_json(pl.field());
    j["points"] = pl.size();
    j["lines"] = pl.size();
    j["points_per_line"] = pl.q() + 1;
    return j;
}

namespace {

void render(const Json& j, const std::string& key, int depth, std::ostringstream& os) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    auto scalar_inline = [](const Json& v) {
        return !v.is_structured() ||
               (v.is_array() && std::all_of(v.begin(), v.end(),
                                            [](const Json& x) { return !x.is_structured(); }));
    };
    if (j.is_object()) {
        if (!key.empty()) os << pad << key << ":\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            render(it.value(), it.key(), depth + (key.empty() ? 0 : 1), os);
    } else if (j.is_array() && !scalar_inline(j)) {
        if (!key.empty()) os << pad << key << ":\n";
        for (const Json& v : j) {
            if (v.is_structured() && !scalar_inline(v)) {
                os << pad << "  -\n";
                render(v, "", depth + 2, os);
            } else {
                os << pad << "  - " << v.dump() << "\n";
            }
        }
    } else {
        os << pad << (key.empty() ? "" : key + ": ") << j.dump() << "\n";
    }
}

} // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render(j, "", 0, os);
    return os.str();
}

} // namespace pglab
