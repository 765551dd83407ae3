#include "pglab/linecode.hpp"

#include <algorithm>
#include <stdexcept>

namespace pglab {
namespace {

// mod-p helpers on uint8 rows; p < 256 so int arithmetic is safe

inline int inv_mod(int a, int p) {
    // p prime, a != 0
    int r = 1, e = p - 2, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline void row_axpy(std::vector<std::uint8_t>& dst, const std::vector<std::uint8_t>& src, int c,
                     int p) {
    if (c == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = static_cast<std::uint8_t>((dst[i] + c * src[i]) % p);
}

inline void row_scale(std::vector<std::uint8_t>& r, int c, int p) {
    for (std::uint8_t& x : r) x = static_cast<std::uint8_t>(x * c % p);
}

} // namespace

Codeword incidence_vector(const Plane& pl, std::uint32_t line) {
    Codeword c(pl);
    for (std::uint32_t pi : pl.line_points(line)) c.v[pi] = 1;
    return c;
}

int line_sum(const Codeword& c, std::uint32_t line) {
    const Plane& pl = *c.plane;
    long long s = 0;
    for (std::uint32_t pi : pl.line_points(line)) s += c.v[pi];
    return static_cast<int>(s % pl.p());
}

bool is_dual(const Codeword& c) {
    const Plane& pl = *c.plane;
    for (std::uint32_t li = 0; li < pl.size(); ++li)
        if (line_sum(c, li) != 0) return false;
    return true;
}

std::optional<LineCombination> decompose(const Codeword& c, std::span<const std::uint32_t> lines) {
    const Plane& pl = *c.plane;
    const int p = pl.p();
    const std::size_t k = lines.size();
    if (k > 4) throw std::invalid_argument("decompose takes at most 4 lines");

    // rows (v_l1[i] ... v_lk[i] | c[i]) reduced incrementally; unknowns are
    // the k coefficients
    std::vector<std::vector<int>> piv;       // pivot rows, width k+1
    std::vector<std::size_t> piv_col;
    for (std::uint32_t i = 0; i < pl.size(); ++i) {
        std::vector<int> row(k + 1, 0);
        bool nz = false;
        for (std::size_t j = 0; j < k; ++j) {
            row[j] = pl.incident(i, lines[j]) ? 1 : 0;
            nz = nz || row[j];
        }
        row[k] = c.v[i];
        nz = nz || row[k];
        if (!nz) continue;
        for (std::size_t r = 0; r < piv.size(); ++r) {
            int f = row[piv_col[r]];
            if (f)
                for (std::size_t j = 0; j <= k; ++j) row[j] = ((row[j] - f * piv[r][j]) % p + p) % p;
        }
        std::size_t lead = k + 1;
        for (std::size_t j = 0; j < k; ++j) {
            if (row[j]) {
                lead = j;
                break;
            }
        }
        if (lead == k + 1) {
            if (row[k] != 0) return std::nullopt;  // inconsistent
            continue;
        }
        int s = inv_mod(row[lead], p);
        for (std::size_t j = 0; j <= k; ++j) row[j] = row[j] * s % p;
        piv.push_back(std::move(row));
        piv_col.push_back(lead);
    }

    // back substitution; free coefficients (dependent line sets cannot occur
    // with distinct lines, but stay safe) are zero
    std::vector<int> coeff(k, 0);
    for (std::size_t r = piv.size(); r-- > 0;) {
        long long v = piv[r][k];
        for (std::size_t j = piv_col[r] + 1; j < k; ++j) v -= static_cast<long long>(piv[r][j]) * coeff[j];
        coeff[piv_col[r]] = static_cast<int>(((v % p) + p) % p);
    }

    // safety: re-evaluate
    Codeword test(pl);
    for (std::size_t j = 0; j < k; ++j)
        for (std::uint32_t pi : pl.line_points(lines[j]))
            test.v[pi] = static_cast<std::uint8_t>((test.v[pi] + coeff[j]) % p);
    if (!(test == c)) return std::nullopt;

    LineCombination out;
    for (std::size_t j = 0; j < k; ++j)
        if (coeff[j]) out[lines[j]] = coeff[j];
    return out;
}

LineCode::LineCode(const Plane& pl) : pl_(&pl) {}

void LineCode::build() const {
    if (built_) return;
    const Plane& pl = *pl_;
    const int p = pl.p();
    const std::uint32_t n = pl.size();

    for (std::uint32_t li = 0; li < n; ++li) {
        std::vector<std::uint8_t> row(n, 0);
        for (std::uint32_t pi : pl.line_points(li)) row[pi] = 1;
        std::vector<std::uint8_t> comb(n, 0);
        comb[li] = 1;

        for (std::size_t r = 0; r < rows_.size(); ++r) {
            int f = row[pivot_[r]];
            if (f) {
                row_axpy(row, rows_[r], p - f, p);
                row_axpy(comb, combo_[r], p - f, p);
            }
        }
        std::uint32_t lead = n;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (row[j]) {
                lead = j;
                break;
            }
        }
        if (lead == n) continue;
        int s = inv_mod(row[lead], p);
        row_scale(row, s, p);
        row_scale(comb, s, p);
        rows_.push_back(std::move(row));
        pivot_.push_back(lead);
        combo_.push_back(std::move(comb));
    }
    built_ = true;
}

int LineCode::rank() const {
    build();
    return static_cast<int>(rows_.size());
}

int LineCode::dual_dim() const { return static_cast<int>(pl_->size()) - rank(); }

std::optional<LineCombination> LineCode::membership(const Codeword& c) const {
    build();
    const int p = pl_->p();
    std::vector<std::uint8_t> rem = c.v;
    std::vector<std::uint8_t> comb(pl_->size(), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        int f = rem[pivot_[r]];
        if (f) {
            // rem tracks c minus the partial combination, so the certificate
            // picks up +f of the lines behind this echelon row
            row_axpy(rem, rows_[r], p - f, p);
            row_axpy(comb, combo_[r], f, p);
        }
    }
    for (std::uint8_t x : rem)
        if (x) return std::nullopt;
    LineCombination out;
    for (std::uint32_t li = 0; li < comb.size(); ++li)
        if (comb[li]) out[li] = comb[li];
    return out;
}

void LineCode::build_dual() const {
    if (dual_built_) return;
    build();
    const Plane& pl = *pl_;
    const int p = pl.p();
    const std::uint32_t n = pl.size();

    // reduced echelon form of the row space, then read the kernel of the
    // incidence matrix off the free columns
    std::vector<std::vector<std::uint8_t>> rr = rows_;
    std::vector<std::uint32_t> pc = pivot_;
    for (std::size_t r = 0; r < rr.size(); ++r)
        for (std::size_t s = 0; s < r; ++s) {
            int f = rr[s][pc[r]];
            if (f) row_axpy(rr[s], rr[r], p - f, p);
        }

    std::vector<char> is_pivot(n, 0);
    for (std::uint32_t c : pc) is_pivot[c] = 1;
    for (std::uint32_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        Codeword b(pl);
        b.v[fc] = 1;
        for (std::size_t r = 0; r < rr.size(); ++r) {
            int f = rr[r][fc];
            if (f) b.v[pc[r]] = static_cast<std::uint8_t>((p - f) % p);
        }
        dual_basis_.push_back(std::move(b));
    }
    dual_built_ = true;
}

const std::vector<Codeword>& LineCode::dual_basis() const {
    build_dual();
    return dual_basis_;
}

std::vector<Codeword> LineCode::supported_subspace(const std::vector<std::uint32_t>& pts) const {
    build();
    const Plane& pl = *pl_;
    const int p = pl.p();
    const std::uint32_t n = pl.size();
    const std::size_t r = rows_.size();

    std::vector<char> inside(n, 0);
    for (std::uint32_t pi : pts) inside[pi] = 1;

    // kernel of the outside-columns system over combinations of echelon rows
    std::vector<std::vector<std::uint8_t>> sys;  // each row: r coefficients
    std::vector<std::size_t> sys_piv;
    for (std::uint32_t col = 0; col < n; ++col) {
        if (inside[col]) continue;
        std::vector<std::uint8_t> eq(r, 0);
        bool nz = false;
        for (std::size_t i = 0; i < r; ++i) {
            eq[i] = rows_[i][col];
            nz = nz || eq[i];
        }
        if (!nz) continue;
        for (std::size_t s = 0; s < sys.size(); ++s) {
            int f = eq[sys_piv[s]];
            if (f) row_axpy(eq, sys[s], p - f, p);
        }
        std::size_t lead = r;
        for (std::size_t i = 0; i < r; ++i) {
            if (eq[i]) {
                lead = i;
                break;
            }
        }
        if (lead == r) continue;
        int s = inv_mod(eq[lead], p);
        row_scale(eq, s, p);
        sys.push_back(std::move(eq));
        sys_piv.push_back(lead);
        if (sys.size() == r) break;  // only the zero combination survives
    }

    // reduced form of the constraint system, then free-variable kernel basis
    for (std::size_t a = 0; a < sys.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            int f = sys[b][sys_piv[a]];
            if (f) row_axpy(sys[b], sys[a], p - f, p);
        }
    std::vector<char> piv_var(r, 0);
    for (std::size_t c : sys_piv) piv_var[c] = 1;

    std::vector<Codeword> basis;
    for (std::size_t fv = 0; fv < r; ++fv) {
        if (piv_var[fv]) continue;
        std::vector<int> x(r, 0);
        x[fv] = 1;
        for (std::size_t s = 0; s < sys.size(); ++s) {
            int f = sys[s][fv];
            if (f) x[sys_piv[s]] = (p - f) % p;
        }
        Codeword b(pl);
        for (std::size_t i = 0; i < r; ++i)
            if (x[i]) row_axpy(b.v, rows_[i], x[i], p);
        basis.push_back(std::move(b));
    }

    // reduced echelon form over the canonical point order
    std::vector<Codeword> out;
    std::vector<std::uint32_t> out_piv;
    for (Codeword& b : basis) {
        for (std::size_t s = 0; s < out.size(); ++s) {
            int f = b.v[out_piv[s]];
            if (f) row_axpy(b.v, out[s].v, p - f, p);
        }
        std::uint32_t lead = n;
        for (std::uint32_t j = 0; j < n; ++j) {
            if (b.v[j]) {
                lead = j;
                break;
            }
        }
        if (lead == n) continue;
        row_scale(b.v, inv_mod(b.v[lead], p), p);
        out.push_back(std::move(b));
        out_piv.push_back(lead);
    }
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = 0; b < a; ++b) {
            int f = out[b].v[out_piv[a]];
            if (f) row_axpy(out[b].v, out[a].v, p - f, p);
        }
    // keep deterministic pivot order
    std::vector<std::size_t> order(out.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out_piv[a] < out_piv[b]; });
    std::vector<Codeword> sorted;
    sorted.reserve(out.size());
    for (std::size_t i : order) sorted.push_back(std::move(out[i]));
    return sorted;
}

} // namespace pglab
