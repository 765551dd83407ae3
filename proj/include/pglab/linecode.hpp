#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "pglab/plane.hpp"

namespace pglab {

/// Vector over GF(p) indexed by the canonical point order.
struct Codeword {
    const Plane* plane = nullptr;
    std::vector<std::uint8_t> v;

    explicit Codeword(const Plane& pl) : plane(&pl), v(pl.size(), 0) {}

    int p() const { return plane->p(); }

    int weight() const {
        int w = 0;
        for (std::uint8_t x : v) w += x != 0;
        return w;
    }

    std::vector<std::uint32_t> support() const {
        std::vector<std::uint32_t> s;
        for (std::uint32_t i = 0; i < v.size(); ++i)
            if (v[i]) s.push_back(i);
        return s;
    }

    friend bool operator==(const Codeword& a, const Codeword& b) { return a.v == b.v; }
};

Codeword incidence_vector(const Plane& pl, std::uint32_t line);

/// Sum of the word's values over the points of a line, mod p. Constant
/// across lines exactly on members of the line code.
int line_sum(const Codeword& c, std::uint32_t line);

/// True when every line sum vanishes (membership in the dual code).
bool is_dual(const Codeword& c);

/// Nonzero coefficients of a line combination.
using LineCombination = std::map<std::uint32_t, int>;

/// Expresses c in terms of explicitly given lines (at most 4); absent when
/// the system is inconsistent. Distinct line vectors are independent, so the
/// coefficients are unique.
std::optional<LineCombination> decompose(const Codeword& c, std::span<const std::uint32_t> lines);

/// The code generated by the line incidence vectors over GF(p), with cached
/// echelon structures. Row reduction tracks the generating combination, so
/// membership queries return a certificate. The certificate is the canonical
/// echelon solution: unknowns are processed in canonical line order and free
/// coefficients are zero.
class LineCode {
public:
    explicit LineCode(const Plane& pl);

    const Plane& plane() const { return *pl_; }

    int rank() const;
    int dual_dim() const;  // rank of the dual = n - rank

    /// Membership with certificate; absent when c is outside the code.
    std::optional<LineCombination> membership(const Codeword& c) const;

    /// Basis of the dual code (kernel of the incidence matrix).
    const std::vector<Codeword>& dual_basis() const;

    /// Basis, in reduced echelon form over the canonical point order, of the
    /// subspace of codewords supported inside the given point set.
    std::vector<Codeword> supported_subspace(const std::vector<std::uint32_t>& pts) const;

private:
    void build() const;
    void build_dual() const;

    const Plane* pl_;
    mutable bool built_ = false;
    mutable std::vector<std::vector<std::uint8_t>> rows_;    // echelon rows, length n
    mutable std::vector<std::uint32_t> pivot_;               // pivot column per row
    mutable std::vector<std::vector<std::uint8_t>> combo_;   // line coefficients per row
    mutable bool dual_built_ = false;
    mutable std::vector<Codeword> dual_basis_;
};

} // namespace pglab
