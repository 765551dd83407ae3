#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pglab {

/// Field element, encoded as an integer in [0, q). The base-p digits of the
/// encoding, least significant first, are the coefficients of the element in
/// the polynomial basis 1, x, x^2, ...
using Fel = std::uint32_t;

/// GF(p^h) with a fixed monic irreducible modulus of degree h.
///
/// For q <= 256 full add/mul/inv tables are precomputed; above that all
/// operations are computed on the fly from the digit representation.
class Field {
public:
    /// Builds GF(p^h). `modulus` lists coefficients constant-term-first and
    /// must be monic irreducible of degree h; pass an empty vector to select
    /// the default modulus (the lexicographically smallest monic irreducible,
    /// coefficients compared most significant first). Ignored when h == 1.
    /// Throws std::invalid_argument on non-prime p, h < 1, or a bad modulus.
    static Field make(int p, int h, const std::vector<int>& modulus = {});

    int p() const { return p_; }
    int h() const { return h_; }
    int q() const { return q_; }

    Fel add(Fel a, Fel b) const;
    Fel sub(Fel a, Fel b) const;
    Fel neg(Fel a) const;
    Fel mul(Fel a, Fel b) const;

    /// Multiplicative inverse; throws std::domain_error on 0.
    Fel inv(Fel a) const;

    /// a^n with pow(0,0) = 1. Negative n requires a != 0
    /// (throws std::domain_error otherwise).
    Fel pow(Fel a, long long n) const;

    /// Embeds an integer residue into the prime subfield (reduces mod p,
    /// negative values allowed).
    Fel from_residue(long long r) const;

    /// True when the element lies in the prime subfield {0,...,p-1}.
    bool in_prime_subfield(Fel a) const { return a < static_cast<Fel>(p_); }

    /// The residue of a prime-subfield element; throws std::domain_error if
    /// the element is outside the prime subfield.
    int as_residue(Fel a) const;

    std::vector<int> digits(Fel a) const;
    Fel from_digits(const std::vector<int>& d) const;

    /// Modulus coefficients, constant term first (size h+1, monic).
    /// Empty for h == 1.
    const std::vector<int>& modulus() const { return modulus_; }

    /// Wire form of the modulus: comma-separated coefficients, constant term
    /// first ("1,0,1" for x^2+1). Empty string for h == 1.
    std::string modulus_string() const;

    static bool is_prime(int n);

private:
    Field() = default;

    Fel add_raw(Fel a, Fel b) const;
    Fel mul_raw(Fel a, Fel b) const;
    void build_tables();

    int p_ = 0;
    int h_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;   // constant-first, empty when h == 1
    bool tables_ = false;
    std::vector<std::uint16_t> add_tab_;
    std::vector<std::uint16_t> mul_tab_;
    std::vector<std::uint16_t> inv_tab_;
};

} // namespace pglab
