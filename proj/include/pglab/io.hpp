#pragma once

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pglab/linecode.hpp"
#include "pglab/multiset.hpp"

namespace pglab {

/// Malformed input; the message carries a line number when one applies.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Modulus wire format: comma-separated coefficients, constant term first;
/// the empty string denotes a prime field (h = 1).
std::vector<int> parse_modulus(const std::string& text);
std::string modulus_text(const std::vector<int>& mod);

/// A multiset read from a file, owning the plane it lives in.
struct LoadedMultiset {
    std::unique_ptr<Plane> plane;
    WeightedMultiset m;
    int k = 0;
};

/// A codeword read from a file, owning the plane it lives in.
struct LoadedCodeword {
    std::unique_ptr<Plane> plane;
    Codeword c;
};

/// Multiset text format: "pg-multiset v1", then "p=.. h=.. modulus=.. k=..",
/// then one row "x0 x1 x2 w" per weighted point. Coordinates are field
/// encodings and are normalized on input; duplicate rows sum mod p; weights
/// and k are reduced mod p.
LoadedMultiset read_multiset(std::istream& in);
LoadedMultiset read_multiset_file(const std::string& path);
void write_multiset(std::ostream& out, const WeightedMultiset& m, int k);
void write_multiset_file(const std::string& path, const WeightedMultiset& m, int k);

/// Codeword text format: "pg-codeword v1", then "p=.. h=.. modulus=..",
/// then sparse rows "x0 x1 x2 value" (same conventions as multisets).
LoadedCodeword read_codeword(std::istream& in);
LoadedCodeword read_codeword_file(const std::string& path);
void write_codeword(std::ostream& out, const Codeword& c);
void write_codeword_file(const std::string& path, const Codeword& c);

/// Dense rendering: one row per plane point in canonical order, zeros
/// included, for bit-exact diffs. Readable by read_codeword.
void write_codeword_dense(std::ostream& out, const Codeword& c);

} // namespace pglab
