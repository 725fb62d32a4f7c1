/**
 * @file io.hpp
 * @brief Line-oriented text formats for curves, divisors and basis output.
 *
 * Grammar (UTF-8, '#' starts a comment, blank lines separate blocks):
 *
 *   [field]        one line  "p=<prime>"
 *   [curve]        one term per line "i j c"  (q = sum c * X^i Y^j)
 *   [nodal]        "lambda=<int>", "chi=<coeffs>", "u=<coeffs>",
 *                  "v=<coeffs>", "T_E=<coeffs>"; may be empty or absent for
 *                  smooth curves
 *   [divisor+] / [divisor-] / [divisor]
 *                  "lambda=<int>", "chi=<coeffs>", "u=<coeffs>", "v=<coeffs>"
 *
 * Univariate coefficient lists are space-separated ascending; "0" is the zero
 * polynomial.  Basis output files contain header comments (rng algorithm,
 * seed, sample set, retries, dimension), an [h] section and one [numerator]
 * section per basis element, all as "i j c" term lines.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rr/divisor.hpp"
#include "rr/rrspace.hpp"

namespace rr {

enum class DivisorRole { plus, minus, any };

/// Parses and fully validates a curve file: prime field,
/// Noether position, nodal block invariants cross-checked against a fresh
/// singular-locus computation (with a fixed internal seed, so parsing is
/// deterministic).  A missing/empty [nodal] section is recomputed from q and
/// must come out empty (smooth curve).  Throws ParseError / ValidationError.
Curve parse_curve_file(const std::string& path);

/// Reads the [divisor+]/[divisor-]/[divisor] section matching `role` and
/// validates it against the curve.  Throws ParseError / ValidationError.
SmoothDivisor parse_divisor_file(const std::string& path, const Curve& C,
                                 DivisorRole role);

/// Serializers (used by gen-divisor and tests; header lines are emitted
/// verbatim before the block).
std::string divisor_block_text(const SmoothDivisor& D,
                               const std::string& section);
void write_divisor_file(const std::string& path, const SmoothDivisor& D,
                        const std::string& section,
                        const std::vector<std::string>& header_comments);

std::string basis_file_text(const RRBasis& basis,
                            const std::vector<std::string>& header_comments);

std::string nodal_block_text(const NodalDivisor& N);
std::string curve_file_text(const Curve& C,
                            const std::vector<std::string>& header_comments);

}  // namespace rr
