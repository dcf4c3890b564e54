#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "svlie/bialgebra.hpp"
#include "svlie/classify.hpp"

namespace svlie {

/// Derivation table text: one `<basis> -> <tensor2>` entry per line, `#`
/// starts a comment, blank lines are skipped. Unlisted basis vectors map to 0.
/// The window is max(min_window, largest |index| among the keys). Errors are
/// ParseError with file line/column; a repeated key is a syntax error.
DerivationTable parse_derivation_table(std::string_view text,
                                       std::optional<HalfInt> min_window = std::nullopt);

/// Nonzero entries in canonical key order.
std::string format_derivation_table(const DerivationTable& table);

/// "a,ad,b,bd,g,gd" (six rationals). Throws ParseError.
SpecialDerivation parse_special_derivation(std::string_view csv);

/// Comma-separated rationals; an empty string gives an empty list.
std::vector<Rational> parse_rational_list(std::string_view csv);

/// An integer or "a/2". Throws ParseError.
HalfInt parse_half_int(std::string_view text);

}  // namespace svlie
