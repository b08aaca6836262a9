#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pseudofuzzy/arith.hpp"
#include "pseudofuzzy/ptfn.hpp"

namespace pseudofuzzy::io {

/// Locale-independent decimal text with at most 12 significant digits.
/// Negative zero prints as "0".
std::string format_number(double value);

/// Strict real-number parse of a whole token ("nan" and "inf" accepted).
/// Throws Error{Parse} on anything else.
double parse_number(std::string_view text);

/// Parses {"a":..,"b":..,"c":..,"kind":"dependent"|"independent"}.
/// Unknown or missing fields, malformed JSON and invalid shapes all throw
/// Error{Parse}.
PseudoTfn parse_ptfn(std::string_view json_text);

std::string to_json(const PseudoTfn& p);

void write_curve(std::ostream& out, const DiscretePseudoFuzzySet& samples);
void write_cut_table(std::ostream& out, const CutTable& table);

/// Reads an "x,mu,lambda" CSV. Blank lines and lines starting with '#' are
/// skipped. Malformed text throws Error{Parse}; invalid pairs or ordering
/// throw the corresponding domain error.
DiscretePseudoFuzzySet read_curve(std::istream& in);

}  // namespace pseudofuzzy::io
