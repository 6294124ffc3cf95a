#ifndef TORIC_IO_HPP
#define TORIC_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "toric/poly.hpp"

namespace toric {

/// Parses a single polynomial in the text syntax, e.g.
/// "3*x1^2*x2^-1 - 1/2 + x2^2".  nvars fixes the ambient variable count.
LaurentPoly parse_poly(const std::string& text, int nvars, std::uint64_t prime);

/// Parses a whole system, one polynomial per non-comment line ('#' comments).
/// The variable count is inferred as the maximal index used.  Lines that
/// parse to the zero polynomial are rejected.
std::vector<LaurentPoly> parse_system(const std::string& text, std::uint64_t prime);

/// Largest variable index mentioned anywhere in the text, 0 if none.
int scan_max_variable(const std::string& text);

} // namespace toric

#endif
