#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rrl/linalg.hpp"
#include "rrl/multipoly.hpp"

namespace rrl {

// Text format:
//   vars: x0 x1 ... x{n-1}
//   e0 e1 ... e{n-1} : num/den      (one line per term, descending graded-lex)
struct NamedPoly {
  std::vector<std::string> names;
  MultiPoly poly;
};

std::vector<std::string> default_var_names(std::size_t n, std::string_view prefix = "x");

std::string format_poly(const MultiPoly& p, const std::vector<std::string>& names);
std::string format_poly(const MultiPoly& p);

// Strict parser: rejects out-of-order or duplicate terms, zero coefficients
// and non-reduced fractions, so that format(parse(text)) == text.
NamedPoly parse_poly(std::string_view text);

// Zero-list format:
//   zeros: <dimension> <count>
//   q_0 q_1 ... q_{dimension-1}      (one exact point per line)
std::string format_points(const std::vector<RationalVector>& points, std::size_t dimension);
std::vector<RationalVector> parse_points(std::string_view text);

std::string read_file(const std::string& path);
// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace rrl
