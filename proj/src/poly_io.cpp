#include "rrl/poly_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rrl/errors.hpp"

namespace rrl {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

unsigned parse_unsigned(std::string_view s, const std::string& context) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(context + ": expected a nonnegative integer, got '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::string> default_var_names(std::size_t n, std::string_view prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

std::string format_poly(const MultiPoly& p, const std::vector<std::string>& names) {
  if (names.size() != p.var_count()) throw UsageError("variable name count mismatch");
  std::string out = "vars:";
  for (const auto& n : names) out += " " + n;
  out += "\n";
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.var_count(); ++i) {
      if (i) out += ' ';
      out += std::to_string(m[i]);
    }
    out += " : " + to_string(c) + "\n";
  }
  return out;
}

std::string format_poly(const MultiPoly& p) { return format_poly(p, default_var_names(p.var_count())); }

NamedPoly parse_poly(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw UsageError("polynomial text is empty");
  const auto head = split_ws(lines[0]);
  if (head.empty() || head[0] != "vars:" || head.size() < 2) {
    throw UsageError("polynomial text must start with 'vars: <names>'");
  }
  NamedPoly out{{}, MultiPoly(head.size() - 1)};
  for (std::size_t i = 1; i < head.size(); ++i) out.names.emplace_back(head[i]);
  const std::size_t n = out.names.size();
  MultiPoly::TermMap terms;
  const Monomial* previous = nullptr;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto toks = split_ws(lines[li]);
    if (toks.empty()) continue;
    const std::string ctx = "line " + std::to_string(li + 1);
    if (toks.size() != n + 2 || toks[n] != ":") {
      throw UsageError(ctx + ": expected " + std::to_string(n) + " exponents, ':' and a coefficient");
    }
    std::vector<unsigned> exps(n);
    for (std::size_t i = 0; i < n; ++i) exps[i] = parse_unsigned(toks[i], ctx);
    Monomial m(std::move(exps));
    Rational c = parse_rational(toks[n + 1], /*canonical_only=*/true);
    if (c == 0) throw UsageError(ctx + ": zero coefficient");
    if (toks[n + 1].find('/') == std::string_view::npos) {
      throw UsageError(ctx + ": coefficient must be written as num/den");
    }
    if (previous && !(m < *previous)) throw UsageError(ctx + ": terms out of graded-lex order");
    auto [it, inserted] = terms.emplace(std::move(m), std::move(c));
    previous = &it->first;
  }
  out.poly = MultiPoly(n, std::move(terms));
  return out;
}

std::string format_points(const std::vector<RationalVector>& points, std::size_t dimension) {
  std::string out = "zeros: " + std::to_string(dimension) + " " + std::to_string(points.size()) + "\n";
  for (const auto& p : points) {
    if (p.size() != dimension) throw UsageError("point dimension mismatch");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out += ' ';
      out += to_string(p[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<RationalVector> parse_points(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw UsageError("zero-list text is empty");
  const auto head = split_ws(lines[0]);
  if (head.size() != 3 || head[0] != "zeros:") {
    throw UsageError("zero-list text must start with 'zeros: <dimension> <count>'");
  }
  const unsigned dim = parse_unsigned(head[1], "header");
  const unsigned count = parse_unsigned(head[2], "header");
  std::vector<RationalVector> points;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto toks = split_ws(lines[li]);
    if (toks.empty()) continue;
    if (toks.size() != dim) {
      throw UsageError("line " + std::to_string(li + 1) + ": expected " + std::to_string(dim) + " coordinates");
    }
    RationalVector p;
    for (auto t : toks) p.push_back(parse_rational(t));
    points.push_back(std::move(p));
  }
  if (points.size() != count) throw UsageError("zero-list header count does not match the number of points");
  return points;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw UsageError("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace rrl
