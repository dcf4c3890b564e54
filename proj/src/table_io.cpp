#include "svlie/table_io.hpp"

#include <sstream>

#include "svlie/error.hpp"
#include "svlie/expr.hpp"

namespace svlie {

namespace {

std::size_t code_points(std::string_view s) {
  std::size_t n = 0;
  for (char ch : s)
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
  return n;
}

// Re-anchors an error raised while parsing a slice of a larger text.
template <class F>
auto parse_slice(std::string_view whole_line, std::size_t offset, std::size_t line, F&& f) {
  try {
    return f(whole_line.substr(offset));
  } catch (const ParseError& e) {
    throw ParseError(e.kind(), line, code_points(whole_line.substr(0, offset)) + e.column(),
                     e.message());
  }
}

std::vector<std::pair<std::size_t, std::string_view>> split_commas(std::string_view s) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? s.size() : comma;
    out.emplace_back(start, s.substr(start, end - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

DerivationTable parse_derivation_table(std::string_view text, std::optional<HalfInt> min_window) {
  std::vector<std::pair<BasisVector, Tensor2>> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) {
      if (nl == std::string_view::npos) break;
      continue;
    }
    const std::size_t arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw ParseError(ParseErrorKind::Syntax, line_no, 1, "expected '<basis> -> <tensor2>'");
    }
    const BasisVector key = parse_slice(line.substr(0, arrow), 0, line_no,
                                        [](std::string_view s) { return parse_basis(s); });
    for (const auto& [k, v] : entries) {
      if (k == key) {
        throw ParseError(ParseErrorKind::Syntax, line_no, 1, "duplicate entry for " + format(key));
      }
    }
    Tensor2 image = parse_slice(line, arrow + 2, line_no,
                                [](std::string_view s) { return parse_tensor2(s); });
    entries.emplace_back(key, std::move(image));
    if (nl == std::string_view::npos) break;
  }
  HalfInt window = min_window.value_or(HalfInt{});
  for (const auto& [k, v] : entries) window = std::max(window, k.index().abs());
  DerivationTable table(window);
  for (auto& [k, v] : entries) table.set(k, std::move(v));
  return table;
}

std::string format_derivation_table(const DerivationTable& table) {
  std::ostringstream out;
  for (const auto& [k, v] : table.images()) {
    if (!v.is_zero()) out << format(k) << " -> " << format(v) << '\n';
  }
  return out.str();
}

std::vector<Rational> parse_rational_list(std::string_view csv) {
  std::vector<Rational> out;
  if (csv.find_first_not_of(" \t") == std::string_view::npos) return out;
  for (const auto& [offset, part] : split_commas(csv)) {
    out.push_back(parse_slice(csv.substr(0, offset + part.size()), offset, 1,
                              [](std::string_view s) { return parse_rational(s); }));
  }
  return out;
}

SpecialDerivation parse_special_derivation(std::string_view csv) {
  const auto values = parse_rational_list(csv);
  if (values.size() != 6) {
    throw ParseError(ParseErrorKind::Syntax, 1, 1,
                     "expected six comma-separated rationals (alpha,alpha_dag,beta,beta_dag,"
                     "gamma,gamma_dag), got " +
                         std::to_string(values.size()));
  }
  return {values[0], values[1], values[2], values[3], values[4], values[5]};
}

HalfInt parse_half_int(std::string_view text) {
  const Rational q = parse_rational(text);
  const mpz_class twice = 2 * q.get_num();
  if (q.get_den() != 1 && q.get_den() != 2) {
    throw ParseError(ParseErrorKind::MalformedRational, 1, 1,
                     "expected an integer or a half-integer, got " + q.get_str());
  }
  const mpz_class t = q.get_den() == 1 ? mpz_class(twice) : mpz_class(q.get_num());
  if (!t.fits_slong_p()) throw ParseError(ParseErrorKind::MalformedRational, 1, 1, "value too large");
  return HalfInt::from_twice(t.get_si());
}

}  // namespace svlie
