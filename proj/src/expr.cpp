#include "svlie/expr.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <vector>

#include "svlie/error.hpp"

namespace svlie {

namespace {

enum class Tok { Number, Slash, Star, Plus, Minus, LBracket, RBracket, Gen, Tensor, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Slash: return "'/'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Gen: return "generator";
    case Tok::Tensor: return "'(x)'";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t bytes) {
    for (std::size_t k = 0; k < bytes; ++k, ++i) {
      const auto ch = static_cast<unsigned char>(s[i]);
      if (ch == '\n') {
        ++line;
        col = 1;
      } else if ((ch & 0xC0) != 0x80) {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, c = col;
    auto single = [&](Tok t) {
      out.push_back({t, std::string(1, ch), l, c});
      advance(1);
    };
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, std::string(s.substr(i, j - i)), l, c});
      advance(j - i);
    } else if (ch == 'L' || ch == 'M' || ch == 'Y') {
      single(Tok::Gen);
    } else if (ch == '/') {
      single(Tok::Slash);
    } else if (ch == '*') {
      single(Tok::Star);
    } else if (ch == '+') {
      single(Tok::Plus);
    } else if (ch == '-') {
      single(Tok::Minus);
    } else if (ch == '[') {
      single(Tok::LBracket);
    } else if (ch == ']') {
      single(Tok::RBracket);
    } else if (s.substr(i, 3) == "(x)") {
      out.push_back({Tok::Tensor, "(x)", l, c});
      advance(3);
    } else if (s.substr(i, 3) == "\xE2\x8A\x97") {  // ⊗
      out.push_back({Tok::Tensor, "(x)", l, c});
      advance(3);
    } else {
      throw ParseError(ParseErrorKind::Syntax, l, c,
                       "unexpected character '" + std::string(1, ch) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct RawTerm {
  Rational coeff;
  std::vector<BasisVector> factors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  // Returns the terms; rank is fixed by the first term unless want_rank > 0.
  std::vector<RawTerm> parse_sum(int want_rank, int& rank) {
    rank = want_rank;
    std::vector<RawTerm> terms;
    if (peek().kind == Tok::Number && peek().text == "0" && peek(1).kind == Tok::End) {
      next();
      return terms;
    }
    bool negative = false;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) negative = next().kind == Tok::Minus;
    while (true) {
      const Token& start = peek();
      RawTerm t = parse_term();
      if (negative) t.coeff = -t.coeff;
      const int r = static_cast<int>(t.factors.size());
      if (r > 3) fail(start, "at most three tensor factors are supported");
      if (rank == 0) rank = r;
      if (r != rank) {
        throw ParseError(ParseErrorKind::Syntax, start.line, start.column,
                         "term has " + std::to_string(r) + " factor(s), expected " +
                             std::to_string(rank));
      }
      terms.push_back(std::move(t));
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        negative = next().kind == Tok::Minus;
        continue;
      }
      expect(Tok::End);
      return terms;
    }
  }

  BasisVector parse_single_basis() {
    BasisVector b = parse_gen();
    expect(Tok::End);
    return b;
  }

  Rational parse_single_rational() {
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    Rational q = parse_rational_body();
    expect(Tok::End);
    return negative ? Rational(-q) : q;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const Token& t, const std::string& what,
                         ParseErrorKind kind = ParseErrorKind::Syntax) const {
    throw ParseError(kind, t.line, t.column, what);
  }

  const Token& expect(Tok kind) {
    const Token& t = peek();
    if (t.kind != kind) {
      fail(t, std::string("expected ") + describe(kind) + ", found " + describe(t.kind) +
                  (t.text.empty() ? "" : " '" + t.text + "'"));
    }
    return next();
  }

  RawTerm parse_term() {
    RawTerm t{Rational(1), {}};
    bool negative = false;
    if (peek().kind == Tok::Minus && peek(1).kind == Tok::Number) {
      next();
      negative = true;
    }
    if (peek().kind == Tok::Number) {
      t.coeff = parse_rational_body();
      if (negative) t.coeff = -t.coeff;
      expect(Tok::Star);
    } else if (negative) {
      fail(peek(), "expected number");
    }
    t.factors.push_back(parse_gen());
    while (peek().kind == Tok::Tensor) {
      next();
      t.factors.push_back(parse_gen());
    }
    return t;
  }

  Rational parse_rational_body() {
    const Token& num = peek();
    if (num.kind != Tok::Number) fail(num, "expected rational", ParseErrorKind::MalformedRational);
    next();
    mpz_class p(num.text), q(1);
    if (peek().kind == Tok::Slash) {
      next();
      const Token& den = peek();
      if (den.kind != Tok::Number) {
        fail(den, "expected denominator after '/'", ParseErrorKind::MalformedRational);
      }
      next();
      q = mpz_class(den.text);
      if (q == 0) fail(den, "zero denominator", ParseErrorKind::MalformedRational);
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  std::int64_t parse_small_int(const Token& t) {
    if (t.text.size() > 15) fail(t, "index too large");
    return std::stoll(t.text);
  }

  BasisVector parse_gen() {
    const Token& g = peek();
    if (g.kind != Tok::Gen) fail(g, std::string("expected generator, found ") + describe(g.kind));
    next();
    expect(Tok::LBracket);
    const Token& start = peek();
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    const Token& num = expect(Tok::Number);
    std::int64_t twice = 2 * parse_small_int(num);
    if (peek().kind == Tok::Slash) {
      next();
      const Token& den = expect(Tok::Number);
      if (den.text != "2") fail(den, "index denominator must be 2");
      twice /= 2;
    }
    expect(Tok::RBracket);
    if (negative) twice = -twice;
    const Kind kind = g.text == "L" ? Kind::L : g.text == "M" ? Kind::M : Kind::Y;
    const HalfInt index = HalfInt::from_twice(twice);
    if (index.is_integer() != (kind != Kind::Y)) {
      fail(start,
           g.text + (kind == Kind::Y ? " index must be half-odd (like 1/2 or -3/2), got "
                                     : " index must be an integer, got ") +
               index.str(),
           ParseErrorKind::Parity);
    }
    return BasisVector(kind, index);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <std::size_t N>
Tensor<N> build(const std::vector<RawTerm>& terms) {
  Tensor<N> out;
  for (const auto& t : terms) {
    if constexpr (N == 2) {
      out.add(TensorKey<2>{t.factors[0], t.factors[1]}, t.coeff);
    } else {
      out.add(TensorKey<3>{t.factors[0], t.factors[1], t.factors[2]}, t.coeff);
    }
  }
  return out;
}

Element build_element(const std::vector<RawTerm>& terms) {
  Element out;
  for (const auto& t : terms) out.add(t.factors[0], t.coeff);
  return out;
}

template <class Key, class KeyFormat>
std::string format_comb(const LinComb<Key>& x, KeyFormat&& key_format) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (mag != 1) out += mag.get_str() + " * ";
    out += key_format(k);
    first = false;
  }
  return out;
}

template <std::size_t N>
std::string format_key(const TensorKey<N>& k) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += " (x) ";
    s += format(k[i]);
  }
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) { return Parser(text).parse_single_rational(); }

BasisVector parse_basis(std::string_view text) { return Parser(text).parse_single_basis(); }

Element parse_element(std::string_view text) {
  int rank = 0;
  return build_element(Parser(text).parse_sum(1, rank));
}

Tensor2 parse_tensor2(std::string_view text) {
  int rank = 0;
  return build<2>(Parser(text).parse_sum(2, rank));
}

Tensor3 parse_tensor3(std::string_view text) {
  int rank = 0;
  return build<3>(Parser(text).parse_sum(3, rank));
}

AnyValue parse_any(std::string_view text) {
  int rank = 0;
  auto terms = Parser(text).parse_sum(0, rank);
  switch (rank) {
    case 2: return build<2>(terms);
    case 3: return build<3>(terms);
    default: return build_element(terms);
  }
}

std::string format(const Rational& q) { return q.get_str(); }

std::string format(const BasisVector& b) {
  return std::string(1, kind_letter(b.kind())) + "[" + b.index().str() + "]";
}

std::string format(const Element& x) {
  return format_comb(x, [](const BasisVector& b) { return format(b); });
}

std::string format(const Tensor2& t) { return format_comb(t, format_key<2>); }

std::string format(const Tensor3& t) { return format_comb(t, format_key<3>); }

std::string format(const AnyValue& v) {
  return std::visit([](const auto& x) { return format(x); }, v);
}

}  // namespace svlie
