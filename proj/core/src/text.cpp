#include "tropical/text.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "tropical/error.hpp"

namespace tropical {
namespace {

inline constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 32;

enum class Tok { kNumber, kSlash, kPlus, kMinus, kStar, kCaret, kX, kInf, kEnd };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

std::string describe(const Token& t) {
  return t.kind == Tok::kEnd ? std::string("end of input")
                             : "'" + std::string(t.text) + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ == src_.size()) {
      current_ = {Tok::kEnd, start, {}};
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      current_ = {Tok::kNumber, start, src_.substr(start, pos_ - start)};
      return;
    }
    if (src_.substr(pos_, 3) == "inf") {
      pos_ += 3;
      current_ = {Tok::kInf, start, src_.substr(start, 3)};
      return;
    }
    Tok kind;
    switch (c) {
      case '/': kind = Tok::kSlash; break;
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '^': kind = Tok::kCaret; break;
      case 'x': kind = Tok::kX; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         start);
    }
    ++pos_;
    current_ = {kind, start, src_.substr(start, 1)};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_{Tok::kEnd, 0, {}};
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  PolyExpr parse_expr() {
    if (lex_.peek().kind == Tok::kEnd) throw ParseError("empty input", 0);
    PolyExpr terms;
    terms.push_back(parse_term());
    while (lex_.peek().kind == Tok::kPlus) {
      lex_.take();
      terms.push_back(parse_term());
    }
    if (lex_.peek().kind != Tok::kEnd) {
      throw ParseError("unexpected token " + describe(lex_.peek()),
                       lex_.peek().pos);
    }
    return terms;
  }

 private:
  Term parse_term() {
    Term term;
    std::optional<ExtendedRational> coeff = parse_coeff();
    bool need_x = !coeff.has_value();
    if (coeff && lex_.peek().kind == Tok::kStar) {
      lex_.take();
      need_x = true;
    }
    if (lex_.peek().kind == Tok::kX) {
      lex_.take();
      term.exponent = 1;
      if (lex_.peek().kind == Tok::kCaret) {
        lex_.take();
        term.exponent = parse_exponent();
      }
    } else if (need_x) {
      throw ParseError(
          (coeff ? "expected 'x' after '*', found "
                 : "expected a term, found ") + describe(lex_.peek()),
          lex_.peek().pos);
    }
    if (coeff) term.coeff = std::move(*coeff);
    return term;
  }

  std::optional<ExtendedRational> parse_coeff() {
    const Token first = lex_.peek();
    if (first.kind == Tok::kInf) {
      lex_.take();
      return ExtendedRational::infinity();
    }
    bool negative = false;
    if (first.kind == Tok::kMinus || first.kind == Tok::kPlus) {
      negative = first.kind == Tok::kMinus;
      lex_.take();
      if (lex_.peek().kind != Tok::kNumber) {
        throw ParseError("malformed rational: expected digits after sign",
                         lex_.peek().pos);
      }
    }
    if (lex_.peek().kind != Tok::kNumber) return std::nullopt;
    mpz_class num(std::string(lex_.take().text));
    mpz_class den = 1;
    if (lex_.peek().kind == Tok::kSlash) {
      lex_.take();
      const Token d = lex_.peek();
      if (d.kind != Tok::kNumber) {
        throw ParseError("malformed rational: expected denominator", d.pos);
      }
      lex_.take();
      den = mpz_class(std::string(d.text));
      if (den == 0) throw ParseError("malformed rational: zero denominator", d.pos);
    }
    if (negative) num = -num;
    return ExtendedRational(mpq_class(num, den));
  }

  std::uint64_t parse_exponent() {
    const Token t = lex_.peek();
    if (t.kind == Tok::kMinus) throw ParseError("negative exponent", t.pos);
    if (t.kind != Tok::kNumber) {
      throw ParseError("expected exponent, found " + describe(t), t.pos);
    }
    lex_.take();
    const mpz_class e(std::string(t.text));
    if (e > static_cast<unsigned long>(kMaxExponent)) {
      throw ParseError("exponent too large", t.pos);
    }
    return e.get_ui();
  }

  Lexer lex_;
};

std::string format_term(const ExtendedRational& c, std::size_t degree) {
  const mpq_class& q = c.value();
  std::string x;
  if (degree == 1) {
    x = "x";
  } else if (degree > 1) {
    x = "x^" + std::to_string(degree);
  }
  if (x.empty()) return q.get_str();
  if (q == 0) return x;
  if (q.get_den() == 1) return q.get_str() + x;
  return q.get_str() + " " + x;
}

}  // namespace

PolyExpr parse(std::string_view text) { return Parser(text).parse_expr(); }

TropPoly parse_poly(std::string_view text) { return normalize(parse(text)); }

std::string format(const TropPoly& f) {
  if (f.is_zero()) return "inf";
  std::string out;
  const auto coeffs = f.coeffs();
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k].is_infinite()) continue;
    if (!out.empty()) out += " + ";
    out += format_term(coeffs[k], f.low_degree() + k);
  }
  return out;
}

}  // namespace tropical
