#include "gradedlc/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace gradedlc {

namespace {

struct Token {
  enum Kind { Number, X, D, E, Y, DY, Op, End } kind;
  std::string text;
  std::size_t index = 0;  // variable index or numeric value
  std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t p = 0;
  auto read_number = [&](std::size_t start) {
    std::size_t q = start;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == start) throw ParseError("expected digits at position " + std::to_string(start));
    if (q - start > 9) throw ParseError("integer too large at position " + std::to_string(start));
    std::size_t value = std::stoul(std::string(s.substr(start, q - start)));
    return std::pair{value, q};
  };
  while (p < s.size()) {
    const char c = s[p];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++p;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      auto [v, q] = read_number(p);
      out.push_back({Token::Number, std::string(s.substr(p, q - p)), v, p});
      p = q;
    } else if (c == 'X' || c == 'D' || c == 'E') {
      auto [v, q] = read_number(p + 1);
      if (v == 0) throw ParseError("variable indices start at 1 (position " + std::to_string(p) + ")");
      const auto kind = c == 'X' ? Token::X : c == 'D' ? Token::D : Token::E;
      out.push_back({kind, std::string(s.substr(p, q - p)), v, p});
      p = q;
    } else if (c == 'Y') {
      out.push_back({Token::Y, "Y", 0, p});
      ++p;
    } else if (c == 'd' && p + 1 < s.size() && s[p + 1] == 'Y') {
      out.push_back({Token::DY, "dY", 0, p});
      p += 2;
    } else if (std::string_view("+-*^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Op, std::string(1, c), 0, p});
      ++p;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' at position " + std::to_string(p));
    }
  }
  out.push_back({Token::End, "", 0, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, WeylAlgebra algebra) : tokens_(std::move(tokens)), algebra_(algebra) {}

  WeylElement parse() {
    WeylElement e = expr();
    if (peek().kind != Token::End) throw ParseError("unexpected '" + peek().text + "' at position " + std::to_string(peek().pos));
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool accept_op(char c) {
    if (peek().kind == Token::Op && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WeylElement expr() {
    WeylElement e = term();
    while (true) {
      if (accept_op('+'))
        e += term();
      else if (accept_op('-'))
        e -= term();
      else
        return e;
    }
  }

  WeylElement term() {
    WeylElement e = unary();
    while (accept_op('*')) e = e * unary();
    return e;
  }

  WeylElement unary() {
    if (accept_op('-')) return -unary();
    return power();
  }

  WeylElement power() {
    WeylElement base = atom();
    if (accept_op('^')) {
      if (peek().kind != Token::Number) throw ParseError("exponent must be a nonnegative integer at position " + std::to_string(peek().pos));
      const std::size_t n = tokens_[pos_++].index;
      if (n > 64) throw ParseError("exponent too large");
      return base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  WeylElement atom() {
    const Token t = peek();
    switch (t.kind) {
      case Token::Number:
        ++pos_;
        return WeylElement::constant(algebra_, Rational(static_cast<unsigned long>(t.index)));
      case Token::X:
        ++pos_;
        return WeylElement::x(algebra_, checked(t));
      case Token::D:
        ++pos_;
        return WeylElement::partial(algebra_, checked(t));
      case Token::E:
        ++pos_;
        return euler(algebra_, checked(t));
      case Token::Y:
        ++pos_;
        require_base(t);
        return WeylElement::y(algebra_);
      case Token::DY:
        ++pos_;
        require_base(t);
        return WeylElement::dy(algebra_);
      case Token::Op:
        if (accept_op('(')) {
          WeylElement e = expr();
          if (!accept_op(')')) throw ParseError("missing ')' at position " + std::to_string(peek().pos));
          return e;
        }
        break;
      case Token::End:
        break;
    }
    throw ParseError("expected an operand at position " + std::to_string(t.pos));
  }

  std::size_t checked(const Token& t) const {
    if (t.index > algebra_.d) throw ParseError(t.text + " exceeds the algebra's " + std::to_string(algebra_.d) + " variables");
    return t.index;
  }
  void require_base(const Token& t) const {
    if (!algebra_.with_base) throw ParseError(t.text + " needs an algebra with Y and dY");
  }

  std::vector<Token> tokens_;
  WeylAlgebra algebra_;
  std::size_t pos_ = 0;
};

std::string monomial_string(const WeylMonomial& m) {
  std::vector<std::string> parts;
  auto push = [&](const std::string& name, std::uint32_t e) {
    if (e == 0) return;
    parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
  };
  push("Y", m.y);
  push("dY", m.dy);
  for (std::size_t i = 0; i < m.x.size(); ++i) push("X" + std::to_string(i + 1), m.x[i]);
  for (std::size_t i = 0; i < m.dx.size(); ++i) push("D" + std::to_string(i + 1), m.dx[i]);
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "*" : "") + parts[k];
  return out;
}

std::uint32_t total_degree(const WeylMonomial& m) {
  std::uint32_t t = m.y + m.dy;
  for (auto e : m.x) t += e;
  for (auto e : m.dx) t += e;
  return t;
}

}  // namespace

WeylElement parse_weyl(std::string_view text, std::optional<WeylAlgebra> algebra) {
  std::vector<Token> tokens = tokenize(text);
  if (!algebra) {
    WeylAlgebra inferred{1, false};
    for (const auto& t : tokens) {
      if (t.kind == Token::X || t.kind == Token::D || t.kind == Token::E) inferred.d = std::max(inferred.d, t.index);
      if (t.kind == Token::Y || t.kind == Token::DY) inferred.with_base = true;
    }
    if (inferred.d > 16) throw ParseError("at most 16 variables are supported");
    algebra = inferred;
  }
  return Parser(std::move(tokens), *algebra).parse();
}

std::string to_string(const WeylElement& e) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<const WeylMonomial*, const Rational*>> terms;
  for (const auto& [m, c] : e.terms()) terms.emplace_back(&m, &c);
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const auto da = total_degree(*a.first), db = total_degree(*b.first);
    if (da != db) return da > db;
    return *b.first < *a.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool negative = sgn(*c) < 0;
    const Rational mag = abs(*c);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const std::string mono = monomial_string(*m);
    if (mono.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << '*' << mono;
  }
  return os.str();
}

}  // namespace gradedlc
