// Recursive-descent parser for the ASCII formula syntax:
//
//   formula := imp
//   imp     := or ("=>" imp)?
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "!" unary | "F" window? unary | "G" window? unary | atomexp
//   atomexp := "(" formula ("U" window? formula)? ")" | atom | ident "|>" unary
//   window  := "[" number "," number "]"
//   atom    := "true" | "false" | val cmp val
//   val     := number | "[" ident "]" "'"? | "d[" ident "]" | val op val | "(" val ")"
//
// A leading "(" is ambiguous between a parenthesised value and a
// parenthesised formula; the parser tries the atom reading first and
// backtracks.

#include <cctype>
#include <cstdlib>
#include <limits>
#include <vector>

#include "lbc/formula.hpp"

namespace lbc {
namespace {

enum class Tok {
  Number,
  Ident,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  Prime,
  Plus,
  Minus,
  Star,
  Slash,
  Lt,
  Gt,
  Le,
  Ge,
  Not,
  And,
  Or,
  Implies,
  Context,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  double number = 0.0;
  std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
  auto push = [&](Tok k, std::size_t len) {
    out.push_back(Token{k, std::string(s.substr(i, len)), 0.0, i});
    i += len;
  };
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      char* end = nullptr;
      // strtod needs a terminated buffer; copy the tail.
      std::string tail(s.substr(i));
      const double v = std::strtod(tail.c_str(), &end);
      const auto len = static_cast<std::size_t>(end - tail.c_str());
      out.push_back(Token{Tok::Number, tail.substr(0, len), v, i});
      i += len;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      push(Tok::Ident, j - i);
      continue;
    }
    // Multi-byte operators first, including UTF-8 aliases.
    if (starts("|>")) { push(Tok::Context, 2); continue; }
    if (starts("▷")) { push(Tok::Context, 3); continue; }
    if (starts("=>")) { push(Tok::Implies, 2); continue; }
    if (starts("⇒")) { push(Tok::Implies, 3); continue; }
    if (starts("<=")) { push(Tok::Le, 2); continue; }
    if (starts("≤")) { push(Tok::Le, 3); continue; }
    if (starts(">=")) { push(Tok::Ge, 2); continue; }
    if (starts("≥")) { push(Tok::Ge, 3); continue; }
    if (starts("&&")) { push(Tok::And, 2); continue; }
    if (starts("∧")) { push(Tok::And, 3); continue; }
    if (starts("||")) { push(Tok::Or, 2); continue; }
    if (starts("∨")) { push(Tok::Or, 3); continue; }
    if (starts("¬")) { push(Tok::Not, 2); continue; }
    switch (c) {
      case '[': push(Tok::LBracket, 1); continue;
      case ']': push(Tok::RBracket, 1); continue;
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case ',': push(Tok::Comma, 1); continue;
      case '\'': push(Tok::Prime, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '-': push(Tok::Minus, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '/': push(Tok::Slash, 1); continue;
      case '<': push(Tok::Lt, 1); continue;
      case '>': push(Tok::Gt, 1); continue;
      case '!': push(Tok::Not, 1); continue;
      case '&': push(Tok::And, 1); continue;
      case '|': push(Tok::Or, 1); continue;
      default: throw FormulaError("unexpected character '" + std::string(1, s[i]) + "'", i);
    }
  }
  out.push_back(Token{Tok::End, "", 0.0, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const FormulaEnv& env, double horizon)
      : toks_(std::move(toks)), env_(env), horizon_(horizon) {}

  FormulaPtr parse() {
    FormulaPtr f = formula();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& msg) const { throw FormulaError(msg, peek().pos); }
  bool is_ident(std::string_view name, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Ident && peek(ahead).text == name;
  }

  FormulaPtr formula() { return implication(); }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (accept(Tok::Implies)) return Formula::make_implies(lhs, implication());
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (accept(Tok::Or)) lhs = Formula::make_or(lhs, conjunction());
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = unary();
    while (accept(Tok::And)) lhs = Formula::make_and(lhs, unary());
    return lhs;
  }

  FormulaPtr unary() {
    if (accept(Tok::Not)) return Formula::make_not(unary());
    // F / G are operators unless used as a context name.
    if ((is_ident("F") || is_ident("G")) && peek(1).kind != Tok::Context) {
      const bool eventually = next().text == "F";
      const TimeWindow w = optional_window();
      FormulaPtr sub = unary();
      return eventually ? Formula::make_eventually(w, sub) : Formula::make_always(w, sub);
    }
    return atom_expression();
  }

  TimeWindow optional_window() {
    if (peek().kind == Tok::LBracket && (peek(1).kind == Tok::Number || peek(1).kind == Tok::Minus)) {
      return window();
    }
    return TimeWindow{0.0, horizon_};
  }

  TimeWindow window() {
    const std::size_t at = peek().pos;
    expect(Tok::LBracket, "'['");
    const double lo = signed_number();
    expect(Tok::Comma, "','");
    const double hi = signed_number();
    expect(Tok::RBracket, "']'");
    if (lo < 0.0) throw FormulaError("negative time bound", at);
    if (lo > hi) throw FormulaError("interval lower bound exceeds upper bound", at);
    return TimeWindow{lo, hi};
  }

  double signed_number() {
    const bool negative = accept(Tok::Minus);
    if (peek().kind != Tok::Number) fail("expected number");
    const double v = next().number;
    return negative ? -v : v;
  }

  FormulaPtr atom_expression() {
    if (peek().kind == Tok::LParen) {
      const std::size_t save = pos_;
      try {
        return Formula::make_atom(atom());
      } catch (const FormulaError&) {
        pos_ = save;
      }
      expect(Tok::LParen, "'('");
      FormulaPtr lhs = formula();
      if (is_ident("U")) {
        ++pos_;
        const TimeWindow w = optional_window();
        FormulaPtr rhs = formula();
        expect(Tok::RParen, "')'");
        return Formula::make_until(lhs, w, rhs);
      }
      expect(Tok::RParen, "')'");
      return lhs;
    }
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::Context) {
      const Token name = next();
      ++pos_;
      auto it = env_.contexts.find(name.text);
      if (it == env_.contexts.end()) {
        throw FormulaError("unknown context '" + name.text + "'", name.pos);
      }
      return Formula::make_context(name.text, it->second, unary());
    }
    return Formula::make_atom(atom());
  }

  Atom atom() {
    if (is_ident("true") || is_ident("True")) {
      ++pos_;
      return Atom::truth(true);
    }
    if (is_ident("false") || is_ident("False")) {
      ++pos_;
      return Atom::truth(false);
    }
    ValuePtr lhs = value();
    CmpOp cmp{};
    switch (peek().kind) {
      case Tok::Lt: cmp = CmpOp::Lt; break;
      case Tok::Gt: cmp = CmpOp::Gt; break;
      case Tok::Le: cmp = CmpOp::Le; break;
      case Tok::Ge: cmp = CmpOp::Ge; break;
      default: fail("expected comparison operator");
    }
    ++pos_;
    return Atom::compare(lhs, cmp, value());
  }

  ValuePtr value() {
    ValuePtr lhs = term();
    for (;;) {
      if (accept(Tok::Plus)) {
        lhs = ValueExpr::binary(ArithOp::Add, lhs, term());
      } else if (accept(Tok::Minus)) {
        lhs = ValueExpr::binary(ArithOp::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ValuePtr term() {
    ValuePtr lhs = factor();
    for (;;) {
      if (accept(Tok::Star)) {
        lhs = ValueExpr::binary(ArithOp::Mul, lhs, factor());
      } else if (accept(Tok::Slash)) {
        lhs = ValueExpr::binary(ArithOp::Div, lhs, factor());
      } else {
        return lhs;
      }
    }
  }

  ValuePtr factor() {
    if (accept(Tok::Minus)) {
      if (peek().kind == Tok::Number) return ValueExpr::number(-next().number);
      return ValueExpr::binary(ArithOp::Sub, ValueExpr::number(0.0), factor());
    }
    if (peek().kind == Tok::Number) return ValueExpr::number(next().number);
    if (accept(Tok::LParen)) {
      ValuePtr v = value();
      expect(Tok::RParen, "')'");
      return v;
    }
    if (is_ident("d") && peek(1).kind == Tok::LBracket) {
      ++pos_;
      return ValueExpr::deriv(species_ref());
    }
    if (peek().kind == Tok::LBracket) {
      std::string name = species_ref();
      if (accept(Tok::Prime)) return ValueExpr::deriv(std::move(name));
      return ValueExpr::conc(std::move(name));
    }
    fail("expected value");
  }

  std::string species_ref() {
    expect(Tok::LBracket, "'['");
    if (peek().kind != Tok::Ident) fail("expected species name");
    const Token name = next();
    expect(Tok::RBracket, "']'");
    if (env_.species.find(name.text) == env_.species.end()) {
      throw FormulaError("unknown species '" + name.text + "'", name.pos);
    }
    return name.text;
  }

  std::vector<Token> toks_;
  const FormulaEnv& env_;
  double horizon_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text, const FormulaEnv& env, double horizon) {
  return Parser(lex(text), env, horizon).parse();
}

}  // namespace lbc
