#pragma once

#include <string_view>

namespace lbc {

/// Three-valued verdict. Unknown is the "uncertain" value produced when a
/// ball or tube straddles the satisfaction boundary.
enum class Truth { False, True, Unknown };

/// How Unknown propagates through conjunction and disjunction.
///
/// Kleene: F & ? = F, T | ? = T (strongest sound tables).
/// Absorbing: any Unknown operand makes the result Unknown.
enum class Logic { Kleene, Absorbing };

constexpr Truth to_truth(bool b) { return b ? Truth::True : Truth::False; }

constexpr bool is_definite(Truth v) { return v != Truth::Unknown; }

constexpr Truth truth_not(Truth v) {
  switch (v) {
    case Truth::True: return Truth::False;
    case Truth::False: return Truth::True;
    default: return Truth::Unknown;
  }
}

constexpr Truth truth_and(Truth a, Truth b, Logic logic = Logic::Kleene) {
  if (logic == Logic::Absorbing) {
    if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
    return to_truth(a == Truth::True && b == Truth::True);
  }
  if (a == Truth::False || b == Truth::False) return Truth::False;
  if (a == Truth::True && b == Truth::True) return Truth::True;
  return Truth::Unknown;
}

constexpr Truth truth_or(Truth a, Truth b, Logic logic = Logic::Kleene) {
  return truth_not(truth_and(truth_not(a), truth_not(b), logic));
}

constexpr Truth truth_implies(Truth a, Truth b, Logic logic = Logic::Kleene) {
  return truth_or(truth_not(a), b, logic);
}

/// Single-character code used in signal text ("T", "F", "?").
constexpr std::string_view truth_code(Truth v) {
  switch (v) {
    case Truth::True: return "T";
    case Truth::False: return "F";
    default: return "?";
  }
}

}  // namespace lbc
