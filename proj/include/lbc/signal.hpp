#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lbc/truth.hpp"

namespace lbc {

class SignalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Endpoints closer than this are treated as the same time point.
inline constexpr double kTimeSnap = 1e-12;

/// Constant stretch [from, to) of a signal.
struct Piece {
  double from = 0.0;
  double to = 0.0;
  Truth value = Truth::False;

  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Finite-length piecewise-constant three-valued signal over [0, length),
/// stored as its minimal covering: contiguous left-closed right-open pieces,
/// no two neighbours with the same value. A Boolean signal is one without
/// Unknown pieces.
class Signal {
 public:
  Signal() = default;

  /// Canonicalising constructor. Pieces must cover [0, length) without gaps
  /// or overlaps (up to kTimeSnap); equal neighbours are merged.
  static Signal make(double length, std::vector<Piece> pieces);
  static Signal constant(double length, Truth value);

  [[nodiscard]] double length() const { return length_; }
  [[nodiscard]] const std::vector<Piece>& pieces() const { return pieces_; }
  [[nodiscard]] bool is_boolean() const;
  [[nodiscard]] bool empty() const { return pieces_.empty(); }

  /// Value at t, 0 <= t < length.
  [[nodiscard]] Truth value_at(double t) const;

  /// Canonical report form: `len=6 [0,1)=T [1,4)=? [4,6)=F`.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  double length_ = 0.0;
  std::vector<Piece> pieces_;
};

Signal negate(const Signal& s);
Signal conjoin(const Signal& a, const Signal& b, Logic logic = Logic::Kleene);
Signal disjoin(const Signal& a, const Signal& b, Logic logic = Logic::Kleene);
Signal implies(const Signal& a, const Signal& b, Logic logic = Logic::Kleene);

/// F[a,b]: back-shifts positive pieces by [m,n) -> [m-b, n-a), then the
/// uncertain ones, with True winning overlaps. Evidence past the end of the
/// signal counts as False.
Signal eventually(const Signal& s, double a, double b);

/// G[a,b] s = !F[a,b] !s.
Signal always(const Signal& s, double a, double b);

/// Splits s into unitary signals, one per maximal run of non-False pieces.
std::vector<Signal> decompose_unitary(const Signal& s);

/// s1 U[a,b] s2 via unitary decomposition: OR over units u of
/// u & F[a,b](u & s2).
Signal until(const Signal& s1, const Signal& s2, double a, double b, Logic logic = Logic::Kleene);

}  // namespace lbc
