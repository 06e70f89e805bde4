#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "lbc/interval.hpp"

namespace lbc {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered set of species names; position is the dimension in process space.
class SpeciesIndex {
 public:
  SpeciesIndex() = default;
  explicit SpeciesIndex(std::vector<std::string> names);

  /// Returns the index of `name`, adding it at the end when new.
  std::size_t add(const std::string& name);

  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
  [[nodiscard]] std::size_t at(std::string_view name) const;
  [[nodiscard]] bool contains(std::string_view name) const { return find(name).has_value(); }
  [[nodiscard]] std::size_t size() const { return names_.size(); }
  [[nodiscard]] const std::string& name(std::size_t i) const { return names_.at(i); }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const SpeciesIndex& a, const SpeciesIndex& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> position_;
};

/// One side of a reaction: `coeff` copies of species `species`.
struct Term {
  std::size_t species = 0;
  unsigned coeff = 1;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Mass-action reaction. Terms are kept sorted by species with repeated
/// species folded into a single coefficient.
struct Reaction {
  std::vector<Term> reactants;
  std::vector<Term> products;
  double rate = 0.0;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

/// Builds a canonical reaction; throws ModelError on negative rate, empty
/// reaction, or a zero coefficient.
Reaction make_reaction(std::vector<Term> reactants, std::vector<Term> products, double rate);

class Network;
using NetworkPtr = std::shared_ptr<const Network>;

/// A reaction network: the species index plus mass-action reactions over it.
class Network {
 public:
  Network() = default;
  Network(SpeciesIndex species, std::vector<Reaction> reactions);

  static NetworkPtr empty();

  [[nodiscard]] const SpeciesIndex& species() const { return species_; }
  [[nodiscard]] const std::vector<Reaction>& reactions() const { return reactions_; }
  [[nodiscard]] std::size_t dim() const { return species_.size(); }

  /// Net stoichiometric change of species i under reaction r.
  [[nodiscard]] double net_change(std::size_t reaction, std::size_t species) const;

 private:
  SpeciesIndex species_;
  std::vector<Reaction> reactions_;
  // Dense (reaction x species) net stoichiometry, cached for the field.
  Matrix stoich_;
};

/// A process: concentration c_i of every species S_i of its network.
struct Process {
  NetworkPtr network;
  Vector conc;

  Process();
  Process(NetworkPtr net, Vector c);

  /// Concentration of a species by name; absent species read as 0.
  [[nodiscard]] double concentration(std::string_view name) const;
};

/// Builds a process from (name, concentration) pairs over `net`; names must
/// be in the network's index, unlisted species start at 0.
Process make_process(NetworkPtr net,
                     const std::vector<std::pair<std::string, double>>& conc);

/// Euclidean ball in process space.
struct Ball {
  Vector center;
  double radius = 0.0;
};

/// Result of putting two networks side by side. The left network's species
/// keep their positions; species only in the right network are appended in
/// the right network's order.
struct Composition {
  NetworkPtr network;
  std::vector<std::size_t> right_to_merged;  // right index -> merged index
  bool left_unchanged = false;               // merged network is the left one
};

Composition compose_networks(const NetworkPtr& left, const NetworkPtr& right);

/// Places a left-network state into the merged space and adds the right
/// process's concentrations.
Vector embed(const Composition& comp, const Vector& left_state, const Vector& right_conc);

/// P || Q: union of species, pointwise concentration sum, union of reactions.
Process compose(const Process& p, const Process& q);

/// Ball translated by the process vector of Q; dimensions Q introduces are
/// appended exactly as in compose_networks(ball_network, Q.network).
Ball translate_ball(const Ball& ball, const NetworkPtr& ball_network, const Process& q);
Ball translate_ball(const Ball& ball, const Composition& comp, const Vector& q_conc);

/// Mass-action vector field, generic over the scalar so the same code serves
/// point evaluation (double) and range enclosure (Interval).
template <typename Derived>
VectorX<typename Derived::Scalar> vector_field(const Network& net,
                                               const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const auto n = static_cast<Eigen::Index>(net.dim());
  VectorX<Scalar> dx = VectorX<Scalar>::Constant(n, Scalar(0.0));
  const auto& reactions = net.reactions();
  for (std::size_t r = 0; r < reactions.size(); ++r) {
    const Reaction& rx = reactions[r];
    Scalar flux(rx.rate);
    for (const Term& t : rx.reactants) {
      flux = flux * pow_int(x(static_cast<Eigen::Index>(t.species)), t.coeff);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      const double change = net.net_change(r, static_cast<std::size_t>(i));
      if (change != 0.0) dx(i) = dx(i) + Scalar(change) * flux;
    }
  }
  return dx;
}

/// Analytic Jacobian of the mass-action field at x.
Matrix jacobian(const Network& net, const Vector& x);

/// Axis-aligned box [c_i - r, c_i + r] enclosing a ball.
VectorX<Interval> enclosing_box(const Ball& ball);

}  // namespace lbc
