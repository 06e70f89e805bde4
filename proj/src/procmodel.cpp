#include "lbc/procmodel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace lbc {

SpeciesIndex::SpeciesIndex(std::vector<std::string> names) {
  for (auto& n : names) {
    if (position_.count(n) != 0) throw ModelError("duplicate species '" + n + "'");
    add(n);
  }
}

std::size_t SpeciesIndex::add(const std::string& name) {
  if (auto it = position_.find(name); it != position_.end()) return it->second;
  position_.emplace(name, names_.size());
  names_.push_back(name);
  return names_.size() - 1;
}

std::optional<std::size_t> SpeciesIndex::find(std::string_view name) const {
  auto it = position_.find(std::string(name));
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::size_t SpeciesIndex::at(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ModelError("unknown species '" + std::string(name) + "'");
}

namespace {

std::vector<Term> canonical_terms(std::vector<Term> terms) {
  std::map<std::size_t, unsigned> folded;
  for (const Term& t : terms) {
    if (t.coeff == 0) throw ModelError("stoichiometric coefficient must be positive");
    folded[t.species] += t.coeff;
  }
  std::vector<Term> out;
  out.reserve(folded.size());
  for (auto [s, c] : folded) out.push_back({s, c});
  return out;
}

std::vector<Term> remap_terms(const std::vector<Term>& terms, const std::vector<std::size_t>& map) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) out.push_back({map[t.species], t.coeff});
  return out;
}

}  // namespace

Reaction make_reaction(std::vector<Term> reactants, std::vector<Term> products, double rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) throw ModelError("reaction rate must be finite and >= 0");
  if (reactants.empty() && products.empty()) throw ModelError("reaction has no reactants or products");
  return Reaction{canonical_terms(std::move(reactants)), canonical_terms(std::move(products)), rate};
}

Network::Network(SpeciesIndex species, std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
  const auto n = species_.size();
  stoich_ = Matrix::Zero(static_cast<Eigen::Index>(reactions_.size()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < reactions_.size(); ++r) {
    const auto& rx = reactions_[r];
    for (const Term& t : rx.reactants) {
      if (t.species >= n) throw ModelError("reaction references species outside the index");
      stoich_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t.species)) -= t.coeff;
    }
    for (const Term& t : rx.products) {
      if (t.species >= n) throw ModelError("reaction references species outside the index");
      stoich_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t.species)) += t.coeff;
    }
  }
}

NetworkPtr Network::empty() {
  static const NetworkPtr kEmpty = std::make_shared<const Network>();
  return kEmpty;
}

double Network::net_change(std::size_t reaction, std::size_t species) const {
  return stoich_(static_cast<Eigen::Index>(reaction), static_cast<Eigen::Index>(species));
}

Process::Process() : network(Network::empty()), conc(Vector::Zero(0)) {}

Process::Process(NetworkPtr net, Vector c) : network(std::move(net)), conc(std::move(c)) {
  if (!network) throw ModelError("process without a network");
  if (conc.size() != static_cast<Eigen::Index>(network->dim())) {
    throw ModelError("concentration vector length does not match species count");
  }
  if (!conc.allFinite()) throw ModelError("non-finite concentration");
}

double Process::concentration(std::string_view name) const {
  if (auto i = network->species().find(name)) return conc(static_cast<Eigen::Index>(*i));
  return 0.0;
}

Process make_process(NetworkPtr net, const std::vector<std::pair<std::string, double>>& conc) {
  Vector c = Vector::Zero(static_cast<Eigen::Index>(net->dim()));
  for (const auto& [name, value] : conc) {
    c(static_cast<Eigen::Index>(net->species().at(name))) += value;
  }
  return Process(std::move(net), std::move(c));
}

Composition compose_networks(const NetworkPtr& left, const NetworkPtr& right) {
  Composition comp;
  SpeciesIndex merged = left->species();
  comp.right_to_merged.reserve(right->dim());
  for (const auto& name : right->species().names()) comp.right_to_merged.push_back(merged.add(name));

  std::vector<Reaction> reactions = left->reactions();
  const std::size_t left_count = reactions.size();
  for (const auto& rx : right->reactions()) {
    Reaction mapped = make_reaction(remap_terms(rx.reactants, comp.right_to_merged),
                                    remap_terms(rx.products, comp.right_to_merged), rx.rate);
    if (std::find(reactions.begin(), reactions.end(), mapped) == reactions.end()) {
      reactions.push_back(std::move(mapped));
    }
  }

  if (merged.size() == left->dim() && reactions.size() == left_count) {
    comp.network = left;
    comp.left_unchanged = true;
  } else {
    comp.network = std::make_shared<const Network>(std::move(merged), std::move(reactions));
  }
  return comp;
}

Vector embed(const Composition& comp, const Vector& left_state, const Vector& right_conc) {
  Vector out = Vector::Zero(static_cast<Eigen::Index>(comp.network->dim()));
  out.head(left_state.size()) = left_state;
  for (std::size_t i = 0; i < comp.right_to_merged.size(); ++i) {
    out(static_cast<Eigen::Index>(comp.right_to_merged[i])) += right_conc(static_cast<Eigen::Index>(i));
  }
  return out;
}

Process compose(const Process& p, const Process& q) {
  const Composition comp = compose_networks(p.network, q.network);
  return Process(comp.network, embed(comp, p.conc, q.conc));
}

Ball translate_ball(const Ball& ball, const Composition& comp, const Vector& q_conc) {
  return Ball{embed(comp, ball.center, q_conc), ball.radius};
}

Ball translate_ball(const Ball& ball, const NetworkPtr& ball_network, const Process& q) {
  return translate_ball(ball, compose_networks(ball_network, q.network), q.conc);
}

Matrix jacobian(const Network& net, const Vector& x) {
  const auto n = static_cast<Eigen::Index>(net.dim());
  Matrix jac = Matrix::Zero(n, n);
  const auto& reactions = net.reactions();
  for (std::size_t r = 0; r < reactions.size(); ++r) {
    const Reaction& rx = reactions[r];
    // d(flux)/dx_j = rate * c_j x_j^(c_j-1) * prod_{k != j} x_k^(c_k)
    for (std::size_t a = 0; a < rx.reactants.size(); ++a) {
      const Term& wrt = rx.reactants[a];
      double partial = rx.rate * wrt.coeff *
                       pow_int(x(static_cast<Eigen::Index>(wrt.species)), wrt.coeff - 1);
      for (std::size_t b = 0; b < rx.reactants.size(); ++b) {
        if (b == a) continue;
        const Term& t = rx.reactants[b];
        partial *= pow_int(x(static_cast<Eigen::Index>(t.species)), t.coeff);
      }
      if (partial == 0.0) continue;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double change = net.net_change(r, static_cast<std::size_t>(i));
        if (change != 0.0) jac(i, static_cast<Eigen::Index>(wrt.species)) += change * partial;
      }
    }
  }
  return jac;
}

VectorX<Interval> enclosing_box(const Ball& ball) {
  VectorX<Interval> box(ball.center.size());
  for (Eigen::Index i = 0; i < ball.center.size(); ++i) {
    const double c = ball.center(i);
    box(i) = Interval(c) + Interval(-ball.radius, ball.radius);
  }
  return box;
}

}  // namespace lbc
