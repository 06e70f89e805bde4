// Shared fixtures for the test suites: small networks and random generators.
#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "lbc/formula.hpp"
#include "lbc/procmodel.hpp"

namespace lbc::test {

/// Network over `names` with reactions given as (reactants, products, rate)
/// using species names.
struct RxSpec {
  std::vector<std::pair<std::string, unsigned>> reactants;
  std::vector<std::pair<std::string, unsigned>> products;
  double rate;
};

inline NetworkPtr network(const std::vector<std::string>& names, const std::vector<RxSpec>& rxs) {
  SpeciesIndex idx(names);
  std::vector<Reaction> reactions;
  for (const auto& r : rxs) {
    std::vector<Term> lhs;
    std::vector<Term> rhs;
    for (const auto& [n, c] : r.reactants) lhs.push_back({idx.at(n), c});
    for (const auto& [n, c] : r.products) rhs.push_back({idx.at(n), c});
    reactions.push_back(make_reaction(lhs, rhs, r.rate));
  }
  return std::make_shared<const Network>(std::move(idx), std::move(reactions));
}

/// A -> 0 @ k
inline NetworkPtr decay_network(double k = 1.0) { return network({"A"}, {{{{"A", 1}}, {}, k}}); }

inline Process decay_process(double a0 = 1.0) { return make_process(decay_network(), {{"A", a0}}); }

inline ProcessPtr context_process(const std::vector<std::pair<std::string, double>>& conc) {
  std::vector<std::string> names;
  for (const auto& [n, v] : conc) names.push_back(n);
  return std::make_shared<const Process>(make_process(network(names, {}), conc));
}

inline Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

/// Random mass-action network over up to `max_species` species named S0..,
/// with first- and second-order reactions only.
inline NetworkPtr random_network(std::mt19937_64& rng, int max_species, int max_reactions,
                                 double max_rate = 1.0) {
  std::uniform_int_distribution<int> nsp(1, max_species);
  std::uniform_int_distribution<int> nrx(0, max_reactions);
  std::uniform_real_distribution<double> rate(0.05, max_rate);
  const int n = nsp(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("S" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> side(0, 2);
  std::vector<RxSpec> rxs;
  const int m = nrx(rng);
  for (int r = 0; r < m; ++r) {
    RxSpec rx;
    const int nr = side(rng);
    const int np = side(rng);
    for (int i = 0; i < std::min(nr, 2); ++i) rx.reactants.push_back({names[pick(rng)], 1});
    for (int i = 0; i < np; ++i) rx.products.push_back({names[pick(rng)], 1});
    if (rx.reactants.empty() && rx.products.empty()) rx.reactants.push_back({names[pick(rng)], 1});
    rx.rate = rate(rng);
    rxs.push_back(rx);
  }
  return network(names, rxs);
}

/// Random small model: a network, a start state and a few contexts. Some
/// contexts bring a species of their own with an extra reaction.
struct RandomModel {
  NetworkPtr network;
  Process initial;
  std::vector<std::pair<std::string, ProcessPtr>> contexts;
};

inline RandomModel random_model(std::mt19937_64& rng, int max_species = 3, int max_reactions = 4) {
  RandomModel m;
  m.network = random_network(rng, max_species, max_reactions);
  const auto& names = m.network->species().names();
  std::uniform_real_distribution<double> conc(0.0, 1.5);
  std::vector<std::pair<std::string, double>> init;
  for (const auto& n : names) init.push_back({n, conc(rng)});
  m.initial = make_process(m.network, init);

  std::uniform_int_distribution<int> count(1, 2);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> rate(0.1, 1.0);
  const int nctx = count(rng);
  for (int c = 0; c < nctx; ++c) {
    std::vector<std::string> cnames;
    std::vector<std::pair<std::string, double>> cconc;
    for (const auto& n : names) {
      if (coin(rng)) {
        cnames.push_back(n);
        cconc.push_back({n, conc(rng)});
      }
    }
    std::vector<RxSpec> rxs;
    if (coin(rng)) {
      cnames.push_back("K");
      cconc.push_back({"K", conc(rng)});
      if (cnames.size() > 1) rxs.push_back({{{"K", 1}, {cnames.front(), 1}}, {{"K", 1}}, rate(rng)});
    }
    m.contexts.push_back(
        {"Q" + std::to_string(c), std::make_shared<const Process>(make_process(network(cnames, rxs), cconc))});
  }
  return m;
}

/// Random formula of depth <= `depth` over the given species and contexts.
/// Windows are multiples of 0.1 inside [0, max_window]; atoms compare a
/// concentration (or, rarely, a derivative) with a constant.
struct FormulaGen {
  std::vector<std::string> species;
  std::vector<std::pair<std::string, ProcessPtr>> contexts;
  double max_window = 1.0;
  double max_const = 2.0;

  FormulaPtr atom(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> kind(0, 19);
    std::uniform_int_distribution<std::size_t> pick(0, species.size() - 1);
    std::uniform_int_distribution<int> cmp(0, 3);
    std::uniform_int_distribution<int> grid(1, static_cast<int>(max_const * 20));
    const int k = kind(rng);
    if (k == 0) return Formula::make_atom(Atom::truth(true));
    if (k == 1) return Formula::make_atom(Atom::truth(false));
    const std::string& s = species[pick(rng)];
    ValuePtr lhs = k == 2 ? ValueExpr::deriv(s) : ValueExpr::conc(s);
    const double c = k == 2 ? grid(rng) * 0.05 - max_const / 2 : grid(rng) * 0.05;
    return Formula::make_atom(Atom::compare(lhs, static_cast<CmpOp>(cmp(rng)), ValueExpr::number(c)));
  }

  TimeWindow window(std::mt19937_64& rng) const {
    std::uniform_int_distribution<int> tick(0, static_cast<int>(max_window * 10 + 0.5));
    int a = tick(rng);
    int b = tick(rng);
    if (a > b) std::swap(a, b);
    return {a * 0.1, b * 0.1};
  }

  FormulaPtr operator()(std::mt19937_64& rng, int depth) const {
    if (depth <= 1) return atom(rng);
    std::uniform_int_distribution<int> kind(0, contexts.empty() ? 7 : 9);
    switch (kind(rng)) {
      case 0: return atom(rng);
      case 1: return Formula::make_not((*this)(rng, depth - 1));
      case 2: return Formula::make_and((*this)(rng, depth - 1), (*this)(rng, depth - 1));
      case 3: return Formula::make_or((*this)(rng, depth - 1), (*this)(rng, depth - 1));
      case 4: return Formula::make_implies((*this)(rng, depth - 1), (*this)(rng, depth - 1));
      case 5: return Formula::make_until((*this)(rng, depth - 1), window(rng), (*this)(rng, depth - 1));
      case 6: return Formula::make_eventually(window(rng), (*this)(rng, depth - 1));
      case 7: return Formula::make_always(window(rng), (*this)(rng, depth - 1));
      default: {
        std::uniform_int_distribution<std::size_t> pick(0, contexts.size() - 1);
        const auto& [name, q] = contexts[pick(rng)];
        return Formula::make_context(name, q, (*this)(rng, depth - 1));
      }
    }
  }
};

}  // namespace lbc::test
