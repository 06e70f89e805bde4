// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ball_oracle.hpp"
#include "lbc/checker.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace lbc;
using namespace lbc::test;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Criterion = std::function<Outcome()>;

FormulaEnv decay_env() {
  FormulaEnv env;
  env.species = {"A"};
  env.contexts["Q"] = context_process({{"A", 1.0}});
  return env;
}

CheckConfig config(Mode mode, double rho = 0.01, double theta = 0.05) {
  CheckConfig cfg;
  cfg.mode = mode;
  cfg.rho = rho;
  cfg.theta = theta;
  return cfg;
}

const char* name(Truth v) { return v == Truth::True ? "True" : v == Truth::False ? "False" : "unknown"; }

bool has_context(const Formula& f) {
  if (f.kind == Formula::Kind::Context) return true;
  return (f.lhs && has_context(*f.lhs)) || (f.rhs && has_context(*f.rhs));
}

Vector uniform_in_ball(std::mt19937_64& rng, const Ball& b) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector dir(b.center.size());
  for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = g(rng);
  const double r = b.radius * std::pow(u(rng), 1.0 / static_cast<double>(dir.size()));
  return b.center + r * dir.normalized();
}

Outcome combinator_oracle() {
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> tick(0, 16);
  const double length = 8.0;
  long probes = 0;
  for (int pair = 0; pair < 500; ++pair) {
    const Signal s1 = random_signal(rng, length, 10, false);
    const Signal s2 = random_signal(rng, length, 10, false);
    int a = tick(rng);
    int b = tick(rng);
    if (a > b) std::swap(a, b);
    const double lo = a * 0.25;
    const double hi = b * 0.25;
    const Signal neg = negate(s1);
    const Signal con = conjoin(s1, s2);
    const Signal ev = eventually(s2, lo, hi);
    const Signal un = until(s1, s2, lo, hi);
    for (const Signal* s : {&neg, &con, &ev, &un}) {
      if (!is_minimal(*s) || !s->is_boolean()) return {false, "non-minimal or non-Boolean output, pair " + std::to_string(pair)};
    }
    for (double t : probe_points(length, boundaries({&s1, &s2, &neg, &con, &ev, &un}, lo, hi))) {
      ++probes;
      const Truth v1 = s1.value_at(t);
      const Truth v2 = s2.value_at(t);
      bool ok = neg.value_at(t) == truth_not(v1);
      ok = ok && con.value_at(t) == truth_and(v1, v2);
      ok = ok && ev.value_at(t) == oracle_eventually(s2, lo, hi, t);
      ok = ok && un.value_at(t) == oracle_until(s1, s2, lo, hi, t);
      if (!ok) {
        std::ostringstream os;
        os << "pair " << pair << " disagrees at t=" << t << " window [" << lo << "," << hi << "]";
        return {false, os.str()};
      }
    }
  }
  return {true, "500 pairs, " + std::to_string(probes) + " probe points"};
}

Outcome until_identity() {
  std::mt19937_64 rng(1002);
  std::uniform_int_distribution<int> tick(0, 16);
  int checked = 0;
  for (bool three_valued : {false, true}) {
    for (int i = 0; i < 200; ++i) {
      const Signal s1 = random_unitary(rng, 8.0, three_valued);
      const Signal s2 = random_signal(rng, 8.0, 10, three_valued);
      int a = tick(rng);
      int b = tick(rng);
      if (a > b) std::swap(a, b);
      const double lo = a * 0.25;
      const double hi = b * 0.25;
      if (until(s1, s2, lo, hi) != conjoin(s1, eventually(conjoin(s1, s2), lo, hi))) {
        return {false, std::string(three_valued ? "three-valued" : "Boolean") + " unitary case " + std::to_string(i)};
      }
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " unitary signals (200 Boolean, 200 with a True/unknown run)"};
}

Outcome expansion_exactness() {
  const auto ex = expansion(*decay_network(), vec({1.0}), 0.1, 2.0, {0.01, 0.0});
  double worst = 0.0;
  for (const auto& s : ex) {
    const double ref = 0.1 * std::exp(-s.time);
    worst = std::max(worst, std::abs(s.delta - ref) / ref);
  }
  std::ostringstream os;
  os << ex.size() << " grid points, max relative error " << worst;
  return {ex.size() == 201 && worst <= 1e-3, os.str()};
}

Outcome closed_form() {
  const FormulaEnv env = decay_env();
  const std::vector<std::pair<std::string, Truth>> cases{
      {"F[0,1]([A]<0.5)", Truth::True}, {"G[0,1]([A]>0.3)", Truth::True}, {"G[0,1]([A]>0.4)", Truth::False}};
  std::ostringstream os;
  bool pass = true;
  for (Mode mode : {Mode::Pointwise, Mode::Sensitive}) {
    Checker checker(config(mode));
    for (const auto& [text, expected] : cases) {
      const Truth v = checker.check(decay_process(), *parse_formula(text, env, 10.0)).verdict;
      pass = pass && v == expected;
      if (mode == Mode::Sensitive) os << text << "=" << name(v) << " ";
    }
  }
  return {pass, os.str() + "(both engines)"};
}

Outcome nested_context() {
  const FormulaEnv env = decay_env();
  std::ostringstream os;
  bool pass = true;
  for (Mode mode : {Mode::Pointwise, Mode::Sensitive}) {
    Checker checker(config(mode));
    const Truth yes = checker.check(decay_process(), *parse_formula("G[0,1](Q |> F[0,1]([A]<0.8))", env, 10)).verdict;
    const Truth no = checker.check(decay_process(), *parse_formula("G[0,1](Q |> F[0,1]([A]<0.7))", env, 10)).verdict;
    pass = pass && yes == Truth::True && no == Truth::False;
    os << (mode == Mode::Pointwise ? "pointwise " : "sensitive ") << name(yes) << "/" << name(no) << " ";
  }
  return {pass, os.str() + "(thresholds 0.8/0.7)"};
}

Outcome solver_reduction() {
  const FormulaEnv env = decay_env();
  const auto f = parse_formula("G[0,1](Q |> F[0,1]([A]<0.8))", env, 10);
  Checker pointwise(config(Mode::Pointwise));
  Checker sensitive(config(Mode::Sensitive));
  const CheckReport p = pointwise.check(decay_process(), *f);
  const CheckReport s = sensitive.check(decay_process(), *f);
  std::ostringstream os;
  os << "pointwise " << p.solver_calls << " calls, sensitive " << s.solver_calls << " calls ("
     << s.tube_calls << " tubes), ratio " << static_cast<double>(s.solver_calls) / static_cast<double>(p.solver_calls);
  const bool strict = s.solver_calls < p.solver_calls && p.solver_calls >= 101;
  const bool target = 2 * s.solver_calls <= p.solver_calls;
  return {strict && target, os.str()};
}

Outcome satb_audit() {
  std::mt19937_64 rng(1007);
  std::uniform_real_distribution<double> rad(0.0, 0.05);
  int definite = 0;
  int attempts = 0;
  int temporal = 0;
  while (definite < 100 && attempts < 10000) {
    ++attempts;
    const RandomModel m = random_model(rng);
    FormulaGen gen;
    gen.species = m.network->species().names();
    gen.contexts = m.contexts;
    const FormulaPtr f = gen(rng, 4);
    Checker checker(config(Mode::Pointwise, 0.02));
    const Ball ball{m.initial.conc, rad(rng)};
    const Truth v = checker.satB(m.network, ball, *f);
    if (!is_definite(v)) continue;
    ++definite;
    temporal += duration(*f) > 0 || horizon(*f) > 0;
    for (int s = 0; s < 100; ++s) {
      const Vector x = uniform_in_ball(rng, ball);
      if (to_truth(checker.sat(Process(m.network, x), *f)) != v) {
        return {false, "disagreement on " + to_string(*f) + " (attempt " + std::to_string(attempts) + ")"};
      }
    }
  }
  return {definite == 100, std::to_string(definite) + " definite pairs (" + std::to_string(temporal) +
                               " temporal) from " + std::to_string(attempts) + " draws, 100 points each"};
}

Outcome engine_agreement() {
  int definite = 0;
  int unknown = 0;
  int agree = 0;
  std::size_t pointwise_calls = 0;
  std::size_t sensitive_calls = 0;
  std::size_t tubes = 0;
  std::string log;
  for (int i = 0; i < 100; ++i) {
    std::mt19937_64 rng(20000 + static_cast<unsigned>(i));
    const RandomModel m = random_model(rng);
    FormulaGen gen;
    gen.species = m.network->species().names();
    gen.contexts = m.contexts;
    FormulaPtr f = gen(rng, 4);
    while (!has_context(*f)) f = gen(rng, 4);
    Checker pointwise(config(Mode::Pointwise, 0.02));
    Checker sensitive(config(Mode::Sensitive, 0.02));
    const CheckReport pr = pointwise.check(m.initial, *f);
    const CheckReport sr = sensitive.check(m.initial, *f);
    const Truth p = pr.verdict;
    const Truth s = sr.verdict;
    pointwise_calls += pr.solver_calls;
    sensitive_calls += sr.solver_calls;
    tubes += sr.tube_calls;
    if (!is_definite(s)) {
      ++unknown;
      log += " [unknown: seed " + std::to_string(20000 + i) + " " + to_string(*f) + "]";
      continue;
    }
    ++definite;
    if (p == s) {
      ++agree;
    } else {
      log += " [disagree: seed " + std::to_string(20000 + i) + " " + to_string(*f) + "]";
    }
  }
  return {agree == definite, std::to_string(agree) + "/" + std::to_string(definite) + " definite verdicts agree, " +
                                 std::to_string(unknown) + " unknown; solver calls pointwise " +
                                 std::to_string(pointwise_calls) + ", sensitive " + std::to_string(sensitive_calls) +
                                 " (" + std::to_string(tubes) + " tubes)" + log};
}

Outcome rk4_convergence() {
  const auto max_err = [](double h) {
    const Trace tr = trace(decay_process(), 2.0, {0.1, h});
    double err = 0.0;
    for (std::size_t i = 0; i < tr.size(); ++i) err = std::max(err, std::abs(tr.states[i](0) - std::exp(-tr.times[i])));
    return err;
  };
  const double coarse = max_err(0.1);
  const double fine = max_err(0.05);
  std::ostringstream os;
  os << "error " << coarse << " -> " << fine << ", ratio " << coarse / fine;
  return {coarse / fine >= 12.0, os.str()};
}

Outcome bounding_balls() {
  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> count(1, 50);
  std::uniform_int_distribution<int> small(1, 10);
  std::bernoulli_distribution small_set(0.2);
  std::normal_distribution<double> g(0.0, 3.0);
  int optimum_checked = 0;
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 100000; ++trial) {
    const int d = dim(rng);
    const int n = small_set(rng) ? small(rng) : count(rng);
    std::vector<Vector> pts;
    for (int i = 0; i < n; ++i) {
      Vector p(d);
      for (int k = 0; k < d; ++k) p(k) = g(rng);
      pts.push_back(p);
    }
    const Ball b = bounding_ball(pts);
    for (const Vector& p : pts) {
      if ((p - b.center).norm() > b.radius + 1e-12) return {false, "point outside ball, trial " + std::to_string(trial)};
    }
    if (n <= 10) {
      const double lower = brute_force_optimum(pts).lower;
      ++optimum_checked;
      if (lower > 0) worst_ratio = std::max(worst_ratio, b.radius / lower);
      if (b.radius > 2.0 * lower + 1e-12) return {false, "radius above twice the optimum, trial " + std::to_string(trial)};
    }
  }
  std::ostringstream os;
  os << "100000 sets contained; " << optimum_checked << " small sets, worst radius/optimum " << worst_ratio;
  return {true, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"combinators match the semantic oracle", combinator_oracle},
      {"until equals s1 & F(s1 & s2) on unitary s1", until_identity},
      {"expansion of linear decay is exact", expansion_exactness},
      {"closed-form decay verdicts", closed_form},
      {"nested context verdicts in both engines", nested_context},
      {"sensitive engine issues fewer solver calls", solver_reduction},
      {"satB verdicts hold at sampled points", satb_audit},
      {"engines agree on a random corpus", engine_agreement},
      {"RK4 error drops at least 12x when h halves", rk4_convergence},
      {"bounding balls contain their points within 2x optimum", bounding_balls},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
