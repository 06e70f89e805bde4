#include "lbc/model_file.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace lbc {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string_view::npos) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

struct RawReaction {
  std::vector<std::pair<std::string, unsigned>> reactants;
  std::vector<std::pair<std::string, unsigned>> products;
  double rate = 0.0;
};

struct RawContext {
  std::string name;
  std::vector<std::pair<std::string, double>> conc;
  std::vector<RawReaction> reactions;
  int line = 0;
};

class ModelParser {
 public:
  explicit ModelParser(std::string source) : source_(std::move(source)) {}

  Model parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      std::string l = trim(raw.substr(0, raw.find('#')));
      if (l.empty()) continue;
      if (open_context_) {
        context_body(l);
      } else {
        statement(l);
      }
    }
    if (open_context_) fail("unterminated context block '" + contexts_.back().name + "'");
    return build();
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ModelError(source_ + ":" + std::to_string(line_) + ": " + msg);
  }

  static bool keyword(const std::string& l, std::string_view kw) {
    return l.size() > kw.size() && l.compare(0, kw.size(), kw) == 0 &&
           std::isspace(static_cast<unsigned char>(l[kw.size()]));
  }

  void statement(const std::string& l) {
    if (keyword(l, "species")) {
      for (const auto& name : split(l.substr(7), ",")) {
        if (!valid_name(name)) fail("invalid species name '" + name + "'");
        if (species_.contains(name)) fail("species '" + name + "' declared twice");
        species_.add(name);
      }
    } else if (keyword(l, "init")) {
      for (const auto& item : split(l.substr(4), ",;")) {
        if (!item.empty()) init_.push_back(assignment(item));
      }
    } else if (keyword(l, "reaction")) {
      reactions_.push_back(reaction(l.substr(8)));
    } else if (keyword(l, "context")) {
      context_header(l.substr(7));
    } else {
      fail("unrecognised statement '" + l + "'");
    }
  }

  void context_header(const std::string& rest) {
    const auto brace = rest.find('{');
    if (brace == std::string::npos) fail("expected '{' after context name");
    const std::string name = trim(rest.substr(0, brace));
    if (!valid_name(name)) fail("invalid context name '" + name + "'");
    for (const auto& c : contexts_) {
      if (c.name == name) fail("context '" + name + "' defined twice");
    }
    if (species_.contains(name)) fail("context '" + name + "' clashes with a species name");
    contexts_.push_back(RawContext{name, {}, {}, line_});
    open_context_ = true;
    context_body(trim(rest.substr(brace + 1)));
  }

  void context_body(const std::string& l) {
    std::string body = l;
    const auto close = body.find('}');
    if (close != std::string::npos) {
      if (!trim(body.substr(close + 1)).empty()) fail("unexpected text after '}'");
      body = body.substr(0, close);
      open_context_ = false;
    }
    for (const auto& item : split(body, ",;")) {
      if (item.empty()) continue;
      if (keyword(item, "reaction")) {
        contexts_.back().reactions.push_back(reaction(item.substr(8)));
      } else {
        contexts_.back().conc.push_back(assignment(item));
      }
    }
  }

  std::pair<std::string, double> assignment(const std::string& item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) fail("expected 'name = value', got '" + item + "'");
    const std::string name = trim(item.substr(0, eq));
    declared(name);
    const double v = number(trim(item.substr(eq + 1)));
    if (v < 0.0) fail("negative concentration for '" + name + "'");
    return {name, v};
  }

  double number(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || !std::isfinite(v)) fail("invalid number '" + s + "'");
    return v;
  }

  void declared(const std::string& name) {
    if (!species_.contains(name)) fail("undeclared species '" + name + "'");
  }

  std::vector<std::pair<std::string, unsigned>> side(const std::string& s) {
    std::vector<std::pair<std::string, unsigned>> terms;
    const std::string t = trim(s);
    if (t.empty() || t == "0" || t == "nil" || t == "∅") return terms;
    for (const auto& raw : split(t, "+")) {
      std::size_t i = 0;
      while (i < raw.size() && std::isdigit(static_cast<unsigned char>(raw[i]))) ++i;
      unsigned coeff = 1;
      if (i > 0) coeff = static_cast<unsigned>(std::strtoul(raw.substr(0, i).c_str(), nullptr, 10));
      const std::string name = trim(raw.substr(i));
      if (coeff == 0) fail("zero stoichiometric coefficient");
      if (!valid_name(name)) fail("invalid reaction term '" + raw + "'");
      declared(name);
      terms.emplace_back(name, coeff);
    }
    return terms;
  }

  RawReaction reaction(const std::string& rest) {
    const auto arrow = rest.find("->");
    const auto at = rest.rfind('@');
    if (arrow == std::string::npos) fail("expected '->' in reaction");
    if (at == std::string::npos || at < arrow) fail("expected '@ rate' in reaction");
    RawReaction r;
    r.reactants = side(rest.substr(0, arrow));
    r.products = side(rest.substr(arrow + 2, at - arrow - 2));
    r.rate = number(trim(rest.substr(at + 1)));
    if (r.rate < 0.0) fail("negative reaction rate");
    if (r.reactants.empty() && r.products.empty()) fail("reaction with no reactants or products");
    return r;
  }

  static std::vector<Term> terms(const SpeciesIndex& idx, const std::vector<std::pair<std::string, unsigned>>& raw) {
    std::vector<Term> out;
    for (const auto& [name, coeff] : raw) out.push_back({idx.at(name), coeff});
    return out;
  }

  Model build() {
    Model m;
    std::vector<Reaction> reactions;
    for (const auto& r : reactions_) {
      reactions.push_back(make_reaction(terms(species_, r.reactants), terms(species_, r.products), r.rate));
    }
    m.network = std::make_shared<const Network>(species_, std::move(reactions));
    m.initial = make_process(m.network, init_);

    for (const auto& c : contexts_) {
      // Context species follow the declaration order.
      std::vector<bool> used(species_.size(), false);
      for (const auto& [name, v] : c.conc) used[species_.at(name)] = true;
      for (const auto& r : c.reactions) {
        for (const auto& [name, k] : r.reactants) used[species_.at(name)] = true;
        for (const auto& [name, k] : r.products) used[species_.at(name)] = true;
      }
      SpeciesIndex idx;
      for (std::size_t i = 0; i < species_.size(); ++i) {
        if (used[i]) idx.add(species_.name(i));
      }
      std::vector<Reaction> extra;
      for (const auto& r : c.reactions) {
        extra.push_back(make_reaction(terms(idx, r.reactants), terms(idx, r.products), r.rate));
      }
      auto net = std::make_shared<const Network>(std::move(idx), std::move(extra));
      m.contexts.emplace(c.name, std::make_shared<const Process>(make_process(net, c.conc)));
    }
    return m;
  }

  std::string source_;
  int line_ = 0;
  bool open_context_ = false;
  SpeciesIndex species_;
  std::vector<std::pair<std::string, double>> init_;
  std::vector<RawReaction> reactions_;
  std::vector<RawContext> contexts_;
};

}  // namespace

FormulaEnv Model::env() const {
  FormulaEnv env;
  for (const auto& name : network->species().names()) env.species.insert(name);
  for (const auto& [name, q] : contexts) {
    env.contexts.emplace(name, q);
    for (const auto& s : q->network->species().names()) env.species.insert(s);
  }
  return env;
}

Model parse_model(std::string_view text, const std::string& source) {
  return ModelParser(source).parse(text);
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str(), path);
}

}  // namespace lbc
