#include "lbc/cli.hpp"

#include <map>
#include <string>

#include <CLI11.hpp>

#include "lbc/checker.hpp"
#include "lbc/model_file.hpp"
#include "lbc/report.hpp"

namespace lbc {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checker for metric temporal logic with a context modality over reaction networks",
               "ctxcheck"};
  app.require_subcommand(1);

  std::string model_path;
  std::string formula_text;
  CheckConfig cfg;
  bool absorbing_unknown = false;
  ReportFormat format = ReportFormat::Text;

  const std::map<std::string, Mode> modes{{"pointwise", Mode::Pointwise}, {"sensitive", Mode::Sensitive}};
  const std::map<std::string, ReportFormat> formats{{"text", ReportFormat::Text}, {"json", ReportFormat::Json}};

  auto* check = app.add_subcommand("check", "Check a formula against a model");
  check->add_option("model", model_path, "Model file")->required();
  check->add_option("-f,--formula", formula_text, "Formula text")->required();
  check->add_option("--rho", cfg.rho, "Time resolution")->capture_default_str();
  check->add_option("--theta", cfg.theta, "Largest ball radius for tube extrapolation")->capture_default_str();
  check->add_option("--horizon", cfg.horizon, "Bound for unbounded temporal operators")->capture_default_str();
  check->add_option("--h-max", cfg.h_max, "Largest RK4 step (default: rho)");
  check->add_option("--mode", cfg.mode, "Context checking engine")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->default_str("sensitive");
  check->add_flag("--paper-fidelity-kleene", absorbing_unknown,
                  "Unknown absorbs False in conjunction (and True in disjunction)");
  check->add_option("--output", format, "Report format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");

  auto* show = app.add_subcommand("formula", "Parse a formula and print its canonical form");
  show->add_option("model", model_path, "Model file")->required();
  show->add_option("-f,--formula", formula_text, "Formula text")->required();
  show->add_option("--horizon", cfg.horizon, "Bound for unbounded temporal operators")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    cfg.logic = absorbing_unknown ? Logic::Absorbing : Logic::Kleene;
    cfg.validate();
    const Model model = load_model(model_path);
    const FormulaPtr formula = parse_formula(formula_text, model.env(), cfg.horizon);

    if (show->parsed()) {
      out << "formula: " << to_string(*formula) << '\n'
          << "duration: " << duration(*formula) << '\n'
          << "horizon: " << horizon(*formula) << '\n';
      return 0;
    }

    Checker checker(cfg);
    const CheckReport report = checker.check(model.initial, *formula);
    out << render_report(report, format);
    return exit_code(report.verdict);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace lbc
