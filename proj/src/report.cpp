#include "lbc/report.hpp"

#include <sstream>

#include <json.hpp>

namespace lbc {

std::string verdict_text(Truth v) {
  switch (v) {
    case Truth::True: return "True";
    case Truth::False: return "False";
    default: return "unknown";
  }
}

int exit_code(Truth v) {
  switch (v) {
    case Truth::True: return 0;
    case Truth::False: return 1;
    default: return 2;
  }
}

std::string render_report(const CheckReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json j;
    switch (report.verdict) {
      case Truth::True: j["verdict"] = "true"; break;
      case Truth::False: j["verdict"] = "false"; break;
      default: j["verdict"] = "unknown"; break;
    }
    j["signal"] = nlohmann::ordered_json::array();
    for (const auto& p : report.signal.pieces()) {
      j["signal"].push_back({{"from", p.from}, {"to", p.to}, {"value", std::string(truth_code(p.value))}});
    }
    j["solver_calls"] = report.solver_calls;
    j["tube_calls"] = report.tube_calls;
    j["wall_ms"] = report.wall_ms;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os.precision(6);
  os << "verdict: " << verdict_text(report.verdict) << '\n'
     << "signal: " << report.signal.to_string() << '\n'
     << "solver_calls: " << report.solver_calls << '\n'
     << "tube_calls: " << report.tube_calls << '\n'
     << "wall_ms: " << report.wall_ms << '\n';
  return os.str();
}

}  // namespace lbc
