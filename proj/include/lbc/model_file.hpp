#pragma once

#include <map>
#include <string>
#include <string_view>

#include "lbc/formula.hpp"
#include "lbc/procmodel.hpp"

namespace lbc {

/// A loaded model file: the main process and its named contexts.
///
/// Line-oriented syntax, `#` starts a comment:
///
///     species A, B, In
///     init A = 1.0, B = 0.5
///     reaction A + B -> B @ 2.0
///     reaction A -> 0 @ 1.0
///     context Q { A = 1.0 }
///     context Inh {
///       In = 2.0
///       reaction In + A -> In @ 0.5
///     }
///
/// Every name must be declared by a `species` line before use. Inside a
/// context block, entries are separated by newlines, `,` or `;`.
struct Model {
  NetworkPtr network;
  Process initial;
  std::map<std::string, ProcessPtr, std::less<>> contexts;

  [[nodiscard]] FormulaEnv env() const;
};

Model parse_model(std::string_view text, const std::string& source = "<model>");
Model load_model(const std::string& path);

}  // namespace lbc
