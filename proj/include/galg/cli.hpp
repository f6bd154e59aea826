#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "galg/criteria.hpp"

namespace galg {

/// A parsed input file. Either the ideal form (vars, weights, ideal) or the
/// subring form (vars are the ambient variables of the monomials).
struct AlgebraSpec {
  std::string name;
  std::string field = "GF(32003)";  // "QQ" or "GF(p)"
  std::vector<std::string> vars;
  std::vector<int> weights;  // empty: all 1
  std::string order;         // empty: grevlex
  std::vector<std::string> ideal;
  std::vector<std::string> subring;
  std::vector<std::string> names;  // variable names of the subring presentation
  bool assume_connected = false;
  bool assume_generically_gorenstein = false;

  bool operator==(const AlgebraSpec&) const = default;
};

/// Parses the line-oriented input format; errors carry source:line:column.
AlgebraSpec parse_spec(std::string_view text, const std::string& source = "<input>");
AlgebraSpec load_spec(const std::string& path);
std::string format_spec(const AlgebraSpec& spec);

/// Canonical field descriptor ("QQ" or "GF(p)") from QQ, GF(p), GF p or GFp.
std::string normalize_field(std::string_view text);

template <Field F>
QRing<F> build_ring(const AlgebraSpec& spec, const F& field);
/// Ideal-form spec presenting the ring by its reduced Groebner basis.
template <Field F>
AlgebraSpec spec_of_ring(const QRing<F>& s, const std::string& name = "");

struct RunOptions {
  std::optional<std::string> order;
  std::optional<std::string> field;
  std::optional<int> max_hochschild;
  std::string path = "A";
  bool assume_connected = false;
  bool assume_generically_gorenstein = false;
  double max_seconds = 0;
  std::size_t max_basis_size = 0;
};

enum ExitCode { exit_ok = 0, exit_input = 2, exit_resource = 3, exit_internal = 4 };

struct RunResult {
  int exit_code = exit_ok;
  nlohmann::json report;  // envelope plus payload; null payload keys for parts not computed
  std::string error;
};

extern const char* const galg_version;
const std::vector<std::string>& commands();

/// One command on one input text. Never throws for input-dependent failures.
RunResult run_command(const std::string& command, std::string_view input_text, const std::string& input_name,
                      const RunOptions& opts);
RunResult run_file(const std::string& command, const std::string& path, const RunOptions& opts);

/// Runs `command` on every *.alg file of `directory` in name order; the
/// report holds one row per file and a roll-up of the consistency checks.
RunResult corpus_run(const std::string& directory, const std::string& command, const RunOptions& opts);

/// Human-readable rendering of a report produced by run_command.
std::string render_text(const nlohmann::json& report);

}  // namespace galg
