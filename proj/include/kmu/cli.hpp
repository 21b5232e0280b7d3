#pragma once

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kmu/scalar.hpp"

namespace kmu::cli {

enum ExitCode : int {
  kOk = 0,
  kInternalError = 1,
  kHypothesisFailure = 2,
  kCertificateFailure = 3,
};

struct Options {
  std::string command;  // unproject | verify | resolve | hilbert | project
  std::string file;     // path, or corpus:<name>
  std::optional<Field> field;
  bool json = false;
  std::optional<int> oracle_depth;
  bool seedless = false;
  std::set<std::string> skip;
  std::vector<std::string> eliminate;
};

struct Outcome {
  int exit_code = kOk;
  std::string output;
};

/// Run one command on a problem given as text. `label` names the input in reports.
Outcome run_text(const Options& opts, const std::string& text, const std::string& label);
/// Run one command, reading opts.file (or the embedded corpus entry).
Outcome run(const Options& opts);

/// Embedded corpus: (name, problem text), in a fixed order.
const std::vector<std::pair<std::string, std::string>>& corpus();
std::optional<std::string> corpus_text(const std::string& name);

/// Full command-line entry point.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace kmu::cli
