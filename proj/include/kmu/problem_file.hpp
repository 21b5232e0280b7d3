#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kmu/polynomial.hpp"

namespace kmu {

/// Syntax or semantic error in a problem file, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// Parsed `.km` file:
///
///   ring x(1), y(1), z(3);
///   field q;                      # optional: q | fp | fp:<p>
///   option mode = affine;         # mode, field, oracle_depth, var, name
///   ideal IX = x^2 - y^2;
///   ideal ID = x, y;
///
/// Comments run from '#' or '//' to the end of the line.
struct ProblemFile {
  RingPtr ring;
  std::map<std::string, std::string> options;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> ideals;  // in file order

  const std::vector<Polynomial>* ideal(const std::string& name) const;
  std::string option(const std::string& key, const std::string& fallback) const;
  friend bool operator==(const ProblemFile& a, const ProblemFile& b);
};

/// `field_override` replaces any field given in the file.
ProblemFile parse_problem(std::string_view text, const std::optional<Field>& field_override = std::nullopt);
/// Parse a single polynomial over an existing ring.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Text that parses back to an equal ProblemFile.
std::string format_problem(const ProblemFile& p);

}  // namespace kmu
