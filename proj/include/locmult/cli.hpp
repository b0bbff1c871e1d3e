#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace locmult::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  /// A mathematical hypothesis failed, or `verify` rejected a certificate.
  kHypothesis = 1,
  kParse = 2,
  /// A resource cap was hit or every randomized trial failed.
  kResource = 3,
};

/// Line-based problem description: "keyword payload", '#' comments.
struct ProblemFile {
  std::vector<std::string> ring;
  std::optional<std::string> param;
  std::optional<std::string> ideal;
  std::optional<std::string> sub;
  std::optional<std::string> map;
  std::optional<std::string> samples;
  std::optional<std::string> element;
  /// Comments, blank lines and whitespace dropped, separators written as
  /// ", ", one line per keyword in input order. The digest hashes this.
  std::string canonical;
};

/// Throws ParseError whose position is the 1-based line number.
ProblemFile parse_problem(std::string_view text);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// args excludes the program name. Reports go to `out`, errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locmult::cli
