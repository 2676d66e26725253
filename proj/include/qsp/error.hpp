#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsp {

enum class ErrorKind {
  NotDivisible,
  NotIntegral,
  UnsupportedType,
  NonReducedWord,
  ConfluenceFailure,
  MismatchWithLemma,
  DiagramFailure,
  RankDeficit,
  ClosureEscape,
  RewriteFailure,
  SingularPoint,
  NoConvergence,
  ConfigError,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// All failures raised by the engine carry a kind so that the CLI can emit a
/// stable machine-readable line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qsp
