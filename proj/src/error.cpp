#include "qsp/error.hpp"

namespace qsp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::NonReducedWord: return "NonReducedWord";
    case ErrorKind::ConfluenceFailure: return "ConfluenceFailure";
    case ErrorKind::MismatchWithLemma: return "MismatchWithLemma";
    case ErrorKind::DiagramFailure: return "DiagramFailure";
    case ErrorKind::RankDeficit: return "RankDeficit";
    case ErrorKind::ClosureEscape: return "ClosureEscape";
    case ErrorKind::RewriteFailure: return "RewriteFailure";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qsp
