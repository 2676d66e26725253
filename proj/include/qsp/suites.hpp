#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsp/iqsp.hpp"

namespace qsp {

struct SuiteOptions {
  int degree = 4;
  int samples = 20;
  std::uint64_t seed = 1;
  bool extended = false;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Each suite catches library errors and reports them as a failure.
SuiteResult suite_relations(const QuantumAlgebra& U, const SuiteOptions& opt);
SuiteResult suite_braid(const QuantumAlgebra& U, const SuiteOptions& opt);
SuiteResult suite_integrality(const QuantumAlgebra& U, const SuiteOptions& opt);
SuiteResult suite_jacobi(const QuantumAlgebra& U, const SuiteOptions& opt);
SuiteResult suite_grading(const QuantumAlgebra& U, const SuiteOptions& opt);
SuiteResult suite_words(const QuantumAlgebra& U, const SuiteOptions& opt);
SuiteResult suite_generators(const SatakeContext& ctx, const SuiteOptions& opt);
SuiteResult suite_diagram(const SatakeContext& ctx, const SuiteOptions& opt);
SuiteResult suite_closure(const SatakeContext& ctx, const SuiteOptions& opt);
/// Stokes checks for n = rank + 1 (type A only).
SuiteResult suite_stokes(const QuantumAlgebra& U, const SuiteOptions& opt);

/// Suite names accepted by `check --suite`, in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Another reduced word of w0 for the type of U, or empty if there is none.
std::vector<int> alternative_word(const RootData& rd);

}  // namespace qsp
