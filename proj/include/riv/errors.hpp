#pragma once
#include <stdexcept>
#include <string>

namespace riv {

// A stated hypothesis of a theorem-level check failed (Boyd index bound,
// Muckenhoupt condition, compact support, ...).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature node produced a non-finite value; message names the node.
struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Atoms not aligned to the dyadic grid, or a stopping time not adapted.
struct AlignmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mollification sequence failed to converge.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scenario configuration rejected; carries line/column when known.
struct ConfigError : std::runtime_error {
  int line = 0, column = 0;
  ConfigError(const std::string& msg, int l = 0, int c = 0)
      : std::runtime_error(msg), line(l), column(c) {}
};

}  // namespace riv
