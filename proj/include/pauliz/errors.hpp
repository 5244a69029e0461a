#pragma once

#include <stdexcept>
#include <string>

namespace pauliz {

/// Input file or JSON payload violates the documented schema.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The requested error budget cannot be met (shot count or step count
/// would overflow anything addressable).
struct BudgetInfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Problem size exceeds a hard capacity limit (dense matrices, statevector).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pauliz
