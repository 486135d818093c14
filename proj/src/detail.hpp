#pragma once

#include "deltamat/core.hpp"

namespace deltamat::detail {

struct Trusted {
  // Wraps the output of an operation known to preserve the exchange axiom.
  // Debug builds re-check it.
  static DeltaMatroid make(SetSystem s);
  // Caller has already run the full exchange-axiom check.
  static DeltaMatroid validated(SetSystem s);
};

}  // namespace deltamat::detail
