#pragma once

#include <cstddef>
#include <cstdint>

#include "wreath/report.hpp"
#include "wreath/set_algebra.hpp"

namespace wreath {

struct SweepOptions {
  SliceBounds bounds{};
  /// Word-length bound for the associativity oracle (cubic in the universe).
  std::size_t assoc_maxlen = 3;
  std::size_t sn_recovery_kmax = 10;
  std::int64_t positivity_N = 8;
  std::size_t positivity_maxlen = 5;
};

/// Ring validation, the fusion-rule oracles, both lemma verifiers and the
/// averaging hypotheses for every non-unit letter of the slice alphabet.
/// Lemma items are reported as skipped on a ring with a single label.
Report verify_sweep(const BaseRing& ring, const SweepOptions& options);

}  // namespace wreath
