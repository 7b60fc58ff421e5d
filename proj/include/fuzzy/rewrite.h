#pragma once

#include <cstdint>
#include <optional>

#include "fuzzy/free_element.h"
#include "fuzzy/normal_form.h"

namespace fuzzy {

/// Which redex the rewriting engine fires next.
enum class RedexChoice { Leftmost, Random };

struct RewriteOptions {
  RedexChoice choice = RedexChoice::Leftmost;
  std::uint64_t seed = 0;
  /// Abort with StepLimit once this many rule applications have fired.
  std::optional<std::uint64_t> step_limit;
};

struct RewriteResult {
  NormalForm normal_form;
  std::uint64_t steps = 0;
};

/// Reduces f by the rewrite rules of the quotient on ladder words
///   z J+      -> J+ z + k J+
///   J- z      -> z J- + k J-
///   J- J+     -> u - k z - z^2
///   J+ z^b J- -> (u + k z - z^2)(z - k)^b     (b >= 0)
/// until every word is J+^a z^b or z^b J-^c. Cartesian input is first
/// rewritten through to_ladder. Terms are expanded one at a time with no
/// sharing between branches; the step count is the number of rule firings.
RewriteResult normalize_counted(const FreeElement& f, const RewriteOptions& options = {});

inline NormalForm normalize(const FreeElement& f) { return normalize_counted(f).normal_form; }

}  // namespace fuzzy
