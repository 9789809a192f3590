#pragma once

#include <optional>
#include <vector>

#include "om/cocircuits.hpp"

namespace om {

// Guard for exponential-size operations; overridable by callers.
struct Limits {
  int max_exhaustive_n = 9;
};

struct OrientedMatroid {
  GroundSet ground;
  int rank = 0;
  CocircuitSet cocircuits;
  std::optional<Chirotope> chirotope;  // cache, present for uniform rank-4 instances

  static OrientedMatroid from_chirotope(const Chirotope& chi);
};

// Closure of the cocircuits under composition, plus the zero vector.
std::vector<SignVector> covector_span(const OrientedMatroid& m, const Limits& lim = {});

// Length of a longest strictly increasing covector chain above 0.
int rank_by_chain(const OrientedMatroid& m, const Limits& lim = {});

// Composes all cocircuits with empty negative support and tests
// all-positivity.
bool is_acyclic(const OrientedMatroid& m);

}  // namespace om
