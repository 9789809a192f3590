#include "om/matroid.hpp"

#include <algorithm>
#include <set>

namespace om {

OrientedMatroid OrientedMatroid::from_chirotope(const Chirotope& chi) {
  OrientedMatroid m;
  m.ground = GroundSet{chi.n()};
  m.rank = chi.rank();
  m.cocircuits = chirotope_to_cocircuits(chi);
  m.chirotope = chi;
  return m;
}

std::vector<SignVector> covector_span(const OrientedMatroid& m, const Limits& lim) {
  if (m.ground.n > lim.max_exhaustive_n)
    throw LimitExceeded("covector_span: n=" + std::to_string(m.ground.n) + " exceeds guard " +
                        std::to_string(lim.max_exhaustive_n));
  auto cocs = m.cocircuits.all_signed();
  std::set<SignVector> span(cocs.begin(), cocs.end());
  span.insert(SignVector(m.ground.n));
  // iterate composition rounds against the cocircuits until a fixed point;
  // every covector is X1 o (X2 o (...)), so this converges to the closure
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<SignVector> cur(span.begin(), span.end());
    for (const auto& x : cur)
      for (const auto& c : cocs) {
        SignVector z = compose(x, c);
        if (span.insert(z).second) grew = true;
      }
  }
  return {span.begin(), span.end()};
}

int rank_by_chain(const OrientedMatroid& m, const Limits& lim) {
  auto span = covector_span(m, lim);
  // order by support size; longest chain in the refinement order
  std::stable_sort(span.begin(), span.end(), [](const SignVector& a, const SignVector& b) {
    return a.zero_count() > b.zero_count();
  });
  std::vector<int> best(span.size(), 0);
  int overall = 0;
  for (size_t i = 0; i < span.size(); ++i) {
    if (span[i].is_zero()) {
      best[i] = 0;
      continue;
    }
    best[i] = 1;
    for (size_t j = 0; j < i; ++j) {
      if (span[j].is_zero() || best[j] + 1 <= best[i]) continue;
      if (span[j].zero_count() > span[i].zero_count() && covector_leq(span[j], span[i]))
        best[i] = best[j] + 1;
    }
    overall = std::max(overall, best[i]);
  }
  return overall;
}

bool is_acyclic(const OrientedMatroid& m) {
  const int n = m.ground.n;
  SignVector acc(n);
  for (const auto& r : m.cocircuits.reps()) {
    if (r.supp(-1).empty())
      acc = compose(acc, r);
    else if (r.supp(+1).empty())
      acc = compose(acc, r.negated());
  }
  for (int e = 1; e <= n; ++e)
    if (acc[e] != +1) return false;
  return true;
}

}  // namespace om
