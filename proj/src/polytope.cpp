#include "om/polytope.hpp"

#include <algorithm>

namespace om {

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

OrientedMatroid restrict_to(const OrientedMatroid& m, const std::vector<int>& a) {
  auto s = sorted_copy(a);
  if (s.size() < 4) throw InvalidInput("restrict: |A| >= 4 required (uniform rank preserved)");
  for (int e : s)
    if (!m.ground.contains(e)) throw InvalidInput("restrict: element out of range");
  if (!m.chirotope) throw InvalidInput("restrict: chirotope cache required");
  return OrientedMatroid::from_chirotope(m.chirotope->restricted(s));
}

OrientedMatroid contract(const OrientedMatroid& m, const std::vector<int>& a) {
  auto s = sorted_copy(a);
  if (s.size() > 3) throw InvalidInput("contract: |A| <= 3 required");
  for (int e : s)
    if (!m.ground.contains(e)) throw InvalidInput("contract: element out of range");
  if (s.empty()) return m;

  const int n = m.ground.n;
  std::vector<int> rest;
  for (int e = 1; e <= n; ++e)
    if (!std::binary_search(s.begin(), s.end(), e)) rest.push_back(e);

  OrientedMatroid out;
  out.ground = GroundSet{static_cast<int>(rest.size())};
  out.rank = m.rank - static_cast<int>(s.size());
  out.cocircuits = CocircuitSet(out.ground.n);
  for (const auto& x : m.cocircuits.reps()) {
    bool zero_on_a = true;
    for (int e : s)
      if (x[e] != 0) zero_on_a = false;
    if (!zero_on_a) continue;
    SignVector y(out.ground.n);
    for (size_t i = 0; i < rest.size(); ++i) y.set(static_cast<int>(i) + 1, x[rest[i]]);
    if (!y.is_zero()) out.cocircuits.insert(y);
  }
  if (m.chirotope && out.rank >= 1) out.chirotope = m.chirotope->contracted(s);
  return out;
}

OrientedMatroid reorient(const OrientedMatroid& m, const ReorientationSet& f) {
  for (int e : f.f)
    if (!m.ground.contains(e)) throw InvalidInput("reorient: element out of range");
  OrientedMatroid out;
  out.ground = m.ground;
  out.rank = m.rank;
  out.cocircuits = CocircuitSet(m.ground.n);
  for (const auto& x : m.cocircuits.reps()) {
    SignVector y = x;
    for (int e : f.f) y.set(e, static_cast<Sign>(-y[e]));
    out.cocircuits.insert(y);
  }
  if (m.chirotope) out.chirotope = m.chirotope->reoriented(f.f);
  return out;
}

bool is_face(const OrientedMatroid& m, const std::vector<int>& f) {
  if (f.size() >= 4) return false;  // uniformity forbids larger zero sets
  if (f.empty()) return is_acyclic(m);
  return is_acyclic(contract(m, f));
}

std::vector<int> extreme_points(const OrientedMatroid& m) {
  std::vector<int> out;
  for (int e = 1; e <= m.ground.n; ++e)
    if (is_face(m, {e})) out.push_back(e);
  return out;
}

std::vector<std::vector<int>> facets(const OrientedMatroid& m) {
  if (m.rank != 4) throw InvalidInput("facets: uniform rank-4 only");
  std::vector<std::vector<int>> out;
  for (const auto& lam : sorted_tuples(m.ground.n, 3))
    if (is_face(m, lam)) out.push_back(lam);
  return out;
}

bool is_matroid_polytope(const OrientedMatroid& m) {
  for (int e = 1; e <= m.ground.n; ++e)
    if (!is_face(m, {e})) return false;
  return true;
}

std::optional<std::vector<int>> caratheodory_witness(const OrientedMatroid& m) {
  if (m.rank != 4 || m.ground.n < 5) throw InvalidInput("caratheodory_witness: rank 4, n >= 5");
  if (is_matroid_polytope(m)) return std::nullopt;
  for (const auto& q : sorted_tuples(m.ground.n, 5))
    if (!is_matroid_polytope(restrict_to(m, q))) return q;
  // Caratheodory for oriented matroids guarantees a witness
  throw Error("caratheodory_witness: no 5-subset witness found for a non-polytope");
}

FaceReport face_report(const OrientedMatroid& m) {
  FaceReport rep;
  if (is_face(m, {})) rep.faces.push_back({});
  for (int k = 1; k <= 3; ++k)
    for (const auto& f : sorted_tuples(m.ground.n, k))
      if (is_face(m, f)) rep.faces.push_back(f);
  rep.extreme_points = extreme_points(m);
  rep.facets = facets(m);
  rep.matroid_polytope = is_matroid_polytope(m);
  return rep;
}

}  // namespace om
