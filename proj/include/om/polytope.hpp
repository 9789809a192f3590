#pragma once

#include <optional>
#include <vector>

#include "om/matroid.hpp"

namespace om {

struct ReorientationSet {
  std::vector<int> f;  // subset of the ground set
};

struct FaceReport {
  std::vector<std::vector<int>> faces;  // all faces with |F| <= 3, sorted
  std::vector<int> extreme_points;
  std::vector<std::vector<int>> facets;
  bool matroid_polytope = false;
};

// Restriction to A, |A| >= 4: computed on the chirotope (sub-tuples); the
// paper's cocircuit filter agrees for |A| >= 4 on uniform instances.
// Elements are relabeled 1..|A| preserving order.
OrientedMatroid restrict_to(const OrientedMatroid& m, const std::vector<int>& a);

// Contraction by A, |A| <= 3: cocircuits { X|_{E\A} : X0 >= A }, rank 4-|A|.
// Elements are relabeled 1..n-|A| preserving order.
OrientedMatroid contract(const OrientedMatroid& m, const std::vector<int>& a);

// Negates every cocircuit entry at e in F; involution.
OrientedMatroid reorient(const OrientedMatroid& m, const ReorientationSet& f);

// True iff M/F is acyclic. Sets of size >= 4 are never proper faces in
// uniform rank 4.
bool is_face(const OrientedMatroid& m, const std::vector<int>& f);

std::vector<int> extreme_points(const OrientedMatroid& m);

// Triples lam such that one of +/-X_lam is nonnegative.
std::vector<std::vector<int>> facets(const OrientedMatroid& m);

bool is_matroid_polytope(const OrientedMatroid& m);

// None when M is a matroid polytope; otherwise a 5-subset Q (original
// labels) with restrict_to(M,Q) not a matroid polytope.
std::optional<std::vector<int>> caratheodory_witness(const OrientedMatroid& m);

FaceReport face_report(const OrientedMatroid& m);

}  // namespace om
