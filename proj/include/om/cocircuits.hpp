#pragma once

#include <optional>
#include <string>
#include <vector>

#include "om/chirotope.hpp"
#include "om/types.hpp"

namespace om {

// Cocircuits stored as one canonical representative per +/- pair
// (smallest-index nonzero entry oriented +1).
class CocircuitSet {
 public:
  CocircuitSet() = default;
  explicit CocircuitSet(int n) : n_(n) {}

  int n() const { return n_; }
  void insert(const SignVector& x);
  bool contains(const SignVector& x) const;  // up to sign pairing
  const std::vector<SignVector>& reps() const { return reps_; }
  std::vector<SignVector> all_signed() const;  // reps and their negatives
  int pair_count() const { return static_cast<int>(reps_.size()); }

  friend bool operator==(const CocircuitSet& a, const CocircuitSet& b) {
    return a.n_ == b.n_ && a.reps_ == b.reps_;
  }

 private:
  int n_ = 0;
  std::vector<SignVector> reps_;  // sorted, deduplicated
};

struct AxiomViolation {
  std::string axiom;    // "C0", "C1", "C2", "C3", "C3'"
  std::string witness;  // human-readable witness pair / element
};

struct AxiomReport {
  bool c0 = true, c1 = true, c2 = true, c3 = true, c3prime = true;
  bool uniform = false;   // all zero sets of equal size
  int zero_set_size = -1; // that common size when uniform
  std::vector<AxiomViolation> violations;
  bool ok() const { return c0 && c1 && c2 && c3 && c3prime; }
};

// Verifies (C0), (C1), (C2) and (C3) (weak elimination); when all zero sets
// have equal size additionally verifies the modular axiom (C3').
AxiomReport check_cocircuit_axioms(const std::vector<SignVector>& vectors);
AxiomReport check_cocircuit_axioms(const CocircuitSet& c);

// For each sorted triple lam: X_lam(e) = chi(lam1,lam2,lam3,e), zero on lam.
CocircuitSet chirotope_to_cocircuits(const Chirotope& chi);

// Propagates chi(anchor) = +1 along basis exchanges via (B2); round trip
// against the input is verified. Throws InvalidInput on inconsistency.
Chirotope cocircuits_to_chirotope(const CocircuitSet& c, const std::vector<int>& anchor);

struct ChirotopeReport {
  bool alternation = true;     // tuple lookup alternation spot-checks
  bool table_length = true;
  bool uniform = false;
  bool valid = false;          // derived cocircuits pass the axioms
  AxiomReport axioms;
  std::string note;
};

ChirotopeReport validate_chirotope(const Chirotope& chi);

}  // namespace om
