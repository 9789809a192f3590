#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "om/types.hpp"

namespace om {

std::uint64_t binom(int n, int k);

// Rank of a strictly increasing r-tuple over 1..n in lexicographic order.
std::uint64_t tuple_rank(int n, const std::vector<int>& sorted_tuple);

// Enumerate all sorted r-subsets of 1..n in lexicographic order.
std::vector<std::vector<int>> sorted_tuples(int n, int r);

// Lexicographic single-element extension: signed priority list of existing
// elements. Four distinct base elements guarantee the new point avoids every
// curve (each triple omits at least one term).
struct LexExtension {
  std::vector<std::pair<int, Sign>> terms;  // (element, sign), pairwise distinct
};

// Alternating sign function on r-tuples; canonical store on sorted tuples in
// lexicographic order.
class Chirotope {
 public:
  Chirotope() = default;
  Chirotope(int n, int r, std::vector<Sign> values);

  int n() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Sign>& values() const { return vals_; }

  // Lookup on an arbitrary tuple: sorts and applies the permutation sign,
  // returns 0 on repeated indices.
  Sign at(const std::vector<int>& tuple) const;
  Sign at4(int a, int b, int c, int d) const;  // rank-4 convenience

  Sign value_sorted(const std::vector<int>& sorted_tuple) const;
  void set_sorted(const std::vector<int>& sorted_tuple, Sign v);

  bool uniform() const;
  Chirotope negated() const;

  // chi_{-F}(t) = chi(t) * (-1)^{|t cap F|}.
  Chirotope reoriented(const std::vector<int>& f) const;

  // Sub-chirotope on tuples from A (|A| >= 4); elements relabeled 1..|A|
  // preserving order.
  Chirotope restricted(const std::vector<int>& a) const;

  // chi/A(mu) = chi(A, mu); rank drops by |A|. Elements relabeled 1..n-|A|.
  Chirotope contracted(const std::vector<int>& a) const;

  std::string sign_string() const;

  friend bool operator==(const Chirotope& a, const Chirotope& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.vals_ == b.vals_;
  }

 private:
  int n_ = 0, r_ = 0;
  std::vector<Sign> vals_;
};

// chi' on E u {q}, q = n+1: chi'(lam, q) = eps_i * chi(lam, a_i) for the first
// term (a_i, eps_i) with chi(lam, a_i) != 0.
Chirotope lex_extension(const Chirotope& chi, const LexExtension& q);

}  // namespace om
