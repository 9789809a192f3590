#include "om/chirotope.hpp"

#include <algorithm>

namespace om {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

std::uint64_t tuple_rank(int n, const std::vector<int>& t) {
  std::uint64_t rank = 0;
  int r = static_cast<int>(t.size());
  int prev = 0;
  for (int i = 0; i < r; ++i) {
    for (int v = prev + 1; v < t[i]; ++v) rank += binom(n - v, r - i - 1);
    prev = t[i];
  }
  return rank;
}

std::vector<std::vector<int>> sorted_tuples(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r > n || r < 0) return out;
  std::vector<int> t(r);
  for (int i = 0; i < r; ++i) t[i] = i + 1;
  while (true) {
    out.push_back(t);
    int i = r - 1;
    while (i >= 0 && t[i] == n - (r - 1 - i)) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < r; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

Chirotope::Chirotope(int n, int r, std::vector<Sign> values) : n_(n), r_(r), vals_(std::move(values)) {
  if (n < r || r < 1) throw InvalidInput("chirotope: need n >= r >= 1");
  if (vals_.size() != binom(n, r))
    throw InvalidInput("chirotope: values table must have C(n,r) entries, got " +
                       std::to_string(vals_.size()) + " for n=" + std::to_string(n) +
                       " r=" + std::to_string(r));
}

Sign Chirotope::value_sorted(const std::vector<int>& t) const {
  return vals_[tuple_rank(n_, t)];
}

void Chirotope::set_sorted(const std::vector<int>& t, Sign v) {
  vals_[tuple_rank(n_, t)] = v;
}

Sign Chirotope::at(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != r_) throw InvalidInput("chirotope lookup: wrong arity");
  std::vector<int> t = tuple;
  // insertion sort, counting inversions for the permutation sign
  int inv = 0;
  for (size_t i = 1; i < t.size(); ++i) {
    int x = t[i];
    size_t j = i;
    while (j > 0 && t[j - 1] > x) {
      t[j] = t[j - 1];
      --j;
      ++inv;
    }
    t[j] = x;
  }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  for (int e : t)
    if (e < 1 || e > n_) throw InvalidInput("chirotope lookup: element out of range");
  Sign v = value_sorted(t);
  return (inv % 2) ? static_cast<Sign>(-v) : v;
}

Sign Chirotope::at4(int a, int b, int c, int d) const { return at({a, b, c, d}); }

bool Chirotope::uniform() const {
  for (Sign v : vals_)
    if (v == 0) return false;
  return true;
}

Chirotope Chirotope::negated() const {
  Chirotope r = *this;
  for (Sign& v : r.vals_) v = static_cast<Sign>(-v);
  return r;
}

Chirotope Chirotope::reoriented(const std::vector<int>& f) const {
  std::vector<char> in_f(static_cast<size_t>(n_) + 1, 0);
  for (int e : f) in_f[static_cast<size_t>(e)] = 1;
  Chirotope r = *this;
  auto tuples = sorted_tuples(n_, r_);
  for (size_t i = 0; i < tuples.size(); ++i) {
    int hits = 0;
    for (int e : tuples[i]) hits += in_f[static_cast<size_t>(e)];
    if (hits % 2) r.vals_[i] = static_cast<Sign>(-r.vals_[i]);
  }
  return r;
}

Chirotope Chirotope::restricted(const std::vector<int>& a) const {
  std::vector<int> s = a;
  std::sort(s.begin(), s.end());
  if (static_cast<int>(s.size()) < r_) throw InvalidInput("restrict: |A| < rank");
  int m = static_cast<int>(s.size());
  std::vector<Sign> vals;
  vals.reserve(binom(m, r_));
  for (const auto& t : sorted_tuples(m, r_)) {
    std::vector<int> orig(t.size());
    for (size_t i = 0; i < t.size(); ++i) orig[i] = s[static_cast<size_t>(t[i] - 1)];
    vals.push_back(value_sorted(orig));
  }
  return Chirotope(m, r_, std::move(vals));
}

Chirotope Chirotope::contracted(const std::vector<int>& a) const {
  std::vector<int> s = a;
  std::sort(s.begin(), s.end());
  int k = static_cast<int>(s.size());
  if (k >= r_) throw InvalidInput("contract: |A| >= rank");
  std::vector<int> rest;
  for (int e = 1; e <= n_; ++e)
    if (!std::binary_search(s.begin(), s.end(), e)) rest.push_back(e);
  int m = static_cast<int>(rest.size());
  int rr = r_ - k;
  std::vector<Sign> vals;
  vals.reserve(binom(m, rr));
  for (const auto& t : sorted_tuples(m, rr)) {
    std::vector<int> orig = s;
    for (int x : t) orig.push_back(rest[static_cast<size_t>(x - 1)]);
    vals.push_back(at(orig));
  }
  return Chirotope(m, rr, std::move(vals));
}

std::string Chirotope::sign_string() const {
  std::string out;
  out.reserve(vals_.size());
  for (Sign v : vals_) out.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
  return out;
}

Chirotope lex_extension(const Chirotope& chi, const LexExtension& q) {
  if (chi.rank() != 4) throw InvalidInput("lex_extension: rank-4 only");
  if (!chi.uniform()) throw InvalidInput("lex_extension: chirotope must be uniform");
  if (q.terms.size() < 4) throw InvalidInput("lex_extension: need 4 distinct terms");
  {
    std::vector<int> es;
    for (auto& [e, s] : q.terms) es.push_back(e);
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
      throw InvalidInput("lex_extension: terms must be pairwise distinct");
  }
  int n = chi.n();
  int nq = n + 1;
  std::vector<Sign> vals(binom(nq, 4), 0);
  Chirotope out(nq, 4, std::move(vals));
  for (const auto& t : sorted_tuples(n, 4)) out.set_sorted(t, chi.value_sorted(t));
  for (const auto& lam : sorted_tuples(n, 3)) {
    Sign v = 0;
    for (const auto& [a, eps] : q.terms) {
      Sign base = chi.at({lam[0], lam[1], lam[2], a});
      if (base != 0) {
        v = static_cast<Sign>(eps * base);
        break;
      }
    }
    std::vector<int> t = {lam[0], lam[1], lam[2], nq};
    out.set_sorted(t, v);
  }
  return out;
}

}  // namespace om
