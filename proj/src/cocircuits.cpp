#include "om/cocircuits.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace om {

namespace {

std::string set_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

}  // namespace

void CocircuitSet::insert(const SignVector& x) {
  SignVector c = x.canonical();
  auto it = std::lower_bound(reps_.begin(), reps_.end(), c);
  if (it == reps_.end() || !(*it == c)) reps_.insert(it, c);
}

bool CocircuitSet::contains(const SignVector& x) const {
  SignVector c = x.canonical();
  return std::binary_search(reps_.begin(), reps_.end(), c);
}

std::vector<SignVector> CocircuitSet::all_signed() const {
  std::vector<SignVector> out;
  out.reserve(reps_.size() * 2);
  for (const auto& r : reps_) {
    out.push_back(r);
    out.push_back(r.negated());
  }
  return out;
}

AxiomReport check_cocircuit_axioms(const CocircuitSet& c) {
  return check_cocircuit_axioms(c.all_signed());
}

AxiomReport check_cocircuit_axioms(const std::vector<SignVector>& input) {
  AxiomReport rep;
  // work on the deduplicated set
  std::set<SignVector> vecs(input.begin(), input.end());
  std::vector<SignVector> v(vecs.begin(), vecs.end());
  const int m = static_cast<int>(v.size());

  // (C0)
  for (const auto& x : v) {
    if (x.is_zero()) {
      rep.c0 = false;
      rep.violations.push_back({"C0", "zero vector present"});
    }
  }
  // (C1)
  for (const auto& x : v) {
    if (!vecs.count(x.negated())) {
      rep.c1 = false;
      rep.violations.push_back({"C1", "missing negation of " + x.str()});
    }
  }
  // (C2): X0 subset of Y0 implies X = +/-Y
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto& x = v[static_cast<size_t>(i)];
      const auto& y = v[static_cast<size_t>(j)];
      bool subset = true;
      for (int e = 1; e <= x.size() && subset; ++e)
        if (x[e] == 0 && y[e] != 0) subset = false;
      if (subset && !(x == y) && !(x == y.negated())) {
        rep.c2 = false;
        rep.violations.push_back({"C2", x.str() + " vs " + y.str()});
      }
    }
  }

  // uniformity of zero-set sizes
  rep.uniform = true;
  for (const auto& x : v) {
    int z = x.zero_count();
    if (rep.zero_set_size < 0) rep.zero_set_size = z;
    if (z != rep.zero_set_size) rep.uniform = false;
  }
  if (!rep.uniform) rep.zero_set_size = -1;
  if (v.empty()) rep.uniform = false;

  // (C3) weak elimination: for X != +/-Y and e in S(X,Y), some Z with
  // Z_e = 0, Z+ in (X+ u Y+)\{e}, Z- in (X- u Y-)\{e}.
  for (int i = 0; i < m && rep.c3; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& x = v[static_cast<size_t>(i)];
      const auto& y = v[static_cast<size_t>(j)];
      if (x == y.negated()) continue;
      auto s = separation_set(x, y);
      bool bad_pair = false;
      for (int e : s) {
        bool found = false;
        for (const auto& z : v) {
          if (z[e] != 0) continue;
          bool ok = true;
          for (int f = 1; f <= z.size() && ok; ++f) {
            if (z[f] > 0 && !(x[f] > 0 || y[f] > 0)) ok = false;
            if (z[f] < 0 && !(x[f] < 0 || y[f] < 0)) ok = false;
          }
          if (ok) {
            found = true;
            break;
          }
        }
        if (!found) {
          rep.c3 = false;
          bad_pair = true;
          rep.violations.push_back({"C3", "X=" + x.str() + " Y=" + y.str() + " e=" + std::to_string(e)});
          break;
        }
      }
      if (bad_pair) break;
    }
  }

  // (C3'): modular elimination, only meaningful with equal zero-set sizes
  if (rep.uniform) {
    for (int i = 0; i < m && rep.c3prime; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        const auto& x = v[static_cast<size_t>(i)];
        const auto& y = v[static_cast<size_t>(j)];
        // |X0 \ Y0| = 1
        int diff = 0;
        for (int e = 1; e <= x.size(); ++e)
          if (x[e] == 0 && y[e] != 0) ++diff;
        if (diff != 1) continue;
        auto s = separation_set(x, y);
        bool bad = false;
        for (int e : s) {
          // Z0 = (X0 cap Y0) u {e}, Z+ >= X+ cap Y+, Z- >= X- cap Y-
          bool found = false;
          for (const auto& z : v) {
            bool ok = true;
            for (int f = 1; f <= z.size() && ok; ++f) {
              bool in_z0 = (x[f] == 0 && y[f] == 0) || f == e;
              if (in_z0 != (z[f] == 0)) ok = false;
              if (ok && x[f] > 0 && y[f] > 0 && z[f] <= 0) ok = false;
              if (ok && x[f] < 0 && y[f] < 0 && z[f] >= 0) ok = false;
            }
            if (ok) {
              found = true;
              break;
            }
          }
          if (!found) {
            rep.c3prime = false;
            bad = true;
            rep.violations.push_back(
                {"C3'", "X=" + x.str() + " Y=" + y.str() + " e=" + std::to_string(e)});
            break;
          }
        }
        if (bad) break;
      }
    }
  }
  return rep;
}

CocircuitSet chirotope_to_cocircuits(const Chirotope& chi) {
  if (chi.rank() != 4) throw InvalidInput("chirotope_to_cocircuits: rank-4 only");
  if (!chi.uniform()) throw InvalidInput("chirotope_to_cocircuits: chirotope not uniform");
  const int n = chi.n();
  CocircuitSet out(n);
  for (const auto& lam : sorted_tuples(n, 3)) {
    SignVector x(n);
    for (int e = 1; e <= n; ++e) {
      if (e == lam[0] || e == lam[1] || e == lam[2]) continue;
      x.set(e, chi.at({lam[0], lam[1], lam[2], e}));
    }
    out.insert(x);
  }
  return out;
}

Chirotope cocircuits_to_chirotope(const CocircuitSet& c, const std::vector<int>& anchor) {
  const int n = c.n();
  if (n < 4) throw InvalidInput("cocircuits_to_chirotope: need n >= 4");
  std::vector<int> b = anchor;
  std::sort(b.begin(), b.end());
  if (b.size() != 4 || std::adjacent_find(b.begin(), b.end()) != b.end())
    throw InvalidInput("cocircuits_to_chirotope: anchor must be a sorted 4-tuple");

  // index representatives by zero set; require uniform rank-4 shape
  std::map<std::vector<int>, SignVector> by_zero;
  for (const auto& r : c.reps()) {
    if (r.size() != n) throw InvalidInput("cocircuits_to_chirotope: size mismatch");
    auto z = r.supp(0);
    if (z.size() != 3)
      throw InvalidInput("cocircuits_to_chirotope: zero set of size " + std::to_string(z.size()) +
                         ", expected 3 (uniform rank 4)");
    if (by_zero.count(z)) throw InvalidInput("cocircuits_to_chirotope: duplicate zero set " + set_str(z));
    by_zero[z] = r;
  }
  if (by_zero.size() != binom(n, 3))
    throw InvalidInput("cocircuits_to_chirotope: expected all C(n,3) cocircuit pairs, got " +
                       std::to_string(by_zero.size()));
  for (const auto& [z, r] : by_zero)
    for (int e = 1; e <= n; ++e)
      if (r[e] == 0 && !std::binary_search(z.begin(), z.end(), e))
        throw InvalidInput("cocircuits_to_chirotope: vector not uniform at " + r.str());

  std::vector<Sign> vals(binom(n, 4), 0);
  Chirotope chi(n, 4, std::move(vals));
  std::vector<char> known(binom(n, 4), 0);

  auto tset = [&](const std::vector<int>& t, Sign v) {
    std::uint64_t idx = tuple_rank(n, t);
    if (known[idx]) {
      if (chi.value_sorted(t) != v)
        throw InvalidInput("cocircuits_to_chirotope: inconsistent propagation at tuple " + set_str(t));
      return false;
    }
    chi.set_sorted(t, v);
    known[idx] = 1;
    return true;
  };

  tset(b, +1);
  std::queue<std::vector<int>> work;
  work.push(b);
  while (!work.empty()) {
    auto t = work.front();
    work.pop();
    Sign vt = chi.value_sorted(t);
    // exchange each position through the cocircuit of the complementary triple
    for (int drop = 0; drop < 4; ++drop) {
      std::vector<int> lam;
      for (int i = 0; i < 4; ++i)
        if (i != drop) lam.push_back(t[i]);
      int f = t[static_cast<size_t>(drop)];
      const SignVector& x = by_zero.at(lam);
      if (x[f] == 0) throw InvalidInput("cocircuits_to_chirotope: degenerate entry");
      // chi(lam, e) = X(e) X(f) chi(lam, f); chi(lam, f) relates to chi(t sorted)
      // by the parity of moving f into place.
      // position of f when appended after lam: count inversions
      int inv_f = 0;
      for (int x3 : lam)
        if (x3 > f) ++inv_f;
      Sign chi_lam_f = (inv_f % 2) ? static_cast<Sign>(-vt) : vt;
      for (int e = 1; e <= n; ++e) {
        if (x[e] == 0 || e == f) continue;
        Sign chi_lam_e = static_cast<Sign>(x[e] * x[f] * chi_lam_f);
        int inv_e = 0;
        for (int x3 : lam)
          if (x3 > e) ++inv_e;
        Sign v_sorted = (inv_e % 2) ? static_cast<Sign>(-chi_lam_e) : chi_lam_e;
        std::vector<int> nt = lam;
        nt.push_back(e);
        std::sort(nt.begin(), nt.end());
        if (tset(nt, v_sorted)) work.push(nt);
      }
    }
  }
  for (char k : known)
    if (!k) throw InvalidInput("cocircuits_to_chirotope: propagation did not reach all tuples");

  if (!(chirotope_to_cocircuits(chi) == c))
    throw InvalidInput("cocircuits_to_chirotope: round trip mismatch (corrupted input)");
  return chi;
}

ChirotopeReport validate_chirotope(const Chirotope& chi) {
  ChirotopeReport rep;
  const int n = chi.n();
  // alternation spot checks on lookups (storage is on sorted tuples, so this
  // exercises the permutation-sign path)
  if (chi.rank() == 4 && n >= 4) {
    for (const auto& t : sorted_tuples(n, 4)) {
      Sign v = chi.value_sorted(t);
      if (chi.at({t[1], t[0], t[2], t[3]}) != -v || chi.at({t[3], t[2], t[1], t[0]}) != v ||
          chi.at({t[0], t[0], t[1], t[2]}) != 0) {
        rep.alternation = false;
        break;
      }
    }
  }
  rep.uniform = chi.uniform();
  if (chi.rank() != 4) {
    rep.valid = false;
    rep.note = "validity check implemented for rank 4 only";
    return rep;
  }
  if (!rep.uniform) {
    rep.valid = false;
    rep.note = "non-uniform table: cocircuit derivation skipped";
    return rep;
  }
  rep.axioms = check_cocircuit_axioms(chirotope_to_cocircuits(chi));
  rep.valid = rep.alternation && rep.axioms.ok();
  return rep;
}

}  // namespace om
