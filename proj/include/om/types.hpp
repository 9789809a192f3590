#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace om {

using Sign = std::int8_t;  // -1, 0, +1

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : Error {
  explicit ParseError(const std::string& m) : Error(m) {}
};
struct InvalidInput : Error {
  explicit InvalidInput(const std::string& m) : Error(m) {}
};
struct LimitExceeded : Error {
  explicit LimitExceeded(const std::string& m) : Error(m) {}
};
struct SearchFailure : Error {
  explicit SearchFailure(const std::string& m) : Error(m) {}
};

// Elements are 1..n with the natural order.
struct GroundSet {
  int n = 0;
  bool contains(int e) const { return e >= 1 && e <= n; }
};

// Vector over {+1,-1,0} indexed by elements 1..n.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(int n) : e_(static_cast<size_t>(n), 0) {}
  SignVector(std::initializer_list<int> xs) {
    e_.reserve(xs.size());
    for (int x : xs) e_.push_back(static_cast<Sign>(x));
  }

  int size() const { return static_cast<int>(e_.size()); }
  Sign operator[](int e) const { return e_[static_cast<size_t>(e - 1)]; }
  void set(int e, Sign s) { e_[static_cast<size_t>(e - 1)] = s; }

  bool is_zero() const {
    for (Sign s : e_)
      if (s != 0) return false;
    return true;
  }

  std::vector<int> supp(Sign sigma) const {  // X^sigma
    std::vector<int> r;
    for (int e = 1; e <= size(); ++e)
      if ((*this)[e] == sigma) r.push_back(e);
    return r;
  }
  std::vector<int> support() const {
    std::vector<int> r;
    for (int e = 1; e <= size(); ++e)
      if ((*this)[e] != 0) r.push_back(e);
    return r;
  }
  int zero_count() const {
    int c = 0;
    for (Sign s : e_) c += (s == 0);
    return c;
  }

  SignVector negated() const {
    SignVector r = *this;
    for (Sign& s : r.e_) s = static_cast<Sign>(-s);
    return r;
  }

  // Representative with the smallest-index nonzero entry positive.
  SignVector canonical() const {
    for (Sign s : e_) {
      if (s > 0) return *this;
      if (s < 0) return negated();
    }
    return *this;
  }

  std::string str() const {
    std::string r;
    r.reserve(e_.size());
    for (Sign s : e_) r.push_back(s > 0 ? '+' : (s < 0 ? '-' : '0'));
    return r;
  }

  friend bool operator==(const SignVector& a, const SignVector& b) { return a.e_ == b.e_; }
  friend bool operator!=(const SignVector& a, const SignVector& b) { return !(a == b); }
  friend bool operator<(const SignVector& a, const SignVector& b) { return a.e_ < b.e_; }

 private:
  std::vector<Sign> e_;
};

// (X o Y)_e = X_e if X_e != 0 else Y_e.
inline SignVector compose(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw InvalidInput("compose: mismatched ground sets");
  SignVector r = x;
  for (int e = 1; e <= x.size(); ++e)
    if (r[e] == 0) r.set(e, y[e]);
  return r;
}

// S(X,Y) = { e : X_e = -Y_e != 0 }.
inline std::vector<int> separation_set(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw InvalidInput("separation_set: mismatched ground sets");
  std::vector<int> r;
  for (int e = 1; e <= x.size(); ++e)
    if (x[e] != 0 && x[e] == -y[e]) r.push_back(e);
  return r;
}

// X <= Y in the covector order: X_e = Y_e or X_e = 0, for all e.
inline bool covector_leq(const SignVector& x, const SignVector& y) {
  for (int e = 1; e <= x.size(); ++e)
    if (x[e] != 0 && x[e] != y[e]) return false;
  return true;
}

}  // namespace om
