#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "branchkit/errors.hpp"

namespace branchkit {

/// Integer exponent vector; also used for weights on a maximal torus.
using Exponent = std::vector<int>;

/// Sparse multivariate Laurent polynomial with exact int64 coefficients.
/// Terms are kept in lexicographic order of exponents and zero coefficients
/// are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, std::int64_t>;

  LaurentPoly() = default;
  explicit LaurentPoly(int variables) : variables_(variables) {}

  static LaurentPoly monomial(Exponent e, std::int64_t c = 1) {
    LaurentPoly p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
  }

  static LaurentPoly constant(int variables, std::int64_t c) {
    return monomial(Exponent(static_cast<std::size_t>(variables), 0), c);
  }

  int variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  std::int64_t coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Exponent& e, std::int64_t c) {
    if (c == 0) return;
    if (static_cast<int>(e.size()) != variables_) {
      throw std::invalid_argument("exponent length " + std::to_string(e.size()) + " does not match " +
                                  std::to_string(variables_) + " variables");
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    adopt_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    adopt_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, std::int64_t{-1}));
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly(std::max(a.variables_, b.variables_));
    if (a.variables_ != b.variables_) throw std::invalid_argument("multiplying polynomials in different rings");
    LaurentPoly out(a.variables_);
    Exponent e(static_cast<std::size_t>(a.variables_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, checked_mul(ca, cb));
      }
    }
    return out;
  }

  LaurentPoly scaled(std::int64_t k) const {
    LaurentPoly out(variables_);
    for (const auto& [e, c] : terms_) out.add_term(e, checked_mul(c, k));
    return out;
  }

  /// Value at x = (1, ..., 1).
  std::int64_t at_ones() const {
    std::int64_t total = 0;
    for (const auto& [e, c] : terms_) total = checked_add(total, c);
    return total;
  }

  /// Applies an exponent map term by term; collisions are summed.
  LaurentPoly substitute(int target_variables, const std::function<Exponent(const Exponent&)>& map) const {
    LaurentPoly out(target_variables);
    for (const auto& [e, c] : terms_) out.add_term(map(e), c);
    return out;
  }

  /// Polynomial in the disjoint union of both variable sets: a(x) * b(y).
  static LaurentPoly outer_product(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(a.variables_ + b.variables_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e = ea;
        e.insert(e.end(), eb.begin(), eb.end());
        out.add_term(e, checked_mul(ca, cb));
      }
    }
    return out;
  }

  /// Exact quotient by (1 - x^step). `height` must be a linear functional with
  /// height(step) < 0. Throws NotACharacter if the division leaves a remainder.
  LaurentPoly divide_by_binomial(const Exponent& step, const Exponent& height) const {
    auto h = [&](const Exponent& e) {
      long v = 0;
      for (std::size_t i = 0; i < e.size(); ++i) v += static_cast<long>(e[i]) * height[i];
      return v;
    };
    const long step_h = h(step);
    if (step_h >= 0) throw std::invalid_argument("division step must have negative height");
    LaurentPoly quotient(variables_);
    if (is_zero()) return quotient;
    std::map<std::pair<long, Exponent>, std::int64_t> rest;
    long min_h = std::numeric_limits<long>::max();
    for (const auto& [e, c] : terms_) {
      rest.emplace(std::make_pair(h(e), e), c);
      min_h = std::min(min_h, h(e));
    }
    // Every term of an exact quotient has height at least min_h - step_h.
    const long floor_h = min_h - step_h;
    Exponent shifted(static_cast<std::size_t>(variables_));
    while (!rest.empty()) {
      auto top = std::prev(rest.end());
      const auto [key, c] = *top;
      if (key.first < floor_h) throw NotACharacter("division by binomial leaves a non-zero remainder");
      rest.erase(top);
      quotient.add_term(key.second, c);
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = key.second[i] + step[i];
      auto [it, inserted] = rest.try_emplace(std::make_pair(key.first + step_h, shifted), c);
      if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) rest.erase(it);
      }
    }
    return quotient;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  void adopt_arity(const LaurentPoly& o) {
    if (terms_.empty() && variables_ == 0) variables_ = o.variables_;
    if (!o.terms_.empty() && o.variables_ != variables_) {
      throw std::invalid_argument("adding polynomials in different rings");
    }
  }

  int variables_ = 0;
  Terms terms_;
};

inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t a = c < 0 ? -c : c;
    bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (a != 1 || constant) out += std::to_string(a);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "x" + std::to_string(i + 1);
      if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

}  // namespace branchkit
