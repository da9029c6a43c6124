#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "branchkit/labels.hpp"

namespace branchkit {

/// Hypotheses under which each branching formula holds. Every check reports
/// the first failing inequality together with the actual values.
namespace stable_range {

struct Violation {
  std::string rule;
  std::string inequality;
};

namespace detail {

inline std::string num(int v) { return std::to_string(v); }

inline std::optional<Violation> at_most(Pair p, const std::string& lhs_text, int lhs, const std::string& rhs_text,
                                        int rhs) {
  if (lhs <= rhs) return std::nullopt;
  return Violation{std::string(pair_id(p)),
                   lhs_text + " <= " + rhs_text + " fails: " + num(lhs) + " > " + num(rhs)};
}

/// 2 * lhs <= rhs, i.e. lhs <= rhs / 2 with a real right-hand side.
inline std::optional<Violation> at_most_half(Pair p, const std::string& lhs_text, int lhs,
                                             const std::string& rhs_text, int rhs) {
  if (2 * lhs <= rhs) return std::nullopt;
  return Violation{std::string(pair_id(p)), lhs_text + " <= " + rhs_text + "/2 fails: " + num(lhs) + " > " +
                                                num(rhs) + "/2"};
}

template <class... Checks>
std::optional<Violation> first_of(Checks&&... checks) {
  std::optional<Violation> out;
  ((out ? void() : void(out = checks())), ...);
  return out;
}

inline int len(const RepLabel& l) { return l.partition().length(); }
inline int len_plus(const RepLabel& l) { return l.gl_label().plus.length(); }
inline int len_minus(const RepLabel& l) { return l.gl_label().minus.length(); }

}  // namespace detail

/// Inequalities involving only the ranks and the G-side labels. A query whose
/// G side fails these cannot be rescued by any choice of H label.
inline std::optional<Violation> check_big(const BranchingQuery& q) {
  using namespace detail;
  const Pair p = q.pair;
  const int n = q.ranks.n;
  const int m = q.ranks.m;
  switch (p) {
    case Pair::GLDiagonal: {
      const int pp = len_plus(q.big[0]), qq = len_minus(q.big[0]);
      const int rr = len_plus(q.big[1]), ss = len_minus(q.big[1]);
      return at_most(p, "p+q+r+s = l(mu+)+l(mu-)+l(nu+)+l(nu-)", pp + qq + rr + ss, "n", n);
    }
    case Pair::ODiagonal:
      return at_most(p, "l(mu) + l(nu)", len(q.big[0]) + len(q.big[1]), "floor(n/2)", n / 2);
    case Pair::SpDiagonal:
      return at_most(p, "l(mu) + l(nu)", len(q.big[0]) + len(q.big[1]), "n", n);
    case Pair::GLSum:
      return at_most(p, "l(lambda+) + l(lambda-)", len_plus(q.big[0]) + len_minus(q.big[0]), "min(n,m)",
                     std::min(n, m));
    case Pair::OSum:
      return at_most_half(p, "l(lambda)", len(q.big[0]), "min(n,m)", std::min(n, m));
    case Pair::SpSum:
      return at_most(p, "l(lambda)", len(q.big[0]), "min(n,m)", std::min(n, m));
    case Pair::GLInO:
    case Pair::GLInSp:
      return at_most(p, "l(lambda)", len(q.big[0]), "floor(n/2)", n / 2);
    // The lengths of lambda+ and lambda- are bounded jointly, not one at a
    // time: with separate bounds the formula over-counts, e.g. GL_4 label
    // ((1,1),(1,1)) restricted to Sp_4 contains V^(1,1) once, not twice.
    case Pair::OInGL:
      return at_most(p, "l(lambda+) + l(lambda-)", len_plus(q.big[0]) + len_minus(q.big[0]), "floor(n/2)", n / 2);
    case Pair::SpInGL:
      return at_most(p, "l(lambda+) + l(lambda-)", len_plus(q.big[0]) + len_minus(q.big[0]), "n", n);
  }
  return std::nullopt;
}

/// Full hypothesis check for a query.
inline std::optional<Violation> check(const BranchingQuery& q) {
  using namespace detail;
  const Pair p = q.pair;
  const int n = q.ranks.n;
  const int m = q.ranks.m;
  switch (p) {
    case Pair::GLDiagonal: {
      // Smallest p, q, r, s allowed: the lengths of mu and nu, enlarged just
      // enough that p+r and q+s cover the lengths of lambda+ and lambda-.
      const int pr = std::max(len_plus(q.big[0]) + len_plus(q.big[1]), len_plus(q.small[0]));
      const int qs = std::max(len_minus(q.big[0]) + len_minus(q.big[1]), len_minus(q.small[0]));
      return first_of([&] { return check_big(q); },
                      [&] {
                        return at_most(p, "max(l(mu+)+l(nu+), l(lambda+)) + max(l(mu-)+l(nu-), l(lambda-))",
                                       pr + qs, "n", n);
                      });
    }
    case Pair::ODiagonal:
      return first_of([&] { return at_most(p, "l(lambda)", len(q.small[0]), "floor(n/2)", n / 2); },
                      [&] { return check_big(q); });
    case Pair::SpDiagonal:
      return first_of([&] { return at_most(p, "l(lambda)", len(q.small[0]), "n", n); },
                      [&] { return check_big(q); });
    case Pair::GLSum: {
      const auto& l = q.big[0].gl_label();
      const auto& mu = q.small[0].gl_label();
      const auto& nu = q.small[1].gl_label();
      const int pp = std::max({l.plus.length(), mu.plus.length(), nu.plus.length()});
      const int qq = std::max({l.minus.length(), mu.minus.length(), nu.minus.length()});
      return at_most(p, "p+q = max l(plus parts) + max l(minus parts)", pp + qq, "min(n,m)", std::min(n, m));
    }
    case Pair::OSum:
      return first_of([&] { return check_big(q); },
                      [&] { return at_most_half(p, "l(mu)", len(q.small[0]), "min(n,m)", std::min(n, m)); },
                      [&] { return at_most_half(p, "l(nu)", len(q.small[1]), "min(n,m)", std::min(n, m)); });
    case Pair::SpSum:
      return first_of([&] { return check_big(q); },
                      [&] { return at_most(p, "l(mu)", len(q.small[0]), "min(n,m)", std::min(n, m)); },
                      [&] { return at_most(p, "l(nu)", len(q.small[1]), "min(n,m)", std::min(n, m)); });
    case Pair::GLInO:
    case Pair::GLInSp:
      return first_of([&] { return at_most(p, "l(mu+)", len_plus(q.small[0]), "floor(n/2)", n / 2); },
                      [&] { return at_most(p, "l(mu-)", len_minus(q.small[0]), "floor(n/2)", n / 2); },
                      [&] { return check_big(q); });
    case Pair::OInGL:
      return first_of([&] { return check_big(q); },
                      [&] { return at_most(p, "l(mu)", len(q.small[0]), "floor(n/2)", n / 2); });
    case Pair::SpInGL:
      return first_of([&] { return check_big(q); },
                      [&] { return at_most(p, "l(mu)", len(q.small[0]), "n", n); });
  }
  return std::nullopt;
}

}  // namespace stable_range

/// Throws StableRangeViolation when the query is outside the formula's range.
inline const BranchingQuery& validate_stable_range(const BranchingQuery& q) {
  if (auto v = stable_range::check(q)) throw StableRangeViolation(v->rule, v->inequality);
  return q;
}

/// Hypotheses of the Littlewood restriction theorems.
inline std::optional<stable_range::Violation> littlewood_range(const Partition& lambda, const Partition& mu,
                                                               Family family, int rank) {
  using stable_range::detail::num;
  auto fail = [](std::string text) {
    return std::optional<stable_range::Violation>(stable_range::Violation{"littlewood", std::move(text)});
  };
  if (family == Family::O) {
    if (2 * lambda.length() > rank) return fail("l(lambda) <= n/2 fails: " + num(lambda.length()) + " > " + num(rank) + "/2");
    if (first_two_columns(mu) > rank) {
      return fail("(mu')_1 + (mu')_2 <= n fails: " + num(first_two_columns(mu)) + " > " + num(rank));
    }
    return std::nullopt;
  }
  if (family == Family::Sp) {
    if (lambda.length() > rank) return fail("l(lambda) <= n fails: " + num(lambda.length()) + " > " + num(rank));
    if (mu.length() > rank) return fail("l(mu) <= n fails: " + num(mu.length()) + " > " + num(rank));
    return std::nullopt;
  }
  return fail("Littlewood restriction is defined for the O and Sp families only");
}

}  // namespace branchkit
