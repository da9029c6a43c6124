#pragma once

// Stable branching multiplicities for the ten classical symmetric pairs,
// expressed as finite sums of products of Littlewood-Richardson coefficients.
//
// Every sum is nominally over all partitions; it is made finite by walking LR
// supports. Whenever a coefficient c^outer_{a,b} appears with outer fixed and
// a already chosen, the admissible b are exactly the keys of
// skew_expand(outer, a), so enumeration never leaves the support.

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "branchkit/labels.hpp"
#include "branchkit/lr.hpp"
#include "branchkit/partition.hpp"
#include "branchkit/stable_range.hpp"

namespace branchkit {

namespace detail {

inline Multiplicity even_row_weight(const ExpansionMap& m) {
  Multiplicity total = 0;
  for (const auto& [shape, c] : m) {
    if (is_even_rows(shape)) total = checked_add(total, c);
  }
  return total;
}

inline Multiplicity even_column_weight(const ExpansionMap& m) {
  Multiplicity total = 0;
  for (const auto& [shape, c] : m) {
    if (is_even_columns(shape)) total = checked_add(total, c);
  }
  return total;
}

/// sum over gamma of c^gamma_{a,b} * c^lambda_{gamma, e} with e restricted by `keep`.
inline Multiplicity product_then_skew(const Partition& a, const Partition& b, const Partition& lambda,
                                      bool even_rows) {
  Multiplicity total = 0;
  for (const auto& [gamma, c1] : tensor_expand(a, b, lambda.length())) {
    if (!contains(lambda, gamma)) continue;
    const auto skew = skew_expand(lambda, gamma);
    const Multiplicity w = even_rows ? even_row_weight(skew) : even_column_weight(skew);
    if (w) total = checked_add(total, checked_mul(c1, w));
  }
  return total;
}

}  // namespace detail

/// sum c^lambda_{alpha,beta} c^mu_{alpha,gamma} c^nu_{beta,gamma}: the O and Sp
/// diagonal rules share this sum.
inline Multiplicity triple_lr_sum(const Partition& lambda, const Partition& mu, const Partition& nu) {
  Multiplicity total = 0;
  for (const auto& alpha : subpartitions(intersection(lambda, mu))) {
    const auto betas = skew_expand(lambda, alpha);
    if (betas.empty()) continue;
    const auto gammas = skew_expand(mu, alpha);
    for (const auto& [gamma, c_mu] : gammas) {
      for (const auto& [beta, c_lambda] : betas) {
        const Multiplicity c_nu = lr_coeff(nu, beta, gamma);
        if (c_nu) total = checked_add(total, checked_mul(checked_mul(c_lambda, c_mu), c_nu));
      }
    }
  }
  return total;
}

/// Order in which the six-fold GL diagonal sum is unrolled. The value does not
/// depend on it; both are kept so one can be checked against the other.
enum class HexOrder { FromAlpha1, FromGamma2 };

/// [F^mu (x) F^nu : F^lambda] for rational GL labels, as the six-fold sum
///   c^{l+}_{a2 a1} c^{m+}_{a1 g1} c^{n-}_{g1 b2} c^{l-}_{b2 b1} c^{m-}_{b1 g2} c^{n+}_{g2 a2}.
inline Multiplicity hexagon_lr_sum(const GLLabel& lambda, const GLLabel& mu, const GLLabel& nu,
                                   HexOrder order = HexOrder::FromAlpha1) {
  const Partition& lp = lambda.plus;
  const Partition& lm = lambda.minus;
  const Partition& mp = mu.plus;
  const Partition& mm = mu.minus;
  const Partition& np = nu.plus;
  const Partition& nm = nu.minus;
  Multiplicity total = 0;
  auto add = [&](Multiplicity a, Multiplicity b, Multiplicity c, Multiplicity d, Multiplicity e, Multiplicity f) {
    total = checked_add(total, checked_mul(checked_mul(checked_mul(a, b), checked_mul(c, d)), checked_mul(e, f)));
  };
  if (order == HexOrder::FromAlpha1) {
    // a1 -> (a2 via l+, g1 via m+) -> b2 via n- -> b1 via l- -> g2 via m- -> close with n+.
    for (const auto& a1 : subpartitions(intersection(lp, mp))) {
      const auto a2s = skew_expand(lp, a1);
      if (a2s.empty()) continue;
      for (const auto& [g1, c_mp] : skew_expand(mp, a1)) {
        for (const auto& [b2, c_nm] : skew_expand(nm, g1)) {
          for (const auto& [b1, c_lm] : skew_expand(lm, b2)) {
            for (const auto& [g2, c_mm] : skew_expand(mm, b1)) {
              for (const auto& [a2, c_lp] : a2s) {
                const Multiplicity c_np = lr_coeff(np, g2, a2);
                if (c_np) add(c_lp, c_mp, c_nm, c_lm, c_mm, c_np);
              }
            }
          }
        }
      }
    }
  } else {
    // g2 -> (a2 via n+, b1 via m-) -> a1 via l+ -> g1 via m+ -> b2 via n- -> close with l-.
    for (const auto& g2 : subpartitions(intersection(np, mm))) {
      const auto b1s = skew_expand(mm, g2);
      if (b1s.empty()) continue;
      for (const auto& [a2, c_np] : skew_expand(np, g2)) {
        for (const auto& [a1, c_lp] : skew_expand(lp, a2)) {
          for (const auto& [g1, c_mp] : skew_expand(mp, a1)) {
            for (const auto& [b2, c_nm] : skew_expand(nm, g1)) {
              for (const auto& [b1, c_mm] : b1s) {
                const Multiplicity c_lm = lr_coeff(lm, b2, b1);
                if (c_lm) add(c_lp, c_mp, c_nm, c_lm, c_mm, c_np);
              }
            }
          }
        }
      }
    }
  }
  return total;
}

/// sum c^{g+}_{m+ n+} c^{g-}_{m- n-} c^{l+}_{g+ d} c^{l-}_{g- d}.
inline Multiplicity gl_sum_lr_sum(const GLLabel& lambda, const GLLabel& mu, const GLLabel& nu) {
  Multiplicity total = 0;
  const auto gamma_minus = tensor_expand(mu.minus, nu.minus, lambda.minus.length());
  if (gamma_minus.empty()) return 0;
  for (const auto& [gp, c1] : tensor_expand(mu.plus, nu.plus, lambda.plus.length())) {
    if (!contains(lambda.plus, gp)) continue;
    for (const auto& [delta, c3] : skew_expand(lambda.plus, gp)) {
      for (const auto& [gm, c2] : gamma_minus) {
        const Multiplicity c4 = lr_coeff(lambda.minus, gm, delta);
        if (c4) total = checked_add(total, checked_mul(checked_mul(c1, c2), checked_mul(c3, c4)));
      }
    }
  }
  return total;
}

/// sum c^mu_{alpha,beta} c^{l+}_{alpha, e1} c^{l-}_{beta, e2}, with e1 and e2
/// ranging over even-row shapes (even_rows) or even-column shapes.
inline Multiplicity bilinear_lr_sum(const GLLabel& lambda, const Partition& mu, bool even_rows) {
  auto weight = [&](const Partition& outer, const Partition& inner) {
    const auto skew = skew_expand(outer, inner);
    return even_rows ? detail::even_row_weight(skew) : detail::even_column_weight(skew);
  };
  Multiplicity total = 0;
  for (const auto& alpha : subpartitions(intersection(mu, lambda.plus))) {
    const Multiplicity w_plus = weight(lambda.plus, alpha);
    if (!w_plus) continue;
    for (const auto& [beta, c] : skew_expand(mu, alpha)) {
      const Multiplicity w_minus = weight(lambda.minus, beta);
      if (w_minus) total = checked_add(total, checked_mul(c, checked_mul(w_plus, w_minus)));
    }
  }
  return total;
}

namespace detail {

inline void check_or_throw(const BranchingQuery& q, bool unsafe) {
  if (!unsafe) validate_stable_range(q);
}

inline void require_pair(const BranchingQuery& q, std::initializer_list<Pair> allowed, const char* op) {
  for (Pair p : allowed) {
    if (q.pair == p) return;
  }
  throw UnknownPair(std::string(op) + " does not handle pair '" + std::string(pair_id(q.pair)) + "'");
}

}  // namespace detail

inline Multiplicity diagonal_multiplicity(const BranchingQuery& q, bool unsafe = false) {
  detail::require_pair(q, {Pair::GLDiagonal, Pair::ODiagonal, Pair::SpDiagonal}, "diagonal_multiplicity");
  detail::check_or_throw(q, unsafe);
  if (q.pair == Pair::GLDiagonal) {
    return hexagon_lr_sum(q.small[0].gl_label(), q.big[0].gl_label(), q.big[1].gl_label());
  }
  return triple_lr_sum(q.small[0].partition(), q.big[0].partition(), q.big[1].partition());
}

inline Multiplicity direct_sum_multiplicity(const BranchingQuery& q, bool unsafe = false) {
  detail::require_pair(q, {Pair::GLSum, Pair::OSum, Pair::SpSum}, "direct_sum_multiplicity");
  detail::check_or_throw(q, unsafe);
  switch (q.pair) {
    case Pair::GLSum:
      return gl_sum_lr_sum(q.big[0].gl_label(), q.small[0].gl_label(), q.small[1].gl_label());
    case Pair::OSum:
      return detail::product_then_skew(q.small[0].partition(), q.small[1].partition(), q.big[0].partition(), true);
    default:
      return detail::product_then_skew(q.small[0].partition(), q.small[1].partition(), q.big[0].partition(), false);
  }
}

/// Even columns go with the orthogonal group here and even rows with the
/// symplectic one: the reverse of the bilinear-form rules.
inline Multiplicity polarization_multiplicity(const BranchingQuery& q, bool unsafe = false) {
  detail::require_pair(q, {Pair::GLInO, Pair::GLInSp}, "polarization_multiplicity");
  detail::check_or_throw(q, unsafe);
  const auto& mu = q.small[0].gl_label();
  return detail::product_then_skew(mu.plus, mu.minus, q.big[0].partition(), q.pair == Pair::GLInSp);
}

inline Multiplicity bilinear_multiplicity(const BranchingQuery& q, bool unsafe = false) {
  detail::require_pair(q, {Pair::OInGL, Pair::SpInGL}, "bilinear_multiplicity");
  detail::check_or_throw(q, unsafe);
  return bilinear_lr_sum(q.big[0].gl_label(), q.small[0].partition(), q.pair == Pair::OInGL);
}

/// Dispatches to the rule for q.pair.
inline Multiplicity branching_multiplicity(const BranchingQuery& q, bool unsafe = false) {
  if (is_diagonal(q.pair)) return diagonal_multiplicity(q, unsafe);
  if (is_direct_sum(q.pair)) return direct_sum_multiplicity(q, unsafe);
  if (q.pair == Pair::GLInO || q.pair == Pair::GLInSp) return polarization_multiplicity(q, unsafe);
  return bilinear_multiplicity(q, unsafe);
}

/// Classical restriction from GL to O_rank (sum over even-row shapes) or to
/// Sp_2rank (sum over even-column shapes); the GL group is GL_rank resp. GL_2rank.
inline Multiplicity littlewood_restriction(const Partition& lambda, const Partition& mu, Family family, int rank,
                                           bool unsafe = false) {
  if (auto v = littlewood_range(lambda, mu, family, rank); v && !unsafe) {
    throw StableRangeViolation(v->rule, v->inequality);
  }
  if (family != Family::O && family != Family::Sp) {
    throw StableRangeViolation("littlewood", "family must be O or Sp");
  }
  const auto skew = skew_expand(lambda, mu);
  return family == Family::O ? detail::even_row_weight(skew) : detail::even_column_weight(skew);
}

/// A full decomposition: H-side labels (one or two) -> multiplicity.
using Decomposition = std::map<std::vector<RepLabel>, Multiplicity>;

namespace detail {

inline std::vector<LabelData> to_data(const std::vector<RepLabel>& labels) {
  std::vector<LabelData> out;
  for (const auto& l : labels) {
    if (l.family() == Family::GL) {
      out.emplace_back(l.gl_label());
    } else {
      out.emplace_back(l.partition());
    }
  }
  return out;
}

/// Candidate labels of one H factor with size budget `plus_budget`/`minus_budget`.
inline std::vector<LabelData> factor_candidates(GroupFactor f, int plus_budget, int minus_budget) {
  std::vector<LabelData> out;
  if (f.family == Family::GL) {
    for (int a = 0; a <= plus_budget; ++a) {
      for (int b = 0; b <= minus_budget; ++b) {
        for (const auto& plus : partitions_of(a, -1, f.rank)) {
          for (const auto& minus : partitions_of(b, -1, f.rank)) {
            if (plus.length() + minus.length() <= f.rank) out.emplace_back(GLLabel{plus, minus});
          }
        }
      }
    }
  } else {
    for (const auto& p : partitions_up_to(plus_budget)) {
      if (f.family == Family::O ? first_two_columns(p) <= f.rank : p.length() <= f.rank) out.emplace_back(p);
    }
  }
  return out;
}

}  // namespace detail

/// H label tuples that branch_decompose considers for `big`: every label of
/// each H factor whose size fits the budget read off from the G side.
inline std::vector<std::vector<LabelData>> decompose_candidates(Pair pair, Ranks ranks,
                                                                const std::vector<LabelData>& big, int bound = -1) {
  const auto hf = small_factors(pair, ranks);
  int plus_budget = 0;
  int minus_budget = 0;
  for (const auto& d : big) {
    if (const auto* g = std::get_if<GLLabel>(&d)) {
      plus_budget += g->plus.size();
      minus_budget += g->minus.size();
    } else {
      plus_budget += std::get<Partition>(d).size();
    }
  }
  // Polarization: the G label spreads over both halves of the GL label.
  if (pair == Pair::GLInO || pair == Pair::GLInSp) minus_budget = plus_budget;
  // Bilinear: both halves of the GL label feed the single O/Sp label.
  if (pair == Pair::OInGL || pair == Pair::SpInGL) {
    plus_budget += minus_budget;
    minus_budget = 0;
  }
  if (bound >= 0) {
    plus_budget = std::min(plus_budget, bound);
    minus_budget = std::min(minus_budget, bound);
  }

  std::vector<std::vector<LabelData>> out;
  if (hf.size() == 1) {
    for (auto& c : detail::factor_candidates(hf[0], plus_budget, minus_budget)) out.push_back({std::move(c)});
    return out;
  }
  const auto first = detail::factor_candidates(hf[0], plus_budget, minus_budget);
  const auto second = detail::factor_candidates(hf[1], plus_budget, minus_budget);
  auto size_of = [](const LabelData& d, bool minus) {
    if (const auto* g = std::get_if<GLLabel>(&d)) return minus ? g->minus.size() : g->plus.size();
    return minus ? 0 : std::get<Partition>(d).size();
  };
  for (const auto& a : first) {
    for (const auto& b : second) {
      if (size_of(a, false) + size_of(b, false) > plus_budget) continue;
      if (size_of(a, true) + size_of(b, true) > minus_budget) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

/// Decomposes the G-representation `big` over H by evaluating the pair's rule
/// for every candidate H label. Candidates outside the stable range are
/// skipped; the G side itself must be in range unless `unsafe` is set.
/// `bound` caps the size of H labels (negative = natural bound).
inline Decomposition branch_decompose(Pair pair, Ranks ranks, const std::vector<LabelData>& big, int bound = -1,
                                      bool unsafe = false) {
  const auto hf = small_factors(pair, ranks);
  // Probe query with empty H labels, to validate the G side.
  std::vector<LabelData> empty_small(hf.size(), Partition{});
  for (std::size_t i = 0; i < hf.size(); ++i) {
    if (hf[i].family == Family::GL) empty_small[i] = GLLabel{};
  }
  const BranchingQuery probe = make_query(pair, ranks, big, empty_small);
  if (!unsafe) {
    if (auto v = stable_range::check_big(probe)) throw StableRangeViolation(v->rule, v->inequality);
  }
  Decomposition out;
  for (const auto& small : decompose_candidates(pair, ranks, big, bound)) {
    BranchingQuery q = make_query(pair, ranks, big, small);
    if (!unsafe && stable_range::check(q)) continue;
    if (Multiplicity c = branching_multiplicity(q, true)) out.emplace(q.small, c);
  }
  return out;
}

}  // namespace branchkit
