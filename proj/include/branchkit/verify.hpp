#pragma once

// Exhaustive formula-versus-oracle sweeps. For each case the smallest rank is
// chosen at which the labels exist, the formula's hypotheses hold, and the
// character oracle is faithful; both sides are then compared exactly.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "branchkit/branching.hpp"
#include "branchkit/duality.hpp"
#include "branchkit/labels.hpp"
#include "branchkit/oracle.hpp"
#include "branchkit/stable_range.hpp"

namespace branchkit {

struct RuleSummary {
  Pair pair;
  std::size_t cases = 0;     // compared against the oracle
  std::size_t nonzero = 0;   // cases with positive multiplicity
  std::size_t skipped = 0;   // no admissible rank
  std::size_t mismatches = 0;
  std::string first_counterexample;

  bool passed() const noexcept { return mismatches == 0; }
};

inline std::string describe(const BranchingQuery& q) {
  std::string out = std::string(pair_id(q.pair)) + " n=" + std::to_string(q.ranks.n);
  if (is_direct_sum(q.pair)) out += " m=" + std::to_string(q.ranks.m);
  out += " big=";
  for (std::size_t i = 0; i < q.big.size(); ++i) out += (i ? "," : "") + to_string(q.big[i]);
  out += " small=";
  for (std::size_t i = 0; i < q.small.size(); ++i) out += (i ? "," : "") + to_string(q.small[i]);
  return out;
}

namespace detail {

inline std::vector<LabelData> labels_for(Family f, int max_size) {
  std::vector<LabelData> out;
  if (f == Family::GL) {
    for (auto& l : gl_labels_up_to(max_size)) out.emplace_back(std::move(l));
  } else {
    for (auto& p : partitions_up_to(max_size)) out.emplace_back(std::move(p));
  }
  return out;
}

inline int data_size(const LabelData& d) {
  if (const auto* g = std::get_if<GLLabel>(&d)) return g->size();
  return std::get<Partition>(d).size();
}

}  // namespace detail

/// Smallest admissible query for the given labels, or nullopt. Ranks grow
/// together (m = n for direct sums). Admissible means: labels exist at that
/// rank, the stable-range hypothesis holds, the oracle is faithful, and every
/// orthogonal group has rank at least 2s+2 with s the largest label size.
inline std::optional<BranchingQuery> minimal_oracle_query(Pair pair, const std::vector<LabelData>& big,
                                                          const std::vector<LabelData>& small, int max_rank = 64) {
  int largest = 0;
  for (const auto& d : big) largest = std::max(largest, detail::data_size(d));
  for (const auto& d : small) largest = std::max(largest, detail::data_size(d));
  const int o_floor = 2 * largest + 2;
  for (int n = 1; n <= max_rank; ++n) {
    const Ranks r{n, is_direct_sum(pair) ? n : 0};
    bool floor_ok = true;
    for (const auto& f : big_factors(pair, r)) floor_ok &= f.family != Family::O || f.rank >= o_floor;
    for (const auto& f : small_factors(pair, r)) floor_ok &= f.family != Family::O || f.rank >= o_floor;
    if (!floor_ok) continue;
    std::optional<BranchingQuery> q;
    try {
      q = make_query(pair, r, big, small);
    } catch (const InvalidLabel&) {
      continue;
    }
    if (stable_range::check(*q)) continue;
    if (oracle_safety(*q)) continue;
    return q;
  }
  return std::nullopt;
}

/// Every label combination of the pair with each label of size <= max_size.
inline std::vector<std::pair<std::vector<LabelData>, std::vector<LabelData>>> label_grid(Pair pair, int max_size) {
  const Ranks probe{1, 1};
  const auto gf = big_factors(pair, probe);
  const auto hf = small_factors(pair, probe);
  std::vector<std::vector<LabelData>> axes;
  for (const auto& f : gf) axes.push_back(detail::labels_for(f.family, max_size));
  for (const auto& f : hf) axes.push_back(detail::labels_for(f.family, max_size));
  std::vector<std::pair<std::vector<LabelData>, std::vector<LabelData>>> out;
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    std::vector<LabelData> big, small;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      (a < gf.size() ? big : small).push_back(axes[a][idx[a]]);
    }
    out.emplace_back(std::move(big), std::move(small));
    std::size_t a = 0;
    while (a < axes.size() && ++idx[a] == axes[a].size()) idx[a++] = 0;
    if (a == axes.size()) break;
  }
  return out;
}

/// Formula versus oracle over the full grid. With sample > 0, only that many
/// grid points (drawn with the given seed) are checked.
inline RuleSummary verify_rule(Pair pair, int max_size, std::size_t sample = 0, std::uint64_t seed = 0) {
  RuleSummary s;
  s.pair = pair;
  auto grid = label_grid(pair, max_size);
  if (sample > 0 && sample < grid.size()) {
    std::mt19937_64 rng(seed);
    std::shuffle(grid.begin(), grid.end(), rng);
    grid.resize(sample);
  }
  for (const auto& [big, small] : grid) {
    const auto q = minimal_oracle_query(pair, big, small);
    if (!q) {
      ++s.skipped;
      continue;
    }
    const Multiplicity formula = branching_multiplicity(*q);
    const std::int64_t oracle = oracle_multiplicity(*q);
    ++s.cases;
    if (formula > 0) ++s.nonzero;
    if (oracle < 0 || static_cast<Multiplicity>(oracle) != formula) {
      if (s.mismatches++ == 0) {
        s.first_counterexample =
            describe(*q) + ": formula " + std::to_string(formula) + ", oracle " + std::to_string(oracle);
      }
    }
  }
  return s;
}

struct ConservationSummary {
  Pair pair;
  std::size_t checks = 0;
  std::size_t skipped = 0;  // no rank found where every candidate is admissible
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const noexcept { return failures == 0; }
};

/// Smallest rank at which the G labels are in range and dimension-safe and
/// every candidate H label of branch_decompose passes the hypothesis with a
/// dimension-safe label, so no constituent can be skipped.
inline std::optional<Ranks> conservation_ranks(Pair pair, const std::vector<LabelData>& big, int max_rank = 64) {
  auto dim_safe = [](const RepLabel& l) {
    return l.family() != Family::O || 2 * l.partition().length() < l.rank();
  };
  for (int n = 1; n <= max_rank; ++n) {
    const Ranks r{n, is_direct_sum(pair) ? n : 0};
    bool ok = true;
    for (const auto& small : decompose_candidates(pair, r, big)) {
      std::optional<BranchingQuery> q;
      try {
        q = make_query(pair, r, big, small);
      } catch (const InvalidLabel&) {
        ok = false;
        break;
      }
      ok = !stable_range::check(*q) && std::all_of(q->big.begin(), q->big.end(), dim_safe) &&
           std::all_of(q->small.begin(), q->small.end(), dim_safe);
      if (!ok) break;
    }
    if (ok) return r;
  }
  return std::nullopt;
}

/// Sum of multiplicity times dimension over branch_decompose equals the
/// dimension of the G label, for every G-side label set of total size <= max_size.
inline ConservationSummary verify_conservation(Pair pair, int max_size) {
  ConservationSummary s;
  s.pair = pair;
  const Ranks probe{1, 1};
  std::vector<std::vector<LabelData>> bigs{{}};
  for (const auto& f : big_factors(pair, probe)) {
    std::vector<std::vector<LabelData>> next;
    for (const auto& prefix : bigs) {
      for (const auto& d : detail::labels_for(f.family, max_size)) {
        auto extended = prefix;
        extended.push_back(d);
        int total = 0;
        for (const auto& e : extended) total += detail::data_size(e);
        if (total <= max_size) next.push_back(std::move(extended));
      }
    }
    bigs = std::move(next);
  }
  for (const auto& big : bigs) {
    const auto r = conservation_ranks(pair, big);
    if (!r) {
      ++s.skipped;
      continue;
    }
    ++s.checks;
    const auto decomposition = branch_decompose(pair, *r, big);
    std::int64_t lhs = 0;
    for (const auto& [labels, mult] : decomposition) {
      std::int64_t d = 1;
      for (const auto& l : labels) d = checked_mul(d, dim_irrep(l));
      lhs = checked_add(lhs, checked_mul(static_cast<std::int64_t>(mult), d));
    }
    std::int64_t rhs = 1;
    const auto g = big_factors(pair, *r);
    for (std::size_t i = 0; i < big.size(); ++i) rhs = checked_mul(rhs, dim_irrep(detail::make_label(g[i], big[i])));
    if (lhs != rhs && s.failures++ == 0) {
      std::string text = std::string(pair_id(pair)) + " n=" + std::to_string(r->n) + " big=";
      for (std::size_t i = 0; i < big.size(); ++i) text += (i ? "," : "") + to_string(detail::make_label(g[i], big[i]));
      s.first_failure = text + ": sum " + std::to_string(lhs) + " != dim " + std::to_string(rhs);
    }
  }
  return s;
}

/// The gl-diag sum does not involve p, q, r, s, so padding them can only
/// matter through the rank. This probe re-runs the oracle at the smallest rank
/// plus 4 (room for p, q, r, s each one larger) and compares with the formula.
/// Deviations are findings, not failures.
inline RuleSummary padding_probe(int max_size = 3) {
  RuleSummary s;
  s.pair = Pair::GLDiagonal;
  for (const auto& [big, small] : label_grid(Pair::GLDiagonal, max_size)) {
    const auto minimal = minimal_oracle_query(Pair::GLDiagonal, big, small);
    if (!minimal) {
      ++s.skipped;
      continue;
    }
    const auto q = make_query(Pair::GLDiagonal, {minimal->ranks.n + 4, 0}, big, small);
    const Multiplicity formula = branching_multiplicity(*minimal);
    const std::int64_t oracle = oracle_multiplicity(q);
    ++s.cases;
    if (formula > 0) ++s.nonzero;
    if (oracle < 0 || static_cast<Multiplicity>(oracle) != formula) {
      if (s.mismatches++ == 0) {
        s.first_counterexample =
            describe(q) + ": formula " + std::to_string(formula) + ", oracle " + std::to_string(oracle);
      }
    }
  }
  return s;
}

struct DualitySummary {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const noexcept { return failures == 0; }
};

/// The graded-dimension sweeps at the default rank floors.
inline DualitySummary verify_dualities(int max_degree_gl = 8, int max_degree_howe = 6) {
  DualitySummary s;
  auto run = [&](DualityKind k, DualityRanks r, int d) {
    ++s.checks;
    const auto rep = duality_dim_report(k, r, d);
    if (!rep.holds() && s.failures++ == 0) {
      s.first_failure = std::string(duality_name(k)) + " ranks=(" + std::to_string(r.first) + "," +
                        std::to_string(r.second) + ") d=" + std::to_string(d) + ": " + std::to_string(rep.lhs) +
                        " != " + std::to_string(rep.rhs);
    }
  };
  for (int d = 0; d <= max_degree_gl; ++d) {
    for (int n = 1; n <= 4; ++n) {
      for (int p = 1; p <= 4; ++p) run(DualityKind::CauchyGL, {n, p}, d);
    }
    for (int k = 1; k <= 4; ++k) {
      run(DualityKind::SymSquare, {k, 0}, d);
      run(DualityKind::WedgeSquare, {k, 0}, d);
    }
  }
  for (int d = 0; d <= max_degree_howe; ++d) {
    for (int k = 1; k <= 2; ++k) {
      for (int n = 2 * k + 1; n <= 2 * k + 3; ++n) run(DualityKind::ODuality, {n, k}, d);
      for (int n = k; n <= k + 2; ++n) run(DualityKind::SpDuality, {n, k}, d);
    }
  }
  return s;
}

}  // namespace branchkit
