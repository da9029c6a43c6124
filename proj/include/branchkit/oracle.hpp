#pragma once

// Brute-force branching multiplicities from characters alone.
//
// Nothing in this file touches Littlewood-Richardson coefficients. A
// G-representation is turned into its torus weights, the weights are pushed
// through the embedding of H's torus in G's, and the resulting H-character is
// split into irreducibles. Two routes are provided:
//
//   * the Laurent route builds full characters with the Weyl character formula,
//     restricts them by variable substitution and peels off irreducible
//     characters greedily from the lexicographically highest weight. It is
//     literal and exponential in the rank, so it is only used at small rank.
//
//   * the weight route gets dominant weight multiplicities from Freudenthal's
//     recursion, expands Weyl orbits, restricts weight by weight, and reads off
//     multiplicities with the Weyl alternation
//         [chi : V_eta] = sum_b m(b) sign(w_b) [w_b(b + rho) - rho = eta],
//     valid for any Weyl-invariant chi. This scales to the ranks the stable
//     range demands.
//
// O_n labels are handled through SO_n. That is faithful only when l(lambda) <
// n/2 (so E^lambda stays irreducible on SO_n) and when the associated label
// E^lambda (x) det cannot occur in the module being decomposed; see
// oracle_safety().

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "branchkit/errors.hpp"
#include "branchkit/labels.hpp"
#include "branchkit/laurent.hpp"
#include "branchkit/weyl.hpp"

namespace branchkit {

inline GroupSpec group_spec(Family f, int rank) {
  switch (f) {
    case Family::GL: return {GroupType::GL, rank};
    case Family::Sp: return {GroupType::SpRank, rank};
    case Family::O: return {rank % 2 ? GroupType::SOOdd : GroupType::SOEven, rank / 2};
  }
  return {GroupType::GL, rank};
}

/// Highest weight of the connected group attached to a label.
inline Weight label_weight(const RepLabel& l) {
  const GroupSpec g = group_spec(l.family(), l.rank());
  Weight w(static_cast<std::size_t>(g.torus_rank), 0);
  if (l.family() == Family::GL) {
    const auto& gl = l.gl_label();
    for (int i = 0; i < gl.plus.length(); ++i) w[static_cast<std::size_t>(i)] = gl.plus[static_cast<std::size_t>(i)];
    for (int i = 0; i < gl.minus.length(); ++i) {
      w[w.size() - 1 - static_cast<std::size_t>(i)] = -gl.minus[static_cast<std::size_t>(i)];
    }
    return w;
  }
  const auto& p = l.partition();
  if (l.family() == Family::O && 2 * p.length() >= l.rank()) {
    throw OutOfSafeRegime("O_" + std::to_string(l.rank()) + " label " + to_string(p) +
                          " needs l(lambda) < n/2 to be read through SO_n");
  }
  for (int i = 0; i < p.length(); ++i) w[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
  return w;
}

/// Dimension via the Weyl dimension formula on GL_n, Sp_2n or SO_n.
inline std::int64_t dim_irrep(const RepLabel& l) {
  const GroupSpec g = group_spec(l.family(), l.rank());
  const Weight w = label_weight(l);
  if (g.torus_rank == 0) return 1;
  return weyl::dimension(g, w);
}

/// Degree of the G-side module: the total number of boxes in its labels.
inline int big_degree(const BranchingQuery& q) {
  int d = 0;
  for (const auto& l : q.big) d += l.size();
  return d;
}

/// Reason the SO-based oracle cannot be trusted for q, or nullopt.
inline std::optional<std::string> oracle_safety(const BranchingQuery& q) {
  for (const auto& side : {&q.big, &q.small}) {
    for (const auto& l : *side) {
      if (l.family() == Family::O && 2 * l.partition().length() >= l.rank()) {
        return "O_" + std::to_string(l.rank()) + " label " + to_string(l.partition()) + " has l(lambda) >= n/2";
      }
    }
  }
  // E^eta (x) det has first column n - l(eta); it must be too big to occur in
  // a module of degree D.
  const int degree = big_degree(q);
  for (const auto& l : q.small) {
    if (l.family() != Family::O) continue;
    const auto& eta = l.partition();
    const int partner_size = eta.size() + l.rank() - 2 * eta.length();
    if (partner_size <= degree) {
      return "O_" + std::to_string(l.rank()) + " label " + to_string(eta) + " has associated label of size " +
             std::to_string(partner_size) + " <= module degree " + std::to_string(degree);
    }
  }
  return std::nullopt;
}

inline std::vector<GroupSpec> specs_of(const std::vector<GroupFactor>& factors) {
  std::vector<GroupSpec> out;
  for (const auto& f : factors) out.push_back(group_spec(f.family, f.rank));
  return out;
}

/// Pull a weight of G's torus back to H's torus (non-diagonal pairs). The
/// result concatenates the coordinates of H's factors.
inline Weight restrict_weight(Pair pair, Ranks ranks, const Weight& g) {
  switch (pair) {
    case Pair::GLSum:
    case Pair::SpSum:
    case Pair::GLInO:
    case Pair::GLInSp:
      // Direct sums concatenate tori; polarization identifies GL_n's torus
      // with the maximal torus of SO_2n or Sp_2n.
      return g;
    case Pair::OSum: {
      // For n and m both odd the big torus has one extra coordinate on which
      // the small torus acts trivially.
      const std::size_t k = static_cast<std::size_t>(ranks.n / 2 + ranks.m / 2);
      return Weight(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k));
    }
    case Pair::OInGL:
    case Pair::SpInGL: {
      // GL variables (x_1..x_k, [1,] x_k^-1..x_1^-1).
      const std::size_t n = g.size();
      Weight h(n / 2);
      for (std::size_t i = 0; i < h.size(); ++i) h[i] = g[i] - g[n - 1 - i];
      return h;
    }
    default: throw UnknownPair("restrict_weight: diagonal pairs restrict products, not single weights");
  }
}

/// Restriction of a character of G to H by substitution of torus variables.
/// For the diagonal pairs chi lives on (x, y) and is evaluated at y = x.
inline LaurentPoly restrict_character(const LaurentPoly& chi, Pair pair, Ranks ranks) {
  const auto h_specs = specs_of(small_factors(pair, ranks));
  int h_vars = 0;
  for (const auto& s : h_specs) h_vars += s.torus_rank;
  if (is_diagonal(pair)) {
    return chi.substitute(h_vars, [h_vars](const Exponent& e) {
      Exponent out(static_cast<std::size_t>(h_vars));
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = e[i] + e[i + out.size()];
      return out;
    });
  }
  return chi.substitute(h_vars, [&](const Exponent& e) { return restrict_weight(pair, ranks, e); });
}

namespace detail {

inline std::vector<Weight> split(const Weight& w, const std::vector<GroupSpec>& factors) {
  std::vector<Weight> parts;
  std::size_t at = 0;
  for (const auto& f : factors) {
    const auto k = static_cast<std::size_t>(f.torus_rank);
    parts.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(at), w.begin() + static_cast<std::ptrdiff_t>(at + k));
    at += k;
  }
  return parts;
}

inline LaurentPoly product_character(const std::vector<GroupSpec>& factors, const std::vector<Weight>& weights) {
  LaurentPoly chi = irreducible_character(factors[0], weights[0]);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    chi = LaurentPoly::outer_product(chi, irreducible_character(factors[i], weights[i]));
  }
  return chi;
}

}  // namespace detail

/// Greedy highest-weight subtraction over a product of groups. Keys are
/// concatenated dominant weights.
inline std::map<Weight, std::int64_t> decompose_character(LaurentPoly chi, const std::vector<GroupSpec>& factors) {
  std::map<Weight, std::int64_t> out;
  while (!chi.is_zero()) {
    const auto& [top, c] = *chi.terms().rbegin();
    const Weight w = top;
    const std::int64_t m = c;
    const auto parts = detail::split(w, factors);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (!weyl::is_dominant(factors[i], parts[i])) {
        throw NotACharacter("highest remaining weight " + to_string(w) + " is not dominant");
      }
    }
    if (m < 0) throw NotACharacter("negative multiplicity at weight " + to_string(w));
    out[w] = m;
    chi -= detail::product_character(factors, parts).scaled(m);
  }
  return out;
}

inline std::map<Weight, std::int64_t> decompose_character(const LaurentPoly& chi, const GroupSpec& g) {
  return decompose_character(chi, std::vector<GroupSpec>{g});
}

namespace detail {

/// All weights of V_lambda with multiplicity, via Freudenthal and orbits.
template <class Fn>
void for_each_weight(const GroupSpec& g, const Weight& lambda, Fn&& fn) {
  if (g.torus_rank == 0) {
    fn(Weight{}, std::int64_t{1});
    return;
  }
  for (const auto& [d, m] : weyl::dominant_multiplicities(g, lambda)) {
    weyl::for_each_orbit_element(g, d, [&](const Weight& w) { fn(w, m); });
  }
}

/// Moves a concatenated H weight into the dominant chamber of every factor.
inline std::optional<std::pair<int, Weight>> dot_dominant_product(const std::vector<GroupSpec>& factors,
                                                                  const Weight& w) {
  int sign = 1;
  Weight out;
  out.reserve(w.size());
  std::size_t at = 0;
  for (const auto& f : factors) {
    const auto k = static_cast<std::size_t>(f.torus_rank);
    Weight part(w.begin() + static_cast<std::ptrdiff_t>(at), w.begin() + static_cast<std::ptrdiff_t>(at + k));
    at += k;
    if (k == 0) continue;
    auto img = weyl::dot_dominant(f, part);
    if (!img) return std::nullopt;
    sign *= img->sign;
    out.insert(out.end(), img->weight.begin(), img->weight.end());
  }
  return std::make_pair(sign, std::move(out));
}

struct DecompositionKey {
  Pair pair;
  Ranks ranks;
  std::vector<Weight> big;
  friend auto operator<=>(const DecompositionKey&, const DecompositionKey&) = default;
};

}  // namespace detail

/// Full decomposition of the G-module named by `big` over H, by the weight
/// route. Keys are concatenated dominant H weights. Memoized.
inline std::map<Weight, std::int64_t> oracle_decomposition(Pair pair, Ranks ranks, const std::vector<RepLabel>& big) {
  static std::mutex mutex;
  static std::map<detail::DecompositionKey, std::map<Weight, std::int64_t>> memo;
  std::vector<Weight> big_weights;
  for (const auto& l : big) big_weights.push_back(label_weight(l));
  detail::DecompositionKey key{pair, ranks, big_weights};
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const auto h = specs_of(small_factors(pair, ranks));
  std::map<Weight, std::int64_t> acc;
  auto deposit = [&](const Weight& w, std::int64_t m) {
    auto img = detail::dot_dominant_product(h, w);
    if (!img) return;
    auto& slot = acc[img->second];
    slot = checked_add(slot, checked_mul(m, static_cast<std::int64_t>(img->first)));
  };
  if (is_diagonal(pair)) {
    // Tensor product: keep V_mu whole and let the weights of V_nu act on it.
    const Weight& mu = big_weights[0];
    const GroupSpec& g = h[0];
    Weight shifted(mu.size());
    detail::for_each_weight(g, big_weights[1], [&](const Weight& b, std::int64_t m) {
      for (std::size_t i = 0; i < mu.size(); ++i) shifted[i] = mu[i] + b[i];
      deposit(shifted, m);
    });
  } else {
    const GroupSpec g = group_spec(big[0].family(), big[0].rank());
    detail::for_each_weight(g, big_weights[0], [&](const Weight& b, std::int64_t m) {
      deposit(restrict_weight(pair, ranks, b), m);
    });
  }
  std::map<Weight, std::int64_t> out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw NotACharacter("negative multiplicity " + std::to_string(m) + " at " + to_string(w));
    if (m > 0) out.emplace(w, m);
  }
  std::lock_guard lock(mutex);
  memo.emplace(std::move(key), out);
  return out;
}

namespace detail {

inline Weight small_key(const BranchingQuery& q) {
  Weight key;
  for (const auto& l : q.small) {
    const Weight w = label_weight(l);
    key.insert(key.end(), w.begin(), w.end());
  }
  return key;
}

inline void require_safe(const BranchingQuery& q) {
  if (auto why = oracle_safety(q)) throw OutOfSafeRegime(*why);
}

}  // namespace detail

/// Multiplicity of q.small in q.big restricted to H, without any LR data.
inline std::int64_t oracle_multiplicity(const BranchingQuery& q) {
  detail::require_safe(q);
  const auto decomposition = oracle_decomposition(q.pair, q.ranks, q.big);
  auto it = decomposition.find(detail::small_key(q));
  return it == decomposition.end() ? 0 : it->second;
}

/// Same answer by the literal route: Weyl characters, substitution, greedy
/// subtraction. Exponential in the rank.
inline std::int64_t oracle_multiplicity_laurent(const BranchingQuery& q) {
  detail::require_safe(q);
  std::vector<GroupSpec> g_specs;
  std::vector<Weight> g_weights;
  for (const auto& l : q.big) {
    g_specs.push_back(group_spec(l.family(), l.rank()));
    g_weights.push_back(label_weight(l));
  }
  const LaurentPoly chi = detail::product_character(g_specs, g_weights);
  const LaurentPoly restricted = restrict_character(chi, q.pair, q.ranks);
  const auto decomposition = decompose_character(restricted, specs_of(small_factors(q.pair, q.ranks)));
  auto it = decomposition.find(detail::small_key(q));
  return it == decomposition.end() ? 0 : it->second;
}

}  // namespace branchkit
