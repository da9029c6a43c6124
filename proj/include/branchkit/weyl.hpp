#pragma once

// Root data, Weyl group actions and characters of the connected classical
// groups GL_n, Sp_2k, SO_2k+1 and SO_2k.
//
// Weights are integer vectors on the standard maximal torus. Where the Weyl
// vector is half-integral (type B) all computations use 2*rho, which is
// integral for every family.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "branchkit/errors.hpp"
#include "branchkit/laurent.hpp"

namespace branchkit {

using Weight = Exponent;

enum class GroupType { GL, SpRank, SOOdd, SOEven };

/// GL_rank, Sp_2rank, SO_2rank+1 or SO_2rank. torus_rank is the number of
/// torus coordinates; SO_1 is the only group allowed a zero-dimensional torus.
struct GroupSpec {
  GroupType type;
  int torus_rank;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

inline std::string to_string(const GroupSpec& g) {
  switch (g.type) {
    case GroupType::GL: return "GL_" + std::to_string(g.torus_rank);
    case GroupType::SpRank: return "Sp_" + std::to_string(2 * g.torus_rank);
    case GroupType::SOOdd: return "SO_" + std::to_string(2 * g.torus_rank + 1);
    case GroupType::SOEven: return "SO_" + std::to_string(2 * g.torus_rank);
  }
  return "?";
}

inline std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out + ")";
}

namespace weyl {

inline std::size_t dim(const GroupSpec& g) { return static_cast<std::size_t>(g.torus_rank); }

inline std::vector<Weight> positive_roots(const GroupSpec& g) {
  const int k = g.torus_rank;
  std::vector<Weight> roots;
  auto unit = [&](int i, int a, int j = -1, int b = 0) {
    Weight w(static_cast<std::size_t>(k), 0);
    w[static_cast<std::size_t>(i)] += a;
    if (j >= 0) w[static_cast<std::size_t>(j)] += b;
    return w;
  };
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      roots.push_back(unit(i, 1, j, -1));
      if (g.type != GroupType::GL) roots.push_back(unit(i, 1, j, 1));
    }
    if (g.type == GroupType::SOOdd) roots.push_back(unit(i, 1));
    if (g.type == GroupType::SpRank) roots.push_back(unit(i, 2));
  }
  return roots;
}

/// Twice the Weyl vector. For GL_n the central shift (n-1, ..., 0) is used;
/// it changes nothing that depends only on root pairings.
inline Weight two_rho(const GroupSpec& g) {
  const int k = g.torus_rank;
  Weight r(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    switch (g.type) {
      case GroupType::GL: r[static_cast<std::size_t>(i)] = 2 * (k - 1 - i); break;
      case GroupType::SOOdd: r[static_cast<std::size_t>(i)] = 2 * (k - i) - 1; break;
      case GroupType::SpRank: r[static_cast<std::size_t>(i)] = 2 * (k - i); break;
      case GroupType::SOEven: r[static_cast<std::size_t>(i)] = 2 * (k - 1 - i); break;
    }
  }
  return r;
}

inline long inner(const Weight& a, const Weight& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

inline bool is_dominant(const GroupSpec& g, const Weight& w) {
  if (w.size() != dim(g)) return false;
  const std::size_t k = w.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (w[i] < w[i + 1]) return false;
  }
  if (k == 0) return true;
  switch (g.type) {
    case GroupType::GL: return true;
    case GroupType::SpRank:
    case GroupType::SOOdd: return w[k - 1] >= 0;
    case GroupType::SOEven: return k < 2 || w[k - 2] >= std::abs(w[k - 1]);
  }
  return false;
}

inline void require_dominant(const GroupSpec& g, const Weight& w) {
  if (w.size() != dim(g)) {
    throw NotDominant("weight " + to_string(w) + " has wrong length for " + to_string(g));
  }
  if (!is_dominant(g, w)) throw NotDominant("weight " + to_string(w) + " is not dominant for " + to_string(g));
}

/// The dominant weight in the Weyl orbit of w.
inline Weight dominant_representative(const GroupSpec& g, Weight w) {
  if (g.type == GroupType::GL) {
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
  }
  int negatives = 0;
  bool has_zero = false;
  for (int& x : w) {
    if (x < 0) {
      ++negatives;
      x = -x;
    }
    if (x == 0) has_zero = true;
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  if (g.type == GroupType::SOEven && negatives % 2 == 1 && !has_zero) w.back() = -w.back();
  return w;
}

/// Result of moving w + rho into the dominant chamber: the Weyl element's
/// sign and the dominant weight w' with w(w + rho) - rho = w'.
struct DotImage {
  int sign;
  Weight weight;
};

/// nullopt when w + rho lies on a wall (the alternating sum vanishes there).
inline std::optional<DotImage> dot_dominant(const GroupSpec& g, const Weight& w) {
  const Weight tr = two_rho(g);
  const std::size_t k = w.size();
  std::vector<int> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = 2 * w[i] + tr[i];
  int flips = 0;
  bool has_zero = false;
  if (g.type != GroupType::GL) {
    for (int& x : v) {
      if (x < 0) {
        ++flips;
        x = -x;
      }
      if (x == 0) has_zero = true;
    }
    if (has_zero && (g.type == GroupType::SpRank || g.type == GroupType::SOOdd)) return std::nullopt;
  }
  // Sort decreasing, counting inversions for the permutation sign.
  int inversions = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (v[i] == v[j]) return std::nullopt;
      if (v[i] < v[j]) ++inversions;
    }
  }
  std::sort(v.begin(), v.end(), std::greater<>());
  int sign = (inversions % 2) ? -1 : 1;
  if (g.type == GroupType::SOEven) {
    // Only even numbers of sign changes are available; the determinant of an
    // element of this Weyl group is the permutation sign alone.
    if (flips % 2 == 1 && !has_zero) v.back() = -v.back();
  } else if (g.type != GroupType::GL) {
    if (flips % 2) sign = -sign;
  }
  Weight out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = (v[i] - tr[i]) / 2;
  return DotImage{sign, std::move(out)};
}

/// Calls fn(weight) once for every element of the Weyl orbit of the dominant
/// weight d.
template <class Fn>
void for_each_orbit_element(const GroupSpec& g, const Weight& d, Fn&& fn) {
  if (g.type == GroupType::GL) {
    Weight w = d;
    std::sort(w.begin(), w.end());
    do {
      fn(static_cast<const Weight&>(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return;
  }
  Weight a = d;
  int base_negatives = 0;
  bool has_zero = false;
  for (int& x : a) {
    if (x < 0) {
      ++base_negatives;
      x = -x;
    }
    if (x == 0) has_zero = true;
  }
  const bool parity_locked = g.type == GroupType::SOEven && !has_zero;
  std::sort(a.begin(), a.end());
  Weight w(a.size());
  std::vector<std::size_t> nonzero;
  do {
    nonzero.clear();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != 0) nonzero.push_back(i);
    }
    const std::uint64_t masks = std::uint64_t{1} << nonzero.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      if (parity_locked && (std::popcount(mask) % 2) != (base_negatives % 2)) continue;
      w = a;
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if (mask & (std::uint64_t{1} << b)) w[nonzero[b]] = -w[nonzero[b]];
      }
      fn(static_cast<const Weight&>(w));
    }
  } while (std::next_permutation(a.begin(), a.end()));
}

/// Calls fn(perm, mask, det) for every Weyl group element, acting by
/// (w v)_i = (-1)^{mask_i} v_{perm_i}.
template <class Fn>
void for_each_weyl_element(const GroupSpec& g, Fn&& fn) {
  const std::size_t k = dim(g);
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    const int perm_sign = (inversions % 2) ? -1 : 1;
    if (g.type == GroupType::GL) {
      fn(perm, std::uint64_t{0}, perm_sign);
      continue;
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      const int parity = std::popcount(mask) % 2;
      if (g.type == GroupType::SOEven && parity) continue;
      fn(perm, mask, parity ? -perm_sign : perm_sign);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Weyl dimension formula: prod over positive roots of (lambda+rho, a)/(rho, a).
inline std::int64_t dimension(const GroupSpec& g, const Weight& lambda) {
  require_dominant(g, lambda);
  const Weight tr = two_rho(g);
  Weight shifted(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) shifted[i] = 2 * lambda[i] + tr[i];
  unsigned __int128 num = 1, den = 1;
  auto gcd128 = [](unsigned __int128 a, unsigned __int128 b) {
    while (b) {
      auto t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  for (const auto& alpha : positive_roots(g)) {
    const long top = inner(shifted, alpha);
    const long bottom = inner(tr, alpha);
    num *= static_cast<unsigned __int128>(top);
    den *= static_cast<unsigned __int128>(bottom);
    const auto d = gcd128(num, den);
    num /= d;
    den /= d;
    if (num > (static_cast<unsigned __int128>(1) << 100)) throw OverflowError("dimension overflow");
  }
  if (den != 1) throw std::logic_error("Weyl dimension formula produced a non-integer");
  if (num > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
    throw OverflowError("dimension exceeds 64 bits");
  }
  return static_cast<std::int64_t>(num);
}

/// Multiplicities of the dominant weights of the irreducible representation
/// with highest weight lambda, by Freudenthal's recursion. Ordered from the
/// highest weight down.
inline std::vector<std::pair<Weight, std::int64_t>> dominant_multiplicities(const GroupSpec& g,
                                                                            const Weight& lambda) {
  require_dominant(g, lambda);
  const auto roots = positive_roots(g);
  const Weight tr = two_rho(g);
  // Dominant weights of the module: closure of {lambda} under subtracting
  // positive roots while staying dominant.
  std::set<Weight> seen{lambda};
  std::vector<Weight> frontier{lambda};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (const auto& a : roots) {
        Weight x = w;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= a[i];
        if (is_dominant(g, x) && seen.insert(x).second) next.push_back(std::move(x));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Weight> order(seen.begin(), seen.end());
  // Decreasing pairing with 2rho puts every weight after all higher ones.
  std::stable_sort(order.begin(), order.end(),
                   [&](const Weight& a, const Weight& b) { return inner(a, tr) > inner(b, tr); });
  std::map<Weight, std::int64_t> mult;
  const long lambda_norm = inner(lambda, lambda);
  for (const auto& mu : order) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    Weight diff(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) diff[i] = lambda[i] - mu[i];
    const long denom = lambda_norm - inner(mu, mu) + inner(diff, tr);
    long numer = 0;
    for (const auto& a : roots) {
      Weight x = mu;
      while (true) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += a[i];
        auto it = mult.find(dominant_representative(g, x));
        if (it == mult.end()) break;
        numer += it->second * inner(x, a);
      }
    }
    if (denom <= 0 || (2 * numer) % denom != 0) {
      throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
    }
    mult[mu] = 2 * numer / denom;
  }
  std::vector<std::pair<Weight, std::int64_t>> out;
  for (const auto& mu : order) {
    if (mult[mu] > 0) out.emplace_back(mu, mult[mu]);
  }
  return out;
}

/// Weyl character formula: the alternating sum over W of x^{w(lambda+rho)-rho},
/// divided exactly by prod over positive roots of (1 - x^{-alpha}).
inline LaurentPoly weyl_character(const GroupSpec& g, const Weight& lambda) {
  require_dominant(g, lambda);
  const int k = g.torus_rank;
  const Weight tr = two_rho(g);
  Weight v(lambda.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 2 * lambda[i] + tr[i];
  LaurentPoly numerator(k);
  Weight e(static_cast<std::size_t>(k));
  for_each_weyl_element(g, [&](const std::vector<int>& perm, std::uint64_t mask, int det) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      int x = v[static_cast<std::size_t>(perm[i])];
      if (mask & (std::uint64_t{1} << i)) x = -x;
      e[i] = (x - tr[i]) / 2;
    }
    numerator.add_term(e, det);
  });
  LaurentPoly quotient = std::move(numerator);
  for (const auto& alpha : positive_roots(g)) {
    Weight step(alpha.size());
    for (std::size_t i = 0; i < step.size(); ++i) step[i] = -alpha[i];
    quotient = quotient.divide_by_binomial(step, tr);
  }
  return quotient;
}

}  // namespace weyl

/// Memoized Weyl character of an irreducible representation.
inline LaurentPoly irreducible_character(const GroupSpec& g, const Weight& weight) {
  static std::mutex mutex;
  static std::map<std::pair<GroupSpec, Weight>, LaurentPoly> memo;
  {
    std::lock_guard lock(mutex);
    auto it = memo.find({g, weight});
    if (it != memo.end()) return it->second;
  }
  LaurentPoly chi = weyl::weyl_character(g, weight);
  std::lock_guard lock(mutex);
  memo.emplace(std::make_pair(g, weight), chi);
  return chi;
}

}  // namespace branchkit
