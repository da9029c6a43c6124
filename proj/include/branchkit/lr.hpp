#pragma once

// Littlewood-Richardson coefficients by counting LR skew tableaux.
//
// A tableau of shape outer/inner is filled cell by cell in reverse reading
// order (rows top to bottom, right to left inside a row). Every partial
// filling is checked immediately: rows weakly increase, columns strictly
// increase, and the word read so far must be a lattice word. Dead branches are
// cut at the first cell where one of these fails, so the work is proportional
// to the number of surviving prefixes rather than to all fillings.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "branchkit/errors.hpp"
#include "branchkit/partition.hpp"

namespace branchkit {

/// Partition -> positive multiplicity. Zero entries are never stored.
using ExpansionMap = std::map<Partition, Multiplicity>;

/// Cache key for c^outer_{left,right}; left <= right after canonicalization.
struct LRKey {
  Partition outer;
  Partition left;
  Partition right;

  static LRKey canonical(Partition outer, Partition a, Partition b) {
    if (b < a) std::swap(a, b);
    return LRKey{std::move(outer), std::move(a), std::move(b)};
  }

  friend bool operator==(const LRKey&, const LRKey&) = default;
};

struct LRKeyHash {
  std::size_t operator()(const LRKey& k) const noexcept {
    PartitionHash h;
    std::size_t seed = h(k.outer);
    seed ^= h(k.left) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    seed ^= h(k.right) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    return seed;
  }
};

namespace detail {

class LRTableauWalker {
 public:
  LRTableauWalker(const Partition& outer, const Partition& inner, const Partition* content)
      : outer_(outer), inner_(inner), content_(content) {
    for (int r = 0; r < outer.length(); ++r) {
      const int lo = inner[static_cast<std::size_t>(r)];
      const int hi = outer[static_cast<std::size_t>(r)];
      for (int c = hi - 1; c >= lo; --c) cells_.push_back({r, c});
    }
    grid_.resize(static_cast<std::size_t>(outer.length()));
    for (int r = 0; r < outer.length(); ++r) {
      grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer[static_cast<std::size_t>(r)]), 0);
    }
    counts_.assign(static_cast<std::size_t>(outer.length()) + 2, 0);
  }

  /// Number of completed tableaux (respecting the content if one was given).
  Multiplicity count() {
    Multiplicity total = 0;
    walk(0, [&] { total = checked_add(total, Multiplicity{1}); });
    return total;
  }

  /// Content of every completed tableau, with multiplicity.
  ExpansionMap contents() {
    ExpansionMap out;
    walk(0, [&] {
      std::vector<int> c;
      for (std::size_t k = 1; k < counts_.size() && counts_[k] > 0; ++k) c.push_back(counts_[k]);
      auto& slot = out[Partition(std::move(c))];
      slot = checked_add(slot, Multiplicity{1});
    });
    return out;
  }

 private:
  struct Cell {
    int row;
    int col;
  };

  template <class OnLeaf>
  void walk(std::size_t index, OnLeaf&& on_leaf) {
    if (index == cells_.size()) {
      on_leaf();
      return;
    }
    const auto [r, c] = cells_[index];
    const auto ru = static_cast<std::size_t>(r);
    const auto cu = static_cast<std::size_t>(c);
    int lo = 1;
    int hi = r + 1;
    if (c + 1 < outer_[ru]) hi = std::min(hi, grid_[ru][cu + 1]);
    if (r > 0 && c >= inner_[ru - 1]) lo = grid_[ru - 1][cu] + 1;
    for (int letter = lo; letter <= hi; ++letter) {
      const auto k = static_cast<std::size_t>(letter);
      if (letter > 1 && counts_[k] + 1 > counts_[k - 1]) continue;
      if (content_ && counts_[k] + 1 > (*content_)[k - 1]) continue;
      grid_[ru][cu] = letter;
      ++counts_[k];
      walk(index + 1, on_leaf);
      --counts_[k];
    }
    grid_[ru][cu] = 0;
  }

  const Partition& outer_;
  const Partition& inner_;
  const Partition* content_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> counts_;
};

/// Uncached tableau count for c^outer_{inner,content}; no symmetry folding.
inline Multiplicity count_lr_tableaux(const Partition& outer, const Partition& inner, const Partition& content) {
  if (outer.size() != inner.size() + content.size()) return 0;
  if (!contains(outer, inner) || !contains(outer, content)) return 0;
  return LRTableauWalker(outer, inner, &content).count();
}

/// Uncached skew expansion.
inline ExpansionMap lr_skew_contents(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return {};
  return LRTableauWalker(outer, inner, nullptr).contents();
}

struct SkewKeyHash {
  std::size_t operator()(const std::pair<Partition, Partition>& k) const noexcept {
    PartitionHash h;
    std::size_t seed = h(k.first);
    return seed ^ (h(k.second) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
  }
};

}  // namespace detail

/// Process-wide memo for LR data. Reads take a shared lock; inserts an
/// exclusive one. Values are pure functions of their keys, so a race between
/// two writers of the same key is harmless.
class LRCache {
 public:
  std::optional<Multiplicity> find_coeff(const LRKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) return std::nullopt;
    return it->second;
  }

  void store_coeff(const LRKey& key, Multiplicity value) {
    std::unique_lock lock(mutex_);
    coeffs_.emplace(key, value);
  }

  std::optional<ExpansionMap> find_skew(const Partition& outer, const Partition& inner) const {
    std::shared_lock lock(mutex_);
    auto it = skews_.find({outer, inner});
    if (it == skews_.end()) return std::nullopt;
    return it->second;
  }

  void store_skew(const Partition& outer, const Partition& inner, ExpansionMap value) {
    std::unique_lock lock(mutex_);
    skews_.emplace(std::make_pair(outer, inner), std::move(value));
  }

  void clear() {
    std::unique_lock lock(mutex_);
    coeffs_.clear();
    skews_.clear();
  }

  std::size_t skew_entries() const {
    std::shared_lock lock(mutex_);
    return skews_.size();
  }

  /// Line-oriented dump of the skew expansions:
  ///   [outer]\t[inner]\t[nu]=c\t[nu]=c...
  void save(std::ostream& out) const {
    std::shared_lock lock(mutex_);
    std::vector<std::pair<Partition, Partition>> keys;
    keys.reserve(skews_.size());
    for (const auto& [key, value] : skews_) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    for (const auto& key : keys) {
      out << to_string(key.first) << '\t' << to_string(key.second);
      for (const auto& [nu, c] : skews_.at(key)) out << '\t' << to_string(nu) << '=' << c;
      out << '\n';
    }
  }

  /// Inverse of save(). Malformed lines raise ParseError.
  void load(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      std::vector<std::string> fields;
      std::stringstream ss(line);
      std::string field;
      while (std::getline(ss, field, '\t')) fields.push_back(field);
      if (fields.size() < 2) throw ParseError("cache line " + std::to_string(lineno) + ": too few fields");
      Partition outer = parse_partition(fields[0]);
      Partition inner = parse_partition(fields[1]);
      ExpansionMap value;
      for (std::size_t i = 2; i < fields.size(); ++i) {
        auto eq = fields[i].find('=');
        if (eq == std::string::npos) throw ParseError("cache line " + std::to_string(lineno) + ": missing '='");
        Partition nu = parse_partition(fields[i].substr(0, eq));
        Multiplicity c = 0;
        try {
          c = std::stoull(fields[i].substr(eq + 1));
        } catch (const std::exception&) {
          throw ParseError("cache line " + std::to_string(lineno) + ": bad count");
        }
        if (c > 0) value.emplace(std::move(nu), c);
      }
      store_skew(outer, inner, std::move(value));
    }
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<LRKey, Multiplicity, LRKeyHash> coeffs_;
  std::unordered_map<std::pair<Partition, Partition>, ExpansionMap, detail::SkewKeyHash> skews_;
};

inline LRCache& lr_cache() {
  static LRCache cache;
  return cache;
}

/// {nu -> c^outer_{inner,nu} : c > 0}. Empty when inner is not contained in outer.
inline ExpansionMap skew_expand(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return {};
  auto& cache = lr_cache();
  if (auto hit = cache.find_skew(outer, inner)) return *hit;
  ExpansionMap value = detail::lr_skew_contents(outer, inner);
  cache.store_skew(outer, inner, value);
  return value;
}

/// c^lambda_{mu,nu}.
inline Multiplicity lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() + nu.size()) return 0;
  if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
  if (mu.empty()) return nu == lambda ? 1 : 0;
  if (nu.empty()) return mu == lambda ? 1 : 0;
  LRKey key = LRKey::canonical(lambda, mu, nu);
  auto& cache = lr_cache();
  if (auto hit = cache.find_coeff(key)) return *hit;
  // The skew expansion of the larger inner shape is the cheaper one to walk.
  const Partition& inner = key.right;
  const Partition& content = key.left;
  ExpansionMap skew = skew_expand(lambda, inner);
  auto it = skew.find(content);
  Multiplicity value = it == skew.end() ? 0 : it->second;
  cache.store_coeff(key, value);
  return value;
}

/// {lambda -> c^lambda_{mu,nu} : c > 0, l(lambda) <= max_length}; a negative
/// max_length means unbounded.
inline ExpansionMap tensor_expand(const Partition& mu, const Partition& nu, int max_length = -1) {
  ExpansionMap out;
  const int total = mu.size() + nu.size();
  int length_cap = mu.length() + nu.length();
  if (max_length >= 0) length_cap = std::min(length_cap, max_length);
  const int first_cap = mu[0] + nu[0];
  std::vector<int> current;
  auto floor_at = [&](int row) {
    return std::max(mu[static_cast<std::size_t>(row)], nu[static_cast<std::size_t>(row)]);
  };
  // Rows below `row` must still be able to hold their mandatory boxes.
  std::vector<int> tail_floor(static_cast<std::size_t>(length_cap) + 2, 0);
  for (int r = length_cap - 1; r >= 0; --r) {
    tail_floor[static_cast<std::size_t>(r)] = tail_floor[static_cast<std::size_t>(r) + 1] + floor_at(r);
  }
  if (std::max(mu.length(), nu.length()) > length_cap) return out;

  auto rec = [&](auto&& self, int row, int remaining) -> void {
    if (remaining == 0) {
      if (row < std::max(mu.length(), nu.length())) return;
      Partition lambda(current);
      if (Multiplicity c = lr_coeff(lambda, mu, nu); c > 0) out.emplace(std::move(lambda), c);
      return;
    }
    if (row >= length_cap) return;
    const int upper = std::min(remaining - tail_floor[static_cast<std::size_t>(row) + 1],
                               row == 0 ? first_cap : current.back());
    for (int part = upper; part >= std::max(floor_at(row), 1); --part) {
      current.push_back(part);
      self(self, row + 1, remaining - part);
      current.pop_back();
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace branchkit
