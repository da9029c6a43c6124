#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "branchkit/errors.hpp"

namespace branchkit {

/// A weakly decreasing sequence of positive integers, stored without trailing
/// zeros. Equality and ordering are structural, so a Partition is usable as a
/// map key directly.
class Partition {
 public:
  Partition() = default;

  /// Accepts any weakly decreasing sequence of non-negative integers; zeros
  /// are dropped.
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw NotAPartition("negative part in partition");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw NotAPartition("parts must be weakly decreasing");
    }
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Part i (0-based); zero past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    // Graded first, then lexicographic: small partitions sort first.
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

inline std::string to_string(const Partition& p) {
  std::string out = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  out += ']';
  return out;
}

/// Parses "[3,2,1]", "3,2,1" or "[]". Zeros are accepted and dropped.
inline Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced bracket in partition '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  } else if (!body.empty() && body.back() == ']') {
    throw ParseError("unbalanced bracket in partition '" + std::string(text) + "'");
  }
  std::vector<int> parts;
  if (body.empty()) return Partition{};
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string_view token = trim(body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos));
    if (token.empty()) throw ParseError("empty token in partition '" + std::string(text) + "'");
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9') throw ParseError("malformed token '" + std::string(token) + "' in partition");
      if (value > 100000) throw ParseError("part too large in partition '" + std::string(text) + "'");
      value = value * 10 + (c - '0');
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw NotAPartition("'" + std::string(text) + "' is not weakly decreasing");
    }
  }
  return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(p[0]), 0);
  for (int part : p) {
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

/// (2d1, 2d2, ...): every row even.
inline Partition double_rows(const Partition& p) {
  std::vector<int> out(p.begin(), p.end());
  for (int& x : out) x *= 2;
  return Partition(std::move(out));
}

/// Every column length doubled; equivalently each row repeated twice.
inline Partition double_columns(const Partition& p) {
  std::vector<int> out;
  out.reserve(2 * p.parts().size());
  for (int part : p) {
    out.push_back(part);
    out.push_back(part);
  }
  return Partition(std::move(out));
}

inline bool is_even_rows(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
}

inline bool is_even_columns(const Partition& p) { return is_even_rows(conjugate(p)); }

/// mu_i <= lambda_i for every i.
inline bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i) {
    if (mu[static_cast<std::size_t>(i)] > lambda[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

/// Sum of the first two column lengths.
inline int first_two_columns(const Partition& p) {
  int c1 = 0, c2 = 0;
  for (int part : p) {
    if (part >= 1) ++c1;
    if (part >= 2) ++c2;
  }
  return c1 + c2;
}

/// All partitions of n, in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = -1, int max_length = -1) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (max_part < 0 || max_part > n) max_part = n;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int bound) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_length >= 0 && static_cast<int>(current.size()) >= max_length) return;
    for (int part = std::min(bound, remaining); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

/// All partitions of size at most n, smallest first.
inline std::vector<Partition> partitions_up_to(int n, int max_length = -1) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k, -1, max_length);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// All partitions mu with mu contained in lambda.
inline std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int row) {
    out.emplace_back(current);
    if (row >= lambda.length()) return;
    int bound = lambda[static_cast<std::size_t>(row)];
    if (row > 0) bound = std::min(bound, current.back());
    for (int part = 1; part <= bound; ++part) {
      current.push_back(part);
      rec(row + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Componentwise minimum of two partitions.
inline Partition intersection(const Partition& a, const Partition& b) {
  std::vector<int> out;
  for (int i = 0; i < std::min(a.length(), b.length()); ++i) {
    out.push_back(std::min(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
  }
  return Partition(std::move(out));
}

/// A rational GL_n highest weight (plus, minus): plus at the front, minus
/// negated and reversed at the back.
struct GLLabel {
  Partition plus;
  Partition minus;

  int size() const noexcept { return plus.size() + minus.size(); }
  bool polynomial() const noexcept { return minus.empty(); }
  bool valid_for_rank(int n) const noexcept { return plus.length() + minus.length() <= n; }

  friend bool operator==(const GLLabel&, const GLLabel&) = default;
  friend auto operator<=>(const GLLabel&, const GLLabel&) = default;
};

inline std::string to_string(const GLLabel& l) { return to_string(l.plus) + "/" + to_string(l.minus); }

/// "plus/minus" with the "/minus" suffix optional.
inline GLLabel parse_gl_label(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return GLLabel{parse_partition(text), {}};
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw ParseError("more than one '/' in label '" + std::string(text) + "'");
  }
  return GLLabel{parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1))};
}

/// Every rational GL label with total size at most n.
inline std::vector<GLLabel> gl_labels_up_to(int n) {
  std::vector<GLLabel> out;
  for (int total = 0; total <= n; ++total) {
    for (int a = total; a >= 0; --a) {
      for (const auto& plus : partitions_of(a)) {
        for (const auto& minus : partitions_of(total - a)) out.push_back(GLLabel{plus, minus});
      }
    }
  }
  return out;
}

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace branchkit
