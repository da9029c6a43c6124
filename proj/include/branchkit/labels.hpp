#pragma once

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "branchkit/errors.hpp"
#include "branchkit/partition.hpp"

namespace branchkit {

enum class Family { GL, O, Sp };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::O: return "O";
    case Family::Sp: return "Sp";
  }
  return "?";
}

/// Irreducible representation of GL_n, O_n or Sp_2n. `rank` is n in all three
/// cases, so Sp_2n carries rank n.
class RepLabel {
 public:
  static RepLabel gl(int n, GLLabel label) { return RepLabel(Family::GL, n, std::move(label)); }
  static RepLabel gl(int n, Partition plus, Partition minus = {}) {
    return gl(n, GLLabel{std::move(plus), std::move(minus)});
  }
  static RepLabel o(int n, Partition p) { return RepLabel(Family::O, n, std::move(p)); }
  static RepLabel sp(int n, Partition p) { return RepLabel(Family::Sp, n, std::move(p)); }

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }

  const GLLabel& gl_label() const { return std::get<GLLabel>(data_); }
  const Partition& partition() const { return std::get<Partition>(data_); }

  /// |plus| + |minus| for GL, |lambda| otherwise.
  int size() const { return family_ == Family::GL ? gl_label().size() : partition().size(); }

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
  friend auto operator<=>(const RepLabel& a, const RepLabel& b) {
    if (auto c = a.family_ <=> b.family_; c != 0) return c;
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  RepLabel(Family f, int rank, std::variant<GLLabel, Partition> data)
      : family_(f), rank_(rank), data_(std::move(data)) {
    if (rank_ < 1) throw InvalidLabel("rank must be positive");
    switch (family_) {
      case Family::GL:
        if (!gl_label().valid_for_rank(rank_)) {
          throw InvalidLabel("GL_" + std::to_string(rank_) + " label " + to_string(gl_label()) +
                             " needs l(plus) + l(minus) <= " + std::to_string(rank_));
        }
        break;
      case Family::O:
        if (first_two_columns(partition()) > rank_) {
          throw InvalidLabel("O_" + std::to_string(rank_) + " label " + to_string(partition()) +
                             " has first two columns summing past " + std::to_string(rank_));
        }
        break;
      case Family::Sp:
        if (partition().length() > rank_) {
          throw InvalidLabel("Sp_" + std::to_string(2 * rank_) + " label " + to_string(partition()) +
                             " has more than " + std::to_string(rank_) + " parts");
        }
        break;
    }
  }

  Family family_;
  int rank_;
  std::variant<GLLabel, Partition> data_;
};

inline std::string to_string(const RepLabel& l) {
  return l.family() == Family::GL ? to_string(l.gl_label()) : to_string(l.partition());
}

inline std::string group_name(Family f, int rank) {
  switch (f) {
    case Family::GL: return "GL_" + std::to_string(rank);
    case Family::O: return "O_" + std::to_string(rank);
    case Family::Sp: return "Sp_" + std::to_string(2 * rank);
  }
  return "?";
}

/// The ten symmetric pairs (H, G).
enum class Pair {
  GLDiagonal,      // GL_n in GL_n x GL_n
  ODiagonal,       // O_n in O_n x O_n
  SpDiagonal,      // Sp_2n in Sp_2n x Sp_2n
  GLSum,           // GL_n x GL_m in GL_{n+m}
  OSum,            // O_n x O_m in O_{n+m}
  SpSum,           // Sp_2n x Sp_2m in Sp_2(n+m)
  GLInO,           // GL_n in O_2n
  GLInSp,          // GL_n in Sp_2n
  OInGL,           // O_n in GL_n
  SpInGL,          // Sp_2n in GL_2n
};

inline constexpr std::array<Pair, 10> all_pairs{Pair::GLDiagonal, Pair::ODiagonal, Pair::SpDiagonal,
                                                 Pair::GLSum,      Pair::OSum,      Pair::SpSum,
                                                 Pair::GLInO,      Pair::GLInSp,    Pair::OInGL,
                                                 Pair::SpInGL};

inline std::string_view pair_id(Pair p) {
  switch (p) {
    case Pair::GLDiagonal: return "gl-diag";
    case Pair::ODiagonal: return "o-diag";
    case Pair::SpDiagonal: return "sp-diag";
    case Pair::GLSum: return "gl-sum";
    case Pair::OSum: return "o-sum";
    case Pair::SpSum: return "sp-sum";
    case Pair::GLInO: return "gl-in-o";
    case Pair::GLInSp: return "gl-in-sp";
    case Pair::OInGL: return "o-in-gl";
    case Pair::SpInGL: return "sp-in-gl";
  }
  return "?";
}

inline Pair parse_pair(std::string_view id) {
  for (Pair p : all_pairs) {
    if (pair_id(p) == id) return p;
  }
  throw UnknownPair("unknown pair identifier '" + std::string(id) + "'");
}

inline bool is_diagonal(Pair p) {
  return p == Pair::GLDiagonal || p == Pair::ODiagonal || p == Pair::SpDiagonal;
}
inline bool is_direct_sum(Pair p) { return p == Pair::GLSum || p == Pair::OSum || p == Pair::SpSum; }

/// Rank parameters of a pair: n always, m only for the direct-sum pairs.
struct Ranks {
  int n = 0;
  int m = 0;
  friend bool operator==(const Ranks&, const Ranks&) = default;
  friend auto operator<=>(const Ranks&, const Ranks&) = default;
};

struct GroupFactor {
  Family family;
  int rank;
};

/// Factors of G for the pair, in the order the labels of `big` are given.
inline std::vector<GroupFactor> big_factors(Pair p, Ranks r) {
  switch (p) {
    case Pair::GLDiagonal: return {{Family::GL, r.n}, {Family::GL, r.n}};
    case Pair::ODiagonal: return {{Family::O, r.n}, {Family::O, r.n}};
    case Pair::SpDiagonal: return {{Family::Sp, r.n}, {Family::Sp, r.n}};
    case Pair::GLSum: return {{Family::GL, r.n + r.m}};
    case Pair::OSum: return {{Family::O, r.n + r.m}};
    case Pair::SpSum: return {{Family::Sp, r.n + r.m}};
    case Pair::GLInO: return {{Family::O, 2 * r.n}};
    case Pair::GLInSp: return {{Family::Sp, r.n}};
    case Pair::OInGL: return {{Family::GL, r.n}};
    case Pair::SpInGL: return {{Family::GL, 2 * r.n}};
  }
  return {};
}

/// Factors of H for the pair, in the order the labels of `small` are given.
inline std::vector<GroupFactor> small_factors(Pair p, Ranks r) {
  switch (p) {
    case Pair::GLDiagonal: return {{Family::GL, r.n}};
    case Pair::ODiagonal: return {{Family::O, r.n}};
    case Pair::SpDiagonal: return {{Family::Sp, r.n}};
    case Pair::GLSum: return {{Family::GL, r.n}, {Family::GL, r.m}};
    case Pair::OSum: return {{Family::O, r.n}, {Family::O, r.m}};
    case Pair::SpSum: return {{Family::Sp, r.n}, {Family::Sp, r.m}};
    case Pair::GLInO: return {{Family::GL, r.n}};
    case Pair::GLInSp: return {{Family::GL, r.n}};
    case Pair::OInGL: return {{Family::O, r.n}};
    case Pair::SpInGL: return {{Family::Sp, r.n}};
  }
  return {};
}

/// Multiplicity question [G-representation : H-representation] for one pair.
///
/// `big` is the representation of G: one label, or the two tensor factors
/// (mu, nu) for the diagonal pairs. `small` is the representation of H: one
/// label, or the two factors for the direct-sum pairs.
struct BranchingQuery {
  Pair pair;
  Ranks ranks;
  std::vector<RepLabel> big;
  std::vector<RepLabel> small;
};

namespace detail {

inline RepLabel make_label(GroupFactor f, const std::variant<GLLabel, Partition>& data) {
  if (f.family == Family::GL) {
    if (const auto* gl = std::get_if<GLLabel>(&data)) return RepLabel::gl(f.rank, *gl);
    return RepLabel::gl(f.rank, std::get<Partition>(data));
  }
  if (std::holds_alternative<GLLabel>(data)) {
    const auto& gl = std::get<GLLabel>(data);
    if (!gl.minus.empty()) throw InvalidLabel(std::string(family_name(f.family)) + " labels take a single partition");
    return f.family == Family::O ? RepLabel::o(f.rank, gl.plus) : RepLabel::sp(f.rank, gl.plus);
  }
  const auto& p = std::get<Partition>(data);
  return f.family == Family::O ? RepLabel::o(f.rank, p) : RepLabel::sp(f.rank, p);
}

}  // namespace detail

using LabelData = std::variant<GLLabel, Partition>;

/// Builds labels of the right family and rank for each side of the pair.
inline BranchingQuery make_query(Pair p, Ranks r, const std::vector<LabelData>& big,
                                 const std::vector<LabelData>& small) {
  if (r.n < 1) throw InvalidLabel("rank n must be positive");
  if (is_direct_sum(p) && r.m < 1) throw InvalidLabel("rank m must be positive for " + std::string(pair_id(p)));
  const auto gf = big_factors(p, r);
  const auto hf = small_factors(p, r);
  if (big.size() != gf.size()) {
    throw InvalidLabel(std::string(pair_id(p)) + " expects " + std::to_string(gf.size()) + " label(s) on the G side");
  }
  if (small.size() != hf.size()) {
    throw InvalidLabel(std::string(pair_id(p)) + " expects " + std::to_string(hf.size()) + " label(s) on the H side");
  }
  BranchingQuery q{p, r, {}, {}};
  for (std::size_t i = 0; i < big.size(); ++i) q.big.push_back(detail::make_label(gf[i], big[i]));
  for (std::size_t i = 0; i < small.size(); ++i) q.small.push_back(detail::make_label(hf[i], small[i]));
  return q;
}

}  // namespace branchkit
