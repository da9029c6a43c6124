#pragma once

// Graded-dimension identities for the classical Howe dualities. Each side of
// an identity is computed separately: the left side is a binomial count of
// monomials, the right side a sum of Weyl dimensions.

#include <cstdint>
#include <string>
#include <string_view>

#include "branchkit/errors.hpp"
#include "branchkit/labels.hpp"
#include "branchkit/oracle.hpp"
#include "branchkit/partition.hpp"
#include "branchkit/weyl.hpp"

namespace branchkit {

enum class DualityKind { CauchyGL, SymSquare, WedgeSquare, ODuality, SpDuality };

inline std::string_view duality_name(DualityKind k) {
  switch (k) {
    case DualityKind::CauchyGL: return "cauchy_gl";
    case DualityKind::SymSquare: return "sym_square";
    case DualityKind::WedgeSquare: return "wedge_square";
    case DualityKind::ODuality: return "o_duality";
    case DualityKind::SpDuality: return "sp_duality";
  }
  return "?";
}

/// Meaning of the ranks per kind:
///   cauchy_gl    GL_n x GL_p on S(C^n (x) C^p)
///   sym_square   k = first, on S(S^2 C^k)
///   wedge_square k = first, on S(wedge^2 C^k)
///   o_duality    O_n x GL_k on S(C^n (x) C^k), n = first, k = second
///   sp_duality   Sp_2n x GL_k on S(C^2n (x) C^k), n = first, k = second
struct DualityRanks {
  int first = 0;
  int second = 0;
};

struct DualityReport {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const noexcept { return lhs == rhs; }
};

namespace detail {

/// C(n + d - 1, d): dimension of S^d of an n-dimensional space.
inline std::int64_t sym_power_dim(std::int64_t n, int d) {
  if (d == 0) return 1;
  if (n <= 0) return 0;
  unsigned __int128 r = 1;
  for (int i = 1; i <= d; ++i) {
    r = r * static_cast<unsigned __int128>(n + i - 1) / static_cast<unsigned __int128>(i);
  }
  if (r > static_cast<unsigned __int128>(INT64_MAX)) throw OverflowError("binomial overflow");
  return static_cast<std::int64_t>(r);
}

inline std::int64_t gl_dim(int n, const Partition& p) {
  if (p.length() > n) return 0;
  return dim_irrep(RepLabel::gl(n, p));
}

}  // namespace detail

/// Both sides of the degree-d identity.
inline DualityReport duality_dim_report(DualityKind kind, DualityRanks r, int d) {
  using detail::gl_dim;
  using detail::sym_power_dim;
  DualityReport out;
  switch (kind) {
    case DualityKind::CauchyGL: {
      const int n = r.first, p = r.second;
      out.lhs = sym_power_dim(static_cast<std::int64_t>(n) * p, d);
      for (const auto& lambda : partitions_of(d)) {
        out.rhs = checked_add(out.rhs, checked_mul(gl_dim(n, lambda), gl_dim(p, lambda)));
      }
      break;
    }
    case DualityKind::SymSquare: {
      const int k = r.first;
      out.lhs = sym_power_dim(static_cast<std::int64_t>(k) * (k + 1) / 2, d);
      for (const auto& delta : partitions_of(d)) out.rhs = checked_add(out.rhs, gl_dim(k, double_rows(delta)));
      break;
    }
    case DualityKind::WedgeSquare: {
      const int k = r.first;
      out.lhs = sym_power_dim(static_cast<std::int64_t>(k) * (k - 1) / 2, d);
      for (const auto& delta : partitions_of(d)) out.rhs = checked_add(out.rhs, gl_dim(k, double_columns(delta)));
      break;
    }
    case DualityKind::ODuality:
    case DualityKind::SpDuality: {
      const int n = r.first, k = r.second;
      const bool orthogonal = kind == DualityKind::ODuality;
      if (orthogonal ? n < 2 * k + 1 : n < k) {
        throw StableRangeViolation(std::string(duality_name(kind)),
                                   orthogonal ? "n >= 2k+1 fails: n = " + std::to_string(n) + ", k = " + std::to_string(k)
                                              : "n >= k fails: n = " + std::to_string(n) + ", k = " + std::to_string(k));
      }
      const std::int64_t ambient = orthogonal ? static_cast<std::int64_t>(n) * k : 2LL * n * k;
      out.lhs = sym_power_dim(ambient, d);
      const std::int64_t invariant_space =
          orthogonal ? static_cast<std::int64_t>(k) * (k + 1) / 2 : static_cast<std::int64_t>(k) * (k - 1) / 2;
      for (int size = d % 2; size <= d; size += 2) {
        for (const auto& lambda : partitions_of(size, -1, k)) {
          const RepLabel big = orthogonal ? RepLabel::o(n, lambda) : RepLabel::sp(n, lambda);
          const std::int64_t term = checked_mul(checked_mul(dim_irrep(big), gl_dim(k, lambda)),
                                                sym_power_dim(invariant_space, (d - size) / 2));
          out.rhs = checked_add(out.rhs, term);
        }
      }
      break;
    }
  }
  return out;
}

inline bool duality_dim_check(DualityKind kind, DualityRanks r, int d) { return duality_dim_report(kind, r, d).holds(); }

}  // namespace branchkit
