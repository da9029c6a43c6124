// Acceptance suite. Prints one PASS/FAIL line per criterion, with detail lines
// indented below it, and exits non-zero if any blocking criterion fails.
// Every comparison is exact integer equality; there is no tolerance.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "branchkit/branchkit.hpp"

using namespace branchkit;

namespace {

struct Verdict {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

void report(int id, const std::string& name, const Verdict& v, double seconds, bool blocking = true) {
  const char* tag = v.pass ? "PASS" : (blocking ? "FAIL" : "FINDING");
  std::printf("[%s] %d %s: %s (%.1fs)\n", tag, id, name.c_str(), v.summary.c_str(), seconds);
  for (const auto& d : v.details) std::printf("    %s\n", d.c_str());
  std::fflush(stdout);
}

template <class Fn>
Verdict timed(double& seconds, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = fn();
  } catch (const std::exception& e) {
    v.pass = false;
    v.summary = std::string("exception: ") + e.what();
  }
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

Verdict formula_vs_oracle() {
  Verdict v;
  std::size_t cases = 0, mismatches = 0;
  for (Pair p : all_pairs) {
    const int size = p == Pair::GLDiagonal ? 4 : 5;
    const auto s = verify_rule(p, size);
    cases += s.cases;
    mismatches += s.mismatches;
    std::ostringstream line;
    line << pair_id(p) << " (labels <= " << size << "): " << s.cases << " cases, " << s.nonzero << " nonzero, "
         << s.skipped << " skipped, " << s.mismatches << " mismatches";
    if (!s.passed()) line << "; first: " << s.first_counterexample;
    v.details.push_back(line.str());
    if (!s.passed() || s.skipped > 0 || s.cases == 0) v.pass = false;
  }
  v.summary = std::to_string(cases) + " cases over 10 rules, " + std::to_string(mismatches) + " mismatches";
  return v;
}

Verdict littlewood_consistency() {
  Verdict v;
  std::size_t checks = 0, failures = 0;
  for (const auto& l : partitions_up_to(6)) {
    for (const auto& mu : partitions_up_to(6)) {
      const int floor = 2 * std::max({l.size(), mu.size(), 1});
      for (int n = floor; n <= floor + 1; ++n) {
        for (Family f : {Family::O, Family::Sp}) {
          const Pair pair = f == Family::O ? Pair::OInGL : Pair::SpInGL;
          const auto q = make_query(pair, {n, 0}, {GLLabel{l, {}}}, {mu});
          const Multiplicity a = littlewood_restriction(l, mu, f, n);
          const Multiplicity b = bilinear_multiplicity(q);
          ++checks;
          if (a != b && failures++ == 0) {
            v.details.push_back("first: " + describe(q) + ": littlewood " + std::to_string(a) + ", bilinear " +
                                std::to_string(b));
          }
        }
      }
    }
  }
  v.pass = failures == 0;
  v.summary = std::to_string(checks) + " comparisons, " + std::to_string(failures) + " differences";
  return v;
}

Verdict lr_properties() {
  Verdict v;
  std::size_t triples = 0, failures = 0;
  for (const auto& l : partitions_up_to(10)) {
    const Partition lc = conjugate(l);
    for (const auto& mu : subpartitions(l)) {
      const auto support = skew_expand(l, mu);
      for (const auto& nu : partitions_of(l.size() - mu.size())) {
        if (!contains(l, nu)) continue;
        auto it = support.find(nu);
        const Multiplicity c = it == support.end() ? 0 : it->second;
        const Multiplicity swapped = detail::count_lr_tableaux(l, nu, mu);
        const Multiplicity conj = detail::count_lr_tableaux(lc, conjugate(mu), conjugate(nu));
        ++triples;
        if ((c != swapped || c != conj) && failures++ == 0) {
          v.details.push_back("first: lambda=" + to_string(l) + " mu=" + to_string(mu) + " nu=" + to_string(nu));
        }
      }
    }
  }
  v.details.push_back("symmetry and conjugation, |lambda| <= 10: " + std::to_string(triples) + " triples, " +
                      std::to_string(failures) + " failures");

  const GroupSpec g{GroupType::GL, 4};
  auto weight = [](const Partition& p) {
    Weight w(4, 0);
    for (int i = 0; i < p.length(); ++i) w[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
    return w;
  };
  std::size_t products = 0, product_failures = 0;
  for (const auto& mu : partitions_up_to(8, 4)) {
    for (const auto& nu : partitions_up_to(8 - mu.size(), 4)) {
      const auto chi = irreducible_character(g, weight(mu)) * irreducible_character(g, weight(nu));
      std::map<Weight, std::int64_t> expected;
      for (const auto& [l, c] : tensor_expand(mu, nu, 4)) expected[weight(l)] = static_cast<std::int64_t>(c);
      ++products;
      if (decompose_character(chi, g) != expected && product_failures++ == 0) {
        v.details.push_back("first product mismatch: " + to_string(mu) + " * " + to_string(nu));
      }
    }
  }
  v.details.push_back("tensor_expand vs Schur products in 4 variables, |mu|+|nu| <= 8: " + std::to_string(products) +
                      " products, " + std::to_string(product_failures) + " failures");
  v.pass = failures == 0 && product_failures == 0;
  v.summary = std::to_string(triples + products) + " checks, " + std::to_string(failures + product_failures) +
              " failures";
  return v;
}

Verdict dualities() {
  Verdict v;
  const auto s = verify_dualities(8, 8);
  v.pass = s.passed();
  v.summary = std::to_string(s.checks) + " degree checks, " + std::to_string(s.failures) + " failures";
  v.details.push_back(
      "cauchy_gl n,p <= 4; sym/wedge_square k <= 4; all d <= 8. o_duality k <= 2, n = 2k+1..2k+3; "
      "sp_duality k <= 2, n = k..k+2; d <= 8");
  if (!s.passed()) v.details.push_back("first: " + s.first_failure);
  return v;
}

Verdict conservation() {
  Verdict v;
  std::size_t checks = 0, failures = 0;
  for (Pair p : all_pairs) {
    const auto s = verify_conservation(p, 4);
    checks += s.checks;
    failures += s.failures;
    std::string line = std::string(pair_id(p)) + ": " + std::to_string(s.checks) + " G labels, " +
                       std::to_string(s.skipped) + " skipped, " + std::to_string(s.failures) + " failures";
    if (!s.passed()) line += "; first: " + s.first_failure;
    v.details.push_back(line);
    if (!s.passed() || s.skipped > 0) v.pass = false;
  }
  v.summary = std::to_string(checks) + " decompositions, " + std::to_string(failures) + " failures";
  return v;
}

Verdict oracle_self_checks() {
  Verdict v;
  std::size_t weights = 0, failures = 0;
  for (int k = 1; k <= 3; ++k) {
    std::vector<GroupSpec> groups{{GroupType::GL, k}, {GroupType::SpRank, k}, {GroupType::SOOdd, k}};
    if (k >= 2) groups.push_back({GroupType::SOEven, k});
    for (const auto& g : groups) {
      std::vector<Weight> ws;
      if (g.type == GroupType::GL) {
        for (const auto& l : gl_labels_up_to(4)) {
          if (l.plus.length() + l.minus.length() <= k) ws.push_back(label_weight(RepLabel::gl(k, l)));
        }
      } else {
        for (const auto& p : partitions_up_to(4, k)) {
          Weight w(static_cast<std::size_t>(k), 0);
          for (int i = 0; i < p.length(); ++i) w[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
          ws.push_back(w);
          if (g.type == GroupType::SOEven && w.back() != 0) {
            w.back() = -w.back();
            ws.push_back(w);
          }
        }
      }
      for (const auto& w : ws) {
        ++weights;
        std::string problem;
        try {
          // weyl_character throws NotACharacter on a non-zero remainder.
          const LaurentPoly chi = weyl::weyl_character(g, w);
          weyl::for_each_weyl_element(g, [&](const std::vector<int>& perm, std::uint64_t mask, int) {
            for (const auto& [e, c] : chi.terms()) {
              Exponent image(e.size());
              for (std::size_t i = 0; i < e.size(); ++i) {
                image[i] = e[static_cast<std::size_t>(perm[i])];
                if (mask & (std::uint64_t{1} << i)) image[i] = -image[i];
              }
              if (chi.coefficient(image) != c) problem = "not Weyl symmetric";
            }
          });
          if (chi.at_ones() != weyl::dimension(g, w)) problem = "value at 1 differs from Weyl dimension";
          if (decompose_character(chi, g) != std::map<Weight, std::int64_t>{{w, 1}}) problem = "not a point mass";
        } catch (const std::exception& e) {
          problem = e.what();
        }
        if (!problem.empty() && failures++ == 0) {
          v.details.push_back("first: " + to_string(g) + " " + to_string(w) + ": " + problem);
        }
      }
    }
  }
  v.pass = failures == 0;
  v.summary = std::to_string(weights) + " (group, weight) pairs, rank <= 3, size <= 4, " + std::to_string(failures) +
              " failures";
  return v;
}

Verdict padding() {
  Verdict v;
  const auto s = padding_probe(3);
  v.pass = s.passed();
  v.summary = std::to_string(s.cases) + " gl-diag cases re-checked at rank n+4, " + std::to_string(s.mismatches) +
              " deviations";
  if (!s.passed()) v.details.push_back("first: " + s.first_counterexample);
  return v;
}

}  // namespace

int main() {
  bool ok = true;
  double t = 0;
  Verdict v;

  v = timed(t, formula_vs_oracle);
  report(1, "formula equals oracle on exhaustive grids", v, t);
  ok &= v.pass;

  v = timed(t, littlewood_consistency);
  report(2, "Littlewood restriction equals bilinear rule", v, t);
  ok &= v.pass;

  v = timed(t, lr_properties);
  report(3, "LR symmetry, conjugation, Schur products", v, t);
  ok &= v.pass;

  v = timed(t, dualities);
  report(4, "duality dimension identities", v, t);
  ok &= v.pass;

  v = timed(t, conservation);
  report(5, "dimension conservation under decomposition", v, t);
  ok &= v.pass;

  v = timed(t, oracle_self_checks);
  report(6, "character oracle self-checks", v, t);
  ok &= v.pass;

  v = timed(t, padding);
  report(7, "gl-diag parameter padding (non-blocking)", v, t, false);

  return ok ? 0 : 1;
}
