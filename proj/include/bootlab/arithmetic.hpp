#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bootlab/util.hpp"

namespace bootlab {

// Subset of Z_p \ {0} together with the coefficient bound it was checked
// against. "Solution-free" means: every alpha_1 a_1 + alpha_2 a_2 +
// alpha_3 a_3 = 0 (mod p) with |alpha_i| <= coeff_bound has sum(alpha) = 0
// and all elements with non-zero coefficient equal.
struct DilationSet {
  long long p = 0;
  std::vector<long long> elements;  // sorted, within [1, p-1]
  int coeff_bound = 4;
  bool verified = false;
};

struct RelationWitness {
  std::array<long long, 3> alpha{0, 0, 0};
  std::array<long long, 3> elems{0, 0, 0};
};

struct SolutionFreeReport {
  bool solution_free = true;
  std::optional<RelationWitness> violation;
};

namespace detail {

inline long long mod_p(long long x, long long p) {
  long long r = x % p;
  return r < 0 ? r + p : r;
}

}  // namespace detail

// Is (alpha, elems) a violating relation for modulus p? Zero coefficients are
// allowed, so one- and two-variable degenerate relations are covered.
inline bool relation_is_violation(long long p, const std::array<long long, 3>& alpha,
                                  const std::array<long long, 3>& elems) {
  long long sum_mod = 0, sum_alpha = 0;
  for (int i = 0; i < 3; ++i) {
    sum_mod = detail::mod_p(sum_mod + alpha[i] * elems[i], p);
    sum_alpha += alpha[i];
  }
  if (sum_mod != 0) return false;
  if (sum_alpha != 0) return true;
  long long ref = -1;
  for (int i = 0; i < 3; ++i) {
    if (alpha[i] == 0) continue;
    if (ref == -1) ref = elems[i];
    else if (elems[i] != ref) return true;
  }
  return false;
}

// Brute force over all element triples (with repetition) and coefficient
// vectors. Deterministic first-found witness: element multisets ascending,
// coefficients in lexicographic order, sign-normalized so the first non-zero
// coefficient is positive.
inline SolutionFreeReport verify_solution_free(const DilationSet& s) {
  SolutionFreeReport report;
  long long p = s.p;
  if (p < 2) throw InputError("dilation set: modulus must be >= 2");
  int c = s.coeff_bound;
  const auto& a = s.elements;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i; j < a.size(); ++j)
      for (std::size_t k = j; k < a.size(); ++k) {
        std::array<long long, 3> elems{a[i], a[j], a[k]};
        for (long long a1 = -c; a1 <= c; ++a1)
          for (long long a2 = -c; a2 <= c; ++a2)
            for (long long a3 = -c; a3 <= c; ++a3) {
              std::array<long long, 3> alpha{a1, a2, a3};
              if (!relation_is_violation(p, alpha, elems)) continue;
              for (int t = 0; t < 3; ++t) {
                if (alpha[t] == 0) continue;
                if (alpha[t] < 0)
                  for (auto& x : alpha) x = -x;
                break;
              }
              report.solution_free = false;
              report.violation = RelationWitness{alpha, elems};
              return report;
            }
      }
  return report;
}

inline DilationSet verified_set(long long p, std::vector<long long> elements, int coeff_bound) {
  DilationSet s{p, std::move(elements), coeff_bound, false};
  std::sort(s.elements.begin(), s.elements.end());
  s.verified = verify_solution_free(s).solution_free;
  return s;
}

namespace detail {

// Pairwise conflicts under the full (repeated-slot) relation space; used by
// the exhaustive search. A pair conflicts if some relation supported on
// {x,y} with both present violates.
inline bool pair_conflicts(long long p, int c, long long x, long long y) {
  for (long long a1 = -c; a1 <= c; ++a1)
    for (long long a2 = -c; a2 <= c; ++a2)
      for (long long a3 = -c; a3 <= c; ++a3) {
        if (relation_is_violation(p, {a1, a2, a3}, {x, x, y}) && a3 != 0 && (a1 != 0 || a2 != 0)) return true;
        if (relation_is_violation(p, {a1, a2, a3}, {x, y, y}) && a1 != 0 && (a2 != 0 || a3 != 0)) return true;
      }
  return false;
}

inline bool triple_conflicts(long long p, int c, long long x, long long y, long long z) {
  for (long long a1 = -c; a1 <= c; ++a1) {
    if (a1 == 0) continue;
    for (long long a2 = -c; a2 <= c; ++a2) {
      if (a2 == 0) continue;
      long long partial = a1 * x + a2 * y;
      for (long long a3 = -c; a3 <= c; ++a3) {
        if (a3 == 0) continue;
        if (mod_p(partial + a3 * z, p) == 0) return true;  // three distinct elements: always a violation
      }
    }
  }
  return false;
}

// same-element relations: (a1+a2+a3) x = 0 mod p with some non-zero sum
inline bool element_feasible(long long p, int c, long long x) {
  for (long long s = 1; s <= 3LL * c; ++s)
    if ((s * x) % p == 0) return false;
  return true;
}

}  // namespace bootlab::detail

// Maximum-size verified subset of Z_p \ {0} by branch and bound; ties go to
// the lexicographically least set. Guideline p <= 200 at c = 4.
inline DilationSet exhaustive_best_set(long long p, int c) {
  DilationSet best{p, {}, c, true};
  std::vector<int> pool;
  for (long long x = 1; x < p; ++x)
    if (detail::element_feasible(p, c, x)) pool.push_back(static_cast<int>(x));
  int n = static_cast<int>(pool.size());
  std::vector<std::vector<char>> pairc(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairc[i][j] = pairc[j][i] = detail::pair_conflicts(p, c, pool[i], pool[j]) ? 1 : 0;
  std::vector<int> chosen;  // indices into pool
  std::function<void(int)> rec = [&](int next) {
    if (chosen.size() > best.elements.size()) {
      best.elements.clear();
      for (int i : chosen) best.elements.push_back(pool[i]);
    }
    if (static_cast<int>(chosen.size()) + (n - next) <= static_cast<int>(best.elements.size())) return;
    for (int v = next; v < n; ++v) {
      bool ok = true;
      for (int u : chosen)
        if (pairc[u][v]) {
          ok = false;
          break;
        }
      if (ok) {
        for (std::size_t i = 0; i < chosen.size() && ok; ++i)
          for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
            if (detail::triple_conflicts(p, c, pool[chosen[i]], pool[chosen[j]], pool[v])) ok = false;
      }
      if (!ok) continue;
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  auto check = verify_solution_free(best);
  if (!check.solution_free) throw InternalError("exhaustive_best_set produced an unverified set");
  best.verified = true;
  return best;
}

// Behrend-style sphere-layer construction: digits in a small base restricted
// to one radius layer, then filtered by the brute-force verifier until the
// bounded-coefficient property holds. Grid search over (base, dimension)
// keeps the largest surviving set; deterministic.
inline DilationSet behrend_sphere_set(long long p, int c) {
  DilationSet best{p, {}, c, true};
  for (long long base = 2 * c + 1; base <= 4 * (2 * c + 1); base += 2 * c) {
    long long dmax = (base - 1) / (2 * c);
    if (dmax < 1) continue;
    for (int dim = 2; dim <= 8; ++dim) {
      double span = 1;
      for (int i = 0; i < dim; ++i) span *= static_cast<double>(base);
      if (span > static_cast<double>(p)) break;
      double count = 1;
      for (int i = 0; i < dim; ++i) count *= static_cast<double>(dmax + 1);
      if (count > 300000.0) break;
      // bucket digit vectors by squared norm
      std::map<long long, std::vector<long long>> layers;
      std::vector<long long> digits(dim, 0);
      for (;;) {
        long long norm = 0, value = 0, scale = 1;
        for (int i = 0; i < dim; ++i) {
          norm += digits[i] * digits[i];
          value += digits[i] * scale;
          scale *= base;
        }
        if (value > 0 && value < p) layers[norm].push_back(value);
        int pos = 0;
        while (pos < dim && digits[pos] == dmax) digits[pos++] = 0;
        if (pos == dim) break;
        ++digits[pos];
      }
      std::vector<long long> layer;
      for (const auto& [norm, vals] : layers)
        if (vals.size() > layer.size()) layer = vals;
      // filter: drop the largest element of each reported violation
      DilationSet cand{p, layer, c, false};
      std::sort(cand.elements.begin(), cand.elements.end());
      for (;;) {
        auto rep = verify_solution_free(cand);
        if (rep.solution_free) break;
        long long drop = std::max({rep.violation->elems[0], rep.violation->elems[1], rep.violation->elems[2]});
        cand.elements.erase(std::find(cand.elements.begin(), cand.elements.end(), drop));
      }
      cand.verified = true;
      if (cand.elements.size() > best.elements.size()) best = cand;
    }
  }
  if (best.elements.empty())
    throw ConstructionError("behrend sphere construction yielded no verified elements; use exhaustive_best_set");
  return best;
}

// "p c" header line then sorted elements, one per line.
inline void write_dilation_set(std::ostream& os, const DilationSet& s) {
  os << s.p << ' ' << s.coeff_bound << '\n';
  for (long long e : s.elements) os << e << '\n';
}

inline DilationSet read_dilation_set(std::istream& is) {
  DilationSet s;
  if (!(is >> s.p >> s.coeff_bound)) throw InputError("dilation set: missing 'p c' header");
  long long e;
  while (is >> e) s.elements.push_back(e);
  std::sort(s.elements.begin(), s.elements.end());
  for (long long x : s.elements)
    if (x < 1 || x >= s.p) throw InputError("dilation set: element out of range");
  s.verified = verify_solution_free(s).solution_free;
  return s;
}

}  // namespace bootlab
