#pragma once

// Naive reference implementations used only by the tests. They deliberately
// avoid the library's algorithms (no Bareiss, no modular ranks, no multinomial
// shortcuts) so that agreement is meaningful.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Vec = std::vector<unsigned>;
using Row = std::vector<mpq_class>;
using Dense = std::vector<Row>;

/// Rank by textbook rational Gaussian elimination.
inline std::size_t rank(Dense m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t q = 0; q < m.size(); ++q) {
      if (q == r || m[q][c] == 0) continue;
      const mpq_class f = m[q][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[q][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// All exponent vectors of length n and total degree d, lexicographically.
inline std::vector<Vec> vectors(std::size_t n, unsigned d) {
  std::vector<Vec> out;
  Vec cur(n, 0);
  std::function<void(std::size_t, unsigned)> go = [&](std::size_t t, unsigned left) {
    if (t + 1 == n) {
      cur[t] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned a = 0; a <= left; ++a) {
      cur[t] = a;
      go(t + 1, left - a);
    }
  };
  if (n > 0) go(0, d);
  else if (d == 0) out.push_back({});
  return out;
}

inline bool divides(const Vec& a, const Vec& b) {
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] > b[t]) return false;
  }
  return true;
}

inline bool in_ideal(const std::vector<Vec>& gens, const Vec& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Vec& g) { return divides(g, m); });
}

inline std::vector<Vec> standard(const std::vector<Vec>& gens, std::size_t n, unsigned k) {
  std::vector<Vec> out;
  for (auto& v : vectors(n, k)) {
    if (!in_ideal(gens, v)) out.push_back(v);
  }
  return out;
}

inline std::size_t hf(const std::vector<Vec>& gens, std::size_t n, unsigned k) { return standard(gens, n, k).size(); }

/// Binomial coefficient from Pascal's rule.
inline mpz_class binomial(long c, long k) {
  if (k < 0 || c < k) return 0;
  std::vector<mpz_class> row(k + 1, 0);
  row[0] = 1;
  for (long r = 1; r <= c; ++r) {
    for (long j = std::min(r, k); j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

/// Greedy i-binomial expansion by linear scans, as (top, bottom) pairs.
inline std::vector<std::pair<long, unsigned>> expansion(long m, unsigned i) {
  std::vector<std::pair<long, unsigned>> out;
  for (unsigned k = i; k >= 1 && m > 0; --k) {
    long top = k;
    while (binomial(top + 1, k) <= m) ++top;
    out.emplace_back(top, k);
    m -= binomial(top, k).get_si();
  }
  return out;
}

/// Matrix of multiplication by (x_1 + ... + x_n)^i from R_j to R_{j+i}, built
/// by applying the linear form i times to each standard monomial.
inline Dense mult_matrix(const std::vector<Vec>& gens, std::size_t n, unsigned i, unsigned j) {
  const auto src = standard(gens, n, j);
  const auto dst = standard(gens, n, j + i);
  std::map<Vec, std::size_t> row_of;
  for (std::size_t r = 0; r < dst.size(); ++r) row_of[dst[r]] = r;
  Dense m(dst.size(), Row(src.size(), 0));
  for (std::size_t c = 0; c < src.size(); ++c) {
    std::map<Vec, mpq_class> poly{{src[c], 1}};
    for (unsigned step = 0; step < i; ++step) {
      std::map<Vec, mpq_class> next;
      for (const auto& [v, coeff] : poly) {
        for (std::size_t t = 0; t < n; ++t) {
          Vec w = v;
          ++w[t];
          next[w] += coeff;
        }
      }
      poly = std::move(next);
    }
    for (const auto& [v, coeff] : poly) {
      auto it = row_of.find(v);
      if (it != row_of.end()) m[it->second][c] = coeff;
    }
  }
  return m;
}

using DualPoly = std::map<Vec, mpq_class>;

/// d/dy_t.
inline DualPoly differentiate(const DualPoly& f, std::size_t t) {
  DualPoly out;
  for (const auto& [v, c] : f) {
    if (v[t] == 0) continue;
    Vec w = v;
    --w[t];
    out[w] += c * v[t];
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// (d/dy_1 + ... + d/dy_n)^i f, one derivative at a time.
inline DualPoly ell_contract(DualPoly f, std::size_t n, unsigned i) {
  for (unsigned step = 0; step < i; ++step) {
    DualPoly next;
    for (std::size_t t = 0; t < n; ++t) {
      for (const auto& [v, c] : differentiate(f, t)) next[v] += c;
    }
    for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
    f = std::move(next);
  }
  return f;
}

/// Smallest number of degree-d dual monomials whose images under l^i are
/// linearly dependent, by trying every subset of each size.
inline std::size_t min_support(std::size_t n, unsigned d, unsigned i, std::size_t limit) {
  const auto cols = vectors(n, d);
  const auto rows = vectors(n, d - i);
  std::map<Vec, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
  std::vector<Row> images;
  for (const auto& b : cols) {
    Row col(rows.size(), 0);
    for (const auto& [v, c] : ell_contract(DualPoly{{b, 1}}, n, i)) col[row_of.at(v)] = c;
    images.push_back(col);
  }
  for (std::size_t size = 1; size <= limit; ++size) {
    std::vector<bool> pick(cols.size(), false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      Dense sub;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (pick[c]) sub.push_back(images[c]);
      }
      if (rank(sub) < size) return size;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

}  // namespace oracle
