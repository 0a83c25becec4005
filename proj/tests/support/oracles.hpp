#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's implementation of the quantity being checked.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline double determinant(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1.0 : -1.0) * m[0][c] * determinant(minor);
  }
  return det;
}

/// Inverse by adjugate / determinant (cofactor expansion).
inline Matrix cofactor_inverse(const Matrix& m) {
  const std::size_t n = m.size();
  const double det = determinant(m);
  Matrix inv(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (n == 1) {
        inv[0][0] = 1.0 / det;
        continue;
      }
      Matrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<double> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(m[r][c]);
        }
        minor.push_back(row);
      }
      const double cof = ((i + j) % 2 == 0 ? 1.0 : -1.0) * determinant(minor);
      inv[j][i] = cof / det;  // transpose of cofactor matrix
    }
  }
  return inv;
}

/// β = (XᵀX)⁻¹ Xᵀy with an explicit inverse; X rows include the intercept.
inline std::vector<double> normal_equations(const Matrix& x, const std::vector<double>& y) {
  const std::size_t n = x.size(), p = x.front().size();
  Matrix xtx(p, std::vector<double>(p, 0.0));
  std::vector<double> xty(p, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < p; ++i) {
      xty[i] += x[r][i] * y[r];
      for (std::size_t j = 0; j < p; ++j) xtx[i][j] += x[r][i] * x[r][j];
    }
  }
  const Matrix inv = cofactor_inverse(xtx);
  std::vector<double> beta(p, 0.0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) beta[i] += inv[i][j] * xty[j];
  }
  return beta;
}

inline double t_density(double x, double df) {
  const double log_c = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                       0.5 * std::log(df * M_PI);
  return std::exp(log_c - (df + 1.0) / 2.0 * std::log1p(x * x / df));
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double fa, double fm, double fb, double whole, double tol,
                               int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

/// P(|T| >= |t|) = 1 − 2∫₀^|t| f(x) dx.
inline double t_two_sided(double t, double df) {
  const double a = std::abs(t);
  if (a == 0.0) return 1.0;
  return 1.0 - 2.0 * integrate([df](double x) { return t_density(x, df); }, 0.0, a);
}

using Words = std::vector<std::string>;

inline std::size_t levenshtein(const Words& a, const Words& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0u : 1u)});
    }
  }
  return d[a.size()][b.size()];
}

/// Minimum over every sequence of unit-cost block shifts (any block, any
/// destination) of shifts + remaining word edits. Breadth-first over
/// reorderings of the hypothesis.
inline std::size_t exhaustive_ter_edits(const Words& hyp, const Words& ref) {
  std::size_t best = levenshtein(hyp, ref);
  std::set<Words> seen{hyp};
  std::deque<std::pair<Words, std::size_t>> queue{{hyp, 0}};
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth + 1 >= best) continue;
    for (std::size_t s = 0; s < cur.size(); ++s) {
      for (std::size_t len = 1; s + len <= cur.size(); ++len) {
        Words block(cur.begin() + s, cur.begin() + s + len);
        Words rest(cur.begin(), cur.begin() + s);
        rest.insert(rest.end(), cur.begin() + s + len, cur.end());
        for (std::size_t dest = 0; dest <= rest.size(); ++dest) {
          Words next = rest;
          next.insert(next.begin() + dest, block.begin(), block.end());
          if (!seen.insert(next).second) continue;
          best = std::min(best, depth + 1 + levenshtein(next, ref));
          queue.emplace_back(std::move(next), depth + 1);
        }
      }
    }
  }
  return best;
}

/// NKT as concordant pairs over all pairs.
inline double nkt_by_pairs(const std::vector<std::size_t>& p) {
  std::size_t concordant = 0, pairs = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      ++pairs;
      concordant += p[i] < p[j];
    }
  }
  return static_cast<double>(concordant) / static_cast<double>(pairs);
}

/// NSR for a permutation of 0..n-1 from squared rank differences, as the
/// exact rational (1 + rho) / 2 rounded once.
inline double nsr_by_differences(const std::vector<std::size_t>& p) {
  const long long n = static_cast<long long>(p.size());
  long long d2 = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const long long d = static_cast<long long>(p[i]) - static_cast<long long>(i);
    d2 += d * d;
  }
  // rho = 1 - 6 d2 / (n(n^2-1)); (1 + rho)/2 = (n(n^2-1) - 3 d2) / (n(n^2-1)).
  const long long den = n * (n * n - 1);
  return static_cast<double>(den - 3 * d2) / static_cast<double>(den);
}

}  // namespace oracle

namespace gen {

inline unsigned seed() {
  if (const char* s = std::getenv("RESPEAK_SEED")) return static_cast<unsigned>(std::strtoul(s, nullptr, 10));
  return 20240611u;
}

inline std::vector<std::string> words(std::mt19937& rng, std::size_t min_len, std::size_t max_len,
                                      std::size_t vocab) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> w(0, vocab - 1);
  std::vector<std::string> out(len(rng));
  for (auto& t : out) t = "w" + std::to_string(w(rng));
  return out;
}

}  // namespace gen
