#pragma once

// Independent reference computations. Nothing here calls into the library:
// Gram matrices are written out, and exceptional classes are counted by a
// plain multiset scan in a wider box than the library uses.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using I = std::int64_t;

// 'P' = CP^2 blown up, 'Q' = S^2 x S^2 blown up, 'H' = E_{S^2} blown up.
inline std::vector<std::vector<I>> gram(char root, int m) {
  const int nb = root == 'P' ? 1 : 2;
  const int r = nb + m;
  std::vector<std::vector<I>> g(r, std::vector<I>(r, 0));
  if (root == 'P') {
    g[0][0] = 1;
  } else {
    g[0][1] = g[1][0] = 1;
    g[1][1] = root == 'H' ? -1 : 0;
  }
  for (int i = nb; i < r; ++i) g[i][i] = -1;
  return g;
}

inline I form(const std::vector<std::vector<I>>& g, const std::vector<I>& a, const std::vector<I>& b) {
  I s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  return s;
}

inline std::vector<I> c1(char root, int m) {
  std::vector<I> v;
  if (root == 'P') v = {3};
  else if (root == 'Q') v = {2, 2};
  else v = {3, 2};
  for (int i = 0; i < m; ++i) v.push_back(-1);
  return v;
}

// Number of orderings of a multiset.
inline I arrangements(const std::vector<I>& sorted) {
  I n = 1, run = 1;
  std::vector<I> fact(sorted.size() + 1, 1);
  for (std::size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * static_cast<I>(i);
  n = fact[sorted.size()];
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
      ++run;
    } else {
      n /= fact[run];
      run = 1;
    }
  }
  return n;
}

// Visits nondecreasing sequences of length k over [lo, hi].
template <class F>
void multisets(int k, I lo, I hi, F&& f) {
  std::vector<I> v(k, lo);
  while (true) {
    f(v);
    int i = k - 1;
    while (i >= 0 && v[i] == hi) --i;
    if (i < 0) return;
    ++v[i];
    for (int j = i + 1; j < k; ++j) v[j] = v[i];
  }
}

// Classes D with D.D = -1 and c1.D = 1 on CP^2 # k (-CP^2), counted over
// |d| <= 9, |c_i| <= 5 (class d u + sum c_i E_i).
inline I exceptional_count_projplane(int k) {
  I total = 0;
  for (I d = -9; d <= 9; ++d) {
    if (k == 0) continue;
    multisets(k, -5, 5, [&](const std::vector<I>& c) {
      I sum = 0, sq = 0;
      for (I x : c) {
        sum += x;
        sq += x * x;
      }
      if (d * d - sq == -1 && 3 * d + sum == 1) total += arrangements(c);
    });
  }
  return total;
}

// Same count on S^2 x S^2 # m (-CP^2) with class a x + b y + sum c_i E_i.
inline I exceptional_count_quadric(int m) {
  I total = 0;
  for (I a = -9; a <= 9; ++a)
    for (I b = -9; b <= 9; ++b) {
      if (m == 0) {
        if (2 * a * b == -1 && 2 * a + 2 * b == 1) ++total;
        continue;
      }
      multisets(m, -5, 5, [&](const std::vector<I>& c) {
        I sum = 0, sq = 0;
        for (I x : c) {
          sum += x;
          sq += x * x;
        }
        if (2 * a * b - sq == -1 && 2 * a + 2 * b + sum == 1) total += arrangements(c);
      });
    }
  return total;
}

// Adjunction genus from the explicit Gram matrix.
inline I genus(char root, int m, const std::vector<I>& d) {
  const auto g = gram(root, m);
  return 1 + (form(g, d, d) - form(g, c1(root, m), d)) / 2;
}

}  // namespace oracle
