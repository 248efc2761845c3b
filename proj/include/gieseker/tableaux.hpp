#pragma once

#include <functional>
#include <vector>

#include "gieseker/partitions.hpp"

namespace gieseker {

/// Row-major filling of a Young diagram; row i holds entries of row i+1.
using Tableau = std::vector<std::vector<int>>;

/// Visits every semistandard tableau of shape lambda with entries in
/// {1..n}: rows weakly increase, columns strictly increase.
inline void for_each_ssyt(const Partition& lambda, int n, const std::function<void(const Tableau&)>& visit) {
  Tableau t;
  for (int p : lambda.parts()) t.emplace_back(static_cast<std::size_t>(p), 0);
  const int rows = lambda.num_rows();
  if (rows > n) return;
  const Partition conj = lambda.conjugate();
  std::function<void(int, int)> fill = [&](int i, int j) {
    if (i == rows) {
      visit(t);
      return;
    }
    const int len = lambda.row(i + 1);
    if (j == len) {
      fill(i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    // Column strictness leaves room for the rows below.
    const int hi = n - (conj.row(j + 1) - 1 - i);
    for (int v = lo; v <= hi; ++v) {
      t[i][j] = v;
      fill(i, j + 1);
    }
  };
  fill(0, 0);
}

inline long count_ssyt(const Partition& lambda, int n) {
  long c = 0;
  for_each_ssyt(lambda, n, [&](const Tableau&) { ++c; });
  return c;
}

/// Number of standard Young tableaux: m! / prod hooks.
inline Int count_syt(const Partition& lambda) {
  Int h = 1;
  for (int i = 1; i <= lambda.num_rows(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) h *= lambda.hook(i, j);
  return factorial(lambda.size()) / h;
}

}  // namespace gieseker
