#include "gainbalance/smith.hpp"

#include <stdexcept>
#include <utility>

namespace gainbalance {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
  const std::size_t n = a.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  if (b.size() != inner) throw std::invalid_argument("matrix shapes do not agree");
  IntMatrix c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

namespace {

struct Reducer {
  IntMatrix& d;
  IntMatrix& u;
  IntMatrix& v;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row_i -= q * row_t
  void row_sub(std::size_t i, std::size_t t, const BigInt& q) {
    for (std::size_t j = 0; j < cols; ++j) d[i][j] -= q * d[t][j];
    for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[t][j];
  }
  // col_j -= q * col_t
  void col_sub(std::size_t j, std::size_t t, const BigInt& q) {
    for (std::size_t i = 0; i < rows; ++i) d[i][j] -= q * d[i][t];
    for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][t];
  }

  // Moves the least nonzero |entry| of the trailing block to (t, t).
  bool pivot(std::size_t t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d[i][j] == 0) continue;
        if (bi == rows || abs(d[i][j]) < abs(d[bi][bj])) {
          bi = i;
          bj = j;
        }
      }
    if (bi == rows) return false;
    if (bi != t) swap_rows(bi, t);
    if (bj != t) swap_cols(bj, t);
    return true;
  }

  void run() {
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
      if (!pivot(t)) return;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (d[i][t] == 0) continue;
          row_sub(i, t, d[i][t] / d[t][t]);
          if (d[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d[t][j] == 0) continue;
          col_sub(j, t, d[t][j] / d[t][t]);
          if (d[t][j] != 0) clean = false;
        }
        if (!clean) {
          pivot(t);
          continue;
        }
        // Enforce divisibility of the trailing block by the pivot.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (d[i][j] % d[t][t] != 0) {
              row_sub(t, i, -1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      if (d[t][t] < 0) {
        for (auto& x : d[t]) x = -x;
        for (auto& x : u[t]) x = -x;
      }
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols) {
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("matrix is not rectangular");
  SmithForm s;
  s.rows = a.size();
  s.cols = cols;
  s.diagonal = a;
  s.left = identity_matrix(s.rows);
  s.right = identity_matrix(cols);
  Reducer r{s.diagonal, s.left, s.right, s.rows, cols};
  r.run();
  for (std::size_t t = 0; t < std::min(s.rows, cols); ++t) {
    if (s.diagonal[t][t] == 0) break;
    s.invariants.push_back(s.diagonal[t][t]);
  }
  return s;
}

}  // namespace gainbalance
