#include "mvsr/smith.hpp"

#include <utility>

#include "mvsr/error.hpp"

namespace mvsr {

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, std::size_t inner) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

BigInt determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  IntMatrix m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Floor division so remainders have the sign of the divisor's magnitude.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

struct Work {
  IntMatrix d, u, v;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& r : d) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  }
  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < cols; ++c) d[i][c] += q * d[j][c];
    for (std::size_t c = 0; c < rows; ++c) u[i][c] += q * u[j][c];
  }
  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < rows; ++r) d[r][i] += q * d[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][i] += q * v[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  return smith_normal_form(m, m.empty() ? 0 : m[0].size());
}

SmithResult smith_normal_form(const IntMatrix& m, std::size_t cols) {
  const std::size_t rows = m.size();
  for (const auto& r : m)
    if (r.size() != cols) fail(ErrorKind::ShapeMismatch, "ragged integer matrix");
  Work w{m, int_identity(rows), int_identity(cols), rows, cols};
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Least nonzero |entry| in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (w.d[i][j] != 0 && (pr == rows || abs_big(w.d[i][j]) < abs_big(w.d[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) goto done;
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (w.d[i][t] != 0) {
          w.add_row(i, t, -floor_div(w.d[i][t], w.d[t][t]));
          if (w.d[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (w.d[t][j] != 0) {
          w.add_col(j, t, -floor_div(w.d[t][j], w.d[t][t]));
          if (w.d[t][j] != 0) clean = false;
        }
      if (!clean) continue;
      // Divisibility of the rest of the block by the pivot.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (w.d[i][j] % w.d[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      w.add_row(t, bad, 1);
    }
    if (w.d[t][t] < 0) w.negate_row(t);
  }
done:
  SmithResult r;
  r.rows = rows;
  r.cols = cols;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i)
    if (w.d[i][i] != 0) r.invariants.push_back(w.d[i][i]);
  r.d = std::move(w.d);
  r.u = std::move(w.u);
  r.v = std::move(w.v);

  bool ok = int_mul(int_mul(r.u, m, rows), r.v, cols) == r.d;
  if (rows == 0) ok = true;
  for (std::size_t i = 0; i < rows && ok; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (i != j && r.d[i][j] != 0) ok = false;
  for (std::size_t i = 0; i < r.invariants.size(); ++i) {
    if (r.invariants[i] <= 0) ok = false;
    if (i + 1 < r.invariants.size() && r.invariants[i + 1] % r.invariants[i] != 0) ok = false;
    if (r.d[i][i] != r.invariants[i]) ok = false;
  }
  ok = ok && abs_big(determinant(r.u)) == 1 && abs_big(determinant(r.v)) == 1;
  r.verified = ok;
  return r;
}

}  // namespace mvsr
