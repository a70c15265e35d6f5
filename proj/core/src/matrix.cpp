#include "cremona/matrix.hpp"

namespace cremona {

namespace {

void check_square(const QMatrix& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) fail(ErrorKind::internal_invariant, "non-square matrix");
  }
  if (m.empty()) fail(ErrorKind::internal_invariant, "empty matrix");
}

QMatrix minor_matrix(const QMatrix& m, size_t drop_row, size_t drop_col) {
  QMatrix out;
  out.reserve(m.size() - 1);
  for (size_t i = 0; i < m.size(); ++i) {
    if (i == drop_row) continue;
    std::vector<Rational> row;
    row.reserve(m.size() - 1);
    for (size_t j = 0; j < m.size(); ++j) {
      if (j == drop_col) continue;
      row.push_back(m[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Rational determinant(const QMatrix& m) {
  check_square(m);
  QMatrix a = m;
  const size_t n = a.size();
  Rational det(1);
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && is_zero(a[pivot][k])) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    Rational inv = 1 / a[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      if (is_zero(a[i][k])) continue;
      Rational factor = a[i][k] * inv;
      for (size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return det;
}

QMatrix adjugate(const QMatrix& m) {
  check_square(m);
  const size_t n = m.size();
  if (n == 1) return QMatrix{{Rational(1)}};
  QMatrix adj(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      Rational cof = determinant(minor_matrix(m, j, i));
      if ((i + j) % 2 == 1) cof = -cof;
      adj[i][j] = cof;
    }
  }
  return adj;
}

}  // namespace cremona
