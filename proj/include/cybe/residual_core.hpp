#pragma once

#include <vector>

namespace cybe {

// One nonzero structure constant: coefficient of e_m in [e_a, e_b].
template <class T>
struct SparseBracket {
  int a, b, m;
  T coeff;
};

// Accumulates the three commutator terms of the CYBE residual
//   [r12,r13] + [r12,r23] + [r13,r23]
// for r = sum k_ij e_i (x) e_j into zero-initialized cubes t1, t2, t3
// (row-major [i][j][m], size n^3). The three sums are kept separate; the
// residual is their slotwise total.
//
//   [r12,r13]: e_m (x) e_x (x) e_y gains c[a][b][m] * k[a][x] * k[b][y]
//   [r12,r23]: e_x (x) e_m (x) e_y gains c[a][b][m] * k[x][a] * k[b][y]
//   [r13,r23]: e_x (x) e_y (x) e_m gains c[a][b][m] * k[x][a] * k[y][b]
template <class T>
void residual_terms_core(int n, const std::vector<SparseBracket<T>>& brackets, const T* k, T* t1,
                         T* t2, T* t3) {
  for (const auto& e : brackets) {
    const int an = e.a * n, bn = e.b * n;
    for (int x = 0; x < n; ++x) {
      const int xn = x * n;
      for (int y = 0; y < n; ++y) {
        t1[(e.m * n + x) * n + y] = t1[(e.m * n + x) * n + y] + e.coeff * k[an + x] * k[bn + y];
        t2[(xn + e.m) * n + y] = t2[(xn + e.m) * n + y] + e.coeff * k[xn + e.a] * k[bn + y];
        t3[(xn + y) * n + e.m] = t3[(xn + y) * n + e.m] + e.coeff * k[xn + e.a] * k[y * n + e.b];
      }
    }
  }
}

}  // namespace cybe
