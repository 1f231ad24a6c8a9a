#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fuzztop/glmonoid.hpp"
#include "fuzztop/matrix.hpp"

namespace fuzztop {

inline std::string matrix_string(const GLMonoid& L, const Matrix& m) {
  std::string s = "[";
  for (int r = 0; r < m.rows; ++r) {
    if (r) s += ";";
    for (int c = 0; c < m.cols; ++c) {
      if (c) s += ",";
      s += L.label(m.at(r, c));
    }
  }
  return s + "]";
}

// All valid equality matrices on an n-point carrier: odometer over the
// strict upper triangle, transitivity-filtered. Only for small n.
inline std::vector<Matrix> all_equalities(const GLMonoid& L, int n) {
  std::vector<Matrix> out;
  const int slots = n * (n - 1) / 2;
  std::vector<int> v(slots, 0);
  while (true) {
    Matrix e(n, n, L.bot());
    for (int i = 0; i < n; ++i) e.at(i, i) = L.top();
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        e.at(i, j) = v[k];
        e.at(j, i) = v[k];
        ++k;
      }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int l = 0; l < n && ok; ++l)
          if (!L.leq(L.tnorm(e.at(i, j), e.at(j, l)), e.at(i, l))) ok = false;
    if (ok) out.push_back(std::move(e));
    int i = slots - 1;
    for (; i >= 0; --i) {
      if (++v[i] < L.size()) break;
      v[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

// Visits every rows x cols matrix over the carrier until fn returns false.
inline void for_all_matrices(const GLMonoid& L, int rows, int cols,
                             const std::function<bool(const Matrix&)>& fn) {
  Matrix m(rows, cols, 0);
  const int slots = rows * cols;
  while (true) {
    if (!fn(m)) return;
    int i = slots - 1;
    for (; i >= 0; --i) {
      if (++m.v[i] < L.size()) break;
      m.v[i] = 0;
    }
    if (i < 0) return;
  }
}

inline bool holds_1ff(const GLMonoid& L, const Matrix& f, const Matrix& codeq) {
  for (int x = 0; x < f.rows; ++x)
    for (int y = 0; y < f.cols; ++y)
      for (int yp = 0; yp < f.cols; ++yp)
        if (!L.leq(L.tnorm(f.at(x, y), codeq.at(y, yp)), f.at(x, yp)))
          return false;
  return true;
}

inline bool holds_2ff(const GLMonoid& L, const Matrix& f, const Matrix& domeq) {
  for (int x = 0; x < f.rows; ++x)
    for (int xp = 0; xp < f.rows; ++xp)
      for (int y = 0; y < f.cols; ++y)
        if (!L.leq(L.tnorm(domeq.at(x, xp), f.at(x, y)), f.at(xp, y)))
          return false;
  return true;
}

inline bool holds_3ff(const GLMonoid& L, const Matrix& f, const Matrix& codeq) {
  for (int x = 0; x < f.rows; ++x)
    for (int y = 0; y < f.cols; ++y)
      for (int yp = 0; yp < f.cols; ++yp)
        if (!L.leq(L.tnorm(f.at(x, y), f.at(x, yp)), codeq.at(y, yp)))
          return false;
  return true;
}

inline bool valid_ff_matrix(const GLMonoid& L, const Matrix& f,
                            const Matrix& domeq, const Matrix& codeq) {
  return holds_1ff(L, f, codeq) && holds_2ff(L, f, domeq) &&
         holds_3ff(L, f, codeq);
}

inline Matrix compose_raw(const GLMonoid& L, const Matrix& inner,
                          const Matrix& outer) {
  Matrix m(inner.rows, outer.cols, L.bot());
  for (int x = 0; x < inner.rows; ++x)
    for (int z = 0; z < outer.cols; ++z) {
      Elem acc = L.bot();
      for (int y = 0; y < inner.cols; ++y)
        acc = L.join(acc, L.tnorm(inner.at(x, y), outer.at(y, z)));
      m.at(x, z) = acc;
    }
  return m;
}

}  // namespace fuzztop
