#ifndef POINTMASS_CORE_TRIDIAG_EIG_HPP
#define POINTMASS_CORE_TRIDIAG_EIG_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace pointmass {

template <typename T>
struct TridiagEigen {
  std::vector<T> values;            // ascending
  std::vector<T> first_components;  // row 0 of the orthogonal eigenvector matrix
};

// Implicit-shift QL on a symmetric tridiagonal matrix (diagonal d, off-diagonal
// e with e[i] coupling rows i and i+1).  Only the first row of the eigenvector
// matrix is accumulated — that is all Gauss weights need.
template <typename T>
TridiagEigen<T> tridiag_eigen_first(std::vector<T> d, std::vector<T> e) {
  using std::fabs;
  using std::hypot;

  const std::size_t n = d.size();
  require(n >= 1, ErrorCode::invalid_argument, "empty tridiagonal matrix");
  require(e.size() + 1 >= n, ErrorCode::invalid_argument,
          "off-diagonal length mismatch");
  e.resize(n, T(0));  // e[n-1] used as workspace

  std::vector<T> z(n, T(0));
  z[0] = T(1);

  const T eps = std::numeric_limits<T>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        T dd = fabs(d[m]) + fabs(d[m + 1]);
        if (fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        require(++iter <= 60, ErrorCode::numeric, "QL iteration did not converge");
        T g = (d[l + 1] - d[l]) / (T(2) * e[l]);
        T r = hypot(g, T(1));
        g = d[m] - d[l] + e[l] / (g + (g >= T(0) ? fabs(r) : -fabs(r)));
        T s(1), c(1), p(0);
        std::size_t i = m;
        bool underflow = false;
        while (i-- > l) {
          T f = s * e[i];
          T b = c * e[i];
          r = hypot(f, g);
          e[i + 1] = r;
          if (r == T(0)) {
            d[i + 1] -= p;
            e[m] = T(0);
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + T(2) * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = T(0);
      }
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  TridiagEigen<T> out;
  out.values.reserve(n);
  out.first_components.reserve(n);
  for (std::size_t i : order) {
    out.values.push_back(d[i]);
    out.first_components.push_back(z[i]);
  }
  return out;
}

}  // namespace pointmass

#endif
