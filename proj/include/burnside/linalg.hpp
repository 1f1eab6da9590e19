#ifndef BURNSIDE_LINALG_HPP_
#define BURNSIDE_LINALG_HPP_

// Exact linear algebra over Q and Z.

#include <cstddef>
#include <utility>
#include <vector>

#include "burnside/scalar.hpp"

namespace burnside {

  using RationalMatrix = std::vector<std::vector<Rational>>;
  using IntegerMatrix  = std::vector<std::vector<Integer>>;

  inline std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    if (m.empty()) {
      return 0;
    }
    std::size_t const cols = m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      std::size_t pivot = r;
      while (pivot < m.size() && m[pivot][c] == 0) {
        ++pivot;
      }
      if (pivot == m.size()) {
        continue;
      }
      std::swap(m[r], m[pivot]);
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) {
          continue;
        }
        Rational const f = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) {
          m[i][j] -= f * m[r][j];
        }
      }
      ++r;
    }
    return r;
  }

  inline std::size_t rank(IntegerMatrix const& m) {
    RationalMatrix q;
    for (auto const& row : m) {
      q.emplace_back(row.begin(), row.end());
    }
    return rank(std::move(q));
  }

  namespace detail {
    inline Integer floor_div(Integer const& a, Integer const& b) {
      Integer q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }
  }  // namespace detail

  // Row Hermite normal form over Z, reducing only the first `cols` columns
  // (the remaining entries ride along). Pivots are positive and entries above
  // a pivot lie in [0, pivot). Returns the number of pivot rows.
  inline std::size_t hermite_rows(IntegerMatrix& m, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
      while (true) {
        std::size_t best = m.size();
        for (std::size_t i = r; i < m.size(); ++i) {
          if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) {
            best = i;
          }
        }
        if (best == m.size()) {
          break;
        }
        std::swap(m[r], m[best]);
        bool clean = true;
        for (std::size_t i = r + 1; i < m.size(); ++i) {
          if (m[i][c] == 0) {
            continue;
          }
          Integer const q = detail::floor_div(m[i][c], m[r][c]);
          for (std::size_t j = 0; j < m[i].size(); ++j) {
            m[i][j] -= q * m[r][j];
          }
          if (m[i][c] != 0) {
            clean = false;
          }
        }
        if (clean) {
          break;
        }
      }
      if (m[r][c] == 0) {
        continue;
      }
      if (m[r][c] < 0) {
        for (auto& x : m[r]) {
          x = -x;
        }
      }
      for (std::size_t i = 0; i < r; ++i) {
        Integer const q = detail::floor_div(m[i][c], m[r][c]);
        if (q != 0) {
          for (std::size_t j = 0; j < m[i].size(); ++j) {
            m[i][j] -= q * m[r][j];
          }
        }
      }
      ++r;
    }
    return r;
  }

  // A basis of {v in Z^n : M v = 0} in row Hermite normal form.
  inline IntegerMatrix integer_kernel(IntegerMatrix const& M, std::size_t n) {
    std::size_t const m = M.size();
    // rows (M^T | I); unimodular row operations clearing the M^T block leave
    // the kernel lattice in the identity block of the zero rows
    IntegerMatrix aug(n, std::vector<Integer>(m + n, 0));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) {
        aug[j][i] = M[i][j];
      }
      aug[j][m + j] = 1;
    }
    std::size_t const pivots = hermite_rows(aug, m);
    IntegerMatrix     kernel;
    for (std::size_t j = pivots; j < n; ++j) {
      kernel.emplace_back(aug[j].begin() + static_cast<std::ptrdiff_t>(m), aug[j].end());
    }
    hermite_rows(kernel, n);
    return kernel;
  }

  // Solves L a = b for lower triangular L by forward substitution.
  inline std::vector<Rational> forward_substitute(RationalMatrix const&        L,
                                                  std::vector<Rational> const& b) {
    std::vector<Rational> a(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      Rational s = b[i];
      for (std::size_t j = 0; j < i; ++j) {
        s -= L[i][j] * a[j];
      }
      a[i] = s / L[i][i];
    }
    return a;
  }

}  // namespace burnside

#endif  // BURNSIDE_LINALG_HPP_
