#ifndef GPDHOM_SMITH_HPP
#define GPDHOM_SMITH_HPP

// Smith normal form over Z and exact linear solving built on it.
//
// The algorithm is the classical elimination by unimodular row/column
// operations. Pivot selection is pinned for determinism: smallest nonzero
// absolute value, ties broken row-major. Entries grow during elimination,
// which is why everything runs on arbitrary-precision integers.

#include <optional>
#include <vector>

#include "gpdhom/int_matrix.hpp"

namespace gpdhom {

struct SmithDecomposition {
  // u * input * v == s, with u and v unimodular and s diagonal,
  // d_1 | d_2 | ... | d_r, all nonnegative.
  IntMatrix u, s, v;
  IntMatrix u_inv, v_inv;  // tracked alongside, so no separate inversion pass
  int rank = 0;            // number of nonzero diagonal entries

  std::vector<Int> diagonal() const {
    const int k = std::min(s.rows(), s.cols());
    std::vector<Int> d(k);
    for (int i = 0; i < k; ++i) d[i] = s.at(i, i);
    return d;
  }
};

namespace detail {

// Quotient rounded to nearest, |a - q*b| <= |b|/2. Keeps SNF remainders small.
inline Int div_round(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (r != 0 && 2 * abs(r) > abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

class SmithWorker {
public:
  explicit SmithWorker(const IntMatrix& a)
      : m_(a.rows()),
        n_(a.cols()),
        s_(m_, std::vector<Int>(n_, Int(0))),
        u_(dense_identity(m_)),
        uinv_(dense_identity(m_)),
        v_(dense_identity(n_)),
        vinv_(dense_identity(n_)) {
    for (const auto& [ij, val] : a.entries()) s_[ij.first][ij.second] = val;
  }

  SmithDecomposition run() {
    int t = 0;
    while (t < m_ && t < n_) {
      if (!move_pivot(t)) break;
      reduce_block(t);
      if (s_[t][t] < 0) row_negate(t);
      ++t;
    }
    SmithDecomposition out;
    out.u = pack(u_, m_, m_);
    out.u_inv = pack(uinv_, m_, m_);
    out.v = pack(v_, n_, n_);
    out.v_inv = pack(vinv_, n_, n_);
    out.s = pack(s_, m_, n_);
    out.rank = t;
    return out;
  }

private:
  static std::vector<std::vector<Int>> dense_identity(int k) {
    std::vector<std::vector<Int>> d(k, std::vector<Int>(k, Int(0)));
    for (int i = 0; i < k; ++i) d[i][i] = 1;
    return d;
  }

  static IntMatrix pack(const std::vector<std::vector<Int>>& d, int r, int c) {
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (d[i][j] != 0) m.set(i, j, d[i][j]);
    return m;
  }

  // Row ops act as s <- E s, u <- E u, uinv <- uinv E^{-1}.
  void row_swap(int i, int k) {
    if (i == k) return;
    s_[i].swap(s_[k]);
    u_[i].swap(u_[k]);
    for (int r = 0; r < m_; ++r) std::swap(uinv_[r][i], uinv_[r][k]);
  }
  void row_negate(int i) {
    for (auto& x : s_[i]) x = -x;
    for (auto& x : u_[i]) x = -x;
    for (int r = 0; r < m_; ++r) uinv_[r][i] = -uinv_[r][i];
  }
  void row_axpy(int i, int k, const Int& q) {  // row_i -= q * row_k
    if (q == 0) return;
    for (int j = 0; j < n_; ++j)
      if (s_[k][j] != 0) s_[i][j] -= q * s_[k][j];
    for (int j = 0; j < m_; ++j)
      if (u_[k][j] != 0) u_[i][j] -= q * u_[k][j];
    for (int r = 0; r < m_; ++r)
      if (uinv_[r][i] != 0) uinv_[r][k] += q * uinv_[r][i];
  }

  // Column ops act as s <- s F, v <- v F, vinv <- F^{-1} vinv.
  void col_swap(int j, int l) {
    if (j == l) return;
    for (int i = 0; i < m_; ++i) std::swap(s_[i][j], s_[i][l]);
    for (int i = 0; i < n_; ++i) std::swap(v_[i][j], v_[i][l]);
    vinv_[j].swap(vinv_[l]);
  }
  void col_axpy(int j, int l, const Int& q) {  // col_j -= q * col_l
    if (q == 0) return;
    for (int i = 0; i < m_; ++i)
      if (s_[i][l] != 0) s_[i][j] -= q * s_[i][l];
    for (int i = 0; i < n_; ++i)
      if (v_[i][l] != 0) v_[i][j] -= q * v_[i][l];
    for (int c = 0; c < n_; ++c)
      if (vinv_[j][c] != 0) vinv_[l][c] += q * vinv_[j][c];
  }

  // Smallest |entry| in the trailing block, row-major on ties; moves it to (t,t).
  bool move_pivot(int t) {
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m_; ++i)
      for (int j = t; j < n_; ++j) {
        const Int& x = s_[i][j];
        if (x == 0) continue;
        Int a = abs(x);
        if (pi < 0 || a < best) {
          best = a;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) return false;
    row_swap(t, pi);
    col_swap(t, pj);
    return true;
  }

  void reduce_block(int t) {
    for (;;) {
      // Clear column t, re-pivoting on any nonzero remainder (always smaller).
      bool again = true;
      while (again) {
        again = false;
        for (int i = t + 1; i < m_; ++i) {
          if (s_[i][t] == 0) continue;
          row_axpy(i, t, div_round(s_[i][t], s_[t][t]));
          if (s_[i][t] != 0) {
            row_swap(t, i);
            again = true;
          }
        }
      }
      // Clear row t the same way. Column t stays clear: these ops only
      // subtract multiples of column t, which is zero below the pivot.
      bool row_dirty = false;
      for (int j = t + 1; j < n_; ++j) {
        if (s_[t][j] == 0) continue;
        col_axpy(j, t, div_round(s_[t][j], s_[t][t]));
        if (s_[t][j] != 0) {
          col_swap(t, j);
          row_dirty = true;
          break;
        }
      }
      if (row_dirty) continue;
      // Pivot must divide the whole trailing block for the invariant chain.
      bool fixed = false;
      for (int i = t + 1; i < m_ && !fixed; ++i)
        for (int j = t + 1; j < n_ && !fixed; ++j)
          if (s_[i][j] % s_[t][t] != 0) {
            row_axpy(t, i, Int(-1));  // fold row i into row t and restart
            fixed = true;
          }
      if (!fixed) return;
    }
  }

  int m_, n_;
  std::vector<std::vector<Int>> s_, u_, uinv_, v_, vinv_;
};

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
  return detail::SmithWorker(a).run();
}

inline bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  SmithDecomposition d = smith_normal_form(a);
  if (d.rank != a.rows()) return false;
  for (const Int& x : d.diagonal())
    if (x != 1) return false;
  return true;
}

// Fixed-matrix solver: factor once, solve many right-hand sides.
// The returned solution is the canonical one: zero coordinates in the free
// positions of the Smith coordinate system.
class SmithSolver {
public:
  explicit SmithSolver(IntMatrix a) : a_(std::move(a)), dec_(smith_normal_form(a_)) {}

  const IntMatrix& matrix() const { return a_; }
  const SmithDecomposition& decomposition() const { return dec_; }
  int rank() const { return dec_.rank; }

  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const {
    if (static_cast<int>(b.size()) != a_.rows())
      throw std::invalid_argument("SmithSolver::solve: rhs length " + std::to_string(b.size()) +
                                  " does not match " + a_.shape_string());
    std::vector<Int> c = dec_.u.apply(b);
    std::vector<Int> y(a_.cols(), Int(0));
    const int k = std::min(a_.rows(), a_.cols());
    for (int i = 0; i < static_cast<int>(c.size()); ++i) {
      if (i < k) {
        const Int d = dec_.s.at(i, i);
        if (d != 0) {
          if (c[i] % d != 0) return std::nullopt;
          y[i] = c[i] / d;
          continue;
        }
      }
      if (c[i] != 0) return std::nullopt;
    }
    return dec_.v.apply(y);
  }

  // Columns form a basis of ker(a); as a direct summand of Z^cols the basis
  // is primitive because v is unimodular.
  IntMatrix kernel_basis() const {
    return dec_.v.column_slice(dec_.rank, a_.cols() - dec_.rank);
  }

private:
  IntMatrix a_;
  SmithDecomposition dec_;
};

inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& a,
                                                     const std::vector<Int>& b) {
  return SmithSolver(a).solve(b);
}

}  // namespace gpdhom

#endif  // GPDHOM_SMITH_HPP
