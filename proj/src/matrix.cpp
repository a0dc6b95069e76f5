#include "grouploc/matrix.hpp"

#include "grouploc/errors.hpp"

namespace grouploc {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
  if (A.cols != B.rows) fail(Err::Internal, "mat_mul shape mismatch");
  IntMat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

namespace {

struct ColOps {
  // Maintains V (A <- A*E implies V <- V*E) and Vinv (Vinv <- E^-1 * Vinv).
  IntMat V, Vinv;
  bool active = false;
  void init(std::size_t n) {
    V = IntMat::identity(n);
    Vinv = IntMat::identity(n);
    active = true;
  }
  void swap(std::size_t i, std::size_t j) {
    if (!active) return;
    for (std::size_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
    for (std::size_t c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
  }
  // col_j += f*col_i  (E = I + f*e_ij, E^-1 = I - f*e_ij: row_i -= f*row_j on Vinv)
  void add(std::size_t i, std::size_t j, const Int& f) {
    if (!active || f == 0) return;
    for (std::size_t r = 0; r < V.rows; ++r) V.at(r, j) += f * V.at(r, i);
    for (std::size_t c = 0; c < Vinv.cols; ++c) Vinv.at(i, c) -= f * Vinv.at(j, c);
  }
  void negate(std::size_t i) {
    if (!active) return;
    for (std::size_t r = 0; r < V.rows; ++r) V.at(r, i) = -V.at(r, i);
    for (std::size_t c = 0; c < Vinv.cols; ++c) Vinv.at(i, c) = -Vinv.at(i, c);
  }
};

}  // namespace

SnfResult snf(IntMat A, bool with_transform) {
  const std::size_t m = A.rows, n = A.cols;
  SnfResult res;
  res.with_transform = with_transform;
  ColOps ops;
  if (with_transform) ops.init(n);

  auto row_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(A.at(i, c), A.at(j, c));
  };
  auto row_add = [&](std::size_t src, std::size_t dst, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < n; ++c) A.at(dst, c) += f * A.at(src, c);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(A.at(r, i), A.at(r, j));
    ops.swap(i, j);
  };
  auto col_add = [&](std::size_t src, std::size_t dst, const Int& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < m; ++r) A.at(r, dst) += f * A.at(r, src);
    ops.add(src, dst, f);
  };

  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    // Minimal |pivot| in the remaining block limits entry growth.
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& v = A.at(i, j);
        if (v == 0) continue;
        Int av = iabs(v);
        if (!found || av < best) {
          best = av;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;  // remaining block zero; trailing diagonal entries stay 0
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);

    for (;;) {
      // Clear column t below the pivot.
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A.at(i, t) == 0) continue;
        Int q = A.at(i, t) / A.at(t, t);
        row_add(t, i, -q);
        if (A.at(i, t) != 0) {  // remainder smaller than pivot: swap up, retry
          row_swap(i, t);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A.at(t, j) == 0) continue;
        Int q = A.at(t, j) / A.at(t, t);
        col_add(t, j, -q);
        if (A.at(t, j) != 0) {
          col_swap(j, t);
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      // Pivot must divide every entry of the remaining block (gives the divisor chain).
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n && fixed; ++j)
          if (A.at(i, j) % A.at(t, t) != 0) {
            row_add(i, t, 1);  // pulls the offending row in; |pivot| will shrink
            fixed = false;
          }
      if (fixed) break;
    }
  }

  res.diag.resize(lim);
  for (std::size_t t = 0; t < lim; ++t) {
    if (A.at(t, t) < 0) {
      // normalize sign via a column negation so V stays consistent
      for (std::size_t r = 0; r < m; ++r) A.at(r, t) = -A.at(r, t);
      ops.negate(t);
    }
    res.diag[t] = A.at(t, t);
  }
  if (with_transform) {
    res.V = ops.V;
    res.Vinv = ops.Vinv;
  }
  return res;
}

HnfResult hnf_rows(const IntMat& A) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(A.rows);
  for (std::size_t i = 0; i < A.rows; ++i) {
    std::vector<Int> r(A.cols);
    for (std::size_t j = 0; j < A.cols; ++j) r[j] = A.at(i, j);
    rows.push_back(std::move(r));
  }
  HnfResult H;
  std::size_t col = 0, done = 0;
  const std::size_t n = A.cols;
  while (col < n) {
    // gcd-combine all rows with support at `col` into one pivot row
    std::size_t piv = done;
    bool found = false;
    for (std::size_t i = done; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        if (!found || iabs(rows[i][col]) < iabs(rows[piv][col])) piv = i;
        found = true;
      }
    if (!found) {
      ++col;
      continue;
    }
    std::swap(rows[done], rows[piv]);
    for (;;) {
      bool again = false;
      for (std::size_t i = done + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q = rows[i][col] / rows[done][col];
        for (std::size_t j = col; j < n; ++j) rows[i][j] -= q * rows[done][j];
        if (rows[i][col] != 0) {
          std::swap(rows[done], rows[i]);
          again = true;
        }
      }
      if (!again) break;
    }
    if (rows[done][col] < 0)
      for (std::size_t j = col; j < n; ++j) rows[done][j] = -rows[done][j];
    // reduce entries above the pivot
    for (std::size_t i = 0; i < done; ++i) {
      if (rows[i][col] == 0) continue;
      Int q = rows[i][col] / rows[done][col];
      if (rows[i][col] % rows[done][col] != 0 && rows[i][col] < 0) q -= 1;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[done][j];
    }
    H.pivot_col.push_back(col);
    ++done;
    ++col;
  }
  rows.resize(done);
  H.rows = std::move(rows);
  return H;
}

std::optional<std::vector<Int>> lattice_coords(const HnfResult& H, std::vector<Int> v) {
  std::vector<Int> coords(H.rows.size());
  for (std::size_t k = 0; k < H.rows.size(); ++k) {
    std::size_t p = H.pivot_col[k];
    if (v[p] % H.rows[k][p] != 0) return std::nullopt;
    Int q = v[p] / H.rows[k][p];
    coords[k] = q;
    if (q != 0)
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= q * H.rows[k][j];
  }
  for (const Int& x : v)
    if (x != 0) return std::nullopt;
  return coords;
}

std::vector<std::vector<Int>> kernel_cols(const IntMat& A) {
  SnfResult s = snf(A, /*with_transform=*/true);
  std::vector<std::vector<Int>> out;
  for (std::size_t j = 0; j < A.cols; ++j) {
    bool in_diag = j < s.diag.size();
    if (in_diag && s.diag[j] != 0) continue;
    std::vector<Int> col(A.cols);
    for (std::size_t i = 0; i < A.cols; ++i) col[i] = s.V.at(i, j);
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace grouploc
