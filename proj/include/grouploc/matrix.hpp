#pragma once
// Dense exact integer matrices, Smith normal form, Hermite form, integer kernels.
#include <cstddef>
#include <optional>
#include <vector>

#include "grouploc/numbers.hpp"

namespace grouploc {

struct IntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMat() = default;
  IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  static IntMat identity(std::size_t n);
  bool operator==(const IntMat&) const = default;
};

IntMat mat_mul(const IntMat& A, const IntMat& B);

// S = U*A*V with U, V unimodular; diag holds all min(rows,cols) diagonal entries of S,
// nonnegative, each dividing the next among the nonzero ones (zeros trail).
// When with_transform, V and Vinv are the accumulated column transform and its inverse:
// the row lattice satisfies rowspan(A)·V = rowspan(S), and a row vector g has
// coordinates g·V in the basis where the lattice is ⊕ d_i·e_i.
struct SnfResult {
  std::vector<Int> diag;
  IntMat V, Vinv;
  bool with_transform = false;
};
SnfResult snf(IntMat A, bool with_transform = false);

// Hermite-style integer row echelon basis of the row span. Rows returned with strictly
// increasing pivot columns, positive pivots, entries above each pivot reduced mod pivot.
struct HnfResult {
  std::vector<std::vector<Int>> rows;
  std::vector<std::size_t> pivot_col;
};
HnfResult hnf_rows(const IntMat& A);

// Membership of v in the row lattice; nullopt if outside, else the (unique) coordinates
// of v in the HNF basis.
std::optional<std::vector<Int>> lattice_coords(const HnfResult& H, std::vector<Int> v);

// Basis of { x : A x = 0 } as column vectors.
std::vector<std::vector<Int>> kernel_cols(const IntMat& A);

}  // namespace grouploc
