// Dense matrices over the Laurent polynomial ring.
//
// Determinants use fraction-free (Bareiss) elimination.  det() runs the
// elimination update of each pivot step as an OpenMP parallel loop when
// built with OpenMP; det_serial() is the single-threaded reference kept for
// testing and benchmarking.  Both produce identical Polys.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qfib/poly.hpp"
#include "qfib/quad_ext.hpp"

namespace qfib {

class EntryUsesZ : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AlphaComponentNonzero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows);

  static PolyMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> entries_;
};

using QuadVector = std::vector<QuadElem>;

Poly det(const PolyMatrix& m);
Poly det_serial(const PolyMatrix& m);

/// det(z I - M).  Throws EntryUsesZ if any entry already involves z.
Poly charpoly(const PolyMatrix& m);

/// a(n)[i][j] = binom(i-1, n-j) x^{i+j-n-1} s^{n-j} (1-based), zero where the binomial vanishes.
PolyMatrix hoggatt(int n);

/// sum_{j=0..n} (-1)^{binom(j+1,2)} s^{binom(j,2)} <n j>(x, s) z^{n-j}.
Poly fibonomial_charpoly(int n);

QuadVector mat_vec(const PolyMatrix& m, const QuadVector& v);

/// u(n, i, j) = sum_{k=1..j} (-s)^{i-k} binom(i-1, k-1) binom(n-i, j-k) alpha^{2k-i-1}, i = 1..n.
QuadVector prodinger_eigvec(int n, int j);
/// a(n) u(n, j) == alpha^{j-1} beta^{n-j} u(n, j).
bool verify_prodinger(int n, int j);

/// prod_{j=0..k} (z - alpha^{k-j} beta^j) minus its fibonomial expansion.
/// Throws AlphaComponentNonzero if the product leaves the base ring.
Poly root_product_residual(int k);

}  // namespace qfib
