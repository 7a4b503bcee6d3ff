#include "qfib/poly_matrix.hpp"

#include <exception>
#include <utility>

#include "qfib/qcomb.hpp"

namespace qfib {

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Poly>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("PolyMatrix: ragged rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

namespace {

// One Bareiss elimination step: a(i,j) <- (a(i,j) a(k,k) - a(i,k) a(k,j)) / prev
// for all i, j > k.  Entries are independent within a step.
void bareiss_update(PolyMatrix& a, std::size_t i, std::size_t j, std::size_t k, const Poly& prev) {
  Poly t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
  a(i, j) = laurent_div(t, prev);
}

// Moves a nonzero pivot into row k; returns false if column k is zero below k.
bool select_pivot(PolyMatrix& a, std::size_t k, int& sign) {
  if (!a(k, k).is_zero()) return true;
  for (std::size_t r = k + 1; r < a.rows(); ++r) {
    if (!a(r, k).is_zero()) {
      a.swap_rows(k, r);
      sign = -sign;
      return true;
    }
  }
  return false;
}

template <bool Parallel>
Poly bareiss(PolyMatrix a) {
  if (!a.is_square()) throw std::invalid_argument("det: matrix must be square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  int sign = 1;
  Poly prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!select_pivot(a, k, sign)) return {};
    const std::size_t rest = n - k - 1;
    const auto cells = static_cast<long long>(rest * rest);
    if constexpr (Parallel) {
      // Exceptions may not cross the parallel region; keep the first one.
      std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) if (cells > 1)
      for (long long c = 0; c < cells; ++c) {
        const std::size_t i = k + 1 + static_cast<std::size_t>(c) / rest;
        const std::size_t j = k + 1 + static_cast<std::size_t>(c) % rest;
        try {
          bareiss_update(a, i, j, k, prev);
        } catch (...) {
#pragma omp critical(qfib_bareiss_error)
          if (!error) error = std::current_exception();
        }
      }
      if (error) std::rethrow_exception(error);
    } else {
      for (long long c = 0; c < cells; ++c) {
        const std::size_t i = k + 1 + static_cast<std::size_t>(c) / rest;
        const std::size_t j = k + 1 + static_cast<std::size_t>(c) % rest;
        bareiss_update(a, i, j, k, prev);
      }
    }
    prev = a(k, k);
  }
  Poly d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

}  // namespace

Poly det(const PolyMatrix& m) { return bareiss<true>(m); }

Poly det_serial(const PolyMatrix& m) { return bareiss<false>(m); }

Poly charpoly(const PolyMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: matrix must be square");
  PolyMatrix a(m.rows(), m.cols());
  const Poly z = Poly::var(Var::z);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).uses(Var::z)) throw EntryUsesZ("charpoly: matrix entry involves z");
      a(i, j) = -m(i, j);
    }
    a(i, i) += z;
  }
  return det(a);
}

PolyMatrix hoggatt(int n) {
  if (n < 1) throw std::invalid_argument("hoggatt: n must be positive");
  const auto size = static_cast<std::size_t>(n);
  PolyMatrix a(size, size);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      BigInt c = binomial(i - 1, n - j);
      if (c == 0) continue;
      a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          Poly::monomial(c, Monomial(i + j - n - 1, n - j, 0, 0));
    }
  }
  return a;
}

Poly fibonomial_charpoly(int n) {
  Poly out;
  for (int j = 0; j <= n; ++j) {
    BigInt sign = ((j * (j + 1) / 2) % 2 == 0) ? 1 : -1;
    out += fibonomial(n, j).mul_term(sign, Monomial(0, j * (j - 1) / 2, 0, n - j));
  }
  return out;
}

QuadVector mat_vec(const PolyMatrix& m, const QuadVector& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  QuadVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i] = out[i] + QuadElem(m(i, j)) * v[j];
    }
  }
  return out;
}

QuadVector prodinger_eigvec(int n, int j) {
  if (n < 1 || j < 1 || j > n) throw std::invalid_argument("prodinger_eigvec: need 1 <= j <= n");
  QuadVector u(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    QuadElem entry;
    for (int k = 1; k <= j; ++k) {
      BigInt c = binomial(i - 1, k - 1) * binomial(n - i, j - k);
      if (c == 0) continue;
      // (-s)^{i-k}; i - k may be negative.
      const int e = i - k;
      if ((e % 2 + 2) % 2 == 1) c = -c;
      Poly coeff = Poly::monomial(c, Monomial(0, e, 0, 0));
      entry = entry + QuadElem(coeff) * alpha_pow(2 * k - i - 1);
    }
    u[static_cast<std::size_t>(i - 1)] = std::move(entry);
  }
  return u;
}

bool verify_prodinger(int n, int j) {
  const QuadVector u = prodinger_eigvec(n, j);
  const QuadElem lambda = alpha_pow(j - 1) * conj(alpha_pow(n - j));
  const QuadVector lhs = mat_vec(hoggatt(n), u);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(lhs[i] == lambda * u[i])) return false;
  }
  return true;
}

Poly root_product_residual(int k) {
  if (k < 0) throw std::invalid_argument("root_product_residual: k must be nonnegative");
  const QuadElem z(Poly::var(Var::z));
  QuadElem product(Poly(1));
  for (int j = 0; j <= k; ++j) product = product * (z - alpha_pow(k - j) * conj(alpha_pow(j)));
  if (!product.is_base()) throw AlphaComponentNonzero("root product left the base ring");
  return product.u - fibonomial_charpoly(k + 1);
}

}  // namespace qfib
