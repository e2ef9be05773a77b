#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "signull/signed_graph.hpp"

namespace signull {

// Dense square integer matrix, row major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int dimension) : dim_(dimension), data_(static_cast<std::size_t>(dimension) * dimension, 0) {}

  int dimension() const { return dim_; }
  std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }

  bool is_symmetric() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<std::int64_t> data_;
};

// Entry (i,j) is the sign of edge ij, or 0.
IntMatrix adjacency_matrix(const SignedGraph& g);

// Rank over Q by fraction-free (Bareiss) elimination. Runs in 64-bit
// arithmetic with 128-bit products and restarts with GMP integers if an
// intermediate minor overflows.
int rank_exact(const IntMatrix& m);

// Exact determinant, same arithmetic strategy as rank_exact.
mpz_class determinant_exact(const IntMatrix& m);

// n - rank(A(G)); the multiplicity of eigenvalue 0 of the symmetric A(G).
int nullity_oracle(const SignedGraph& g);

// det(xI - M) with exact integer coefficients.
class CharPoly {
 public:
  explicit CharPoly(std::vector<mpz_class> ascending) : coefficients_(std::move(ascending)) {}

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  // Coefficient of x^k.
  const mpz_class& coefficient(int k) const { return coefficients_[k]; }
  const std::vector<mpz_class>& coefficients() const { return coefficients_; }

  int zero_root_multiplicity() const;
  long double evaluate(long double x) const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<mpz_class> coefficients_;
};

inline constexpr int kDefaultCharPolyBound = 16;

// Interpolates det(xI - M) from exact determinants at x = 0..n.
// Throws BoundError above `max_dimension`.
CharPoly char_poly(const IntMatrix& m, int max_dimension = kDefaultCharPolyBound);

// Closed-form cycle spectrum, k = 1..length:
// balanced 2cos(2k*pi/l), unbalanced 2cos((2k-1)*pi/l).
std::vector<double> cycle_eigenvalues(int length, bool balanced);

}  // namespace signull
