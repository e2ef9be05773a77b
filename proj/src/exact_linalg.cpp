#include "signull/exact_linalg.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "signull/error.hpp"

namespace signull {
namespace {

struct Overflow {};

// 64-bit cell with overflow detection on every Bareiss update.
struct CheckedCell {
  std::int64_t value = 0;

  static CheckedCell update(CheckedCell pivot, CheckedCell a, CheckedCell b, CheckedCell c,
                            CheckedCell prev) {
    // (pivot * a - b * c) / prev, exact by Sylvester's identity.
    __int128 num = static_cast<__int128>(pivot.value) * a.value -
                   static_cast<__int128>(b.value) * c.value;
    __int128 q = num / prev.value;
    if (q > std::numeric_limits<std::int64_t>::max() || q < std::numeric_limits<std::int64_t>::min()) {
      throw Overflow{};
    }
    return {static_cast<std::int64_t>(q)};
  }
  bool is_zero() const { return value == 0; }
  static CheckedCell one() { return {1}; }
};

struct BigCell {
  mpz_class value;

  static BigCell update(const BigCell& pivot, const BigCell& a, const BigCell& b, const BigCell& c,
                        const BigCell& prev) {
    mpz_class num = pivot.value * a.value - b.value * c.value;
    BigCell out;
    mpz_divexact(out.value.get_mpz_t(), num.get_mpz_t(), prev.value.get_mpz_t());
    return out;
  }
  bool is_zero() const { return value == 0; }
  static BigCell one() { return {mpz_class(1)}; }
};

template <typename Cell>
struct Elimination {
  int rank = 0;
  bool odd_swaps = false;
  Cell last_pivot = Cell::one();
};

// Fraction-free elimination with column skipping; every stored entry stays a
// minor of the input, so divisions are exact.
template <typename Cell>
Elimination<Cell> bareiss(std::vector<Cell> a, int n) {
  Elimination<Cell> out;
  Cell prev = Cell::one();
  auto at = [&](int i, int j) -> Cell& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int col = 0; col < n && out.rank < n; ++col) {
    const int r = out.rank;
    int pivot_row = -1;
    for (int i = r; i < n; ++i) {
      if (!at(i, col).is_zero()) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != r) {
      for (int j = 0; j < n; ++j) std::swap(at(pivot_row, j), at(r, j));
      out.odd_swaps = !out.odd_swaps;
    }
    for (int i = r + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j) {
        at(i, j) = Cell::update(at(r, col), at(i, j), at(i, col), at(r, j), prev);
      }
      at(i, col) = Cell{};
    }
    prev = at(r, col);
    out.last_pivot = prev;
    ++out.rank;
  }
  return out;
}

template <typename Cell>
std::vector<Cell> cells_of(const IntMatrix& m) {
  const int n = m.dimension();
  std::vector<Cell> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if constexpr (std::is_same_v<Cell, BigCell>) {
        cells[static_cast<std::size_t>(i) * n + j].value = mpz_class(static_cast<long>(m(i, j)));
      } else {
        cells[static_cast<std::size_t>(i) * n + j].value = m(i, j);
      }
    }
  }
  return cells;
}

}  // namespace

bool IntMatrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntMatrix adjacency_matrix(const SignedGraph& g) {
  IntMatrix a(g.order());
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = to_int(e.sign);
    a(e.v, e.u) = to_int(e.sign);
  }
  return a;
}

int rank_exact(const IntMatrix& m) {
  const int n = m.dimension();
  try {
    return bareiss(cells_of<CheckedCell>(m), n).rank;
  } catch (const Overflow&) {
    return bareiss(cells_of<BigCell>(m), n).rank;
  }
}

mpz_class determinant_exact(const IntMatrix& m) {
  const int n = m.dimension();
  if (n == 0) return 1;
  mpz_class det;
  bool odd = false;
  try {
    auto e = bareiss(cells_of<CheckedCell>(m), n);
    if (e.rank < n) return 0;
    det = mpz_class(static_cast<long>(e.last_pivot.value));
    odd = e.odd_swaps;
  } catch (const Overflow&) {
    auto e = bareiss(cells_of<BigCell>(m), n);
    if (e.rank < n) return 0;
    det = e.last_pivot.value;
    odd = e.odd_swaps;
  }
  return odd ? mpz_class(-det) : det;
}

int nullity_oracle(const SignedGraph& g) { return g.order() - rank_exact(adjacency_matrix(g)); }

int CharPoly::zero_root_multiplicity() const {
  int k = 0;
  while (k < static_cast<int>(coefficients_.size()) && coefficients_[k] == 0) ++k;
  return k;
}

long double CharPoly::evaluate(long double x) const {
  long double acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + static_cast<long double>(it->get_d());
  }
  return acc;
}

CharPoly char_poly(const IntMatrix& m, int max_dimension) {
  const int n = m.dimension();
  if (n > max_dimension) {
    throw BoundError("char_poly dimension " + std::to_string(n) + " exceeds bound " +
                     std::to_string(max_dimension));
  }
  // Samples f(x) = det(xI - M) at x = 0..n.
  std::vector<mpz_class> diff(n + 1);
  for (int x = 0; x <= n; ++x) {
    IntMatrix shifted(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) shifted(i, j) = -m(i, j);
      shifted(i, i) += x;
    }
    diff[x] = determinant_exact(shifted);
  }
  // Newton coefficients on nodes 0..n: c_k = (forward difference)^k f(0) / k!,
  // integral because f has integer coefficients.
  for (int k = 1; k <= n; ++k) {
    for (int x = n; x >= k; --x) diff[x] -= diff[x - 1];
  }
  mpz_class factorial = 1;
  std::vector<mpz_class> newton(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) factorial *= k;
    mpz_divexact(newton[k].get_mpz_t(), diff[k].get_mpz_t(), factorial.get_mpz_t());
  }
  // Expand sum_k c_k * prod_{j<k} (x - j) into the monomial basis.
  std::vector<mpz_class> result(n + 1, 0);
  std::vector<mpz_class> basis{1};
  for (int k = 0; k <= n; ++k) {
    for (std::size_t d = 0; d < basis.size(); ++d) result[d] += newton[k] * basis[d];
    std::vector<mpz_class> next(basis.size() + 1, 0);
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * k;
    }
    basis = std::move(next);
  }
  if (result[n] != 1) throw InternalInconsistency("characteristic polynomial is not monic");
  return CharPoly(std::move(result));
}

std::vector<double> cycle_eigenvalues(int length, bool balanced) {
  if (length < 3) throw InvalidArgument("cycle length must be at least 3");
  std::vector<double> out;
  out.reserve(length);
  for (int k = 1; k <= length; ++k) {
    const double numerator = balanced ? 2.0 * k : 2.0 * k - 1.0;
    out.push_back(2.0 * std::cos(numerator * std::numbers::pi / length));
  }
  return out;
}

}  // namespace signull
