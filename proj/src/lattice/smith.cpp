#include "mtinv/lattice/smith.hpp"

#include <utility>

#include "mtinv/errors.hpp"

namespace mtinv {
namespace {

// Row/column operations applied to A while keeping U, U^-1, V, V^-1 in sync.
struct SmithState {
  IntMatrix A, U, U_inv, V, V_inv;

  explicit SmithState(const IntMatrix& m)
      : A(m),
        U(IntMatrix::identity(m.rows())),
        U_inv(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())),
        V_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  }
  // row[t] += k * row[s]
  void add_row(std::size_t t, std::size_t s, const Integer& k) {
    A.add_row_multiple(t, s, k);
    U.add_row_multiple(t, s, k);
    U_inv.add_col_multiple(s, t, -k);
  }
  // col[t] += k * col[s]
  void add_col(std::size_t t, std::size_t s, const Integer& k) {
    A.add_col_multiple(t, s, k);
    V.add_col_multiple(t, s, k);
    V_inv.add_row_multiple(s, t, -k);
  }
  void negate_row(std::size_t i) {
    A.negate_row(i);
    U.negate_row(i);
    U_inv.negate_col(i);
  }
};

// Least nonzero |entry| in rows/cols >= t, ties broken by row-major order.
bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const auto& e = a(i, j);
      if (e == 0) continue;
      if (!found || mpz_cmpabs(e.get_mpz_t(), best.get_mpz_t()) < 0) {
        best = abs(e);
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

}  // namespace

IntVector SmithDecomposition::invariant_factors() const {
  IntVector out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

SmithDecomposition snf(const IntMatrix& m) {
  SmithState s(m);
  const std::size_t n = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(s.A, t, pi, pj)) break;
    for (;;) {
      s.swap_rows(t, pi);
      s.swap_cols(t, pj);
      const Integer pivot = s.A(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (s.A(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.A(i, t).get_mpz_t(), pivot.get_mpz_t());
        s.add_row(i, t, -q);
        if (s.A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (s.A(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s.A(t, j).get_mpz_t(), pivot.get_mpz_t());
        s.add_col(j, t, -q);
        if (s.A(t, j) != 0) clean = false;
      }
      if (clean) {
        // The pivot must divide the remaining block; otherwise fold the
        // offending row into row t and keep reducing.
        bool divides = true;
        for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
          for (std::size_t j = t + 1; j < m.cols(); ++j)
            if (!mpz_divisible_p(s.A(i, j).get_mpz_t(), pivot.get_mpz_t())) {
              s.add_row(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      find_pivot(s.A, t, pi, pj);
    }
    if (s.A(t, t) < 0) s.negate_row(t);
  }
  SmithDecomposition out;
  out.of = m;
  out.rank = t;
  out.D = std::move(s.A);
  out.U = std::move(s.U);
  out.U_inv = std::move(s.U_inv);
  out.V = std::move(s.V);
  out.V_inv = std::move(s.V_inv);
  return out;
}

std::size_t rank(const IntMatrix& m) { return snf(m).rank; }

FinAbGroup cokernel(const IntMatrix& m) {
  const auto s = snf(m);
  return FinAbGroup::from_cyclic_orders(m.rows() - s.rank, s.invariant_factors());
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const auto s = snf(m);
  return s.V.select_columns(s.rank, m.cols() - s.rank);
}

std::optional<IntVector> solve_linear(const IntMatrix& m, const IntVector& target) {
  return LinearSolver(m).solve(target);
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  return m.rows() == m.cols() && abs(determinant(m)) == 1;
}

LinearSolver::LinearSolver(const IntMatrix& m) : smith_(snf(m)) {}

std::optional<IntVector> LinearSolver::solve(const IntVector& target) const {
  const auto& s = smith_;
  if (target.size() != s.of.rows()) throw DimensionMismatch("solve_linear: target length");
  // D y = U b with x = V y.
  IntVector c = s.U * std::span<const Integer>(target);
  IntVector y(s.of.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      const auto& d = s.D(i, i);
      if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), d.get_mpz_t());
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * std::span<const Integer>(y);
}

std::optional<IntMatrix> LinearSolver::solve_columns(const IntMatrix& targets) const {
  std::vector<IntVector> cols;
  cols.reserve(targets.cols());
  for (std::size_t j = 0; j < targets.cols(); ++j) {
    auto x = solve(targets.column(j));
    if (!x) return std::nullopt;
    cols.push_back(std::move(*x));
  }
  return IntMatrix::from_columns(smith_.of.cols(), cols);
}

bool LinearSolver::contains_columns(const IntMatrix& vs) const {
  for (std::size_t j = 0; j < vs.cols(); ++j)
    if (!in_image(vs.column(j))) return false;
  return true;
}

}  // namespace mtinv
