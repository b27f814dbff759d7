#pragma once

// Small dense simplex solver, exact under rational scalars. Two-phase
// tableau with Bland's rule, so termination needs no perturbation and the
// returned vertex is deterministic.

#include <vector>

#include <Eigen/Dense>

#include "widthlab/scalar.hpp"

namespace widthlab {

enum class LpStatus { optimal, infeasible, unbounded };

template <typename S>
using DynMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using DynVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <typename S>
struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  S objective = S(0);
  DynVector<S> x;
};

namespace detail {

template <typename S>
class SimplexTableau {
 public:
  // min cost.y  s.t.  rows.y == rhs, y >= 0, starting basis given per row.
  SimplexTableau(DynMatrix<S> rows, DynVector<S> rhs, std::vector<int> basis)
      : m_(static_cast<int>(rhs.size())),
        n_(static_cast<int>(rows.cols())),
        T_(m_ + 1, static_cast<int>(rows.cols()) + 1),
        basis_(std::move(basis)) {
    T_.setZero();
    T_.block(0, 0, m_, n_) = rows;
    T_.col(n_).head(m_) = rhs;
  }

  void set_cost(const DynVector<S>& cost) {
    T_.row(m_).setZero();
    T_.row(m_).head(n_) = cost.transpose();
    // Zero the reduced costs of the current basis.
    for (int i = 0; i < m_; ++i) {
      const S coef = T_(m_, basis_[i]);
      if (ScalarTraits<S>::sign(coef) != 0) T_.row(m_) -= coef * T_.row(i);
    }
  }

  // Bland: entering = lowest eligible column with negative reduced cost,
  // leaving = lexicographic ratio test on (ratio, basis index).
  // `allowed` marks columns eligible to enter. Returns false on unbounded.
  bool iterate(const std::vector<char>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n_; ++j) {
        if (allowed[j] && ScalarTraits<S>::sign(T_(m_, j)) < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      for (int i = 0; i < m_; ++i) {
        if (ScalarTraits<S>::sign(T_(i, enter)) <= 0) continue;
        if (leave < 0) {
          leave = i;
          continue;
        }
        const S lhs = T_(i, n_) * T_(leave, enter);
        const S rhs = T_(leave, n_) * T_(i, enter);
        const int cmp = ScalarTraits<S>::sign(S(lhs - rhs));
        if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    T_.row(row) /= T_(row, col);
    for (int i = 0; i <= m_; ++i) {
      if (i == row) continue;
      const S coef = T_(i, col);
      if (ScalarTraits<S>::sign(coef) != 0) T_.row(i) -= coef * T_.row(row);
    }
    basis_[row] = col;
  }

  S objective_value() const { return -T_(m_, n_); }
  int rows() const { return m_; }
  int cols() const { return n_; }
  const std::vector<int>& basis() const { return basis_; }
  S basic_value(int row) const { return T_(row, n_); }
  S entry(int row, int col) const { return T_(row, col); }

 private:
  int m_, n_;
  DynMatrix<S> T_;
  std::vector<int> basis_;
};

}  // namespace detail

/// Maximizes c.x subject to A x <= b with x free (internally split into
/// nonnegative parts). Exact for rational S; Bland's rule keeps the optimal
/// vertex deterministic.
template <typename S>
LpSolution<S> lp_maximize(const DynMatrix<S>& A, const DynVector<S>& b, const DynVector<S>& c) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  const int ns = 2 * n;            // split structural variables
  const int total = ns + m + m;    // + slacks + artificials (artificials may be unused)

  DynMatrix<S> rows(m, total);
  rows.setZero();
  DynVector<S> rhs(m);
  std::vector<int> basis(m);
  int art_used = 0;
  for (int i = 0; i < m; ++i) {
    const int neg = ScalarTraits<S>::sign(b(i)) < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) {
      rows(i, j) = S(neg) * A(i, j);
      rows(i, n + j) = S(-neg) * A(i, j);
    }
    rows(i, ns + i) = S(neg);  // slack
    rhs(i) = S(neg) * b(i);
    if (neg < 0) {
      rows(i, ns + m + i) = S(1);  // artificial
      basis[i] = ns + m + i;
      ++art_used;
    } else {
      basis[i] = ns + i;
    }
  }

  detail::SimplexTableau<S> tab(rows, rhs, basis);
  std::vector<char> allowed(total, 1);

  if (art_used > 0) {
    DynVector<S> phase1 = DynVector<S>::Zero(total);
    for (int i = 0; i < m; ++i) phase1(ns + m + i) = S(1);
    tab.set_cost(phase1);
    tab.iterate(allowed);  // phase-I objective is bounded below by 0
    if (ScalarTraits<S>::sign(tab.objective_value()) != 0) return {LpStatus::infeasible, S(0), {}};
    // Drive leftover artificials out of the basis (they sit at value 0).
    for (int i = 0; i < m; ++i) {
      if (tab.basis()[i] < ns + m) continue;
      for (int j = 0; j < ns + m; ++j) {
        if (ScalarTraits<S>::sign(tab.entry(i, j)) != 0) {
          tab.pivot(i, j);
          break;
        }
      }
    }
  }
  for (int i = 0; i < m; ++i) allowed[ns + m + i] = 0;

  DynVector<S> phase2 = DynVector<S>::Zero(total);
  for (int j = 0; j < n; ++j) {
    phase2(j) = -c(j);  // min form of max c.x
    phase2(n + j) = c(j);
  }
  tab.set_cost(phase2);
  if (!tab.iterate(allowed)) return {LpStatus::unbounded, S(0), {}};

  DynVector<S> y = DynVector<S>::Zero(total);
  for (int i = 0; i < m; ++i) {
    if (tab.basis()[i] < ns + m) y(tab.basis()[i]) = tab.basic_value(i);
  }
  LpSolution<S> out;
  out.status = LpStatus::optimal;
  out.x = DynVector<S>(n);
  for (int j = 0; j < n; ++j) out.x(j) = y(j) - y(n + j);
  out.objective = c.dot(out.x);
  return out;
}

/// Minimizing counterpart of lp_maximize.
template <typename S>
LpSolution<S> lp_minimize(const DynMatrix<S>& A, const DynVector<S>& b, const DynVector<S>& c) {
  LpSolution<S> sol = lp_maximize<S>(A, b, DynVector<S>(-c));
  if (sol.status == LpStatus::optimal) sol.objective = -sol.objective;
  return sol;
}

}  // namespace widthlab
