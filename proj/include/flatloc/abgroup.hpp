#ifndef FLATLOC_ABGROUP_HPP
#define FLATLOC_ABGROUP_HPP

// Integer matrix normal forms and finitely presented abelian groups.
//
// A presentation is a generator count together with a relation matrix whose
// rows are relation vectors; the group is Z^n / rowspan. Everything here is
// computed exactly, no modular shortcuts.

#include "flatloc/numeric.hpp"

#include <algorithm>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flatloc {

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
void swap_rows(DenseMatrix<Scalar>& m, Eigen::Index i, Eigen::Index j) {
  if (i != j) m.row(i).swap(m.row(j));
}

template <typename Scalar>
void swap_cols(DenseMatrix<Scalar>& m, Eigen::Index i, Eigen::Index j) {
  if (i != j) m.col(i).swap(m.col(j));
}

// row(target) += factor * row(source)
template <typename Scalar>
void add_row_multiple(DenseMatrix<Scalar>& m, Eigen::Index target,
                      Eigen::Index source, const Scalar& factor) {
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    m(target, c) += factor * m(source, c);
  }
}

template <typename Scalar>
void add_col_multiple(DenseMatrix<Scalar>& m, Eigen::Index target,
                      Eigen::Index source, const Scalar& factor) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    m(r, target) += factor * m(r, source);
  }
}

}  // namespace detail

/// D = left * M * right with left, right unimodular and D diagonal with
/// non-negative entries d1 | d2 | ...
template <typename Scalar>
struct SmithDecomposition {
  DenseMatrix<Scalar> diagonal;
  DenseMatrix<Scalar> left;
  DenseMatrix<Scalar> right;

  Eigen::Index rank() const {
    Eigen::Index r = 0;
    const Eigen::Index n = std::min(diagonal.rows(), diagonal.cols());
    while (r < n && diagonal(r, r) != 0) ++r;
    return r;
  }
};

/// Pivot policy: smallest nonzero |entry| in the trailing block, ties broken
/// by the first position in row-major order.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  const Eigen::Index rows = input.rows();
  const Eigen::Index cols = input.cols();

  SmithDecomposition<Scalar> out;
  out.diagonal = input;
  out.left = DenseMatrix<Scalar>::Identity(rows, rows);
  out.right = DenseMatrix<Scalar>::Identity(cols, cols);
  DenseMatrix<Scalar>& a = out.diagonal;

  const Eigen::Index steps = std::min(rows, cols);
  for (Eigen::Index t = 0; t < steps; ++t) {
    while (true) {
      Eigen::Index pr = -1;
      Eigen::Index pc = -1;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (pr < 0 || abs_value(a(i, j)) < abs_value(a(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr < 0) break;  // trailing block is zero

      detail::swap_rows(a, t, pr);
      detail::swap_rows(out.left, t, pr);
      detail::swap_cols(a, t, pc);
      detail::swap_cols(out.right, t, pc);

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        detail::add_row_multiple(a, i, t, Scalar(-q));
        detail::add_row_multiple(out.left, i, t, Scalar(-q));
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        detail::add_col_multiple(a, j, t, Scalar(-q));
        detail::add_col_multiple(out.right, j, t, Scalar(-q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility repair: pull an offending row into the pivot row.
      Eigen::Index offending = -1;
      for (Eigen::Index i = t + 1; i < rows && offending < 0; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            offending = i;
            break;
          }
        }
      }
      if (offending < 0) break;
      detail::add_row_multiple(a, t, offending, Scalar(1));
      detail::add_row_multiple(out.left, t, offending, Scalar(1));
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      out.left.row(t) = -out.left.row(t);
    }
  }
  return out;
}

/// Fraction-free (Bareiss) determinant; exact for integer scalars.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = input.rows();
  if (n != input.cols()) throw PreconditionError("determinant of non-square matrix");
  if (n == 0) return Scalar(1);
  DenseMatrix<Scalar> a = input;
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      detail::swap_rows(a, k, swap);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
    }
    previous = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

/// Rank over the fraction field, by fraction-free elimination.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (a(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    detail::swap_rows(a, rank, pivot);
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (a(r, c) == 0) continue;
      const Scalar f = a(r, c);
      const Scalar p = a(rank, c);
      for (Eigen::Index j = c; j < cols; ++j) {
        a(r, j) = p * a(r, j) - f * a(rank, j);
      }
    }
    ++rank;
  }
  return rank;
}

/// Free rank plus invariant factors (all >= 2, each dividing the next).
struct GroupStructure {
  std::size_t free_rank = 0;
  std::vector<BigInt> invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// e.g. "Z^2 + Z/2 + Z/6", "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

std::ostream& operator<<(std::ostream& os, const GroupStructure& g);

/// Structure of Z^cols / rowspan(m).
GroupStructure cokernel_structure(const IntMatrix& m);

/// Order of an element: a positive integer or infinite.
class ElementOrder {
 public:
  static ElementOrder finite(BigInt n) { return ElementOrder(std::move(n)); }
  static ElementOrder infinite() { return ElementOrder(); }

  bool is_finite() const { return value_.has_value(); }
  const BigInt& value() const;
  std::string to_string() const;

  friend bool operator==(const ElementOrder&, const ElementOrder&) = default;

 private:
  ElementOrder() = default;
  explicit ElementOrder(BigInt n) : value_(std::move(n)) {}
  std::optional<BigInt> value_;
};

class AbelianGroupPresentation {
 public:
  AbelianGroupPresentation(std::size_t generator_count, IntMatrix relations);
  explicit AbelianGroupPresentation(std::size_t generator_count);

  std::size_t generator_count() const { return generator_count_; }
  const IntMatrix& relations() const { return relations_; }

  AbelianGroupPresentation with_relation(const IntVector& relation) const;
  GroupStructure structure() const;

 private:
  std::size_t generator_count_;
  IntMatrix relations_;
};

/// Smallest n >= 1 with n*v in the relation lattice, or infinite.
ElementOrder element_order(const AbelianGroupPresentation& group, const IntVector& v);

/// Matrix text format: "rows cols" then rows of integers.
IntMatrix parse_int_matrix(const std::string& text);
std::string format_int_matrix(const IntMatrix& m);

}  // namespace flatloc

#endif  // FLATLOC_ABGROUP_HPP
