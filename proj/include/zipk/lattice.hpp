#pragma once

// Exact integer linear algebra: Smith and Hermite normal forms, linear
// Diophantine systems and cokernel invariants of integer matrices.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace zipk {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, stored row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static IntegerMatrix from_columns(std::size_t rows,
                                    const std::vector<IntegerVector>& columns);
  static IntegerMatrix from_rows(std::size_t cols,
                                 const std::vector<IntegerVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  IntegerVector row(std::size_t i) const;
  IntegerVector column(std::size_t j) const;
  IntegerMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerVector operator*(const IntegerVector& v) const;
  bool operator==(const IntegerMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithForm {
  IntegerMatrix S;
  IntegerMatrix U;
  IntegerMatrix V;
};

/// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ... >= 0.
/// The pivot is always the entry of smallest nonzero absolute value (first
/// in row-major order on ties), so U and V are reproducible.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Elementary divisors of Z^rows / (column span of m), one per row of m,
/// in divisibility order; zeros stand for free summands.
IntegerVector cokernel_invariants(const IntegerMatrix& m);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i].
struct AbelianGroup {
  std::size_t free_rank = 0;
  IntegerVector torsion;  // divisors > 1, divisibility-ordered

  bool is_torsion_free() const { return torsion.empty(); }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

AbelianGroup abelian_group(const IntegerVector& invariants);

struct DiophantineSolution {
  IntegerVector particular;
  /// Z-basis of ker M in row Hermite normal form.
  std::vector<IntegerVector> kernel;
};

/// Solves M x = b over Z. Returns nullopt when no integral solution exists.
std::optional<DiophantineSolution> solve_linear_diophantine(
    const IntegerMatrix& m, const IntegerVector& b);

/// Z-basis of {x : M x = 0}, canonical (row Hermite normal form).
std::vector<IntegerVector> integer_kernel(const IntegerMatrix& m);

/// Row-style Hermite normal form of the lattice spanned by the rows of m.
/// Zero rows are dropped; pivots are positive and entries above a pivot lie
/// in [0, pivot).
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

/// Canonical basis of the lattice spanned by `vectors` (each of length dim).
std::vector<IntegerVector> lattice_basis(std::size_t dim,
                                         const std::vector<IntegerVector>& vectors);

std::size_t rank(const IntegerMatrix& m);

/// Exact determinant via fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& m);

/// Solves the square or overdetermined system A x = b over Q. Returns
/// nullopt if inconsistent; free variables are set to zero.
std::optional<std::vector<Rational>> solve_rational(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

IntegerVector to_integer_vector(const std::vector<long>& v);

}  // namespace zipk
