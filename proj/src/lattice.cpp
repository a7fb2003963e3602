#include "zipk/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zipk {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows,
                                          const std::vector<IntegerVector>& columns) {
  IntegerMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::size_t cols,
                                       const std::vector<IntegerVector>& rows) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerVector IntegerMatrix::row(std::size_t i) const {
  return IntegerVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntegerVector IntegerMatrix::column(std::size_t j) const {
  IntegerVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntegerMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntegerVector IntegerMatrix::operator*(const IntegerVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  IntegerVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm f{m, IntegerMatrix::identity(rows), IntegerMatrix::identity(cols)};
  IntegerMatrix& s = f.S;
  const std::size_t diag = std::min(rows, cols);

  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s(i, j) == 0) continue;
          if (pi == rows || abs(s(i, j)) < abs(s(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) return f;  // trailing block is zero

      s.swap_rows(t, pi);
      f.U.swap_rows(t, pi);
      s.swap_cols(t, pj);
      f.V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_row_multiple(i, t, -q);
        f.U.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        s.add_col_multiple(j, t, -q);
        f.V.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce d_t | every trailing entry.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            s.add_row_multiple(t, i, 1);
            f.U.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

IntegerVector cokernel_invariants(const IntegerMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  IntegerVector out(m.rows());
  const std::size_t diag = std::min(m.rows(), m.cols());
  for (std::size_t i = 0; i < diag; ++i) out[i] = f.S(i, i);
  return out;
}

AbelianGroup abelian_group(const IntegerVector& invariants) {
  AbelianGroup g;
  for (const Integer& d : invariants) {
    if (d == 0)
      ++g.free_rank;
    else if (abs(d) > 1)
      g.torsion.push_back(abs(d));
  }
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const Integer& d : torsion) {
    os << (first ? "" : " + ") << "Z/" << d;
    first = false;
  }
  return os.str();
}

std::optional<DiophantineSolution> solve_linear_diophantine(const IntegerMatrix& m,
                                                            const IntegerVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
  const SmithForm f = smith_normal_form(m);
  const IntegerVector ub = f.U * b;
  const std::size_t diag = std::min(m.rows(), m.cols());

  std::size_t r = 0;
  while (r < diag && f.S(r, r) != 0) ++r;

  IntegerVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), f.S(i, i).get_mpz_t())) return std::nullopt;
      y[i] = ub[i] / f.S(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }

  DiophantineSolution sol;
  sol.particular = f.V * y;
  std::vector<IntegerVector> kernel;
  for (std::size_t j = r; j < m.cols(); ++j) kernel.push_back(f.V.column(j));
  sol.kernel = lattice_basis(m.cols(), kernel);
  return sol;
}

std::vector<IntegerVector> integer_kernel(const IntegerMatrix& m) {
  return solve_linear_diophantine(m, IntegerVector(m.rows()))->kernel;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& input) {
  IntegerMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;

  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      Integer g, u, v;
      mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a(pivot_row, col).get_mpz_t(),
                 a(i, col).get_mpz_t());
      const Integer x = a(pivot_row, col) / g;
      const Integer y = a(i, col) / g;
      for (std::size_t j = 0; j < cols; ++j) {
        const Integer top = a(pivot_row, j);
        const Integer bottom = a(i, j);
        a(pivot_row, j) = u * top + v * bottom;
        a(i, j) = x * bottom - y * top;
      }
    }
    if (a(pivot_row, col) == 0) continue;
    if (a(pivot_row, col) < 0) a.negate_row(pivot_row);
    const Integer& p = a(pivot_row, col);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), p.get_mpz_t());
      a.add_row_multiple(i, pivot_row, -q);
    }
    ++pivot_row;
  }

  IntegerMatrix out(pivot_row, cols);
  for (std::size_t i = 0; i < pivot_row; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

std::vector<IntegerVector> lattice_basis(std::size_t dim,
                                         const std::vector<IntegerVector>& vectors) {
  const IntegerMatrix h = hermite_normal_form(IntegerMatrix::from_rows(dim, vectors));
  std::vector<IntegerVector> out;
  out.reserve(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i) out.push_back(h.row(i));
  return out;
}

std::size_t rank(const IntegerMatrix& m) { return hermite_normal_form(m).rows(); }

Integer determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix a = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<std::vector<Rational>> solve_rational(
    const std::vector<std::vector<Rational>>& a_in, const std::vector<Rational>& b) {
  const std::size_t rows = a_in.size();
  if (b.size() != rows) throw std::invalid_argument("right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : a_in.front().size();
  std::vector<std::vector<Rational>> a = a_in;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;

  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = a[i][cols];
  return x;
}

IntegerVector to_integer_vector(const std::vector<long>& v) {
  IntegerVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace zipk
