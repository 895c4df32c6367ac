#pragma once
/// Dense exact linear algebra over a field policy (see fields.hpp).
///
/// Subspaces are stored as "pivoted reduced" bases: every basis row has a
/// designated pivot column holding 1, and every other basis row is 0 there.
/// This is weaker than reduced row echelon form (pivots need not be leading
/// entries) but supports the same operations: membership, reduction modulo
/// the subspace, and quotient coordinates. Kernel bases come out in this
/// form for free, which is what the saturation recursion consumes.

#include <jdefect/fields.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jdefect {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;

inline ExactMatrix make_exact(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  ExactMatrix m(r, c, Rational(0));
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

template <class Field>
Matrix<typename Field::value_type> convert(const Field& F, const ExactMatrix& m) {
  Matrix<typename Field::value_type> out(m.rows(), m.cols(), F.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = F.from_rational(m(i, j));
  return out;
}

template <class Field>
std::vector<typename Field::value_type> mat_vec(const Field& F,
                                                const Matrix<typename Field::value_type>& m,
                                                std::span<const typename Field::value_type> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<typename Field::value_type> out(m.rows(), F.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!F.is_zero(m(i, j)) && !F.is_zero(v[j])) out[i] = F.add(out[i], F.mul(m(i, j), v[j]));
  return out;
}

// ---------------------------------------------------------------------------

template <class Field>
class Subspace {
 public:
  using T = typename Field::value_type;
  using Vector = std::vector<T>;

  Subspace(const Field& F, std::size_t ambient)
      : F_(F), ambient_(ambient), pivot_row_(ambient, npos) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] != npos; }
  const Field& field() const { return F_; }

  /// Subtracts the component along the basis; afterwards v is zero on every
  /// pivot column.
  void reduce(Vector& v) const {
    check_length(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T c = v[pivots_[i]];
      if (F_.is_zero(c)) continue;
      for (std::size_t k : support_[i]) F_.sub_mul(v[k], c, rows_[i][k]);
    }
  }

  bool contains(Vector v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [&](const T& a) { return F_.is_zero(a); });
  }

  bool contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [&](const Vector& r) { return contains(r); });
  }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(Vector v) {
    reduce(v);
    std::size_t p = npos;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!F_.is_zero(v[k])) {
        p = k;
        break;
      }
    }
    if (p == npos) return false;
    const T inv = F_.inv(v[p]);
    for (auto& a : v)
      if (!F_.is_zero(a)) F_.scale(a, inv);
    std::vector<std::size_t> supp = support_of(v);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T c = rows_[i][p];
      if (F_.is_zero(c)) continue;
      for (std::size_t k : supp) F_.sub_mul(rows_[i][k], c, v[k]);
      support_[i] = support_of(rows_[i]);
    }
    pivot_row_[p] = rows_.size();
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    support_.push_back(std::move(supp));
    return true;
  }

  /// Adopts rows already in pivoted reduced form (row i is 1 at pivots[i]
  /// and 0 at every other pivot). Used by kernel_basis.
  static Subspace from_pivoted(const Field& F, std::size_t ambient, std::vector<Vector> rows,
                               std::vector<std::size_t> pivots) {
    Subspace s(F, ambient);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      s.check_length(rows[i]);
      s.pivot_row_[pivots[i]] = i;
      s.support_.push_back(support_of_impl(F, rows[i]));
    }
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
  }

  /// Columns are the basis vectors.
  Matrix<T> basis_matrix() const {
    Matrix<T> m(ambient_, rows_.size(), F_.zero());
    for (std::size_t j = 0; j < rows_.size(); ++j)
      for (std::size_t i = 0; i < ambient_; ++i) m(i, j) = rows_[j][i];
    return m;
  }

  /// Non-pivot column indices, i.e. coordinates of the quotient space.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (pivot_row_[k] == npos) out.push_back(k);
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static std::vector<std::size_t> support_of_impl(const Field& F, const Vector& v) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!F.is_zero(v[k])) s.push_back(k);
    return s;
  }
  std::vector<std::size_t> support_of(const Vector& v) const { return support_of_impl(F_, v); }

  void check_length(const Vector& v) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                  " does not match ambient dimension " + std::to_string(ambient_));
  }

  Field F_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::vector<std::size_t>> support_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
};

template <class Field>
Subspace<Field> row_space(const Field& F, const Matrix<typename Field::value_type>& m) {
  Subspace<Field> s(F, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    s.insert({r.begin(), r.end()});
  }
  return s;
}

template <class Field>
Subspace<Field> column_space(const Field& F, const Matrix<typename Field::value_type>& m) {
  Subspace<Field> s(F, m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) s.insert(m.column(j));
  return s;
}

template <class Field>
std::size_t rank(const Field& F, const Matrix<typename Field::value_type>& m) {
  return row_space(F, m).dim();
}

inline std::size_t rank(const ExactMatrix& m) { return rank(RationalField{}, m); }

/// Kernel of the row space `rows` viewed as the matrix whose rows they are.
template <class Field>
Subspace<Field> kernel_of_rows(const Field& F, const Subspace<Field>& rows) {
  using T = typename Field::value_type;
  const std::size_t n = rows.ambient_dim();
  std::vector<std::size_t> free = rows.free_columns();
  std::vector<std::vector<T>> basis;
  basis.reserve(free.size());
  for (std::size_t f : free) {
    std::vector<T> v(n, F.zero());
    v[f] = F.one();
    for (std::size_t i = 0; i < rows.dim(); ++i) {
      const T& c = rows.rows()[i][f];
      if (!F.is_zero(c)) v[rows.pivots()[i]] = F.neg(c);
    }
    basis.push_back(std::move(v));
  }
  return Subspace<Field>::from_pivoted(F, n, std::move(basis), std::move(free));
}

template <class Field>
Subspace<Field> kernel_subspace(const Field& F, const Matrix<typename Field::value_type>& m) {
  return kernel_of_rows(F, row_space(F, m));
}

/// Columns span {v : M v = 0}; exactly cols - rank of them.
template <class Field>
Matrix<typename Field::value_type> kernel_basis(const Field& F,
                                                const Matrix<typename Field::value_type>& m) {
  return kernel_subspace(F, m).basis_matrix();
}

inline ExactMatrix kernel_basis(const ExactMatrix& m) { return kernel_basis(RationalField{}, m); }

/// {v : M v ∈ target}, where target lives in M's codomain. Each column of M
/// is reduced modulo the target; what remains on the target's free
/// coordinates is the induced map into the quotient, whose kernel is the
/// answer.
template <class Field>
Subspace<Field> preimage_subspace(const Field& F, const Matrix<typename Field::value_type>& m,
                                  const Subspace<Field>& target) {
  using T = typename Field::value_type;
  if (target.ambient_dim() != m.rows())
    throw std::invalid_argument("preimage_kernel: target space has dimension " +
                                std::to_string(target.ambient_dim()) + ", map codomain has " +
                                std::to_string(m.rows()));
  const std::vector<std::size_t> free = target.free_columns();
  Matrix<T> quotient_map(free.size(), m.cols(), F.zero());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<T> c = m.column(j);
    target.reduce(c);
    for (std::size_t i = 0; i < free.size(); ++i) quotient_map(i, j) = c[free[i]];
  }
  return kernel_subspace(F, quotient_map);
}

template <class Field>
Matrix<typename Field::value_type> preimage_kernel(const Field& F,
                                                   const Matrix<typename Field::value_type>& m,
                                                   const Matrix<typename Field::value_type>& v) {
  if (v.rows() != m.rows())
    throw std::invalid_argument("preimage_kernel: V has " + std::to_string(v.rows()) +
                                " rows but M has " + std::to_string(m.rows()));
  return preimage_subspace(F, m, column_space(F, v)).basis_matrix();
}

inline ExactMatrix preimage_kernel(const ExactMatrix& m, const ExactMatrix& v) {
  return preimage_kernel(RationalField{}, m, v);
}

// ---------------------------------------------------------------------------
// Independent rank routes, used to cross-check the pivoted elimination above.

/// Fraction-free (Bareiss) elimination over Z after clearing each row's
/// denominators. Every intermediate entry is a minor of the input, so the
/// divisions are exact.
inline std::size_t bareiss_rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Rank modulo each prime; the maximum is taken because reduction mod p can
/// only lose rank. Rows are scaled to integers first, so denominators never
/// need inverting.
inline std::size_t modular_rank(const ExactMatrix& m, const std::vector<std::uint32_t>& primes) {
  ExactMatrix scaled = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) scaled(i, j) = m(i, j) * l;
  }
  std::size_t best = 0;
  for (std::uint32_t p : primes) {
    PrimeField F(p);
    best = std::max(best, rank(F, convert(F, scaled)));
  }
  return best;
}

}  // namespace jdefect
