#include "primroot/exact_linalg.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace primroot {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntegerMatrix: ragged rows");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<BigInt>& diag, std::size_t rows,
                                      std::size_t cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < std::min({diag.size(), rows, cols}); ++i) m(i, i) = diag[i];
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j).swap((*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a).swap((*this)(i, b));
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

void write_matrix(std::ostream& os, const IntegerMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
    os << '\n';
  }
}

IntegerMatrix read_matrix(std::istream& is) {
  long long rows = -1;
  long long cols = -1;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0) {
    throw std::runtime_error("matrix text: expected header \"rows cols\"");
  }
  IntegerMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  std::string token;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!(is >> token)) throw std::runtime_error("matrix text: too few entries");
      if (m(i, j).set_str(token, 10) != 0) {
        throw std::runtime_error("matrix text: bad integer '" + token + "'");
      }
    }
  }
  return m;
}

namespace {

/// Fraction-free elimination. Returns the rank; when `det` is given and the matrix
/// is square, also stores the determinant.
std::size_t bareiss(IntegerMatrix a, bool largest_pivot, BigInt* det) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BigInt prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        if (!pivot || (largest_pivot && mpz_cmpabs(a(i, j).get_mpz_t(), a(pivot->first, pivot->second).get_mpz_t()) > 0)) {
          pivot = {i, j};
          if (!largest_pivot) break;
        }
      }
      if (pivot && !largest_pivot) break;
    }
    if (!pivot) break;
    if (pivot->first != k) {
      a.swap_rows(pivot->first, k);
      sign = -sign;
    }
    if (pivot->second != k) {
      a.swap_cols(pivot->second, k);
      sign = -sign;
    }
    ++rank;
    const BigInt& akk = a(k, k);
    for (std::size_t i = k + 1; i < rows; ++i) {
      const BigInt aik = a(i, k);
      for (std::size_t j = k + 1; j < cols; ++j) {
        BigInt& aij = a(i, j);
        aij *= akk;
        aij -= aik * a(k, j);
        mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = akk;
  }
  if (det) {
    *det = rank == rows ? BigInt(sign * prev) : BigInt(0);
  }
  return rank;
}

}  // namespace

std::size_t rank_rational(const IntegerMatrix& m) { return bareiss(m, true, nullptr); }

BigInt determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  if (m.rows() == 0) return 1;
  BigInt det;
  bareiss(m, false, &det);
  return det;
}

std::size_t rank_mod_prime(const IntegerMatrix& m, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("rank_mod_prime: modulus is not prime");
  const auto mod = static_cast<std::int64_t>(q);
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  BigInt r;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_fdiv_r_ui(r.get_mpz_t(), m(i, j).get_mpz_t(), q);
      a[i * cols + j] = r.get_si();
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * cols + j]; };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(rank, j));
    }
    const auto inv = inverse_mod(at(rank, c), mod);
    for (std::size_t j = c; j < cols; ++j) at(rank, j) = at(rank, j) * inv % mod;
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const auto f = at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        at(i, j) = mod_floor(at(i, j) - f * at(rank, j) % mod, mod);
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const IntegerMatrix& m, OddPrime p) {
  return rank_mod_prime(m, static_cast<std::uint64_t>(p.value()));
}

std::size_t InvariantFactors::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal_.begin(), diagonal_.end(), [](const BigInt& d) { return sgn(d) != 0; }));
}

bool InvariantFactors::is_valid_chain() const {
  bool seen_zero = false;
  for (std::size_t i = 0; i < diagonal_.size(); ++i) {
    const BigInt& d = diagonal_[i];
    if (sgn(d) < 0) return false;
    if (sgn(d) == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (i > 0 && !mpz_divisible_p(d.get_mpz_t(), diagonal_[i - 1].get_mpz_t())) return false;
  }
  return true;
}

namespace {

/// Row/column reduction over Z. Row operations are mirrored on `left` and column
/// operations on `right` when they are non-null.
class SmithReducer {
 public:
  SmithReducer(IntegerMatrix a, IntegerMatrix* left, IntegerMatrix* right)
      : a_(std::move(a)), left_(left), right_(right) {}

  InvariantFactors run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    std::vector<BigInt> diag(n);
    for (std::size_t t = 0; t < n; ++t) {
      if (!reduce_corner(t)) break;
      if (sgn(a_(t, t)) < 0) negate_row(t);
      diag[t] = a_(t, t);
    }
    return InvariantFactors(std::move(diag));
  }

 private:
  // Smallest |entry| in the trailing submatrix, ties to the lowest (row, col).
  std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const BigInt& v = a_(i, j);
        if (sgn(v) == 0) continue;
        if (!best || mpz_cmpabs(v.get_mpz_t(), a_(best->first, best->second).get_mpz_t()) < 0) {
          best = {i, j};
          if (v == 1 || v == -1) return best;
        }
      }
    }
    return best;
  }

  // Leaves a_(t, t) dividing everything in the trailing block with row t and
  // column t cleared. Returns false when the trailing block is zero.
  bool reduce_corner(std::size_t t) {
    for (;;) {
      const auto pivot = smallest_pivot(t);
      if (!pivot) return false;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool cleared = true;
      BigInt q;
      for (std::size_t i = t + 1; i < a_.rows(); ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_row_multiple(i, t, -q);
        if (sgn(a_(i, t)) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_col_multiple(j, t, -q);
        if (sgn(a_(t, j)) != 0) cleared = false;
      }
      if (!cleared) continue;

      const auto bad_row = first_non_divisible_row(t);
      if (!bad_row) return true;
      add_row_multiple(t, *bad_row, BigInt(1));
    }
  }

  std::optional<std::size_t> first_non_divisible_row(std::size_t t) const {
    const BigInt& d = a_(t, t);
    if (d == 1 || d == -1) return std::nullopt;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (!mpz_divisible_p(a_(i, j).get_mpz_t(), d.get_mpz_t())) return i;
      }
    }
    return std::nullopt;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    a_.swap_rows(a, b);
    if (left_) left_->swap_rows(a, b);
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    a_.swap_cols(a, b);
    if (right_) right_->swap_cols(a, b);
  }

  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      if (sgn(a_(src, j)) != 0) a_(dst, j) += factor * a_(src, j);
    }
    if (left_) {
      for (std::size_t j = 0; j < left_->cols(); ++j) {
        if (sgn((*left_)(src, j)) != 0) (*left_)(dst, j) += factor * (*left_)(src, j);
      }
    }
  }

  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& factor) {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      if (sgn(a_(i, src)) != 0) a_(i, dst) += factor * a_(i, src);
    }
    if (right_) {
      for (std::size_t i = 0; i < right_->rows(); ++i) {
        if (sgn((*right_)(i, src)) != 0) (*right_)(i, dst) += factor * (*right_)(i, src);
      }
    }
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < a_.cols(); ++j) a_(t, j) = -a_(t, j);
    if (left_) {
      for (std::size_t j = 0; j < left_->cols(); ++j) (*left_)(t, j) = -(*left_)(t, j);
    }
  }

  IntegerMatrix a_;
  IntegerMatrix* left_;
  IntegerMatrix* right_;
};

}  // namespace

InvariantFactors smith_normal_form(const IntegerMatrix& m) {
  return SmithReducer(m, nullptr, nullptr).run();
}

SmithDecomposition smith_decomposition(const IntegerMatrix& m) {
  SmithDecomposition out;
  out.left = IntegerMatrix::identity(m.rows());
  out.right = IntegerMatrix::identity(m.cols());
  out.factors = SmithReducer(m, &out.left, &out.right).run();
  return out;
}

}  // namespace primroot
