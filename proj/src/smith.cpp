#include "fermat/smith.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "fermat/error.hpp"

namespace fermat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw Error(ErrorCode::InvalidInput, "entry count does not match shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_with, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix IntMatrix::parse(const std::string& text) {
  std::vector<Integer> entries;
  std::size_t rows = 0, cols = 0;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::stringstream rs(row);
    std::string cell;
    std::size_t count = 0;
    while (std::getline(rs, cell, ',')) {
      cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
      entries.push_back(parse_integer(cell));
      ++count;
    }
    if (count == 0) throw Error(ErrorCode::InvalidInput, "empty matrix row");
    if (rows == 0) cols = count;
    if (count != cols) throw Error(ErrorCode::InvalidInput, "ragged matrix rows");
    ++rows;
  }
  if (rows == 0) throw Error(ErrorCode::InvalidInput, "empty matrix");
  return IntMatrix(rows, cols, std::move(entries));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidInput, "shape mismatch in product");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::size_t SNFResult::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i)
    if (D(i, i) != 0) ++r;
  return r;
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

namespace {

// Elementary operations applied simultaneously to the working matrix and
// the accumulated transforms.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& a)
      : a_(a), u_(IntMatrix::identity(a.rows())), v_(IntMatrix::identity(a.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a_.cols(); ++c) std::swap(a_(i, c), a_(j, c));
    for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(i, c), u_(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a_.rows(); ++r) std::swap(a_(r, i), a_(r, j));
    for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, i), v_(r, j));
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(dst, c) += q * a_(src, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(dst, c) += q * u_(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < a_.rows(); ++r) a_(r, dst) += q * a_(r, src);
    for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, dst) += q * v_(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a_.cols(); ++c) a_(i, c) = -a_(i, c);
    for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = -u_(i, c);
  }

  // Smallest nonzero |entry| in the lower-right block from (k,k); ties go to
  // the lowest (row, col). Returns false when the block is zero.
  bool find_pivot(std::size_t k, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    Integer best;
    for (std::size_t r = k; r < a_.rows(); ++r)
      for (std::size_t c = k; c < a_.cols(); ++c) {
        const Integer& v = a_(r, c);
        if (v == 0) continue;
        if (!found || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
          best = v;
          pr = r;
          pc = c;
          found = true;
        }
      }
    return found;
  }

  SNFResult run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t pr = 0, pc = 0;
      if (!find_pivot(k, pr, pc)) break;
      while (true) {
        swap_rows(k, pr);
        swap_cols(k, pc);
        const Integer pivot = a_(k, k);
        bool dirty = false;
        for (std::size_t i = k + 1; i < a_.rows(); ++i) {
          if (a_(i, k) == 0) continue;
          Integer q = a_(i, k) / pivot;  // truncating
          if (q != 0) add_row(i, k, -q);
          dirty = dirty || a_(i, k) != 0;
        }
        for (std::size_t j = k + 1; j < a_.cols(); ++j) {
          if (a_(k, j) == 0) continue;
          Integer q = a_(k, j) / pivot;
          if (q != 0) add_col(j, k, -q);
          dirty = dirty || a_(k, j) != 0;
        }
        if (!dirty) {
          // Row and column are clear; enforce divisibility of the block.
          for (std::size_t i = k + 1; i < a_.rows() && !dirty; ++i)
            for (std::size_t j = k + 1; j < a_.cols(); ++j)
              if (!mpz_divisible_p(a_(i, j).get_mpz_t(), pivot.get_mpz_t())) {
                add_row(k, i, 1);
                dirty = true;
                break;
              }
          if (!dirty) break;
        }
        find_pivot(k, pr, pc);
      }
      if (a_(k, k) < 0) negate_row(k);
    }
    return {std::move(u_), std::move(a_), std::move(v_)};
  }

 private:
  IntMatrix a_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) { return Reducer(a).run(); }

InvariantFactors invariant_factors(const IntMatrix& a) {
  SNFResult snf = smith_normal_form(a);
  InvariantFactors out;
  for (const Integer& v : snf.diagonal())
    if (v > 1) out.factors.push_back(v);
  out.free_rank = a.rows() - snf.rank();
  return out;
}

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& a) {
  SNFResult snf = smith_normal_form(a);
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = snf.rank(); j < a.cols(); ++j) {
    std::vector<Integer> v(a.cols());
    for (std::size_t r = 0; r < a.cols(); ++r) v[r] = snf.V(r, j);
    auto lead = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (lead != v.end() && *lead < 0)
      for (auto& x : v) x = -x;
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix m_matrix(const Integer& a, const Integer& b, const Integer& c) {
  return IntMatrix(3, 3, {a, -b, 0, 0, b, -c, -a, 0, c});
}

IntMatrix j_matrix(const Integer& a, const Integer& b, const Integer& c) {
  return IntMatrix(4, 3, {a, 0, 0, 0, b, 0, 0, 0, c, 1, 1, 1});
}

}  // namespace fermat
