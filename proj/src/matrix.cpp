#include "g11/matrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace g11 {

Matrix::Matrix(const Field& F, std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : F_(F), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
}

Matrix Matrix::identity(const Field& F, std::size_t n) {
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& F, const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  Matrix m(F, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = F.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const Field& F, std::size_t rows,
                            const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(F, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(F_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  const std::uint64_t p = F_.prime();
  Matrix out(F_, rows_, other.cols_);
  std::vector<std::uint64_t> acc(other.cols_);
  // (p-1)^2 products fit at least 4 times in 64 bits for p < 2^31.
  const std::uint64_t budget = std::numeric_limits<std::uint64_t>::max() / ((p - 1) * (p - 1)) - 1;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint64_t used = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      const std::uint64_t a = (*this)(i, k);
      if (!a) continue;
      auto brow = other.row(k);
      for (std::size_t j = 0; j < other.cols_; ++j) acc[j] += a * brow[j];
      if (++used == budget) {
        for (auto& x : acc) x %= p;
        used = 1;
      }
    }
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) = static_cast<Scalar>(acc[j] % p);
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = F_.add(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
  Matrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = F_.sub(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::scaled(Scalar c) const {
  Matrix out(*this);
  for (auto& x : out.data_) x = F_.mul(x, c);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (rows_ != right.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix out(F_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::copy(row(i).begin(), row(i).end(), out.row(i).begin());
    std::copy(right.row(i).begin(), right.row(i).end(), out.row(i).begin() + cols_);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_ && !(rows_ == 0 || below.rows_ == 0))
    throw std::invalid_argument("vstack column mismatch");
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  Matrix out(F_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  Matrix out(F_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

Matrix Matrix::columns(std::size_t begin, std::size_t end) const {
  Matrix out(F_, rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) out(i, j - begin) = (*this)(i, j);
  return out;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  const std::uint64_t p = F_.prime();
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + static_cast<std::uint64_t>(r[j]) * v[j]) % p;
    out[i] = static_cast<Scalar>(acc);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << F_.to_signed((*this)(i, j));
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

Echelon::Echelon(const Field& F, std::size_t width, std::size_t track_width)
    : F_(F), width_(width), track_width_(track_width) {}

bool Echelon::Reduced::in_span() const {
  return std::all_of(residual.begin(), residual.end(), [](Scalar x) { return x == 0; });
}

void Echelon::reduce_in_place(std::vector<std::uint64_t>& acc, std::vector<std::uint64_t>* tacc) const {
  const std::uint64_t p = F_.prime();
  const std::uint64_t budget = std::numeric_limits<std::uint64_t>::max() / ((p - 1) * (p - 1)) - 2;
  std::uint64_t used = 0;
  for (std::size_t idx : order_) {
    const std::size_t c = pivot_col_[idx];
    const std::uint64_t v = acc[c] % p;
    acc[c] = 0;
    if (!v) continue;
    const std::uint64_t m = p - v;
    const auto& r = rows_[idx];
    std::uint64_t* a = acc.data();
    const Scalar* rr = r.data();
    for (std::size_t j = c + 1; j < width_; ++j) a[j] += m * rr[j];
    if (tacc) {
      const auto& t = tracks_[idx];
      for (std::size_t j = 0; j < track_width_; ++j) (*tacc)[j] += m * t[j];
    }
    if (++used >= budget) {
      for (auto& x : acc) x %= p;
      if (tacc)
        for (auto& x : *tacc) x %= p;
      used = 0;
    }
  }
  for (auto& x : acc) x %= p;
  if (tacc)
    for (auto& x : *tacc) x %= p;
}

bool Echelon::insert(std::span<const Scalar> v, std::span<const Scalar> track) {
  if (v.size() != width_) throw std::invalid_argument("echelon insert: width mismatch");
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  std::vector<std::uint64_t> tacc;
  if (track_width_) {
    if (track.size() != track_width_) throw std::invalid_argument("echelon insert: track width");
    tacc.assign(track.begin(), track.end());
  }
  reduce_in_place(acc, track_width_ ? &tacc : nullptr);
  std::size_t c = 0;
  while (c < width_ && acc[c] == 0) ++c;
  if (c == width_) return false;
  const Scalar inv = F_.inv(static_cast<Scalar>(acc[c]));
  std::vector<Scalar> row(width_);
  for (std::size_t j = c; j < width_; ++j) row[j] = F_.mul(static_cast<Scalar>(acc[j]), inv);
  std::vector<Scalar> trow;
  if (track_width_) {
    trow.resize(track_width_);
    for (std::size_t j = 0; j < track_width_; ++j) trow[j] = F_.mul(static_cast<Scalar>(tacc[j]), inv);
  }
  const std::size_t idx = rows_.size();
  rows_.push_back(std::move(row));
  tracks_.push_back(std::move(trow));
  pivot_col_.push_back(c);
  auto pos = std::lower_bound(order_.begin(), order_.end(), c,
                              [&](std::size_t i, std::size_t col) { return pivot_col_[i] < col; });
  order_.insert(pos, idx);
  return true;
}

Echelon::Reduced Echelon::reduce(std::span<const Scalar> v) const {
  if (v.size() != width_) throw std::invalid_argument("echelon reduce: width mismatch");
  std::vector<std::uint64_t> acc(v.begin(), v.end());
  std::vector<std::uint64_t> tacc(track_width_, 0);
  reduce_in_place(acc, track_width_ ? &tacc : nullptr);
  Reduced out;
  out.residual.assign(acc.begin(), acc.end());
  // tacc accumulated -(combination); flip sign so that v - residual = sum combo * label.
  out.combo.resize(track_width_);
  for (std::size_t j = 0; j < track_width_; ++j) out.combo[j] = F_.neg(static_cast<Scalar>(tacc[j]));
  return out;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(order_.size());
  for (auto i : order_) out.push_back(pivot_col_[i]);
  return out;
}

Matrix Echelon::reduced_basis() const {
  const std::size_t r = rows_.size();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(r);
  for (auto i : order_) rows.push_back(rows_[i]);
  std::vector<std::size_t> piv = pivots();
  const std::uint64_t p = F_.prime();
  // Back substitution, last pivot first.
  for (std::size_t ii = r; ii-- > 0;) {
    const std::size_t c = piv[ii];
    const auto& pr = rows[ii];
    for (std::size_t k = 0; k < ii; ++k) {
      const Scalar v = rows[k][c];
      if (!v) continue;
      const std::uint64_t m = p - v;
      auto& rk = rows[k];
      for (std::size_t j = c; j < width_; ++j)
        rk[j] = static_cast<Scalar>((rk[j] + m * pr[j]) % p);
    }
  }
  Matrix out(F_, r, width_);
  for (std::size_t i = 0; i < r; ++i) std::copy(rows[i].begin(), rows[i].end(), out.row(i).begin());
  return out;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  Echelon e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  Matrix basis = e.reduced_basis();
  Matrix full(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    std::copy(basis.row(i).begin(), basis.row(i).end(), full.row(i).begin());
  return {std::move(full), e.pivots()};
}

std::size_t rank(const Matrix& m) {
  // Reduce along the shorter dimension.
  if (m.rows() > m.cols() * 2) {
    Matrix t = m.transpose();
    Echelon e(m.field(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i) e.insert(t.row(i));
    return e.rank();
  }
  Echelon e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

Matrix kernel_basis(const Matrix& m) {
  Echelon e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  Matrix R = e.reduced_basis();
  auto piv = e.pivots();
  const Field& F = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> cols;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(R(i, f));
    cols.push_back(std::move(v));
  }
  return Matrix::from_columns(F, m.cols(), cols);
}

ColumnSpaceSolver::ColumnSpaceSolver(const Matrix& a)
    : F_(a.field()), unknowns_(a.cols()), ech_(a.field(), a.rows(), a.cols()) {
  std::vector<Scalar> label(a.cols(), 0);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    label[j] = 1;
    ech_.insert(a.column(j), label);
    label[j] = 0;
  }
}

std::optional<std::vector<Scalar>> ColumnSpaceSolver::solve(std::span<const Scalar> b) const {
  auto r = ech_.reduce(b);
  if (!r.in_span()) return std::nullopt;
  return std::move(r.combo);
}

SolveResult solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  ColumnSpaceSolver s(a);
  SolveResult out;
  Matrix X(a.field(), a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto x = s.solve(b.column(j));
    if (!x) {
      out.inconsistent_columns.push_back(j);
      continue;
    }
    for (std::size_t i = 0; i < a.cols(); ++i) X(i, j) = (*x)[i];
  }
  if (out.inconsistent_columns.empty()) out.solution = std::move(X);
  return out;
}

Matrix column_basis(const Matrix& m) {
  Echelon e(m.field(), m.rows());
  std::vector<std::vector<Scalar>> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    auto c = m.column(j);
    if (e.insert(c)) keep.push_back(std::move(c));
  }
  return Matrix::from_columns(m.field(), m.rows(), keep);
}

Matrix intersect_spans(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("intersect_spans: row mismatch");
  const Field& F = a.field();
  Matrix K = kernel_basis(a.hstack(b.scaled(F.neg(1))));
  Matrix u = K.submatrix(
      [&] {
        std::vector<std::size_t> r(a.cols());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
        return r;
      }(),
      [&] {
        std::vector<std::size_t> c(K.cols());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
        return c;
      }());
  if (K.cols() == 0) return Matrix(F, a.rows(), 0);
  return column_basis(a * u);
}

}  // namespace g11
