#include "galdesc/matrix.hpp"

#include <algorithm>

namespace galdesc {

RatMatrix::RatMatrix(int rows, int cols, FieldPtr field)
    : rows_(rows), cols_(cols), field_(std::move(field)),
      entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols),
               FieldElement::constant(field_, 0)) {
  if (rows < 0 || cols < 0) throw ShapeError("negative dimension");
}

RatMatrix::RatMatrix(int rows, int cols, std::vector<FieldElement> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw ShapeError("negative dimension");
  if (entries_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw ShapeError("entry count does not match dimensions");
  if (!entries_.empty()) {
    field_ = entries_[0].field();
    for (const auto& e : entries_)
      if (!same_field(e.field(), field_)) throw FieldMismatch();
  } else {
    field_ = nullptr;
  }
}

RatMatrix RatMatrix::identity(int n, const FieldPtr& field) {
  RatMatrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::constant(field, 1);
  return m;
}

RatMatrix RatMatrix::zero(int rows, int cols, const FieldPtr& field) {
  return RatMatrix(rows, cols, field);
}

RatMatrix RatMatrix::scalar(int n, const FieldElement& c) {
  RatMatrix m(n, n, c.field());
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

RatMatrix RatMatrix::from_rationals(int rows, int cols, const std::vector<Rational>& vals,
                                    const FieldPtr& field) {
  if (vals.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
    throw ShapeError("value count does not match dimensions");
  RatMatrix m(rows, cols, field);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = FieldElement::constant(field, vals[static_cast<size_t>(i * cols + j)]);
  return m;
}

namespace {
void require_field(const RatMatrix& a, const RatMatrix& b) {
  if (!same_field(a.field(), b.field())) throw FieldMismatch();
}
}  // namespace

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  require_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError();
  RatMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  require_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError();
  RatMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  require_field(*this, o);
  if (cols_ != o.rows_) throw ShapeError("composition shape mismatch");
  RatMatrix r(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  return scaled(FieldElement::constant(field_, c));
}

RatMatrix RatMatrix::scaled(const FieldElement& c) const {
  RatMatrix r = *this;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j) * c;
  return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || !same_field(field_, o.field_)) return false;
  return entries_ == o.entries_;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool RatMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_, field_);
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RatMatrix RatMatrix::kron(const RatMatrix& o) const {
  require_field(*this, o);
  RatMatrix r(rows_ * o.rows_, cols_ * o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (int k = 0; k < o.rows_; ++k)
        for (int l = 0; l < o.cols_; ++l)
          r.at(i * o.rows_ + k, j * o.cols_ + l) = at(i, j) * o.at(k, l);
    }
  return r;
}

RatMatrix RatMatrix::dsum(const RatMatrix& o) const {
  require_field(*this, o);
  RatMatrix r(rows_ + o.rows_, cols_ + o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) r.at(rows_ + i, cols_ + j) = o.at(i, j);
  return r;
}

RatMatrix RatMatrix::hstack(const RatMatrix& o) const {
  require_field(*this, o);
  if (rows_ != o.rows_) throw ShapeError();
  RatMatrix r(rows_, cols_ + o.cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
  }
  return r;
}

RatMatrix RatMatrix::vstack(const RatMatrix& o) const {
  require_field(*this, o);
  if (cols_ != o.cols_) throw ShapeError();
  RatMatrix r(rows_ + o.rows_, cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
  for (int i = 0; i < o.rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
  return r;
}

RatMatrix RatMatrix::block(int r0, int c0, int nrows, int ncols) const {
  if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_) throw ShapeError("block out of range");
  RatMatrix r(nrows, ncols, field_);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

RatMatrix RatMatrix::map_entries(const std::function<FieldElement(const FieldElement&)>& f,
                                 const FieldPtr& new_field) const {
  RatMatrix r(rows_, cols_, new_field);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = f(at(i, j));
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    FieldElement inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      FieldElement f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Reduced column echelon form of the span of the columns; zero columns dropped.
RatMatrix rcef(const RatMatrix& m) {
  RatMatrix t = m.transpose();
  auto pivots = rref(t);
  int rank = static_cast<int>(pivots.size());
  return t.block(0, 0, rank, t.cols()).transpose();
}

}  // namespace

RankDecomposition mat_rank_kernel_image(const RatMatrix& m) {
  RatMatrix r = m;
  auto pivots = rref(r);
  int rank = static_cast<int>(pivots.size());
  // kernel: one generator per free column
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  RatMatrix ker(m.cols(), m.cols() - rank, m.field());
  int k = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    ker.at(c, k) = FieldElement::constant(m.field(), 1);
    for (int pr = 0; pr < rank; ++pr)
      ker.at(pivots[static_cast<size_t>(pr)], k) = -r.at(pr, c);
    ++k;
  }
  RankDecomposition out{rank, ker.cols() > 0 ? rcef(ker) : ker, rank > 0 ? rcef(m) : RatMatrix(m.rows(), 0, m.field())};
  return out;
}

std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatMatrix& b) {
  if (b.rows() != a.rows() || b.cols() != 1) throw ShapeError("right-hand side shape mismatch");
  RatMatrix aug = a.hstack(b);
  auto pivots = rref(aug);
  // inconsistent iff a pivot lands in the last column
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RatMatrix x(a.cols(), 1, a.field());
  for (size_t pr = 0; pr < pivots.size(); ++pr)
    x.at(pivots[pr], 0) = aug.at(static_cast<int>(pr), a.cols());
  auto dec = mat_rank_kernel_image(a);
  return LinearSolution{x, dec.kernel_basis};
}

IdempotentSplitting split_idempotent(const RatMatrix& e) {
  if (!e.is_square()) throw NotIdempotent("idempotent must be square");
  if (e * e != e) throw NotIdempotent();
  RatMatrix incl = e.is_zero() ? RatMatrix(e.rows(), 0, e.field()) : rcef(e);
  int r = incl.cols();
  // e = incl * proj; since incl is in reduced column echelon form, the
  // coefficients are read off at the pivot rows.
  RatMatrix proj(r, e.rows(), e.field());
  {
    // pivot rows of incl
    int row = 0;
    for (int c = 0; c < r; ++c) {
      while (row < e.rows() && incl.at(row, c).is_zero()) ++row;
      for (int j = 0; j < e.cols(); ++j) proj.at(c, j) = e.at(row, j);
      ++row;
    }
  }
  IdempotentSplitting s{r, incl, proj};
  if (!(s.projection * s.inclusion).is_identity() && r > 0)
    throw Error("internal: idempotent splitting failed");
  return s;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error("inverse of non-square matrix");
  RatMatrix aug = m.hstack(RatMatrix::identity(m.rows(), m.field()));
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != m.rows() ||
      (!pivots.empty() && pivots.back() >= m.cols()))
    throw Error("matrix is singular");
  return aug.block(0, m.cols(), m.rows(), m.cols());
}

bool is_invertible(const RatMatrix& m) {
  if (!m.is_square()) return false;
  return mat_rank_kernel_image(m).rank == m.rows();
}

std::vector<Rational> flatten_q(const RatMatrix& m) {
  int d = field_degree(m.field());
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(m.rows() * m.cols() * d));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      for (int t = 0; t < d; ++t) out.push_back(m.at(i, j).coords()[static_cast<size_t>(t)]);
  return out;
}

RatMatrix flatten_columns_q(const std::vector<RatMatrix>& mats) {
  if (mats.empty()) return RatMatrix(0, 0, nullptr);
  auto first = flatten_q(mats[0]);
  RatMatrix out(static_cast<int>(first.size()), static_cast<int>(mats.size()), nullptr);
  for (size_t c = 0; c < mats.size(); ++c) {
    auto v = flatten_q(mats[c]);
    if (v.size() != first.size()) throw ShapeError("flattened columns differ in length");
    for (size_t i = 0; i < v.size(); ++i)
      out.at(static_cast<int>(i), static_cast<int>(c)) = FieldElement::constant(nullptr, v[i]);
  }
  return out;
}

}  // namespace galdesc
