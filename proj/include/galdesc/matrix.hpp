#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "galdesc/numberfield.hpp"

namespace galdesc {

// Dense matrix over Q or a number field. Rows x cols, row-major.
// All entries share one field; this is enforced on construction.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0), field_(nullptr) {}
  RatMatrix(int rows, int cols, FieldPtr field);
  RatMatrix(int rows, int cols, std::vector<FieldElement> entries);

  static RatMatrix identity(int n, const FieldPtr& field);
  static RatMatrix zero(int rows, int cols, const FieldPtr& field);
  static RatMatrix scalar(int n, const FieldElement& c);
  static RatMatrix from_rationals(int rows, int cols, const std::vector<Rational>& vals,
                                  const FieldPtr& field = nullptr);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldPtr& field() const { return field_; }

  const FieldElement& at(int i, int j) const { return entries_[static_cast<size_t>(i * cols_ + j)]; }
  FieldElement& at(int i, int j) { return entries_[static_cast<size_t>(i * cols_ + j)]; }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;  // composition
  RatMatrix scaled(const Rational& c) const;
  RatMatrix scaled(const FieldElement& c) const;
  RatMatrix operator-() const { return scaled(Rational(-1)); }
  bool operator==(const RatMatrix& o) const;
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  bool is_square() const { return rows_ == cols_; }

  RatMatrix transpose() const;
  RatMatrix kron(const RatMatrix& o) const;       // Kronecker product
  RatMatrix dsum(const RatMatrix& o) const;       // block diagonal
  RatMatrix hstack(const RatMatrix& o) const;
  RatMatrix vstack(const RatMatrix& o) const;
  RatMatrix block(int r0, int c0, int nrows, int ncols) const;
  RatMatrix col(int j) const { return block(0, j, rows_, 1); }

  RatMatrix map_entries(const std::function<FieldElement(const FieldElement&)>& f,
                        const FieldPtr& new_field) const;

 private:
  int rows_, cols_;
  FieldPtr field_;
  std::vector<FieldElement> entries_;
};

// Result of splitting an idempotent e = inclusion * projection with
// projection * inclusion = identity on the image.
struct IdempotentSplitting {
  int image_dim;
  RatMatrix inclusion;   // n x image_dim
  RatMatrix projection;  // image_dim x n
};

struct RankDecomposition {
  int rank;
  RatMatrix kernel_basis;  // cols x nullity, reduced column echelon
  RatMatrix image_basis;   // rows x rank, reduced column echelon
};

struct LinearSolution {
  RatMatrix particular;    // one solution of A x = b
  RatMatrix kernel_basis;  // basis of ker A
};

RankDecomposition mat_rank_kernel_image(const RatMatrix& m);
std::optional<LinearSolution> solve_linear(const RatMatrix& a, const RatMatrix& b);
IdempotentSplitting split_idempotent(const RatMatrix& e);
RatMatrix inverse(const RatMatrix& m);  // throws Error if singular
bool is_invertible(const RatMatrix& m);

// Restriction of scalars: flatten every entry to its rational coordinates,
// giving a vector of length rows*cols*deg. Used to pose semilinear
// conditions as Q-linear systems.
std::vector<Rational> flatten_q(const RatMatrix& m);
// Columns = flatten_q of each matrix in the list, as a matrix over Q.
RatMatrix flatten_columns_q(const std::vector<RatMatrix>& mats);

}  // namespace galdesc
