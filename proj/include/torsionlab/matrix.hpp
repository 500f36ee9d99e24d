#pragma once

#include <cstddef>
#include <vector>

#include "torsionlab/field.hpp"

namespace torsionlab {

/* Dense matrix over a single FieldDescriptor, row-major.  Zero-by-anything
 * shapes are legal throughout (empty products, 0x0 determinant = 1); bases
 * are communicated as matrices whose columns are the basis vectors. */
class ExactMatrix {
  public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(FieldDescriptor d, std::size_t rows, std::size_t cols)
        : desc_(std::move(d)), rows_(rows), cols_(cols),
          a_(rows * cols, FieldElement::zero(desc_)) {}

    static ExactMatrix identity(const FieldDescriptor& d, std::size_t n);
    // Row-major build from integer entries; mostly for tests and generators.
    static ExactMatrix from_ints(const FieldDescriptor& d, std::size_t rows, std::size_t cols,
                                 const std::vector<long>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDescriptor& descriptor() const { return desc_; }
    bool is_square() const { return rows_ == cols_; }

    FieldElement& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator*(const FieldElement& s) const;
    ExactMatrix operator-() const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transposed() const;
    bool is_zero() const;
    ExactMatrix promoted(const FieldDescriptor& target) const;
    // Entry-wise specialization of the variable; throws pole_error when any
    // entry has a pole at the point.
    ExactMatrix evaluated_at(const Gaussian& point) const;

    // Submatrix picking the given rows/columns in the given order.
    ExactMatrix select(const std::vector<std::size_t>& row_idx,
                       const std::vector<std::size_t>& col_idx) const;
    ExactMatrix column(std::size_t j) const;

    void swap_rows(std::size_t i, std::size_t j);

    // Kronecker product: block (i,j) of the result is a(i,j) * b.
    friend ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
    // [a | b] and [a ; b].
    friend ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

    std::string str() const;

  private:
    void check_compatible(const ExactMatrix& o, bool same_shape) const;

    FieldDescriptor desc_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b);

} // namespace torsionlab
