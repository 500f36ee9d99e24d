#include "torsionlab/matrix.hpp"

namespace torsionlab {

ExactMatrix ExactMatrix::identity(const FieldDescriptor& d, std::size_t n) {
    ExactMatrix m(d, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(d);
    return m;
}

ExactMatrix ExactMatrix::from_ints(const FieldDescriptor& d, std::size_t rows, std::size_t cols,
                                   const std::vector<long>& entries) {
    if (entries.size() != rows * cols) throw shape_error("entry count does not match shape");
    ExactMatrix m(d, rows, cols);
    for (std::size_t k = 0; k < entries.size(); ++k)
        m.a_[k] = FieldElement::from_int(d, entries[k]);
    return m;
}

void ExactMatrix::check_compatible(const ExactMatrix& o, bool same_shape) const {
    if (!(desc_ == o.desc_))
        throw shape_error("matrix field mismatch: " + desc_.str() + " vs " + o.desc_.str());
    if (same_shape && (rows_ != o.rows_ || cols_ != o.cols_))
        throw shape_error("matrix shape mismatch");
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    check_compatible(o, true);
    ExactMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    check_compatible(o, true);
    ExactMatrix r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    check_compatible(o, false);
    if (cols_ != o.rows_) throw shape_error("matrix product shape mismatch");
    ExactMatrix r(desc_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::operator*(const FieldElement& s) const {
    ExactMatrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    return desc_ == o.desc_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix r(desc_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::promoted(const FieldDescriptor& target) const {
    ExactMatrix r(target, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].promoted(target);
    return r;
}

ExactMatrix ExactMatrix::evaluated_at(const Gaussian& point) const {
    ExactMatrix r(desc_.specialized(), rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].evaluate_at(point);
    return r;
}

ExactMatrix ExactMatrix::select(const std::vector<std::size_t>& row_idx,
                                const std::vector<std::size_t>& col_idx) const {
    ExactMatrix r(desc_, row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (row_idx[i] >= rows_ || col_idx[j] >= cols_)
                throw shape_error("select index out of range");
            r.at(i, j) = at(row_idx[i], col_idx[j]);
        }
    return r;
}

ExactMatrix ExactMatrix::column(std::size_t j) const {
    ExactMatrix r(desc_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
    return r;
}

void ExactMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    a.check_compatible(b, false);
    ExactMatrix r(a.desc_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l)
                    r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
        }
    return r;
}

ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b) {
    a.check_compatible(b, false);
    if (a.rows_ != b.rows_) throw shape_error("hstack row mismatch");
    ExactMatrix r(a.desc_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

ExactMatrix vstack(const ExactMatrix& a, const ExactMatrix& b) {
    a.check_compatible(b, false);
    if (a.cols_ != b.cols_) throw shape_error("vstack column mismatch");
    ExactMatrix r(a.desc_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

std::string ExactMatrix::str() const {
    std::string s = "[";
    for (std::size_t k = 0; k < a_.size(); ++k) {
        if (k) s += " ";
        s += a_[k].str();
    }
    return s + "]";
}

} // namespace torsionlab
