#include "framecast/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "framecast/error.hpp"
#include "framecast/kernels.hpp"

namespace framecast {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw FrameError(ErrorKind::ShapeMismatch,
                         std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, ComplexVector(rows * cols))
{
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (rows_ == 0 || cols_ == 0) {
        throw FrameError(ErrorKind::ShapeMismatch, "matrix dimensions must be at least 1x1");
    }
    if (data_.size() != rows_ * cols_) {
        throw FrameError(ErrorKind::ShapeMismatch, "entry count does not match rows x cols");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    if (rows_ == 0 || cols_ == 0) {
        throw FrameError(ErrorKind::ShapeMismatch, "matrix dimensions must be at least 1x1");
    }
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw FrameError(ErrorKind::ShapeMismatch, "ragged initializer list");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values)
{
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<ComplexVector>& rows)
{
    if (rows.empty() || rows.front().empty()) {
        throw FrameError(ErrorKind::ShapeMismatch, "from_rows: empty input");
    }
    ComplexMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) {
            throw FrameError(ErrorKind::ShapeMismatch, "from_rows: ragged rows");
        }
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t j) const
{
    ComplexVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void ComplexMatrix::set_column(std::size_t j, std::span<const Complex> values)
{
    if (values.size() != rows_) {
        throw FrameError(ErrorKind::ShapeMismatch, "set_column: length mismatch");
    }
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
    return t;
}

ComplexMatrix ComplexMatrix::transpose() const
{
    ComplexMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ComplexMatrix ComplexMatrix::conj() const
{
    ComplexMatrix c = *this;
    for (auto& z : c.data_) z = std::conj(z);
    return c;
}

ComplexMatrix ComplexMatrix::select_rows(std::span<const std::size_t> indices) const
{
    if (indices.empty()) {
        throw FrameError(ErrorKind::ShapeMismatch, "select_rows: no rows selected");
    }
    ComplexMatrix out(indices.size(), cols_);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= rows_) {
            throw FrameError(ErrorKind::ShapeMismatch, "select_rows: index out of range");
        }
        auto src = row(indices[k]);
        std::copy(src.begin(), src.end(), out.row(k).begin());
    }
    return out;
}

ComplexMatrix ComplexMatrix::column_block(std::size_t first, std::size_t count) const
{
    if (count == 0 || first + count > cols_) {
        throw FrameError(ErrorKind::ShapeMismatch, "column_block: range out of bounds");
    }
    ComplexMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

double ComplexMatrix::frobenius_norm() const noexcept { return norm(data_); }

double ComplexMatrix::max_abs() const noexcept
{
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other)
{
    require_same_shape(*this, other, "operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other)
{
    require_same_shape(*this, other, "operator-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept
{
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return kernels::gemm(a, kernels::Op::None, b, kernels::Op::None);
}

ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return kernels::gemm(a, kernels::Op::None, b, kernels::Op::Adjoint);
}

ComplexMatrix adjoint_multiply(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return kernels::gemm(a, kernels::Op::Adjoint, b, kernels::Op::None);
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x)
{
    if (x.size() != a.cols()) {
        throw FrameError(ErrorKind::ShapeMismatch, "matrix-vector product: length mismatch");
    }
    ComplexVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc = 0.0;
        auto r = a.row(i);
        for (std::size_t k = 0; k < x.size(); ++k) acc += r[k] * x[k];
        y[i] = acc;
    }
    return y;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) noexcept
{
    Complex acc = 0.0;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t k = 0; k < n; ++k) acc += x[k] * std::conj(y[k]);
    return acc;
}

double norm(std::span<const Complex> x) noexcept
{
    // scaled accumulation, avoids overflow for large entries
    double scale = 0.0;
    double ssq = 1.0;
    for (const auto& z : x) {
        for (double part : {z.real(), z.imag()}) {
            if (part == 0.0) continue;
            const double a = std::abs(part);
            if (scale < a) {
                ssq = 1.0 + ssq * (scale / a) * (scale / a);
                scale = a;
            } else {
                ssq += (a / scale) * (a / scale);
            }
        }
    }
    return scale * std::sqrt(ssq);
}

double distance(std::span<const Complex> x, std::span<const Complex> y) noexcept
{
    double acc = 0.0;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t k = 0; k < n; ++k) acc += std::norm(x[k] - y[k]);
    return std::sqrt(acc);
}

} // namespace framecast
