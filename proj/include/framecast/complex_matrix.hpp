#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace framecast {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix, row-major. Always at least 1x1.
class ComplexMatrix {
public:
    ComplexMatrix() : ComplexMatrix(1, 1) {}
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix from_rows(const std::vector<ComplexVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept
    {
        return data_[i * cols_ + j];
    }

    std::span<Complex> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
    std::span<const Complex> row(std::size_t i) const noexcept
    {
        return {data_.data() + i * cols_, cols_};
    }
    ComplexVector column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Complex> values);

    std::span<Complex> entries() noexcept { return data_; }
    std::span<const Complex> entries() const noexcept { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    /// Rows selected by index, in the given order.
    ComplexMatrix select_rows(std::span<const std::size_t> indices) const;
    /// Columns [first, first + count).
    ComplexMatrix column_block(std::size_t first, std::size_t count) const;

    double frobenius_norm() const noexcept;
    double max_abs() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex s) noexcept;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    ComplexVector data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
/// Matrix product; dispatches to the parallel kernel for large operands.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * b^H without forming the adjoint.
ComplexMatrix multiply_adjoint(const ComplexMatrix& a, const ComplexMatrix& b);
/// a^H * b without forming the adjoint.
ComplexMatrix adjoint_multiply(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> x);

/// <x, y> = sum_k x_k conj(y_k): linear in x, conjugate-linear in y.
Complex inner(std::span<const Complex> x, std::span<const Complex> y) noexcept;
double norm(std::span<const Complex> x) noexcept;
double distance(std::span<const Complex> x, std::span<const Complex> y) noexcept;

} // namespace framecast
