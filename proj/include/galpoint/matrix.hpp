#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "galpoint/field.hpp"

namespace galpoint {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(const Field& k, std::size_t rows, std::size_t cols);

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<FieldElement> row(std::size_t r) const;
    void append_row(const std::vector<FieldElement>& row);

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref();
    std::size_t rank() const;
    /// Basis of the right kernel {x : A x = 0}, one vector per free column.
    std::vector<std::vector<FieldElement>> kernel() const;
    /// Basis of the left kernel {y : y A = 0}.
    std::vector<std::vector<FieldElement>> left_kernel() const;

    Matrix transpose() const;
    std::vector<FieldElement> apply(const std::vector<FieldElement>& x) const;

private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

/// Result of solving A x = b: either a solution or a left-kernel witness y
/// with y A = 0 and y b != 0.
struct LinearSolution {
    std::optional<std::vector<FieldElement>> solution;
    std::vector<FieldElement> witness;
};

LinearSolution solve_linear(const Matrix& a, const std::vector<FieldElement>& b);

using Mat3 = std::array<FieldElement, 9>;
using Vec3 = std::array<FieldElement, 3>;

Mat3 mat3_identity(const Field& k);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
FieldElement mat3_det(const Mat3& a);
/// Inverse via the adjugate; the determinant must be nonzero.
Mat3 mat3_inverse(const Mat3& a);
Vec3 mat3_apply(const Mat3& a, const Vec3& x);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);

}  // namespace galpoint
