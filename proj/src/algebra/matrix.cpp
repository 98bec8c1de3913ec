#include "galpoint/matrix.hpp"

#include "galpoint/error.hpp"

namespace galpoint {

Matrix::Matrix(const Field& k, std::size_t rows, std::size_t cols)
    : field_(&k), rows_(rows), cols_(cols), a_(rows * cols, k.zero()) {}

std::vector<FieldElement> Matrix::row(std::size_t r) const {
    return std::vector<FieldElement>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void Matrix::append_row(const std::vector<FieldElement>& row) {
    require(row.size() == cols_, ErrorCode::InvalidArgument, "row length mismatch");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && at(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(piv, j));
        const FieldElement inv = at(r, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            const FieldElement m = at(i, c);
            for (std::size_t j = c; j < cols_; ++j) at(i, j) -= m * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

std::vector<std::vector<FieldElement>> Matrix::kernel() const {
    Matrix m = *this;
    const auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(cols_, field_->zero());
        v[free] = field_->one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<FieldElement>> Matrix::left_kernel() const { return transpose().kernel(); }

Matrix Matrix::transpose() const {
    Matrix t(*field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& x) const {
    require(x.size() == cols_, ErrorCode::InvalidArgument, "vector length mismatch");
    std::vector<FieldElement> out(rows_, field_->zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * x[j];
    return out;
}

LinearSolution solve_linear(const Matrix& a, const std::vector<FieldElement>& b) {
    const Field& k = a.field();
    require(b.size() == a.rows(), ErrorCode::InvalidArgument, "right-hand side length mismatch");
    Matrix aug(k, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    const auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols()) {
        // Inconsistent: find y with yA = 0, yb = 1.
        for (const auto& y : a.left_kernel()) {
            FieldElement yb = k.zero();
            for (std::size_t i = 0; i < b.size(); ++i) yb += y[i] * b[i];
            if (!yb.is_zero()) {
                std::vector<FieldElement> w = y;
                const FieldElement inv = yb.inverse();
                for (auto& e : w) e *= inv;
                return {std::nullopt, w};
            }
        }
        fail(ErrorCode::Internal, "inconsistent system without a left-kernel witness");
    }
    std::vector<FieldElement> x(a.cols(), k.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
    return {x, {}};
}

Mat3 mat3_identity(const Field& k) {
    Mat3 m;
    for (int i = 0; i < 9; ++i) m[i] = (i % 4 == 0) ? k.one() : k.zero();
    return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    const Field& k = a[0].field();
    Mat3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::uint32_t s = 0;
            for (int l = 0; l < 3; ++l) s = k.add(s, k.mul(a[3 * i + l].code(), b[3 * l + j].code()));
            c[3 * i + j] = FieldElement(&k, s);
        }
    return c;
}

FieldElement mat3_det(const Mat3& a) {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

Mat3 mat3_inverse(const Mat3& a) {
    const FieldElement det = mat3_det(a);
    require(!det.is_zero(), ErrorCode::InvalidArgument, "singular matrix");
    const FieldElement inv = det.inverse();
    Mat3 c;
    c[0] = (a[4] * a[8] - a[5] * a[7]) * inv;
    c[1] = (a[2] * a[7] - a[1] * a[8]) * inv;
    c[2] = (a[1] * a[5] - a[2] * a[4]) * inv;
    c[3] = (a[5] * a[6] - a[3] * a[8]) * inv;
    c[4] = (a[0] * a[8] - a[2] * a[6]) * inv;
    c[5] = (a[2] * a[3] - a[0] * a[5]) * inv;
    c[6] = (a[3] * a[7] - a[4] * a[6]) * inv;
    c[7] = (a[1] * a[6] - a[0] * a[7]) * inv;
    c[8] = (a[0] * a[4] - a[1] * a[3]) * inv;
    return c;
}

Vec3 mat3_apply(const Mat3& a, const Vec3& x) {
    Vec3 y;
    for (int i = 0; i < 3; ++i) y[i] = a[3 * i] * x[0] + a[3 * i + 1] * x[1] + a[3 * i + 2] * x[2];
    return y;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

}  // namespace galpoint
