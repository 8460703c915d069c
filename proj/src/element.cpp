#include "conesparse/element.hpp"

#include <cmath>

namespace conesparse {

std::string Shape::str() const {
    switch (kind) {
    case ShapeKind::Vector: return "Vector(" + std::to_string(rows) + ")";
    case ShapeKind::SymMatrix: return "SymMatrix(" + std::to_string(rows) + ")";
    case ShapeKind::MatrixScalar:
        return "MatrixScalar(" + std::to_string(rows) + "," + std::to_string(cols) + ")";
    }
    return "?";
}

ConeElement::ConeElement(Shape shape, Vec coords) : shape_(shape), coords_(std::move(coords)) {
    if (coords_.size() != shape_.flat_size()) {
        throw InvalidInstance("element coords length " + std::to_string(coords_.size()) +
                              " does not match shape " + shape_.str());
    }
    if (shape_.kind == ShapeKind::SymMatrix) {
        const int d = shape_.rows;
        const double scale = 1.0 + inf_norm();
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                const double a = coords_[i * d + j];
                const double b = coords_[j * d + i];
                if (std::abs(a - b) > 1e-12 * scale) {
                    throw InvalidInstance("SymMatrix element is not symmetric at (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
                }
            }
        }
    }
}

ConeElement ConeElement::vector(Vec v) {
    const int n = static_cast<int>(v.size());
    return ConeElement(Shape::vector(n), std::move(v));
}

ConeElement ConeElement::sym_matrix(const Mat& a) {
    const int d = static_cast<int>(a.rows());
    Vec c(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) c[i * d + j] = a(i, j);
    return ConeElement(Shape::sym_matrix(d), std::move(c));
}

ConeElement ConeElement::matrix_scalar(const Mat& x, double t) {
    const int n = static_cast<int>(x.rows());
    const int k = static_cast<int>(x.cols());
    Vec c(n * k + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) c[i * k + j] = x(i, j);
    c[n * k] = t;
    return ConeElement(Shape::matrix_scalar(n, k), std::move(c));
}

Mat ConeElement::sym() const {
    if (shape_.kind != ShapeKind::SymMatrix) throw Error("sym() on non-SymMatrix element");
    const int d = shape_.rows;
    Mat a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = coords_[i * d + j];
    return a;
}

Mat ConeElement::mat() const {
    if (shape_.kind != ShapeKind::MatrixScalar) throw Error("mat() on non-MatrixScalar element");
    const int n = shape_.rows;
    const int k = shape_.cols;
    Mat x(n, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) x(i, j) = coords_[i * k + j];
    return x;
}

double ConeElement::scalar_part() const {
    if (shape_.kind != ShapeKind::MatrixScalar) throw Error("scalar_part() on non-MatrixScalar element");
    return coords_[coords_.size() - 1];
}

ConeElement& ConeElement::operator+=(const ConeElement& o) {
    if (!(shape_ == o.shape_)) throw Error("element shape mismatch in addition");
    coords_ += o.coords_;
    return *this;
}

ConeElement& ConeElement::operator-=(const ConeElement& o) {
    if (!(shape_ == o.shape_)) throw Error("element shape mismatch in subtraction");
    coords_ -= o.coords_;
    return *this;
}

} // namespace conesparse
