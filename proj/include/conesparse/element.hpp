#pragma once

#include <Eigen/Core>
#include <string>

#include "conesparse/errors.hpp"

namespace conesparse {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class ShapeKind { Vector, SymMatrix, MatrixScalar };

/// Shape of a cone element's ambient space. Flattening conventions:
///   Vector(n)         -> n coords
///   SymMatrix(d)      -> d*d coords, row-major, stored full and required
///                        symmetric at construction
///   MatrixScalar(n,k) -> n*k coords for the matrix part, row-major,
///                        followed by the scalar (t last)
struct Shape {
    ShapeKind kind = ShapeKind::Vector;
    int rows = 0;
    int cols = 1;

    static Shape vector(int n) { return {ShapeKind::Vector, n, 1}; }
    static Shape sym_matrix(int d) { return {ShapeKind::SymMatrix, d, d}; }
    static Shape matrix_scalar(int n, int k) { return {ShapeKind::MatrixScalar, n, k}; }

    int flat_size() const {
        switch (kind) {
        case ShapeKind::Vector: return rows;
        case ShapeKind::SymMatrix: return rows * rows;
        case ShapeKind::MatrixScalar: return rows * cols + 1;
        }
        return 0;
    }

    bool operator==(const Shape&) const = default;
    std::string str() const;
};

/// A point of the ambient space of a cone: a shape tag plus dense coords in
/// the canonical flattening. Immutable by convention once handed to an
/// instance; arithmetic returns new elements.
class ConeElement {
public:
    ConeElement() = default;
    ConeElement(Shape shape, Vec coords);

    static ConeElement zeros(Shape shape) { return ConeElement(shape, Vec::Zero(shape.flat_size())); }
    static ConeElement vector(Vec v);
    static ConeElement sym_matrix(const Mat& a);
    static ConeElement matrix_scalar(const Mat& x, double t);

    const Shape& shape() const { return shape_; }
    const Vec& coords() const { return coords_; }
    int size() const { return static_cast<int>(coords_.size()); }

    double inf_norm() const { return coords_.size() == 0 ? 0.0 : coords_.cwiseAbs().maxCoeff(); }
    double dot(const ConeElement& o) const { return coords_.dot(o.coords_); }

    /// Matrix view of a SymMatrix element (copy; row-major flat, but the
    /// symmetry requirement makes the layout immaterial).
    Mat sym() const;
    /// Matrix part of a MatrixScalar element (copy, row-major flat).
    Mat mat() const;
    double scalar_part() const;

    ConeElement& operator+=(const ConeElement& o);
    ConeElement& operator-=(const ConeElement& o);
    ConeElement& operator*=(double c) { coords_ *= c; return *this; }

    friend ConeElement operator+(ConeElement a, const ConeElement& b) { return a += b; }
    friend ConeElement operator-(ConeElement a, const ConeElement& b) { return a -= b; }
    friend ConeElement operator*(double c, ConeElement a) { return a *= c; }
    friend ConeElement operator*(ConeElement a, double c) { return a *= c; }

private:
    Shape shape_;
    Vec coords_;
};

} // namespace conesparse
