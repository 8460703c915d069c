#include "conesparse/sampling.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace conesparse {

namespace {

Vec normal_vec(int n, Rng& rng) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.normal();
    return v;
}

Mat normal_mat(int r, int c, Rng& rng) {
    // Row-major fill so the stream matches the flattening order.
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = rng.normal();
    return m;
}

double sigma_max(const Mat& x) {
    Eigen::SelfAdjointEigenSolver<Mat> es(x.transpose() * x, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

/// One extreme-ray-like generator.
ConeElement conic_generator(const Cone& cone, Rng& rng) {
    switch (cone.kind()) {
    case ConeKind::Orthant: {
        const auto& c = static_cast<const OrthantCone&>(cone);
        Vec v = Vec::Zero(c.n());
        v[static_cast<int>(rng.below(c.n()))] = 1.0;
        return ConeElement(cone.shape(), std::move(v));
    }
    case ConeKind::Psd: {
        const auto& c = static_cast<const PsdCone&>(cone);
        const Vec v = normal_vec(c.d(), rng);
        return ConeElement::sym_matrix(v * v.transpose());
    }
    case ConeKind::SecondOrder: {
        const auto& c = static_cast<const SecondOrderCone&>(cone);
        Vec v(c.n());
        v.tail(c.n() - 1) = normal_vec(c.n() - 1, rng);
        v[0] = v.tail(c.n() - 1).norm();
        return ConeElement(cone.shape(), std::move(v));
    }
    case ConeKind::SpectralEpigraph: {
        const auto& c = static_cast<const SpectralEpigraphCone&>(cone);
        const Mat x = normal_mat(c.n(), c.k(), rng);
        return ConeElement::matrix_scalar(x, sigma_max(x));
    }
    case ConeKind::Product: {
        const auto& c = static_cast<const ProductCone&>(cone);
        Vec v(cone.dim_ambient());
        int off = 0;
        for (const auto& p : c.parts()) {
            v.segment(off, p->dim_ambient()) = conic_generator(*p, rng).coords();
            off += p->dim_ambient();
        }
        return ConeElement(cone.shape(), std::move(v));
    }
    }
    throw Error("unknown cone kind");
}

} // namespace

ConeElement sample_interior(const Cone& cone, Rng& rng) {
    switch (cone.kind()) {
    case ConeKind::Orthant: {
        const auto& c = static_cast<const OrthantCone&>(cone);
        Vec v(c.n());
        for (int i = 0; i < c.n(); ++i) v[i] = rng.uniform(0.4, 2.5);
        return ConeElement(cone.shape(), std::move(v));
    }
    case ConeKind::Psd: {
        const auto& c = static_cast<const PsdCone&>(cone);
        const Mat a = normal_mat(c.d(), c.d(), rng);
        const Mat x = a * a.transpose() / c.d() + 0.3 * Mat::Identity(c.d(), c.d());
        return ConeElement::sym_matrix(x);
    }
    case ConeKind::SecondOrder: {
        const auto& c = static_cast<const SecondOrderCone&>(cone);
        Vec v(c.n());
        v.tail(c.n() - 1) = normal_vec(c.n() - 1, rng);
        v[0] = v.tail(c.n() - 1).norm() * (1.0 + rng.uniform(0.2, 1.0)) + 0.2;
        return ConeElement(cone.shape(), std::move(v));
    }
    case ConeKind::SpectralEpigraph: {
        const auto& c = static_cast<const SpectralEpigraphCone&>(cone);
        const Mat x = normal_mat(c.n(), c.k(), rng);
        const double t = sigma_max(x) * (1.0 + rng.uniform(0.2, 1.0)) + 0.2;
        return ConeElement::matrix_scalar(x, t);
    }
    case ConeKind::Product: {
        const auto& c = static_cast<const ProductCone&>(cone);
        Vec v(cone.dim_ambient());
        int off = 0;
        for (const auto& p : c.parts()) {
            v.segment(off, p->dim_ambient()) = sample_interior(*p, rng).coords();
            off += p->dim_ambient();
        }
        return ConeElement(cone.shape(), std::move(v));
    }
    }
    throw Error("unknown cone kind");
}

ConeElement sample_conic(const Cone& cone, Rng& rng) {
    const int generators = 2 + static_cast<int>(rng.below(4));
    ConeElement u = ConeElement::zeros(cone.shape());
    for (int g = 0; g < generators; ++g) u += rng.uniform01() * conic_generator(cone, rng);
    return u;
}

ConeElement sample_direction(const Cone& cone, Rng& rng) {
    if (cone.kind() == ConeKind::Product) {
        const auto& c = static_cast<const ProductCone&>(cone);
        Vec v(cone.dim_ambient());
        int off = 0;
        for (const auto& p : c.parts()) {
            v.segment(off, p->dim_ambient()) = sample_direction(*p, rng).coords();
            off += p->dim_ambient();
        }
        return ConeElement(cone.shape(), std::move(v));
    }
    const Shape s = cone.shape();
    switch (s.kind) {
    case ShapeKind::Vector:
        return ConeElement(s, normal_vec(s.rows, rng));
    case ShapeKind::SymMatrix: {
        const Mat a = normal_mat(s.rows, s.rows, rng);
        return ConeElement::sym_matrix(0.5 * (a + a.transpose()));
    }
    case ShapeKind::MatrixScalar:
        return ConeElement::matrix_scalar(normal_mat(s.rows, s.cols, rng), rng.normal());
    }
    throw Error("unknown shape kind");
}

} // namespace conesparse
