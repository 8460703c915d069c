#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conesparse/element.hpp"

namespace conesparse {

/// Membership: a point is in K iff its cone slack is >= -kMembershipRelTol * scale,
/// with scale = 1 + |point|_inf. Strict interior asks for a positive margin so the
/// strict inequalities of the greedy engine are quantitative.
inline constexpr double kMembershipRelTol = 1e-9;
inline constexpr double kInteriorRelTol = 1e-7;

enum class ConeKind { Orthant, Psd, SecondOrder, SpectralEpigraph, Product };

/// Barrier variants carried by the spectral-norm epigraph cone. The hyperbolic
/// barrier -log det(t^2 I - X'X) has parameter 2k and is pairwise-self-concordant;
/// the (k+1)-parameter barrier -log det(tI - X'X/t) - log t is exposed for the
/// Frank-Wolfe engine only.
enum class SpectralBarrier { Hyperbolic, KPlusOne };

/// A catalogued cone: membership oracle plus the derivative oracles of a
/// nu-logarithmically homogeneous self-concordant barrier.
///
/// gradient(x) returns g with D phi(x)[u] = g.dot(u); hess_apply(x, v) returns
/// h with D^2 phi(x)[u, v] = h.dot(u). Both work in the flattened coordinates
/// of the element, so pairing a fixed point against many candidate directions
/// costs one dot product per candidate.
///
/// Handles are immutable after construction and safe to share across threads;
/// all oracles are pure.
class Cone {
public:
    virtual ~Cone() = default;

    virtual ConeKind kind() const = 0;
    virtual std::string name() const = 0;
    virtual double nu() const = 0;
    virtual Shape shape() const = 0;
    virtual bool pairwise_self_concordant() const = 0;

    int dim_ambient() const { return shape().flat_size(); }

    /// Shape check plus cone-specific structural requirements (symmetric
    /// slices inside products). Throws InvalidInstance.
    virtual void validate(const ConeElement& x) const;

    /// Signed membership margin: min eigenvalue, min coordinate, t - sigma_max, ...
    virtual double slack(const ConeElement& x) const = 0;

    virtual double barrier_value(const ConeElement& x) const = 0;
    virtual ConeElement gradient(const ConeElement& x) const = 0;
    virtual ConeElement hess_apply(const ConeElement& x, const ConeElement& v) const = 0;
    virtual double third_trilin(const ConeElement& x, const ConeElement& u,
                                const ConeElement& v, const ConeElement& w) const = 0;

    /// Analytic spectral-order norm |u|_x where the cone provides one;
    /// std::nullopt defers to bisection on the membership oracle.
    virtual std::optional<double> order_norm_exact(const ConeElement& x, const ConeElement& u,
                                                   double tol) const;

    bool contains(const ConeElement& x) const {
        return slack(x) >= -kMembershipRelTol * (1.0 + x.inf_norm());
    }
    bool strictly_interior(const ConeElement& x) const {
        return slack(x) >= kInteriorRelTol * (1.0 + x.inf_norm());
    }

protected:
    void check_shape(const ConeElement& x) const;
};

using ConeHandle = std::shared_ptr<const Cone>;

ConeHandle make_orthant(int n);
ConeHandle make_psd(int d);
ConeHandle make_second_order(int n);
ConeHandle make_spectral_epigraph(int n, int k, SpectralBarrier variant = SpectralBarrier::Hyperbolic);
ConeHandle make_product(std::vector<ConeHandle> parts);

class OrthantCone final : public Cone {
public:
    explicit OrthantCone(int n);
    ConeKind kind() const override { return ConeKind::Orthant; }
    std::string name() const override { return "orthant(" + std::to_string(n_) + ")"; }
    double nu() const override { return n_; }
    Shape shape() const override { return Shape::vector(n_); }
    bool pairwise_self_concordant() const override { return true; }
    double slack(const ConeElement& x) const override;
    double barrier_value(const ConeElement& x) const override;
    ConeElement gradient(const ConeElement& x) const override;
    ConeElement hess_apply(const ConeElement& x, const ConeElement& v) const override;
    double third_trilin(const ConeElement& x, const ConeElement& u, const ConeElement& v,
                        const ConeElement& w) const override;
    std::optional<double> order_norm_exact(const ConeElement& x, const ConeElement& u,
                                           double tol) const override;
    int n() const { return n_; }

private:
    int n_;
};

class PsdCone final : public Cone {
public:
    explicit PsdCone(int d);
    ConeKind kind() const override { return ConeKind::Psd; }
    std::string name() const override { return "psd(" + std::to_string(d_) + ")"; }
    double nu() const override { return d_; }
    Shape shape() const override { return Shape::sym_matrix(d_); }
    bool pairwise_self_concordant() const override { return true; }
    double slack(const ConeElement& x) const override;
    double barrier_value(const ConeElement& x) const override;
    ConeElement gradient(const ConeElement& x) const override;
    ConeElement hess_apply(const ConeElement& x, const ConeElement& v) const override;
    double third_trilin(const ConeElement& x, const ConeElement& u, const ConeElement& v,
                        const ConeElement& w) const override;
    std::optional<double> order_norm_exact(const ConeElement& x, const ConeElement& u,
                                           double tol) const override;
    int d() const { return d_; }

private:
    int d_;
};

/// Lorentz cone {x : x0 >= |x_(1:)|}, catalogued through its degree-2
/// hyperbolic barrier -log(x0^2 - |xbar|^2), nu = 2.
class SecondOrderCone final : public Cone {
public:
    explicit SecondOrderCone(int n);
    ConeKind kind() const override { return ConeKind::SecondOrder; }
    std::string name() const override { return "soc(" + std::to_string(n_) + ")"; }
    double nu() const override { return 2.0; }
    Shape shape() const override { return Shape::vector(n_); }
    bool pairwise_self_concordant() const override { return true; }
    double slack(const ConeElement& x) const override;
    double barrier_value(const ConeElement& x) const override;
    ConeElement gradient(const ConeElement& x) const override;
    ConeElement hess_apply(const ConeElement& x, const ConeElement& v) const override;
    double third_trilin(const ConeElement& x, const ConeElement& u, const ConeElement& v,
                        const ConeElement& w) const override;
    std::optional<double> order_norm_exact(const ConeElement& x, const ConeElement& u,
                                           double tol) const override;
    int n() const { return n_; }

private:
    int n_;
};

/// Epigraph of the spectral norm on n x k matrices: {(X, t) : sigma_max(X) <= t}.
class SpectralEpigraphCone final : public Cone {
public:
    SpectralEpigraphCone(int n, int k, SpectralBarrier variant);
    ConeKind kind() const override { return ConeKind::SpectralEpigraph; }
    std::string name() const override;
    double nu() const override { return variant_ == SpectralBarrier::Hyperbolic ? 2.0 * k_ : k_ + 1.0; }
    Shape shape() const override { return Shape::matrix_scalar(n_, k_); }
    bool pairwise_self_concordant() const override { return variant_ == SpectralBarrier::Hyperbolic; }
    double slack(const ConeElement& x) const override;
    double barrier_value(const ConeElement& x) const override;
    ConeElement gradient(const ConeElement& x) const override;
    ConeElement hess_apply(const ConeElement& x, const ConeElement& v) const override;
    double third_trilin(const ConeElement& x, const ConeElement& u, const ConeElement& v,
                        const ConeElement& w) const override;
    int n() const { return n_; }
    int k() const { return k_; }
    SpectralBarrier variant() const { return variant_; }

private:
    Mat gram_shifted(const ConeElement& x) const; // t^2 I - X'X, throws NonInterior
    int n_, k_;
    SpectralBarrier variant_;
};

class ProductCone final : public Cone {
public:
    explicit ProductCone(std::vector<ConeHandle> parts);
    ConeKind kind() const override { return ConeKind::Product; }
    std::string name() const override;
    double nu() const override { return nu_; }
    Shape shape() const override { return Shape::vector(total_dim_); }
    bool pairwise_self_concordant() const override { return pairwise_; }
    void validate(const ConeElement& x) const override;
    double slack(const ConeElement& x) const override;
    double barrier_value(const ConeElement& x) const override;
    ConeElement gradient(const ConeElement& x) const override;
    ConeElement hess_apply(const ConeElement& x, const ConeElement& v) const override;
    double third_trilin(const ConeElement& x, const ConeElement& u, const ConeElement& v,
                        const ConeElement& w) const override;
    std::optional<double> order_norm_exact(const ConeElement& x, const ConeElement& u,
                                           double tol) const override;
    const std::vector<ConeHandle>& parts() const { return parts_; }
    ConeElement part(const ConeElement& x, std::size_t i) const;

private:
    std::vector<ConeHandle> parts_;
    std::vector<int> offsets_;
    int total_dim_ = 0;
    double nu_ = 0.0;
    bool pairwise_ = true;
};

// Scalar wrappers over the flattened oracles.

double grad_dir(const Cone& cone, const ConeElement& x, const ConeElement& u);
double hess_bilin(const Cone& cone, const ConeElement& x, const ConeElement& u,
                  const ConeElement& v);

/// sqrt(max(0, D^2 phi(e)[u,u])); throws NegativeQuadraticForm below -1e-10.
double hessian_norm(const Cone& cone, const ConeElement& e, const ConeElement& u);

struct BarrierDerivatives {
    double value = 0.0;
    double grad_dir = 0.0;
    double hess_bilin = 0.0;
    std::optional<double> third_trilin;
};

BarrierDerivatives barrier_derivatives(const Cone& cone, const ConeElement& x,
                                       const ConeElement& u, const ConeElement& v,
                                       const ConeElement* w = nullptr);

} // namespace conesparse
