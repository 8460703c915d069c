#include "conesparse/cone.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "conesparse/order.hpp"

namespace conesparse {

void Cone::check_shape(const ConeElement& x) const {
    if (!(x.shape() == shape())) {
        throw InvalidInstance("element shape " + x.shape().str() + " does not match cone " + name());
    }
}

void Cone::validate(const ConeElement& x) const { check_shape(x); }

std::optional<double> Cone::order_norm_exact(const ConeElement&, const ConeElement&, double) const {
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Orthant: phi(x) = -sum log x_i, nu = n.

OrthantCone::OrthantCone(int n) : n_(n) {
    if (n < 1) throw InvalidInstance("orthant dimension must be positive");
}

double OrthantCone::slack(const ConeElement& x) const {
    check_shape(x);
    return x.coords().minCoeff();
}

double OrthantCone::barrier_value(const ConeElement& x) const {
    check_shape(x);
    double v = 0.0;
    for (int i = 0; i < n_; ++i) {
        const double xi = x.coords()[i];
        if (xi <= 0.0) throw NonInterior("orthant barrier at nonpositive coordinate");
        v -= std::log(xi);
    }
    return v;
}

ConeElement OrthantCone::gradient(const ConeElement& x) const {
    check_shape(x);
    Vec g(n_);
    for (int i = 0; i < n_; ++i) {
        const double xi = x.coords()[i];
        if (xi <= 0.0) throw NonInterior("orthant gradient at nonpositive coordinate");
        g[i] = -1.0 / xi;
    }
    return ConeElement(shape(), std::move(g));
}

ConeElement OrthantCone::hess_apply(const ConeElement& x, const ConeElement& v) const {
    check_shape(x);
    check_shape(v);
    Vec h(n_);
    for (int i = 0; i < n_; ++i) {
        const double xi = x.coords()[i];
        if (xi <= 0.0) throw NonInterior("orthant hessian at nonpositive coordinate");
        h[i] = v.coords()[i] / (xi * xi);
    }
    return ConeElement(shape(), std::move(h));
}

double OrthantCone::third_trilin(const ConeElement& x, const ConeElement& u, const ConeElement& v,
                                 const ConeElement& w) const {
    check_shape(x);
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
        const double xi = x.coords()[i];
        if (xi <= 0.0) throw NonInterior("orthant third derivative at nonpositive coordinate");
        s += u.coords()[i] * v.coords()[i] * w.coords()[i] / (xi * xi * xi);
    }
    return -2.0 * s;
}

std::optional<double> OrthantCone::order_norm_exact(const ConeElement& x, const ConeElement& u,
                                                    double) const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t = std::max(t, std::abs(u.coords()[i] / x.coords()[i]));
    return t;
}

// ---------------------------------------------------------------------------
// PSD: phi(X) = -log det X, nu = d.

namespace {

Eigen::LLT<Mat> llt_or_throw(const Mat& x, const char* what) {
    Eigen::LLT<Mat> llt(x);
    if (llt.info() != Eigen::Success) throw NonInterior(what);
    return llt;
}

double min_eigenvalue(const Mat& x) {
    Eigen::SelfAdjointEigenSolver<Mat> es(x, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

} // namespace

PsdCone::PsdCone(int d) : d_(d) {
    if (d < 1) throw InvalidInstance("psd dimension must be positive");
}

double PsdCone::slack(const ConeElement& x) const {
    check_shape(x);
    return min_eigenvalue(x.sym());
}

double PsdCone::barrier_value(const ConeElement& x) const {
    check_shape(x);
    const auto llt = llt_or_throw(x.sym(), "psd barrier at non-positive-definite point");
    double v = 0.0;
    for (int i = 0; i < d_; ++i) v -= 2.0 * std::log(llt.matrixLLT()(i, i));
    return v;
}

ConeElement PsdCone::gradient(const ConeElement& x) const {
    check_shape(x);
    const auto llt = llt_or_throw(x.sym(), "psd gradient at non-positive-definite point");
    const Mat inv = llt.solve(Mat::Identity(d_, d_));
    return ConeElement::sym_matrix(-0.5 * (inv + inv.transpose()));
}

ConeElement PsdCone::hess_apply(const ConeElement& x, const ConeElement& v) const {
    check_shape(x);
    check_shape(v);
    const auto llt = llt_or_throw(x.sym(), "psd hessian at non-positive-definite point");
    const Mat r = llt.solve(v.sym());            // X^-1 V
    const Mat h = llt.solve(r.transpose());      // X^-1 V X^-1
    return ConeElement::sym_matrix(0.5 * (h + h.transpose()));
}

double PsdCone::third_trilin(const ConeElement& x, const ConeElement& u, const ConeElement& v,
                             const ConeElement& w) const {
    check_shape(x);
    const auto llt = llt_or_throw(x.sym(), "psd third derivative at non-positive-definite point");
    const Mat a = llt.solve(u.sym());
    const Mat b = llt.solve(v.sym());
    const Mat c = llt.solve(w.sym());
    return -((a * b * c).trace() + (b * a * c).trace());
}

std::optional<double> PsdCone::order_norm_exact(const ConeElement& x, const ConeElement& u,
                                                double) const {
    const auto llt = llt_or_throw(x.sym(), "psd order norm at non-positive-definite point");
    const Mat l = llt.matrixL();
    const Mat c = l.triangularView<Eigen::Lower>().solve(u.sym());
    Mat b = l.triangularView<Eigen::Lower>().solve(c.transpose()); // L^-1 U L^-T
    b = 0.5 * (b + b.transpose());
    Eigen::SelfAdjointEigenSolver<Mat> es(b, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Second-order cone: phi(x) = -log(x0^2 - |xbar|^2), nu = 2.

namespace {

/// q(x) = x' J x with J = diag(1, -1, ..., -1).
double soc_form(const Vec& x) { return 2.0 * x[0] * x[0] - x.squaredNorm(); }

Vec soc_reflect(const Vec& x) {
    Vec j = -x;
    j[0] = x[0];
    return j;
}

} // namespace

SecondOrderCone::SecondOrderCone(int n) : n_(n) {
    if (n < 2) throw InvalidInstance("second-order cone needs dimension >= 2");
}

double SecondOrderCone::slack(const ConeElement& x) const {
    check_shape(x);
    const Vec& c = x.coords();
    return c[0] - c.tail(n_ - 1).norm();
}

double SecondOrderCone::barrier_value(const ConeElement& x) const {
    check_shape(x);
    const double q = soc_form(x.coords());
    if (q <= 0.0 || x.coords()[0] <= 0.0) throw NonInterior("soc barrier outside interior");
    return -std::log(q);
}

ConeElement SecondOrderCone::gradient(const ConeElement& x) const {
    check_shape(x);
    const double q = soc_form(x.coords());
    if (q <= 0.0 || x.coords()[0] <= 0.0) throw NonInterior("soc gradient outside interior");
    return ConeElement(shape(), Vec((-2.0 / q) * soc_reflect(x.coords())));
}

ConeElement SecondOrderCone::hess_apply(const ConeElement& x, const ConeElement& v) const {
    check_shape(x);
    check_shape(v);
    const double q = soc_form(x.coords());
    if (q <= 0.0 || x.coords()[0] <= 0.0) throw NonInterior("soc hessian outside interior");
    const Vec jx = soc_reflect(x.coords());
    const Vec jv = soc_reflect(v.coords());
    const double a_v = x.coords().dot(jv);
    return ConeElement(shape(), Vec((4.0 * a_v / (q * q)) * jx - (2.0 / q) * jv));
}

double SecondOrderCone::third_trilin(const ConeElement& x, const ConeElement& u,
                                     const ConeElement& v, const ConeElement& w) const {
    check_shape(x);
    const double q = soc_form(x.coords());
    if (q <= 0.0 || x.coords()[0] <= 0.0) throw NonInterior("soc third derivative outside interior");
    const Vec ju = soc_reflect(u.coords());
    const Vec jv = soc_reflect(v.coords());
    const Vec jw = soc_reflect(w.coords());
    const double au = x.coords().dot(ju);
    const double av = x.coords().dot(jv);
    const double aw = x.coords().dot(jw);
    const double suv = u.coords().dot(jv);
    const double suw = u.coords().dot(jw);
    const double svw = v.coords().dot(jw);
    return 4.0 * (suw * av + svw * au + suv * aw) / (q * q) - 16.0 * au * av * aw / (q * q * q);
}

std::optional<double> SecondOrderCone::order_norm_exact(const ConeElement& x, const ConeElement& u,
                                                        double) const {
    // Hyperbolic eigenvalues of u at x: roots of t^2 q(x) - 2 t x'Ju + q(u).
    const double qx = soc_form(x.coords());
    const double qu = soc_form(u.coords());
    const double a = x.coords().dot(soc_reflect(u.coords()));
    const double disc = std::max(0.0, a * a - qx * qu);
    const double s = std::sqrt(disc);
    return std::max(std::abs((a + s) / qx), std::abs((a - s) / qx));
}

// ---------------------------------------------------------------------------
// Spectral-norm epigraph.
//
// Hyperbolic barrier: phi(X,t) = -log det M with M = t^2 I_k - X'X. For a
// direction d = (U, s), DM[d] = 2 t s I - X'U - U'X =: A(d), and the second
// differential of A is C(d1,d2) = 2 s1 s2 I - U1'U2 - U2'U1.
//
// (k+1) barrier: phi(X,t) = -log det N - log t with N = t I_k - X'X / t.

SpectralEpigraphCone::SpectralEpigraphCone(int n, int k, SpectralBarrier variant)
    : n_(n), k_(k), variant_(variant) {
    if (n < 1 || k < 1 || k > n) throw InvalidInstance("spectral epigraph needs n >= k >= 1");
}

std::string SpectralEpigraphCone::name() const {
    std::string s = "spectral_epigraph(" + std::to_string(n_) + "," + std::to_string(k_) + ")";
    if (variant_ == SpectralBarrier::KPlusOne) s += "[k+1 barrier]";
    return s;
}

double SpectralEpigraphCone::slack(const ConeElement& x) const {
    check_shape(x);
    const Mat m = x.mat();
    Eigen::SelfAdjointEigenSolver<Mat> es(m.transpose() * m, Eigen::EigenvaluesOnly);
    const double sigma_max = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    return x.scalar_part() - sigma_max;
}

Mat SpectralEpigraphCone::gram_shifted(const ConeElement& x) const {
    const Mat m = x.mat();
    const double t = x.scalar_part();
    if (t <= 0.0) throw NonInterior("spectral epigraph barrier at t <= 0");
    return t * t * Mat::Identity(k_, k_) - m.transpose() * m;
}

namespace {

struct SpectralDir {
    Mat u;
    double s;
};

SpectralDir split_dir(const ConeElement& d) { return {d.mat(), d.scalar_part()}; }

Mat spec_a(const Mat& x, double t, const SpectralDir& d) {
    return 2.0 * t * d.s * Mat::Identity(x.cols(), x.cols()) - x.transpose() * d.u -
           d.u.transpose() * x;
}

Mat spec_c(const SpectralDir& d1, const SpectralDir& d2, int k) {
    return 2.0 * d1.s * d2.s * Mat::Identity(k, k) - d1.u.transpose() * d2.u -
           d2.u.transpose() * d1.u;
}

} // namespace

double SpectralEpigraphCone::barrier_value(const ConeElement& x) const {
    check_shape(x);
    const Mat m = gram_shifted(x);
    const auto llt = llt_or_throw(m, "spectral epigraph barrier outside interior");
    double logdet = 0.0;
    for (int i = 0; i < k_; ++i) logdet += 2.0 * std::log(llt.matrixLLT()(i, i));
    if (variant_ == SpectralBarrier::Hyperbolic) return -logdet;
    // det(t^2 I - X'X) = t^k det(t I - X'X/t), so convert and add the -log t term.
    const double t = x.scalar_part();
    return -(logdet - k_ * std::log(t)) - std::log(t);
}

ConeElement SpectralEpigraphCone::gradient(const ConeElement& x) const {
    check_shape(x);
    const Mat xm = x.mat();
    const double t = x.scalar_part();
    if (variant_ == SpectralBarrier::Hyperbolic) {
        const Mat m = gram_shifted(x);
        const auto llt = llt_or_throw(m, "spectral epigraph gradient outside interior");
        const Mat minv = llt.solve(Mat::Identity(k_, k_));
        return ConeElement::matrix_scalar(2.0 * xm * minv, -2.0 * t * minv.trace());
    }
    const Mat nmat = t * Mat::Identity(k_, k_) - xm.transpose() * xm / t;
    const auto llt = llt_or_throw(nmat, "spectral epigraph gradient outside interior");
    const Mat ninv = llt.solve(Mat::Identity(k_, k_));
    const double gram_pair = (ninv * (xm.transpose() * xm)).trace();
    return ConeElement::matrix_scalar((2.0 / t) * xm * ninv,
                                      -ninv.trace() - gram_pair / (t * t) - 1.0 / t);
}

ConeElement SpectralEpigraphCone::hess_apply(const ConeElement& x, const ConeElement& v) const {
    check_shape(x);
    check_shape(v);
    const Mat xm = x.mat();
    const double t = x.scalar_part();
    const SpectralDir dv = split_dir(v);
    if (variant_ == SpectralBarrier::Hyperbolic) {
        const Mat m = gram_shifted(x);
        const auto llt = llt_or_throw(m, "spectral epigraph hessian outside interior");
        const Mat minv = llt.solve(Mat::Identity(k_, k_));
        const Mat w = minv * spec_a(xm, t, dv) * minv;
        return ConeElement::matrix_scalar(-2.0 * xm * w + 2.0 * dv.u * minv,
                                          2.0 * t * w.trace() - 2.0 * dv.s * minv.trace());
    }
    const Mat gram = xm.transpose() * xm;
    const Mat nmat = t * Mat::Identity(k_, k_) - gram / t;
    const auto llt = llt_or_throw(nmat, "spectral epigraph hessian outside interior");
    const Mat ninv = llt.solve(Mat::Identity(k_, k_));
    const Mat av = dv.s * Mat::Identity(k_, k_) - (xm.transpose() * dv.u + dv.u.transpose() * xm) / t +
                   dv.s * gram / (t * t);
    const Mat w = ninv * av * ninv;
    const Mat xpart = -(2.0 / t) * xm * w + (2.0 / t) * dv.u * ninv - (2.0 * dv.s / (t * t)) * xm * ninv;
    const double spart = w.trace() + (w * gram).trace() / (t * t) -
                         (2.0 / (t * t)) * (xm * ninv).cwiseProduct(dv.u).sum() +
                         (2.0 * dv.s / (t * t * t)) * (ninv * gram).trace() + dv.s / (t * t);
    return ConeElement::matrix_scalar(xpart, spart);
}

double SpectralEpigraphCone::third_trilin(const ConeElement& x, const ConeElement& u,
                                          const ConeElement& v, const ConeElement& w) const {
    check_shape(x);
    if (variant_ == SpectralBarrier::Hyperbolic) {
        const Mat xm = x.mat();
        const double t = x.scalar_part();
        const Mat m = gram_shifted(x);
        const auto llt = llt_or_throw(m, "spectral epigraph third derivative outside interior");
        const Mat minv = llt.solve(Mat::Identity(k_, k_));
        const SpectralDir d1 = split_dir(u), d2 = split_dir(v), d3 = split_dir(w);
        const Mat a1 = minv * spec_a(xm, t, d1);
        const Mat a2 = minv * spec_a(xm, t, d2);
        const Mat a3 = minv * spec_a(xm, t, d3);
        return -(a3 * a2 * a1).trace() - (a2 * a3 * a1).trace() +
               (minv * spec_c(d2, d3, k_) * a1).trace() +
               (minv * spec_c(d1, d3, k_) * a2).trace() +
               (minv * spec_c(d1, d2, k_) * a3).trace();
    }
    // The (k+1) barrier only backs the Frank-Wolfe engine; a central
    // difference of the Hessian form is accurate enough for its checks.
    const double h = 1e-4 * (1.0 + x.inf_norm());
    const ConeElement xp = x + h * w;
    const ConeElement xmel = x - h * w;
    return (hess_apply(xp, v).dot(u) - hess_apply(xmel, v).dot(u)) / (2.0 * h);
}

// ---------------------------------------------------------------------------
// Product cone: direct sums of everything above.

ProductCone::ProductCone(std::vector<ConeHandle> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidInstance("product cone needs at least one part");
    for (const auto& p : parts_) {
        offsets_.push_back(total_dim_);
        total_dim_ += p->dim_ambient();
        nu_ += p->nu();
        pairwise_ = pairwise_ && p->pairwise_self_concordant();
    }
}

std::string ProductCone::name() const {
    std::string s = "product(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += parts_[i]->name();
    }
    return s + ")";
}

ConeElement ProductCone::part(const ConeElement& x, std::size_t i) const {
    const auto& p = parts_[i];
    return ConeElement(p->shape(), x.coords().segment(offsets_[i], p->dim_ambient()));
}

void ProductCone::validate(const ConeElement& x) const {
    check_shape(x);
    for (std::size_t i = 0; i < parts_.size(); ++i) parts_[i]->validate(part(x, i));
}

double ProductCone::slack(const ConeElement& x) const {
    check_shape(x);
    double s = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < parts_.size(); ++i) s = std::min(s, parts_[i]->slack(part(x, i)));
    return s;
}

double ProductCone::barrier_value(const ConeElement& x) const {
    check_shape(x);
    double v = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) v += parts_[i]->barrier_value(part(x, i));
    return v;
}

ConeElement ProductCone::gradient(const ConeElement& x) const {
    check_shape(x);
    Vec g(total_dim_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        g.segment(offsets_[i], parts_[i]->dim_ambient()) = parts_[i]->gradient(part(x, i)).coords();
    }
    return ConeElement(shape(), std::move(g));
}

ConeElement ProductCone::hess_apply(const ConeElement& x, const ConeElement& v) const {
    check_shape(x);
    check_shape(v);
    Vec h(total_dim_);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        h.segment(offsets_[i], parts_[i]->dim_ambient()) =
            parts_[i]->hess_apply(part(x, i), part(v, i)).coords();
    }
    return ConeElement(shape(), std::move(h));
}

double ProductCone::third_trilin(const ConeElement& x, const ConeElement& u, const ConeElement& v,
                                 const ConeElement& w) const {
    check_shape(x);
    double s = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        s += parts_[i]->third_trilin(part(x, i), part(u, i), part(v, i), part(w, i));
    }
    return s;
}

std::optional<double> ProductCone::order_norm_exact(const ConeElement& x, const ConeElement& u,
                                                    double tol) const {
    double t = 0.0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        t = std::max(t, order_norm(*parts_[i], part(x, i), part(u, i), tol).value);
    }
    return t;
}

// ---------------------------------------------------------------------------

ConeHandle make_orthant(int n) { return std::make_shared<OrthantCone>(n); }
ConeHandle make_psd(int d) { return std::make_shared<PsdCone>(d); }
ConeHandle make_second_order(int n) { return std::make_shared<SecondOrderCone>(n); }
ConeHandle make_spectral_epigraph(int n, int k, SpectralBarrier variant) {
    return std::make_shared<SpectralEpigraphCone>(n, k, variant);
}
ConeHandle make_product(std::vector<ConeHandle> parts) {
    return std::make_shared<ProductCone>(std::move(parts));
}

double grad_dir(const Cone& cone, const ConeElement& x, const ConeElement& u) {
    return cone.gradient(x).dot(u);
}

double hess_bilin(const Cone& cone, const ConeElement& x, const ConeElement& u,
                  const ConeElement& v) {
    return cone.hess_apply(x, v).dot(u);
}

double hessian_norm(const Cone& cone, const ConeElement& e, const ConeElement& u) {
    const double q = hess_bilin(cone, e, u, u);
    if (q < -1e-10) {
        throw NegativeQuadraticForm("D^2 phi(e)[u,u] = " + std::to_string(q) +
                                    " < 0 on " + cone.name());
    }
    return std::sqrt(std::max(0.0, q));
}

BarrierDerivatives barrier_derivatives(const Cone& cone, const ConeElement& x,
                                       const ConeElement& u, const ConeElement& v,
                                       const ConeElement* w) {
    BarrierDerivatives d;
    d.value = cone.barrier_value(x);
    d.grad_dir = grad_dir(cone, x, u);
    d.hess_bilin = hess_bilin(cone, x, u, v);
    if (w != nullptr) d.third_trilin = cone.third_trilin(x, u, v, *w);
    return d;
}

} // namespace conesparse
