#include "conesparse/gen.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <set>

#include "conesparse/rng.hpp"

namespace conesparse {

SparsificationInstance gen_psd_rank1(int d, int m, double eps, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vec> vs;
    Mat sum = Mat::Zero(d, d);
    for (int i = 0; i < m; ++i) {
        Vec v(d);
        for (int j = 0; j < d; ++j) v[j] = rng.normal();
        sum += v * v.transpose();
        vs.push_back(std::move(v));
    }
    // Whiten: atoms W v v' W with W = sum^{-1/2}, so the atoms add up to I.
    Eigen::SelfAdjointEigenSolver<Mat> es(sum);
    const Mat w = es.operatorInverseSqrt();
    std::vector<ConeElement> atoms;
    atoms.reserve(m);
    for (const auto& v : vs) {
        const Vec wv = w * v;
        atoms.push_back(ConeElement::sym_matrix(wv * wv.transpose()));
    }
    return SparsificationInstance(make_psd(d), std::move(atoms), eps,
                                  ConeElement::sym_matrix(Mat::Identity(d, d)));
}

SparsificationInstance gen_orthant_random(int n, int m, double eps, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ConeElement> atoms;
    atoms.reserve(m);
    for (int i = 0; i < m; ++i) {
        Vec v(n);
        for (int j = 0; j < n; ++j) v[j] = rng.uniform(0.1, 1.0);
        atoms.push_back(ConeElement::vector(std::move(v)));
    }
    return SparsificationInstance(make_orthant(n), std::move(atoms), eps);
}

SparsificationInstance gen_soc_random(int n, int m, double eps, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ConeElement> atoms;
    atoms.reserve(m);
    for (int i = 0; i < m; ++i) {
        Vec v(n);
        for (int j = 1; j < n; ++j) v[j] = rng.normal();
        v[0] = v.tail(n - 1).norm() + rng.uniform(0.05, 0.5);
        atoms.push_back(ConeElement::vector(std::move(v)));
    }
    return SparsificationInstance(make_second_order(n), std::move(atoms), eps);
}

SparsificationInstance gen_spectral_random(int n, int k, int m, double eps, std::uint64_t seed,
                                           SpectralBarrier variant) {
    Rng rng(seed);
    std::vector<ConeElement> atoms;
    atoms.reserve(m);
    for (int i = 0; i < m; ++i) {
        Mat x(n, k);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < k; ++c) x(r, c) = rng.normal();
        Eigen::SelfAdjointEigenSolver<Mat> es(x.transpose() * x, Eigen::EigenvaluesOnly);
        const double sigma = std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
        atoms.push_back(ConeElement::matrix_scalar(x, sigma + rng.uniform(0.05, 0.5)));
    }
    return SparsificationInstance(make_spectral_epigraph(n, k, variant), std::move(atoms), eps);
}

WeightedGraph gen_complete_graph(int n) {
    WeightedGraph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, 1.0});
    return g;
}

WeightedGraph gen_random_graph(int n, int extra_edges, std::uint64_t seed) {
    Rng rng(seed);
    WeightedGraph g;
    g.n = n;
    std::set<std::pair<int, int>> used;
    for (int v = 1; v < n; ++v) {
        const int u = static_cast<int>(rng.below(v));
        used.insert({u, v});
        g.edges.push_back({u, v, rng.uniform(0.5, 1.5)});
    }
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    int added = 0;
    while (added < extra_edges && static_cast<long long>(used.size()) < max_edges) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!used.insert({u, v}).second) continue;
        g.edges.push_back({u, v, rng.uniform(0.5, 1.5)});
        ++added;
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return g;
}

PackCoverInstance gen_packcover(int d, int k, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ConeElement> a;
    a.reserve(k);
    for (int i = 0; i < k; ++i) {
        Vec v(d);
        // Sparse-ish nonnegative rows, with enough mass that covering stays feasible.
        for (int j = 0; j < d; ++j) v[j] = rng.uniform01() < 0.7 ? rng.uniform(0.1, 2.0) : 0.0;
        if (v.maxCoeff() <= 0.0) v[static_cast<int>(rng.below(d))] = rng.uniform(0.5, 2.0);
        a.push_back(ConeElement::vector(std::move(v)));
    }
    // Guarantee every coordinate is coverable.
    for (int j = 0; j < d; ++j) {
        bool covered = false;
        for (const auto& ai : a) covered = covered || ai.coords()[j] > 0.0;
        if (!covered) {
            Vec v = a[0].coords();
            v[j] = rng.uniform(0.5, 2.0);
            a[0] = ConeElement::vector(std::move(v));
        }
    }
    Vec b(k);
    for (int i = 0; i < k; ++i) b[i] = rng.uniform(0.5, 3.0);
    Vec c(d);
    for (int j = 0; j < d; ++j) c[j] = rng.uniform(0.5, 2.0);
    return PackCoverInstance(make_orthant(d), std::move(a), std::move(b),
                             ConeElement::vector(std::move(c)));
}

} // namespace conesparse
