#include "conesparse/graph.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "conesparse/bss.hpp"
#include "conesparse/fw.hpp"
#include "conesparse/verify.hpp"

namespace conesparse {

WeightedGraph parse_graph(std::istream& in) {
    std::map<std::pair<int, int>, double> merged;
    int max_vertex = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        int i, j;
        double w;
        if (!(ls >> i)) continue; // blank line
        if (!(ls >> j >> w)) {
            throw ParseError("graph line " + std::to_string(lineno) + ": expected `i j w`");
        }
        if (i < 0 || j < 0) throw ParseError("graph line " + std::to_string(lineno) + ": negative vertex");
        if (i == j) throw ParseError("graph line " + std::to_string(lineno) + ": self-loop");
        if (!(w > 0.0)) throw ParseError("graph line " + std::to_string(lineno) + ": weight must be positive");
        if (i > j) std::swap(i, j);
        merged[{i, j}] += w;
        max_vertex = std::max(max_vertex, j);
    }
    if (merged.empty()) throw ParseError("graph has no edges");
    WeightedGraph g;
    g.n = max_vertex + 1;
    for (const auto& [key, w] : merged) g.edges.push_back({key.first, key.second, w});
    return g;
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
    char buf[96];
    for (const auto& e : g.edges) {
        std::snprintf(buf, sizeof(buf), "%d %d %.17g\n", e.u, e.v, e.w);
        out << buf;
    }
}

Mat helmert_basis(int n) {
    Mat q = Mat::Zero(n, n - 1);
    for (int j = 1; j < n; ++j) {
        const double s = 1.0 / std::sqrt(static_cast<double>(j) * (j + 1));
        for (int i = 0; i < j; ++i) q(i, j - 1) = s;
        q(j, j - 1) = -static_cast<double>(j) * s;
    }
    return q;
}

ReducedInstance graph_to_instance(const WeightedGraph& g, double eps) {
    if (g.n < 2) throw InvalidInstance("graph needs at least two vertices");
    const Mat q = helmert_basis(g.n);

    std::vector<ConeElement> atoms;
    atoms.reserve(g.edges.size());
    Mat target = Mat::Zero(g.n - 1, g.n - 1);
    for (const auto& e : g.edges) {
        const Vec b = (q.row(e.u) - q.row(e.v)).transpose(); // Q' (e_u - e_v)
        const Mat atom = e.w * (b * b.transpose());
        target += atom;
        atoms.push_back(ConeElement::sym_matrix(atom));
    }

    Eigen::SelfAdjointEigenSolver<Mat> es(target, Eigen::EigenvaluesOnly);
    const double lambda_min = es.eigenvalues().minCoeff();
    if (lambda_min <= 1e-9 * (1.0 + target.cwiseAbs().maxCoeff())) {
        throw Disconnected("reduced Laplacian has minimum eigenvalue " + std::to_string(lambda_min));
    }

    return ReducedInstance{q, SparsificationInstance(make_psd(g.n - 1), std::move(atoms), eps,
                                                     ConeElement::sym_matrix(target))};
}

GraphSparsifyOutput sparsify_graph(const WeightedGraph& g, double eps, Engine engine,
                                   const EngineOptions& opts) {
    const ReducedInstance reduced = graph_to_instance(g, eps);
    GraphSparsifyOutput out;
    out.result = engine == Engine::Bss ? bss_sparsify(reduced.instance, opts)
                                       : fw_sparsify(reduced.instance, opts);
    out.certificate = certify(reduced.instance, out.result);

    out.graph.n = g.n;
    for (std::size_t i = 0; i < out.result.support.size(); ++i) {
        const auto& e = g.edges[out.result.support[i]];
        out.graph.edges.push_back({e.u, e.v, out.result.weights[i] * e.w});
    }
    return out;
}

} // namespace conesparse
