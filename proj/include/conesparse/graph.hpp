#pragma once

#include <iosfwd>
#include <vector>

#include "conesparse/instance.hpp"
#include "conesparse/order.hpp"

namespace conesparse {

struct WeightedGraph {
    struct Edge {
        int u = 0;
        int v = 0; // u < v
        double w = 0.0;
    };
    int n = 0;
    std::vector<Edge> edges;
};

/// Whitespace edge list `i j w` with 0-based vertices; duplicate edges merge
/// by weight sum, self-loops are rejected.
WeightedGraph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& g);

/// Orthonormal basis of the subspace orthogonal to the all-ones vector
/// (Helmert construction, fixed formula), as an n x (n-1) matrix.
Mat helmert_basis(int n);

/// Laplacian rank-one atoms compressed to the complement of the all-ones
/// direction: atom_e = w_e (Q'b_e)(Q'b_e)' over Psd(n-1), target = Q'L Q.
struct ReducedInstance {
    Mat basis;
    SparsificationInstance instance;
};
ReducedInstance graph_to_instance(const WeightedGraph& g, double eps);

enum class Engine { Bss, Fw };

struct GraphSparsifyOutput {
    WeightedGraph graph;
    SandwichCertificate certificate; ///< computed in the reduced space
    SparsifierResult result;
};
GraphSparsifyOutput sparsify_graph(const WeightedGraph& g, double eps, Engine engine,
                                   const EngineOptions& opts = {});

} // namespace conesparse
