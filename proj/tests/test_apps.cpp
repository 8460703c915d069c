#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "conesparse/bss.hpp"
#include "conesparse/gen.hpp"
#include "conesparse/graph.hpp"
#include "conesparse/packcover.hpp"
#include "conesparse/rng.hpp"
#include "conesparse/verify.hpp"

using namespace conesparse;

TEST_SUITE("graph") {

TEST_CASE("parsing merges duplicates and rejects bad rows") {
    std::istringstream good("0 1 1.5\n1 2 2.0\n0 1 0.5\n");
    const auto g = parse_graph(good);
    CHECK(g.n == 3);
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].w == doctest::Approx(2.0));

    std::istringstream loop("0 0 1.0\n");
    CHECK_THROWS_AS(parse_graph(loop), ParseError);
    std::istringstream neg("0 1 -2.0\n");
    CHECK_THROWS_AS(parse_graph(neg), ParseError);
    std::istringstream short_row("0 1\n");
    CHECK_THROWS_AS(parse_graph(short_row), ParseError);
}

TEST_CASE("helmert basis is orthonormal and kills the ones vector") {
    for (const int n : {2, 5, 9}) {
        const Mat q = helmert_basis(n);
        CHECK((q.transpose() * q - Mat::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK((q.transpose() * Vec::Ones(n)).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("single edge reduces to the scalar 2w") {
    WeightedGraph g;
    g.n = 2;
    g.edges.push_back({0, 1, 0.7});
    const auto red = graph_to_instance(g, 0.5);
    REQUIRE(red.instance.cone().dim_ambient() == 1);
    // Oracle: Q' (e0 - e1) with the explicit Helmert column.
    const Mat q = helmert_basis(2);
    const double b = q(0, 0) - q(1, 0);
    CHECK(red.instance.elements()[0].coords()[0] == doctest::Approx(0.7 * b * b));
    CHECK(red.instance.elements()[0].coords()[0] == doctest::Approx(1.4));
}

TEST_CASE("unit triangle reduces to three times the identity") {
    const auto red = graph_to_instance(gen_complete_graph(3), 0.5);
    const Mat target = red.instance.target().sym();
    CHECK((target - 3.0 * Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("disconnected graphs are rejected") {
    WeightedGraph g;
    g.n = 4;
    g.edges.push_back({0, 1, 1.0});
    g.edges.push_back({2, 3, 1.0});
    CHECK_THROWS_AS(graph_to_instance(g, 0.5), Disconnected);
}

TEST_CASE("complete graph sparsifies below its edge count") {
    const int n = 20;
    const double eps = 0.8;
    const auto out = sparsify_graph(gen_complete_graph(n), eps, Engine::Bss);
    const long long bound = static_cast<long long>(std::ceil(4.0 * (n - 1) / (eps * eps)));
    CHECK(bound == 119);
    CHECK(static_cast<long long>(out.graph.edges.size()) <= bound);
    CHECK(out.graph.edges.size() < 190); // strictly fewer than the input edges
    CHECK(out.certificate.pass);
    for (const auto& e : out.graph.edges) CHECK(e.w > 0.0);
}

TEST_CASE("reduced-space sandwich transfers to quadratic forms orthogonal to ones") {
    const auto g = gen_random_graph(12, 30, 5);
    const double eps = 0.5;
    const auto out = sparsify_graph(g, eps, Engine::Bss);
    REQUIRE(out.certificate.pass);

    Mat lap_in = Mat::Zero(g.n, g.n);
    for (const auto& e : g.edges) {
        lap_in(e.u, e.u) += e.w;
        lap_in(e.v, e.v) += e.w;
        lap_in(e.u, e.v) -= e.w;
        lap_in(e.v, e.u) -= e.w;
    }
    Mat lap_out = Mat::Zero(g.n, g.n);
    for (const auto& e : out.graph.edges) {
        lap_out(e.u, e.u) += e.w;
        lap_out(e.v, e.v) += e.w;
        lap_out(e.u, e.v) -= e.w;
        lap_out(e.v, e.u) -= e.w;
    }

    Rng rng(55);
    for (int s = 0; s < 20; ++s) {
        Vec v(g.n);
        for (int i = 0; i < g.n; ++i) v[i] = rng.normal();
        v.array() -= v.mean(); // project onto the complement of ones
        const double qin = v.dot(lap_in * v);
        const double qout = v.dot(lap_out * v);
        CHECK(qout >= (1.0 - eps) * qin - 1e-8 * std::abs(qin));
        CHECK(qout <= (1.0 + eps) * qin + 1e-8 * std::abs(qin));
    }

    // Output edges form a sub-multiset of the input edges.
    for (const auto& e : out.graph.edges) {
        bool found = false;
        for (const auto& in : g.edges) found = found || (in.u == e.u && in.v == e.v);
        CHECK(found);
    }
}

TEST_CASE("star graph keeps at most its three atoms") {
    WeightedGraph g;
    g.n = 4;
    g.edges.push_back({0, 1, 1.0});
    g.edges.push_back({0, 2, 2.0});
    g.edges.push_back({0, 3, 0.5});
    const auto out = sparsify_graph(g, 0.5, Engine::Bss);
    CHECK(out.graph.edges.size() <= 3);
    CHECK(out.certificate.pass);
}

TEST_CASE("single edge comes back rescaled within the interval") {
    WeightedGraph g;
    g.n = 2;
    g.edges.push_back({0, 1, 2.0});
    const auto out = sparsify_graph(g, 0.4, Engine::Bss);
    REQUIRE(out.graph.edges.size() == 1);
    CHECK(out.graph.edges[0].w >= (1.0 - 0.4) * 2.0 - 1e-9);
    CHECK(out.graph.edges[0].w <= (1.0 + 0.4) * 2.0 + 1e-9);
    CHECK(out.certificate.pass);
}

TEST_CASE("fw engine also sparsifies graphs") {
    const auto out = sparsify_graph(gen_complete_graph(6), 0.6, Engine::Fw);
    CHECK(out.certificate.pass);
    CHECK(out.certificate.achieved_eps <= 0.6);
}

TEST_CASE("runs are deterministic") {
    const auto g = gen_random_graph(10, 20, 9);
    const auto a = sparsify_graph(g, 0.5, Engine::Bss);
    const auto b = sparsify_graph(g, 0.5, Engine::Bss);
    REQUIRE(a.graph.edges.size() == b.graph.edges.size());
    for (std::size_t i = 0; i < a.graph.edges.size(); ++i) {
        CHECK(a.graph.edges[i].w == b.graph.edges[i].w);
    }
}

} // TEST_SUITE("graph")

TEST_SUITE("packcover") {

namespace {

PackCoverInstance tiny_instance() {
    std::vector<ConeElement> a{ConeElement::vector(Vec::Ones(1))};
    return PackCoverInstance(make_orthant(1), a, Vec::Ones(1), ConeElement::vector(Vec::Ones(1)));
}

} // namespace

TEST_CASE("one-dimensional instance solves to one on both sides") {
    const auto inst = tiny_instance();
    const auto rep = solve_both(inst);
    CHECK(rep.cover.value == doctest::Approx(1.0));
    CHECK(rep.pack.value == doctest::Approx(1.0));
    CHECK(rep.strong_duality);
}

TEST_CASE("diagonal instance decouples to the coordinate sum") {
    const int d = 4;
    std::vector<ConeElement> a;
    for (int i = 0; i < d; ++i) {
        Vec v = Vec::Zero(d);
        v[i] = 1.0;
        a.push_back(ConeElement::vector(v));
    }
    Vec c(d);
    c << 0.3, 1.2, 0.7, 2.0;
    PackCoverInstance inst(make_orthant(d), a, Vec::Ones(d), ConeElement::vector(c));
    CHECK(solve_cover(inst).value == doctest::Approx(c.sum()));
    CHECK(solve_pack(inst).value == doctest::Approx(c.sum()));
}

TEST_CASE("random instances close the duality gap") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto inst = gen_packcover(3, 5, seed);
        const auto rep = solve_both(inst);
        INFO("seed ", seed, " cover ", rep.cover.value, " pack ", rep.pack.value);
        CHECK(rep.strong_duality);
        // The optimal cover is feasible and supported on at most d entries.
        int nnz = 0;
        for (int i = 0; i < inst.k(); ++i) nnz += rep.cover.point[i] > 1e-12 ? 1 : 0;
        CHECK(nnz <= inst.d());
    }
}

TEST_CASE("uncoverable coordinates are infeasible, unbounded on the dual side") {
    std::vector<ConeElement> a;
    Vec v(2);
    v << 1.0, 0.0;
    a.push_back(ConeElement::vector(v));
    PackCoverInstance inst(make_orthant(2), a, Vec::Ones(1),
                           ConeElement::vector(Vec::Ones(2)));
    CHECK_THROWS_AS(solve_cover(inst), Infeasible);
    CHECK_THROWS_AS(solve_pack(inst), Unbounded);
}

TEST_CASE("pack sandwich is exact at the endpoints") {
    const auto inst = gen_packcover(3, 6, 21);
    const auto same = pack_cost_sandwich(inst, inst.c, 0.3);
    CHECK(same.pass);
    CHECK(same.pack_perturbed == doctest::Approx(same.pack_original));

    const double eps = 0.3;
    const auto scaled = pack_cost_sandwich(inst, (1.0 + eps) * inst.c, eps);
    CHECK(scaled.pass);
    CHECK(scaled.pack_perturbed == doctest::Approx((1.0 + eps) * scaled.pack_original));

    CHECK_THROWS_AS(pack_cost_sandwich(inst, 2.0 * inst.c, 0.3), PremiseFailed);
}

TEST_CASE("sparsified costs keep the packing value within the interval") {
    Rng rng(77);
    const int d = 3, m = 30;
    std::vector<ConeElement> parts;
    ConeElement c = ConeElement::zeros(Shape::vector(d));
    for (int i = 0; i < m; ++i) {
        Vec v(d);
        for (int j = 0; j < d; ++j) v[j] = rng.uniform(0.05, 0.6);
        parts.push_back(ConeElement::vector(v));
        c += parts.back();
    }
    const double eps = 0.3;
    SparsificationInstance decomposition(make_orthant(d), parts, eps);
    const auto res = bss_sparsify(decomposition);
    const ConeElement c_prime = res.combination(decomposition);

    const auto inst = gen_packcover(d, 6, 23);
    PackCoverInstance with_cost(inst.cone, inst.a, inst.b, c);
    const auto rep = pack_cost_sandwich(with_cost, c_prime, eps);
    CHECK(rep.pass);
}

TEST_CASE("sparse cover on an already sparse optimum") {
    const auto inst = tiny_instance();
    const auto rep = sparse_cover_solution(inst, 0.5);
    CHECK(rep.pass);
    CHECK(rep.support == 1);
    CHECK(rep.y_prime_value >= rep.cover_value - 1e-9);
}

TEST_CASE("sparse cover bounds hold at desk scale") {
    const auto inst = gen_packcover(2, 8, 25);
    const auto rep = sparse_cover_solution(inst, 0.5);
    CHECK(rep.pass);
    CHECK(rep.bound == 32);
    CHECK(rep.support <= 32);
}

TEST_CASE("sparse cover handles the wide k=60 regime") {
    const auto inst = gen_packcover(4, 60, 27);
    const auto rep = sparse_cover_solution(inst, 0.5);
    CHECK(rep.pass);
    CHECK(rep.bound == 64);
    CHECK(rep.support <= 64);
    CHECK(rep.feasible);
    CHECK(rep.y_prime_value >= rep.cover_value - 1e-9);
    CHECK((1.0 - 0.5) / (1.0 + 0.5) * rep.y_prime_value <= rep.cover_value + 1e-9);
}

TEST_CASE("oversized instances are rejected") {
    std::vector<ConeElement> a(12, ConeElement::vector(Vec::Ones(6)));
    CHECK_THROWS_AS(PackCoverInstance(make_orthant(6), a, Vec::Ones(12),
                                      ConeElement::vector(Vec::Ones(6))),
                    InvalidInstance);
}

} // TEST_SUITE("packcover")
