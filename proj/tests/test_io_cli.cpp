#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "conesparse/gen.hpp"
#include "conesparse/json_io.hpp"

using namespace conesparse;
namespace fs = std::filesystem;

namespace {

#ifndef CONESPARSE_CLI_PATH
#define CONESPARSE_CLI_PATH "conesparse"
#endif

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() /
              ("conesparse_test_" + std::to_string(::getpid()) + "_" +
               std::to_string(counter()++));
        fs::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    fs::path operator/(const std::string& name) const { return dir / name; }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

int run_cli(const std::string& args, const fs::path& stdout_to = {}) {
    std::string cmd = std::string(CONESPARSE_CLI_PATH) + " " + args;
    if (!stdout_to.empty()) cmd += " > " + stdout_to.string();
    cmd += " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE("json") {

TEST_CASE("cone specs round-trip through JSON") {
    const std::vector<std::string> specs = {
        R"({"type":"orthant","n":10})",
        R"({"type":"psd","d":4})",
        R"({"type":"soc","n":3})",
        R"({"type":"spectral_epigraph","n":6,"k":2,"barrier":"hyperbolic"})",
        R"({"type":"spectral_epigraph","n":6,"k":2,"barrier":"k_plus_1"})",
        R"({"type":"product","parts":[{"type":"psd","d":3},{"type":"orthant","n":2}]})",
    };
    for (const auto& s : specs) {
        const ConeHandle cone = cone_from_json(Json::parse(s));
        const ConeHandle again = cone_from_json(cone_to_json(*cone));
        CHECK(cone->name() == again->name());
        CHECK(cone->nu() == again->nu());
        CHECK(cone->dim_ambient() == again->dim_ambient());
    }
    CHECK_THROWS_AS(cone_from_json(Json::parse(R"({"type":"moebius"})")), ParseError);
    CHECK_THROWS_AS(cone_from_json(Json::parse(R"({"type":"psd"})")), ParseError);
}

TEST_CASE("instances round-trip and honor the epsilon override") {
    const auto inst = gen_orthant_random(3, 8, 0.4, 3);
    const Json doc = instance_to_json(inst);
    const auto back = instance_from_json(doc);
    CHECK(back.epsilon() == 0.4);
    CHECK(back.size() == inst.size());
    CHECK((back.target() - inst.target()).inf_norm() <= 1e-12);

    const auto overridden = instance_from_json(doc, 0.25);
    CHECK(overridden.epsilon() == 0.25);

    Json no_eps = doc;
    no_eps.erase("epsilon");
    CHECK_THROWS_AS(instance_from_json(no_eps), ParseError);
    CHECK(instance_from_json(no_eps, 0.3).epsilon() == 0.3);
}

TEST_CASE("target defaults to the element sum") {
    Json doc;
    doc["cone"] = Json{{"type", "orthant"}, {"n", 2}};
    doc["elements"] = Json::array({Json::array({1.0, 0.5}), Json::array({0.25, 0.75})});
    doc["epsilon"] = 0.5;
    const auto inst = instance_from_json(doc);
    CHECK(inst.target().coords()[0] == doctest::Approx(1.25));
    CHECK(inst.target().coords()[1] == doctest::Approx(1.25));
}

} // TEST_SUITE("json")

TEST_SUITE("cli") {

TEST_CASE("bss writes a result that verify accepts") {
    TempDir tmp;
    const auto inst = gen_psd_rank1(3, 40, 0.5, 5);
    write_json_file((tmp / "inst.json").string(), instance_to_json(inst));

    CHECK(run_cli("bss --instance " + (tmp / "inst.json").string() + " --out " +
                  (tmp / "res.json").string() + " --trace " + (tmp / "trace.jsonl").string()) == 0);
    const Json res = parse_json_file((tmp / "res.json").string());
    CHECK(res["certificate"]["pass"].get<bool>());
    CHECK(res["bound"].get<long long>() == 48);
    CHECK(fs::exists(tmp / "trace.jsonl"));

    CHECK(run_cli("verify --instance " + (tmp / "inst.json").string() + " --result " +
                  (tmp / "res.json").string()) == 0);

    // Tampered weights must flip the exit code to 1.
    Json bad = res;
    for (auto& w : bad["weights"]) w = w.get<double>() * 0.2;
    write_json_file((tmp / "bad.json").string(), bad);
    CHECK(run_cli("verify --instance " + (tmp / "inst.json").string() + " --result " +
                  (tmp / "bad.json").string()) == 1);
}

TEST_CASE("malformed input exits with code 2") {
    TempDir tmp;
    {
        std::ofstream out(tmp / "broken.json");
        out << "{ not json";
    }
    CHECK(run_cli("bss --instance " + (tmp / "broken.json").string()) == 2);
    CHECK(run_cli("bss --instance " + (tmp / "missing.json").string()) == 2);
    CHECK(run_cli("frobnicate") == 2);
}

TEST_CASE("the greedy engine refuses the k+1 barrier with exit code 3") {
    TempDir tmp;
    const auto inst = gen_spectral_random(3, 2, 10, 0.5, 7, SpectralBarrier::KPlusOne);
    write_json_file((tmp / "inst.json").string(), instance_to_json(inst));
    CHECK(run_cli("bss --instance " + (tmp / "inst.json").string()) == 3);
    CHECK(run_cli("fw --instance " + (tmp / "inst.json").string() + " --out " +
                  (tmp / "res.json").string()) == 0);
}

TEST_CASE("bench output is reproducible apart from the timing column") {
    TempDir tmp;
    CHECK(run_cli("bench --suite orthant-random --n 3 --m 30 --eps 0.4 --seed 9 --runs 2 --out " +
                  (tmp / "a.csv").string()) == 0);
    CHECK(run_cli("bench --suite orthant-random --n 3 --m 30 --eps 0.4 --seed 9 --runs 2 --out " +
                  (tmp / "b.csv").string()) == 0);
    std::istringstream a(slurp(tmp / "a.csv"));
    std::istringstream b(slurp(tmp / "b.csv"));
    std::string la, lb;
    int rows = 0;
    while (std::getline(a, la) && std::getline(b, lb)) {
        CHECK(la.substr(0, la.rfind(',')) == lb.substr(0, lb.rfind(',')));
        ++rows;
    }
    CHECK(rows == 5); // header + 2 runs x 2 engines
}

TEST_CASE("graph subcommand round-trips through files") {
    TempDir tmp;
    {
        std::ofstream out(tmp / "g.txt");
        out << "0 1 1.0\n1 2 1.0\n0 2 1.0\n0 3 1.0\n1 3 1.0\n2 3 1.0\n";
    }
    CHECK(run_cli("graph --in " + (tmp / "g.txt").string() + " --eps 0.6 --engine bss --out " +
                  (tmp / "sp.txt").string() + " --cert " + (tmp / "cert.json").string()) == 0);
    const Json cert = parse_json_file((tmp / "cert.json").string());
    CHECK(cert["pass"].get<bool>());
    std::ifstream sp(tmp / "sp.txt");
    const WeightedGraph out = parse_graph(sp);
    CHECK(out.edges.size() <= 6);

    {
        std::ofstream out2(tmp / "disc.txt");
        out2 << "0 1 1.0\n2 3 1.0\n";
    }
    CHECK(run_cli("graph --in " + (tmp / "disc.txt").string() + " --eps 0.5") == 2);
}

TEST_CASE("caratheodory subcommand reduces and certifies") {
    TempDir tmp;
    const auto inst = gen_orthant_random(2, 7, 0.5, 11);
    Json doc = instance_to_json(inst);
    doc.erase("epsilon"); // exact reduction runs without one
    write_json_file((tmp / "inst.json").string(), doc);
    CHECK(run_cli("caratheodory --instance " + (tmp / "inst.json").string() + " --out " +
                  (tmp / "res.json").string()) == 0);
    const Json res = parse_json_file((tmp / "res.json").string());
    CHECK(res["support"].size() <= 2);
    CHECK(res["achieved_eps"].get<double>() <= 1e-7);
}

TEST_CASE("selftest passes on a product cone") {
    TempDir tmp;
    CHECK(run_cli("selftest --cone "
                  "'{\"type\":\"product\",\"parts\":[{\"type\":\"psd\",\"d\":2},{\"type\":"
                  "\"orthant\",\"n\":2}]}' --samples 40 --seed 3",
                  tmp / "report.json") == 0);
    const Json report = parse_json_file((tmp / "report.json").string());
    CHECK(report["pass"].get<bool>());
    CHECK(report.contains("pairwise_self_concordance"));
}

TEST_CASE("packcover subcommand reports passing checks") {
    TempDir tmp;
    const auto inst = gen_packcover(3, 6, 13);
    Json doc;
    doc["cone"] = cone_to_json(*inst.cone);
    doc["a"] = Json::array();
    for (const auto& ai : inst.a) {
        Json row = Json::array();
        for (Eigen::Index i = 0; i < ai.coords().size(); ++i) row.push_back(ai.coords()[i]);
        doc["a"].push_back(row);
    }
    doc["b"] = Json::array();
    for (Eigen::Index i = 0; i < inst.b.size(); ++i) doc["b"].push_back(inst.b[i]);
    doc["c"] = Json::array();
    for (Eigen::Index i = 0; i < inst.c.coords().size(); ++i) doc["c"].push_back(inst.c.coords()[i]);
    write_json_file((tmp / "pc.json").string(), doc);

    CHECK(run_cli("packcover --instance " + (tmp / "pc.json").string() + " --eps 0.3 --out " +
                  (tmp / "report.json").string()) == 0);
    const Json report = parse_json_file((tmp / "report.json").string());
    CHECK(report["pass"].get<bool>());
    CHECK(report["strong_duality"].get<bool>());
}

} // TEST_SUITE("cli")
