#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "rootpoly/cli.hpp"
#include "rootpoly/io.hpp"

using namespace rootpoly;

namespace {

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) {
        path = std::string("cli_test_") + name;
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::pair<int, std::string> run(std::vector<std::string> args) {
    std::string out;
    int code = run_cli(args, out);
    return {code, out};
}

}  // namespace

TEST_CASE("check command") {
    auto f = fixtures::k23_octahedron();
    TempFile gf("oct.txt", format_graph_file(f.graph, &f.ribbon, &f.basis));
    auto [code, out] = run({"check", gf.path});
    CHECK(code == 0);
    CHECK(out.find("semi-balanced") == 0);
    SUBCASE("directed 4-cycle exits 1") {
        TempFile bad("dc.txt", "vertices 4\narc 0 0 1\narc 1 1 2\narc 2 2 3\narc 3 3 0\n");
        auto [c2, o2] = run({"check", bad.path});
        CHECK(c2 == 1);
        CHECK(o2.find("not semi-balanced") != std::string::npos);
    }
    SUBCASE("missing file exits 2") {
        auto [c3, o3] = run({"check", "no_such_file.txt"});
        CHECK(c3 == 2);
    }
    SUBCASE("multigraph input is a parse error") {
        TempFile multi("multi.txt", "vertices 2\narc 0 0 1\narc 1 1 0\n");
        auto [c4, o4] = run({"check", multi.path});
        CHECK(c4 == 2);
    }
}

TEST_CASE("interior command prints both forms") {
    auto f = fixtures::k23_octahedron();
    TempFile gf("oct2.txt", format_graph_file(f.graph, &f.ribbon, &f.basis));
    auto [code, out] = run({"interior", gf.path});
    CHECK(code == 0);
    CHECK(out == "[1, 2, 1]\n1 + 2x + x^2\n");
    SUBCASE("json mode") {
        auto [c2, o2] = run({"--json", "interior", gf.path});
        CHECK(c2 == 0);
        CHECK(o2.find("\"coefficients\":[1,2,1]") != std::string::npos);
    }
    SUBCASE("un-semibalanced input exits 1") {
        auto t = fixtures::tour_example();
        TempFile tf("tour.txt", format_graph_file(t.graph, &t.ribbon, &t.basis));
        auto [c3, o3] = run({"interior", tf.path});
        CHECK(c3 == 1);
    }
}

TEST_CASE("jaeger and locate") {
    auto f = fixtures::k23_octahedron();
    TempFile gf("oct3.txt", format_graph_file(f.graph, &f.ribbon, &f.basis));
    auto [code, out] = run({"jaeger", gf.path});
    CHECK(code == 0);
    CHECK(out.find("4 Jaeger trees") == 0);
    TempFile pt("pt.txt", "coord 0 -1/1\ncoord 1 1/1\n");  // the generator of arc pa
    auto [c2, o2] = run({"locate", gf.path, "--point", pt.path});
    CHECK(c2 == 0);
    CHECK(o2.find("tree [") == 0);
    SUBCASE("outside point exits 1") {
        TempFile far("far.txt", "coord 0 -2\ncoord 1 2\n");
        auto [c3, o3] = run({"locate", gf.path, "--point", far.path});
        CHECK(c3 == 1);
    }
}

TEST_CASE("bernardi command") {
    auto f = fixtures::k23_standard();
    TempFile gf("k23.txt", format_graph_file(f.graph, &f.ribbon, &f.basis));
    TempFile ht("ht.txt", "ht 0 1\n");
    auto [code, out] = run({"bernardi", gf.path, "--hypertree", ht.path, "--side", "U"});
    CHECK(code == 0);
    CHECK(out.find("tree [") == 0);
}

TEST_CASE("ehrhart command with both backends") {
    auto f = fixtures::cycle4();
    TempFile gf("c4.txt", format_graph_file(f.graph));
    auto [code, out] = run({"ehrhart", gf.path, "--k", "3", "--backend", "both"});
    CHECK(code == 0);
    CHECK(out == "k=0 1\nk=1 4\nk=2 9\nk=3 16\n");
    SUBCASE("threads do not change the output") {
        auto [c2, o2] = run({"--threads", "4", "ehrhart", gf.path, "--k", "3"});
        CHECK(o2 == out);
    }
}

TEST_CASE("triangulation command") {
    auto good = fixtures::basis_sensitive_good();
    auto bad = fixtures::basis_sensitive_bad();
    TempFile gfg("good.txt", format_graph_file(good.graph, &good.ribbon, &good.basis));
    TempFile gfb("bad.txt", format_graph_file(bad.graph, &bad.ribbon, &bad.basis));
    auto [c1, o1] = run({"triangulation", gfg.path});
    CHECK(c1 == 0);
    CHECK(o1.find("triangulation") == 0);
    auto [c2, o2] = run({"triangulation", gfb.path});
    CHECK(c2 == 0);
    CHECK(o2.find("dissection only") == 0);
    CHECK(o2.find("incompatible cycle") != std::string::npos);
}

TEST_CASE("dual and greedoid commands") {
    auto f = fixtures::cube_standard();
    TempFile gf("cube.txt", format_graph_file(f.graph, &f.ribbon, &f.basis));
    auto [code, out] = run({"dual", gf.path});
    CHECK(code == 0);
    CHECK(out.find("vertices 6") == 0);
    CHECK(out.find("map 0 0") != std::string::npos);
    // feed the dual back in and ask for its greedoid polynomial
    TempFile df("oct_dual.txt", out.substr(0, out.find("map")));
    auto [c2, o2] = run({"greedoid", df.path, "--root", "0"});
    CHECK(c2 == 0);
    CHECK(o2.find("[") == 0);
    SUBCASE("multigraph dual is a clean failure") {
        auto c4 = fixtures::cycle4();
        TempFile cf("c4r.txt", format_graph_file(c4.graph, &c4.ribbon, &c4.basis));
        auto [c3, o3] = run({"dual", cf.path});
        CHECK(c3 == 1);
    }
}

TEST_CASE("layer-complete command") {
    auto [c1, o1] = run({"layer-complete", "--sizes", "1,2,1", "--emit", "formula"});
    CHECK(c1 == 0);
    CHECK(o1 == "[1, 6, 7]\n1 + 6x + 7x^2\n");
    auto [c2, o2] = run({"layer-complete", "--sizes", "1,2", "--emit", "trees"});
    CHECK(c2 == 0);
    CHECK(o2.find("3 comb trees") == 0);
    auto [c3, o3] = run({"layer-complete", "--sizes", "1,2", "--emit", "graph"});
    CHECK(c3 == 0);
    CHECK_NOTHROW(parse_graph_file(o3));
}

TEST_CASE("verify commands") {
    auto c4 = fixtures::cycle4();
    TempFile gf("c4v.txt", format_graph_file(c4.graph));
    SUBCASE("recursion over all cycles") {
        auto [code, out] = run({"verify", "recursion", gf.path});
        CHECK(code == 0);
        CHECK(out.find("zero polynomial: true") != std::string::npos);
    }
    SUBCASE("recursion over a named cycle") {
        auto [code, out] = run({"verify", "recursion", gf.path, "--cycle", "0", "1", "2", "3"});
        CHECK(code == 0);
        CHECK(out == "zero polynomial: true\n");
    }
    SUBCASE("product and disjoint") {
        auto [c1, o1] = run({"verify", "product", gf.path, gf.path, "--glue-arc", "0:0"});
        CHECK(c1 == 0);
        CHECK(o1.find("product: true") == 0);
        auto [c2, o2] = run({"verify", "disjoint", gf.path, gf.path});
        CHECK(c2 == 0);
    }
    SUBCASE("bridge") {
        auto p = fixtures::path4();
        TempFile pf("p4.txt", format_graph_file(p.graph));
        auto [code, out] = run({"verify", "bridge", pf.path, "--arc", "1"});
        CHECK(code == 0);
        CHECK(out.find("bridge: true") == 0);
    }
}

TEST_CASE("byte-identical output across runs") {
    auto f = fixtures::k23_octahedron();
    TempFile gf("det.txt", format_graph_file(f.graph, &f.ribbon, &f.basis));
    auto a = run({"jaeger", gf.path});
    auto b = run({"jaeger", gf.path});
    CHECK(a == b);
}

TEST_CASE("usage errors exit 2") {
    auto [c1, o1] = run({"frobnicate"});
    CHECK(c1 == 2);
    auto [c2, o2] = run({});
    CHECK(c2 == 2);
}
