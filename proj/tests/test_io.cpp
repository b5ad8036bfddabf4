#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "gapmd/io.hpp"

using namespace gapmd;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("gapmd_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("instance round trip and header") {
    TempDir tmp;
    auto psi = gen_planted(4, 8, 7).first;
    write_instance(tmp.file("a.mn"), psi);

    std::ifstream f(tmp.file("a.mn"));
    std::string header;
    std::getline(f, header);
    CHECK(header == "maxnand 1 4 8");

    auto back = read_instance(tmp.file("a.mn"));
    CHECK(back.n == psi.n);
    REQUIRE(back.m() == psi.m());
    for (int c = 0; c < psi.m(); ++c) {
        CHECK(back.cons[c].k == psi.cons[c].k);
        CHECK(back.cons[c].i == psi.cons[c].i);
        CHECK(back.cons[c].j == psi.cons[c].j);
    }
}

TEST_CASE("contradiction file content is pinned") {
    TempDir tmp;
    write_instance(tmp.file("c.mn"), contradiction_instance());
    std::ifstream f(tmp.file("c.mn"));
    std::string all((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(all == "maxnand 1 1 1\n1 1 1\n");
}

TEST_CASE("code and affine round trips") {
    TempDir tmp;
    const Field& F = Field::of(3);
    EvaluationSet plane = exhaustive_set(F, 2);
    LinearCode C = polynomial_code(F, 2, 1, plane);
    write_code(tmp.file("c.gfc"), C);
    LinearCode back = read_code(tmp.file("c.gfc"));
    CHECK(back.q == C.q);
    CHECK(back.n == C.n);
    CHECK(back.k == C.k);
    CHECK(back.G == C.G);

    AffineSubspace A{C, Vec(C.n, 1)};
    write_affine(tmp.file("a.gfa"), A);
    AffineSubspace aback = read_affine(tmp.file("a.gfa"));
    CHECK(aback.code.G == C.G);
    CHECK(aback.offset == A.offset);
}

TEST_CASE("evalset and vec round trips") {
    TempDir tmp;
    const Field& F = Field::of(2);
    EvaluationSet R = small_bias_set(F, 3, Frac(1, 2));
    write_evalset(tmp.file("r.es"), R);
    EvaluationSet back = read_evalset(tmp.file("r.es"));
    CHECK(back.q == R.q);
    CHECK(back.n == R.n);
    CHECK(back.points == R.points);

    Vec v{0, 1, 1, 0, 1};
    write_vec(tmp.file("v.gfv"), 2, v);
    auto [q, vb] = read_vec(tmp.file("v.gfv"));
    CHECK(q == 2);
    CHECK(vb == v);
}

TEST_CASE("artifact directory round trip") {
    TempDir tmp;
    auto psi = make_instance(3, {{2, 0, 1}, {0, 1, 2}});
    auto art = build_ncp2(psi);
    write_artifact(tmp.file("art"), art, std::nullopt);
    auto stored = read_artifact(tmp.file("art"));
    CHECK(stored.kind == "ncp2");
    CHECK(stored.q == 2);
    REQUIRE(stored.affine.has_value());
    CHECK(stored.affine->code.G == art.code.G);
    CHECK(stored.affine->offset == *art.offset);
    CHECK(stored.manifest["injective"] == true);
    CHECK(stored.manifest["params"]["m"] == 2);

    // a mindist artifact with an intended codeword
    auto sat = make_instance(3, {{1, 0, 0}, {2, 0, 1}, {0, 1, 2}});
    auto opt = opt_exact(sat);
    auto art2 = build_mindist2(sat, simplex_code(3), 2, Frac(1) - opt.opt, opt.opt);
    Vec intended = intended_codeword(Field::of(2), art2, opt.witness);
    write_artifact(tmp.file("art2"), art2, intended);
    auto stored2 = read_artifact(tmp.file("art2"));
    CHECK(stored2.kind == "md2");
    REQUIRE(stored2.code.has_value());
    CHECK(stored2.code->G == art2.code.G);
    REQUIRE(stored2.intended.has_value());
    CHECK(*stored2.intended == intended);
}

TEST_CASE("parse errors carry the right type") {
    TempDir tmp;
    CHECK_THROWS_AS(read_instance(tmp.file("missing.mn")), ParseError);
    {
        std::ofstream f(tmp.file("bad.mn"));
        f << "wrongmagic 1 2 1\n1 1 1\n";
    }
    CHECK_THROWS_AS(read_instance(tmp.file("bad.mn")), ParseError);
    {
        std::ofstream f(tmp.file("bad2.gfc"));
        f << "gfcode 2 2 3 1\n0 1 0\n";  // unsupported version
    }
    CHECK_THROWS_AS(read_code(tmp.file("bad2.gfc")), ParseError);
    {
        std::ofstream f(tmp.file("bad3.gfc"));
        f << "gfcode 1 2 3 1\n0 1 7\n";  // element out of range
    }
    CHECK_THROWS_AS(read_code(tmp.file("bad3.gfc")), ParseError);
}

}  // TEST_SUITE
