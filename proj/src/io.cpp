#include "gapmd/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace gapmd {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);  // '\n' line ends everywhere
    if (!f) throw ParseError("cannot open for writing: " + path);
    return f;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open: " + path);
    return f;
}

void expect_header(std::istream& in, const std::string& magic, int& a, int& b,
                   int* c = nullptr) {
    std::string word;
    int version = 0;
    if (!(in >> word >> version)) throw ParseError("missing header");
    if (word != magic) throw ParseError("expected '" + magic + "' header, got '" + word + "'");
    if (version != 1) throw ParseError(magic + ": unsupported version " + std::to_string(version));
    if (!(in >> a >> b)) throw ParseError(magic + ": truncated header");
    if (c && !(in >> *c)) throw ParseError(magic + ": truncated header");
}

Vec read_row(std::istream& in, int len, int q, const std::string& what) {
    Vec v(len);
    for (int i = 0; i < len; ++i) {
        int x;
        if (!(in >> x)) throw ParseError(what + ": truncated row");
        if (x < 0 || x >= q) throw ParseError(what + ": element index out of range");
        v[i] = Elt(x);
    }
    return v;
}

void write_row(std::ostream& out, const Vec& v) {
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << int(v[i]);
    }
    out << '\n';
}

}  // namespace

void write_instance(const std::string& path, const MaxNandInstance& psi) {
    auto f = open_out(path);
    f << "maxnand 1 " << psi.n << ' ' << psi.m() << '\n';
    for (const auto& c : psi.cons)
        f << c.k + 1 << ' ' << c.i + 1 << ' ' << c.j + 1 << '\n';
}

MaxNandInstance read_instance(const std::string& path) {
    auto f = open_in(path);
    int n, m;
    expect_header(f, "maxnand", n, m);
    std::vector<NandConstraint> cons;
    for (int c = 0; c < m; ++c) {
        int k, i, j;
        if (!(f >> k >> i >> j)) throw ParseError("maxnand: truncated constraint list");
        cons.push_back({k - 1, i - 1, j - 1});
    }
    return make_instance(n, std::move(cons));
}

void write_code(const std::string& path, const LinearCode& C) {
    auto f = open_out(path);
    f << "gfcode 1 " << C.q << ' ' << C.n << ' ' << C.k << '\n';
    for (int i = 0; i < C.k; ++i) write_row(f, Vec(C.G.row(i), C.G.row(i) + C.n));
}

LinearCode read_code(const std::string& path) {
    auto f = open_in(path);
    int q, n, k;
    expect_header(f, "gfcode", q, n, &k);
    const Field& F = Field::of(q);
    Mat G(k, n);
    for (int i = 0; i < k; ++i) {
        Vec row = read_row(f, n, q, "gfcode");
        std::copy(row.begin(), row.end(), G.row(i));
    }
    LinearCode C = make_code(F, G);
    if (C.k != k) throw ParseError("gfcode: generator rows are not independent");
    return C;
}

void write_affine(const std::string& path, const AffineSubspace& A) {
    auto f = open_out(path);
    f << "gfaffine 1 " << A.code.q << ' ' << A.code.n << ' ' << A.code.k << '\n';
    for (int i = 0; i < A.code.k; ++i)
        write_row(f, Vec(A.code.G.row(i), A.code.G.row(i) + A.code.n));
    write_row(f, A.offset);
}

AffineSubspace read_affine(const std::string& path) {
    auto f = open_in(path);
    int q, n, k;
    expect_header(f, "gfaffine", q, n, &k);
    const Field& F = Field::of(q);
    Mat G(k, n);
    for (int i = 0; i < k; ++i) {
        Vec row = read_row(f, n, q, "gfaffine");
        std::copy(row.begin(), row.end(), G.row(i));
    }
    AffineSubspace A;
    A.code = make_code(F, G);
    if (A.code.k != k) throw ParseError("gfaffine: generator rows are not independent");
    A.offset = read_row(f, n, q, "gfaffine");
    return A;
}

void write_evalset(const std::string& path, const EvaluationSet& R) {
    auto f = open_out(path);
    f << "evalset 1 " << R.q << ' ' << R.n << ' ' << R.points.size() << '\n';
    for (const Vec& p : R.points) write_row(f, p);
}

EvaluationSet read_evalset(const std::string& path) {
    auto f = open_in(path);
    int q, n, N;
    expect_header(f, "evalset", q, n, &N);
    EvaluationSet R;
    R.q = q;
    R.n = n;
    R.provenance = "explicit-file";
    for (int i = 0; i < N; ++i) R.points.push_back(read_row(f, n, q, "evalset"));
    if (R.points.empty()) throw ParseError("evalset: empty point list");
    return R;
}

void write_vec(const std::string& path, int q, const Vec& v) {
    auto f = open_out(path);
    f << "gfvec 1 " << q << ' ' << v.size() << '\n';
    write_row(f, v);
}

std::pair<int, Vec> read_vec(const std::string& path) {
    auto f = open_in(path);
    int q, n;
    expect_header(f, "gfvec", q, n);
    return {q, read_row(f, n, q, "gfvec")};
}

nlohmann::json artifact_manifest(const ReductionArtifact& art) {
    nlohmann::json j;
    j["kind"] = art.kind;
    j["params"] = {{"q", art.q},       {"n", art.nvars}, {"m", art.m},
                   {"N", art.N},       {"r", art.r},     {"M", art.output_length()},
                   {"dim", art.code.k}};
    nlohmann::json blocks = nlohmann::json::array();
    for (const Block& b : art.system.layout.blocks)
        blocks.push_back({{"name", b.name}, {"shape", b.shape}, {"offset", b.offset},
                          {"size", b.size}});
    j["layout"] = {{"blocks", blocks}, {"total", art.system.layout.total}};
    nlohmann::json proj = nlohmann::json::array();
    for (auto [src, cnt] : art.projection) proj.push_back({src, cnt});
    j["projection"] = proj;
    j["bounds"] = {
        {"completeness_weight", art.bounds.completeness_weight},
        {"case1_floor", art.bounds.case1_floor.str()},
        {"zcase_floor", art.bounds.zcase_floor.str()},
        {"soundness_floor", art.bounds.soundness_floor.str()},
        {"delta", art.bounds.delta.str()},
        {"epsilon", art.bounds.epsilon.str()},
        {"opt", art.bounds.opt ? nlohmann::json(art.bounds.opt->str()) : nlohmann::json()},
    };
    j["injective"] = art.injective;
    return j;
}

void write_artifact(const std::string& dir, const ReductionArtifact& art,
                    const std::optional<Vec>& intended) {
    std::filesystem::create_directories(dir);
    auto path = [&](const std::string& name) {
        return (std::filesystem::path(dir) / name).string();
    };
    if (art.kind == "ncp2") {
        AffineSubspace A{art.code, *art.offset};
        write_affine(path("space.gfa"), A);
    } else {
        write_code(path("code.gfc"), art.code);
    }
    {
        auto f = open_out(path("manifest.json"));
        f << artifact_manifest(art).dump(2) << '\n';
    }
    if (intended) write_vec(path("intended.gfv"), art.q, *intended);
}

StoredArtifact read_artifact(const std::string& dir) {
    namespace fs = std::filesystem;
    StoredArtifact out;
    auto mpath = fs::path(dir) / "manifest.json";
    {
        auto f = open_in(mpath.string());
        f >> out.manifest;
    }
    out.kind = out.manifest.at("kind").get<std::string>();
    out.q = out.manifest.at("params").at("q").get<int>();
    if (out.kind == "ncp2")
        out.affine = read_affine((fs::path(dir) / "space.gfa").string());
    else
        out.code = read_code((fs::path(dir) / "code.gfc").string());
    auto ipath = fs::path(dir) / "intended.gfv";
    if (fs::exists(ipath)) out.intended = read_vec(ipath.string()).second;
    return out;
}

}  // namespace gapmd
