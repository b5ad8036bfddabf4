#include "gapmd/reduction.hpp"

#include <algorithm>
#include <cmath>

namespace gapmd {

int VariableLayout::add(std::string name, std::vector<int> shape) {
    Block b;
    b.name = std::move(name);
    b.shape = std::move(shape);
    b.offset = total;
    b.size = 1;
    for (int s : b.shape) b.size *= s;
    total += b.size;
    blocks.push_back(std::move(b));
    return blocks.back().offset;
}

const Block& VariableLayout::block(const std::string& name) const {
    for (const Block& b : blocks)
        if (b.name == name) return b;
    throw DimensionMismatch("layout: no block named " + name);
}

Vec project_output(const ReductionArtifact& art, const Vec& full) {
    Vec out;
    out.reserve(art.output_length());
    for (auto [src, cnt] : art.projection)
        for (int c = 0; c < cnt; ++c) out.push_back(full[src]);
    return out;
}

namespace {

// row assembly buffer: rows built sparse against the layout width
struct SystemBuilder {
    int width;
    std::vector<Vec> rows;
    std::vector<std::string> tags;

    explicit SystemBuilder(int w) : width(w) {}

    Vec& fresh(const std::string& tag) {
        rows.emplace_back(width, 0);
        tags.push_back(tag);
        return rows.back();
    }

    ConstraintSystem finish(VariableLayout layout) {
        ConstraintSystem sys;
        sys.layout = std::move(layout);
        sys.H = Mat(int(rows.size()), width);
        for (size_t i = 0; i < rows.size(); ++i)
            std::copy(rows[i].begin(), rows[i].end(), sys.H.row(int(i)));
        sys.tags = std::move(tags);
        return sys;
    }
};

// S block entry order (a,b) = (0,0),(0,1),(1,0),(1,1)
constexpr int kS00 = 0, kS01 = 1, kS10 = 2, kS11 = 3;

void finish_projection_code(const Field& F, ReductionArtifact& art) {
    int outlen = 0;
    for (auto [src, cnt] : art.projection) outlen += cnt;
    Mat proj(int(art.nullbasis.size()), outlen);
    for (size_t i = 0; i < art.nullbasis.size(); ++i) {
        int o = 0;
        for (auto [src, cnt] : art.projection)
            for (int c = 0; c < cnt; ++c) proj.at(int(i), o++) = art.nullbasis[i][src];
    }
    art.code = make_code(F, proj);
    art.injective = art.code.k == int(art.nullbasis.size());
    if (!art.injective)
        throw NotInjective(art.kind + ": output projection loses dimension (" +
                           std::to_string(art.code.k) + " < " +
                           std::to_string(art.nullbasis.size()) + ")");
}

}  // namespace

ReductionArtifact build_ncp2(const MaxNandInstance& psi, Frac delta,
                             std::optional<Frac> opt) {
    const Field& F = Field::of(2);
    const int n = psi.n, m = psi.m();

    VariableLayout layout;
    layout.add("x", {n});
    for (int c = 0; c < m; ++c) layout.add("S[" + std::to_string(c) + "]", {2, 2});

    SystemBuilder sb(layout.total);
    Vec rhs;
    const int xoff = 0;
    for (int c = 0; c < m; ++c) {
        const auto& con = psi.cons[c];
        int s = layout.offset_of("S[" + std::to_string(c) + "]");
        std::string id = std::to_string(c);

        Vec& r1 = sb.fresh("eq1 S" + id);
        r1[s + kS00] = r1[s + kS01] = r1[s + kS10] = r1[s + kS11] = 1;
        rhs.push_back(1);

        Vec& r2 = sb.fresh("eq2 S" + id);
        r2[s + kS10] = r2[s + kS11] = 1;
        r2[xoff + con.i] = F.add(r2[xoff + con.i], 1);  // -x_i over F_2
        rhs.push_back(0);

        Vec& r3 = sb.fresh("eq3 S" + id);
        r3[s + kS01] = r3[s + kS11] = 1;
        r3[xoff + con.j] = F.add(r3[xoff + con.j], 1);
        rhs.push_back(0);

        Vec& r4 = sb.fresh("eq4 S" + id);
        r4[s + kS00] = r4[s + kS01] = r4[s + kS10] = 1;
        r4[xoff + con.k] = F.add(r4[xoff + con.k], 1);
        rhs.push_back(0);
    }

    ReductionArtifact art;
    art.kind = "ncp2";
    art.instance = psi;
    art.q = 2;
    art.nvars = n;
    art.m = m;
    art.N = 0;
    art.r = 1;
    art.system = sb.finish(std::move(layout));

    auto part = solve(F, art.system.H, rhs);
    if (!part) throw MembershipFailure("ncp2: indicator system inconsistent");
    art.particular = *part;
    art.nullbasis = nullspace_basis(F, art.system.H);

    for (int c = 0; c < m; ++c) {
        int s = art.system.layout.offset_of("S[" + std::to_string(c) + "]");
        for (int e = 0; e < 4; ++e) art.projection.emplace_back(s + e, 1);
    }
    finish_projection_code(F, art);
    art.offset = project_output(art, *art.particular);

    art.bounds.completeness_weight = uint64_t(m);
    art.bounds.delta = delta;
    art.bounds.opt = opt;
    art.bounds.epsilon = Frac(0);
    art.bounds.case1_floor = (Frac(1) + Frac(2) * delta) * Frac(m);
    art.bounds.zcase_floor = art.bounds.case1_floor;
    art.bounds.soundness_floor = art.bounds.case1_floor;
    return art;
}

ReductionArtifact build_mindist2(const MaxNandInstance& psi, const LinearCode& C,
                                 int r, Frac delta, std::optional<Frac> opt) {
    const Field& F = Field::of(2);
    if (C.q != 2) throw FieldMismatch("build_mindist2: inner code must be binary");
    if (C.k != psi.n)
        throw DimensionMismatch("build_mindist2: dim(C) = " + std::to_string(C.k) +
                                " but instance has n = " + std::to_string(psi.n));
    if (r < 1) throw DimensionMismatch("build_mindist2: r must be >= 1");

    const int n = psi.n, m = psi.m(), N = C.n;

    VariableLayout layout;
    layout.add("x0", {1});
    layout.add("x", {n});
    layout.add("y", {N});
    layout.add("Y", {N, N});
    for (int c = 0; c < m; ++c) layout.add("S[" + std::to_string(c) + "]", {2, 2});
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            layout.add("Z[" + std::to_string(i) + "][" + std::to_string(j) + "]", {2, 2});

    const int x0 = layout.offset_of("x0");
    const int xo = layout.offset_of("x");
    const int yo = layout.offset_of("y");
    const int Yo = layout.offset_of("Y");
    auto Soff = [&](int c) { return layout.offset_of("S[" + std::to_string(c) + "]"); };
    auto Zoff = [&](int i, int j) {
        return layout.offset_of("Z[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    };

    SystemBuilder sb(layout.total);

    for (int c = 0; c < m; ++c) {
        const auto& con = psi.cons[c];
        int s = Soff(c);
        std::string id = std::to_string(c);

        Vec& r1 = sb.fresh("eq1' S" + id);
        r1[s + kS00] = r1[s + kS01] = r1[s + kS10] = r1[s + kS11] = 1;
        r1[x0] = 1;  // = x_0, homogenized

        Vec& r2 = sb.fresh("eq2 S" + id);
        r2[s + kS10] = r2[s + kS11] = 1;
        r2[xo + con.i] = F.add(r2[xo + con.i], 1);

        Vec& r3 = sb.fresh("eq3 S" + id);
        r3[s + kS01] = r3[s + kS11] = 1;
        r3[xo + con.j] = F.add(r3[xo + con.j], 1);

        Vec& r4 = sb.fresh("eq4 S" + id);
        r4[s + kS00] = r4[s + kS01] = r4[s + kS10] = 1;
        r4[xo + con.k] = F.add(r4[xo + con.k], 1);
    }

    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int z = Zoff(i, j);
            std::string id = std::to_string(i) + "," + std::to_string(j);

            Vec& r5 = sb.fresh("eq5 Z" + id);
            r5[z + kS00] = r5[z + kS01] = r5[z + kS10] = r5[z + kS11] = 1;
            r5[x0] = 1;

            Vec& r6 = sb.fresh("eq6 Z" + id);
            r6[z + kS10] = r6[z + kS11] = 1;
            r6[yo + i] = F.add(r6[yo + i], 1);

            Vec& r7 = sb.fresh("eq7 Z" + id);
            r7[z + kS01] = r7[z + kS11] = 1;
            r7[yo + j] = F.add(r7[yo + j], 1);

            Vec& r8 = sb.fresh("eq8 Z" + id);
            r8[z + kS11] = 1;
            r8[Yo + i * N + j] = F.add(r8[Yo + i * N + j], 1);
        }

    // y in C
    for (int h = 0; h < C.H.rows; ++h) {
        Vec& row = sb.fresh("y in C, check " + std::to_string(h));
        for (int i = 0; i < N; ++i) row[yo + i] = C.H.at(h, i);
    }
    // Y in C (x) C: every column and every row a codeword
    for (int h = 0; h < C.H.rows; ++h) {
        for (int jj = 0; jj < N; ++jj) {
            Vec& row = sb.fresh("Y cols in C, check " + std::to_string(h) + " col " +
                                std::to_string(jj));
            for (int i = 0; i < N; ++i) row[Yo + i * N + jj] = C.H.at(h, i);
        }
        for (int ii = 0; ii < N; ++ii) {
            Vec& row = sb.fresh("Y rows in C, check " + std::to_string(h) + " row " +
                                std::to_string(ii));
            for (int j = 0; j < N; ++j) row[Yo + ii * N + j] = C.H.at(h, j);
        }
    }
    // y = C(x)
    for (int i = 0; i < N; ++i) {
        Vec& row = sb.fresh("y = C(x), coord " + std::to_string(i));
        row[yo + i] = 1;
        for (int v = 0; v < n; ++v)
            if (C.G.at(v, i)) row[xo + v] = F.add(row[xo + v], 1);
    }
    // diag(Y) = y
    for (int i = 0; i < N; ++i) {
        Vec& row = sb.fresh("diag(Y) = y, coord " + std::to_string(i));
        row[Yo + i * N + i] = 1;
        row[yo + i] = F.add(row[yo + i], 1);
    }
    // Y symmetric
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            Vec& row = sb.fresh("Y symmetric " + std::to_string(i) + "," + std::to_string(j));
            row[Yo + i * N + j] = 1;
            row[Yo + j * N + i] = F.add(row[Yo + j * N + i], 1);
        }

    ReductionArtifact art;
    art.kind = "md2";
    art.instance = psi;
    art.q = 2;
    art.nvars = n;
    art.m = m;
    art.N = N;
    art.r = r;
    art.inner_code = C;

    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int z = Zoff(i, j);
            for (int e = 0; e < 4; ++e) art.projection.emplace_back(z + e, 1);
        }
    for (int c = 0; c < m; ++c) {
        int s = Soff(c);
        for (int e = 0; e < 4; ++e) art.projection.emplace_back(s + e, r);
    }

    art.system = sb.finish(std::move(layout));
    art.nullbasis = nullspace_basis(F, art.system.H);
    finish_projection_code(F, art);

    // epsilon so that d(C)/N >= 1/2 - epsilon, kept positive at 1/(2N) when
    // the inner code clears one half exactly
    auto dC = min_distance_exact(F, C);
    Frac eps = std::max(Frac(1, 2) - Frac((long long)dC.distance, N), Frac(1, 2 * N));

    art.bounds.completeness_weight = uint64_t(r) * m + uint64_t(N) * N;
    art.bounds.delta = delta;
    art.bounds.opt = opt;
    art.bounds.epsilon = eps;
    art.bounds.case1_floor =
        (Frac(1) + Frac(2) * delta) * Frac((long long)r * m) + Frac((long long)N * N);
    art.bounds.zcase_floor = (Frac(3, 2) - Frac(12) * eps) * Frac((long long)N * N);
    art.bounds.soundness_floor = std::min(art.bounds.case1_floor, art.bounds.zcase_floor);
    return art;
}

ReductionArtifact build_mindistq(const MaxNandInstance& psi, const Field& Fq,
                                 const EvaluationSet& R, int r, Frac delta,
                                 std::optional<Frac> opt) {
    const int q = Fq.q();
    if (q == 2)
        throw FieldMismatch("build_mindistq handles q >= 3 only; use build_mindist2 for q = 2");
    if (R.q != q) throw FieldMismatch("build_mindistq: evaluation set is over a different field");
    if (r < 1) throw DimensionMismatch("build_mindistq: r must be >= 1");

    const int n = psi.n, m = psi.m(), N = int(R.points.size());

    EncodingCode enc = homogeneous_linear_code(Fq, n, R);  // RankDeficient if R too poor
    std::vector<LinearCode> P;
    for (int e = 0; e <= q - 1; ++e) P.push_back(polynomial_code(Fq, n, e, R));

    VariableLayout layout;
    for (int e = 0; e <= 2 * (q - 1); ++e) layout.add("Ye[" + std::to_string(e) + "]", {N});
    for (int e = 0; e <= q - 1; ++e)
        for (int f = 0; f <= q - 1; ++f)
            layout.add("Yef[" + std::to_string(e) + "][" + std::to_string(f) + "]", {N, N});
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            layout.add("Z[" + std::to_string(i) + "][" + std::to_string(j) + "]", {q, q});
    for (int c = 0; c < m; ++c) layout.add("S[" + std::to_string(c) + "]", {2, 2});

    auto Ye = [&](int e) { return layout.offset_of("Ye[" + std::to_string(e) + "]"); };
    auto Yef = [&](int e, int f) {
        return layout.offset_of("Yef[" + std::to_string(e) + "][" + std::to_string(f) + "]");
    };
    auto Zoff = [&](int i, int j) {
        return layout.offset_of("Z[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    };
    auto Soff = [&](int c) { return layout.offset_of("S[" + std::to_string(c) + "]"); };
    const int y0 = Yef(0, 0);  // Y_0 alias: coordinate (0,0) of Y^{0,0}

    SystemBuilder sb(layout.total);

    // basic 1: Y^e in P_e
    for (int e = 0; e <= q - 1; ++e) {
        const Mat& H = P[e].H;
        for (int h = 0; h < H.rows; ++h) {
            Vec& row = sb.fresh("Y^" + std::to_string(e) + " in P_" + std::to_string(e) +
                                ", check " + std::to_string(h));
            for (int i = 0; i < N; ++i) row[Ye(e) + i] = H.at(h, i);
        }
    }
    // basic 2: Y^e = Y^{e-(q-1)} for q <= e <= 2(q-1)
    for (int e = q; e <= 2 * (q - 1); ++e)
        for (int i = 0; i < N; ++i) {
            Vec& row = sb.fresh("Y^" + std::to_string(e) + " = Y^" + std::to_string(e - (q - 1)) +
                                ", coord " + std::to_string(i));
            row[Ye(e) + i] = 1;
            row[Ye(e - (q - 1)) + i] = Fq.add(row[Ye(e - (q - 1)) + i], Fq.neg(1));
        }
    // basic 3a: Y^{ef} in P_e (x) P_f
    for (int e = 0; e <= q - 1; ++e)
        for (int f = 0; f <= q - 1; ++f) {
            int base = Yef(e, f);
            std::string id = std::to_string(e) + "," + std::to_string(f);
            const Mat& He = P[e].H;
            for (int h = 0; h < He.rows; ++h)
                for (int jj = 0; jj < N; ++jj) {
                    Vec& row = sb.fresh("Y^{" + id + "} cols in P_" + std::to_string(e));
                    for (int i = 0; i < N; ++i) row[base + i * N + jj] = He.at(h, i);
                }
            const Mat& Hf = P[f].H;
            for (int h = 0; h < Hf.rows; ++h)
                for (int ii = 0; ii < N; ++ii) {
                    Vec& row = sb.fresh("Y^{" + id + "} rows in P_" + std::to_string(f));
                    for (int j = 0; j < N; ++j) row[base + ii * N + j] = Hf.at(h, j);
                }
            // basic 3b: diagonal equals Y^{e+f}
            for (int i = 0; i < N; ++i) {
                Vec& row = sb.fresh("diag Y^{" + id + "} = Y^" + std::to_string(e + f));
                row[base + i * N + i] = 1;
                row[Ye(e + f) + i] = Fq.add(row[Ye(e + f) + i], Fq.neg(1));
            }
        }
    // basic 4: rows of Y^{0,e} identical, columns of Y^{e,0} identical
    for (int e = 0; e <= q - 1; ++e) {
        int b0e = Yef(0, e), be0 = Yef(e, 0);
        for (int i = 1; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                Vec& row = sb.fresh("rows of Y^{0," + std::to_string(e) + "} identical");
                row[b0e + i * N + j] = 1;
                row[b0e + 0 * N + j] = Fq.add(row[b0e + j], Fq.neg(1));
            }
        for (int j = 1; j < N; ++j)
            for (int i = 0; i < N; ++i) {
                Vec& row = sb.fresh("cols of Y^{" + std::to_string(e) + ",0} identical");
                row[be0 + i * N + j] = 1;
                row[be0 + i * N] = Fq.add(row[be0 + i * N], Fq.neg(1));
            }
    }
    // basic 5: Y^{q-1,q-1} symmetric
    {
        int b = Yef(q - 1, q - 1);
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                Vec& row = sb.fresh("Y^{q-1,q-1} symmetric");
                row[b + i * N + j] = 1;
                row[b + j * N + i] = Fq.add(row[b + j * N + i], Fq.neg(1));
            }
    }
    // consistency 1: the four S equations per constraint, with alpha
    // expanded through the fixed decoder applied to the Y^1 block
    auto add_alpha = [&](Vec& row, int var) {
        for (int x = 0; x < N; ++x) {
            Elt d = enc.dec.at(var, x);
            if (d) row[Ye(1) + x] = Fq.add(row[Ye(1) + x], Fq.neg(d));
        }
    };
    for (int c = 0; c < m; ++c) {
        const auto& con = psi.cons[c];
        int s = Soff(c);
        std::string id = std::to_string(c);

        Vec& r1 = sb.fresh("S" + id + ": sum = Y_0");
        r1[s + kS00] = r1[s + kS01] = r1[s + kS10] = r1[s + kS11] = 1;
        r1[y0] = Fq.add(r1[y0], Fq.neg(1));

        Vec& r2 = sb.fresh("S" + id + ": a-moment = alpha_i");
        r2[s + kS10] = r2[s + kS11] = 1;  // a = 1 entries
        add_alpha(r2, con.i);

        Vec& r3 = sb.fresh("S" + id + ": b-moment = alpha_j");
        r3[s + kS01] = r3[s + kS11] = 1;
        add_alpha(r3, con.j);

        Vec& r4 = sb.fresh("S" + id + ": nand-moment = alpha_k");
        r4[s + kS00] = r4[s + kS01] = r4[s + kS10] = 1;  // 1 xor ab
        add_alpha(r4, con.k);
    }
    // consistency 2: q^2 moment equations per Z block
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int z = Zoff(i, j);
            for (int e = 0; e <= q - 1; ++e)
                for (int f = 0; f <= q - 1; ++f) {
                    Vec& row = sb.fresh("Z[" + std::to_string(i) + "][" + std::to_string(j) +
                                        "] moment (" + std::to_string(e) + "," +
                                        std::to_string(f) + ")");
                    for (int x = 0; x < q; ++x)
                        for (int y = 0; y < q; ++y) {
                            Elt coeff = Fq.mul(Fq.pow(Elt(x), e), Fq.pow(Elt(y), f));
                            if (coeff) row[z + x * q + y] = coeff;
                        }
                    int t = Yef(e, f) + i * N + j;
                    row[t] = Fq.add(row[t], Fq.neg(1));
                }
        }

    ReductionArtifact art;
    art.kind = "mdq";
    art.instance = psi;
    art.q = q;
    art.nvars = n;
    art.m = m;
    art.N = N;
    art.r = r;
    art.evalset = R;

    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int z = Zoff(i, j);
            for (int e = 0; e < q * q; ++e) art.projection.emplace_back(z + e, 1);
        }
    for (int c = 0; c < m; ++c) {
        int s = Soff(c);
        for (int e = 0; e < 4; ++e) art.projection.emplace_back(s + e, r);
    }

    art.system = sb.finish(std::move(layout));
    art.nullbasis = nullspace_basis(Fq, art.system.H);
    finish_projection_code(Fq, art);

    art.bounds.completeness_weight = uint64_t(N) * N + uint64_t(r) * m;
    art.bounds.delta = delta;
    art.bounds.opt = opt;
    art.bounds.epsilon = Frac(0);  // exhaustive R in all bound checks
    art.bounds.case1_floor =
        Frac((long long)N * N) + (Frac(1) + delta) * Frac((long long)r * m);
    art.bounds.zcase_floor = (Frac(1) + Frac(1, q)) * Frac((long long)N * N);
    art.bounds.soundness_floor = std::min(art.bounds.case1_floor, art.bounds.zcase_floor);
    return art;
}

int choose_r(const std::string& kind, int N, int m, int q, Frac delta) {
    // round(N^2 / divisor) computed exactly; half rounds away from zero
    Frac divisor = kind == "mdq" ? (Frac(1) + delta) * Frac((long long)q * m)
                                 : (Frac(1) + Frac(2) * delta) * Frac(2 * (long long)m);
    long long num = (long long)N * N * divisor.den;
    long long den = divisor.num;
    long long r = (2 * num + den) / (2 * den);
    return int(std::max<long long>(1, r));
}

Vec intended_codeword(const Field& F, const ReductionArtifact& art, const Assignment& beta) {
    if (int(beta.size()) != art.nvars) throw DimensionMismatch("intended_codeword: |beta|");
    if (satisfied_count(art.instance, beta) != art.m)
        throw NotSatisfying("intended_codeword: assignment leaves constraints unsatisfied");

    const VariableLayout& L = art.system.layout;
    Vec full(L.total, 0);
    auto indicator4 = [&](int off, int a, int b) { full[off + a * 2 + b] = 1; };

    if (art.kind == "ncp2") {
        int xo = L.offset_of("x");
        for (int v = 0; v < art.nvars; ++v) full[xo + v] = beta[v];
        for (int c = 0; c < art.m; ++c) {
            const auto& con = art.instance.cons[c];
            indicator4(L.offset_of("S[" + std::to_string(c) + "]"), beta[con.i], beta[con.j]);
        }
        // membership: same residual as the stored particular solution
        Vec diff(full.size());
        for (size_t i = 0; i < full.size(); ++i) diff[i] = F.sub(full[i], (*art.particular)[i]);
        if (!is_zero(mat_vec(F, art.system.H, diff)))
            throw MembershipFailure("ncp2 intended point violates the system");
        Vec out = project_output(art, full);
        if (uint64_t(weight(out)) != art.bounds.completeness_weight)
            throw MembershipFailure("ncp2 intended point has unexpected weight");
        return out;
    }

    if (art.kind == "md2") {
        const LinearCode& C = *art.inner_code;
        const int N = art.N;
        full[L.offset_of("x0")] = 1;
        int xo = L.offset_of("x");
        for (int v = 0; v < art.nvars; ++v) full[xo + v] = beta[v];
        Vec y(N, 0);
        for (int v = 0; v < art.nvars; ++v)
            if (beta[v]) add_scaled_row(F, 1, C.G.row(v), y.data(), N);
        int yo = L.offset_of("y");
        for (int i = 0; i < N; ++i) full[yo + i] = y[i];
        int Yo = L.offset_of("Y");
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) full[Yo + i * N + j] = F.mul(y[i], y[j]);
        for (int c = 0; c < art.m; ++c) {
            const auto& con = art.instance.cons[c];
            indicator4(L.offset_of("S[" + std::to_string(c) + "]"), beta[con.i], beta[con.j]);
        }
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                indicator4(L.offset_of("Z[" + std::to_string(i) + "][" + std::to_string(j) + "]"),
                           y[i], y[j]);
    } else {  // mdq
        const int q = art.q, N = art.N;
        EncodingCode enc = homogeneous_linear_code(F, art.nvars, *art.evalset);
        Vec alpha(beta.begin(), beta.end());  // F_2 into F_q, 0 -> 0, 1 -> 1
        Vec w = encode(F, enc, alpha);
        for (int e = 0; e <= 2 * (q - 1); ++e) {
            int off = L.offset_of("Ye[" + std::to_string(e) + "]");
            Vec we = componentwise_power(F, w, e);
            for (int i = 0; i < N; ++i) full[off + i] = we[i];
        }
        for (int e = 0; e <= q - 1; ++e)
            for (int f = 0; f <= q - 1; ++f) {
                int off =
                    L.offset_of("Yef[" + std::to_string(e) + "][" + std::to_string(f) + "]");
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j)
                        full[off + i * N + j] = F.mul(F.pow(w[i], e), F.pow(w[j], f));
            }
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                int off =
                    L.offset_of("Z[" + std::to_string(i) + "][" + std::to_string(j) + "]");
                full[off + w[i] * q + w[j]] = 1;
            }
        for (int c = 0; c < art.m; ++c) {
            const auto& con = art.instance.cons[c];
            indicator4(L.offset_of("S[" + std::to_string(c) + "]"), beta[con.i], beta[con.j]);
        }
    }

    if (!is_zero(mat_vec(F, art.system.H, full)))
        throw MembershipFailure(art.kind + " intended codeword violates the system");
    Vec out = project_output(art, full);
    if (!code_contains(F, art.code, out))
        throw MembershipFailure(art.kind + " intended codeword not in the output code");
    if (uint64_t(weight(out)) != art.bounds.completeness_weight)
        throw MembershipFailure(art.kind + " intended codeword has weight " +
                                std::to_string(weight(out)) + ", expected " +
                                std::to_string(art.bounds.completeness_weight));
    return out;
}

LinearCode tensor_boost(const Field& F, const LinearCode& C, int t) {
    LinearCode out = C;
    for (int s = 0; s < t; ++s) {
        if ((long long)out.n * out.n > (1 << 26))
            throw SizeOverflow("tensor_boost: length overflow");
        out = tensor(F, out, out);
    }
    return out;
}

Mat s_block_forward_map(const Field&) {
    Mat M(4, 4);
    // rows: Y_0, alpha_i, alpha_j, alpha_k; columns: S(0,0),S(0,1),S(1,0),S(1,1)
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            int col = a * 2 + b;
            M.at(0, col) = 1;
            M.at(1, col) = Elt(a);
            M.at(2, col) = Elt(b);
            M.at(3, col) = Elt(1 ^ (a & b));
        }
    return M;
}

Mat z_block_forward_map(const Field& F) {
    const int q = F.q();
    Mat M(q * q, q * q);
    for (int e = 0; e < q; ++e)
        for (int f = 0; f < q; ++f)
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < q; ++y)
                    M.at(e * q + f, x * q + y) = F.mul(F.pow(Elt(x), e), F.pow(Elt(y), f));
    return M;
}

}  // namespace gapmd
