// gapmd: Max NAND instances, gap reductions to NCP/MinDist codes, exact
// distance search, and the lemma/experiment verifiers, behind one CLI.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "gapmd/io.hpp"
#include "gapmd/lemmas.hpp"

using namespace gapmd;
using nlohmann::json;

namespace {

int64_t now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

Frac parse_frac(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        // allow plain decimals like 0.5 for convenience
        auto dot = s.find('.');
        if (dot == std::string::npos) return Frac(std::stoll(s));
        std::string frac = s.substr(dot + 1);
        long long den = 1;
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        return Frac(std::stoll(s.substr(0, dot)) * den + std::stoll(frac), den);
    }
    return Frac(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

void emit_report(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ParseError("cannot open report path: " + path);
        f << j.dump(2) << '\n';
    }
}

struct Common {
    int threads = 0;
    uint64_t budget = uint64_t(1) << 30;
    std::string report;
};

int run(int argc, char** argv) {
    CLI::App app{"gap reductions from Max NAND to minimum-distance problems"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--threads", common.threads, "worker threads for enumeration (0 = all)");
    app.add_option("--budget", common.budget, "enumeration budget (max q^k states)")
        ->envname("GAPMD_BUDGET");

    // ---- gen
    auto* gen = app.add_subcommand("gen", "generate Max NAND instance files");
    gen->require_subcommand(1);
    struct {
        int n = 4, m = 8;
        uint64_t seed = 1;
        double flip = 0.25;
        std::string out;
    } g;
    auto* gp = gen->add_subcommand("planted", "satisfiable instance with a planted assignment");
    gp->add_option("--n", g.n);
    gp->add_option("--m", g.m);
    gp->add_option("--seed", g.seed);
    gp->add_option("-o,--out", g.out)->required();
    auto* gn = gen->add_subcommand("noisy", "planted instance with rewired constraints");
    gn->add_option("--n", g.n);
    gn->add_option("--m", g.m);
    gn->add_option("--flip", g.flip);
    gn->add_option("--seed", g.seed);
    gn->add_option("-o,--out", g.out)->required();
    auto* gc = gen->add_subcommand("contradiction", "the one-variable unsatisfiable instance");
    gc->add_option("-o,--out", g.out)->required();

    // ---- evalset
    auto* es = app.add_subcommand("evalset", "generate evaluation sets");
    es->require_subcommand(1);
    struct {
        int q = 3, n = 2, d = 2;
        std::string eps = "1/2";
        std::string base, out;
    } e;
    auto* ee = es->add_subcommand("exhaustive", "all q^n points");
    ee->add_option("--q", e.q);
    ee->add_option("--n", e.n);
    ee->add_option("-o,--out", e.out)->required();
    auto* eb = es->add_subcommand("smallbias", "power-construction small-bias multiset");
    eb->add_option("--q", e.q);
    eb->add_option("--n", e.n);
    eb->add_option("--eps", e.eps, "target bias, e.g. 1/2");
    eb->add_option("-o,--out", e.out)->required();
    auto* ev = es->add_subcommand("viola", "d-fold sumset of a base set");
    ev->add_option("--base", e.base)->required();
    ev->add_option("--d", e.d);
    ev->add_option("-o,--out", e.out)->required();

    // ---- reduce
    auto* red = app.add_subcommand("reduce", "build a reduction artifact directory");
    struct {
        std::string target, in, out, rstr = "auto", evalset_path, code_path;
        int q = 3;
    } rd;
    red->add_option("--target", rd.target, "ncp2 | md2 | mdq")->required();
    red->add_option("-i,--in", rd.in)->required();
    red->add_option("-o,--out", rd.out)->required();
    red->add_option("--q", rd.q, "field order for mdq");
    red->add_option("--r", rd.rstr, "S repetition: auto or a positive integer");
    red->add_option("--evalset", rd.evalset_path, "explicit evaluation set (mdq)");
    red->add_option("--code", rd.code_path, "explicit inner code (md2)");

    // ---- distance
    auto* dist = app.add_subcommand("distance", "exact minimum weight of a code or affine file");
    struct {
        std::string in;
        bool exact = true;
    } dc;
    dist->add_option("-i,--in", dc.in)->required();
    dist->add_flag("--exact", dc.exact, "exhaustive search (the only method)");
    dist->add_option("--report", common.report, "write the JSON report here");

    // ---- verify
    auto* ver = app.add_subcommand("verify", "run a lemma or PRG check");
    ver->require_subcommand(1);
    struct {
        int q = 3, d = 0, e = 1;
        uint64_t samples = 0, seed = 1;
        std::string in, second;
    } v;
    auto add_report = [&](CLI::App* sc) {
        sc->add_option("--report", common.report, "write the JSON report here");
    };
    auto* vc11 = ver->add_subcommand("claim11", "power sums vanish");
    vc11->add_option("--q", v.q);
    add_report(vc11);
    auto* vl9 = ver->add_subcommand("lemma9", "moment support floor, low range");
    vl9->add_option("--q", v.q);
    vl9->add_option("--d", v.d);
    vl9->add_option("--samples", v.samples);
    vl9->add_option("--seed", v.seed);
    add_report(vl9);
    auto* vl10 = ver->add_subcommand("lemma10", "moment support floor, high range");
    vl10->add_option("--q", v.q);
    vl10->add_option("--d", v.d);
    vl10->add_option("--samples", v.samples);
    vl10->add_option("--seed", v.seed);
    add_report(vl10);
    auto* vl3 = ver->add_subcommand("lemma3", "zero-diagonal symmetric tensor floor");
    vl3->add_option("-i,--in", v.in)->required();
    add_report(vl3);
    auto* vf4 = ver->add_subcommand("fact4", "union support of independent pairs");
    vf4->add_option("-i,--in", v.in)->required();
    add_report(vf4);
    auto* vf2 = ver->add_subcommand("fact2", "tensor distance multiplicativity");
    vf2->add_option("-i,--in", v.in)->required();
    vf2->add_option("--second", v.second, "second code (defaults to the first)");
    add_report(vf2);
    auto* vc12 = ver->add_subcommand("claim12", "symmetric subcode dimension");
    vc12->add_option("-i,--in", v.in)->required();
    add_report(vc12);
    auto* vfo = ver->add_subcommand("fooling", "measured epsilon of an evaluation set");
    vfo->add_option("-i,--in", v.in)->required();
    vfo->add_option("--d", v.d);
    vfo->add_option("--samples", v.samples);
    vfo->add_option("--seed", v.seed);
    add_report(vfo);
    auto* vnz = ver->add_subcommand("nonzero", "minimum nonzero fraction over low-degree polynomials");
    vnz->add_option("-i,--in", v.in)->required();
    vnz->add_option("--e", v.e);
    add_report(vnz);

    // ---- experiment
    auto* exp = app.add_subcommand("experiment", "end-to-end reduction experiments");
    exp->require_subcommand(1);
    struct {
        std::string in, target = "mdq";
        int q = 3, r = 0;
    } x;
    auto add_exp_opts = [&](CLI::App* sc, bool target) {
        sc->add_option("-i,--in", x.in)->required();
        if (target) {
            sc->add_option("--target", x.target, "md2 | mdq | ncp2");
            sc->add_option("--q", x.q);
            sc->add_option("--r", x.r, "0 = auto");
        }
        sc->add_option("--report", common.report, "write the JSON report here");
    };
    auto* xn = exp->add_subcommand("ncp2", "affine minimum weight vs the assignment oracle");
    add_exp_opts(xn, false);
    auto* xc = exp->add_subcommand("completeness", "intended codeword weight");
    add_exp_opts(xc, true);
    auto* xs = exp->add_subcommand("soundness", "distance floor, exact or certified");
    add_exp_opts(xs, true);
    auto* xg = exp->add_subcommand("goodcode", "dimension and distance floors, rate");
    add_exp_opts(xg, true);

    CLI11_PARSE(app, argc, argv);

    // ---- dispatch
    if (gp->parsed() || gn->parsed() || gc->parsed()) {
        MaxNandInstance psi;
        if (gp->parsed()) psi = gen_planted(g.n, g.m, g.seed).first;
        else if (gn->parsed()) psi = gen_noisy(g.n, g.m, g.flip, g.seed);
        else psi = contradiction_instance();
        write_instance(g.out, psi);
        return 0;
    }

    if (ee->parsed() || eb->parsed() || ev->parsed()) {
        EvaluationSet R;
        if (ee->parsed()) R = exhaustive_set(Field::of(e.q), e.n);
        else if (eb->parsed()) R = small_bias_set(Field::of(e.q), e.n, parse_frac(e.eps));
        else {
            EvaluationSet base = read_evalset(e.base);
            R = viola_sum(Field::of(base.q), base, e.d);
        }
        write_evalset(e.out, R);
        return 0;
    }

    if (red->parsed()) {
        MaxNandInstance psi = read_instance(rd.in);
        Frac delta(1);
        std::optional<Frac> opt;
        std::optional<Assignment> witness;
        if (psi.n <= 24) {
            auto o = opt_exact(psi, common.threads);
            opt = o.opt;
            delta = Frac(1) - o.opt;
            if (o.opt == Frac(1)) witness = o.witness;
        }
        ReductionArtifact art;
        if (rd.target == "ncp2") {
            art = build_ncp2(psi, delta, opt);
        } else if (rd.target == "md2") {
            LinearCode C = rd.code_path.empty() ? simplex_code(psi.n) : read_code(rd.code_path);
            int r = rd.rstr == "auto" ? choose_r("md2", C.n, psi.m(), 2, delta)
                                      : std::stoi(rd.rstr);
            art = build_mindist2(psi, C, r, delta, opt);
        } else if (rd.target == "mdq") {
            if (rd.q == 2)
                throw CLI::ValidationError(
                    "--target mdq handles q >= 3; use --target md2 for the binary build");
            const Field& F = Field::of(rd.q);
            EvaluationSet R = rd.evalset_path.empty() ? exhaustive_set(F, psi.n)
                                                      : read_evalset(rd.evalset_path);
            int r = rd.rstr == "auto"
                        ? choose_r("mdq", int(R.points.size()), psi.m(), rd.q, delta)
                        : std::stoi(rd.rstr);
            art = build_mindistq(psi, F, R, r, delta, opt);
        } else {
            throw CLI::ValidationError("unknown --target " + rd.target);
        }
        std::optional<Vec> intended;
        if (witness) intended = intended_codeword(Field::of(art.q), art, *witness);
        write_artifact(rd.out, art, intended);
        return 0;
    }

    if (dist->parsed()) {
        int64_t t0 = now_ms();
        std::ifstream probe(dc.in);
        std::string magic;
        probe >> magic;
        probe.close();
        json j;
        if (magic == "gfcode") {
            LinearCode C = read_code(dc.in);
            auto d = min_distance_exact(Field::of(C.q), C, common.budget, common.threads);
            j = {{"input", dc.in}, {"q", C.q}, {"n", C.n}, {"k", C.k},
                 {"distance", d.infinite ? json("inf") : json(d.distance)},
                 {"witness", d.witness}, {"method", d.method}, {"enumerated", d.enumerated}};
        } else if (magic == "gfaffine") {
            AffineSubspace A = read_affine(dc.in);
            auto d = ncp_min_weight(Field::of(A.code.q), A, common.budget, common.threads);
            j = {{"input", dc.in}, {"q", A.code.q}, {"n", A.code.n}, {"k", A.code.k},
                 {"min_weight", d.distance}, {"witness", d.witness},
                 {"method", d.method}, {"enumerated", d.enumerated}};
        } else {
            throw ParseError("distance: expected a gfcode or gfaffine file");
        }
        j["runtime_ms"] = now_ms() - t0;
        emit_report(j, common.report);
        return 0;
    }

    if (ver->parsed()) {
        LemmaReport rep;
        bool measurement_only = false;
        if (vc11->parsed()) rep = check_claim11(Field::of(v.q));
        else if (vl9->parsed())
            rep = check_lemma9(Field::of(v.q), v.d, common.budget, common.threads, v.samples,
                               v.seed);
        else if (vl10->parsed())
            rep = check_lemma10(Field::of(v.q), v.d, common.budget, common.threads, v.samples,
                                v.seed);
        else if (vl3->parsed()) {
            LinearCode C = read_code(v.in);
            rep = check_lemma3(Field::of(C.q), C, common.budget, common.threads);
        } else if (vf4->parsed()) {
            LinearCode C = read_code(v.in);
            rep = check_fact4(Field::of(C.q), C, common.budget, common.threads);
        } else if (vf2->parsed()) {
            LinearCode C1 = read_code(v.in);
            LinearCode C2 = v.second.empty() ? C1 : read_code(v.second);
            rep = check_fact2(Field::of(C1.q), C1, C2, common.budget, common.threads);
        } else if (vc12->parsed()) {
            LinearCode C = read_code(v.in);
            rep = check_claim12(Field::of(C.q), C);
        } else if (vfo->parsed()) {
            int64_t t0 = now_ms();
            EvaluationSet R = read_evalset(v.in);
            const Field& F = Field::of(R.q);
            FoolingReport fr = v.samples
                                   ? verify_fooling_sampled(F, R, v.d, v.samples, v.seed,
                                                            common.threads)
                                   : verify_fooling(F, R, v.d, common.threads);
            rep.lemma = "fooling";
            rep.params = {{"q", R.q}, {"n", R.n}, {"d", fr.d}, {"size", R.points.size()}};
            rep.claimed = "measurement";
            rep.measured = fr.epsilon.str();
            rep.witness = fr.worst_poly;
            rep.mode = fr.mode;
            rep.extra = {{"polynomials_tested", fr.polynomials_tested},
                         {"epsilon_double", fr.epsilon.as_double()}};
            rep.pass = true;
            rep.runtime_ms = now_ms() - t0;
            measurement_only = true;
        } else if (vnz->parsed()) {
            int64_t t0 = now_ms();
            EvaluationSet R = read_evalset(v.in);
            const Field& F = Field::of(R.q);
            auto nr = verify_nonzero_fraction(F, R, v.e, common.threads);
            rep.lemma = "nonzero_fraction";
            rep.params = {{"q", R.q}, {"n", R.n}, {"e", nr.e}, {"size", R.points.size()}};
            rep.claimed = "measurement";
            rep.measured = nr.min_fraction.str();
            rep.witness = nr.witness_coeffs;
            rep.extra = {{"polynomials_tested", nr.polynomials_tested}};
            rep.pass = true;
            rep.runtime_ms = now_ms() - t0;
            measurement_only = true;
        }
        emit_report(to_json(rep), common.report);
        if (!rep.pass && !measurement_only) return 3;
        return 0;
    }

    if (exp->parsed()) {
        MaxNandInstance psi = read_instance(x.in);
        ExperimentReport rep;
        if (xn->parsed()) rep = experiment_ncp2(psi, common.budget, common.threads);
        else if (xc->parsed())
            rep = experiment_completeness(psi, x.target, x.q, x.r, common.budget,
                                          common.threads);
        else if (xs->parsed())
            rep = experiment_soundness(psi, x.target, x.q, x.r, common.budget, common.threads);
        else
            rep = experiment_goodcode(psi, x.target, x.q, x.r, common.budget, common.threads);
        emit_report(to_json(rep), common.report);
        return rep.pass ? 0 : 3;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& ex) {
        std::cerr << ex.what() << '\n';
        return 1;
    } catch (const BudgetExceeded& ex) {
        std::cerr << "budget exceeded: " << ex.what() << '\n';
        return 2;
    } catch (const TooLarge& ex) {
        std::cerr << "too large: " << ex.what() << '\n';
        return 2;
    } catch (const SizeOverflow& ex) {
        std::cerr << "size overflow: " << ex.what() << '\n';
        return 2;
    } catch (const NotInjective& ex) {
        std::cerr << "invariant failure: " << ex.what() << '\n';
        return 3;
    } catch (const MembershipFailure& ex) {
        std::cerr << "invariant failure: " << ex.what() << '\n';
        return 3;
    } catch (const NotSatisfying& ex) {
        std::cerr << "precondition failure: " << ex.what() << '\n';
        return 1;
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 3;
    }
}
