// lng: command-line front end. Every command prints one JSON object.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lng/json_io.hpp"

using namespace lng;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// top-level inputs may carry the envelope version
Json input(const std::string& text) {
    Json j = parse_json(text);
    if (j.is_object() && j.contains("spec")) {
        if (j["spec"] != "1") throw Error("BadRequest", "unsupported spec version");
        j.erase("spec");
    }
    return j;
}

cplx parse_point(const std::string& s) {
    try {
        std::size_t comma = s.find(',');
        if (comma == std::string::npos) return {std::stod(s), 0.0};
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw UsageError("expected re,im but got '" + s + "'");
    }
}

cplx numeric_xi(const std::string& text) {
    Json j = input(text);
    if (j.is_number() || j.is_array()) return complex_from_json(j);
    return scalar_from_json(j).value();
}

void emit(Json j) {
    j["spec"] = "1";
    std::cout << dump(j) << "\n";
}

Json value_json(const NumComplex& z) { return Json{{"value", to_json(z.value)}, {"err", z.err}}; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Locally Nash groups: Weierstrass evaluation, residues, classification and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    std::optional<double> tol;
    bool json_out = false;
    app.add_option("--seed", seed, "seed for sampled checks");
    app.add_option("--tol", tol, "tolerance");
    app.add_flag("--json", json_out, "machine-readable output for verify");

    std::string fn, lattice, xi, u, v, sup, sub, l2, l1, kind, op, desc, g1, g2, model, omega, suite, scale;
    int samples = 0;

    auto* eval = app.add_subcommand("eval", "evaluate a Weierstrass function");
    eval->add_option("--fn", fn)->required()->check(CLI::IsMember({"wp", "wpprime", "zeta", "sigma", "sigmatilde"}));
    eval->add_option("--lattice", lattice)->required();
    eval->add_option("--xi", xi);
    eval->add_option("--u", u)->required();

    auto* residue = app.add_subcommand("residue", "residue constants of a sublattice");
    residue->add_option("--sup", sup)->required();
    residue->add_option("--sub", sub)->required();

    auto* genres = app.add_subcommand("genresidue", "generalized index and residue");
    genres->add_option("--l2", l2)->required();
    genres->add_option("--l1", l1)->required();

    auto* family = app.add_subcommand("family", "Painleve family maps");
    family->add_option("--kind", kind)->required()->check(CLI::IsMember({"g1", "g2", "g3", "g4", "g5", "g6", "p6"}));
    family->add_option("--lattice", lattice);
    family->add_option("--xi", xi);
    family->add_option("--op", op)->required()->check(CLI::IsMember({"rank", "periods", "eval"}));
    family->add_option("--u", u);
    family->add_option("--v", v);

    auto* classify = app.add_subcommand("classify", "classification type and automorphism group");
    classify->add_option("--desc", desc)->required();

    auto* iso = app.add_subcommand("isomorphic", "decide isomorphism with a witness");
    iso->add_option("--g1", g1)->required();
    iso->add_option("--g2", g2)->required();

    auto* autc = app.add_subcommand("aut", "automorphism group descriptor");
    autc->add_option("--desc", desc)->required();

    auto* labelc = app.add_subcommand("label", "algebraic group label");
    labelc->add_option("--desc", desc)->required();

    auto* embed = app.add_subcommand("embed", "projective embedding of the Z or S extension");
    embed->add_option("--model", model)->required()->check(CLI::IsMember({"p5", "p8"}));
    embed->add_option("--omega", omega)->required();
    embed->add_option("--xi", xi);
    embed->add_option("--u", u)->required();
    embed->add_option("--v", v)->required();

    auto* verifyc = app.add_subcommand("verify", "run a verification suite (or 'all')");
    verifyc->add_option("--suite", suite)->required();
    verifyc->add_option("--lattice", lattice);
    verifyc->add_option("--sub", sub);
    verifyc->add_option("--xi", xi);
    verifyc->add_option("--scale", scale);
    verifyc->add_option("--samples", samples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(Json{{"error", "Usage"}, {"detail", e.what()}});
        return 2;
    }

    try {
        if (*eval) {
            EvalContext ctx(lattice_from_json(input(lattice)), tol.value_or(1e-12));
            const cplx z = parse_point(u);
            NumComplex r;
            if (fn == "wp") r = ctx.wp(z);
            else if (fn == "wpprime") r = ctx.wp_prime(z);
            else if (fn == "zeta") r = ctx.zeta(z);
            else if (fn == "sigma") r = ctx.sigma(z);
            else {
                if (xi.empty()) throw UsageError("sigmatilde needs --xi");
                r = ctx.sigma_tilde(numeric_xi(xi), z);
            }
            emit(value_json(r));
        } else if (*residue) {
            CosetConstants k = residue_c(lattice_from_json(input(sup)), lattice_from_json(input(sub)));
            emit(Json{{"c", to_json(k.c.value)},
                      {"C", to_json(k.C.value)},
                      {"Cprime", to_json(k.Cprime.value)},
                      {"index", k.rep_system.index.get_str()}});
        } else if (*genres) {
            GenResidue g = gen_residue(lattice_from_json(input(l2)), lattice_from_json(input(l1)));
            emit(Json{{"index", to_string(g.index)}, {"qc", to_json(g.qc.value)}});
        } else if (*family) {
            FamilyDescriptor d;
            d.family = parse_family(kind);
            if (!lattice.empty()) d.lattice = lattice_from_json(input(lattice));
            if (!xi.empty()) d.xi = numeric_xi(xi);
            if (op == "rank") {
                emit(Json{{"rank", family_rank(d)}});
            } else if (op == "periods") {
                emit(to_json(period_lattice(d)));
            } else {
                if (u.empty() || v.empty()) throw UsageError("eval needs --u and --v");
                PairValue r = family_eval(d, parse_point(u), parse_point(v));
                emit(Json{{"value", Json::array({to_json(r[0].value), to_json(r[1].value)})},
                          {"err", Json::array({r[0].err, r[1].err})}});
            }
        } else if (*classify) {
            GroupDescriptor g = descriptor_from_json(input(desc));
            Json j{{"type", classify_type(g)}};
            try {
                j["aut"] = aut(g).group;
            } catch (const Error& e) {
                if (e.code() != "UnsupportedKind") throw;
            }
            emit(j);
        } else if (*iso) {
            GroupDescriptor a = descriptor_from_json(input(g1)), b = descriptor_from_json(input(g2));
            auto w = isomorphic(a, b);
            if (!w) {
                emit(Json{{"isomorphic", false}});
            } else {
                Json j{{"isomorphic", true}};
                if (w->abcd) {
                    const Witness& m = *w->abcd;
                    j["abcd"] = Json::array({m.a.get_si(), m.b.get_si(), m.c.get_si(), m.d.get_si()});
                }
                Json wj = to_json(*w);
                wj.erase("abcd");
                wj.erase("trace");
                j["witness"] = wj;
                j["trace"] = w->trace;
                emit(j);
            }
        } else if (*autc) {
            emit(to_json(aut(descriptor_from_json(input(desc)))));
        } else if (*labelc) {
            emit(to_json(label(descriptor_from_json(input(desc)))));
        } else if (*embed) {
            EvalContext ctx(Lattice::unit(scalar_from_json(input(omega))), tol.value_or(1e-12));
            const cplx pu = parse_point(u), pv = parse_point(v);
            ProjPoint p;
            if (model == "p5") {
                p = embed_p5(ctx, pu, pv);
            } else {
                if (xi.empty()) throw UsageError("p8 needs --xi");
                p = embed_p8(ctx, numeric_xi(xi), pu, pv);
            }
            emit(to_json(p));
        } else if (*verifyc) {
            SuiteParams sp;
            sp.seed = seed;
            sp.tol = tol;
            sp.samples = samples;
            if (!lattice.empty()) sp.lattice = lattice_from_json(input(lattice));
            if (!sub.empty()) sp.sub = lattice_from_json(input(sub));
            if (!xi.empty()) sp.xi = numeric_xi(xi);
            if (!scale.empty()) sp.scale = parse_point(scale);
            std::vector<Report> reports =
                suite == "all" ? verify_all(suite_names(), sp) : std::vector<Report>{verify(suite, sp)};
            bool ok = true;
            for (const auto& r : reports) ok = ok && r.pass();
            if (json_out) {
                if (reports.size() == 1) {
                    emit(to_json(reports[0]));
                } else {
                    Json j{{"pass", ok}, {"reports", Json::array()}};
                    for (const auto& r : reports) j["reports"].push_back(to_json(r));
                    emit(j);
                }
            } else {
                for (const auto& r : reports) {
                    std::printf("%s %s max_residual=%.3g checks=%zu seed=%llu\n", r.pass() ? "PASS" : "FAIL",
                                r.suite.c_str(), r.max_residual(), r.checks.size(), (unsigned long long)r.seed);
                    for (const auto& c : r.checks)
                        if (!c.pass) std::printf("  failed: %s residual=%.3g bound=%.3g\n", c.name.c_str(), c.residual, c.bound);
                    for (const auto& n : r.notes) std::printf("  note: %s\n", n.c_str());
                }
            }
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        emit(Json{{"error", "Usage"}, {"detail", e.what()}});
        return 2;
    } catch (const Error& e) {
        emit(Json{{"error", e.code()}, {"detail", e.detail()}});
        return e.code() == "BadRequest" || e.code() == "UnknownSuite" || e.code() == "UnknownKind" ? 2 : 1;
    } catch (const std::exception& e) {
        emit(Json{{"error", "Internal"}, {"detail", e.what()}});
        return 1;
    }
    return 0;
}
