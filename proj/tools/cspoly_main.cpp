// cspoly: construct and verify the eigenpolynomial families from the
// command line. Subcommands: poly, fpoly, gpoly, eigenvalue, repr, presets,
// verify {eigen|action|source-identity|membership|oracle}.
// Exit codes: 0 success, 2 usage error, 3 math error, 4 verification failure.
#include <CLI11.hpp>
#include <cspoly/cspoly.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace cspoly;

namespace {

struct Options {
    std::string preset;
    std::vector<std::string> alpha;  // a2,a1,a0
    std::vector<std::string> beta;   // b1,b0
    std::string omega = "1", a = "2/3", b = "3/5", c = "1/2";
    std::string kappa = "2";
    bool kappa_symbolic = false;
    long N = 2, Ntilde = 0;
    long M = -1, Mtilde = -1;  // default to (N, Ntilde)
    std::vector<long> n;
    std::vector<long> partition;
    long row = -1;
    std::string format = "json";
    std::uint64_t seed = 0xC5D0;
    long max_weight = 3;
    std::string masses = "1,-1";
    long points = 20;
    std::string oracle = "jack";
    std::string cache_dir;
    bool no_cache = false;
};

void add_model_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--case", o.preset, "Table preset I..VII");
    cmd->add_option("--alpha", o.alpha, "custom alpha coefficients a2,a1,a0")->delimiter(',');
    cmd->add_option("--beta", o.beta, "custom beta coefficients b1,b0")->delimiter(',');
    cmd->add_option("--omega", o.omega, "preset parameter omega");
    cmd->add_option("--a", o.a, "preset parameter a");
    cmd->add_option("--b", o.b, "preset parameter b");
    cmd->add_option("--c", o.c, "preset parameter c");
    cmd->add_option("--kappa", o.kappa, "coupling, rational p/q");
    cmd->add_flag("--kappa-symbolic", o.kappa_symbolic, "treat kappa as a formal symbol");
    cmd->add_option("--N", o.N, "plain variable count");
    cmd->add_option("--Ntilde", o.Ntilde, "tilde variable count");
}

ModelSpec make_spec(const Options& o) {
    Scalar kap = o.kappa_symbolic ? Scalar::kappa() : Scalar(Rational::parse(o.kappa));
    if (!o.preset.empty() && !o.alpha.empty())
        throw CLI::ValidationError("--case and --alpha are mutually exclusive");
    if (!o.preset.empty()) {
        CasePreset p{o.preset};
        p.omega = Rational::parse(o.omega);
        p.a = Rational::parse(o.a);
        p.b = Rational::parse(o.b);
        p.c = Rational::parse(o.c);
        return preset_spec(o.preset, kap, o.N, o.Ntilde, p);
    }
    if (o.alpha.size() != 3 || o.beta.size() != 2)
        throw CLI::ValidationError("custom model needs --alpha a2,a1,a0 and --beta b1,b0");
    auto sc = [&](const std::string& s) { return Scalar(Rational::parse(s)); };
    AlphaBeta ab{sc(o.alpha[0]), sc(o.alpha[1]), sc(o.alpha[2]), sc(o.beta[0]), sc(o.beta[1])};
    return ModelSpec(ab, kap, o.N, o.Ntilde);
}

long eff_M(const Options& o) { return o.M >= 0 ? o.M : o.N; }
long eff_Mt(const Options& o) { return o.Mtilde >= 0 ? o.Mtilde : o.Ntilde; }

IntVector job_index(const Options& o) {
    if (!o.n.empty() && !o.partition.empty())
        throw CLI::ValidationError("--n and --partition are mutually exclusive");
    if (!o.n.empty()) return IntVector(o.n);
    if (!o.partition.empty())
        return representation_index(Partition(o.partition), eff_M(o), eff_Mt(o));
    throw CLI::ValidationError("an index is required: --n or --partition");
}

// ------------------------------------------------------------------ output

std::string scalar_text(const Scalar& s) { return s.str("k"); }

std::string poly_text(const json& terms, const std::string& sym) {
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        out += "(" + t.at("coeff_text").get<std::string>() + ")*" + sym + "[";
        bool first = true;
        for (const auto& v : t.at("idx")) {
            if (!first) out += ",";
            out += std::to_string(v.get<long>());
            first = false;
        }
        out += "]";
    }
    return out.empty() ? "0" : out;
}

json with_text(const json& terms, const Scalar&) { return terms; }

json terms_with_text(const json& terms, bool symbolic) {
    json out = json::array();
    for (const auto& t : terms) {
        json tt = t;
        tt["coeff_text"] = scalar_text(json_to_scalar(t.at("coeff"), symbolic));
        out.push_back(tt);
    }
    return out;
}

std::string latex_scalar(const Scalar& s) { return s.str("\\kappa"); }

std::string poly_latex(const json& terms, bool symbolic, const std::string& sym) {
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        out += "\\left(" + latex_scalar(json_to_scalar(t.at("coeff"), symbolic)) + "\\right)" +
               sym + "_{(";
        bool first = true;
        for (const auto& v : t.at("idx")) {
            if (!first) out += ",";
            out += std::to_string(v.get<long>());
            first = false;
        }
        out += ")}";
    }
    return out.empty() ? "0" : out;
}

int emit_poly(const Options& o, const json& payload, const std::string& sym) {
    bool symbolic = o.kappa_symbolic;
    if (o.format == "json") {
        std::cout << payload.dump() << "\n";
    } else if (o.format == "text") {
        std::cout << poly_text(terms_with_text(payload.at("terms"), symbolic), sym) << "\n";
    } else if (o.format == "latex") {
        std::cout << poly_latex(payload.at("terms"), symbolic, sym == "m" ? "m" : sym) << "\n";
    } else {
        throw CLI::ValidationError("unknown --format " + o.format);
    }
    return 0;
}

// ------------------------------------------------------------------- cache

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << v;
    return os.str();
}

fs::path cache_directory(const Options& o) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    if (const char* env = std::getenv("CSPOLY_CACHE")) return env;
    if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "cspoly";
    return ".cspoly-cache";
}

// content-addressed store: key is the hash of the canonical job description,
// the payload carries its own checksum; a mismatch is treated as absent
std::optional<json> cache_load(const fs::path& dir, const std::string& key) {
    fs::path file = dir / (key + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
        std::string body = j.at("result").dump();
        if (j.at("checksum").get<std::string>() != hex64(fnv1a(body))) return std::nullopt;
        return j.at("result");
    } catch (...) {
        return std::nullopt;  // corrupt: recompute and overwrite
    }
}

void cache_store(const fs::path& dir, const std::string& key, const json& result) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;
    json j{{"key", key}, {"checksum", hex64(fnv1a(result.dump()))}, {"result", result}};
    fs::path file = dir / (key + ".json");
    fs::path tmp = dir / (key + ".tmp");
    {
        std::ofstream out(tmp);
        out << j.dump() << "\n";
    }
    fs::rename(tmp, file, ec);
}

json job_config_json(const Options& o, const std::string& command, const IntVector& n) {
    json model;
    if (!o.preset.empty())
        model = json{{"case", o.preset}, {"omega", o.omega}, {"a", o.a}, {"b", o.b}, {"c", o.c}};
    else
        model = json{{"alpha", o.alpha}, {"beta", o.beta}};
    return json{{"command", command},
                {"model", model},
                {"kappa", o.kappa_symbolic ? "symbolic" : o.kappa},
                {"N", o.N},
                {"Ntilde", o.Ntilde},
                {"M", eff_M(o)},
                {"Mtilde", eff_Mt(o)},
                {"n", index_to_json(n.parts)},
                {"seed", o.seed}};
}

// ------------------------------------------------------------ verification

int verify_eigen(const Options& o) {
    ModelSpec spec = make_spec(o);
    bool ok = true;
    if (spec.Ntilde == 0) {
        ReducedOperator op = build_reduced_operator(spec);
        for (long d = 0; d <= o.max_weight; ++d)
            for (const auto& lam : partitions_of(d, spec.N)) {
                EigenResult r = solve_eigenfunction(lam.padded(static_cast<std::size_t>(spec.N)),
                                                    spec);
                SymmetricPoly P = to_symmetric(r.monomial_form);
                bool pass = apply(op, P) == P.scaled(r.excess);
                ok = ok && pass;
                std::cout << (pass ? "ok    " : "FAIL  ") << "eigen " << lam.str() << "\n";
            }
    } else {
        ReducedOperator op = build_deformed_reduced_operator(spec);
        for (long d = 0; d <= o.max_weight; ++d)
            for (const auto& lam : partitions_of(d, d)) {
                if (!in_fat_hook(lam, spec.N, spec.Ntilde)) continue;
                IntVector n = representation_index(lam, eff_M(o), eff_Mt(o));
                EigenResult r = solve_eigenfunction(n, spec, eff_M(o), eff_Mt(o));
                bool pass = membership_check(r.monomial_form, spec) &&
                            apply(op, r.monomial_form) == r.monomial_form.scaled(r.excess) &&
                            r.excess == eigenvalue_partition_excess(lam, spec);
                ok = ok && pass;
                std::cout << (pass ? "ok    " : "FAIL  ") << "eigen " << lam.str() << "\n";
            }
    }
    return ok ? 0 : 4;
}

int verify_action(const Options& o) {
    ModelSpec spec = make_spec(o);
    long M = eff_M(o), Mt = eff_Mt(o);
    ReducedOperator op = spec.Ntilde == 0 ? build_reduced_operator(spec)
                                          : build_deformed_reduced_operator(spec);
    bool ok = true;
    for (const auto& n : tail_valid_vectors(M + Mt, -1, o.max_weight, false, 0)) {
        if (weight(n) > o.max_weight || !tails_nonnegative(n)) continue;
        BiSymmetricPoly f = f_deformed(n, spec, M, Mt);
        BiSymmetricPoly rhs = f.scaled(eigenvalue_excess_deformed(n, spec, M, Mt));
        for (const auto& [t, c] : action_targets(n, spec, M, Mt))
            rhs.add(f_deformed(t, spec, M, Mt).scaled(c));
        bool pass = apply(op, f) == rhs;
        ok = ok && pass;
        std::cout << (pass ? "ok    " : "FAIL  ") << "action " << n.str() << "\n";
    }
    return ok ? 0 : 4;
}

int verify_source_identity(const Options& o) {
    ModelSpec spec = make_spec(o);
    if (o.kappa_symbolic)
        throw CLI::ValidationError("source-identity requires a rational --kappa");
    std::vector<Rational> masses;
    std::stringstream ss(o.masses);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // accept 1/kappa shorthands so the corollary patterns are expressible
        if (tok == "1/kappa") masses.push_back(Rational::parse(o.kappa).inverse());
        else if (tok == "-1/kappa")
            masses.push_back(-Rational::parse(o.kappa).inverse());
        else
            masses.push_back(Rational::parse(tok));
    }
    MassConfig mc(masses);
    auto pts = sample_points(static_cast<std::size_t>(o.points), mc.size(), spec.ab, o.seed);
    auto residuals =
        source_identity_residual(mc, spec.ab, Rational::parse(o.kappa), pts);
    bool ok = true;
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        bool pass = residuals[i].is_zero();
        ok = ok && pass;
        std::cout << (pass ? "ok    " : "FAIL  ") << "residual[" << i
                  << "] = " << residuals[i].str() << "\n";
    }
    return ok ? 0 : 4;
}

int verify_membership(const Options& o) {
    ModelSpec spec = make_spec(o);
    long M = eff_M(o), Mt = eff_Mt(o);
    bool ok = true;
    for (const auto& n : tail_valid_vectors(M + Mt, 0, o.max_weight, false, 0)) {
        if (weight(n) > o.max_weight) continue;
        bool pass = membership_check(f_deformed(n, spec, M, Mt), spec);
        ok = ok && pass;
        std::cout << (pass ? "ok    " : "FAIL  ") << "membership f_" << n.str() << "\n";
    }
    return ok ? 0 : 4;
}

int verify_oracle(const Options& o) {
    ModelSpec spec = make_spec(o);
    bool ok = true;
    auto report = [&](bool pass, const std::string& what) {
        ok = ok && pass;
        std::cout << (pass ? "ok    " : "FAIL  ") << what << "\n";
    };
    if (o.oracle == "jack") {
        for (long d = 0; d <= o.max_weight; ++d)
            for (const auto& lam : partitions_of(d, spec.N)) {
                IntVector n = lam.padded(static_cast<std::size_t>(spec.N));
                SymmetricPoly P = to_symmetric(solve_eigenfunction(n, spec).monomial_form);
                P = P.scaled(P.coeff(lam).inverse());
                report(P == jack_monic(lam, spec.N, spec.kappa), "jack " + lam.str());
            }
    } else if (o.oracle == "schur") {
        ModelSpec unit(spec.ab, Scalar(Rational(1)), spec.N, 0);
        for (long d = 0; d <= o.max_weight; ++d)
            for (const auto& lam : partitions_of(d, spec.N))
                report(f_vector(lam.padded(static_cast<std::size_t>(spec.N)), unit) ==
                           schur(lam, spec.N),
                       "schur " + lam.str());
    } else if (o.oracle == "classical") {
        // N = 1 solver against the three-term recurrences, monic
        ClassicalParams prm{Rational::parse(o.omega), Rational::parse(o.a),
                            Rational::parse(o.b), Rational::parse(o.c)};
        ModelSpec one(spec.ab, spec.kappa, 1, 0);
        for (long n = 0; n <= o.max_weight; ++n) {
            SymmetricPoly P =
                to_symmetric(solve_eigenfunction(IntVector({n}), one).monomial_form);
            UniPoly u(std::vector<Scalar>(static_cast<std::size_t>(n) + 1, Scalar(0)));
            std::vector<Scalar> cs(static_cast<std::size_t>(n) + 1, Scalar(0));
            for (const auto& [lam, c] : P.terms())
                cs[static_cast<std::size_t>(lam.part(0))] = c;
            UniPoly sol(std::move(cs));
            UniPoly cls = classical_1var(o.preset, n, prm);
            report(sol.scaled(sol.coeffs().back().inverse()) ==
                       cls.scaled(cls.coeffs().back().inverse()),
                   "classical n=" + std::to_string(n));
        }
    } else if (o.oracle == "series") {
        long M = eff_M(o), Mt = eff_Mt(o);
        for (const auto& n : tail_valid_vectors(M + Mt, -1, o.max_weight, false, 0)) {
            if (weight(n) > o.max_weight) continue;
            report(series_extract_f(n, spec, M, Mt) == f_deformed(n, spec, M, Mt).expand(),
                   "series " + n.str());
        }
    } else {
        throw CLI::ValidationError("unknown --oracle " + o.oracle);
    }
    return ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Calogero-Sutherland eigenpolynomial constructions"};
    app.require_subcommand(1);
    Options o;

    auto* poly = app.add_subcommand("poly", "solve one reduced eigenfunction");
    auto* fpoly = app.add_subcommand("fpoly", "build one f-basis polynomial");
    auto* gpoly = app.add_subcommand("gpoly", "build one g-basis polynomial");
    auto* eig = app.add_subcommand("eigenvalue", "exact eigenvalue of an index");
    auto* repr = app.add_subcommand("repr", "minimal (M, Mtilde) representation");
    auto* presets = app.add_subcommand("presets", "list the model presets");
    auto* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    auto* veigen = verify->add_subcommand("eigen", "eigen equation for all small partitions");
    auto* vaction = verify->add_subcommand("action", "operator action against the move table");
    auto* vsource = verify->add_subcommand("source-identity", "variable-mass identity");
    auto* vmember = verify->add_subcommand("membership", "deformed algebra membership");
    auto* voracle = verify->add_subcommand("oracle", "independent oracle comparisons");

    for (CLI::App* cmd : {poly, fpoly, gpoly, eig, veigen, vaction, vsource, vmember, voracle})
        add_model_options(cmd, o);
    for (CLI::App* cmd : {poly, fpoly, eig, veigen, vaction, vmember, voracle}) {
        cmd->add_option("--M", o.M, "w-slot count (default N)");
        cmd->add_option("--Mtilde", o.Mtilde, "wt-slot count (default Ntilde)");
    }
    for (CLI::App* cmd : {poly, fpoly, eig}) {
        cmd->add_option("--n", o.n, "integer index vector")->delimiter(',');
        cmd->add_option("--partition", o.partition, "partition label")->delimiter(',');
    }
    gpoly->add_option("--r", o.row, "single row index");
    gpoly->add_option("--partition", o.partition, "partition label")->delimiter(',');
    repr->add_option("--partition", o.partition, "partition label")->required()->delimiter(',');
    for (CLI::App* cmd : {poly, fpoly, gpoly, eig, repr, presets})
        cmd->add_option("--format", o.format, "json | text | latex");
    poly->add_option("--cache-dir", o.cache_dir, "result cache directory");
    poly->add_flag("--no-cache", o.no_cache, "disable the result cache");
    for (CLI::App* cmd : {vsource, veigen, vaction, vmember, voracle}) {
        cmd->add_option("--seed", o.seed, "PRNG seed");
        cmd->add_option("--max-weight", o.max_weight, "largest |n| to sweep");
    }
    vsource->add_option("--masses", o.masses, "comma list; 1/kappa and -1/kappa accepted");
    vsource->add_option("--points", o.points, "number of sample points");
    voracle->add_option("--oracle", o.oracle, "jack | schur | classical | series");

    try {
        app.parse(argc, argv);

        if (presets->parsed()) {
            json out = json::array();
            for (const auto& id : CasePreset::names()) {
                CasePreset p{id};
                AlphaBeta ab = p.alpha_beta();
                out.push_back(json{{"case", id},
                                   {"alpha", {ab.a2.str(), ab.a1.str(), ab.a0.str()}},
                                   {"beta", {ab.b1.str(), ab.b0.str()}}});
            }
            std::cout << out.dump() << "\n";
            return 0;
        }
        if (repr->parsed()) {
            auto [M, Mt] = choose_representation(Partition(o.partition));
            std::cout << json{{"M", M}, {"Mtilde", Mt}}.dump() << "\n";
            return 0;
        }
        if (eig->parsed()) {
            ModelSpec spec = make_spec(o);
            Scalar e;
            if (!o.partition.empty() && o.M < 0 && o.Mtilde < 0 && spec.Ntilde > 0)
                e = eigenvalue_partition_deformed(Partition(o.partition), spec);
            else if (spec.Ntilde == 0 && o.M < 0 && o.Mtilde < 0)
                e = eigenvalue(job_index(o), spec);
            else
                e = eigenvalue_deformed(job_index(o), spec, eff_M(o), eff_Mt(o));
            if (o.format == "text") std::cout << e.str("k") << "\n";
            else
                std::cout << scalar_to_json(e).dump() << "\n";
            return 0;
        }
        if (gpoly->parsed()) {
            ModelSpec spec = make_spec(o);
            SymmetricPoly g = o.row >= 0 ? g_row(o.row, spec.N, spec)
                                         : g_partition(Partition(o.partition), spec.N, spec);
            return emit_poly(o, sym_to_json(g), "m");
        }
        if (fpoly->parsed()) {
            ModelSpec spec = make_spec(o);
            IntVector n = job_index(o);
            if (spec.Ntilde == 0 && eff_Mt(o) == 0 && eff_M(o) == spec.N)
                return emit_poly(o, sym_to_json(f_vector(n, spec)), "m");
            return emit_poly(o, bisym_to_json(f_deformed(n, spec, eff_M(o), eff_Mt(o))), "m");
        }
        if (poly->parsed()) {
            ModelSpec spec = make_spec(o);
            IntVector n = job_index(o);
            json cfg = job_config_json(o, "poly", n);
            std::string key = hex64(fnv1a(cfg.dump()));
            fs::path dir = cache_directory(o);
            if (!o.no_cache)
                if (auto hit = cache_load(dir, key)) {
                    std::cout << hit->dump() << "\n";
                    return 0;
                }
            EigenResult r = solve_eigenfunction(n, spec, eff_M(o), eff_Mt(o));
            json out = eigenresult_to_json(r);
            if (!o.no_cache) cache_store(dir, key, out);
            if (o.format == "json") {
                std::cout << out.dump() << "\n";
            } else if (o.format == "latex") {
                std::cout << "P_{" << n.str() << "} = "
                          << poly_latex(out.at("f_expansion"), o.kappa_symbolic, "f") << " = "
                          << poly_latex(out.at("monomial"), o.kappa_symbolic, "m") << "\n";
            } else {
                std::cout << poly_text(terms_with_text(out.at("monomial"), o.kappa_symbolic),
                                       "m")
                          << "\n";
            }
            return 0;
        }
        if (veigen->parsed()) return verify_eigen(o);
        if (vaction->parsed()) return verify_action(o);
        if (vsource->parsed()) return verify_source_identity(o);
        if (vmember->parsed()) return verify_membership(o);
        if (voracle->parsed()) return verify_oracle(o);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const MathError& e) {
        json err{{"error", "math"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        json err{{"error", "internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    }
}
