// Command-line front end: runs the verification suite and the Clifford
// classification/obstruction queries.  Exit codes: 0 all pass, 1 a
// mathematical check failed, 2 usage or configuration error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "phsub/verifier.hpp"

namespace {

using namespace phsub;

SubmersionModel model_from_name(const std::string& name, int m, int s, int k) {
    if (name == "theta") return SubmersionModel::theta_circle(m, s);
    if (name == "complex-hopf") return SubmersionModel::complex_hopf(k);
    if (name == "quaternionic-hopf") return SubmersionModel::quaternionic_hopf(k);
    if (name == "octonionic-hopf") return SubmersionModel::octonionic_hopf();
    if (name == "complex-to-quaternionic") return SubmersionModel::complex_to_quaternionic(k);
    throw ConfigError("unknown model '" + name +
                      "'; supported: theta, complex-hopf, quaternionic-hopf, octonionic-hopf, "
                      "complex-to-quaternionic");
}

void write_report(const VerificationReport& report, const std::string& format,
                  const std::string& output) {
    const std::string body = format == "json" ? report_json(report) : report_text(report);
    std::string path = output;
    if (path.empty()) {
        if (const char* dir = std::getenv("REPORT_DIR")) {
            std::filesystem::create_directories(dir);
            path = std::string(dir) + "/report." + (format == "json" ? "json" : "txt");
        }
    }
    if (!path.empty()) {
        std::ofstream out(path);
        out << body;
        if (!out) throw ConfigError("cannot write report to " + path);
    }
    std::cout << body;
    if (format == "json") std::cout << "\n";
}

int cmd_verify(bool all, const std::string& model_name, int m, int s, int k,
               const std::vector<std::string>& checks, int samples, double tol,
               std::uint64_t seed, const std::string& format, const std::string& output) {
    std::vector<CheckSpec> specs;
    if (all || model_name.empty()) {
        specs = default_suite(samples, tol, seed);
        if (!checks.empty()) {
            std::vector<CheckSpec> filtered;
            for (const std::string& name : checks) {
                check_anchor(name); // raises on unknown names
                for (const CheckSpec& spec : specs)
                    if (spec.name == name) filtered.push_back(spec);
            }
            specs = std::move(filtered);
        }
    } else {
        const SubmersionModel model = model_from_name(model_name, m, s, k);
        std::vector<std::string> names = checks.empty() ? check_names() : checks;
        for (const std::string& name : names) {
            if (!check_supported(name, model)) {
                if (checks.empty()) continue; // skip inapplicable registry entries
                throw ConfigError("unsupported: check '" + name + "' does not apply to " +
                                  model.name() + "(" + model.params() + ")" +
                                  (model.riemannian_base() ? "" : " (indefinite base)"));
            }
            const double check_tol =
                (name == "a_fd" || name == "nabla_A_zero") ? std::max(tol, 1e-4) : tol;
            specs.push_back({name, model, samples, check_tol, seed});
        }
    }
    const VerificationReport report = run_suite(specs);
    write_report(report, format, output);
    for (const CheckRecord& rec : report.records)
        if (!rec.error.empty()) return 2;
    return report.pass ? 0 : 1;
}

BaseKind base_from_name(const std::string& name) {
    if (name == "real-hyperbolic") return BaseKind::RealHyperbolic4;
    if (name == "complex" || name == "complex-hyperbolic") return BaseKind::ComplexHyperbolic;
    if (name == "quaternionic" || name == "quaternionic-hyperbolic")
        return BaseKind::QuaternionicHyperbolic;
    if (name == "cayley" || name == "cayley-plane") return BaseKind::CayleyPlane;
    throw ConfigError("unknown base '" + name +
                      "'; supported: real-hyperbolic, complex, quaternionic, cayley, any");
}

int cmd_obstruction(int s, int n, const std::string& base, bool complex_fibres) {
    if (base == "any") {
        // admissible if some base kind admits it
        for (BaseKind kind : {BaseKind::RealHyperbolic4, BaseKind::ComplexHyperbolic,
                              BaseKind::QuaternionicHyperbolic, BaseKind::CayleyPlane}) {
            const Obstruction verdict = existence_obstruction(s, n, kind, complex_fibres);
            if (verdict.admissible) {
                std::cout << "Admissible (base " << base_kind_name(kind) << ")\n";
                return 0;
            }
        }
        std::cout << "Obstructed: "
                  << existence_obstruction(s, n, BaseKind::RealHyperbolic4, complex_fibres)
                         .reason
                  << "\n";
        return 0;
    }
    const Obstruction verdict = existence_obstruction(s, n, base_from_name(base), complex_fibres);
    if (verdict.admissible) std::cout << "Admissible\n";
    else std::cout << "Obstructed: " << verdict.reason << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudo-hyperbolic submersion verification suite"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run verification checks");
    bool all = false;
    std::string model_name, format = "text", output;
    int m = 2, s = 0, k = 2, samples = 200;
    double tol = 1e-8;
    std::uint64_t seed = 42;
    std::vector<std::string> checks;
    verify->add_flag("--all", all, "run the full default suite");
    verify->add_option("--model", model_name, "model name");
    verify->add_option("--m", m, "theta parameter m");
    verify->add_option("--s", s, "theta parameter s");
    verify->add_option("--k", k, "Hopf parameter k");
    verify->add_option("--check", checks, "check name (repeatable)");
    verify->add_option("--samples", samples, "sample points per check");
    verify->add_option("--tol", tol, "residual tolerance");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output", output, "write the report to this path");

    auto* classify_cmd = app.add_subcommand("classify", "Clifford algebra isomorphism class");
    int p = 0, q = 0;
    classify_cmd->add_option("--p", p, "generators squaring to +1")->required();
    classify_cmd->add_option("--q", q, "generators squaring to -1")->required();

    auto* obstruction = app.add_subcommand("obstruction", "existence verdict for (s, n, base)");
    int os = 1, on = 2;
    std::string base = "any";
    bool complex_fibres = false;
    obstruction->add_option("--s", os, "fibre dimension")->required();
    obstruction->add_option("--n", on, "horizontal (base) dimension")->required();
    obstruction->add_option("--base", base, "base curvature kind, or 'any'");
    obstruction->add_flag("--complex-fibres", complex_fibres,
                          "treat s as the real dimension of a complex fibre");

    try {
        app.parse(argc, argv);
        if (verify->parsed())
            return cmd_verify(all, model_name, m, s, k, checks, samples, tol, seed, format,
                              output);
        if (classify_cmd->parsed()) {
            std::cout << phsub::classify({p, q}).to_string() << "\n";
            return 0;
        }
        return cmd_obstruction(os, on, base, complex_fibres);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const phsub::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
