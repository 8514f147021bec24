// Command-line front end: theorem verification, tangent-weight tables, and
// one-off class computations on Hilbert schemes of points in the plane.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "hilb/registry.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(path);
        out << text;
    }
}

hilb::BoxCoord parse_box(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--corner expects \"i,j\"");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

int run_verify(const std::vector<std::string>& ids, hilb::CaseParams params,
               const std::string& format, int jobs, const std::string& output) {
    std::vector<std::string> selected;
    if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) {
        for (const auto& c : hilb::theorem_registry()) selected.push_back(c.id);
    } else {
        for (const auto& id : ids) {
            if (!hilb::registry_has(id)) {
                std::cerr << "error: unknown theorem id '" << id << "'\n";
                return kExitUsage;
            }
            selected.push_back(id);
        }
    }

    auto started = std::chrono::steady_clock::now();
    hilb::Report report = hilb::run_cases(selected, params, jobs);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();

    if (format == "json")
        write_output(report.to_json(), output);
    else if (format == "csv")
        write_output(report.to_csv(), output);
    else
        write_output(report.to_text(), output);
    std::cerr << "verified " << report.results.size() << " case(s) in "
              << elapsed << " ms\n";

    bool internal = false;
    for (const auto& r : report.results) internal = internal || r.internal;
    if (internal) return kExitInternal;
    return report.all_pass() ? kExitPass : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact localization calculator for Hilbert schemes of points"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run theorem cases");
    std::vector<std::string> ids;
    verify->add_option("ids", ids, "theorem ids, or 'all'");
    hilb::CaseParams params;
    const char* env_cache = std::getenv("HILB_CACHE_DIR");
    if (env_cache) params.cache_dir = env_cache;
    verify->add_option("--n-max", params.n_max,
                       "largest point count (non-positive = per-case default)");
    verify->add_option("--m-min", params.m_min, "smallest tensor power");
    verify->add_option("--m-max", params.m_max, "largest tensor power");
    std::string format = "text";
    verify->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    int jobs = 1;
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--cache-dir", params.cache_dir,
                       "pushforward cache directory (env HILB_CACHE_DIR)");
    std::string output;
    verify->add_option("--output", output, "write the report to a file");

    // weights
    auto* weights = app.add_subcommand("weights", "tangent weight table");
    std::string partition_text;
    weights->add_option("partition", partition_text, "partition, e.g. 3,1")
        ->required();
    std::string corner_text;
    weights->add_option("--corner", corner_text,
                        "added box i,j marking a nested fixed point");

    // compute
    auto* compute = app.add_subcommand("compute", "compute one class");
    std::string kind;
    compute
        ->add_option("kind", kind,
                     "push-q | push-c1q | q1 | rho | qm | qK | kirwan")
        ->required()
        ->check(CLI::IsMember(
            {"push-q", "push-c1q", "q1", "rho", "qm", "qK", "kirwan"}));
    int n = 0, m = 1;
    std::string theory = "K", expr_text = "1", compute_output;
    compute->add_option("--n", n, "source point count")->required();
    compute->add_option("--m", m, "tensor power / operator index");
    compute->add_option("--theory", theory, "K|H")
        ->check(CLI::IsMember({"K", "H"}));
    compute->add_option("--expr", expr_text,
                        "symmetric expression, e.g. 'p1^2*p3 - 2*e2'");
    compute->add_option("--output", compute_output, "write JSON to a file");

    // basis
    auto* basis = app.add_subcommand("basis", "Nakajima basis data");
    int basis_n = 1;
    basis->add_option("--n", basis_n, "point count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(ids, params, format, jobs, output);

        if (weights->parsed()) {
            hilb::Partition lam = hilb::Partition::parse(partition_text);
            std::optional<hilb::BoxCoord> corner;
            if (!corner_text.empty()) corner = parse_box(corner_text);
            std::cout << hilb::format_weight_table(
                hilb::weight_table(lam, corner));
            return kExitPass;
        }

        if (compute->parsed()) {
            hilb::SymExpr expr = hilb::SymExpr::parse(expr_text);
            hilb::EquivClass result(hilb::Theory::K, hilb::Torus::T, 0);
            std::string provenance = "localization";
            if (kind == "push-q") {
                result = hilb::push_K(hilb::nested_Q_power(n, m));
            } else if (kind == "push-c1q") {
                result = hilb::push_H(hilb::nested_c1Q_power(n, m));
            } else if (kind == "q1") {
                result = hilb::q1_H(hilb::kirwan_H(expr, n));
            } else if (kind == "rho") {
                result = hilb::rho_H(hilb::kirwan_H(expr, n));
            } else if (kind == "qm") {
                result = hilb::qm_H(m, hilb::kirwan_H(expr, n));
                if (m >= 2) provenance = "recursion";
            } else if (kind == "qK") {
                result = hilb::qK_1m(m, hilb::kirwan_K(expr, n));
            } else {
                result = theory == "K" ? hilb::kirwan_K(expr, n)
                                       : hilb::kirwan_H(expr, n);
                provenance = "kirwan";
            }
            write_output(hilb::operator_result_to_json(result, n, provenance),
                         compute_output);
            return kExitPass;
        }

        if (basis->parsed()) {
            const hilb::NakajimaBasis& data = hilb::NakajimaBasis::get(basis_n);
            std::cout << "n = " << basis_n << "\n";
            std::cout << "partitions:";
            for (const auto& lam : data.order()) std::cout << " [" << lam.to_string() << "]";
            std::cout << "\n";
            std::cout << "determinant = " << data.determinant().to_string()
                      << "\n";
            std::cout << "invertible: "
                      << (data.determinant().is_zero() ? "no" : "yes") << "\n";
            return kExitPass;
        }
    } catch (const hilb::IntegralityError& err) {
        std::cerr << "integrality violation: " << err.what() << "\n";
        return kExitInternal;
    } catch (const hilb::SoundnessError& err) {
        std::cerr << "soundness failure: " << err.what() << "\n";
        return kExitInternal;
    } catch (const hilb::BasisError& err) {
        std::cerr << "basis failure: " << err.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
