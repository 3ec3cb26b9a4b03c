#include "symhodge/catalog.hpp"
#include "symhodge/cohomology.hpp"
#include "symhodge/cutoff.hpp"
#include "symhodge/growth.hpp"
#include "symhodge/invariants.hpp"
#include "symhodge/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitSuiteFailure = 3;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

int write_output(const std::string& payload, const OutputOptions& opts)
{
    if (opts.out_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream os(opts.out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output path: " << opts.out_path << "\n";
        return kExitIo;
    }
    os << payload;
    if (!os) {
        std::cerr << "error: write failed: " << opts.out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

/// Catalog id first, then a file path.
std::string resolve_model_text(const std::string& arg, bool& was_file)
{
    if (const symhodge::CatalogEntry* e = symhodge::catalog_find(arg)) {
        was_file = false;
        return std::string(e->text);
    }
    was_file = true;
    std::ifstream is(arg, std::ios::binary);
    if (!is)
        throw std::ios_base::failure("cannot read model file: " + arg);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

int cmd_analyze(const std::string& model_arg, const symhodge::Rational& lambda,
                const OutputOptions& opts)
{
    bool was_file = false;
    const std::string text = resolve_model_text(model_arg, was_file);
    const symhodge::LieModel model = symhodge::load_model(text);
    const symhodge::AnalysisContext ctx = symhodge::build_context(model, lambda);
    const symhodge::CohomologyReport report = symhodge::euler_report(ctx);
    const std::string payload = (opts.format == "md") ? symhodge::report_to_markdown(report)
                                                      : symhodge::report_to_json_string(report);
    return write_output(payload, opts);
}

int cmd_verify(const std::string& model_arg, const symhodge::Rational& lambda,
               const std::string& only, const OutputOptions& opts)
{
    bool was_file = false;
    const std::string text = resolve_model_text(model_arg, was_file);
    const symhodge::LieModel model = symhodge::load_model(text);
    const symhodge::AnalysisContext ctx = symhodge::build_context(model, lambda);
    auto results = symhodge::run_invariant_suite(ctx);
    if (!only.empty()) {
        std::erase_if(results, [&only](const symhodge::CheckResult& r) {
            return r.name.find(only) == std::string::npos;
        });
        if (results.empty()) {
            std::cerr << "error: no invariant matches --only " << only << "\n";
            return kExitValidation;
        }
    }

    std::string payload;
    if (opts.format == "md") {
        std::ostringstream os;
        os << "# Invariant suite: " << model.name << " (lambda = " << symhodge::rational_str(lambda)
           << ")\n\n";
        for (const auto& r : results) {
            os << "- " << (r.pass ? "PASS" : "FAIL") << " " << r.name;
            if (!r.detail.empty())
                os << " (" << r.detail << ")";
            os << "\n";
        }
        payload = os.str();
    } else {
        nlohmann::ordered_json j;
        j["model"] = model.name;
        j["lambda"] = symhodge::rational_str(lambda);
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json e;
            e["name"] = r.name;
            e["pass"] = r.pass;
            if (!r.detail.empty())
                e["detail"] = r.detail;
            j["checks"].push_back(std::move(e));
        }
        j["all_pass"] = symhodge::all_pass(results);
        payload = j.dump(2) + "\n";
    }
    const int rc = write_output(payload, opts);
    if (rc != kExitOk)
        return rc;
    return symhodge::all_pass(results) ? kExitOk : kExitSuiteFailure;
}

int cmd_catalog(bool list, const std::string& id, const OutputOptions& opts)
{
    if (list) {
        std::ostringstream os;
        if (opts.format == "md") {
            for (const auto& e : symhodge::catalog())
                os << "- `" << e.id << "`: " << e.provenance << "\n";
        } else {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (const auto& e : symhodge::catalog())
                j.push_back({{"id", std::string(e.id)}, {"provenance", std::string(e.provenance)}});
            os << j.dump(2) << "\n";
        }
        return write_output(os.str(), opts);
    }
    const symhodge::CatalogEntry* e = symhodge::catalog_find(id);
    if (!e) {
        std::cerr << "error: unknown catalog id: " << id << "\n";
        return kExitValidation;
    }
    return write_output(std::string(e->text) + "\n", opts);
}

int cmd_growth(const std::string& cover_name, double rmax, int samples, int radii, int dim,
               double tol, const OutputOptions& opts)
{
    const symhodge::ModelCover cover = symhodge::make_cover(cover_name, dim);
    const symhodge::ParabolicityVerdict verdict =
        symhodge::parabolicity_verdict(cover, rmax, radii, samples, tol);
    std::vector<double> rs;
    for (int i = 1; i <= radii; ++i)
        rs.push_back(rmax * i / radii);
    const symhodge::GrowthProfile profile = symhodge::primitive_norm_profile(cover, rs, samples);
    const double exactness = symhodge::primitive_exactness_error(cover, 1000, rmax / 2.0);

    std::string payload;
    if (opts.format == "md") {
        std::ostringstream os;
        os << "# Growth profile: " << cover.name << "\n\n";
        os << "- verdict: " << verdict.verdict << " (" << verdict.notes << ")\n";
        os << "- class: " << symhodge::growth_class_name(verdict.classification.cls)
           << ", constant c = " << verdict.classification.c << "\n";
        os << "- d-eta exactness max relative error: " << exactness << "\n\n";
        os << "| R | sup ||eta|| |\n|---|---|\n";
        for (std::size_t i = 0; i < profile.radii.size(); ++i)
            os << "| " << profile.radii[i] << " | " << profile.sup_norm[i] << " |\n";
        payload = os.str();
    } else {
        nlohmann::ordered_json j;
        j["cover"] = cover.name;
        j["dim"] = cover.dim;
        j["rmax"] = rmax;
        j["samples"] = samples;
        j["radii"] = profile.radii;
        j["sup_norm"] = profile.sup_norm;
        j["class"] = symhodge::growth_class_name(verdict.classification.cls);
        j["constant"] = verdict.classification.c;
        j["verdict"] = verdict.verdict;
        j["notes"] = verdict.notes;
        j["primitive_max_rel_error"] = exactness;
        payload = j.dump(2) + "\n";
    }
    return write_output(payload, opts);
}

int cmd_cutoff(double epsilon, int grid, const OutputOptions& opts)
{
    const symhodge::CutoffCertificate cert = symhodge::certify_bounds(epsilon, grid);
    std::string payload;
    if (opts.format == "md") {
        std::ostringstream os;
        os << "# Cutoff certificate (epsilon = " << cert.epsilon << ", grid = " << cert.grid_points
           << ")\n\n";
        os << "- C1 = " << cert.c1 << "\n";
        os << "- C2 = " << cert.c2 << "\n";
        os << "- a' <= 0 everywhere: " << (cert.aprime_nonpositive ? "yes" : "no") << "\n";
        os << "- exact plateau/support and 0 <= a <= 1: " << (cert.range_ok ? "yes" : "no") << "\n";
        os << "- pass: " << (cert.pass ? "yes" : "no") << "\n";
        payload = os.str();
    } else {
        nlohmann::ordered_json j;
        j["epsilon"] = cert.epsilon;
        j["grid"] = cert.grid_points;
        j["C1"] = cert.c1;
        j["C2"] = cert.c2;
        j["aprime_nonpositive"] = cert.aprime_nonpositive;
        j["range_ok"] = cert.range_ok;
        j["pass"] = cert.pass;
        payload = j.dump(2) + "\n";
    }
    return write_output(payload, opts);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact symplectic Hodge calculus on finite invariant-form models"};
    app.fallthrough(true);
    app.require_subcommand(1);

    std::string lambda_text = "1";
    OutputOptions opts;
    app.add_option("--lambda", lambda_text, "positive rational weight p/q")->capture_default_str();
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "md"}))
        ->capture_default_str();
    app.add_option("--out", opts.out_path, "output path (default: stdout)");

    std::string analyze_model;
    CLI::App* analyze = app.add_subcommand("analyze", "full cohomology report for a model");
    analyze->add_option("model", analyze_model, "catalog id or model file")->required();

    std::string verify_model;
    std::string verify_only;
    CLI::App* verify = app.add_subcommand("verify", "run the named invariant suite on a model");
    verify->add_option("model", verify_model, "catalog id or model file")->required();
    verify->add_option("--only", verify_only, "run only invariants whose name contains this");

    CLI::App* catalog = app.add_subcommand("catalog", "built-in model catalog");
    CLI::App* catalog_list = catalog->add_subcommand("list", "list catalog entries");
    std::string show_id;
    CLI::App* catalog_show = catalog->add_subcommand("show", "print a catalog model file");
    catalog_show->add_option("id", show_id, "catalog id")->required();
    catalog->require_subcommand(1);

    std::string cover_name;
    double rmax = 40.0;
    int samples = 1024;
    int radii = 32;
    int cover_dim = 4;
    CLI::App* growth = app.add_subcommand("growth", "primitive growth profile on a model cover");
    growth->add_option("cover", cover_name, "euclidean_plane | euclidean_2n | hyperbolic_plane")
        ->required();
    growth->add_option("--rmax", rmax, "largest sphere radius")->capture_default_str();
    growth->add_option("--samples", samples, "angular samples per sphere")->capture_default_str();
    growth->add_option("--radii", radii, "number of radii")->capture_default_str();
    growth->add_option("--dim", cover_dim, "dimension for euclidean_2n")->capture_default_str();
    double growth_tol = 1e-3;
    growth->add_option("--tol", growth_tol, "bounded-profile detection tolerance")
        ->capture_default_str();

    double epsilon = 0.1;
    int grid = 10000;
    CLI::App* cutoff = app.add_subcommand("cutoff", "certify the cutoff-family derivative bounds");
    cutoff->add_option("--epsilon", epsilon, "cutoff parameter")->capture_default_str();
    cutoff->add_option("--grid", grid, "sweep grid points")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const symhodge::Rational lambda = symhodge::parse_rational(lambda_text);
        if (analyze->parsed())
            return cmd_analyze(analyze_model, lambda, opts);
        if (verify->parsed())
            return cmd_verify(verify_model, lambda, verify_only, opts);
        if (catalog->parsed())
            return cmd_catalog(catalog_list->parsed(), show_id, opts);
        if (growth->parsed())
            return cmd_growth(cover_name, rmax, samples, radii, cover_dim, growth_tol, opts);
        if (cutoff->parsed())
            return cmd_cutoff(epsilon, grid, opts);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const symhodge::ModelError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
