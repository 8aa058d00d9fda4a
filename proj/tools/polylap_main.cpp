// polylap: spectra, eigenvalue bounds, order comparisons and lattice Fourier
// checks for the Dirichlet poly-Laplace operator on finite subgraphs.
//
// Exit codes: 0 all verdicts pass, 1 a verdict fails, 2 usage or parse error,
// 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polylap/bounds.hpp"
#include "polylap/common.hpp"
#include "polylap/eigen.hpp"
#include "polylap/experiments.hpp"
#include "polylap/fourier.hpp"
#include "polylap/operator.hpp"
#include "polylap/report.hpp"

namespace {

using namespace polylap;

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

const LatticeDomain& require_lattice(const DomainSpec& spec, const char* verb) {
    if (!std::holds_alternative<LatticeDomain>(spec))
        throw std::invalid_argument(std::string(verb) + " requires a lattice domain");
    return std::get<LatticeDomain>(spec);
}

void check_spectrum_cap(const DomainSpec& spec) {
    const int n = domain_size(domain_ref(spec));
    if (n > kFullSpectrumCap)
        throw std::invalid_argument("domain of size " + std::to_string(n) +
                                    " exceeds the full-spectrum cap of " +
                                    std::to_string(kFullSpectrumCap));
}

int run_spectrum(const std::string& domain, int l, bool vectors, const std::string& dump_path,
                 const std::string& out) {
    const DomainSpec spec = parse_domain(domain);
    check_spectrum_cap(spec);
    const PolyLaplaceOperator op = assemble(domain_ref(spec), l);
    if (!dump_path.empty()) write_output(dump_operator(op), dump_path);
    const Spectrum s = eigen_sym(op.matrix, vectors);
    write_output(spectrum_to_json(s) + "\n", out);
    return 0;
}

int run_bounds(const std::string& domain, int l, int kmax, const std::string& format,
               const std::string& out) {
    const DomainSpec spec = parse_domain(domain);
    check_spectrum_cap(spec);
    const BoundsReport rep = verify_bounds(require_lattice(spec, "bounds"), l, kmax);
    write_output(format == "csv" ? bounds_to_csv(rep) : bounds_to_json(rep) + "\n", out);
    return rep.all_pass() ? 0 : 1;
}

int run_compare(const std::string& domain, int l, int kmax, const std::string& format,
                const std::string& out) {
    const DomainSpec spec = parse_domain(domain);
    check_spectrum_cap(spec);
    const OrderComparison cmp = compare_orders(domain_ref(spec), l, kmax);
    write_output(format == "csv" ? comparison_to_csv(cmp) : comparison_to_json(cmp) + "\n", out);
    return cmp.all_nonnegative() ? 0 : 1;
}

int run_exhaustion_cmd(const std::string& shape, int d, int l, int k, const std::vector<int>& sizes,
                       const std::string& format, const std::string& out) {
    const ExhaustionShape sh = shape == "ball" ? ExhaustionShape::Ball : ExhaustionShape::Box;
    const ExhaustionResult r = run_exhaustion(sh, d, l, k, sizes);
    write_output(format == "csv" ? exhaustion_to_csv(r) : exhaustion_to_json(r) + "\n", out);
    return r.non_increasing() ? 0 : 1;
}

int run_fourier(const std::string& domain, int l, int trials, std::uint64_t seed,
                double residual_lam, const std::vector<int>& residual_sizes,
                const std::string& out) {
    const DomainSpec spec = parse_domain(domain);
    const LatticeDomain& dom = require_lattice(spec, "fourier-check");
    const FourierGrid grid = make_grid(dom, l);

    Rng rng(seed);
    std::vector<std::vector<double>> fs;
    for (int t = 0; t < trials; ++t) {
        std::vector<double> f(static_cast<std::size_t>(dom.size()));
        for (double& x : f) x = rng.uniform(-1.0, 1.0);
        fs.push_back(std::move(f));
    }

    bool all_pass = true;
    std::string json = "{\"d\":" + std::to_string(dom.dim());
    json += ",\"omega_size\":" + std::to_string(dom.size());
    json += ",\"order\":" + std::to_string(l);
    json += ",\"seed\":" + std::to_string(seed);
    json += ",\"plancherel\":[";
    for (int t = 0; t < trials; ++t) {
        if (t) json += ',';
        const FourierCheck c = plancherel_check(dom, fs[static_cast<std::size_t>(t)], grid);
        all_pass = all_pass && c.rel_err <= 1e-10;
        json += fourier_check_to_json(c);
    }
    json += "],\"polylaplace\":[";
    for (int t = 0; t < trials; ++t) {
        if (t) json += ',';
        const FourierCheck c = polylaplace_fourier_check(dom, fs[static_cast<std::size_t>(t)], l, grid);
        all_pass = all_pass && c.rel_err <= 1e-10;
        json += fourier_check_to_json(c);
    }
    const double scale = std::pow(4.0 * dom.dim(), l) * dom.size() + boundary_measure(dom, l).exact;
    const double slack = hz_operator_bound_check(dom, l, grid);
    const bool hz_ok = slack <= 1e-9 * scale;
    all_pass = all_pass && hz_ok;
    json += "],\"hz_bound\":{\"max_slack\":" + format_double(slack);
    json += ",\"tolerance\":" + format_double(1e-9 * scale);
    json += ",\"grid_n\":" + std::to_string(grid.points_per_dim);
    json += ",\"ok\":";
    json += hz_ok ? "true" : "false";
    json += "}";
    if (residual_lam > 0.0) {
        const ResidualTable table =
            no_l2_eigenfunction_demo(dom.dim(), l, residual_lam, residual_sizes);
        json += ",\"residual_table\":" + residual_table_to_json(table);
    }
    json += ",\"all_pass\":";
    json += all_pass ? "true" : "false";
    json += "}\n";
    write_output(json, out);
    return all_pass ? 0 : 1;
}

int run_fig1(int k, const std::vector<int>& sizes, const std::string& format,
             const std::string& out, const std::string& plot) {
    const RatioSeries r = run_ratio_series(k, sizes);
    write_output(format == "csv" ? ratio_series_to_csv(r) : ratio_series_to_json(r) + "\n", out);
    if (!plot.empty()) write_output(ratio_series_to_svg(r), plot);
    return r.all_below_one() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet poly-Laplace spectra and eigenvalue bounds on lattice subgraphs"};
    app.require_subcommand(1);

    std::string domain, out, format = "json", plot, dump_path, shape = "box";
    int order = 1, kmax = 10, dim = 1, k = 1, trials = 5;
    std::uint64_t seed = 0;
    std::vector<int> sizes;
    bool vectors = false;

    auto* sc_spectrum = app.add_subcommand("spectrum", "full eigenvalue spectrum of a domain");
    sc_spectrum->add_option("--domain", domain, "domain JSON (inline or file path)")->required();
    sc_spectrum->add_option("--order", order, "operator order l");
    sc_spectrum->add_flag("--vectors", vectors, "also compute eigenvectors and residuals");
    sc_spectrum->add_option("--dump-operator", dump_path, "write the matrix triplet dump here");
    sc_spectrum->add_option("--out", out, "output path (default stdout)");

    auto* sc_bounds = app.add_subcommand("bounds", "eigenvalue-sum bounds with verdicts");
    sc_bounds->add_option("--domain", domain)->required();
    sc_bounds->add_option("--order", order);
    sc_bounds->add_option("--kmax", kmax);
    sc_bounds->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sc_bounds->add_option("--out", out);

    auto* sc_cmp = app.add_subcommand("compare-orders", "(lambda_k^l)^2 versus lambda_k^{2l}");
    sc_cmp->add_option("--domain", domain)->required();
    sc_cmp->add_option("--order", order);
    sc_cmp->add_option("--kmax", kmax);
    sc_cmp->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sc_cmp->add_option("--out", out);

    auto* sc_exh = app.add_subcommand("exhaustion", "eigenvalues along a nested domain family");
    sc_exh->add_option("--shape", shape)->check(CLI::IsMember({"box", "ball"}));
    sc_exh->add_option("--dim", dim, "lattice dimension d");
    sc_exh->add_option("--order", order);
    sc_exh->add_option("--k", k, "eigenvalue index");
    sc_exh->add_option("--sizes", sizes, "strictly increasing sizes")->required()->delimiter(',');
    sc_exh->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sc_exh->add_option("--out", out);

    auto* sc_fourier = app.add_subcommand("fourier-check", "Plancherel / symbol identities");
    sc_fourier->add_option("--domain", domain)->required();
    sc_fourier->add_option("--order", order);
    sc_fourier->add_option("--trials", trials, "number of random test functions");
    sc_fourier->add_option("--seed", seed);
    double residual_lam = 0.0;
    std::vector<int> residual_sizes{10, 20, 40};
    sc_fourier->add_option("--residual-lam", residual_lam,
                           "also tabulate spectral distances to this value on growing boxes")
        ->check(CLI::PositiveNumber);
    sc_fourier->add_option("--residual-sizes", residual_sizes, "box sizes for the residual table")
        ->delimiter(',');
    sc_fourier->add_option("--out", out);

    auto* sc_fig1 = app.add_subcommand("fig1", "path-graph eigenvalue ratio series and plot");
    sc_fig1->add_option("--k", k, "eigenvalue index");
    sc_fig1->add_option("--sizes", sizes, "path lengths n")->delimiter(',');
    sc_fig1->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    sc_fig1->add_option("--out", out);
    sc_fig1->add_option("--plot", plot, "write an SVG plot here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(sc_spectrum))
            return run_spectrum(domain, order, vectors, dump_path, out);
        if (app.got_subcommand(sc_bounds)) return run_bounds(domain, order, kmax, format, out);
        if (app.got_subcommand(sc_cmp)) return run_compare(domain, order, kmax, format, out);
        if (app.got_subcommand(sc_exh))
            return run_exhaustion_cmd(shape, dim, order, k, sizes, format, out);
        if (app.got_subcommand(sc_fourier))
            return run_fourier(domain, order, trials, seed, residual_lam, residual_sizes, out);
        if (app.got_subcommand(sc_fig1)) {
            if (sizes.empty()) sizes = {25, 50, 100, 200, 400};
            return run_fig1(k, sizes, format, out, plot);
        }
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
