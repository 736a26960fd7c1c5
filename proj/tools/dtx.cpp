#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dtx/basis.hpp"
#include "dtx/dataspace.hpp"
#include "dtx/errors.hpp"
#include "dtx/invert.hpp"
#include "dtx/io.hpp"
#include "dtx/selftest.hpp"
#include "dtx/specfun.hpp"
#include "dtx/xray.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_out_of_range = 2;

struct RunConfig {
    double gamma = 0.0;
    int order = 0;
    int n_max = -1;  // -1: taken from the input
    int quad_nodes = 0;  // 0: automatic
    double tol = 1e-8;
    std::string route = "svd";
    std::uint64_t seed = 7;
    std::string out;
    std::vector<double> gammas;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw dtx::Error("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw dtx::Error("cannot write " + path);
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void load_config(const std::string& path, RunConfig& c)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw dtx::ParseError(std::string("bad config: ") + e.what());
    }
    if (!j.is_object())
        throw dtx::ParseError("config must be a JSON object");
    try {
        if (j.contains("gamma")) {
            if (j["gamma"].is_array())
                c.gammas = j["gamma"].get<std::vector<double>>();
            else
                c.gamma = j["gamma"].get<double>();
        }
        if (j.contains("order"))
            c.order = j["order"].get<int>();
        if (j.contains("nmax"))
            c.n_max = j["nmax"].get<int>();
        if (j.contains("quad_nodes"))
            c.quad_nodes = j["quad_nodes"].get<int>();
        if (j.contains("tol"))
            c.tol = j["tol"].get<double>();
        if (j.contains("route"))
            c.route = j["route"].get<std::string>();
        if (j.contains("seed"))
            c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("out"))
            c.out = j["out"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw dtx::ParseError(std::string("bad config value: ") + e.what());
    }
}

void validate(const RunConfig& c)
{
    if (!(c.gamma > -1.0 && c.gamma < 1.0))
        throw dtx::DomainError("gamma must lie in (-1, 1), got " + dtx::format_double(c.gamma));
    if (c.order < 0)
        throw dtx::DomainError("order must be non-negative");
    if (!(c.tol > 0.0))
        throw dtx::DomainError("tolerance must be positive");
    if (c.quad_nodes < 0)
        throw dtx::DomainError("quad-nodes must be non-negative");
}

int coeff_degree(const dtx::SinoCoeffs& c)
{
    int n = 0;
    for (const auto& [idx, v] : c.values)
        n = std::max(n, idx.n);
    return n;
}

dtx::SinoCoeffs prune_relative(const dtx::SinoCoeffs& c)
{
    double peak = 0.0;
    for (const auto& [idx, v] : c.values)
        peak = std::max(peak, std::abs(v));
    return c.pruned(1e-13 * std::max(peak, 1e-300));
}

int cmd_sinogram(const RunConfig& c, const std::string& input)
{
    dtx::TensorInput t = dtx::parse_tensor_json(read_file(input));
    if (t.modes.empty() && t.zernike.empty()) {
        std::cerr << "empty tensor: nothing written\n";
        return exit_ok;
    }
    int n_max = std::max(t.max_degree(), c.n_max);
    dtx::Basis basis(c.gamma, std::max(n_max, 0));
    dtx::ModeField f = t.to_field(&basis);
    dtx::GridSpec spec = dtx::default_grid_spec(n_max, t.m);
    if (c.quad_nodes > 0)
        spec.chord_nodes = c.quad_nodes;
    dtx::SinoGrid s = dtx::forward_sino(f, c.gamma, spec);
    dtx::SinoCoeffs coeffs = prune_relative(dtx::sino_project(s, dtx::itt_projection_lattice(n_max, t.m), basis));
    std::string prefix = c.out.empty() ? "sinogram" : c.out;
    write_text(prefix + ".csv", dtx::sino_grid_to_csv(s));
    write_text(prefix + ".json", dtx::sino_coeffs_to_json(coeffs));
    return exit_ok;
}

int cmd_rangecheck(const RunConfig& c, const std::string& input)
{
    dtx::SinoCoeffs u = dtx::parse_sino_coeffs_json(read_file(input));
    dtx::RangeTolerances tol;
    tol.a_rel = c.tol;
    dtx::RangeReport r = dtx::range_check(u, c.order, tol);
    write_text(c.out, dtx::range_report_to_json(r));
    return r.in_range ? exit_ok : exit_out_of_range;
}

struct LoadedData {
    dtx::SinoCoeffs coeffs;
    std::optional<dtx::SinoGrid> grid;
};

LoadedData load_data(const RunConfig& c, const std::string& input, int n_max_hint)
{
    LoadedData d;
    if (ends_with(input, ".csv")) {
        d.grid = dtx::parse_sino_grid_csv(read_file(input), c.gamma);
        if (n_max_hint >= 0) {
            dtx::Basis basis(c.gamma, n_max_hint);
            d.coeffs = dtx::sino_project(*d.grid, dtx::itt_projection_lattice(n_max_hint, c.order), basis);
        } else {
            // Largest degree the grid resolves, starting from the default sizing rule.
            for (int n = std::max(d.grid->grid.n_alpha() - 4, 0);; --n) {
                try {
                    dtx::Basis basis(c.gamma, n);
                    d.coeffs = dtx::sino_project(*d.grid, dtx::itt_projection_lattice(n, c.order), basis);
                    break;
                } catch (const dtx::ResolutionError&) {
                    if (n == 0)
                        throw;
                }
            }
        }
        d.coeffs = prune_relative(d.coeffs);
    } else {
        d.coeffs = dtx::parse_sino_coeffs_json(read_file(input));
        d.coeffs.gamma = c.gamma;
    }
    return d;
}

int cmd_reconstruct(const RunConfig& c, const std::string& input)
{
    LoadedData d = load_data(c, input, c.n_max);
    dtx::RangeTolerances tol;
    tol.a_rel = c.tol;
    dtx::RangeReport rep = dtx::range_check(d.coeffs, c.order, tol);
    if (!rep.a.pass) {
        std::cerr << "data fails range condition (a) for order " << c.order << "\n";
        std::cerr << dtx::range_report_to_json(rep);
        return exit_out_of_range;
    }
    int n_max = std::max(coeff_degree(d.coeffs), c.n_max);
    dtx::Basis basis(c.gamma, n_max);
    dtx::IttForm f = dtx::to_itt(d.coeffs, c.order, basis, tol);
    if (c.route == "svd") {
        write_text(c.out, dtx::itt_to_json(f, basis));
        return exit_ok;
    }
    if (c.route != "kernel")
        throw dtx::DomainError("route must be 'svd' or 'kernel'");
    std::vector<dtx::cplx> zs = dtx::default_z_grid();
    double r_max = 0.0;
    for (dtx::cplx z : zs)
        r_max = std::max(r_max, std::abs(z));
    dtx::BoundaryGrid grid = dtx::kernel_grid(r_max, n_max, c.order, c.gamma);
    dtx::SinoGrid data = dtx::synthesize(d.coeffs, basis, grid);
    auto kernel = dtx::recon_tt_kernel(data, c.order, zs, basis);
    auto svd = dtx::evaluate_tt(f.tt, zs, basis);
    double diff = 0.0;
    for (std::size_t j = 0; j < kernel.size() && j < svd.size(); ++j)
        for (std::size_t q = 0; q < zs.size(); ++q) {
            diff = std::max(diff, std::abs(kernel[j].dz[q] - svd[j].dz[q]));
            diff = std::max(diff, std::abs(kernel[j].dzbar[q] - svd[j].dzbar[q]));
        }
    double measured = dtx::measured_kernel_ratio(basis, 1, grid);
    write_text(c.out, dtx::kernel_modes_to_json(c.order, c.gamma, zs, kernel, measured,
                                                dtx::kernel_pairing_scale(basis), diff));
    return exit_ok;
}

int cmd_decompose(const RunConfig& c, const std::string& input)
{
    dtx::TensorInput t = dtx::parse_tensor_json(read_file(input));
    int n_max = std::max(t.max_degree(), c.n_max);
    dtx::Basis basis(c.gamma, std::max(n_max, 0));
    dtx::ModeField f = t.to_field(&basis);
    dtx::SinoCoeffs u = prune_relative(dtx::forward_spectral_field(f, basis));
    dtx::RangeTolerances tol;
    tol.a_rel = c.tol;
    dtx::IttForm itt = dtx::to_itt(u, t.m, basis, tol);
    write_text(c.out, dtx::itt_to_json(itt, basis));
    return exit_ok;
}

int cmd_svd_table(const RunConfig& c)
{
    dtx::Basis basis(c.gamma, std::max(c.n_max, 0));
    write_text(c.out, dtx::svd_table_to_json(basis));
    return exit_ok;
}

int cmd_selftest(const RunConfig& c)
{
    dtx::SelftestConfig s;
    if (!c.gammas.empty())
        s.gammas = c.gammas;
    if (c.n_max >= 0)
        s.n_max = c.n_max;
    s.seed = c.seed;
    bool ok = true;
    std::ostringstream report;
    for (const auto& r : dtx::run_selftest(s)) {
        const char* status = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
        report << status << "  " << r.name << "  gamma=" << dtx::format_double(r.gamma);
        if (!r.skipped)
            report << "  margin=" << dtx::format_double(r.margin);
        if (!r.note.empty())
            report << "  (" << r.note << ")";
        report << "\n";
        ok = ok && r.passed;
    }
    write_text(c.out, report.str());
    return ok ? exit_ok : exit_error;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weighted X-ray transform of tensor fields on the unit disk"};
    app.require_subcommand(1);

    RunConfig c;
    std::string config_path;
    std::string input;
    double gamma_flag = 0.0;
    std::vector<double> gamma_list;
    int order_flag = 0, nmax_flag = 0, quad_flag = 0;
    double tol_flag = 0.0;
    std::string route_flag, out_flag;
    std::uint64_t seed_flag = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file; flags override it");
        sub->add_option("--gamma", gamma_flag, "weight exponent in (-1, 1)");
        sub->add_option("--nmax", nmax_flag, "maximal polynomial degree")->check(CLI::NonNegativeNumber);
        sub->add_option("--out", out_flag, "output path (stdout when omitted)");
    };

    auto* sino = app.add_subcommand("sinogram", "forward-project a tensor; writes <out>.csv and <out>.json");
    add_common(sino);
    sino->add_option("input", input, "tensor JSON")->required();
    sino->add_option("--quad-nodes", quad_flag, "Gauss-Jacobi nodes per chord");

    auto* range = app.add_subcommand("rangecheck", "test sinogram coefficients against the range conditions");
    add_common(range);
    range->add_option("input", input, "coefficient JSON")->required();
    range->add_option("--order", order_flag, "tensor order m");
    range->add_option("--tol", tol_flag, "relative tolerance for condition (a)");

    auto* recon = app.add_subcommand("reconstruct", "recover the iterated-tt representative");
    add_common(recon);
    recon->add_option("input", input, "coefficient JSON or sinogram CSV")->required();
    recon->add_option("--order", order_flag, "tensor order m");
    recon->add_option("--tol", tol_flag, "relative tolerance for condition (a)");
    recon->add_option("--route", route_flag, "svd or kernel")->check(CLI::IsMember({"svd", "kernel"}));

    auto* decomp = app.add_subcommand("decompose", "itt representative of a tensor field");
    add_common(decomp);
    decomp->add_option("input", input, "tensor JSON")->required();
    decomp->add_option("--tol", tol_flag, "relative tolerance for condition (a)");

    auto* table = app.add_subcommand("svd-table", "singular values and Zernike polynomials");
    add_common(table);

    auto* self = app.add_subcommand("selftest", "run the invariant suite");
    self->add_option("--config", config_path, "JSON config file; flags override it");
    self->add_option("--gamma", gamma_list, "weight exponents (repeatable)");
    self->add_option("--nmax", nmax_flag, "maximal polynomial degree")->check(CLI::NonNegativeNumber);
    self->add_option("--seed", seed_flag, "random seed");
    self->add_option("--out", out_flag, "report path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty())
            load_config(config_path, c);
        auto given = [&](const char* name) { return sub->get_option_no_throw(name) && sub->count(name) > 0; };
        if (given("--gamma")) {
            if (sub == self)
                c.gammas = gamma_list;
            else
                c.gamma = gamma_flag;
        }
        if (given("--order"))
            c.order = order_flag;
        if (given("--nmax"))
            c.n_max = nmax_flag;
        if (given("--quad-nodes"))
            c.quad_nodes = quad_flag;
        if (given("--tol"))
            c.tol = tol_flag;
        if (given("--route"))
            c.route = route_flag;
        if (given("--seed"))
            c.seed = seed_flag;
        if (given("--out"))
            c.out = out_flag;

        if (sub == self) {
            for (double g : c.gammas)
                if (!(g > -1.0 && g < 1.0))
                    std::cerr << "note: gamma " << dtx::format_double(g)
                              << " outside (-1,1); only forward checks run\n";
            return cmd_selftest(c);
        }
        validate(c);
        if (sub == sino)
            return cmd_sinogram(c, input);
        if (sub == range)
            return cmd_rangecheck(c, input);
        if (sub == recon)
            return cmd_reconstruct(c, input);
        if (sub == decomp)
            return cmd_decompose(c, input);
        return cmd_svd_table(c);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
}
