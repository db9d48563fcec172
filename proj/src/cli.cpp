#include "deltazeta/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltazeta/errors.hpp"
#include "deltazeta/models.hpp"
#include "deltazeta/specfun.hpp"
#include "deltazeta/table.hpp"
#include "deltazeta/thermo.hpp"
#include "deltazeta/zetareg.hpp"

namespace deltazeta::cli {

namespace {

constexpr double pi = std::numbers::pi;

// Flat JSON object -> CLI11 config items. Keys name long flags without the
// leading dashes; keys not known to the main app are routed to the selected
// subcommand.
class JsonConfig : public CLI::Config {
public:
    explicit JsonConfig(const CLI::App* app) : app_(app) {}

    std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override
    {
        nlohmann::json doc;
        try {
            input >> doc;
        } catch (const nlohmann::json::exception& e) {
            throw CLI::ConfigError(std::string("config file is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) throw CLI::ConfigError("config file must hold a JSON object");
        const auto subs = app_->get_subcommands();
        std::vector<CLI::ConfigItem> items;
        for (const auto& [key, value] : doc.items()) {
            CLI::ConfigItem item;
            item.name = key;
            std::replace(item.name.begin(), item.name.end(), '_', '-');
            if (app_->get_option_no_throw("--" + item.name) == nullptr && !subs.empty())
                item.parents = {subs.front()->get_name()};
            auto scalar = [&](const nlohmann::json& v) -> std::string {
                if (v.is_string()) return v.get<std::string>();
                if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
                if (v.is_number()) return v.dump();
                throw CLI::ConfigError("config key " + key + ": unsupported value " + v.dump());
            };
            if (value.is_array()) {
                for (const auto& v : value) item.inputs.push_back(scalar(v));
            } else {
                item.inputs.push_back(scalar(value));
            }
            items.push_back(std::move(item));
        }
        return items;
    }

private:
    const CLI::App* app_;
};

struct Params {
    double v_min = 0.0;
    double v_max = 10.0;
    int v_samples = 101;
    double t_min = 1e-3;
    double t_max = 10.0;
    int t_samples = 25;
    std::vector<double> s_values;
    double s_min = -0.4;
    double s_max = 0.4;
    int s_samples = 9;
    bool laurent = false;
    double tau_min = 0.5;
    double tau_max = 5.0;
    int tau_samples = 10;
    int n_max = 0;
    double a_min = 1.0;
    double a_max = 50.0;
    int a_steps = 50;
    double h = 1e-4;
    std::string route = "imaginary-axis";
    double tolerance_scale = 1.0;
};

struct Model {
    bool two_point = false;
    models::OnePointModel one;
    models::TwoPointModel two;

    models::SpectralMeasure measure() const
    {
        return two_point ? models::two_point_spectral_measure(two) : models::one_point_spectral_measure(one);
    }
};

Model make_model(const RunConfig& cfg, std::ostream& err)
{
    Model m;
    m.two_point = cfg.model == "two-point";
    if (m.two_point) {
        m.two = {cfg.alpha0, cfg.alpha1, cfg.a};
        m.two.validate();
        if (m.two.on_constraint_boundary())
            err << "warning: 4 pi^2 alpha0 alpha1 a^2 = 1, the edge of the admitted parameter region\n";
    } else {
        m.one = {cfg.alpha};
        m.one.validate();
        if (cfg.alpha == 0.0) err << "warning: alpha = 0 is the free operator; the measure is a point mass at v = 0\n";
    }
    return m;
}

quad::QuadratureSpec make_spec(const RunConfig& cfg)
{
    auto spec = zetareg::precise_spec();
    if (cfg.abs_tol) spec.abs_tol = *cfg.abs_tol;
    if (cfg.rel_tol) spec.rel_tol = *cfg.rel_tol;
    if (cfg.max_subdivisions) spec.max_subdivisions = *cfg.max_subdivisions;
    spec.validate();
    return spec;
}

std::vector<double> linear_grid(double lo, double hi, int n)
{
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return g;
}

std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(n == 1 ? lo : lo * std::pow(hi / lo, double(i) / (n - 1)));
    return g;
}

struct Row {
    std::vector<Cell> cells;
    std::string warning;
};

// Evaluates fn(0..n-1) on up to `jobs` threads; results keep index order and
// the first failing index (in order) is rethrown.
std::vector<Row> parallel_rows(std::size_t n, int jobs, const std::function<Row(std::size_t)>& fn)
{
    std::vector<Row> rows(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(std::size_t(std::max(jobs, 1)), 1, std::max<std::size_t>(n, 1));
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

Table collect(std::vector<std::string> columns, const std::vector<Row>& rows, std::ostream& err)
{
    Table t{std::move(columns), {}};
    for (const auto& r : rows) {
        if (!r.warning.empty()) err << "warning: " << r.warning << '\n';
        if (!r.cells.empty()) t.rows.push_back(r.cells);
    }
    return t;
}

void require(bool ok, const std::string& what)
{
    if (!ok) throw DomainError(what);
}

Table cmd_spectral_measure(const RunConfig& cfg, const Params& p, std::ostream& err)
{
    require(p.v_min >= 0.0 && p.v_min < p.v_max, "spectral-measure: need 0 <= v-min < v-max");
    require(p.v_samples >= 2, "spectral-measure: need samples >= 2");
    const auto model = make_model(cfg, err);
    const auto e = model.measure();
    const auto grid = linear_grid(p.v_min, p.v_max, p.v_samples);
    auto rows = parallel_rows(grid.size(), cfg.jobs, [&](std::size_t i) {
        const double v = grid[i];
        return Row{{v, v > 0.0 ? e.eval(v) : e.small_v().constant}, ""};
    });
    return collect({"v", "e"}, rows, err);
}

Table cmd_heat_trace(const RunConfig& cfg, const Params& p, std::ostream& err)
{
    require(p.t_min > 0.0 && p.t_min <= p.t_max, "heat-trace: need 0 < t-min <= t-max");
    require(p.t_samples >= 1, "heat-trace: need samples >= 1");
    const auto model = make_model(cfg, err);
    const auto e = model.measure();
    const auto spec = make_spec(cfg);
    const auto grid = log_grid(p.t_min, p.t_max, p.t_samples);
    auto rows = parallel_rows(grid.size(), cfg.jobs, [&](std::size_t i) {
        const double t = grid[i];
        const double k = zetareg::relative_heat_trace(e, t, spec);
        if (model.two_point) return Row{{t, k}, ""};
        const double closed = zetareg::one_point_heat_trace_closed(model.one, t);
        return Row{{t, k, closed, k - closed}, ""};
    });
    if (model.two_point) return collect({"t", "heat_trace"}, rows, err);
    return collect({"t", "heat_trace", "closed_form", "difference"}, rows, err);
}

Table cmd_zeta(const RunConfig& cfg, const Params& p, std::ostream& err)
{
    const auto model = make_model(cfg, err);
    const auto e = model.measure();
    const auto spec = make_spec(cfg);
    if (p.laurent) {
        const auto analytic = model.two_point ? zetareg::two_point_laurent(model.two, spec)
                                              : zetareg::one_point_laurent(model.one);
        const auto probe = zetareg::numeric_laurent_probe(e, 1e-4, spec);
        return Table{{"s", "residue", "finite_part", "probe_residue", "probe_finite_part"},
                     {{-0.5, analytic.residue, analytic.finite_part, probe.residue, probe.finite_part}}};
    }
    auto grid = p.s_values.empty() ? linear_grid(p.s_min, p.s_max, p.s_samples) : p.s_values;
    require(!grid.empty(), "zeta: empty s grid");
    const auto strip = zetareg::zeta_strip(e);
    for (double s : grid) {
        if (!model.two_point && std::abs(std::abs(s) - 0.5) < 1e-12)
            throw PoleError("zeta: s = " + std::to_string(s) + " is a pole", s);
        if (!strip.contains(s))
            throw ContinuationRequiredError("zeta: s = " + std::to_string(s) +
                                            " lies outside the convergence strip (-1/2, 1/2); use --laurent");
    }
    auto rows = parallel_rows(grid.size(), cfg.jobs, [&](std::size_t i) {
        const double s = grid[i];
        const double z = zetareg::relative_zeta_in_strip(e, s, spec).real();
        if (model.two_point) return Row{{s, z}, ""};
        const double closed = zetareg::one_point_zeta_closed(model.one, s).real();
        return Row{{s, z, closed, z - closed}, ""};
    });
    if (model.two_point) return collect({"s", "zeta"}, rows, err);
    return collect({"s", "zeta", "closed_form", "difference"}, rows, err);
}

Table cmd_eta(const RunConfig& cfg, const Params& p, std::ostream& err)
{
    require(p.tau_min > 0.0 && p.tau_min <= p.tau_max, "eta: need 0 < tau-min <= tau-max");
    require(p.tau_samples >= 1, "eta: need samples >= 1");
    require(p.n_max >= 0, "eta: n-max must be non-negative");
    const auto model = make_model(cfg, err);
    const auto e = model.measure();
    const auto spec = make_spec(cfg);
    const auto grid = linear_grid(p.tau_min, p.tau_max, p.tau_samples);
    auto rows = parallel_rows(grid.size(), cfg.jobs, [&](std::size_t i) {
        const double tau = grid[i];
        Row r;
        const double value = thermo::log_eta(e, tau, spec);
        r.cells = {tau, value};
        if (!model.two_point) {
            const double closed = thermo::one_point_log_eta_closed(model.one, tau);
            r.cells.push_back(closed);
            r.cells.push_back(value - closed);
        }
        if (p.n_max > 0) r.cells.push_back(thermo::eta_series_check(e, tau, p.n_max, spec));
        return r;
    });
    std::vector<std::string> cols{"tau", "log_eta"};
    if (!model.two_point) {
        cols.push_back("closed_form");
        cols.push_back("difference");
    }
    if (p.n_max > 0) cols.push_back("series");
    return collect(cols, rows, err);
}

Table cmd_partition(const RunConfig& cfg, std::ostream& err)
{
    const auto model = make_model(cfg, err);
    const auto e = model.measure();
    const auto spec = make_spec(cfg);
    const thermo::ThermalState th{cfg.beta, cfg.ell};
    th.validate();
    const auto rep = model.two_point ? thermo::two_point_partition(model.two, th, spec)
                                     : thermo::relative_partition(e, zetareg::one_point_laurent(model.one), th, spec);

    Table t;
    std::vector<Cell> row;
    auto add = [&](const std::string& name, Cell value) {
        t.columns.push_back(name);
        row.push_back(std::move(value));
    };
    add("model", rep.tag);
    add("beta", th.beta);
    add("ell", th.ell);
    add("r", th.r());
    add("log_z", rep.log_z);
    add("vacuum_energy", rep.vacuum_energy);
    add("log_eta", rep.eta_log);
    add("residue", rep.laurent.residue);
    add("finite_part", rep.laurent.finite_part);
    for (const auto& [name, value] : rep.terms) add("term_" + name, value);
    if (!model.two_point) {
        const double explicit_value = thermo::one_point_log_z_explicit(model.one, th);
        add("explicit_log_z", explicit_value);
        add("explicit_difference", rep.log_z - explicit_value);
        add("explicit_check", std::abs(rep.log_z - explicit_value) < 1e-8 ? "pass" : "fail");
    }
    const double slope = thermo::low_temperature_slope(e, rep.laurent, {30.0, th.ell}, 0.5, spec);
    add("slope_beta30", slope);
    add("slope_check", std::abs(slope - rep.vacuum_energy) < 1e-3 ? "pass" : "fail");
    t.rows.push_back(std::move(row));
    return t;
}

Table cmd_casimir(const RunConfig& cfg, const Params& p, std::ostream& err)
{
    require(cfg.model == "two-point", "casimir: requires --model two-point");
    require(p.a_min > 0.0 && p.a_min <= p.a_max, "casimir: need 0 < a-min <= a-max");
    require(p.a_steps >= 1, "casimir: need steps >= 1");
    require(p.h > 0.0 && p.h < 1.0, "casimir: h must lie in (0, 1)");
    const thermo::ThermalState th{cfg.beta, cfg.ell};
    th.validate();
    const auto spec = make_spec(cfg);
    const auto route = p.route == "split" ? thermo::ForceRoute::split : thermo::ForceRoute::imaginary_axis;
    const auto grid = linear_grid(p.a_min, p.a_max, p.a_steps);
    auto rows = parallel_rows(grid.size(), cfg.jobs, [&](std::size_t i) {
        const models::TwoPointModel m{cfg.alpha0, cfg.alpha1, grid[i]};
        try {
            m.validate();
            const auto f = thermo::casimir_force(m, th, p.h, route, spec);
            return Row{{grid[i], f.value, f.error_estimate, std::string("-dE_vacuum/da")}, ""};
        } catch (const BoundStateError& ex) {
            return Row{{}, "skipping a = " + format_double(grid[i]) + ": " + ex.what()};
        } catch (const StepTooLargeError& ex) {
            return Row{{}, "skipping a = " + format_double(grid[i]) + ": " + ex.what()};
        }
    });
    return collect({"a", "force", "error_estimate", "convention"}, rows, err);
}

struct Check {
    std::string name;
    double value;
    double reference;
    double tolerance;
};

std::vector<Check> verification_checks(const RunConfig& cfg, const quad::QuadratureSpec& spec)
{
    std::vector<Check> checks;
    const models::OnePointModel one{cfg.alpha > 0.0 ? cfg.alpha : 0.25};
    const auto e1 = models::one_point_spectral_measure(one);

    double modular = 0.0;
    for (double t : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        const double th = specfun::jacobi_theta_sum(t);
        modular = std::max(modular, std::abs(th - std::sqrt(pi / t) * specfun::jacobi_theta_sum(pi * pi / t)) / th);
    }
    checks.push_back({"modular identity of theta (max relative deviation)", modular, 0.0, 1e-10});

    auto total = quad::integrate_to_infinity(quad::Integrand([&](double v) { return e1.eval(v); }), 0.0, spec);
    checks.push_back({"one-point sum rule int e(v) dv", total.value, 0.5, 1e-8});

    double zeta_dev = 0.0;
    for (double s : linear_grid(-0.45, 0.45, 10))
        zeta_dev = std::max(zeta_dev, std::abs(zetareg::relative_zeta_in_strip(e1, s, spec).real() -
                                               zetareg::one_point_zeta_closed(one, s).real()));
    checks.push_back({"one-point zeta quadrature vs closed form", zeta_dev, 0.0, 1e-7});

    double heat_dev = 0.0;
    for (double t : log_grid(1e-3, 10.0, 9))
        heat_dev = std::max(heat_dev, std::abs(zetareg::relative_heat_trace(e1, t, spec) -
                                               zetareg::one_point_heat_trace_closed(one, t)));
    checks.push_back({"one-point heat trace quadrature vs closed form", heat_dev, 0.0, 1e-8});

    double eta_dev = 0.0;
    for (double tau : {0.5, 2.0, 5.0})
        eta_dev = std::max(eta_dev, std::abs(thermo::log_eta(e1, tau, spec) - thermo::one_point_log_eta_closed(one, tau)));
    checks.push_back({"one-point log eta quadrature vs closed form", eta_dev, 0.0, 1e-8});

    checks.push_back({"eta series (n_max = 50) vs log eta", thermo::eta_series_check(e1, 2.0, 50, spec),
                      thermo::log_eta(e1, 2.0, spec), 1e-8});

    const auto l1 = zetareg::one_point_laurent(one);
    const auto p1 = zetareg::numeric_laurent_probe(e1, 1e-4, spec);
    checks.push_back({"one-point Laurent probe residue", p1.residue, l1.residue, 1e-4});
    checks.push_back({"one-point Laurent probe finite part", p1.finite_part, l1.finite_part, 1e-4});

    checks.push_back({"one-point Mellin transform of heat trace at s = 0.25",
                      zetareg::relative_zeta_mellin(e1, 0.25, spec), zetareg::one_point_zeta_closed(one, 0.25).real(),
                      1e-6});

    const thermo::ThermalState th{5.0, 1.0};
    checks.push_back({"one-point log Z vs explicit formula", thermo::relative_partition(e1, l1, th, spec).log_z,
                      thermo::one_point_log_z_explicit(one, th), 1e-8});

    const models::TwoPointModel two{cfg.alpha0, cfg.alpha1, cfg.a};
    const auto e2 = models::two_point_spectral_measure(two);
    const auto l2 = zetareg::two_point_laurent(two, spec);
    const auto p2 = zetareg::numeric_laurent_probe(e2, 1e-4, spec);
    checks.push_back({"two-point Laurent probe residue", p2.residue, l2.residue, 1e-4});
    checks.push_back({"two-point Laurent probe finite part", p2.finite_part, l2.finite_part, 1e-4});
    checks.push_back({"two-point finite part, split vs imaginary axis", l2.finite_part,
                      zetareg::two_point_laurent_imaginary_axis(two, spec).finite_part, 1e-8});

    const models::TwoPointModel far{0.25, 1e4, 1.0};
    const auto ef = models::two_point_spectral_measure(far);
    const auto eo = models::one_point_spectral_measure({0.25});
    double degeneracy = 0.0;
    for (double v : {0.1, 1.0, 10.0}) degeneracy = std::max(degeneracy, std::abs(ef.eval(v) - eo.eval(v)));
    checks.push_back({"two-point measure at alpha1 = 1e4 vs one-point", degeneracy, 0.0, 1e-3});
    return checks;
}

int cmd_verify(const RunConfig& cfg, const Params& p, std::ostream& out, std::ostream& err)
{
    require(std::isfinite(p.tolerance_scale) && p.tolerance_scale >= 0.0, "verify: tolerance-scale must be >= 0");
    make_model(cfg, err);
    if (cfg.model != "two-point") models::TwoPointModel{cfg.alpha0, cfg.alpha1, cfg.a}.validate();
    const auto checks = verification_checks(cfg, make_spec(cfg));
    int failed = 0;
    nlohmann::ordered_json summary;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        const double dev = std::abs(c.value - c.reference);
        const bool ok = dev <= c.tolerance * p.tolerance_scale;
        if (!ok) ++failed;
        out << (ok ? "PASS " : "FAIL ") << c.name << ": value " << format_double(c.value) << ", reference "
            << format_double(c.reference) << ", tolerance " << format_double(c.tolerance * p.tolerance_scale)
            << '\n';
        results.push_back({{"name", c.name}, {"pass", ok}, {"value", c.value}, {"reference", c.reference}});
    }
    summary["passed"] = int(checks.size()) - failed;
    summary["failed"] = failed;
    summary["sum_rule"] = checks[1].value;
    summary["checks"] = results;
    out << summary.dump() << '\n';
    return failed == 0 ? exit_ok : exit_verify_failed;
}

void add_common(CLI::App& app, RunConfig& cfg)
{
    app.add_option("--model", cfg.model, "one-point or two-point")
        ->check(CLI::IsMember({"one-point", "two-point"}))
        ->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "one-point coupling (>= 0)")->capture_default_str();
    app.add_option("--alpha0", cfg.alpha0, "two-point coupling of the first centre")->capture_default_str();
    app.add_option("--alpha1", cfg.alpha1, "two-point coupling of the second centre")->capture_default_str();
    app.add_option("--a", cfg.a, "separation of the two centres")->capture_default_str();
    app.add_option("--beta", cfg.beta, "inverse temperature")->capture_default_str();
    app.add_option("--ell", cfg.ell, "renormalization scale")->capture_default_str();
    app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", cfg.out, "output file (default: standard output)");
    app.add_option("--abs-tol", cfg.abs_tol, "absolute quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--rel-tol", cfg.rel_tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);
    app.add_option("--max-subdivisions", cfg.max_subdivisions, "quadrature subdivision budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--jobs", cfg.jobs, "worker threads for grid evaluations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

int emit(const Table& t, const RunConfig& cfg, std::ostream& out)
{
    std::ofstream file;
    std::ostream* target = &out;
    if (!cfg.out.empty()) {
        file.open(cfg.out, std::ios::binary);
        if (!file) throw DomainError("cannot open output file " + cfg.out);
        target = &file;
    }
    if (cfg.format == "json")
        write_json(t, *target);
    else
        write_csv(t, *target);
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    Params p;
    CLI::App app{"Relative spectral functions of delta-interaction Schroedinger operators", "deltazeta"};
    app.fallthrough();
    app.require_subcommand(1);
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.config_formatter(std::make_shared<JsonConfig>(&app));
    app.set_config("--config", "", "JSON object whose keys are long flag names");
    add_common(app, cfg);

    auto* sm = app.add_subcommand("spectral-measure", "tabulate e(v)");
    sm->add_option("--v-min", p.v_min)->capture_default_str();
    sm->add_option("--v-max", p.v_max)->capture_default_str();
    sm->add_option("--samples", p.v_samples)->capture_default_str();

    auto* ht = app.add_subcommand("heat-trace", "relative heat trace on a logarithmic t grid");
    ht->add_option("--t-min", p.t_min)->capture_default_str();
    ht->add_option("--t-max", p.t_max)->capture_default_str();
    ht->add_option("--samples", p.t_samples)->capture_default_str();

    auto* zt = app.add_subcommand("zeta", "relative zeta function in its strip, or Laurent data at s = -1/2");
    zt->add_option("--s", p.s_values, "explicit s values");
    zt->add_option("--s-min", p.s_min)->capture_default_str();
    zt->add_option("--s-max", p.s_max)->capture_default_str();
    zt->add_option("--samples", p.s_samples)->capture_default_str();
    zt->add_flag("--laurent", p.laurent, "residue and finite part at s = -1/2");

    auto* et = app.add_subcommand("eta", "log of the relative eta function");
    et->add_option("--tau-min", p.tau_min)->capture_default_str();
    et->add_option("--tau-max", p.tau_max)->capture_default_str();
    et->add_option("--samples", p.tau_samples)->capture_default_str();
    et->add_option("--n-max", p.n_max, "also report the extrapolated series with n_max terms")->capture_default_str();

    auto* pt = app.add_subcommand("partition", "log Z and vacuum energy");

    auto* cs = app.add_subcommand("casimir", "force -dE_vacuum/da over a sweep in a");
    cs->add_option("--a-min", p.a_min)->capture_default_str();
    cs->add_option("--a-max", p.a_max)->capture_default_str();
    cs->add_option("--steps", p.a_steps)->capture_default_str();
    cs->add_option("--step", p.h, "relative finite-difference step h")->capture_default_str();
    cs->add_option("--route", p.route)
        ->check(CLI::IsMember({"imaginary-axis", "split"}))
        ->capture_default_str();

    auto* vf = app.add_subcommand("verify", "run the internal consistency checks");
    vf->add_option("--tolerance-scale", p.tolerance_scale, "multiplies every tolerance")->capture_default_str();

    std::vector<std::string> argv_store{"deltazeta"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_validation;
    }

    try {
        if (sm->parsed()) return emit(cmd_spectral_measure(cfg, p, err), cfg, out);
        if (ht->parsed()) return emit(cmd_heat_trace(cfg, p, err), cfg, out);
        if (zt->parsed()) return emit(cmd_zeta(cfg, p, err), cfg, out);
        if (et->parsed()) return emit(cmd_eta(cfg, p, err), cfg, out);
        if (pt->parsed()) return emit(cmd_partition(cfg, err), cfg, out);
        if (cs->parsed()) return emit(cmd_casimir(cfg, p, err), cfg, out);
        if (vf->parsed()) return cmd_verify(cfg, p, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << " (partial value " << format_double(e.partial_value()) << ", error estimate "
            << format_double(e.error_estimate()) << ")\n";
        return exit_numerical;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_validation;
}

}  // namespace deltazeta::cli
