#include "cornell/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cornell/closed_forms.hpp"
#include "cornell/config.hpp"
#include "cornell/eigensolve.hpp"
#include "cornell/errors.hpp"
#include "cornell/series.hpp"
#include "cornell/spectrum.hpp"

namespace cornell::cli {
namespace {

/// Invalid combination of otherwise well-formed flags; maps to exit 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kMethods{"formula", "expanded", "wkb",    "shooting",
                                        "sho",     "cornell-fit", "coulomb"};

bool needs_linear_only(const std::string& method) {
    return method == "formula" || method == "expanded" || method == "wkb";
}

// Basis spectra cached per (a, l).
class EigenvalueSource {
public:
    double get(const std::string& method, double a, int n, int l) {
        if (method == "formula") return closed_forms::lambda_linear(n, l);
        if (method == "expanded") return closed_forms::lambda_linear_expanded(n, l);
        if (method == "wkb") return closed_forms::wkb_linear(n, l);
        if (method == "cornell-fit") return closed_forms::cornell_eigenvalue(a, n, l);
        if (method == "coulomb") return eigensolve::coulomb_eigenvalue(a, n, l);
        if (method == "shooting") return eigensolve::solve_shooting(a, n, l).lambda;
        if (method == "sho") {
            const eigensolve::BasisOptions opts;
            if (n >= opts.n_basis) {
                throw DomainError("sho: n must be below the basis size " +
                                  std::to_string(opts.n_basis));
            }
            auto key = std::make_pair(a, l);
            auto it = sho_cache_.find(key);
            if (it == sho_cache_.end()) {
                it = sho_cache_.emplace(key, eigensolve::solve_sho_basis(a, l, opts)).first;
            }
            return it->second[static_cast<std::size_t>(n)].lambda;
        }
        throw UsageError("unknown method '" + method + "'");
    }

private:
    std::map<std::pair<double, int>, std::vector<EigenResult>> sho_cache_;
};

void check_method_arguments(const std::string& method, double a) {
    if (method == "coulomb" && !(a > 0.0)) {
        throw UsageError("method coulomb requires --a > 0");
    }
    if (needs_linear_only(method) && a != 0.0) {
        throw UsageError("method " + method + " describes the pure linear potential; use --a 0");
    }
    if (a < 0.0 || !std::isfinite(a)) throw UsageError("--a must be finite and >= 0");
}

struct GlobalOptions {
    std::string format = "table";
    std::string output;
    std::string config_path;
    int precision = 6;
    bool precision_given = false;
    config::ConfigFile config;
};

OutputFormat parse_format(const std::string& s) { return s == "csv" ? OutputFormat::csv : OutputFormat::table; }

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Display width of a UTF-8 string (code points).
std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

struct PotentialFlags {
    std::optional<std::string> preset;
    std::optional<double> mu, b, alpha, C, quark_mass;
};

std::optional<spectrum::PotentialParams> resolve_potential(const PotentialFlags& flags,
                                                           const config::ConfigFile& cfg) {
    std::optional<std::string> preset_name = flags.preset ? flags.preset : cfg.get("preset");
    auto pick = [&](const std::optional<double>& flag, const char* key) {
        return flag ? flag : cfg.get_number(key);
    };
    const auto mu = pick(flags.mu, "mu");
    const auto b = pick(flags.b, "b");
    const auto alpha = pick(flags.alpha, "alpha");
    const auto C = pick(flags.C, "C");
    const auto mq = pick(flags.quark_mass, "quark_mass");
    const bool any_field = mu || b || alpha || C || mq;
    if (!preset_name && !any_field) return std::nullopt;

    spectrum::PotentialParams p;
    bool have_base = false;
    if (preset_name) {
        const auto found = spectrum::preset(*preset_name);
        if (!found) throw UsageError("unknown preset '" + *preset_name + "'");
        p = *found;
        have_base = true;
    }
    if (mq) p.quark_mass = *mq;
    if (mu) {
        p.mu = *mu;
    } else if (mq) {
        p.mu = *mq / 2.0;  // equal-mass quark-antiquark pair
    }
    if (b) p.b = *b;
    if (alpha) p.alpha = *alpha;
    if (C) p.C = *C;
    if (!have_base && (!b || !alpha || !C || !mq)) {
        throw UsageError("a potential needs b, alpha, C and quark_mass (or --preset)");
    }
    try {
        p.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return p;
}

std::vector<double> parse_range(const std::string& spec) {
    // start:stop:step, inclusive of stop within rounding
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw UsageError("--a-range: not a number: '" + item + "'");
        }
        parts.push_back(v);
    }
    if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
        throw UsageError("--a-range expects start:stop:step with step > 0 and stop >= start");
    }
    std::vector<double> out;
    const auto count = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
    return out;
}

void emit(const TextTable& table, const GlobalOptions& g, std::ostream& out) {
    if (g.output.empty()) {
        render(table, parse_format(g.format), out);
        return;
    }
    std::ofstream file(g.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + g.output);
    render(table, parse_format(g.format), file);
}

std::string mass_cell(double v, const GlobalOptions& g) {
    return g.precision_given ? format_significant(v, g.precision) : format_fixed(v, 4);
}

// ---------------------------------------------------------------------------
// eigen

struct EigenArgs {
    std::string method;
    std::optional<double> a;
    int n = 0;
    int l = 0;
    PotentialFlags potential;
};

int cmd_eigen(const EigenArgs& args, const GlobalOptions& g, std::ostream& out) {
    const std::string method = !args.method.empty() ? args.method
                                                    : g.config.get("method").value_or("formula");
    if (std::find(kMethods.begin(), kMethods.end(), method) == kMethods.end()) {
        throw UsageError("unknown method '" + method + "'");
    }
    const auto potential = resolve_potential(args.potential, g.config);
    std::optional<spectrum::ScaledProblem> scaled;
    double a = args.a.value_or(0.0);
    if (potential) {
        if (args.a) throw UsageError("--a conflicts with a physical potential (a is derived from it)");
        scaled = spectrum::scale_to_dimensionless(*potential);
        a = scaled->a;
    }
    check_method_arguments(method, a);

    EigenvalueSource source;
    const double lambda = source.get(method, a, args.n, args.l);

    TextTable t;
    t.header = {"method", "a", "n", "l", "lambda"};
    std::vector<std::string> row{method, format_significant(a, g.precision), std::to_string(args.n),
                                 std::to_string(args.l), format_significant(lambda, g.precision)};
    if (potential) {
        const double energy = spectrum::eigenvalue_to_energy(lambda, *scaled, *potential);
        t.header.insert(t.header.end(), {"E", "mass"});
        row.push_back(mass_cell(energy, g));
        row.push_back(mass_cell(spectrum::meson_mass(energy, *potential), g));
    }
    t.rows.push_back(std::move(row));
    emit(t, g, out);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// scan

struct ScanArgs {
    std::vector<double> a_values;
    std::string a_range;
    std::optional<int> n_max, l_max;
    std::vector<int> n_values, l_values;
    std::vector<std::string> methods{"cornell-fit", "shooting"};
};

std::vector<int> index_list(const std::optional<int>& max, const std::vector<int>& values,
                            const char* name) {
    if (max && !values.empty()) {
        throw UsageError(std::string("give either --") + name + "-max or --" + name + "-values");
    }
    if (!values.empty()) return values;
    std::vector<int> out;
    for (int i = 0; i <= max.value_or(0); ++i) out.push_back(i);
    return out;
}

int cmd_scan(const ScanArgs& args, const GlobalOptions& g, std::ostream& out) {
    std::vector<double> as = args.a_values;
    if (!args.a_range.empty()) {
        const auto r = parse_range(args.a_range);
        as.insert(as.end(), r.begin(), r.end());
    }
    if (as.empty()) throw UsageError("scan: empty a range (use --a or --a-range)");
    const auto ns = index_list(args.n_max, args.n_values, "n");
    const auto ls = index_list(args.l_max, args.l_values, "l");
    if (args.methods.empty()) throw UsageError("scan: no methods given");
    for (const auto& m : args.methods) {
        for (double a : as) check_method_arguments(m, a);
    }

    TextTable t;
    t.header = {"a", "n", "l"};
    for (const auto& m : args.methods) t.header.push_back(m);
    for (std::size_t i = 0; i < args.methods.size(); ++i) {
        for (std::size_t j = i + 1; j < args.methods.size(); ++j) {
            t.header.push_back("relerr_" + args.methods[i] + "_" + args.methods[j]);
        }
    }

    EigenvalueSource source;
    for (double a : as) {
        for (int n : ns) {
            for (int l : ls) {
                std::vector<std::string> row{format_significant(a, g.precision), std::to_string(n),
                                             std::to_string(l)};
                std::vector<std::optional<double>> values;
                for (const auto& m : args.methods) {
                    try {
                        values.push_back(source.get(m, a, n, l));
                        row.push_back(format_significant(*values.back(), g.precision));
                    } catch (const SearchError&) {
                        values.push_back(std::nullopt);
                        row.push_back("ERR");
                        t.failed = true;
                    } catch (const NumericalError&) {
                        values.push_back(std::nullopt);
                        row.push_back("ERR");
                        t.failed = true;
                    }
                }
                for (std::size_t i = 0; i < values.size(); ++i) {
                    for (std::size_t j = i + 1; j < values.size(); ++j) {
                        if (values[i] && values[j]) {
                            const double rel = std::abs(*values[i] - *values[j]) / std::abs(*values[j]);
                            row.push_back(format_significant(rel, 3));
                        } else {
                            row.push_back("ERR");
                        }
                    }
                }
                t.rows.push_back(std::move(row));
            }
        }
    }
    emit(t, g, out);
    return t.failed ? kExitFailure : kExitOk;
}

// ---------------------------------------------------------------------------
// wavefunction

struct WavefunctionArgs {
    double a = 0.0;
    int n = 0;
    int l = 0;
    std::optional<double> xi_max;
    int samples = 200;
};

int cmd_wavefunction(const WavefunctionArgs& args, const GlobalOptions& g, std::ostream& out) {
    if (args.samples < 2) throw UsageError("--samples must be >= 2");
    if (!(args.a >= 0.0)) throw UsageError("--a must be >= 0");
    const auto cfg_xi = g.config.get_number("xi_max");
    const auto lambda = eigensolve::solve_shooting(args.a, args.n, args.l).lambda;
    const double xi_max = args.xi_max ? *args.xi_max : cfg_xi ? *cfg_xi : std::max(lambda, 0.0) + 4.0;
    if (!(xi_max > 0.0)) throw UsageError("--xi-max must be > 0");

    const series::SeriesParams params{args.a, args.l, lambda};
    std::size_t count = series::kDefaultTerms;
    auto coeffs = series::coefficients_by_recurrence(params, count);
    while (!series::radial_wavefunction(coeffs, xi_max).converged) {
        if (count >= 32 * series::kDefaultTerms) throw NumericalError("wavefunction: series did not converge at xi_max");
        count *= 2;
        coeffs = series::coefficients_by_recurrence(params, count);
    }

    std::vector<double> xs, rs, res;
    double peak = 0.0;
    for (int i = 1; i <= args.samples; ++i) {
        const double xi = xi_max * i / args.samples;
        xs.push_back(xi);
        rs.push_back(series::radial_wavefunction(coeffs, xi).value);
        res.push_back(series::ode_residual(coeffs, xi));
        peak = std::max(peak, std::abs(rs.back()));
    }
    if (!(peak > 0.0) || !std::isfinite(peak)) throw NumericalError("wavefunction: degenerate samples");

    TextTable t;
    t.header = {"xi", "R", "residual"};
    const int digits = std::max(g.precision, 10);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        t.rows.push_back({format_significant(xs[i], digits), format_significant(rs[i] / peak, digits),
                          format_significant(std::abs(res[i]) / peak, 3)});
    }
    emit(t, g, out);
    return kExitOk;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string format_significant(double value, int digits) {
    if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, digits);
    std::string s(buf, res.ptr);
    return s == "-0" ? "0" : s;
}

std::string format_fixed(double value, int decimals) {
    if (!std::isfinite(value)) return format_significant(value, 6);
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    return std::string(buf, res.ptr);
}

void render(const TextTable& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::csv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out << ',';
                out << csv_escape(cells[i]);
            }
            out << '\n';
        };
        line(table.header);
        for (const auto& r : table.rows) line(r);
        return;
    }
    std::vector<std::size_t> width(table.header.size(), 0);
    auto measure = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
            width[i] = std::max(width[i], display_width(cells[i]));
        }
    };
    measure(table.header);
    for (const auto& r : table.rows) measure(r);
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << "  ";
            const std::size_t pad = width[i] - display_width(cells[i]);
            out << std::string(pad, ' ') << cells[i];
        }
        out << '\n';
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
}

TextTable build_table(const std::string& which, int precision) {
    TextTable t;
    auto cell = [&](auto&& compute) -> std::string {
        try {
            return format_significant(compute(), precision);
        } catch (const SearchError&) {
        } catch (const NumericalError&) {
        }
        t.failed = true;
        return "ERR";
    };

    if (which == "tab1") {
        t.header = {"block", "n", "l", "a", "this_work", "wkb", "numerical"};
        for (int l = 0; l <= 10; ++l) {
            t.rows.push_back({"0l_a0", "0", std::to_string(l), "0",
                              cell([&] { return closed_forms::lambda_linear(0, l); }),
                              cell([&] { return closed_forms::wkb_linear(0, l); }),
                              cell([&] { return eigensolve::solve_shooting(0.0, 0, l).lambda; })});
        }
        for (int l = 0; l <= 10; ++l) {
            t.rows.push_back({"0l_a1", "0", std::to_string(l), "1",
                              cell([&] { return closed_forms::cornell_eigenvalue(1.0, 0, l); }), "",
                              cell([&] { return eigensolve::solve_shooting(1.0, 0, l).lambda; })});
        }
        for (int n = 0; n <= 10; ++n) {
            t.rows.push_back({"n0_a1", std::to_string(n), "0", "1",
                              cell([&] { return closed_forms::cornell_eigenvalue(1.0, n, 0); }), "",
                              cell([&] { return eigensolve::solve_shooting(1.0, n, 0).lambda; })});
        }
        return t;
    }
    if (which == "tab2") {
        t.header = {"n", "l", "this_work", "wkb", "numerical"};
        for (int l : {1, 8, 14}) {
            for (int n = 1; n <= 14; ++n) {
                t.rows.push_back({std::to_string(n), std::to_string(l),
                                  cell([&] { return closed_forms::lambda_linear(n, l); }),
                                  cell([&] { return closed_forms::wkb_linear(n, l); }),
                                  cell([&] { return eigensolve::solve_shooting(0.0, n, l).lambda; })});
            }
        }
        return t;
    }
    if (which == "tab3") {
        t.header = {"state", "this_work", "numerical", "experiment"};
        try {
            for (const auto& row : spectrum::bottomonium_table()) {
                t.rows.push_back({row.label, format_fixed(row.formula_mass, 4),
                                  format_fixed(row.numerical_mass, 4), format_fixed(row.experiment, 4)});
            }
        } catch (const SearchError&) {
            t.failed = true;
        } catch (const NumericalError&) {
            t.failed = true;
        }
        return t;
    }
    throw DomainError("unknown table '" + which + "' (expected tab1, tab2 or tab3)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Eigenvalues of the radial Schroedinger equation with linear and Cornell potentials",
                 "cornell"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "table"}));
    app.add_option("--output", g.output, "Write output to PATH instead of stdout");
    app.add_option("--config", g.config_path, "key = value configuration file");
    auto* precision_opt =
        app.add_option("--precision", g.precision, "Significant digits for eigenvalues")
            ->check(CLI::Range(1, 17));

    auto* eigen = app.add_subcommand("eigen", "Compute one eigenvalue");
    EigenArgs ea;
    eigen->add_option("--method", ea.method)->check(CLI::IsMember(kMethods));
    eigen->add_option("--a", ea.a, "Dimensionless Coulomb strength")->check(CLI::NonNegativeNumber);
    eigen->add_option("--n", ea.n, "Radial quantum number")->check(CLI::NonNegativeNumber);
    eigen->add_option("--l", ea.l, "Orbital quantum number")->check(CLI::NonNegativeNumber);
    eigen->add_option("--preset", ea.potential.preset, "Named potential (bottomonium-table3)");
    eigen->add_option("--mu", ea.potential.mu, "Reduced mass [GeV]");
    eigen->add_option("--b", ea.potential.b, "String tension [GeV^2]");
    eigen->add_option("--alpha", ea.potential.alpha, "Coulomb coefficient");
    eigen->add_option("--C", ea.potential.C, "Constant shift [GeV]");
    eigen->add_option("--quark-mass", ea.potential.quark_mass, "Constituent quark mass [GeV]");

    auto* table = app.add_subcommand("table", "Reproduce a published table");
    std::string which;
    table->add_option("which", which, "tab1, tab2 or tab3")
        ->required()
        ->check(CLI::IsMember({"tab1", "tab2", "tab3"}));

    auto* scan = app.add_subcommand("scan", "Compare methods over a grid of (a, n, l)");
    ScanArgs sa;
    scan->add_option("--a", sa.a_values, "Comma-separated a values")->delimiter(',');
    scan->add_option("--a-range", sa.a_range, "start:stop:step");
    scan->add_option("--n-max", sa.n_max)->check(CLI::NonNegativeNumber);
    scan->add_option("--l-max", sa.l_max)->check(CLI::NonNegativeNumber);
    scan->add_option("--n-values", sa.n_values)->delimiter(',')->check(CLI::NonNegativeNumber);
    scan->add_option("--l-values", sa.l_values)->delimiter(',')->check(CLI::NonNegativeNumber);
    scan->add_option("--methods", sa.methods)->delimiter(',')->check(CLI::IsMember(kMethods));

    auto* wave = app.add_subcommand("wavefunction", "Sample the series wavefunction");
    WavefunctionArgs wa;
    wave->add_option("--a", wa.a)->check(CLI::NonNegativeNumber);
    wave->add_option("--n", wa.n)->check(CLI::NonNegativeNumber);
    wave->add_option("--l", wa.l)->check(CLI::NonNegativeNumber);
    wave->add_option("--xi-max", wa.xi_max);
    wave->add_option("--samples", wa.samples);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!g.config_path.empty()) {
            g.config = config::load(g.config_path);
            if (app.get_option("--format")->count() == 0) {
                if (auto f = g.config.get("format")) {
                    if (*f != "csv" && *f != "table") throw UsageError("config: format must be csv or table");
                    g.format = *f;
                }
            }
            if (precision_opt->count() == 0) {
                if (auto p = g.config.get_number("precision")) {
                    if (*p < 1 || *p > 17) throw UsageError("config: precision must be in [1, 17]");
                    g.precision = static_cast<int>(*p);
                    g.precision_given = true;
                }
            }
        }
        if (precision_opt->count() > 0) g.precision_given = true;

        if (eigen->parsed()) return cmd_eigen(ea, g, out);
        if (scan->parsed()) return cmd_scan(sa, g, out);
        if (wave->parsed()) return cmd_wavefunction(wa, g, out);
        if (table->parsed()) {
            const auto t = build_table(which, g.precision);
            emit(t, g, out);
            if (t.failed) {
                err << "cornell: some table cells could not be computed (ERR)\n";
                return kExitFailure;
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "cornell: " << e.what() << '\n';
        return kExitUsage;
    } catch (const config::ConfigError& e) {
        err << "cornell: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "cornell: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "cornell: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace cornell::cli
