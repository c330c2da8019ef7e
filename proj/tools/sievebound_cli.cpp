#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sievebound/sievebound.hpp>

namespace {

using nlohmann::json;
using namespace sievebound;

// 0 success, 1 usage/parse, 2 infeasible optimization, 3 local-condition
// failure, 4 resource bound exceeded.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInfeasible = 2,
    kLocalCondition = 3,
    kResource = 4,
};

std::string fmt6(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << v;
    return out.str();
}

struct Options {
    std::string format = "text";
    std::string out_path;
    int kmin = 2;
    int kmax = 10;
    std::string poly;
    std::uint64_t x = 10000;
    int rmax = 8;
    std::uint64_t dmax = 100;
    double alpha = 0.0;  // 0 means: derive from the optimizer
    double beta = 0.0;
};

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

IntPolynomial parse_and_screen(const std::string& text) {
    IntPolynomial f = parse_polynomial(text);
    if (has_rational_root(f))
        std::cerr << "warning: " << f.to_string()
                  << " has a rational root and is reducible; the bound assumes an"
                     " irreducible polynomial\n";
    return f;
}

int run_table(const Options& opt) {
    if (opt.kmin > opt.kmax) throw std::invalid_argument("table: need kmin <= kmax");
    std::vector<BoundResult> rows;
    for (int k = opt.kmin; k <= opt.kmax; ++k) rows.push_back(minimize_r(k));

    Output out(opt.out_path);
    std::ostream& os = out.stream();
    if (opt.format == "json") {
        const auto to_obj = [](const BoundResult& b) {
            return json{{"k", b.k},
                        {"beta0", b.beta0_opt},
                        {"r_real", b.r_real},
                        {"r_int", b.r_int},
                        {"constraint_ok", b.constraint_ok}};
        };
        if (rows.size() == 1) {
            os << to_obj(rows.front()).dump(2) << "\n";
        } else {
            json arr = json::array();
            for (const auto& b : rows) arr.push_back(to_obj(b));
            os << arr.dump(2) << "\n";
        }
    } else if (opt.format == "csv") {
        os << "k,beta0,r_real,r_int,constraint_ok\n";
        for (const auto& b : rows)
            os << b.k << "," << fmt6(b.beta0_opt) << "," << fmt6(b.r_real) << "," << b.r_int
               << "," << (b.constraint_ok ? 1 : 0) << "\n";
    } else {
        os << "k   beta0      r_real      r   constraint\n";
        for (const auto& b : rows)
            os << std::left << std::setw(4) << b.k << std::setw(11) << fmt6(b.beta0_opt)
               << std::setw(12) << fmt6(b.r_real) << std::setw(4) << b.r_int
               << (b.constraint_ok ? "ok" : "VIOLATED") << "\n";
    }
    return kOk;
}

int run_constant(const Options& opt) {
    const SieveConstants c;
    const double value = asymptotic_constant(c);
    const double d0 = solve_delta0(c);
    Output out(opt.out_path);
    std::ostream& os = out.stream();
    if (opt.format == "json") {
        os << json{{"c", value}, {"delta0", d0}}.dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << "name,value\nc," << fmt6(value) << "\ndelta0," << fmt6(d0) << "\n";
    } else {
        os << "c = " << fmt6(value) << "   (c = e^{-gamma} A2 / (2 A1 log 3))\n";
        os << "delta0 = " << fmt6(d0) << "\n";
    }
    return kOk;
}

int run_densities(const Options& opt) {
    const IntPolynomial f = parse_and_screen(opt.poly);
    if (opt.x < 2) throw std::invalid_argument("densities: need x >= 2");
    const auto violation = local_condition_violation(f);

    Output out(opt.out_path);
    std::ostream& os = out.stream();
    if (violation) {
        if (opt.format == "json") {
            os << json{{"poly", f.to_string()},
                       {"local_condition", false},
                       {"offending_prime", violation->get_str()}}
                      .dump(2)
               << "\n";
        } else {
            os << "local condition: FAILED at p = " << violation->get_str() << "\n";
        }
        return kLocalCondition;
    }

    const auto table = density_table(f, 50);
    const auto diag = mertens_diagnostics(f, opt.x);
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& rec : table)
            rows.push_back({{"p", rec.modulus}, {"nu1", rec.nu1}, {"nu2", rec.nu2}});
        os << json{{"poly", f.to_string()},
                   {"local_condition", true},
                   {"densities", rows},
                   {"diagnostics",
                    {{"D1", diag.d1}, {"D2", diag.d2}, {"P1", diag.p1}, {"P2", diag.p2}}}}
                  .dump(2)
           << "\n";
    } else if (opt.format == "csv") {
        os << "p,nu1,nu2\n";
        for (const auto& rec : table)
            os << rec.modulus << "," << rec.nu1 << "," << rec.nu2 << "\n";
    } else {
        os << "polynomial: " << f.to_string() << "\n";
        os << "local condition: ok\n";
        os << "p    nu1  nu2\n";
        for (const auto& rec : table)
            os << std::left << std::setw(5) << rec.modulus << std::setw(5) << rec.nu1
               << rec.nu2 << "\n";
        os << "D1(" << opt.x << ") = " << fmt6(diag.d1) << "\n";
        os << "D2(" << opt.x << ") = " << fmt6(diag.d2) << "\n";
        os << "P1(" << opt.x << ") = " << fmt6(diag.p1) << "\n";
        os << "P2(" << opt.x << ") = " << fmt6(diag.p2) << "\n";
    }
    return kOk;
}

int run_empirical(const Options& opt) {
    const IntPolynomial f = parse_and_screen(opt.poly);
    if (opt.x < 100) throw std::invalid_argument("empirical: need x >= 100");
    const auto violation = local_condition_violation(f);
    if (violation) {
        std::cerr << "local condition: FAILED at p = " << violation->get_str() << "\n";
        return kLocalCondition;
    }

    const int k = f.degree();
    EmpiricalParams params;
    const BoundResult bound = minimize_r(k);
    params.alpha = opt.alpha > 0.0 ? opt.alpha : 0.125 / k;
    params.beta = opt.beta > 0.0 ? opt.beta : bound.beta0_opt / k;
    params.r = bound.r_int;
    params.r_max = opt.rmax;
    params.d_max = opt.dmax;

    const EmpiricalReport report = run_empirical(f, opt.x, params);

    Output out(opt.out_path);
    std::ostream& os = out.stream();
    if (opt.format == "json") {
        os << to_json(report).dump(2) << "\n";
    } else if (opt.format == "csv") {
        os << counts_csv(report);
    } else {
        os << "polynomial: " << f.to_string() << "\n";
        os << "x: " << report.x << "  (range (" << report.x << ", " << 2 * report.x << "])\n";
        os << "X = " << report.set_size << "\n";
        os << "N = " << report.n_max.get_str() << "\n";
        os << "alpha = " << fmt6(params.alpha) << ", beta = " << fmt6(params.beta)
           << ", r = " << params.r << "\n";
        os << "S = " << fmt6(report.weighted_s) << "\n";
        os << "remainder |R_d|: sum = " << fmt6(report.remainder_sum)
           << ", mean = " << fmt6(report.remainder_mean)
           << ", max = " << fmt6(report.remainder_max) << " (d <= " << params.d_max << ")\n";
        os << "r    count\n";
        for (const auto& [r, c] : report.counts)
            os << std::left << std::setw(5) << r << c << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted-sieve almost-prime bounds for polynomial values at primes"};
    app.require_subcommand(1);
    Options opt;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--out", opt.out_path, "Output path (default: stdout)");
    };

    auto* table = app.add_subcommand("table", "Optimal beta0, r(k,beta0) and integer r per degree");
    table->add_option("--kmin", opt.kmin, "Smallest degree")->check(CLI::Range(2, 100));
    table->add_option("--kmax", opt.kmax, "Largest degree")->check(CLI::Range(2, 100));
    add_format(table);

    auto* constant = app.add_subcommand("constant", "Large-degree constant c and crossover delta0");
    add_format(constant);

    auto* densities = app.add_subcommand("densities", "Local densities and Mertens diagnostics");
    densities->add_option("--poly", opt.poly, "Polynomial (\"x^3+2\" or \"2,0,0,1\")")->required();
    densities->add_option("--x", opt.x, "Prime summation limit");
    add_format(densities);

    auto* empirical = app.add_subcommand("empirical", "Almost-prime counts and weighted sum on (x,2x]");
    empirical->add_option("--poly", opt.poly, "Polynomial (\"x^3+2\" or \"2,0,0,1\")")->required();
    empirical->add_option("--x", opt.x, "Dyadic range base");
    empirical->add_option("--rmax", opt.rmax, "Largest r reported")->check(CLI::Range(0, 64));
    empirical->add_option("--dmax", opt.dmax, "Largest modulus for remainder statistics");
    empirical->add_option("--alpha", opt.alpha, "Override sieve exponent alpha");
    empirical->add_option("--beta", opt.beta, "Override weight exponent beta");
    add_format(empirical);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (app.got_subcommand(table)) return run_table(opt);
        if (app.got_subcommand(constant)) return run_constant(opt);
        if (app.got_subcommand(densities)) return run_densities(opt);
        return run_empirical(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Infeasible& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInfeasible;
    } catch (const ConditionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kLocalCondition;
    } catch (const ValueTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResource;
    } catch (const RangeTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResource;
    } catch (const Unfactored& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
