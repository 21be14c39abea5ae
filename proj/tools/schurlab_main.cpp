// Command line front end: `verify` runs identity checks and emits a report,
// `show` prints Schur expansions, weight polynomials, pair families, and
// expansion coefficients in canonical text form.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schurlab/identities.hpp"
#include "schurlab/strips.hpp"
#include "schurlab/symfunc.hpp"
#include "schurlab/weights.hpp"

namespace {

using namespace schurlab;

std::vector<Rational> parse_point(const std::string& csv) {
    std::vector<Rational> out;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) out.push_back(parse_rational(cur));
    if (out.empty()) throw UsageError("empty coordinate list");
    return out;
}

int run_verify(const std::string& id, const std::string& suite_path, bool seed_given,
               uint64_t seed, int n, int m, int D, int trials, bool mutate,
               const std::string& format, const std::string& out_path) {
    std::vector<CheckConfig> configs;
    if (!id.empty()) {
        CheckConfig c;
        c.id = id;
        c.n = n;
        c.m = m;
        c.D = D;
        c.trials = trials;
        c.seed = seed;
        configs.push_back(c);
    } else if (!suite_path.empty()) {
        std::ifstream in(suite_path);
        if (!in) throw UsageError("cannot open suite file: " + suite_path);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw UsageError("suite file is not valid JSON: " + std::string(e.what()));
        }
        if (doc.is_array()) doc = Json{{"seed", seed}, {"checks", std::move(doc)}};
        else if (doc.is_object() && (seed_given || !doc.contains("seed"))) doc["seed"] = seed;
        configs = suite_from_json(doc);
    } else {
        configs = default_suite(seed);
    }
    if (mutate)
        for (auto& c : configs) c.mutation = WeightMutation::drop_delta_term;

    std::vector<CheckReport> reports = run_suite(configs);

    std::string payload;
    if (format == "json") {
        payload = suite_report_json(reports).dump(2) + "\n";
    } else {
        for (const auto& r : reports) payload += r.to_text() + "\n";
    }
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot open output file: " + out_path);
        out << payload;
    }
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

int run_show_schur(const std::string& lambda_str, int n) {
    Partition lambda = Partition::parse(lambda_str);
    std::cout << schur(lambda, n).to_string() << "\n";
    return 0;
}

int run_show_weight(const std::string& lambda_str, const std::string& kind) {
    Partition lambda = Partition::parse(lambda_str);
    MultiPoly w = kind == "ab"    ? weight_two(lambda)
                  : kind == "abc" ? weight_three(lambda)
                                  : weight_three_pairs(lambda);
    std::cout << w.to_string() << "\n";
    return 0;
}

int run_show_strips(const std::string& lambda_str, const std::string& family, bool count_only) {
    Partition lambda = Partition::parse(lambda_str);
    PairFilter filter;
    filter.compatible_only = (family == "C");
    std::vector<StripPair> pairs = enumerate_pairs(lambda, filter);
    if (count_only) {
        std::cout << pairs.size() << "\n";
        return 0;
    }
    int k = 0;
    for (const auto& pair : pairs) {
        ++k;
        std::vector<int> bad = pair.nu.incompatible_rows();
        std::string rows = "none";
        if (!bad.empty()) {
            rows.clear();
            for (size_t i = 0; i < bad.size(); ++i)
                rows += (i ? "," : "") + std::to_string(bad[i]);
        }
        std::cout << "# " << k << "  mu=" << pair.mu.to_string()
                  << "  nu=" << pair.nu.to_string() << "  incompatible rows: " << rows << "\n";
        std::cout << render_triple(lambda, pair.mu, pair.nu) << "\n";
    }
    std::cout << "count: " << pairs.size() << "\n";
    return 0;
}

int run_show_beta(const std::string& signs, int m, const std::string& a_str,
                  const std::string& b_str, const std::string& x_csv) {
    SignVector xi = parse_signs(signs);
    std::vector<Rational> xs = parse_point(x_csv);
    if (xi.size() != xs.size())
        throw UsageError("sign word length must match the number of coordinates");
    Rational a = parse_rational(a_str);
    Rational b = parse_rational(b_str);
    std::cout << rat_str(beta_value(xi, m, a, b, xs)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for bounded Schur sums, strip pair families, and "
                 "their product and determinant identities"};
    app.require_subcommand(1);

    std::string id, suite_path, format = "json", out_path;
    int n = -1, m = -1, D = -1, trials = -1;
    uint64_t seed = 1;
    bool mutate = false;

    CLI::App* verify = app.add_subcommand("verify", "run identity checks and emit a report");
    CLI::Option* id_opt =
        verify->add_option("--id", id, "single identity id from the catalog");
    CLI::Option* suite_opt =
        verify->add_option("--suite", suite_path, "JSON suite file: an array of checks or an "
                                                  "object {seed, checks}");
    suite_opt->excludes(id_opt);
    verify->add_option("--n", n, "number of series variables")->needs(id_opt);
    verify->add_option("--m", m, "rectangle width bound")->needs(id_opt);
    verify->add_option("--D", D, "series truncation degree")->needs(id_opt);
    verify->add_option("--trials", trials, "random points per check")->needs(id_opt);
    CLI::Option* seed_opt = verify->add_option("--seed", seed, "base seed for point sampling");
    verify->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");
    verify->add_flag("--mutate-weight", mutate,
                     "testing hook: drop one inclusion-exclusion term from the "
                     "three-parameter weight")
        ->group("");

    CLI::App* show = app.add_subcommand("show", "print objects in canonical text form");
    show->require_subcommand(1);

    std::string lambda_str, kind, family, signs_str, a_str, b_str, x_csv;
    int show_n = 0, beta_m = 0;
    bool count_only = false;

    CLI::App* sschur = show->add_subcommand("schur", "Schur polynomial expansion");
    sschur->add_option("--lambda", lambda_str, "partition, comma separated parts")->required();
    sschur->add_option("--n", show_n, "number of variables")->required();

    CLI::App* sweight = show->add_subcommand("weight", "column-multiplicity weight polynomial");
    sweight->add_option("--lambda", lambda_str, "partition, comma separated parts")->required();
    sweight->add_option("--kind", kind, "parameter set; oracle recomputes abc by strip-pair enumeration")
        ->required()
        ->check(CLI::IsMember({"ab", "abc", "oracle"}));

    CLI::App* sstrips = show->add_subcommand("strips", "strip pair family with diagrams");
    sstrips->add_option("--lambda", lambda_str, "partition, comma separated parts")->required();
    sstrips->add_option("--family", family, "B = full pair family, C = compatible pairs")
        ->required()
        ->check(CLI::IsMember({"B", "C"}));
    sstrips->add_flag("--count", count_only, "print only the number of pairs");

    CLI::App* sbeta = show->add_subcommand("beta", "expansion coefficient at a rational point");
    sbeta->add_option("--signs", signs_str, "sign word such as ++- ")->required();
    sbeta->add_option("--m", beta_m, "rectangle width bound")->required();
    sbeta->add_option("--a", a_str, "first parameter, rational")->required();
    sbeta->add_option("--b", b_str, "second parameter, rational")->required();
    sbeta->add_option("--x", x_csv, "coordinates, comma separated rationals")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed())
            return run_verify(id, suite_path, seed_opt->count() > 0, seed, n, m, D, trials,
                              mutate, format, out_path);
        if (sschur->parsed()) return run_show_schur(lambda_str, show_n);
        if (sweight->parsed()) return run_show_weight(lambda_str, kind);
        if (sstrips->parsed()) return run_show_strips(lambda_str, family, count_only);
        if (sbeta->parsed()) return run_show_beta(signs_str, beta_m, a_str, b_str, x_csv);
    } catch (const schurlab::SingularPoint& e) {
        std::cerr << "error: singular point: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
