#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurlab/series.hpp"
#include "schurlab/weights.hpp"

namespace schurlab {

using Json = nlohmann::ordered_json;

enum class CheckKind { series, exact_poly, point, limit };

struct CatalogEntry {
    std::string id;
    CheckKind kind;
    std::string statement;  // self-contained one-line description
    // defaults used when the caller does not override
    int n, m, D, trials;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& id);
std::string catalog_listing();  // one line per id, for usage errors and --help

struct CheckConfig {
    std::string id;
    int n = -1, m = -1, D = -1, trials = -1;  // negative means "use catalog default"
    uint64_t seed = 1;
    WeightMutation mutation = WeightMutation::none;

    CheckConfig resolved() const;  // fills defaults from the catalog
};

struct CheckReport {
    CheckConfig config;
    bool pass = false;
    Json witness;  // null when passing
    long long elapsed_ms = 0;

    Json to_json() const;
    std::string to_text() const;  // single line, no timing
};

// Truncated product expansion of a list of inverse-linear factors times
// plain polynomial factors.
TruncatedSeries inverse_product(const ContextPtr& ctx, const std::vector<MultiPoly>& inv_terms,
                                const std::vector<MultiPoly>& poly_factors, int cap);

// Weighted Schur sum over partitions of size <= D with at most n rows.
enum class SeriesWeight {
    unit,
    even_rows_indicator,
    even_columns_indicator,
    odd_column_power,       // a^(odd columns)
    odd_row_power,          // a^(odd rows)
    two_parameter,          // f(a,b)
    three_parameter,        // f(a,b,c)
    two_parameter_conjugate,
    three_parameter_conjugate,
};
TruncatedSeries weighted_schur_series(SeriesWeight w, const ContextPtr& ctx, int n, int D,
                                      WeightMutation mutation = WeightMutation::none);

// Point evaluation of the infinite-product side at y_i = x_i^(xi_i); the
// parameter slots accept any rationals (use 0 to drop a factor pair).
Rational product_side_at(const std::vector<Rational>& xs, const SignVector& xi,
                         const std::vector<Rational>& params);

// Rectangle-bounded weighted Schur sums evaluated at a point.
Rational rect_sum_two_at(int m, const std::vector<Rational>& xs, const Rational& a,
                         const Rational& b);
Rational rect_sum_plain_at(int m, const std::vector<Rational>& xs);        // weight one
Rational rect_sum_even_at(int m, const std::vector<Rational>& xs);        // even rows
Rational rect_sum_even_cols_at(int m, const std::vector<Rational>& xs);   // even columns

// One identity check; throws UsageError for bad parameters and
// SamplingError when the retry budget runs out.
CheckReport run_check(const CheckConfig& config);

// Runs checks as independent jobs (SCHURLAB_THREADS caps the worker count);
// reports come back in configuration order.
std::vector<CheckReport> run_suite(const std::vector<CheckConfig>& configs);

std::vector<CheckConfig> default_suite(uint64_t seed);

// Serialization used by the CLI and the golden tests.
Json suite_report_json(const std::vector<CheckReport>& reports);
std::vector<CheckConfig> suite_from_json(const Json& doc);

}  // namespace schurlab
