#include "schurlab/strips.hpp"

#include <algorithm>
#include <numeric>

namespace schurlab {

CellSet::CellSet(std::vector<int> heights) : heights_(std::move(heights)) {
    for (int h : heights_)
        if (h < 0) throw UsageError("cell set heights must be nonnegative");
    while (!heights_.empty() && heights_.back() == 0) heights_.pop_back();
}

CellSet CellSet::from_partition(const Partition& p) {
    return CellSet(conjugate(p).parts());
}

int CellSet::height_at(int col) const {
    if (col < 1) throw UsageError("columns are indexed from 1");
    return col <= width() ? heights_[col - 1] : 0;
}

bool CellSet::contains(int col, int row) const { return row >= 1 && row <= height_at(col); }

int CellSet::cells() const { return std::accumulate(heights_.begin(), heights_.end(), 0); }

bool CellSet::is_partition_diagram() const {
    for (size_t i = 1; i < heights_.size(); ++i)
        if (heights_[i] > heights_[i - 1]) return false;
    return true;
}

Partition CellSet::to_partition() const {
    if (!is_partition_diagram()) throw UsageError("cell set is not a partition diagram");
    // heights are the conjugate's parts
    return conjugate(Partition(heights_));
}

int CellSet::odd_column_count() const {
    return static_cast<int>(std::count_if(heights_.begin(), heights_.end(),
                                          [](int h) { return h % 2 == 1; }));
}

std::vector<int> CellSet::incompatible_rows() const {
    std::set<int> rows;
    for (size_t i = 1; i < heights_.size(); ++i) {
        // columns i and i+1 (1-based): rows in (heights_[i-1], heights_[i]] have a gap
        for (int r = heights_[i - 1] + 1; r <= heights_[i]; ++r) rows.insert(r);
    }
    return {rows.begin(), rows.end()};
}

std::string CellSet::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < heights_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(heights_[i]);
    }
    return out + "]";
}

std::vector<Partition> horizontal_strips(const Partition& lambda) {
    // row interlacing: lambda_{i+1} <= mu_i <= lambda_i
    std::vector<Partition> out;
    std::vector<int> mu(lambda.length());
    auto rec = [&](auto&& self, int row) -> void {
        if (row == lambda.length()) {
            out.emplace_back(mu);
            return;
        }
        int hi = lambda.at(row + 1);
        int lo = lambda.at(row + 2);
        for (int v = hi; v >= lo; --v) {
            mu[row] = v;
            self(self, row + 1);
        }
        mu[row] = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<CellSet> generalized_subdiagrams(const Partition& mu,
                                             const std::optional<Partition>& ambient) {
    const Partition& shape = ambient.value_or(mu);
    if (!shape.contains(mu)) throw UsageError("ambient shape must contain the subdiagram");
    const int width = shape.at(1);
    const std::vector<int> shape_cols = conjugate(shape).parts();
    const std::vector<int> mu_cols = conjugate(mu).parts();
    auto col_height = [](const std::vector<int>& cols, int x) {
        return x <= static_cast<int>(cols.size()) ? cols[x - 1] : 0;
    };

    std::vector<CellSet> out;
    std::vector<int> nu(width, 0);
    // scan columns left to right; block boundaries are where the ambient height drops
    auto rec = [&](auto&& self, int col) -> void {
        if (col > width) {
            out.emplace_back(std::vector<int>(nu.begin(), nu.begin() + width));
            return;
        }
        int h_mu = col_height(mu_cols, col);
        bool same_block = col > 1 && col_height(shape_cols, col) == col_height(shape_cols, col - 1);
        int ceiling = same_block ? nu[col - 2] : h_mu;  // weak decrease within a block
        for (int h = std::min(h_mu, ceiling); h >= std::max(0, h_mu - 1); --h) {
            nu[col - 1] = h;
            self(self, col + 1);
        }
        nu[col - 1] = 0;
    };
    if (width == 0)
        out.emplace_back(std::vector<int>{});
    else
        rec(rec, 1);
    return out;
}

std::vector<StripPair> enumerate_pairs(const Partition& lambda, const PairFilter& filter) {
    std::vector<StripPair> out;
    for (const Partition& mu : horizontal_strips(lambda)) {
        for (CellSet& nu : generalized_subdiagrams(mu, lambda)) {
            const auto bad_rows = nu.incompatible_rows();
            if (filter.compatible_only && !bad_rows.empty()) continue;
            if (static_cast<int>(bad_rows.size()) < filter.min_incompatible) continue;
            bool ok = true;
            for (int r : filter.required_rows)
                if (!std::binary_search(bad_rows.begin(), bad_rows.end(), r)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            out.push_back(StripPair{mu, std::move(nu)});
        }
    }
    return out;
}

std::string render_triple(const Partition& lambda, const Partition& mu, const CellSet& nu) {
    std::string out;
    for (int row = 1; row <= std::max(lambda.length(), 1); ++row) {
        int len = lambda.at(row);
        if (len == 0 && lambda.length() > 0) break;
        std::string line;
        for (int col = 1; col <= len; ++col) {
            if (nu.contains(col, row))
                line += '.';
            else if (mu.at(row) >= col)
                line += 'o';
            else
                line += 'x';
        }
        if (line.empty()) line = "(empty)";
        out += line;
        out += '\n';
    }
    if (lambda.empty()) out = "(empty)\n";
    return out;
}

TripleWeight triple_weight(const Partition& lambda, const StripPair& pair) {
    TripleWeight w;
    w.odd_cols_nu = pair.nu.odd_column_count();
    w.mid_cells = pair.mu.size() - pair.nu.cells();
    w.outer_cells = lambda.size() - pair.mu.size();
    return w;
}

}  // namespace schurlab
