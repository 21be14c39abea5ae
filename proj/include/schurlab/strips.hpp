#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schurlab/partition.hpp"

namespace schurlab {

// Cell set in which every column is a prefix (cells (x,1..h_x)), but column
// heights need not decrease, so the set need not be a partition diagram.
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(std::vector<int> heights);
    static CellSet from_partition(const Partition& p);

    const std::vector<int>& heights() const { return heights_; }
    int width() const { return static_cast<int>(heights_.size()); }
    int height_at(int col) const;  // 1-based column, zero outside
    bool contains(int col, int row) const;
    int cells() const;

    bool is_partition_diagram() const;  // heights weakly decreasing
    Partition to_partition() const;     // requires is_partition_diagram

    int odd_column_count() const;

    // Rows r such that some cell (x+1, r) is present while (x, r) is absent
    // for x >= 1; empty exactly when the set is a partition diagram.
    std::vector<int> incompatible_rows() const;

    bool operator==(const CellSet& o) const { return heights_ == o.heights_; }
    bool operator<(const CellSet& o) const { return heights_ < o.heights_; }

    std::string to_string() const;  // "[h1,h2,...]" column heights

private:
    std::vector<int> heights_;  // heights_[x-1] = cells in column x; no trailing zeros
};

struct StripPair {
    Partition mu;
    CellSet nu;
};

// All mu such that lambda/mu is a horizontal strip (row interlacing).
std::vector<Partition> horizontal_strips(const Partition& lambda);

// The nu-menu for mu relative to an ambient shape (ambient contains mu and
// mu is a horizontal strip of it): per ambient block of equal column height,
// each nu column drops at most one cell from mu and heights weakly decrease
// within the block, empty columns in place. With the ambient omitted the
// shape itself serves as ambient.
std::vector<CellSet> generalized_subdiagrams(const Partition& mu,
                                             const std::optional<Partition>& ambient = std::nullopt);

struct PairFilter {
    bool compatible_only = false;     // nu must be a partition interlacing mu
    std::vector<int> required_rows;   // every listed row must be incompatible
    int min_incompatible = 0;
};

// All (mu, nu) with mu a horizontal strip of lambda and nu drawn from the
// ambient-lambda menu, optionally filtered.
std::vector<StripPair> enumerate_pairs(const Partition& lambda, const PairFilter& filter = {});

// Exponent triple of a pair's monomial weight: odd columns of nu, cells of
// mu minus nu, cells of lambda minus mu.
struct TripleWeight {
    int odd_cols_nu;
    int mid_cells;
    int outer_cells;
};
TripleWeight triple_weight(const Partition& lambda, const StripPair& pair);

// ASCII picture of the nested triple: 'x' marks lambda/mu, 'o' marks mu/nu,
// '.' marks nu cells.
std::string render_triple(const Partition& lambda, const Partition& mu, const CellSet& nu);

}  // namespace schurlab
