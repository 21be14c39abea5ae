#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurlab/errors.hpp"

namespace schurlab {

// Integer partition in canonical form: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    // Parses "3,2,1" or "()" / "" for the empty partition.
    static Partition parse(const std::string& text);

    int size() const;                 // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    // 1-based part access; zero beyond the length.
    int at(int i) const;
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    // Containment of Young diagrams: mu_i <= lambda_i for all i.
    bool contains(const Partition& inner) const;

    std::string to_string() const;  // "(3,2,1)", "()" for empty

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

// Column-multiplicity profile: entry j (1-based) counts columns of height
// exactly j, i.e. lambda_j - lambda_{j+1}. Length = length(lambda).
std::vector<int> column_profile(const Partition& p);

// Rebuilds the partition whose column profile is given (suffix sums).
Partition partition_from_profile(const std::vector<int>& profile);

int odd_column_count(const Partition& p);  // columns of odd height
int odd_row_count(const Partition& p);     // rows of odd length

bool all_parts_even(const Partition& p);
bool conjugate_even(const Partition& p);  // every column height even

enum class ParityFilter { any, even_parts, even_columns };

// All partitions of d with length <= max_len and parts <= max_part,
// in descending lexicographic order.
std::vector<Partition> partitions_of(int d, int max_len, int max_part,
                                     ParityFilter parity = ParityFilter::any);

// All partitions fitting in an m x n box (parts <= m, length <= n), graded
// by size and descending-lex within each grade. This order is fixed; reports
// and golden files depend on it.
std::vector<Partition> partitions_in_box(int max_part, int max_len,
                                         ParityFilter parity = ParityFilter::any);

// All partitions of size <= max_size with length <= max_len, same order.
std::vector<Partition> partitions_up_to(int max_size, int max_len,
                                        ParityFilter parity = ParityFilter::any);

}  // namespace schurlab
