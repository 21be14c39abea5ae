#include "schurlab/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schurlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw UsageError("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) {
    std::string t = text;
    std::erase_if(t, [](char c) { return c == '(' || c == ')' || c == ' '; });
    if (t.empty()) return Partition();
    std::vector<int> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("cannot parse partition part: '" + item + "'");
        }
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::at(int i) const {
    if (i < 1) throw UsageError("partition parts are indexed from 1");
    return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition conjugate(const Partition& p) {
    if (p.empty()) return Partition();
    std::vector<int> cols(p.parts()[0], 0);
    for (int part : p.parts())
        for (int x = 0; x < part; ++x) ++cols[x];
    return Partition(std::move(cols));
}

std::vector<int> column_profile(const Partition& p) {
    std::vector<int> profile(p.length());
    for (int j = 1; j <= p.length(); ++j) profile[j - 1] = p.at(j) - p.at(j + 1);
    return profile;
}

Partition partition_from_profile(const std::vector<int>& profile) {
    std::vector<int> parts(profile.size());
    int acc = 0;
    for (int j = static_cast<int>(profile.size()) - 1; j >= 0; --j) {
        if (profile[j] < 0) throw UsageError("column profile entries must be nonnegative");
        acc += profile[j];
        parts[j] = acc;
    }
    return Partition(std::move(parts));
}

int odd_column_count(const Partition& p) {
    int count = 0;
    const auto profile = column_profile(p);
    for (size_t j = 0; j < profile.size(); ++j)
        if ((j + 1) % 2 == 1) count += profile[j];
    return count;
}

int odd_row_count(const Partition& p) {
    int count = 0;
    for (int part : p.parts())
        if (part % 2 == 1) ++count;
    return count;
}

bool all_parts_even(const Partition& p) {
    return std::all_of(p.parts().begin(), p.parts().end(), [](int v) { return v % 2 == 0; });
}

bool conjugate_even(const Partition& p) { return all_parts_even(conjugate(p)); }

namespace {

bool parity_ok(const Partition& p, ParityFilter parity) {
    switch (parity) {
        case ParityFilter::any: return true;
        case ParityFilter::even_parts: return all_parts_even(p);
        case ParityFilter::even_columns: return conjugate_even(p);
    }
    return true;
}

void gen(int remaining, int max_part, int len_left, std::vector<int>& stack,
         std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    if (len_left == 0) return;
    int hi = std::min(remaining, max_part);
    // ceil(remaining / len_left): any smaller first part cannot absorb the rest
    int lo = (remaining + len_left - 1) / len_left;
    for (int part = hi; part >= lo; --part) {
        stack.push_back(part);
        gen(remaining - part, part, len_left - 1, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d, int max_len, int max_part, ParityFilter parity) {
    if (d < 0) throw UsageError("partition size must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> stack;
    gen(d, max_part, max_len, stack, out);
    if (parity != ParityFilter::any)
        std::erase_if(out, [&](const Partition& p) { return !parity_ok(p, parity); });
    return out;
}

std::vector<Partition> partitions_in_box(int max_part, int max_len, ParityFilter parity) {
    if (max_part < 0 || max_len < 0) throw UsageError("box dimensions must be nonnegative");
    std::vector<Partition> out;
    for (int d = 0; d <= max_part * max_len; ++d) {
        auto grade = partitions_of(d, max_len, max_part, parity);
        out.insert(out.end(), grade.begin(), grade.end());
    }
    return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_len, ParityFilter parity) {
    std::vector<Partition> out;
    for (int d = 0; d <= max_size; ++d) {
        auto grade = partitions_of(d, max_len, std::max(max_size, 0), parity);
        out.insert(out.end(), grade.begin(), grade.end());
    }
    return out;
}

}  // namespace schurlab
