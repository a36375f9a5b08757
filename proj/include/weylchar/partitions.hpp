#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace weylchar {

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }       // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }  // l(lambda)
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based
    int first_part() const { return part(0); }

    /// n_r(lambda): number of parts equal to r.
    int multiplicity(int r) const;

    /// lambda with its first (largest) part removed.
    Partition drop_first() const;

    /// Multiset union of parts, re-sorted.
    Partition union_with(const Partition& other) const;

    /// Multiset difference this \ sub, or nullopt if sub is not contained.
    std::optional<Partition> minus(const Partition& sub) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    // Canonical total order: by size, then by position in the canonical
    // listing of partitions of that size ((n) first, (1^n) last).
    bool operator<(const Partition& o) const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// z_lambda = prod_r r^{n_r} n_r!; n!/z_lambda counts S_n elements of type lambda.
long z_factor(const Partition& lambda);

/// Padded partition lambda[n] = (n-|lambda|, lambda_1, ...), when n-|lambda| >= lambda_1.
std::optional<Partition> pad(const Partition& lambda, int n);

/// All partitions of n in canonical order ((n), (n-1,1), ..., (1^n)); cached.
const std::vector<Partition>& partitions_of(int n);

/// Partition-counting function p(n).
long partition_count(int n);

struct DoublePartition {
    Partition plus;
    Partition minus;

    DoublePartition() = default;
    DoublePartition(Partition p, Partition m) : plus(std::move(p)), minus(std::move(m)) {}

    int size() const { return plus.size() + minus.size(); }

    bool operator==(const DoublePartition& o) const {
        return plus == o.plus && minus == o.minus;
    }
    // Canonical order: total size, then |plus| descending, then plus, then minus.
    bool operator<(const DoublePartition& o) const;
};

/// All double partitions of n: |plus| descending, each side in canonical order.
const std::vector<DoublePartition>& double_partitions_of(int n);

// Text syntax: "3,1" for partitions, "-" for the empty partition,
// "3,1|2" for double partitions.
std::string format_partition(const Partition&);
Partition parse_partition(const std::string&);
std::string format_double_partition(const DoublePartition&);
DoublePartition parse_double_partition(const std::string&);

}  // namespace weylchar
