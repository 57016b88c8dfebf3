#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sod/checked.hpp"

namespace sod {

/// A Young diagram: nonincreasing nonnegative parts, stored without
/// trailing zeros.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the canonical text form "3,1,1"; the empty string is the
    /// empty diagram.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    /// Row length, 0-indexed; rows past the end read as 0.
    int part(int i) const { return i >= 0 && i < rows() ? parts_[i] : 0; }
    i64 size() const;
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// A dominant GL(rank) weight: nonincreasing integers of a fixed length.
/// Trailing zeros are significant here, unlike for diagrams.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<int> parts);

    /// Parses "2,1,0" and pads nonnegative tails with zeros up to `rank`.
    /// Weights ending in a negative part must be written out in full.
    static Weight parse(const std::string& text, int rank);
    static Weight from_partition(const Partition& p, int rank);
    static Weight zero(int rank);

    const std::vector<int>& parts() const { return parts_; }
    int rank() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    i64 sum() const;

    /// Drops trailing zeros; requires all parts nonnegative.
    Partition to_partition() const;

    std::string to_string() const;

    auto operator<=>(const Weight&) const = default;

private:
    std::vector<int> parts_;
};

/// Conjugate diagram (rows and columns exchanged).
Partition transpose(const Partition& p);

/// mu_i <= lambda_i for all i.
bool contains(const Partition& lambda, const Partition& mu);

/// The fixed linear order on diagrams used throughout: size descending,
/// ties broken by lexicographically smaller parts first. Any strict
/// inclusion mu < lambda puts lambda strictly earlier.
bool box_order_less(const Partition& a, const Partition& b);

/// All diagrams with at most k rows and at most w columns, in box order.
struct Box {
    int k = 0;
    int w = 0;
    std::vector<Partition> members;

    int size() const { return static_cast<int>(members.size()); }
    /// Position in the box order; -1 when absent.
    int index_of(const Partition& p) const;
};

Box enumerate_box(int k, int w);

/// Members of the box with exactly k rows, in box order.
std::vector<Partition> exactly_k_rows_subset(const Box& box);

/// All diagrams contained in lambda (lambda itself included), in box order.
std::vector<Partition> sub_diagrams(const Partition& lambda);

/// (-a_m, ..., -a_1): the highest weight of the dual representation.
Weight dual_weight(const Weight& a);

/// Adds c to every part; tensoring with the c-th power of the determinant.
Weight twist(const Weight& a, int c);

}  // namespace sod
