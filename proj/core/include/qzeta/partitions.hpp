#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

/// Multiset of nonzero integer parts with positive multiplicities; the
/// index set of Heisenberg monomials. Derived quantities follow the usual
/// conventions: length = sum of multiplicities, size = sum of part*mult.
class GenPartition {
public:
    GenPartition() = default;
    GenPartition(std::initializer_list<int> parts);
    static GenPartition from_parts(const std::vector<int>& parts);

    const std::map<int, int>& multiplicities() const { return mult_; }
    int multiplicity(int part) const;

    long length() const;         // l(lambda)
    long size() const;           // |lambda|
    long positive_size() const;  // |lambda|_+
    long square_sum() const;     // s(lambda) = sum i^2 m_i
    Integer factorial() const;   // prod m_i!

    std::vector<int> to_parts() const;  // ascending

    friend bool operator==(const GenPartition& a, const GenPartition& b) {
        return a.mult_ == b.mult_;
    }
    friend bool operator<(const GenPartition& a, const GenPartition& b) {
        return a.mult_ < b.mult_;
    }

private:
    void add_part(int part, int mult = 1);
    std::map<int, int> mult_;
};

std::string to_string(const GenPartition& p);

/// All generalized partitions with the given length, total size zero, and
/// part magnitudes bounded by max_part, in a deterministic order.
std::vector<GenPartition> balanced_partitions(int length, int max_part);

}  // namespace qzeta
