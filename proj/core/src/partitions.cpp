#include "qzeta/partitions.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace qzeta {

GenPartition::GenPartition(std::initializer_list<int> parts) {
    for (int p : parts) add_part(p);
}

GenPartition GenPartition::from_parts(const std::vector<int>& parts) {
    GenPartition g;
    for (int p : parts) g.add_part(p);
    return g;
}

void GenPartition::add_part(int part, int mult) {
    if (part == 0) throw std::invalid_argument("generalized partition parts must be nonzero");
    if (mult <= 0) throw std::invalid_argument("part multiplicity must be positive");
    mult_[part] += mult;
}

int GenPartition::multiplicity(int part) const {
    auto it = mult_.find(part);
    return it == mult_.end() ? 0 : it->second;
}

long GenPartition::length() const {
    long l = 0;
    for (const auto& [p, m] : mult_) l += m;
    return l;
}

long GenPartition::size() const {
    long n = 0;
    for (const auto& [p, m] : mult_) n += static_cast<long>(p) * m;
    return n;
}

long GenPartition::positive_size() const {
    long n = 0;
    for (const auto& [p, m] : mult_)
        if (p > 0) n += static_cast<long>(p) * m;
    return n;
}

long GenPartition::square_sum() const {
    long n = 0;
    for (const auto& [p, m] : mult_) n += static_cast<long>(p) * p * m;
    return n;
}

Integer GenPartition::factorial() const {
    Integer f(1);
    for (const auto& [p, m] : mult_) f *= qzeta::factorial(static_cast<unsigned long>(m));
    return f;
}

std::vector<int> GenPartition::to_parts() const {
    std::vector<int> out;
    for (const auto& [p, m] : mult_)
        for (int i = 0; i < m; ++i) out.push_back(p);
    return out;
}

std::string to_string(const GenPartition& part) {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (int p : part.to_parts()) {
        if (!first) out << ",";
        out << p;
        first = false;
    }
    out << ")";
    return out.str();
}

std::vector<GenPartition> balanced_partitions(int length, int max_part) {
    std::vector<GenPartition> out;
    std::vector<int> parts;
    // nondecreasing part sequences over [-max_part, max_part] \ {0}
    std::function<void(int, int, long)> descend = [&](int remaining, int min_part, long sum) {
        if (remaining == 0) {
            if (sum == 0) out.push_back(GenPartition::from_parts(parts));
            return;
        }
        for (int p = min_part; p <= max_part; ++p) {
            if (p == 0) continue;
            const long rest = remaining - 1;
            if (sum + p + rest * max_part < 0) continue;  // cannot climb back to zero
            if (sum + p + rest * p > 0) break;            // later parts only grow the sum
            parts.push_back(p);
            descend(remaining - 1, p, sum + p);
            parts.pop_back();
        }
    };
    descend(length, -max_part, 0);
    return out;
}

}  // namespace qzeta
