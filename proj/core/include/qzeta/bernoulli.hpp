#pragma once

#include <cstddef>
#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

/// B_0 .. B_upto with the convention B_1 = -1/2, i.e. the coefficients of
/// t/(e^t - 1) = sum_i B_i t^i / i!. Computed by clearing denominators in
/// that identity: sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
std::vector<Rational> bernoulli_numbers(std::size_t upto);

}  // namespace qzeta
