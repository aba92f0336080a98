#include "qzeta/bernoulli.hpp"

namespace qzeta {

std::vector<Rational> bernoulli_numbers(std::size_t upto) {
    std::vector<Rational> b(upto + 1);
    b[0] = 1;
    for (std::size_t m = 1; m <= upto; ++m) {
        Rational acc = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (b[j] == 0) continue;
            acc += Rational(binomial(m + 1, j)) * b[j];
        }
        b[m] = -acc / Rational(static_cast<long>(m + 1));
    }
    return b;
}

}  // namespace qzeta
