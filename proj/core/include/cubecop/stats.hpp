#pragma once

#include <boost/math/distributions/chi_squared.hpp>

#include <stdexcept>
#include <vector>

namespace cubecop {

// Pearson goodness-of-fit against the uniform distribution over the cells.
// Returns the upper-tail p-value.
inline double chi_square_uniform_pvalue(const std::vector<long long>& counts) {
    if (counts.size() < 2) throw std::invalid_argument("chi-square: need >= 2 cells");
    long long total = 0;
    for (long long c : counts) total += c;
    if (total == 0) throw std::invalid_argument("chi-square: no observations");
    const double expected = double(total) / double(counts.size());
    double stat = 0.0;
    for (long long c : counts) {
        const double d = double(c) - expected;
        stat += d * d / expected;
    }
    boost::math::chi_squared dist(double(counts.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace cubecop
