#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace cubecop {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

// Survival-argument lower bound on the cop number: 2^m for n=2m,
// C(2m+1, m+1)/2^m for n=2m+1. Exact.
Rational lower_bound(int n);

// prod_{i=1..upto} (1 - i/(n-i+1)), exact. Telescopes to 2^-m (n=2m) and
// 2^m/C(2m+1, m+1) (n=2m+1) at upto = m = floor(n/2).
Rational survival_product(int n, int upto);

// prod_{i=1..upto} (1 - (1+1/i^3) i/(n-i+1)), exact. Throws std::domain_error
// when a factor is not positive (the i=m boundary at tiny n).
Rational inflated_survival_product(int n, int upto);

// Partial product prod_{i=1..terms} (1 + 1/i^2); converges to sinh(pi)/pi.
double p_constant(long terms);

// Number of terms used for P in budget computations and reports.
inline constexpr long kPConstantTerms = 1000000;

// Sufficient cop budget: ceil(c ln n 2^m) with c = 210P for n=2m, and
// ceil(c ln n 2^(m+1)/sqrt(n)) with c = 35P/3 for n=2m+1.
long long recommended_cop_count(int n, std::optional<double> c_override = std::nullopt);

// Chernoff reference bound on P(B_k): 2(n-k+1) exp(-eps_k^2 mu / 3).
double chernoff_bk_bound(int n, int k, long long n_k);

// Middle-level size C(n, ceil(n/2)): the covering upper bound, exact.
BigInt trivial_upper_bound(int n);

// Smallest integer >= the survival lower bound.
long long lower_bound_ceil(int n);

struct BoundReport {
    int n = 0;
    Rational lower;
    BigInt trivial_upper;
    long long recommended = 0;
    double c_used = 0.0;
    double p_estimate = 0.0;
    long p_terms = 0;

    std::string text() const;
    std::string json() const;
};

BoundReport make_bound_report(int n, std::optional<double> c_override = std::nullopt);

}  // namespace cubecop
