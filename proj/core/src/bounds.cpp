#include "cubecop/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cubecop {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational lower_bound(int n) {
    if (n < 1) throw std::domain_error("lower_bound: n must be >= 1");
    const int m = n / 2;
    BigInt pow2 = BigInt(1) << m;
    if (n % 2 == 0) return Rational(pow2);
    return Rational(binomial(n, m + 1), pow2);
}

long long lower_bound_ceil(int n) {
    Rational lb = lower_bound(n);
    BigInt q = numerator(lb) / denominator(lb);
    if (q * denominator(lb) != numerator(lb)) q += 1;
    return q.convert_to<long long>();
}

Rational survival_product(int n, int upto) {
    if (upto < 0 || upto > n / 2)
        throw std::domain_error("survival_product: upto must be in [0, floor(n/2)]");
    Rational p = 1;
    for (int i = 1; i <= upto; ++i)
        p *= Rational(n - 2 * i + 1, n - i + 1);
    return p;
}

Rational inflated_survival_product(int n, int upto) {
    if (upto < 0 || upto > n / 2)
        throw std::domain_error("inflated_survival_product: upto must be in [0, floor(n/2)]");
    Rational p = 1;
    for (int i = 1; i <= upto; ++i) {
        // 1 - (1 + 1/i^3) i/(n-i+1) = (i^3 (n-i+1) - i^4 - i) / (i^3 (n-i+1))
        BigInt i3 = BigInt(i) * i * i;
        BigInt num = i3 * (n - i + 1) - i3 * i - i;
        if (num <= 0)
            throw std::domain_error(
                "inflated_survival_product: factor at i=" + std::to_string(i) +
                " is not positive for n=" + std::to_string(n));
        p *= Rational(num, i3 * (n - i + 1));
    }
    return p;
}

double p_constant(long terms) {
    if (terms < 1) throw std::domain_error("p_constant: terms must be >= 1");
    double p = 1.0;
    for (long i = 1; i <= terms; ++i) p *= 1.0 + 1.0 / (double(i) * double(i));
    return p;
}

namespace {
double p_constant_cached() {
    static const double p = p_constant(kPConstantTerms);
    return p;
}
}  // namespace

long long recommended_cop_count(int n, std::optional<double> c_override) {
    if (n < 2) throw std::domain_error("recommended_cop_count: n must be >= 2");
    const int m = n / 2;
    const double P = p_constant_cached();
    double c, scale;
    if (n % 2 == 0) {
        c = c_override.value_or(210.0 * P);
        scale = std::ldexp(1.0, m);  // 2^m
    } else {
        c = c_override.value_or(35.0 * P / 3.0);
        scale = std::ldexp(1.0, m + 1) / std::sqrt(double(n));
    }
    return (long long)std::ceil(c * std::log(double(n)) * scale);
}

double chernoff_bk_bound(int n, int k, long long n_k) {
    if (k < 1 || k > n / 2) throw std::domain_error("chernoff_bk_bound: bad round");
    if (n_k < 0) throw std::domain_error("chernoff_bk_bound: negative survivor count");
    const double p = double(k) / double(n - k + 1);
    const double mu = double(n_k) * p;
    const double eps = 1.0 / (double(k) * k * k);
    return 2.0 * double(n - k + 1) * std::exp(-eps * eps * mu / 3.0);
}

BigInt trivial_upper_bound(int n) {
    if (n < 1) throw std::domain_error("trivial_upper_bound: n must be >= 1");
    return binomial(n, (n + 1) / 2);
}

BoundReport make_bound_report(int n, std::optional<double> c_override) {
    BoundReport r;
    r.n = n;
    r.lower = lower_bound(n);
    r.trivial_upper = trivial_upper_bound(n);
    r.p_estimate = p_constant_cached();
    r.p_terms = kPConstantTerms;
    if (n >= 2) {
        r.recommended = recommended_cop_count(n, c_override);
        r.c_used = c_override.value_or(n % 2 == 0 ? 210.0 * r.p_estimate
                                                  : 35.0 * r.p_estimate / 3.0);
        if (r.recommended < lower_bound_ceil(n))
            throw std::logic_error("bound report: recommended budget below the lower bound");
    }
    return r;
}

namespace {
std::string rational_str(const Rational& q) {
    std::ostringstream o;
    o << numerator(q);
    if (denominator(q) != 1) o << "/" << denominator(q);
    return o.str();
}
}  // namespace

std::string BoundReport::text() const {
    std::ostringstream o;
    o << "n                    " << n << "\n"
      << "lower bound          " << rational_str(lower) << "\n"
      << "covering upper bound " << trivial_upper << "\n";
    if (n >= 2) {
        o << "recommended budget   " << recommended << "  (c=" << c_used << ")\n";
    }
    o << "P estimate           " << p_estimate << "  (" << p_terms << " terms)\n";
    return o.str();
}

std::string BoundReport::json() const {
    std::ostringstream o;
    o << "{\"n\":" << n << ",\"lower\":\"" << rational_str(lower) << "\",\"trivial_upper\":\""
      << trivial_upper << "\",\"recommended\":" << recommended << ",\"c\":" << c_used
      << ",\"p_estimate\":" << p_estimate << ",\"p_terms\":" << p_terms << "}";
    return o.str();
}

}  // namespace cubecop
