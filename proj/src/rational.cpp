#include "moduli/rational.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace moduli {

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw std::domain_error("negative power of zero");
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return invert ? Rational(d, n) : Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    if (n >= 0) {
        Int r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // n < 0: n(n-1)...(n-k+1)/k!, equivalently (-1)^k C(-n+k-1, k).
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(-n + k - 1), static_cast<unsigned long>(k));
    return (k % 2 == 0) ? r : Int(-r);
}

Int int_pow(long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 1, 0);  // r = 1
    Int b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache{Rational(1), Rational(-1, 2)};
    return cache;
}
std::map<long, Rational>& bernoulli_overrides() {
    static std::map<long, Rational> overrides;
    return overrides;
}

}  // namespace

Rational bernoulli(long q) {
    if (q < 0) throw std::domain_error("Bernoulli number of negative index");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& overrides = bernoulli_overrides();
    if (auto it = overrides.find(q); it != overrides.end()) return it->second;
    auto& cache = bernoulli_cache();
    // sum_{j<=n} C(n+1,j) B_j = 0 for n >= 1, which pins B_1 = -1/2.
    while (static_cast<long>(cache.size()) <= q) {
        long n = static_cast<long>(cache.size());
        Rational sum(0);
        for (long j = 0; j < n; ++j) sum += Rational(binomial(n + 1, j)) * cache[j];
        cache.push_back(-sum / Rational(n + 1));
    }
    return cache[q];
}

void set_bernoulli_override(long q, const Rational& value) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    bernoulli_overrides()[q] = value;
}

void clear_bernoulli_overrides() {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    bernoulli_overrides().clear();
}

}  // namespace moduli
