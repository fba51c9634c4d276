#include "cagekit/numeric.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace cagekit {

const std::vector<uint64_t>& small_primes(uint64_t limit) {
    static std::vector<uint64_t> primes;
    static uint64_t sieved_to = 0;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (limit > sieved_to) {
        std::vector<char> comp(limit + 1, 0);
        primes.clear();
        for (uint64_t i = 2; i <= limit; ++i) {
            if (comp[i]) continue;
            primes.push_back(i);
            for (uint64_t j = i * i; j <= limit; j += i) comp[j] = 1;
        }
        sieved_to = limit;
    }
    return primes;
}

std::vector<std::pair<Integer, int>> factorize(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
    Integer m = int_abs(n);
    std::vector<std::pair<Integer, int>> out;
    const unsigned long trial_bound = 10'000'000;
    auto strip = [&](unsigned long p) {
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e) out.emplace_back(Integer(p), e);
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel; stop once p^2 exceeds the remaining cofactor.
    for (unsigned long p = 5; p <= trial_bound; p += 6) {
        if (mpz_cmp_ui(m.get_mpz_t(), 1) == 0) break;
        if (Integer(p) * p > m) break;
        strip(p);
        strip(p + 2);
    }
    if (m > 1) {
        Integer bound2 = Integer(trial_bound) * trial_bound;
        if (m > bound2 && mpz_probab_prime_p(m.get_mpz_t(), 40) == 0) {
            throw std::runtime_error("factorize: composite cofactor beyond trial bound");
        }
        out.emplace_back(m, 1);
    }
    return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    auto fac = factorize(n);
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace cagekit
