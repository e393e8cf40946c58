#include <numeric>
#include <stdexcept>
#include <vector>

#include "cobord/faithfulness/faithfulness.hpp"

namespace cobord::faithfulness {

namespace {

mpz_class power_sum(unsigned long a, unsigned long b, unsigned long n) {
  mpz_class x, y;
  mpz_ui_pow_ui(x.get_mpz_t(), a, n);
  mpz_ui_pow_ui(y.get_mpz_t(), b, n);
  return x + y;
}

std::vector<mpz_class> prime_factors(mpz_class v) {
  std::vector<mpz_class> primes;
  for (unsigned long d = 2; mpz_class(d) * d <= v; d += (d == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), d) == 0) continue;
    primes.emplace_back(d);
    while (mpz_divisible_ui_p(v.get_mpz_t(), d) != 0) mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), d);
  }
  if (v > 1) primes.push_back(v);
  return primes;
}

bool divides_power_sum(const mpz_class& p, unsigned long a, unsigned long b, unsigned long k) {
  mpz_class x, y;
  const mpz_class ma(a), mb(b);
  mpz_powm_ui(x.get_mpz_t(), ma.get_mpz_t(), k, p.get_mpz_t());
  mpz_powm_ui(y.get_mpz_t(), mb.get_mpz_t(), k, p.get_mpz_t());
  return (x + y) % p == 0;
}

}  // namespace

ZsigmondyWitness zsigmondy_witness(unsigned long a, unsigned long b, unsigned long n) {
  if (!(a > b && b >= 1)) throw std::invalid_argument("zsigmondy_witness requires a > b >= 1");
  if (std::gcd(a, b) != 1) throw std::invalid_argument("zsigmondy_witness requires gcd(a, b) = 1");
  if (n == 0) throw std::invalid_argument("zsigmondy_witness requires n >= 1");
  if (n == 3 && a == 2 && b == 1) return {};

  for (const auto& p : prime_factors(power_sum(a, b, n))) {
    bool primitive = true;
    for (unsigned long k = 1; k < n && primitive; ++k) primitive = !divides_power_sum(p, a, b, k);
    if (primitive) return {p};
  }
  throw std::logic_error("no primitive prime divisor of " + std::to_string(a) + "^" + std::to_string(n) + "+" +
                         std::to_string(b) + "^" + std::to_string(n));
}

}  // namespace cobord::faithfulness
