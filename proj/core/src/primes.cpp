#include "tau/primes.hpp"

#include <array>

namespace tau {

namespace {

constexpr std::array<unsigned long, 25> kSmallPrimes = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

void reduce(BigInt& x, const BigInt& n) { mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t()); }

// x / 2 mod n for odd n.
void halve(BigInt& x, const BigInt& n) {
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  x >>= 1;
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

bool is_prime_u64(std::uint64_t n) { return is_probable_prime(BigInt(static_cast<unsigned long>(n))); }

bool is_strong_probable_prime(const BigInt& n, unsigned long base) {
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  BigInt x;
  const BigInt a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = x * x;
    reduce(x, n);
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

bool is_strong_lucas_probable_prime(const BigInt& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return false;

  // Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1.
  long d_param = 5;
  for (;;) {
    const BigInt d_big = d_param;
    const int j = mpz_jacobi(d_big.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0) {
      BigInt g = abs(d_big);
      if (g != n) return false;
    }
    d_param = d_param > 0 ? -(d_param + 2) : -(d_param - 2);
  }
  const long p_param = 1;
  const long q_param = (1 - d_param) / 4;

  BigInt delta = n + 1;
  const auto s = mpz_scan1(delta.get_mpz_t(), 0);
  delta >>= s;

  BigInt u = 1;
  BigInt v = p_param;
  BigInt q = q_param;
  reduce(q, n);
  BigInt qk = q;
  const BigInt d_mod = [&] {
    BigInt t = d_param;
    reduce(t, n);
    return t;
  }();

  const auto top = mpz_sizeinbase(delta.get_mpz_t(), 2) - 1;
  for (auto bit = static_cast<long>(top) - 1; bit >= 0; --bit) {
    u = u * v;
    reduce(u, n);
    v = v * v - 2 * qk;
    reduce(v, n);
    qk = qk * qk;
    reduce(qk, n);
    if (mpz_tstbit(delta.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
      BigInt u_next = p_param * u + v;
      BigInt v_next = d_mod * u + p_param * v;
      reduce(u_next, n);
      reduce(v_next, n);
      halve(u_next, n);
      halve(v_next, n);
      u = std::move(u_next);
      v = std::move(v_next);
      qk = qk * q;
      reduce(qk, n);
    }
  }

  if (u == 0 || v == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    v = v * v - 2 * qk;
    reduce(v, n);
    if (v == 0) return true;
    qk = qk * qk;
    reduce(qk, n);
  }
  return false;
}

bool is_probable_prime(const BigInt& value, const PrimalityOptions& options) {
  const BigInt n = abs(value);
  if (n < 2) return false;
  for (unsigned long p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < 97UL * 97UL) return true;
  if (!is_strong_probable_prime(n, 2)) return false;
  if (!is_strong_lucas_probable_prime(n)) return false;
  for (int i = 0; i < options.extra_rounds; ++i) {
    const unsigned long base = kSmallPrimes[1 + (i % (kSmallPrimes.size() - 1))];
    if (!is_strong_probable_prime(n, base)) return false;
  }
  return true;
}

}  // namespace tau
