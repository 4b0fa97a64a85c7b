#include "tau/verify/oracles.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tau::oracle {

namespace {

using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<100>>;

Dec to_dec(const mpz_class& n) { return Dec(n.get_str(10)); }

std::string str(const Dec& v) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(59) << v;
  return out.str();
}

// In-place multiplication of a dense series by (1 - q^n), truncated.
void times_one_minus(std::vector<mpz_class>& coeffs, std::size_t n) {
  for (std::size_t i = coeffs.size(); i-- > n;) coeffs[i] -= coeffs[i - n];
}

}  // namespace

std::vector<mpz_class> naive_delta(std::size_t limit) {
  // Coefficients of prod (1 - q^n)^24 up to degree limit - 1, then shift by q.
  std::vector<mpz_class> series(limit, 0);
  if (limit == 0) return series;
  series[0] = 1;
  for (std::size_t n = 1; n < limit; ++n) {
    for (int rep = 0; rep < 24; ++rep) times_one_minus(series, n);
  }
  return series;  // series[i] = tau(i + 1)
}

std::vector<mpz_class> naive_cube(std::size_t limit) {
  std::vector<mpz_class> series(limit + 1, 0);
  series[0] = 1;
  for (std::size_t n = 1; n <= limit; ++n) {
    for (int rep = 0; rep < 3; ++rep) times_one_minus(series, n);
  }
  return series;
}

std::vector<std::uint64_t> sieve(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  out.push_back(2);
  // odd[i] represents 2i + 1
  std::vector<char> odd_composite(n / 2 + 1, 0);
  for (std::uint64_t i = 1; 2 * i + 1 <= n; ++i) {
    if (odd_composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    out.push_back(p);
    for (std::uint64_t m = p * p; m <= n; m += 2 * p) odd_composite[m / 2] = 1;
  }
  return out;
}

std::vector<std::int64_t> signed_primes_in_class(std::uint64_t x, unsigned b) {
  std::vector<std::int64_t> out;
  for (std::uint64_t q : sieve(x)) {
    if (q == 2) continue;
    if (q % 23 == b % 23) out.push_back(static_cast<std::int64_t>(q));
    if ((23 - q % 23) % 23 == b % 23) out.push_back(-static_cast<std::int64_t>(q));
  }
  return out;
}

std::uint64_t count_signed_primes_in_class(std::uint64_t x, unsigned b) {
  return signed_primes_in_class(x, b).size();
}

std::vector<mpz_class> symbolic_even_poly(unsigned k) {
  // Polynomials in (x, s) as map (x power, s power) -> coefficient.
  using Poly = std::map<std::pair<unsigned, unsigned>, mpz_class>;
  Poly prev{{{0, 0}, 1}};  // F_0
  Poly cur{{{0, 1}, 1}};   // F_1 = s
  const unsigned target = 2 * k;
  if (target == 0) return {1};
  for (unsigned m = 2; m <= target; ++m) {
    Poly next;
    for (const auto& [mono, c] : cur) next[{mono.first, mono.second + 1}] += c;
    for (const auto& [mono, c] : prev) next[{mono.first + 1, mono.second}] -= c;
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::vector<mpz_class> out(k + 1, 0);
  for (const auto& [mono, c] : cur) {
    if (c == 0) continue;
    const auto [x_pow, s_pow] = mono;
    if (s_pow % 2 != 0 || x_pow + s_pow / 2 != k) {
      throw std::logic_error("F_{2k} is not a homogeneous polynomial in x and y = s^2");
    }
    out[x_pow] = c;
  }
  return out;
}

std::string k_hi(const mpz_class& N) {
  // log_4 N written as log(N) / log(4).
  return str(boost::multiprecision::log(to_dec(N)) / boost::multiprecision::log(Dec(4)));
}

std::string bvdp_count_bound(unsigned k) {
  const Dec lk = boost::multiprecision::log(Dec(k));
  // (k+1) log 4 = 2 (k+1) log 2; 200 log k expanded via log(200) + log(log k).
  const Dec first = 4 * boost::multiprecision::log(2 * Dec(k + 1) * boost::multiprecision::log(Dec(2)));
  const Dec inner = boost::multiprecision::log(Dec(200)) + boost::multiprecision::log(lk);
  return str(first + Dec(96000) * lk * lk * inner);
}

std::string a_bound(const mpz_class& N) {
  const Dec n = to_dec(N);
  const Dec ln = boost::multiprecision::log(n);
  // N^{9/10} = exp(0.9 log N)
  return str(boost::multiprecision::exp(Dec(9) * ln / 10) * ln / (2 * boost::multiprecision::log(Dec(2))));
}

std::string b_bound(unsigned M) {
  Dec ten_m = 1;
  for (unsigned i = 0; i < M; ++i) ten_m *= 10;
  return str(Dec(7) / Dec(11) * ten_m / (boost::multiprecision::log(Dec(10)) * Dec(M + 1)));
}

std::string pi_bracket_lower(const mpz_class& x) {
  const Dec xx = to_dec(x);
  return str(Dec(9) * xx / (Dec(110) * boost::multiprecision::log(xx)));
}

std::string pi_bracket_upper(const mpz_class& x) {
  const Dec xx = to_dec(x);
  return str(xx / (Dec(10) * boost::multiprecision::log(xx)));
}

}  // namespace tau::oracle
