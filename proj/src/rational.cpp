#include "kdvgal/rational.hpp"

#include "kdvgal/errors.hpp"

namespace kdvgal {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text, bool canonical) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw DomainError("malformed rational literal '" + s + "'");
  }
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw DomainError("zero denominator in '" + s + "'");
  Rational r(n, d);
  if (canonical) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1 || (slash != std::string::npos && d == 1) || num[0] == '+') {
      throw DomainError("non-canonical rational literal '" + s + "'");
    }
  }
  r.canonicalize();
  return r;
}

Rational factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational fraction(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational double_factorial(int n) {
  if (n < -1) throw DomainError("double factorial below -1");
  if (n <= 0) return Rational(1);
  Integer f;
  mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational power(const Rational& base, int e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return power(Rational(1) / base, -e);
  }
  Rational num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
  return num / den;
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

std::vector<Rational> bernoulli_numbers(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

}  // namespace kdvgal
