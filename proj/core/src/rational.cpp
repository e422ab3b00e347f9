#include "hqds/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace hqds {

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::size_t slash = text.find('/');
  std::string num = text.substr(0, slash == std::string::npos ? text.size() : slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!valid_int(num) || !valid_int(den)) return std::nullopt;
  mpq_class q;
  if (q.set_str(num + "/" + den, 10) != 0) return std::nullopt;
  if (sgn(q.get_den()) == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

std::optional<Rational> reconstruct_rational(double x, unsigned long max_den,
                                             double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents p/q of x.
  double v = x;
  mpz_class p0 = 1, q0 = 0, p1, q1;
  double a0 = std::floor(v);
  p1 = mpz_class(a0);
  q1 = 1;
  for (int iter = 0; iter < 64; ++iter) {
    Rational cand(p1, q1);
    cand.canonicalize();
    if (std::fabs(cand.get_d() - x) <= tol) return cand;
    if (q1 > mpz_class(max_den)) break;
    double frac = v - std::floor(v);
    if (frac < 1e-15) break;
    v = 1.0 / frac;
    double a = std::floor(v);
    if (a > 1e18) break;
    mpz_class ai(a);
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  Rational cand(p1, q1);
  cand.canonicalize();
  if (cand.get_den() <= max_den && std::fabs(cand.get_d() - x) <= tol)
    return cand;
  return std::nullopt;
}

}  // namespace hqds
