#include "groupmeans/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "groupmeans/errors.hpp"

namespace groupmeans {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den))
    throw parse_error("malformed rational: '" + text + "'");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    throw parse_error("malformed rational: '" + text + "'");
  if (q.get_den() == 0) throw parse_error("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_to_decimal(const Rat& q, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half away from zero
  mpz_class twice = 2 * q.get_num() * scale;
  mpz_class scaled;
  mpz_class den2 = 2 * q.get_den();
  mpz_fdiv_q(scaled.get_mpz_t(), mpz_class(twice + q.get_den()).get_mpz_t(),
             den2.get_mpz_t());
  bool neg = scaled < 0;
  mpz_class mag = neg ? mpz_class(-scaled) : scaled;
  mpz_class whole = mag / scale, frac = mag % scale;
  std::string fs = frac.get_str();
  fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
  return (neg ? "-" : "") + whole.get_str() + "." + fs;
}

Rat rat_from_double(double x) {
  Rat q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

double rat_to_double(const Rat& q) { return q.get_d(); }

Rat rat_floor(const Rat& q) {
  mpz_class z;
  mpz_fdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rat(z);
}

Rat rat_ceil(const Rat& q) {
  mpz_class z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rat(z);
}

}  // namespace groupmeans
