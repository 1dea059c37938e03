#include "tightspan/rational.hpp"

#include <stdexcept>

namespace tightspan {

Rat rat_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& value) {
  Rat reduced = value;
  reduced.canonicalize();
  return reduced.get_str();
}

bool rat_is_integer(const Rat& value) {
  return value.get_den() == 1;
}

long rat_to_long(const Rat& value) {
  if (!rat_is_integer(value)) {
    throw std::invalid_argument("rational is not an integer: " + rat_to_string(value));
  }
  if (!value.get_num().fits_slong_p()) {
    throw std::out_of_range("integer out of long range: " + rat_to_string(value));
  }
  return value.get_num().get_si();
}

Rat dyadic(int k) {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned>(k));
  return Rat(mpz_class(1), den);
}

Rat floor_to_multiple(const Rat& x, const Rat& step) {
  Rat ratio = x / step;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
  return Rat(q) * step;
}

long rat_ceil_long(const Rat& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  if (!q.fits_slong_p()) {
    throw std::out_of_range("ceil out of long range");
  }
  return q.get_si();
}

std::string function_to_string(const std::vector<Rat>& values) {
  std::string out = "(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += rat_to_string(values[i]);
  }
  out += ")";
  return out;
}

}  // namespace tightspan
