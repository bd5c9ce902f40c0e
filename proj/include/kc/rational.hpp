#ifndef KC_RATIONAL_HPP
#define KC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kc {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Int num(const Rat& x) { return Int(x.get_num()); }
inline Int den(const Rat& x) { return Int(x.get_den()); }

inline Int pow_int(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& b, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (sgn(b) == 0) throw std::domain_error("pow_rat: zero to negative power");
    return Rat(1) / pow_rat(b, -e);
  }
  Rat r(pow_int(num(b), (unsigned long)e), pow_int(den(b), (unsigned long)e));
  r.canonicalize();
  return r;
}

// Floor of a rational, as an integer.
inline Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// Serialized form is "num" or "num/den", den > 0.
inline std::string rat_to_string(const Rat& x) {
  if (den(x) == 1) return num(x).get_str();
  return num(x).get_str() + "/" + den(x).get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline double to_double(const Rat& x) { return x.get_d(); }

}  // namespace kc

#endif
