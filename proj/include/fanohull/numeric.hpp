#ifndef FANOHULL_NUMERIC_HPP
#define FANOHULL_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanohull {

// All arithmetic in this library is exact. Integers are arbitrary
// precision, rationals are kept in lowest terms with positive
// denominator by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

// gcd of all entries, nonnegative; 0 for the zero vector.
Int content(const IntVec& v);

// v / content(v); the zero vector is returned unchanged.
IntVec primitive(IntVec v);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(IntVec a);
IntVec vec_scale(const IntVec& a, const Int& c);
Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
bool is_zero(const IntVec& v);

RatVec to_rat(const IntVec& v);
// Fails if some entry has a denominator.
IntVec to_int(const RatVec& v);
bool is_integral(const RatVec& v);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g, g >= 0.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int rat_floor(const Rat& q) { return floor_div(num(q), den(q)); }
inline Int rat_ceil(const Rat& q) { return ceil_div(num(q), den(q)); }

}  // namespace fanohull

#endif
