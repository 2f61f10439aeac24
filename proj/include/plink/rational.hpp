#ifndef PLINK_RATIONAL_HPP
#define PLINK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace plink {

// Arbitrary-precision integers and rationals.  Every geometric predicate
// in the workbench runs over these types; there is no floating point
// anywhere on a decision path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// -1, 0, +1
inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& r) { return rat_num(r).sign(); }

// Serialization used by the embedding JSON format: "num/den", with the
// "/den" part omitted for integers.
std::string rat_to_string(const Rat& r);

// Parses "num", "num/den" or "-num/den".  Throws plink::Error on junk.
Rat rat_from_string(const std::string& s);

}  // namespace plink

#endif  // PLINK_RATIONAL_HPP
