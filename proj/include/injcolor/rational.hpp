#ifndef INJCOLOR_RATIONAL_HPP
#define INJCOLOR_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <sstream>
#include <string>

namespace inj {

/// Exact rational arithmetic; density and charge values never touch
/// floating point.
using Rational = boost::rational<long long>;

inline const Rational kEightThirds{8, 3};

inline std::string to_string(const Rational& r)
{
    std::ostringstream os;
    os << r.numerator() << "/" << r.denominator();
    return os.str();
}

/// Decimal rendering for reports; annotation only, never compared.
inline double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace inj

#endif
