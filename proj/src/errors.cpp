#include "sections/errors.hpp"

#include <sstream>

namespace sections {

namespace {

std::string pole_message(std::complex<double> z) {
  std::ostringstream os;
  os.precision(17);
  os << "denominator vanishes near z = (" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

std::string circle_message(double r, double m) {
  std::ostringstream os;
  os.precision(17);
  os << "zero on or near |z| = " << r << " (min modulus " << m << ")";
  return os.str();
}

}  // namespace

PoleProximityError::PoleProximityError(std::complex<double> z)
    : std::runtime_error(pole_message(z)), z_(z) {}

ZeroOnCircleError::ZeroOnCircleError(double r, double min_modulus)
    : std::runtime_error(circle_message(r, min_modulus)), r_(r), min_modulus_(min_modulus) {}

}  // namespace sections
