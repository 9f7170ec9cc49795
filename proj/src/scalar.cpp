#include "narydiff/scalar.hpp"

#include <cstdio>

namespace narydiff {

std::string ScalarTraits<double>::to_string(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double make_float64(double value) {
  if (!std::isfinite(value)) throw NonFiniteValue("non-finite float64 value");
  return value;
}

}  // namespace narydiff
