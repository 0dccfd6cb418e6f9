#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace loccol {

using Rational = boost::multiprecision::cpp_rational;

}  // namespace loccol
