#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace decat {

using Integer = boost::multiprecision::cpp_int;

}  // namespace decat
