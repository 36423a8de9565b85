#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace histlab {

// Exact nonnegative integer for HIST / spanning-tree counts. Arbitrary
// precision: arithmetic never wraps.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace histlab
