#pragma once

#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

// Boost 1.74 probes const_iterator when converting to cpp_int; Eigen 3.4 dense types
// declare it as void, which breaks overload resolution under C++20.
namespace boost::multiprecision::detail {
template <class C>
  requires requires(const C& c) {
    typename C::StorageKind;
    c.derived();
  }
struct is_byte_container<C> : boost::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace contri {

using Integer = boost::multiprecision::cpp_int;
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

}  // namespace contri
