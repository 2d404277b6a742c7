#ifndef SOSQ_BIGINT_HPP
#define SOSQ_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace sosq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

} // namespace sosq

#endif // SOSQ_BIGINT_HPP
