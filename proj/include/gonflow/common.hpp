#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gonflow {

// Malformed or inconsistent input (files, instances, witnesses). CLI maps
// this to exit code 3.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap (enumeration size, ILP node budget, breadth limit) was
// exceeded. Distinct from "no": callers must never read this as an answer.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// All weights, capacities and sums are machine-width signed integers.
// Inputs are unary-scale so overflow indicates a broken caller; abort loudly.
inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

}  // namespace gonflow
