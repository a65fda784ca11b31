#include "bruhat/error.hpp"

namespace bruhat {

namespace {

std::string describe(int dimension, int max_dimension, std::size_t required,
                     std::size_t cap) {
  std::string msg = "state space of dimension " + std::to_string(dimension);
  if (dimension > max_dimension) {
    msg += " exceeds the dimension cap " + std::to_string(max_dimension);
  } else {
    msg += " needs " + std::to_string(required) +
           " bytes, over the memory cap of " + std::to_string(cap) + " bytes";
  }
  return msg;
}

}  // namespace

DimensionTooLarge::DimensionTooLarge(int dimension, int max_dimension,
                                     std::size_t required_bytes, std::size_t cap_bytes)
    : Error(describe(dimension, max_dimension, required_bytes, cap_bytes)),
      dimension_(dimension),
      max_dimension_(max_dimension),
      required_bytes_(required_bytes),
      cap_bytes_(cap_bytes) {}

}  // namespace bruhat
