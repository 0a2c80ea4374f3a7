#ifndef HMAP_ERROR_HPP
#define HMAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hmap {

// Mirrors the hm_status values of the public C API (see include/hmap/hmap.h).
enum class ErrorCode : int {
  ok = 0,
  invalid_argument = 1,
  near_zero_constant_term = 2,
  nonvanishing_inner_term = 3,
  radius_out_of_range = 4,
  insufficient_samples = 5,
  critical_point = 6,
  affine_factor_out_of_disk = 7,
  dilatation_not_bounded = 8,
  bad_parameter = 9,
  order_too_low = 10,
  not_normalized = 11,
  stationary_point = 12,
  never_convex = 13,
  parse_error = 14,
  nonfinite_sample = 15,
  io_error = 16,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace hmap

#endif
