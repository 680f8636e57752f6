#pragma once

#include <stdexcept>
#include <string>

namespace semiweight {

enum class ErrorCode {
  invalid_argument,
  empty_generators,
  non_coprime_generators,
  not_closed,
  wrong_cardinality,
  genus_mismatch,
  no_nonzero_residue_element,
  hypothesis_violated,
  construction_out_of_domain,
  precondition_violated,
  genus_too_small,
  empty_gap_set,
  resource_limit,
  io_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace semiweight
