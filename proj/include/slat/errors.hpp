#pragma once

#include <stdexcept>
#include <string>

namespace slat {

enum class Err {
  duplicate_name,
  unknown_name,
  cycle_detected,
  parse,
  io,
  too_large,
  not_meet_closed,
  not_lattice,
  not_distributive,
  not_bounded,
  not_bounded_distributive,
  not_zero_dimensional,
  not_a_base,
  not_sup_morphism,
  spec_infeasible,
  unknown_theorem,
  precondition_violated,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void raise(Err kind, const std::string& msg) { throw Error(kind, msg); }

const char* err_name(Err kind);

}  // namespace slat
