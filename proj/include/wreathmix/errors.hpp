#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "wreathmix/rational.hpp"

namespace wreathmix {

// Structural invariant of an input failed. Carries a stable invariant name
// so callers and tests can distinguish which check rejected the input.
class validation_error : public std::runtime_error {
 public:
  validation_error(std::string invariant, const std::string& detail)
      : std::runtime_error(invariant + ": " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

// A requested enumeration or state space exceeds the configured cap.
class capacity_error : public std::runtime_error {
 public:
  capacity_error(Int count, std::uint64_t cap)
      : std::runtime_error("requested size " + count.get_str() +
                           " exceeds cap " + std::to_string(cap)),
        count_(std::move(count)),
        cap_(cap) {}

  const Int& count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  Int count_;
  std::uint64_t cap_;
};

}  // namespace wreathmix
