#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace saw {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition.
class invalid_argument : public error {
 public:
  using error::error;
};

/// A requested computation does not fit the configured memory cap.
class resource_error : public error {
 public:
  resource_error(const std::string& what, std::uint64_t required_bytes,
                 std::uint64_t cap_bytes)
      : error(what + " (estimated " + std::to_string(required_bytes) +
              " bytes, cap " + std::to_string(cap_bytes) + " bytes)"),
        required_bytes_(required_bytes),
        cap_bytes_(cap_bytes) {}

  std::uint64_t required_bytes() const noexcept { return required_bytes_; }
  std::uint64_t cap_bytes() const noexcept { return cap_bytes_; }

 private:
  std::uint64_t required_bytes_;
  std::uint64_t cap_bytes_;
};

/// A rejection sampler ran out of attempts.
class sampling_budget_exhausted : public error {
 public:
  explicit sampling_budget_exhausted(std::uint64_t attempts)
      : error("sampling budget exhausted after " + std::to_string(attempts) +
              " attempts"),
        attempts_(attempts) {}

  std::uint64_t attempts() const noexcept { return attempts_; }

 private:
  std::uint64_t attempts_;
};

/// An exhaustive oracle was asked for an instance beyond its cap.
class cap_exceeded : public error {
 public:
  using error::error;
};

}  // namespace saw
