#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vgit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: a file that does not parse, a linearization off the
// cross-section, an invalid tree or curve record.
struct ValidationError : Error {
  using Error::Error;
};

// An enumeration (2^n subsets, Bell(n) partitions, all trees on n legs)
// would exceed the configured cap. Raise the cap explicitly to proceed.
struct CapExceededError : Error {
  CapExceededError(std::string msg, long limit_) : Error(std::move(msg)), limit(limit_) {}
  long limit;
};

// A genericity-requiring operation was called on a wall. Carries the violated
// hyperplanes as (subset mask, k) pairs in canonical form.
struct OnWallError : Error {
  OnWallError(std::string msg, std::vector<std::pair<std::uint64_t, int>> walls_)
      : Error(std::move(msg)), walls(std::move(walls_)) {}
  std::vector<std::pair<std::uint64_t, int>> walls;
};

}  // namespace vgit
