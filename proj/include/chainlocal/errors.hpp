#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chainlocal {

// Bad user input (malformed permutation, unknown catalog name, non-prime p).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically invalid request (element not in group, H not a subgroup).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size guard was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Violation of an internal invariant; always a bug if thrown.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

#define CHAINLOCAL_CHECK(cond, msg)                                       \
  do {                                                                    \
    if (!(cond)) throw ::chainlocal::InternalError(std::string("check failed: ") + (msg)); \
  } while (0)

// Size guards for everything that is exponential in the worst case.
struct Limits {
  std::uint64_t max_group_order = 100000;
  int max_degree = 64;
  std::uint64_t max_p_subgroups = 20000;
  std::uint64_t max_chains = 1000000;
  std::uint64_t max_aux_prime = 200000000;
};

inline const Limits& default_limits() {
  static const Limits limits;
  return limits;
}

}  // namespace chainlocal
