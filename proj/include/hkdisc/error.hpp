#pragma once
#include <stdexcept>
#include <string>

namespace hkdisc {

/// Invalid or unsupported mathematical input (bad matrix, pole, non-uniform
/// configuration, failed validation). The CLI maps it to exit code 1.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed file or serialized value. The CLI maps it to exit code 2.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace hkdisc
