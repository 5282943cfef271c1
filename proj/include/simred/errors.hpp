#pragma once

#include <stdexcept>
#include <string>

namespace simred {

/// Malformed or inconsistent input: bad file contents, unknown symbols,
/// alphabet mismatches, out-of-range state identifiers.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An oracle or construction was asked to work beyond its configured size.
class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition that is not an input-format
/// problem (e.g. passing a non-satisfying assignment where one is required).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace simred
