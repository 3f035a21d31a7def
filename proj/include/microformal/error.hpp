#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad input: parity mismatch, chart mismatch, unknown symbol, bad caps.
struct ValidationError : Error {
  using Error::Error;
};

struct ParseError : ValidationError {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : ValidationError(msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace mf
