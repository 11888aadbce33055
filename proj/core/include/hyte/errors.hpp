#pragma once

#include <stdexcept>
#include <string>

namespace hyte {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched vector/matrix dimensions between operands.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

// Operands live on hyperboloids of different curvature.
class CurvatureError : public Error {
 public:
  explicit CurvatureError(const std::string& what) : Error(what) {}
};

// Input violates a geometric precondition (non-timelike vector,
// off-manifold point, tangency violation, degenerate weights).
class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string& what) : Error(what) {}
};

// Malformed data: bad file contents, unknown config keys, bad token ids.
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
};

// File IO failure or checksum/version mismatch in a binary format.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace hyte
