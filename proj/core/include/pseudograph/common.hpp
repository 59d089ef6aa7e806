#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudograph {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// A caller violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dense table or exhaustive search would exceed its configured cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An iterative method did not meet its tolerance within the iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relative slack used when comparing a computed quantity to a bound:
/// `lhs <= rhs + kAuditTolerance * max(1, |rhs|)`.
inline constexpr double kAuditTolerance = 1e-6;

inline constexpr const char* kVersion = "0.3.0";

}  // namespace pseudograph
