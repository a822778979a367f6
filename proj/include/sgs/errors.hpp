#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sgs {

/// Edge whose endpoints coincide. The graph class has no loops, so a stream
/// carrying one is rejected and aborted.
class LoopEdgeError : public std::invalid_argument {
 public:
  explicit LoopEdgeError(std::uint64_t vertex, std::uint64_t position = 0)
      : std::invalid_argument((position == 0 ? std::string() : "line " + std::to_string(position) + ": ") +
                              "loop edge (" + std::to_string(vertex) + "," + std::to_string(vertex) + ")"),
        vertex_(vertex),
        position_(position) {}

  std::uint64_t vertex() const noexcept { return vertex_; }
  std::uint64_t position() const noexcept { return position_; }

 private:
  std::uint64_t vertex_;
  std::uint64_t position_;
};

class VertexRangeError : public std::out_of_range {
 public:
  VertexRangeError(std::uint64_t vertex, std::uint64_t n)
      : std::out_of_range("vertex id " + std::to_string(vertex) +
                          " out of range for n=" + std::to_string(n)) {}
};

class MissingWeightError : public std::invalid_argument {
 public:
  MissingWeightError()
      : std::invalid_argument("minimum spanning forest streams need weighted edges") {}
};

/// A runtime-checked engine bound (storage or scheduling) was breached.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed stream input. `position` is the 1-based text line or binary
/// record number; 0 when it refers to the stream as a whole.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::uint64_t position, const std::string& what)
      : std::runtime_error(position == 0 ? what
                                         : "line " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::uint64_t position() const noexcept { return position_; }

 private:
  std::uint64_t position_;
};

}  // namespace sgs
