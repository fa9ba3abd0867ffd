#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spanner {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed token or structure in an edge-list stream. line is 1-based.
struct ParseError : Error {
  ParseError(std::size_t line_no, const std::string& what)
      : Error("parse error at line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  std::size_t line;
};

// Vertex id out of range. line is 1-based, 0 when not file-related.
struct BoundsError : Error {
  explicit BoundsError(const std::string& what, std::size_t line_no = 0)
      : Error(line_no ? "bounds error at line " + std::to_string(line_no) +
                            ": " + what
                      : "bounds error: " + what),
        line(line_no) {}
  std::size_t line;
};

// Requested more edges than the vertex count admits.
struct CapacityError : Error {
  using Error::Error;
};

// Invalid construction parameters (thresholds, factors, mode).
struct InvalidParams : Error {
  using Error::Error;
};

// Cover instance with a target no candidate dominates.
struct InfeasibleCover : Error {
  InfeasibleCover(std::uint32_t target_id)
      : Error("infeasible cover instance: target " + std::to_string(target_id) +
              " is not covered by any candidate"),
        target(target_id) {}
  std::uint32_t target;
};

// A runtime check the construction relies on failed (e.g. the greedy
// set-size bounds). Maps to process exit code 3 in the CLI.
struct InvariantViolation : Error {
  using Error::Error;
};

// Candidate spanner contains an edge absent from the input graph.
struct SubgraphViolation : Error {
  using Error::Error;
};

// Exact verification refused: graph larger than the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace spanner
