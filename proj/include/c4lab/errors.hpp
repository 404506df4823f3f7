#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace c4lab {

// Input text could not be parsed. `line` is 1-based.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// A documented precondition does not hold. `witness` optionally carries the
// offending vertices (an M2 quadruple, an induced C4, an induced cycle, ...).
struct PreconditionError : std::runtime_error {
  std::vector<int> witness;
  explicit PreconditionError(const std::string& what_, std::vector<int> w = {})
      : std::runtime_error(what_), witness(std::move(w)) {}
};

// An exact computation was requested beyond its configured cap.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A guaranteed bound failed to hold on the actual input. These are surfaced,
// never swallowed; pipelines convert them into structured stage failures.
struct BoundViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A randomized search ran out of retries. `transcript` has one line per attempt.
struct RetriesExhaustedError : std::runtime_error {
  std::vector<std::string> transcript;
  RetriesExhaustedError(const std::string& what_, std::vector<std::string> t)
      : std::runtime_error(what_), transcript(std::move(t)) {}
};

namespace detail {

// Internal consistency only. User-visible failures get their own types above.
inline void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace detail

inline void check_bound(bool cond, const std::string& msg) {
  if (!cond) throw BoundViolation(msg);
}

}  // namespace c4lab
