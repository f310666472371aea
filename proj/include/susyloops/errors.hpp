#ifndef SUSYLOOPS_ERRORS_HPP_
#define SUSYLOOPS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace susyloops {

/// Series did not reach the requested tolerance within max_terms.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Gamma evaluated at a non-positive integer, outside the cancellation cases.
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// A seed solution or Wronskian vanishes where it must not (singular transformation).
class NodeError : public std::runtime_error {
 public:
  NodeError(const std::string& what, double where) : std::runtime_error(what), x(where) {}
  double x;  // grid location of the offending node
};

/// Coherent-state expansion could not be truncated below the tail budget.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Declared rational factorization energy disagrees with the stored float.
class RationalMismatchError : public std::runtime_error {
 public:
  explicit RationalMismatchError(const std::string& what) : std::runtime_error(what) {}
};

/// State is not cyclic under the requested evolution loop.
class NonCyclicError : public std::runtime_error {
 public:
  explicit NonCyclicError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace susyloops

#endif  // SUSYLOOPS_ERRORS_HPP_
