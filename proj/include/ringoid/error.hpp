#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringoid {

/// Elements of every finite carrier are dense indices 0..n-1.
using Elem = std::int32_t;
inline constexpr Elem kNone = -1;

class RingoidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input tables have the wrong shape, or a JSON document does not parse.
class MalformedInput : public RingoidError {
 public:
  using RingoidError::RingoidError;
};

/// A carrier or a brute-force search grew past the configured Budget.
class BudgetExceeded : public RingoidError {
 public:
  using RingoidError::RingoidError;
};

/// An operation was called outside its domain (not an ideal, not a
/// quasi-isomorphism, ...). Carries the witness that refutes the
/// precondition when one exists.
class PreconditionError : public RingoidError {
 public:
  PreconditionError(const std::string& what, std::vector<Elem> witness = {})
      : RingoidError(what), witness_(std::move(witness)) {}
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  std::vector<Elem> witness_;
};

/// Limits for carriers and exhaustive searches.
struct Budget {
  std::size_t max_carrier = 64;
  std::size_t max_search = 10'000'000;

  void check_carrier(std::size_t n, const char* what) const;

  /// Parses "carrier=N,search=M" (either key optional) or a bare integer,
  /// which sets the search limit.
  static Budget parse(const std::string& text);
  /// Default budget overridden by the RINGOID_BUDGET environment variable.
  static Budget from_environment();
};

/// Counts search nodes against Budget::max_search.
class SearchCounter {
 public:
  explicit SearchCounter(const Budget& budget) : limit_(budget.max_search) {}
  void tick(const char* what);
  std::size_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t limit_;
  std::size_t nodes_ = 0;
};

/// One violated law and the lexicographically least tuple witnessing it.
struct Violation {
  std::string law;
  std::vector<Elem> witness;
  std::string detail;

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return ok(); }
  bool has(const std::string& law) const;
  const Violation* find(const std::string& law) const;
  void add(std::string law, std::vector<Elem> witness, std::string detail = {});
  /// Appends other's violations, prefixing each law name.
  void merge(const ValidationReport& other, const std::string& prefix);
  std::string to_string() const;
};

/// Throws PreconditionError naming `what` if the report has violations.
void require_valid(const ValidationReport& report, const std::string& what);

}  // namespace ringoid
