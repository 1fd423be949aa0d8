#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kanweigh {

/// Input document or entity failed validation. Maps to CLI exit code 1.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// An enumeration exceeded its configured bound. Maps to CLI exit code 2.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, std::uint64_t limit, std::string where);
  const std::string& cap() const noexcept { return cap_; }
  std::uint64_t limit() const noexcept { return limit_; }
  const std::string& where() const noexcept { return where_; }

 private:
  std::string cap_;
  std::uint64_t limit_;
  std::string where_;
};

/// Two independent procedures disagreed; always an implementation bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Caps {
  std::uint64_t max_candidates = 10'000'000;
  /// Largest set a constructed presheaf may hold at any object.
  std::uint64_t max_set_size = 64;
};

/// Process-wide enumeration caps. Set once before any computation starts.
Caps& caps();

/// Counts visited candidates for one search and throws CapExceeded past the cap.
/// Safe to charge from several threads.
class CandidateBudget {
 public:
  explicit CandidateBudget(std::string where);
  void charge(std::uint64_t n = 1);
  std::uint64_t used() const noexcept { return used_.load(); }

 private:
  std::string where_;
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

/// Throws CapExceeded up front when a raw search space is known to exceed the cap.
void check_space(long double space, const std::string& where);

/// Throws CapExceeded when a constructed set is larger than caps().max_set_size.
void check_set_size(std::uint64_t size, const std::string& where);

}  // namespace kanweigh
