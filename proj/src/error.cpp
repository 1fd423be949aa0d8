#include "kanweigh/error.hpp"

namespace kanweigh {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::string out = "invalid input";
  for (const auto& s : v) {
    out += "; ";
    out += s;
  }
  return out;
}

}  // namespace

InvalidInput::InvalidInput(std::vector<std::string> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

CapExceeded::CapExceeded(std::string cap, std::uint64_t limit, std::string where)
    : std::runtime_error("resource cap '" + cap + "' (" + std::to_string(limit) +
                         ") exceeded in " + where),
      cap_(std::move(cap)),
      limit_(limit),
      where_(std::move(where)) {}

Caps& caps() {
  static Caps instance;
  return instance;
}

CandidateBudget::CandidateBudget(std::string where)
    : where_(std::move(where)), limit_(caps().max_candidates) {}

void CandidateBudget::charge(std::uint64_t n) {
  if (used_.fetch_add(n) + n > limit_) throw CapExceeded("max-candidates", limit_, where_);
}

void check_space(long double space, const std::string& where) {
  const auto limit = caps().max_candidates;
  if (space > static_cast<long double>(limit)) throw CapExceeded("max-candidates", limit, where);
}

void check_set_size(std::uint64_t size, const std::string& where) {
  const auto limit = caps().max_set_size;
  if (size > limit) throw CapExceeded("max-set-size", limit, where);
}

}  // namespace kanweigh
