#include "peps/guards.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "peps/errors.hpp"

namespace peps::guards {

namespace {

int env_max_n() {
  static const int value = [] {
    const char* raw = std::getenv("PEPS_MAX_N");
    if (raw == nullptr) return 8;
    int parsed = std::atoi(raw);
    return parsed > 0 ? parsed : 8;
  }();
  return value;
}

}  // namespace

int max_enum_n() { return env_max_n(); }

int max_rw_letters() {
  int n = env_max_n();
  if (n <= 8) return 12;
  return std::max(12, n * (n - 1) / 2);
}

void require_enum_n(int n, const char* what) {
  if (n > max_enum_n()) {
    throw SizeGuardExceeded(std::string(what) + ": size " + std::to_string(n) +
                            " exceeds guard " + std::to_string(max_enum_n()) +
                            " (set PEPS_MAX_N to raise)");
  }
}

void require_rw_letters(long long letters, const char* what) {
  if (letters > max_rw_letters()) {
    throw SizeGuardExceeded(std::string(what) + ": word length " + std::to_string(letters) +
                            " exceeds guard " + std::to_string(max_rw_letters()) +
                            " (set PEPS_MAX_N to raise)");
  }
}

}  // namespace peps::guards
