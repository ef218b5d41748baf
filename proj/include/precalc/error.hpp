#pragma once

#include <stdexcept>
#include <string>

namespace precalc {

/// Error thrown by all engine operations on contract violations
/// (spec mismatch, order exhaustion, bad indices, parse failures).
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

}  // namespace precalc
