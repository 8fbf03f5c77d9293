// Core error types and small utilities shared across the library.

#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace globop {

// Every domain error carries a stable code name (the one the operations
// document) plus a human-readable message.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

#define GLOBOP_DEFINE_ERROR(Name)                         \
  class Name : public Error {                             \
  public:                                                 \
    explicit Name(const std::string& msg = "")            \
        : Error(#Name, msg) {}                            \
  };

GLOBOP_DEFINE_ERROR(MissingReference)
GLOBOP_DEFINE_ERROR(DimensionMismatch)
GLOBOP_DEFINE_ERROR(GlobularIdentityViolation)
GLOBOP_DEFINE_ERROR(MalformedMatrix)
GLOBOP_DEFINE_ERROR(TruncationMismatch)
GLOBOP_DEFINE_ERROR(BadLevel)
GLOBOP_DEFINE_ERROR(BoundaryMismatch)
GLOBOP_DEFINE_ERROR(ArityMismatch)
GLOBOP_DEFINE_ERROR(OutOfBounds)
GLOBOP_DEFINE_ERROR(MissingImage)
GLOBOP_DEFINE_ERROR(NotEligible)
GLOBOP_DEFINE_ERROR(BudgetExceeded)
GLOBOP_DEFINE_ERROR(TypingUnresolvable)
GLOBOP_DEFINE_ERROR(GluingMismatch)
GLOBOP_DEFINE_ERROR(ContractionUnavailable)
GLOBOP_DEFINE_ERROR(ParseError)
GLOBOP_DEFINE_ERROR(Unsupported)

#undef GLOBOP_DEFINE_ERROR

inline void hash_mix(std::uint64_t& h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
}

template <typename... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

// Plain union-find over dense integer ids.
class UnionFind {
public:
  void ensure(std::size_t n) {
    while (parent_.size() < n) parent_.push_back(parent_.size());
  }
  std::size_t find(std::size_t a) const {
    while (parent_[a] != a) a = parent_[a];
    return a;
  }
  // Merges and keeps the smaller id as representative.
  bool merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  std::size_t size() const { return parent_.size(); }

private:
  mutable std::vector<std::size_t> parent_;
};

}  // namespace globop
