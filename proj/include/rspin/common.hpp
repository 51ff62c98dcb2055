#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rspin {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

enum class ErrorKind {
  LatticeMismatch,
  InvalidLattice,
  NotRepresentable,
  Uncertified,
  InconsistentInput,
  NotSimple,
  Disconnected,
  NotSpanning,
  UnsupportedType,
  UnknownCurve,
  RefinementOrder,
  CostGuard,
  InconsistentStep,
  UnknownComponent,
  NoCap,
  Precondition,
  NotIsolated,
  IndexOutOfRange,
  Parity,
  Unlabeled,
  UnknownKernelTag,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Domain error carrying a machine-checkable kind. The CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorKind::Internal, "integer overflow in addition");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorKind::Internal, "integer overflow in multiplication");
  return out;
}

/// Nonnegative gcd; gcd of an empty or all-zero list is 0.
inline Int gcd_of(const IntVec& values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v < 0 ? -v : v);
  return g;
}

/// Canonical residue in [0, r) for r > 0; r == 0 leaves v unchanged (integer-valued).
inline Int reduce_residue(Int v, Int r) {
  if (r == 0) return v;
  Int m = v % r;
  return m < 0 ? m + r : m;
}

std::string format_vec(const IntVec& v, const char* open = "(", const char* close = ")");

}  // namespace rspin
