#include "rspin/common.hpp"

#include <sstream>

namespace rspin {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LatticeMismatch: return "lattice-mismatch";
    case ErrorKind::InvalidLattice: return "invalid-lattice";
    case ErrorKind::NotRepresentable: return "not-representable";
    case ErrorKind::Uncertified: return "uncertified";
    case ErrorKind::InconsistentInput: return "inconsistent-input";
    case ErrorKind::NotSimple: return "not-simple";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::NotSpanning: return "not-spanning";
    case ErrorKind::UnsupportedType: return "unsupported-type";
    case ErrorKind::UnknownCurve: return "unknown-curve";
    case ErrorKind::RefinementOrder: return "refinement-order";
    case ErrorKind::CostGuard: return "cost-guard";
    case ErrorKind::InconsistentStep: return "inconsistent-step";
    case ErrorKind::UnknownComponent: return "unknown-component";
    case ErrorKind::NoCap: return "no-cap";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotIsolated: return "non-isolated-or-too-deep";
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::Parity: return "parity";
    case ErrorKind::Unlabeled: return "unlabeled-generator";
    case ErrorKind::UnknownKernelTag: return "unknown-kernel-tag";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

std::string format_vec(const IntVec& v, const char* open, const char* close) {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << close;
  return os.str();
}

}  // namespace rspin
