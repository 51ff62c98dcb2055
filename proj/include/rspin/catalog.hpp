#pragma once

// Built-in surfaces and the textual lattice format.
//
//   rank = 2;
//   gram = 0 1, 1 0;            # row-major
//   canonical = -2 -2;
//   name = P1xP1;
//   simply_connected = true;
//   jets { (1, 1) : 1; }
//
// Statements end with ';', '#' starts a comment, commas are optional.

#include <optional>
#include <string>
#include <vector>

#include "rspin/picard.hpp"

namespace rspin::catalog {

struct Surface {
  picard::LatticePtr lattice;
  picard::JetLedger ledger;
  std::optional<IntVec> ample_generator;  // rank-1 surfaces only
};

/// P2, P1xP1, F<n> (0 <= n <= 12), dP<k> (1 <= k <= 8), K3-<n> (n >= 1).
Surface builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// Classes whose genus is known in advance, used to validate the canonical vector.
std::vector<std::pair<IntVec, Int>> reference_genera(const std::string& name);

Surface parse_lattice(const std::string& text);
std::string write_lattice(const Surface& s);

/// A built-in name, or else a path to a lattice file.
Surface load_surface(const std::string& name_or_path);

}  // namespace rspin::catalog
