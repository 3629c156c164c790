#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "avoidance/oracle.hpp"
#include "avoidance/words.hpp"

namespace avoidance {

// Reversal and complementation applied to every pattern of a set at once.
enum class Symmetry { identity, reverse, complement, reverse_complement };

PatternSet apply(Symmetry symmetry, const PatternSet& set);

struct SymmetryOrbit {
  PatternSet representative;       // least member
  std::vector<PatternSet> members;  // the whole orbit, sorted
};

PatternSet canonical_representative(const PatternSet& set);

// One orbit per distinct representative among the inputs, ordered by representative.
std::vector<SymmetryOrbit> symmetry_reduce(const std::vector<PatternSet>& sets);

struct ClassifyOptions {
  OracleOptions oracle;
  // Use a registered VERIFIED claim instead of the oracle when it covers the whole grid.
  bool use_claims = false;
};

struct WilfClass {
  std::vector<PatternSet> members;      // sorted
  std::vector<std::string> provenance;  // per member
  CountTable table;                     // the least member's table
};

// Classes of pattern sets whose tables agree on the grid. This is empirical
// equivalence on the grid only.
struct Classification {
  int n_max = 0;
  int k_max = 0;
  std::vector<WilfClass> classes;  // ordered by least member

  std::string label() const;  // "empirically Wilf-equivalent on n<=7, k<=4"
};

Classification classify(const std::vector<PatternSet>& sets, int n_max, int k_max,
                        const ClassifyOptions& options = {});

// Named families: "length3" (13 single patterns of length 3), "length3-reps",
// "pairs-two-letter" (21 pairs of length-3 patterns on two letters), "vml"
// (v_{m,l}, m + l <= 3). Throws InvalidArgument on an unknown name.
std::vector<PatternSet> builtin_family(std::string_view name);
std::vector<std::string> builtin_family_names();

}  // namespace avoidance
