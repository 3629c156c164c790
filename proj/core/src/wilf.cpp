#include "avoidance/wilf.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "avoidance/claims.hpp"
#include "avoidance/errors.hpp"
#include "parallel.hpp"

namespace avoidance {

PatternSet apply(Symmetry symmetry, const PatternSet& set) {
  switch (symmetry) {
    case Symmetry::identity:
      return set;
    case Symmetry::reverse:
      return reverse(set);
    case Symmetry::complement:
      return complement(set);
    case Symmetry::reverse_complement:
      return reverse(complement(set));
  }
  return set;
}

namespace {

constexpr Symmetry kSymmetries[] = {Symmetry::identity, Symmetry::reverse, Symmetry::complement,
                                    Symmetry::reverse_complement};

std::set<PatternSet> orbit_of(const PatternSet& set) {
  std::set<PatternSet> orbit;
  for (auto s : kSymmetries) orbit.insert(apply(s, set));
  return orbit;
}

CountTable table_for(const PatternSet& set, int n_max, int k_max, const ClassifyOptions& options) {
  if (options.use_claims) {
    if (const Claim* claim = verified_claim_for(set)) {
      bool covers = true;
      for (int n = 0; n <= n_max && covers; ++n) {
        for (int k = 0; k <= k_max && covers; ++k) covers = claim->valid_at(n, k);
      }
      if (covers) return table_from_claim(*claim, n_max, k_max);
    }
  }
  OracleOptions single = options.oracle;
  single.workers = 1;
  return build_table(set, n_max, k_max, single);
}

}  // namespace

PatternSet canonical_representative(const PatternSet& set) { return *orbit_of(set).begin(); }

std::vector<SymmetryOrbit> symmetry_reduce(const std::vector<PatternSet>& sets) {
  std::set<PatternSet> representatives;
  for (const auto& s : sets) representatives.insert(canonical_representative(s));
  std::vector<SymmetryOrbit> out;
  for (const auto& rep : representatives) {
    auto orbit = orbit_of(rep);
    out.push_back({rep, {orbit.begin(), orbit.end()}});
  }
  return out;
}

std::string Classification::label() const {
  return "empirically Wilf-equivalent on n<=" + std::to_string(n_max) +
         ", k<=" + std::to_string(k_max);
}

Classification classify(const std::vector<PatternSet>& sets, int n_max, int k_max,
                        const ClassifyOptions& options) {
  if (n_max < 0 || k_max < 0) throw InvalidArgument("grid bounds must be nonnegative");
  std::vector<PatternSet> distinct(sets);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<std::optional<CountTable>> tables(distinct.size());
  detail::run_indexed(distinct.size(), options.oracle.workers, [&](std::size_t i) {
    tables[i] = table_for(distinct[i], n_max, k_max, options);
  });

  Classification out;
  out.n_max = n_max;
  out.k_max = k_max;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    auto& table = *tables[i];
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const WilfClass& c) { return c.table.same_counts(table); });
    if (it == out.classes.end()) {
      out.classes.push_back({{distinct[i]}, {table.provenance()}, table});
    } else {
      it->members.push_back(distinct[i]);
      it->provenance.push_back(table.provenance());
    }
  }
  return out;
}

namespace {

std::vector<PatternSet> singletons(std::initializer_list<const char*> patterns) {
  std::vector<PatternSet> out;
  for (const char* p : patterns) out.push_back(PatternSet{Pattern::parse(p)});
  return out;
}

}  // namespace

std::vector<PatternSet> builtin_family(std::string_view name) {
  if (name == "length3") {
    return singletons({"111", "112", "121", "211", "122", "212", "221", "123", "132", "213",
                       "231", "312", "321"});
  }
  if (name == "length3-reps") return singletons({"123", "132", "112", "121", "111"});
  if (name == "pairs-two-letter") {
    const char* words[] = {"111", "112", "121", "211", "122", "212", "221"};
    std::vector<PatternSet> out;
    for (std::size_t a = 0; a < std::size(words); ++a) {
      for (std::size_t b = a + 1; b < std::size(words); ++b) {
        out.push_back(PatternSet{Pattern::parse(words[a]), Pattern::parse(words[b])});
      }
    }
    return out;
  }
  if (name == "vml") {
    std::vector<PatternSet> out;
    for (int total = 1; total <= 3; ++total) {
      for (int m = 0; m <= total; ++m) out.push_back(PatternSet{make_vml(m, total - m)});
    }
    return out;
  }
  throw InvalidArgument("unknown builtin family \"" + std::string(name) + "\"");
}

std::vector<std::string> builtin_family_names() {
  return {"length3", "length3-reps", "pairs-two-letter", "vml"};
}

}  // namespace avoidance
