#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "avoidance/bijections.hpp"
#include "avoidance/claims.hpp"
#include "avoidance/combnum.hpp"
#include "avoidance/errors.hpp"
#include "avoidance/formulas.hpp"
#include "avoidance/json_io.hpp"
#include "avoidance/oracle.hpp"
#include "avoidance/series.hpp"
#include "avoidance/table_io.hpp"
#include "avoidance/wilf.hpp"

namespace avoidance::cli {

namespace {

using nlohmann::ordered_json;

struct Common {
  unsigned workers = 1;
  std::optional<std::uint64_t> max_candidates;

  OracleOptions oracle() const {
    OracleOptions o;
    o.workers = workers;
    o.max_candidates = max_candidates ? *max_candidates : max_candidates_from_environment();
    return o;
  }
};

const std::vector<std::string> kMethods{"oracle", "claim", "auto"};

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

void require_nonnegative(int value, const char* what) {
  if (value < 0) throw InvalidArgument(std::string(what) + " must be nonnegative");
}

// --------------------------------------------------------------------------
// count / table
// --------------------------------------------------------------------------

struct Counted {
  BigInt value;
  std::string provenance;
};

const Claim& claim_for(const PatternSet& set, const std::string& claim_id) {
  if (!claim_id.empty()) {
    const Claim& claim = find_claim(claim_id);
    if (claim.pattern_set != set) {
      throw InvalidArgument("claim " + claim_id + " is about " + claim.pattern_set.to_string() +
                            ", not " + set.to_string());
    }
    return claim;
  }
  if (const Claim* claim = verified_claim_for(set)) return *claim;
  throw InvalidArgument("no verified claim covers " + set.to_string());
}

BigInt claim_count(const Claim& claim, int n, int k) {
  const Rational value = claim.evaluate(n, k);
  if (!is_integer(value)) {
    throw InvalidArgument("claim " + claim.id + " gives the non-integer " + to_fraction(value));
  }
  return value.get_num();
}

Counted count_with(const std::string& method, int n, int k, const PatternSet& set,
                   const std::string& claim_id, const OracleOptions& options) {
  if (method == "claim") {
    const Claim& claim = claim_for(set, claim_id);
    return {claim_count(claim, n, k), claim_provenance(claim.id)};
  }
  if (method == "auto") {
    const Claim* claim = claim_id.empty() ? verified_claim_for(set) : &claim_for(set, claim_id);
    if (claim && claim->valid_at(n, k)) {
      return {claim_count(*claim, n, k), claim_provenance(claim->id)};
    }
  }
  return {count_avoiders(n, k, set, options), kOracleProvenance};
}

CountTable table_with(const std::string& method, const PatternSet& set, int n_max, int k_max,
                      const std::string& claim_id, const OracleOptions& options) {
  if (method == "oracle") return build_table(set, n_max, k_max, options);
  if (method == "claim") return table_from_claim(claim_for(set, claim_id), n_max, k_max);
  const Claim* claim = claim_id.empty() ? verified_claim_for(set) : &claim_for(set, claim_id);
  bool covers = claim != nullptr;
  for (int n = 0; n <= n_max && covers; ++n) {
    for (int k = 0; k <= k_max && covers; ++k) covers = claim->valid_at(n, k);
  }
  if (covers) return table_from_claim(*claim, n_max, k_max);
  return build_table(set, n_max, k_max, options);
}

std::optional<CountTable> load_cached(const std::filesystem::path& path, const PatternSet& set,
                                      int n_max, int k_max, std::ostream& err) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  CountTable cached = load_table(path);
  if (cached.pattern_set() != set || cached.n_max() != n_max || cached.k_max() != k_max) {
    err << "cache " << path.string() << " holds a different table; rebuilding\n";
    return std::nullopt;
  }
  return cached;
}

// --------------------------------------------------------------------------
// classify
// --------------------------------------------------------------------------

std::vector<PatternSet> read_sets(const std::string& source) {
  std::string name = source;
  if (name.rfind("builtin:", 0) == 0) return builtin_family(name.substr(8));
  const auto names = builtin_family_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return builtin_family(name);

  std::ifstream in(source);
  if (!in) throw InvalidArgument("cannot read pattern-set file \"" + source + "\"");
  std::vector<PatternSet> sets;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    sets.push_back(PatternSet::parse(line));
  }
  return sets;
}

std::string classification_plain(const Classification& c) {
  std::ostringstream os;
  os << c.label() << "\n";
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    os << "class " << i + 1 << ":";
    for (const auto& m : c.classes[i].members) os << " {" << m.to_string() << "}";
    os << "\n";
  }
  return os.str();
}

// --------------------------------------------------------------------------
// series
// --------------------------------------------------------------------------

Series named_series(const std::string& name, int order, int k, int l, int p, int n) {
  const Rational half(1, 2);
  if (name == "exp") return exp_series(order);
  if (name == "f111-egf") {
    return pow(Series::polynomial({1, 1, half}, order), static_cast<unsigned>(k));
  }
  if (name == "single-repeat-egf") {
    if (l < 1) throw InvalidArgument("--l must be at least 1");
    std::vector<Rational> terms;
    Rational term = 1;
    for (int j = 0; j < l; ++j) {
      terms.push_back(term);
      term /= j + 1;
    }
    return pow(Series(terms, order), static_cast<unsigned>(k));
  }
  if (name == "vp0-k2") {
    std::vector<Rational> terms;
    Rational term = 1;
    for (int j = 0; j <= p; ++j) {
      terms.push_back(term);
      term /= j + 1;
    }
    return exp_series(order) * Series(terms, order);
  }
  if (name == "g112") return g112_series(n, order);
  throw InvalidArgument("unknown series \"" + name + "\"");
}

// --------------------------------------------------------------------------
// bijections
// --------------------------------------------------------------------------

VmlShape parse_shape(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("expected m,l but got \"" + text + "\"");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InvalidArgument("expected m,l but got \"" + text + "\"");
  }
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token, &used));
      if (used != token.size()) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("invalid integer \"" + token + "\" in \"" + text + "\"");
    }
  }
  return out;
}

std::string ints_csv(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

void emit_bijection(std::ostream& out, const std::string& format, const std::string& map,
                    const std::string& input_csv,
                    const std::string& output_plain, const ordered_json& output_json) {
  if (format == "json") {
    ordered_json doc;
    doc["map"] = map;
    doc["input"] = input_csv;
    doc["output"] = output_json;
    out << dump(doc);
  } else {
    out << output_plain << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of pattern-avoiding words", "avoidance-lab"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--workers", common.workers, "Worker threads (0 = one per hardware thread)");
  app.add_option("--max-candidates", common.max_candidates,
                 "Refuse searches over more than this many candidate words "
                 "(default 1e8, or AVOIDANCE_LAB_MAX_CANDIDATES)");

  // contains
  auto* contains_cmd = app.add_subcommand("contains", "Does a word contain a pattern?");
  std::string word_text, pattern_text;
  contains_cmd->add_option("word", word_text)->required();
  contains_cmd->add_option("pattern", pattern_text)->required();

  // enumerate
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the avoiders in [k]^n");
  int n = 0, k = 0;
  std::string avoid_text, format = "plain";
  enumerate_cmd->add_option("n", n)->required();
  enumerate_cmd->add_option("k", k)->required();
  enumerate_cmd->add_option("--avoid", avoid_text, "Pattern set, e.g. 112,221")->required();
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  // count
  auto* count_cmd = app.add_subcommand("count", "Count the avoiders in [k]^n");
  std::string method = "oracle", claim_id;
  count_cmd->add_option("n", n)->required();
  count_cmd->add_option("k", k)->required();
  count_cmd->add_option("--avoid", avoid_text)->required();
  count_cmd->add_option("--method", method)->check(CLI::IsMember(kMethods));
  count_cmd->add_option("--claim", claim_id, "Claim id for --method claim|auto");
  count_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  // table
  auto* table_cmd = app.add_subcommand("table", "Tabulate f_T(n,k) on a grid");
  int n_max = 0, k_max = 0;
  std::string out_path, cache_path, table_format = "json";
  table_cmd->add_option("--avoid", avoid_text)->required();
  table_cmd->add_option("--nmax", n_max)->required();
  table_cmd->add_option("--kmax", k_max)->required();
  table_cmd->add_option("--method", method)->check(CLI::IsMember(kMethods));
  table_cmd->add_option("--claim", claim_id);
  table_cmd->add_option("--out", out_path, "Write here instead of standard output");
  table_cmd->add_option("--format", table_format)->check(CLI::IsMember({"json", "csv"}));
  table_cmd->add_option("--cache", cache_path, "Reuse or create a JSON table cache");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Group pattern sets by equal tables");
  std::string sets_source;
  bool use_claims = false, reduce = false;
  classify_cmd->add_option("--sets", sets_source,
                           "File with one pattern set per line, or a builtin family: " +
                               [] {
                                 std::string s;
                                 for (const auto& name : builtin_family_names()) {
                                   s += (s.empty() ? "" : ", ") + name;
                                 }
                                 return s;
                               }())
      ->required();
  classify_cmd->add_option("--nmax", n_max)->required();
  classify_cmd->add_option("--kmax", k_max)->required();
  classify_cmd->add_flag("--use-claims", use_claims, "Use verified claims where they apply");
  classify_cmd->add_flag("--symmetry-reduce", reduce, "Classify orbit representatives only");
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  // bijection
  auto* bijection_cmd = app.add_subcommand("bijection", "Apply one of the bijections");
  bijection_cmd->require_subcommand(1);
  std::string perm_text, from_text, to_text, excess_text;
  int alphabet = -1;
  bool inverse = false;
  auto* rho_cmd = bijection_cmd->add_subcommand("rho", "[k]^n(121) -> [k]^n(112)");
  rho_cmd->add_option("--word", word_text)->required();
  rho_cmd->add_option("--k", alphabet, "Alphabet size (default: largest letter)");
  rho_cmd->add_flag("--inverse", inverse, "[k]^n(112) -> [k]^n(121)");
  auto* rho_general_cmd =
      bijection_cmd->add_subcommand("rho-general", "[k]^n(v_{m,l}) -> [k]^n(v_{m',l'})");
  rho_general_cmd->add_option("--word", word_text)->required();
  rho_general_cmd->add_option("--from", from_text, "m,l")->required();
  rho_general_cmd->add_option("--to", to_text, "m',l'")->required();
  rho_general_cmd->add_option("--k", alphabet);
  auto* alg1_cmd = bijection_cmd->add_subcommand("alg1", "Permutation -> 221-avoiding word");
  alg1_cmd->add_option("--perm", perm_text)->required();
  auto* alg2_cmd = bijection_cmd->add_subcommand("alg2", "221-avoiding word -> permutation");
  alg2_cmd->add_option("--word", word_text)->required();
  auto* decompose_cmd =
      bijection_cmd->add_subcommand("decompose", "221-avoider -> (permutation, excess)");
  decompose_cmd->add_option("--word", word_text)->required();
  decompose_cmd->add_option("--k", alphabet);
  auto* compose_cmd =
      bijection_cmd->add_subcommand("compose", "(permutation, excess) -> 221-avoider");
  compose_cmd->add_option("--perm", perm_text)->required();
  compose_cmd->add_option("--excess", excess_text, "e_1,...,e_n")->required();
  compose_cmd->add_option("--k", alphabet)->required();
  for (auto* sub : bijection_cmd->get_subcommands({})) {
    sub->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));
  }

  // series
  auto* series_cmd = app.add_subcommand("series", "Print truncated generating functions");
  std::string series_name;
  int order = 0, order_y = 0, letter_copies = 1, p = 1;
  bool egf_counts = false;
  std::string reading = "per-summand";
  series_cmd
      ->add_option("name", series_name,
                   "exp, f111-egf, single-repeat-egf, vp0-k2, g112, F112, F111-112, "
                   "thp-residual")
      ->required();
  series_cmd->add_option("--order", order, "Truncation order (in x, or in y for g112)")
      ->required();
  series_cmd->add_option("--order-y", order_y, "Order in y for the bivariate series");
  series_cmd->add_option("--k", k);
  series_cmd->add_option("--n", n);
  series_cmd->add_option("--l", letter_copies);
  series_cmd->add_option("--p", p);
  series_cmd->add_option("--reading", reading, "thp-residual: literal or per-summand")
      ->check(CLI::IsMember({"literal", "per-summand"}));
  series_cmd->add_flag("--egf-counts", egf_counts, "Print n! [x^n] instead of [x^n]");
  series_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check registered claims against the oracle");
  verify_cmd->add_option("--claim", claim_id, "Only this claim");
  verify_cmd->add_option("--nmax", n_max)->required();
  verify_cmd->add_option("--kmax", k_max)->required();
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));
  bool list = false;
  auto* claims_cmd = app.add_subcommand("claims", "List registered claims");
  claims_cmd->add_flag("--list", list);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    const OracleOptions options = common.oracle();

    if (*contains_cmd) {
      out << (contains(Word::parse(word_text), Pattern::parse(pattern_text)) ? "true" : "false")
          << "\n";
      return kSuccess;
    }

    if (*enumerate_cmd) {
      require_nonnegative(n, "n");
      require_nonnegative(k, "k");
      const auto set = PatternSet::parse(avoid_text);
      const auto words = enumerate_avoiders(n, k, set, options);
      if (format == "json") {
        ordered_json doc;
        doc["pattern_set"] = set.to_string();
        doc["n"] = n;
        doc["k"] = k;
        doc["count"] = std::to_string(words.size());
        auto list_json = ordered_json::array();
        for (const auto& w : words) list_json.push_back(w.to_string());
        doc["words"] = std::move(list_json);
        out << dump(doc);
      } else {
        for (const auto& w : words) out << w.to_string() << "\n";
      }
      return kSuccess;
    }

    if (*count_cmd) {
      require_nonnegative(n, "n");
      require_nonnegative(k, "k");
      const auto set = PatternSet::parse(avoid_text);
      const auto counted = count_with(method, n, k, set, claim_id, options);
      if (format == "json") {
        ordered_json doc;
        doc["pattern_set"] = set.to_string();
        doc["n"] = n;
        doc["k"] = k;
        doc["count"] = to_decimal(counted.value);
        doc["provenance"] = counted.provenance;
        out << dump(doc);
      } else {
        out << to_decimal(counted.value) << "\n";
        err << "provenance: " << counted.provenance << "\n";
      }
      return kSuccess;
    }

    if (*table_cmd) {
      require_nonnegative(n_max, "--nmax");
      require_nonnegative(k_max, "--kmax");
      const auto set = PatternSet::parse(avoid_text);
      std::optional<CountTable> table;
      if (!cache_path.empty()) table = load_cached(cache_path, set, n_max, k_max, err);
      if (!table) {
        table = table_with(method, set, n_max, k_max, claim_id, options);
        if (!cache_path.empty()) save_table(*table, cache_path);
      }
      const std::string text = table_format == "csv" ? table_to_csv(*table) : table_to_json(*table);
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << text)) throw InvalidArgument("cannot write \"" + out_path + "\"");
      }
      return kSuccess;
    }

    if (*classify_cmd) {
      auto sets = read_sets(sets_source);
      if (reduce) {
        std::vector<PatternSet> reps;
        for (const auto& orbit : symmetry_reduce(sets)) reps.push_back(orbit.representative);
        sets = std::move(reps);
      }
      ClassifyOptions classify_options;
      classify_options.oracle = options;
      classify_options.use_claims = use_claims;
      const auto c = classify(sets, n_max, k_max, classify_options);
      out << (format == "json" ? classification_to_json(c) : classification_plain(c));
      return kSuccess;
    }

    if (*bijection_cmd) {
      if (*rho_cmd) {
        const auto w = Word::parse(word_text, alphabet);
        const auto image = inverse ? rho_112_to_121(w) : rho_121_to_112(w);
        emit_bijection(out, format, inverse ? "rho-inverse" : "rho", w.to_csv(),
                       image.to_string(), image.to_csv());
      } else if (*rho_general_cmd) {
        const auto w = Word::parse(word_text, alphabet);
        const auto image = rho_general(w, parse_shape(from_text), parse_shape(to_text));
        emit_bijection(out, format, "rho-general", w.to_csv(), image.to_string(),
                       image.to_csv());
      } else if (*alg1_cmd) {
        const auto pi = Permutation::parse(perm_text);
        const auto image = alg1_perm_to_word(pi);
        emit_bijection(out, format, "alg1", pi.to_string(), image.to_string(),
                       image.to_csv());
      } else if (*alg2_cmd) {
        const auto w = Word::parse(word_text);
        const auto pi = alg2_word_to_perm(w);
        emit_bijection(out, format, "alg2", w.to_csv(), pi.to_string(),
                       pi.to_string());
      } else if (*decompose_cmd) {
        const auto w = Word::parse(word_text, alphabet);
        const auto enc = decompose_221(w);
        ordered_json result;
        result["perm"] = enc.perm.to_string();
        result["excess"] = ints_csv(enc.excess);
        result["k"] = enc.alphabet;
        emit_bijection(out, format, "decompose", w.to_csv(),
                       "perm " + enc.perm.to_string() + " excess " + ints_csv(enc.excess) +
                           " k " + std::to_string(enc.alphabet),
                       result);
      } else if (*compose_cmd) {
        ExcessEncoding enc{Permutation::parse(perm_text), parse_ints(excess_text), alphabet};
        const auto image = compose_221(enc);
        emit_bijection(out, format, "compose", enc.perm.to_string(),
                       image.to_string(), image.to_csv());
      }
      return kSuccess;
    }

    if (*series_cmd) {
      require_nonnegative(order, "--order");
      require_nonnegative(k, "--k");
      ordered_json doc;
      doc["series"] = series_name;
      auto coefficient_text = [&](const Rational& c, int i) {
        if (!egf_counts) return to_fraction(c);
        return to_fraction(Rational(c * Rational(factorial(i))));
      };
      if (series_name == "F112" || series_name == "F111-112") {
        require_nonnegative(order_y, "--order-y");
        const auto s = series_name == "F112" ? closed_form_F112_biseries(order, order_y)
                                             : closed_form_F111_112_biseries(order, order_y);
        auto rows = ordered_json::array();
        for (int i = 0; i <= order; ++i) {
          auto row = ordered_json::array();
          for (int j = 0; j <= order_y; ++j) {
            const auto text = coefficient_text(s(i, j), i);
            if (format != "json") out << i << "\t" << j << "\t" << text << "\n";
            row.push_back(text);
          }
          rows.push_back(std::move(row));
        }
        doc["order_x"] = order;
        doc["order_y"] = order_y;
        doc["coefficients"] = std::move(rows);
      } else {
        Series s(0);
        if (series_name == "thp-residual") {
          s = formulas::vp0_integral_identity_residual(
              p, k, order,
              reading == "literal" ? formulas::IntegralReading::literal
                                   : formulas::IntegralReading::per_summand);
        } else {
          s = named_series(series_name, order, k, letter_copies, p, n);
        }
        auto coefficients = ordered_json::array();
        for (int i = 0; i <= s.order(); ++i) {
          // g112 is indexed by y, so n! scaling does not apply to it.
          const auto text = series_name == "g112" ? to_fraction(s[i]) : coefficient_text(s[i], i);
          if (format != "json") out << i << "\t" << text << "\n";
          coefficients.push_back(text);
        }
        doc["order"] = s.order();
        doc["coefficients"] = std::move(coefficients);
      }
      if (format == "json") out << dump(doc);
      return kSuccess;
    }

    if (*verify_cmd) {
      require_nonnegative(n_max, "--nmax");
      require_nonnegative(k_max, "--kmax");
      std::vector<VerifyReport> reports;
      if (claim_id.empty()) {
        reports = verify_all(n_max, k_max, options);
      } else {
        reports.push_back(verify_claim(claim_id, n_max, k_max, options));
      }
      bool all_expected = true;
      if (format == "json") out << verify_reports_to_json(reports, n_max, k_max);
      for (const auto& r : reports) {
        all_expected = all_expected && r.as_expected;
        if (format != "json") {
          out << r.claim_id << "\t" << to_string(r.status) << "\texpected "
              << to_string(r.expected_status);
          if (r.resolved_reading) out << "\treading " << *r.resolved_reading;
          if (!r.mismatches.empty()) {
            const auto& m = r.mismatches.front();
            out << "\tfirst mismatch (" << m.n << "," << m.k << ") claimed "
                << to_compact(m.claimed) << " oracle " << to_decimal(m.oracle);
          }
          out << "\t" << (r.as_expected ? "ok" : "UNEXPECTED") << "\n";
        }
        if (!r.as_expected) err << "claim " << r.claim_id << " did not behave as documented\n";
      }
      return all_expected ? kSuccess : kUnexpectedClaim;
    }

    if (*claims_cmd) {
      for (const auto& c : claim_registry()) {
        out << c.id << "\t{" << c.pattern_set.to_string() << "}\t" << to_string(c.expected_status)
            << "\t" << c.notes << "\n";
      }
      return kSuccess;
    }
  } catch (const TooLarge& e) {
    err << "refused: " << e.what() << "\n";
    return kTooLarge;
  } catch (const UnknownClaim& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace avoidance::cli
