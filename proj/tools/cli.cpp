#include "cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sperner/constructions.hpp"
#include "sperner/errors.hpp"
#include "sperner/family_io.hpp"
#include "sperner/lattice.hpp"
#include "sperner/oversat.hpp"
#include "sperner/search.hpp"
#include "sperner/verify.hpp"

namespace sperner::cli {

namespace {

struct Output {
  std::string path;
  bool json = false;

  void emit(std::ostream& out, const Family& f, const std::vector<std::string>& comments = {}) const {
    if (path.empty() || path == "-") {
      if (json) {
        out << format_family_json(f);
      } else {
        write_family_text(out, f, comments);
      }
    } else {
      write_family_file(path, f, json, comments);
    }
  }
};

void add_output(CLI::App* cmd, Output& o) {
  cmd->add_option("-o,--output", o.path, "Output file (default: stdout)");
  cmd->add_flag("--json", o.json, "Emit the JSON mirror format");
}

void print_witness(std::ostream& out, const VerifyReport& r) {
  if (auto s = r.witness_set()) out << "witness: " << to_string(*s) << '\n';
  if (auto c = r.witness_chain()) {
    for (SetWord s : *c) out << "witness: " << to_string(s) << '\n';
  }
}

std::optional<SetWord> parse_optional_set(const std::string& text, std::size_t n) {
  if (text.empty()) return std::nullopt;
  return parse_set_line(text, n, 0);
}

// --- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string type;
  unsigned k = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string profile = "desk";
  std::string part = "F";
  unsigned extra = 0;
  std::vector<std::string> inputs;
  Output output;
};

int do_construct(const ConstructArgs& a, std::ostream& out) {
  std::vector<std::string> comments;
  Family f;
  const auto need_k = [&](unsigned min) {
    if (a.k < min) throw BadParams("--k " + std::to_string(min) + " or larger is required for --type " + a.type);
  };
  const auto need_inputs = [&](std::size_t count) {
    if (a.inputs.size() != count) {
      throw BadParams("--type " + a.type + " takes " + std::to_string(count) + " input file(s)");
    }
  };
  if (a.type == "powerset") {
    need_k(2);
    f = powerset_construction(a.k, a.n == 0 ? a.k : a.n);
  } else if (a.type == "six") {
    f = six_sperner(a.n == 0 ? 8 : a.n);
  } else if (a.type == "epsilon") {
    need_k(6);
    f = epsilon_pipeline(a.k);
  } else if (a.type == "cambridge") {
    const CambridgeFixture c = cambridge_fixture();
    if (a.part == "F") {
      f = c.f;
    } else if (a.part == "B0") {
      f = c.b0;
    } else if (a.part == "B1") {
      f = c.b1;
    } else {
      throw BadParams("--part must be F, B0 or B1");
    }
  } else if (a.type == "doubled") {
    need_k(2);
    need_inputs(1);
    f = doubled(read_family_file(a.inputs[0]).family, a.k);
  } else if (a.type == "combined") {
    need_inputs(2);
    f = combine(read_family_file(a.inputs[0]).family, read_family_file(a.inputs[1]).family);
  } else if (a.type == "oversat") {
    need_k(1);
    FunProfile profile;
    if (a.profile == "paper") {
      profile = FunProfile::paper();
    } else if (a.profile == "desk") {
      profile = FunProfile::desk();
    } else {
      throw BadParams("--profile must be paper or desk");
    }
    const OversatConstruction built = oversat_construction(a.k, profile, a.seed);
    comments = built.metadata();
    f = built.family;
    if (a.extra > 0) {
      f = extend_oversat(f, a.extra, a.k, Checks::trust);
      comments.push_back("# extended by " + std::to_string(a.extra) + " homogeneous elements");
    }
  } else {
    throw BadParams("unknown --type " + a.type);
  }
  a.output.emit(out, f, comments);
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string mode;
  unsigned k = 1;
  std::string input;
  std::size_t max_n = kDefaultMaxN;
  std::uint64_t sampled = 0;
  std::uint64_t seed = 0;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  const Family f = read_family_file(a.input).family;
  SweepOptions options{.max_n = a.max_n, .samples = std::nullopt, .seed = a.seed};
  if (a.sampled > 0) options.samples = a.sampled;
  VerifyReport r;
  if (a.mode == "ksperner") {
    r = is_k_sperner(f, a.k);
  } else if (a.mode == "antichain") {
    r = is_k_sperner(f, 1);
  } else if (a.mode == "saturated") {
    try {
      r = is_saturated(f, a.k, options);
    } catch (const NotKSperner& e) {
      out << "verdict: false\nreason: not " << a.k << "-Sperner\n";
      for (SetWord s : e.chain()) out << "witness: " << to_string(s) << '\n';
      return kVerdictFalse;
    }
  } else if (a.mode == "oversaturated") {
    r = is_oversaturated(f, a.k, options);
  } else {
    throw BadParams("unknown --mode " + a.mode);
  }
  out << "verdict: " << (r.verdict ? "true" : "false") << '\n';
  out << "subsets_checked: " << r.subsets_checked << '\n';
  if (!r.exhaustive) out << "mode: sampled (non-exhaustive)\n";
  print_witness(out, r);
  return r.verdict ? kOk : kVerdictFalse;
}

// --- decompose -------------------------------------------------------------

int do_decompose(const std::string& input, std::size_t max_n, std::ostream& out) {
  const Family f = read_family_file(input).family;
  if (f.empty()) {
    out << "layers: 0\n";
    return kOk;
  }
  const LayerSequence layers = canonical_decomposition(f);
  out << "layers: " << layers.size() << '\n';
  for (std::size_t i = 0; i < layers.size(); ++i) {
    std::string verdict = "skipped";
    if (f.n() <= max_n) verdict = is_saturated(layers[i], 1, SweepOptions{.max_n = max_n, .samples = std::nullopt, .seed = 0}).verdict ? "true" : "false";
    out << "layer " << i << ": size=" << layers[i].size() << " saturated=" << verdict << '\n';
    for (SetWord s : layers[i]) out << "  " << to_string(s) << '\n';
  }
  out << "layered: " << (is_layered(layers).verdict ? "true" : "false") << '\n';
  return kOk;
}

// --- combine ---------------------------------------------------------------

struct CombineArgs {
  std::string first;
  std::string second;
  std::string h1;
  std::string h2;
  unsigned k1 = 0;
  unsigned k2 = 0;
  Output output;
};

int do_combine(const CombineArgs& a, std::ostream& out) {
  const Family f1 = read_family_file(a.first).family;
  const Family f2 = read_family_file(a.second).family;
  CombineOptions options;
  options.h1 = parse_optional_set(a.h1, f1.n());
  options.h2 = parse_optional_set(a.h2, f2.n());
  if (a.k1 > 0) options.k1 = a.k1;
  if (a.k2 > 0) options.k2 = a.k2;
  a.output.emit(out, combine(f1, f2, options));
  return kOk;
}

// --- stats -----------------------------------------------------------------

int do_stats(const std::string& input, std::vector<std::size_t> lengths, bool passthrough, std::ostream& out) {
  const ParsedFamily parsed = read_family_file(input);
  const Family& f = parsed.family;
  if (passthrough) {
    for (const auto& c : parsed.comments) out << c << '\n';
  }
  const ChainIndex index(f);
  out << "n: " << f.n() << '\n';
  out << "size: " << f.size() << '\n';
  out << "longest_chain: " << index.longest() << '\n';
  if (lengths.empty()) {
    for (std::size_t l = 1; l <= index.longest() + 1; ++l) lengths.push_back(l);
  }
  for (std::size_t l : lengths) {
    out << "chains[" << l << "]: ";
    try {
      out << count_chains(f, l) << '\n';
    } catch (const std::overflow_error&) {
      out << "overflow\n";
    }
  }
  if (f.n() == 0) return kOk;
  const AtomPartition p = atoms(f);
  out << "atoms: " << p.atoms.size() << '\n';
  out << "homogeneous_atoms: " << p.homogeneous_atoms.size() << '\n';
  if (p.homogeneous_atoms.size() == 1) {
    const SplitFamily split = split_small_large(f, p.homogeneous_atoms.front());
    out << "homogeneous: " << to_string(split.h) << '\n';
    out << "small: " << split.small.size() << '\n';
    out << "large: " << split.large.size() << '\n';
  } else if (p.homogeneous_atoms.empty()) {
    out << "homogeneous: none\n";
  } else {
    out << "homogeneous: ambiguous\n";
  }
  return kOk;
}

// --- search ----------------------------------------------------------------

int do_search(std::size_t n, unsigned k, std::uint64_t budget, std::ostream& out) {
  try {
    const SearchResult r = brute_force_min_saturated(n, k, budget);
    out << "minimum: " << r.minimum << '\n';
    out << "exhausted: " << (r.exhausted ? "true" : "false") << '\n';
    out << "families_examined: " << r.families_examined << '\n';
    write_family_text(out, r.witness);
    return kOk;
  } catch (const BudgetExceeded& e) {
    out << "exhausted: false\nfamilies_examined: " << e.best().families_examined << '\n';
    return kVerdictFalse;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify and search saturated k-Sperner systems", "sperner"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a family and write it in the family file format");
  c->add_option("--type", construct.type, "powerset|six|epsilon|cambridge|doubled|combined|oversat")
      ->required()
      ->check(CLI::IsMember({"powerset", "six", "epsilon", "cambridge", "doubled", "combined", "oversat"}));
  c->add_option("--k", construct.k, "Chain parameter k");
  c->add_option("--n", construct.n, "Ground set size (powerset, six)");
  c->add_option("--seed", construct.seed, "RNG seed (oversat)");
  c->add_option("--profile", construct.profile, "paper|desk (oversat)");
  c->add_option("--extra", construct.extra, "Extend an oversat family by this many homogeneous elements");
  c->add_option("--part", construct.part, "F|B0|B1 (cambridge)");
  c->add_option("-i,--input", construct.inputs, "Input family file(s) (doubled, combined)");
  add_output(c, construct.output);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a property; exit 0 if it holds, 1 with a witness if not");
  v->add_option("--mode", verify.mode, "ksperner|antichain|saturated|oversaturated")
      ->required()
      ->check(CLI::IsMember({"ksperner", "antichain", "saturated", "oversaturated"}));
  v->add_option("--k", verify.k, "Chain parameter k")->check(CLI::PositiveNumber);
  v->add_option("-i,--input", verify.input, "Family file")->required();
  v->add_option("--max-n", verify.max_n, "Largest ground set swept exhaustively");
  v->add_option("--sampled", verify.sampled, "Test this many random sets instead (non-exhaustive)");
  v->add_option("--seed", verify.seed, "RNG seed for --sampled");

  std::string decompose_input;
  std::size_t decompose_max_n = kDefaultMaxN;
  auto* d = app.add_subcommand("decompose", "Print the canonical decomposition with per-layer saturation");
  d->add_option("-i,--input", decompose_input, "Family file")->required();
  d->add_option("--max-n", decompose_max_n, "Largest ground set swept exhaustively");

  CombineArgs combine_args;
  auto* cb = app.add_subcommand("combine", "Combine two saturated systems with homogeneous sets");
  cb->add_option("first", combine_args.first, "First family file")->required();
  cb->add_option("second", combine_args.second, "Second family file")->required();
  cb->add_option("--h1", combine_args.h1, "Homogeneous set of the first family, e.g. 6,7");
  cb->add_option("--h2", combine_args.h2, "Homogeneous set of the second family");
  cb->add_option("--k1", combine_args.k1, "k of the first family (default: its longest chain)");
  cb->add_option("--k2", combine_args.k2, "k of the second family");
  add_output(cb, combine_args.output);

  std::string stats_input;
  std::vector<std::size_t> stats_lengths;
  bool passthrough = false;
  auto* st = app.add_subcommand("stats", "Print size, chain counts and atom structure");
  st->add_option("-i,--input", stats_input, "Family file")->required();
  st->add_option("--lengths", stats_lengths, "Chain lengths to count")->delimiter(',');
  st->add_flag("--passthrough", passthrough, "Echo '#' metadata lines first");

  bool min_saturated = false;
  std::size_t search_n = 0;
  unsigned search_k = 0;
  std::uint64_t budget = kDefaultSearchBudget;
  auto* se = app.add_subcommand("search", "Exhaustive minimum search on tiny ground sets");
  se->add_flag("--min-saturated", min_saturated, "Find a smallest saturated k-Sperner system")->required();
  se->add_option("--n", search_n, "Ground set size (<= 5)")->required();
  se->add_option("--k", search_k, "Chain parameter (<= 3)")->required();
  se->add_option("--budget", budget, "Node budget");

  std::vector<std::string> argv_store{"sperner"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return do_construct(construct, out);
    if (*v) return do_verify(verify, out);
    if (*d) return do_decompose(decompose_input, decompose_max_n, out);
    if (*cb) return do_combine(combine_args, out);
    if (*st) return do_stats(stats_input, stats_lengths, passthrough, out);
    if (*se) return do_search(search_n, search_k, budget, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sperner::cli
