#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "braid2d/document.hpp"
#include "braid2d/error.hpp"
#include "braid2d/invariants.hpp"
#include "braid2d/markov_search.hpp"

namespace braid2d::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Missing or unreadable input; reported as a usage error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  buffer << in.rdbuf();
  return buffer.str();
}

// A path names one document, or a directory whose regular files are read in
// name order.
std::vector<std::string> expand_paths(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  for (const auto& p : paths) {
    if (p != "-" && fs::is_directory(p)) {
      std::vector<std::string> inside;
      for (const auto& entry : fs::directory_iterator(p)) {
        const std::string name = entry.path().filename().string();
        if (entry.is_regular_file() && !name.empty() && name[0] != '.') {
          inside.push_back(entry.path().string());
        }
      }
      std::sort(inside.begin(), inside.end());
      files.insert(files.end(), inside.begin(), inside.end());
    } else {
      files.push_back(p);
    }
  }
  return files;
}

struct LoadedTuple {
  std::string label;
  MonodromyTuple tuple;
};

LoadedTuple load(const std::string& path) {
  TupleDocument doc = parse_document(read_input(path));
  std::string label = doc.label.empty() ? fs::path(path).filename().string() : doc.label;
  return {std::move(label), to_tuple(doc)};
}

std::string join_longs(const std::vector<long>& values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t t = 0; t < values.size(); ++t) os << (t ? "," : "") << values[t];
  os << ']';
  return os.str();
}

json key_json(const CanonicalKey& key) {
  json entries = json::array();
  for (const auto& nf : key.entries) {
    json factors = json::array();
    for (const auto& f : nf.factors) factors.push_back(f.images());
    entries.push_back({{"infimum", nf.infimum}, {"factors", factors}});
  }
  return {{"degree", key.degree}, {"entries", entries}};
}

json nf_json(const NormalForm& nf) {
  json factors = json::array();
  for (const auto& f : nf.factors) factors.push_back(f.images());
  return {{"degree", nf.degree}, {"infimum", nf.infimum}, {"factors", factors}};
}

struct BoundsFlags {
  std::size_t max_depth = 8;
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> max_conj_len;
  std::size_t node_budget = 1'000'000;
  std::string moves = "hurwitz,conjugation,stabilization";

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-depth", max_depth, "Longest move sequence searched")->capture_default_str();
    cmd->add_option("--max-degree", max_degree, "Largest degree reached by stabilization (default m+2)");
    cmd->add_option("--max-conj-len", max_conj_len,
                    "Longest conjugator allowed in searched tuples (default: input maximum + 2)");
    cmd->add_option("--node-budget", node_budget, "Cap on explored states")->capture_default_str();
    cmd->add_option("--moves", moves, "Comma-separated move families: hurwitz, conjugation, stabilization")
        ->capture_default_str();
  }

  SearchBounds resolve(std::size_t degree, std::size_t conj_len) const {
    SearchBounds b;
    b.max_depth = max_depth;
    b.max_degree = max_degree.value_or(degree + 2);
    b.max_conjugator_length = max_conj_len.value_or(conj_len + 2);
    b.node_budget = node_budget;
    b.moves = MoveSet{false, false, false};
    std::istringstream is(moves);
    for (std::string family; std::getline(is, family, ',');) {
      if (family == "hurwitz") {
        b.moves.hurwitz = true;
      } else if (family == "conjugation") {
        b.moves.conjugation = true;
      } else if (family == "stabilization") {
        b.moves.stabilization = true;
      } else if (!family.empty()) {
        throw CLI::ValidationError("--moves", "unknown move family '" + family + "'");
      }
    }
    return b;
  }
};

json verdict_json(const Verdict& v) {
  json j{{"verdict", verdict_name(v)}};
  if (const auto* eq = std::get_if<Equivalent>(&v)) {
    j["trace"] = format_move_script(eq->trace);
    j["length"] = eq->trace.size();
  } else if (const auto* d = std::get_if<Distinct>(&v)) {
    j["invariant"] = d->invariant;
    j["left"] = d->left;
    j["right"] = d->right;
  } else {
    j["explored"] = std::get<Unknown>(v).explored;
  }
  return j;
}

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  int validate(const std::vector<std::string>& paths) {
    int status = kExitOk;
    json report = json::array();
    for (const auto& path : expand_paths(paths)) {
      json row{{"path", path}};
      try {
        load(path);
        row["ok"] = true;
        if (!json_) out_ << "ok " << path << '\n';
      } catch (const Error& e) {
        status = kExitDomainError;
        row["ok"] = false;
        row["error"] = std::string(to_string(e.code()));
        row["message"] = e.message();
        if (e.entry()) row["entry"] = *e.entry() + 1;
        if (!json_) out_ << "error " << path << ": " << e.what() << '\n';
      }
      report.push_back(row);
    }
    if (json_) out_ << report.dump(2) << '\n';
    return status;
  }

  int invariants(const std::vector<std::string>& paths, const std::vector<int>& hom_n) {
    json report = json::array();
    bool first = true;
    for (const auto& path : expand_paths(paths)) {
      const LoadedTuple in = load(path);
      const MonodromyTuple& t = in.tuple;
      const GroupPresentation group = complement_group(t);
      json j{{"label", in.label},
             {"degree", t.degree()},
             {"branch_points", t.branch_count()},
             {"euler_characteristic", euler_characteristic_closure(t)},
             {"components", components(t)},
             {"genus", genus_list(t)},
             {"abelianization_rank", abelianization_rank(group)}};
      json homs = json::object();
      for (int n : hom_n) homs["S" + std::to_string(n)] = count_homs(group, n);
      j["hom_counts"] = homs;
      if (json_) {
        report.push_back(j);
        continue;
      }
      if (!first) out_ << '\n';
      first = false;
      out_ << "label: " << in.label << '\n'
           << "degree: " << t.degree() << '\n'
           << "branch_points: " << t.branch_count() << '\n'
           << "euler_characteristic: " << euler_characteristic_closure(t) << '\n'
           << "components: " << components(t) << '\n'
           << "genus: " << join_longs(genus_list(t)) << '\n'
           << "abelianization_rank: " << abelianization_rank(group) << '\n';
      for (int n : hom_n) out_ << "homs_to_S" << n << ": " << homs["S" + std::to_string(n)] << '\n';
    }
    if (json_) out_ << (report.size() == 1 ? report[0] : report).dump(2) << '\n';
    return kExitOk;
  }

  int normal_form_of(const std::optional<std::string>& path, std::optional<std::size_t> degree,
                     const std::optional<std::string>& word) {
    if (word || degree) {
      if (!word || !degree) throw CLI::ValidationError("--word", "--word requires --degree");
      const NormalForm nf = normal_form(parse_braid_word(*degree, *word));
      if (json_) {
        out_ << nf_json(nf).dump(2) << '\n';
      } else {
        out_ << nf.to_string() << '\n';
      }
      return kExitOk;
    }
    if (!path) throw CLI::ValidationError("normal-form", "give a document or --degree/--word");
    const CanonicalKey key = canonical_key(load(*path).tuple);
    if (json_) {
      out_ << key_json(key).dump(2) << '\n';
    } else {
      out_ << key.to_string() << '\n';
    }
    return kExitOk;
  }

  int apply(const std::string& path, const std::string& script) {
    const LoadedTuple in = load(path);
    const MonodromyTuple result = verify_trace(in.tuple, parse_move_script(script));
    const TupleDocument doc = to_document(result, in.label == fs::path(path).filename().string() ? "" : in.label);
    if (json_) {
      out_ << to_json(doc).dump(2) << '\n';
    } else {
      out_ << to_text(doc);
    }
    return kExitOk;
  }

  int equiv(const std::string& left_path, const std::string& right_path, const BoundsFlags& flags) {
    const LoadedTuple left = load(left_path);
    const LoadedTuple right = load(right_path);
    const SearchBounds bounds =
        flags.resolve(std::max(left.tuple.degree(), right.tuple.degree()),
                      std::max(left.tuple.max_conjugator_length(), right.tuple.max_conjugator_length()));
    const Verdict verdict = search_equivalence(left.tuple, right.tuple, bounds);
    if (const auto* eq = std::get_if<Equivalent>(&verdict)) {
      if (canonical_key(verify_trace(left.tuple, eq->trace)) != canonical_key(right.tuple)) {
        throw Error(ErrorCode::InapplicableMove, "trace does not replay to the target");
      }
    }
    json j = verdict_json(verdict);
    if (json_) {
      j["left"] = left.label;
      j["right"] = right.label;
      out_ << j.dump(2) << '\n';
      return kExitOk;
    }
    out_ << "verdict: " << verdict_name(verdict) << '\n';
    if (const auto* eq = std::get_if<Equivalent>(&verdict)) {
      out_ << "length: " << eq->trace.size() << '\n' << "trace: " << format_move_script(eq->trace) << '\n';
    } else if (const auto* d = std::get_if<Distinct>(&verdict)) {
      out_ << "invariant: " << d->invariant << '\n'
           << "left: " << d->left << '\n'
           << "right: " << d->right << '\n';
    } else {
      out_ << "explored: " << std::get<Unknown>(verdict).explored << '\n';
    }
    return kExitOk;
  }

  int enumerate(std::size_t degree, std::size_t branches, std::size_t conj_len, bool count_only) {
    std::size_t count = 0;
    json docs = json::array();
    for_each_tuple(degree, branches, conj_len, [&](const MonodromyTuple& t) {
      ++count;
      if (count_only) return;
      const TupleDocument doc = to_document(t, "enum-" + std::to_string(count));
      if (json_) {
        docs.push_back(to_json(doc));
      } else {
        if (count > 1) out_ << '\n';
        out_ << to_text(doc);
      }
    });
    if (count_only) {
      if (json_) {
        out_ << json{{"count", count}}.dump(2) << '\n';
      } else {
        out_ << count << '\n';
      }
    } else if (json_) {
      out_ << docs.dump(2) << '\n';
    }
    return kExitOk;
  }

  int census_of(const std::vector<LoadedTuple>& inputs, const BoundsFlags& flags) {
    std::vector<MonodromyTuple> tuples;
    std::size_t degree = 1;
    std::size_t conj_len = 0;
    for (const auto& in : inputs) {
      tuples.push_back(in.tuple);
      degree = std::max(degree, in.tuple.degree());
      conj_len = std::max(conj_len, in.tuple.max_conjugator_length());
    }
    const auto classes = census(tuples, flags.resolve(degree, conj_len));
    json rows = json::array();
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& cls = classes[c];
      json members = json::array();
      for (std::size_t j : cls.members) members.push_back(inputs[j].label);
      rows.push_back({{"class", c + 1},
                      {"size", cls.members.size()},
                      {"closed", cls.closed},
                      {"euler_characteristic", cls.invariants.euler_characteristic},
                      {"components", cls.invariants.components},
                      {"genus", cls.invariants.genus_multiset},
                      {"abelianization_rank", cls.invariants.abelianization_rank},
                      {"homs_to_S3", cls.invariants.homs_to_s3 ? json(*cls.invariants.homs_to_s3) : json()},
                      {"members", members}});
    }
    if (json_) {
      out_ << json{{"tuples", inputs.size()}, {"classes", rows}}.dump(2) << '\n';
      return kExitOk;
    }
    out_ << "tuples: " << inputs.size() << "  classes: " << classes.size() << '\n';
    out_ << "class\tsize\tclosed\tchi\tcomponents\tgenus\tab_rank\thoms_S3\tmembers\n";
    for (const auto& r : rows) {
      std::string members;
      for (const auto& m : r["members"]) members += (members.empty() ? "" : ",") + m.get<std::string>();
      std::vector<long> genus = r["genus"].get<std::vector<long>>();
      out_ << r["class"] << '\t' << r["size"] << '\t' << (r["closed"].get<bool>() ? "yes" : "no") << '\t'
           << r["euler_characteristic"] << '\t' << r["components"] << '\t' << join_longs(genus) << '\t'
           << r["abelianization_rank"] << '\t'
           << (r["homs_to_S3"].is_null() ? std::string("-") : r["homs_to_S3"].dump()) << '\t' << members
           << '\n';
    }
    return kExitOk;
  }

  void set_json(bool on) { json_ = on; }

 private:
  std::ostream& out_;
  bool json_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simple 2-dimensional braids as band-monodromy tuples", "braid2d"};
  app.require_subcommand(1);
  bool json_output = false;
  app.add_flag("--json", json_output, "Machine-readable output");
  app.fallthrough();

  std::vector<std::string> paths;
  auto* validate = app.add_subcommand("validate", "Check tuple documents");
  validate->add_option("documents", paths, "Files or directories")->required();

  std::vector<int> hom_n{3};
  auto* invariants = app.add_subcommand("invariants", "Closure invariants of tuple documents");
  invariants->add_option("documents", paths, "Files or directories")->required();
  invariants->add_option("--hom-n", hom_n, "Symmetric groups S_n to count homomorphisms into")
      ->delimiter(',')
      ->check(CLI::Range(1, 5));

  std::optional<std::string> nf_path;
  std::optional<std::size_t> nf_degree;
  std::optional<std::string> nf_word;
  auto* nf = app.add_subcommand("normal-form", "Canonical key of a tuple, or normal form of a braid word");
  nf->add_option("document", nf_path, "Tuple document");
  nf->add_option("--degree", nf_degree, "Braid degree for --word");
  nf->add_option("--word", nf_word, "Braid word, signed integers separated by spaces or commas");

  std::string doc_path;
  std::string script;
  auto* apply = app.add_subcommand("apply", "Apply a move script to a tuple");
  apply->add_option("document", doc_path, "Tuple document")->required();
  apply->add_option("--script", script, "Moves: H<i>, H<i>', C<+-j>, S, D")->required();

  std::string left_path;
  std::string right_path;
  BoundsFlags bounds;
  auto* equiv = app.add_subcommand("equiv", "Search for a move sequence relating two tuples");
  equiv->add_option("left", left_path, "First tuple document")->required();
  equiv->add_option("right", right_path, "Second tuple document")->required();
  bounds.attach(equiv);

  std::size_t degree = 2;
  std::size_t branches = 2;
  std::size_t conj_len = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List every tuple within bounds");
  enumerate->add_option("--degree", degree, "Degree m")->required()->check(CLI::Range(1, 8));
  enumerate->add_option("--branches", branches, "Branch point count k")->required();
  enumerate->add_option("--max-conj-len", conj_len, "Longest conjugator")->capture_default_str();
  enumerate->add_flag("--count", count_only, "Only print how many tuples there are");

  std::vector<std::string> census_dirs;
  auto* census_cmd = app.add_subcommand("census", "Partition tuples into move-connected classes");
  census_cmd->add_option("--dir", census_dirs, "Directories (or files) of tuple documents");
  census_cmd->add_option("--degree", degree, "Enumerate tuples of this degree")->check(CLI::Range(1, 8));
  census_cmd->add_option("--branches", branches, "Branch point count when enumerating");
  bounds.attach(census_cmd);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  Runner runner(out);
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    runner.set_json(json_output);
    if (app.got_subcommand(validate)) return runner.validate(paths);
    if (app.got_subcommand(invariants)) return runner.invariants(paths, hom_n);
    if (app.got_subcommand(nf)) return runner.normal_form_of(nf_path, nf_degree, nf_word);
    if (app.got_subcommand(apply)) return runner.apply(doc_path, script);
    if (app.got_subcommand(equiv)) return runner.equiv(left_path, right_path, bounds);
    if (app.got_subcommand(enumerate)) return runner.enumerate(degree, branches, conj_len, count_only);
    if (app.got_subcommand(census_cmd)) {
      std::vector<LoadedTuple> inputs;
      if (!census_dirs.empty()) {
        for (const auto& path : expand_paths(census_dirs)) inputs.push_back(load(path));
      } else {
        if (census_cmd->count("--degree") == 0 || census_cmd->count("--branches") == 0) {
          throw CLI::ValidationError("census", "give --dir, or --degree and --branches");
        }
        // When enumerating, --max-conj-len bounds the enumerated conjugators too.
        std::size_t n = 0;
        for_each_tuple(degree, branches, bounds.max_conj_len.value_or(0), [&](const MonodromyTuple& t) {
          inputs.push_back({"enum-" + std::to_string(++n), t});
        });
      }
      return runner.census_of(inputs, bounds);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const Error& e) {
    if (json_output) {
      out << json{{"error", std::string(to_string(e.code()))}, {"message", e.message()}}.dump(2) << '\n';
    }
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsageError;
}

}  // namespace braid2d::cli
