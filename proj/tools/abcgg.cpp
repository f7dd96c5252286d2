// abcgg: command-line front end.
//
//   abcgg compute  --input g.edges [--index abc,abc_gg,wiener]
//   abcgg generate --family spiro --q 6 --h 2 --k 8 [--output s.edges]
//   abcgg verify   --family chain_triangular --index abc_gg --n 2..8 [--format csv]
//   abcgg bounds   link --input a.edges:0:1 --input b.edges:2 [--index abc_gg]
//   abcgg bounds   edge_deletion --seed 7 --index abc
//
// Exit status: 0 success, 2 usage error or invalid parameters, 3 parse or
// computation error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abcgg/abcgg.hpp"
#include "abcgg/report_io.hpp"

namespace {

using namespace abcgg;

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int to_int(const std::string& s, const std::string& flag) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(flag + ": '" + s + "' is not an integer");
}

// "5" or "2..8".
IntRange parse_range(const std::string& s, const std::string& flag) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(s, flag);
    return {v, v};
  }
  const IntRange r{to_int(s.substr(0, dots), flag), to_int(s.substr(dots + 2), flag)};
  if (r.lo > r.hi) throw UsageError(flag + ": empty range '" + s + "'");
  return r;
}

Family family_flag(const std::string& name) {
  if (auto f = parse_family(name)) return *f;
  throw UsageError("--family: unknown family '" + name + "'");
}

std::vector<IndexKind> index_list(const std::string& csv) {
  std::vector<IndexKind> out;
  for (const auto& name : split(csv, ',')) {
    auto kind = parse_index_kind(name);
    if (!kind) throw UsageError("--index: unknown index '" + name + "'");
    out.push_back(*kind);
  }
  if (out.empty()) throw UsageError("--index: empty list");
  return out;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    write_text_file(output, text);
  }
}

// ---- compute ----

struct ComputeArgs {
  std::string input;
  std::string index = "abc,abc_gg,wiener";
};

void run_compute(const ComputeArgs& a) {
  const auto kinds = index_list(a.index);
  const Graph g = read_edge_list(a.input);
  Json out = Json::object();
  for (IndexKind kind : kinds) {
    const std::string key(to_string(kind));
    try {
      if (kind == IndexKind::Wiener) {
        out[key] = wiener(g);
      } else {
        out[key] = compute(g, kind);
      }
    } catch (const Error& e) {
      out[key] = {{"error", to_string(e.kind())}, {"message", e.what()}};
    }
  }
  std::cout << out.dump() << '\n';
}

// ---- generate ----

struct FamilyArgs {
  std::string family;
  std::optional<int> m, n, q, h, k;
};

FamilySpec spec_from(const FamilyArgs& a) {
  FamilySpec s{.family = family_flag(a.family)};
  const ParamUse use = params_used(s.family);
  const auto take = [](bool used, const std::optional<int>& v, const char* flag) {
    if (!used) {
      if (v) throw UsageError(std::string(flag) + " does not apply to this family");
      return 0;
    }
    if (!v) throw UsageError(std::string(flag) + " is required for this family");
    return *v;
  };
  s.m = take(use.m, a.m, "--m");
  s.n = take(use.n, a.n, "--n");
  s.q = take(use.q, a.q, "--q");
  s.h = take(use.h, a.h, "--h");
  s.k = take(use.k, a.k, "--k");
  validate(s);
  return s;
}

// ---- verify ----

struct VerifyArgs {
  std::string family;
  std::string index;
  std::optional<std::string> m, n, q, h, k;
  std::string format = "json";
  std::string output;
};

void run_verify(const VerifyArgs& a) {
  const Family f = family_flag(a.family);
  if (a.format != "json" && a.format != "csv") throw UsageError("--format: expected json or csv");

  std::vector<IndexKind> kinds;
  if (a.index.empty()) {
    for (IndexKind kind : {IndexKind::Abc, IndexKind::AbcGG}) {
      if (has_theorem(f, kind)) kinds.push_back(kind);
    }
  } else {
    kinds = index_list(a.index);
  }

  const ParamUse use = params_used(f);
  GridRanges ranges;
  const auto range = [](bool used, const std::optional<std::string>& v, const char* flag,
                        std::optional<IntRange>& dst) {
    if (!v) return;
    if (!used) throw UsageError(std::string(flag) + " does not apply to this family");
    dst = parse_range(*v, flag);
  };
  range(use.m, a.m, "--m", ranges.m);
  range(use.n, a.n, "--n", ranges.n);
  range(use.q, a.q, "--q", ranges.q);
  range(use.h, a.h, "--h", ranges.h);
  range(use.k, a.k, "--k", ranges.k);
  const auto grid = make_grid(f, ranges);

  VerificationReport report;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    VerificationReport part = verify_family(f, kinds[i], grid);
    report.entries.insert(report.entries.end(), part.entries.begin(), part.entries.end());
    if (i == 0) report.census_entries = std::move(part.census_entries);
  }
  emit(a.format == "csv" ? to_csv(report) : to_json(report).dump(2) + "\n", a.output);
}

// ---- bounds ----

struct BoundsArgs {
  std::string name;
  std::vector<std::string> inputs;
  std::string index;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  std::string output;
};

// "path", "path:a" or "path:a:b"; trailing integer fields are vertex ids.
struct InputSpec {
  std::string path;
  std::vector<Vertex> ids;
};

InputSpec parse_input(const std::string& arg) {
  auto fields = split(arg, ':');
  InputSpec in;
  while (fields.size() > 1 && in.ids.size() < 2 && !fields.back().empty() &&
         fields.back().find_first_not_of("0123456789") == std::string::npos) {
    in.ids.insert(in.ids.begin(), static_cast<Vertex>(to_int(fields.back(), "--input")));
    fields.pop_back();
  }
  for (std::size_t i = 0; i < fields.size(); ++i) in.path += (i ? ":" : "") + fields[i];
  return in;
}

BoundInstance instance_from(BoundTheorem t, const std::vector<std::string>& inputs) {
  BoundInstance inst;
  const bool deletion = t == BoundTheorem::EdgeDeletion || t == BoundTheorem::VertexDeletion;
  if (deletion) {
    if (inputs.size() != 1) throw UsageError("--input: deletion bounds take exactly one graph");
    const InputSpec in = parse_input(inputs[0]);
    inst.graph = read_edge_list(in.path);
    if (t == BoundTheorem::EdgeDeletion) {
      if (in.ids.size() != 2) throw UsageError("--input: edge_deletion needs path:u:v");
      inst.edge = {in.ids[0], in.ids[1]};
    } else {
      if (in.ids.size() != 1) throw UsageError("--input: vertex_deletion needs path:v");
      inst.vertex = in.ids[0];
    }
    return inst;
  }
  for (const auto& arg : inputs) {
    const InputSpec in = parse_input(arg);
    const Vertex x = in.ids.empty() ? 0 : in.ids[0];
    const Vertex y = in.ids.size() < 2 ? x : in.ids[1];
    inst.parts.emplace_back(read_edge_list(in.path), x, y);
  }
  return inst;
}

void run_bounds(const BoundsArgs& a) {
  const auto theorem = parse_bound_theorem(a.name);
  if (!theorem) throw UsageError("bounds: unknown bound '" + a.name + "'");
  if (a.format != "json" && a.format != "csv") throw UsageError("--format: expected json or csv");

  BoundCase c{*theorem, IndexKind::AbcGG};
  if (takes_index(*theorem)) c.index = IndexKind::Abc;
  if (!a.index.empty()) {
    const auto kinds = index_list(a.index);
    if (kinds.size() != 1 || kinds[0] == IndexKind::Wiener) {
      throw UsageError("--index: bounds take one of abc, abc_gg");
    }
    if (!takes_index(*theorem) && kinds[0] != IndexKind::AbcGG) {
      throw UsageError("--index: " + a.name + " is stated for abc_gg only");
    }
    c.index = kinds[0];
  }

  const bool csv = a.format == "csv";
  std::ostringstream out;
  if (csv) out << kBoundCsvHeader << '\n';

  if (!a.inputs.empty()) {
    if (a.seed) throw UsageError("--seed and --input are mutually exclusive");
    const BoundReport r = evaluate(c, instance_from(*theorem, a.inputs));
    if (csv) {
      out << bound_csv_row(r) << '\n';
    } else {
      out << to_json(r).dump() << '\n';
    }
    emit(out.str(), a.output);
    return;
  }

  // No inputs: stream the randomized suite, one report per line.
  const SuiteSummary s = run_bound_suite(
      c, a.seed.value_or(1), 1000, [&](const BoundReport& r, const BoundInstance& in) {
        const std::string where = describe_instance(c.theorem, in);
        if (csv) {
          out << bound_csv_row(r, where) << '\n';
        } else {
          Json j = to_json(r);
          j["instance"] = where;
          out << j.dump() << '\n';
        }
      });
  if (csv) {
    std::cerr << s.bound.name() << ": " << s.violations << " of " << s.applicable
              << " reports violated, " << s.skipped << " draws outside preconditions\n";
  } else {
    out << Json{{"summary", to_json(s)}}.dump() << '\n';
  }
  emit(out.str(), a.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ABC and ABC_GG indices, family generators, closed-form and bound checks"};
  app.set_help_flag("--help", "Print help");  // keeps -h free for --h
  app.require_subcommand(1);
  std::function<void()> action;

  ComputeArgs compute_args;
  auto* compute_cmd = app.add_subcommand("compute", "Compute indices of an edge-list graph as JSON");
  compute_cmd->add_option("--input", compute_args.input, "Edge-list file")
      ->required()
      ->check(CLI::ExistingFile);
  compute_cmd->add_option("--index", compute_args.index, "Comma list of abc, abc_gg, wiener")
      ->capture_default_str();
  compute_cmd->callback([&] { action = [&] { run_compute(compute_args); }; });

  FamilyArgs gen_args;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("generate", "Write a family member as an edge list");
  gen_cmd->add_option("--family", gen_args.family, "Family name")->required();
  gen_cmd->add_option("--m", gen_args.m);
  gen_cmd->add_option("--n", gen_args.n);
  gen_cmd->add_option("--q", gen_args.q);
  gen_cmd->add_option("--h", gen_args.h);
  gen_cmd->add_option("--k", gen_args.k);
  gen_cmd->add_option("--output", gen_output, "Output file (default: standard output)");
  gen_cmd->callback([&] {
    action = [&] { emit(serialize_edge_list(generate(spec_from(gen_args))), gen_output); };
  });

  VerifyArgs ver_args;
  auto* ver_cmd = app.add_subcommand("verify", "Compare closed forms with direct computation");
  ver_cmd->add_option("--family", ver_args.family, "Family name")->required();
  ver_cmd->add_option("--index", ver_args.index, "Comma list (default: every index with a closed form)");
  ver_cmd->add_option("--m", ver_args.m, "Value or range lo..hi");
  ver_cmd->add_option("--n", ver_args.n, "Value or range lo..hi");
  ver_cmd->add_option("--q", ver_args.q, "Value or range lo..hi");
  ver_cmd->add_option("--h", ver_args.h, "Value or range lo..hi");
  ver_cmd->add_option("--k", ver_args.k, "Value or range lo..hi");
  ver_cmd->add_option("--format", ver_args.format, "json or csv")->capture_default_str();
  ver_cmd->add_option("--output", ver_args.output, "Output file (default: standard output)");
  ver_cmd->callback([&] { action = [&] { run_verify(ver_args); }; });

  BoundsArgs bnd_args;
  auto* bnd_cmd = app.add_subcommand("bounds", "Evaluate an inequality on given graphs or random ones");
  bnd_cmd->add_option("name", bnd_args.name,
                      "edge_deletion, vertex_deletion, link, link_gg_counting, chain_gg, "
                      "bouquet_gg, circuit, circuit_peeling_gg")
      ->required();
  bnd_cmd->add_option("--input", bnd_args.inputs, "path[:a[:b]], repeatable");
  bnd_cmd->add_option("--index", bnd_args.index, "abc or abc_gg");
  bnd_cmd->add_option("--seed", bnd_args.seed, "Seed for the randomized suite (default 1)");
  bnd_cmd->add_option("--format", bnd_args.format, "json or csv")->capture_default_str();
  bnd_cmd->add_option("--output", bnd_args.output, "Output file (default: standard output)");
  bnd_cmd->callback([&] { action = [&] { run_bounds(bnd_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidParams ? kExitUsage : kExitFailure;
  }
  return 0;
}
