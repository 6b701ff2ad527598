// frob: command-line front end for the Frobenius / unbounded subset-sum
// engines. Exit codes: 0 answered, 1 internal error, 2 invalid input,
// 3 verification mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frob/bench.hpp"
#include "frob/frob.hpp"
#include "frob/verify.hpp"

namespace {

using frob::InvalidInput;
using frob::Value;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct InstanceArgs {
  std::string items;
  std::string file;
  std::optional<Value> t;
  std::string algo = "sumset";
  bool json = false;

  void add_to(CLI::App* app, bool with_target) {
    auto* it = app->add_option("--items", items, "Quoted, whitespace separated item sizes");
    auto* fl = app->add_option("--file", file, "Instance file (items line, optional 't <int>' line)");
    it->excludes(fl);
    if (with_target) app->add_option("--t", t, "Target value");
    app->add_option("--algo", algo, "Engine: sumset|minconv|roundrobin|oracle");
    app->add_flag("--json", json, "Emit JSON");
  }

  frob::io::InstanceFile load() const {
    if (!items.empty()) return frob::io::InstanceFile{frob::parse_items(items), t};
    if (!file.empty()) {
      auto f = frob::io::parse_instance_file(read_file(file));
      if (t) f.target = t;
      return f;
    }
    throw InvalidInput("one of --items or --file is required");
  }
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int cmd_frobenius(const InstanceArgs& a) {
  const auto src = a.load();
  const frob::Instance inst(src.items);
  const auto engine = frob::parse_engine(a.algo);
  const auto run = frob::frobenius_number(inst, engine);
  if (a.json)
    emit({{"schema", frob::io::kSchemaVersion}, {"frobenius", run.value}});
  else
    std::cout << run.value << '\n';
  return kExitOk;
}

int cmd_subsetsum(const InstanceArgs& a) {
  const auto src = a.load();
  if (!src.target) throw InvalidInput("subsetsum needs a target (--t or a 't' line in --file)");
  const Value t = *src.target;
  if (t < 0) throw InvalidInput("target must be non-negative, got " + std::to_string(t));
  const auto engine = frob::parse_engine(a.algo);
  const auto norm = frob::normalize_gcd(src.items, t);
  bool feasible = false;
  std::optional<frob::Solution> witness;
  if (!norm.infeasible_by_gcd) {
    feasible = frob::subset_sum(*norm.instance, *norm.target, engine);
    // multiplicities are the same for the scaled and the original items
    constexpr Value kWitnessLimit = 20'000'000;
    if (feasible && *norm.target <= kWitnessLimit) witness = frob::oracle::reconstruct_solution(*norm.instance, *norm.target);
  }
  if (a.json) {
    json j{{"schema", frob::io::kSchemaVersion}, {"feasible", feasible}};
    if (witness) j["witness"] = witness->multiplicities;
    if (norm.infeasible_by_gcd) j["infeasible_by_gcd"] = norm.divisor;
    emit(j);
  } else {
    std::cout << (feasible ? "feasible" : "infeasible") << '\n';
    if (norm.infeasible_by_gcd) std::cout << "gcd " << norm.divisor << " does not divide " << t << '\n';
    if (witness) {
      std::cout << "witness:";
      for (Value x : witness->multiplicities) std::cout << ' ' << x;
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_alltargets(const InstanceArgs& a) {
  const auto src = a.load();
  const frob::Instance inst(src.items);
  const auto run = frob::all_targets(inst, frob::parse_engine(a.algo));
  if (a.json) {
    emit(frob::io::to_json(run.table));
  } else {
    std::cout << "modulus " << run.table.modulus << '\n';
    for (std::size_t i = 0; i < run.table.entries.size(); ++i) std::cout << (i ? " " : "") << run.table.entries[i];
    std::cout << '\n';
  }
  return kExitOk;
}

struct SubaddArgs {
  std::string file;
  std::string seq;
  bool cyclic = false;
  bool json = false;
};

int cmd_subadd(const SubaddArgs& a) {
  std::string text = !a.seq.empty() ? a.seq : (!a.file.empty() ? read_file(a.file) : std::string());
  if (text.empty()) throw InvalidInput("one of --seq or --file is required");
  const auto seq = frob::io::parse_cost_sequence(text);
  const auto v = a.cyclic ? frob::minconv::is_mod_subadditive(seq) : frob::minconv::is_subadditive(seq);
  if (a.json) {
    json j{{"schema", frob::io::kSchemaVersion}, {"subadditive", !v.has_value()}};
    if (v) j["witness"] = {v->i, v->j};
    emit(j);
  } else if (!v) {
    std::cout << "subadditive\n";
  } else {
    const std::size_t k = a.cyclic ? (v->i + v->j) % seq.size() : v->i + v->j;
    std::cout << "violation " << v->i << ' ' << v->j << ": " << frob::io::format_cost(seq[v->i]) << " + "
              << frob::io::format_cost(seq[v->j]) << " < " << frob::io::format_cost(seq[k]) << '\n';
  }
  return kExitOk;
}

struct ReduceArgs {
  std::string from_seq;
  std::string to = "uss";
  bool verify = false;
  std::size_t seeds = 200;
  std::uint64_t seed = 1;
  std::string out;
};

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(path);
  if (!os) throw InvalidInput("cannot write '" + path + "'");
  os << text;
}

int cmd_reduce(const ReduceArgs& a) {
  if (a.verify) {
    frob::verify::Options opt;
    opt.seed = a.seed;
    opt.sequences = a.seeds;
    frob::verify::Report rep;
    frob::verify::run_reduction_checks(opt, rep);
    std::cout << frob::verify::format_report(rep);
    return rep.ok() ? kExitOk : kExitMismatch;
  }
  if (a.from_seq.empty()) throw InvalidInput("reduce needs --from-seq <file> or --verify");
  std::vector<Value> seq;
  for (auto c : frob::io::parse_cost_sequence(read_file(a.from_seq))) {
    if (!frob::minconv::is_finite(c)) throw InvalidInput("reduction sequences must be finite");
    seq.push_back(c);
  }
  if (a.to == "uss") {
    const auto red = frob::reductions::subadd_to_uss(seq);
    write_output(a.out, frob::io::format_instance_file(red.instance.items(), red.target));
  } else if (a.to == "frobenius") {
    const auto red = frob::reductions::subadd_to_frobenius(seq);
    write_output(a.out, frob::io::format_instance_file(red.instance.items(), std::nullopt));
  } else {
    throw InvalidInput("--to must be uss or frobenius");
  }
  return kExitOk;
}

struct GenArgs {
  std::size_t n = 3;
  Value a_max = 100;
  std::uint64_t seed = 1;
  std::optional<Value> t;
};

int cmd_gen(const GenArgs& a) {
  const auto inst = frob::random_instance(a.n, a.a_max, a.seed);
  std::cout << frob::io::format_instance_file(inst.items(), a.t);
  return kExitOk;
}

struct BenchArgs {
  std::vector<Value> sizes{1000, 10000, 100000};
  std::size_t per_size = 3;
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::vector<std::string> engines{"sumset", "roundrobin", "minconv"};
  std::size_t reps = 3;
  bool omit_timing = false;
  std::string out;
};

int cmd_bench(const BenchArgs& a) {
  frob::bench::Options opt;
  opt.sizes = a.sizes;
  opt.per_size = a.per_size;
  opt.n = a.n;
  opt.seed = a.seed;
  opt.reps = a.reps;
  opt.omit_timing = a.omit_timing;
  opt.engines.clear();
  for (const auto& e : a.engines) opt.engines.push_back(frob::parse_engine(e));
  const auto rows = frob::bench::run(opt, [](std::size_t id, frob::Engine e) {
    std::cerr << "skipped instance " << id << " for engine " << frob::engine_name(e) << " (too large)\n";
  });
  std::ostringstream os;
  frob::bench::write_csv(os, rows);
  write_output(a.out, os.str());
  return kExitOk;
}

struct VerifyArgs {
  std::size_t instances = 500;
  std::size_t max_n = 8;
  Value a_max = 200;
  std::uint64_t seed = 1;
  bool structure = false;
  bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& a) {
  frob::verify::Options opt;
  opt.instances = a.instances;
  opt.max_n = a.max_n;
  opt.a_max = a.a_max;
  opt.seed = a.seed;
  opt.structure = a.structure;
  if (a.inject_fault) {
    // corrupt one residue class of the sumset engine's table whenever a_0 > 2
    opt.sumset_table_override = [](const frob::Instance& inst) {
      auto t = frob::sumset::alltargets_sumset(inst);
      if (t.modulus > 2) t.entries[1] += t.modulus;
      return t;
    };
  }
  const auto rep = frob::verify::run(opt);
  std::cout << frob::verify::format_report(rep);
  if (rep.ok()) return kExitOk;
  if (rep.counterexample) {
    std::cerr << "counterexample: " << *rep.counterexample << '\n';
    std::cout << "counterexample: " << *rep.counterexample << '\n';
  }
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius numbers, unbounded subset sum and residue tables"};
  app.require_subcommand(1);

  InstanceArgs frob_args, uss_args, at_args;
  frob_args.add_to(app.add_subcommand("frobenius", "Frobenius number of the items"), false);
  uss_args.add_to(app.add_subcommand("subsetsum", "Is t a non-negative combination of the items?"), true);
  at_args.add_to(app.add_subcommand("alltargets", "Residue table modulo the smallest item"), false);

  SubaddArgs sub_args;
  auto* sub = app.add_subcommand("subadd", "Subadditivity test of a sequence (ints, inf, -inf)");
  sub->add_option("--file", sub_args.file, "Sequence file");
  sub->add_option("--seq", sub_args.seq, "Quoted sequence");
  sub->add_flag("--cyclic", sub_args.cyclic, "Index sums taken modulo the length");
  sub->add_flag("--json", sub_args.json, "Emit JSON");

  ReduceArgs red_args;
  auto* red = app.add_subcommand("reduce", "Build reduction instances or validate the reductions");
  red->add_option("--from-seq", red_args.from_seq, "File with a[1..n-1] (values >= 1)");
  red->add_option("--to", red_args.to, "uss|frobenius")->check(CLI::IsMember({"uss", "frobenius"}));
  red->add_flag("--verify", red_args.verify, "Run the reduction validators");
  red->add_option("--seeds", red_args.seeds, "Number of random cases for --verify");
  red->add_option("--seed", red_args.seed, "Master seed for --verify");
  red->add_option("--out", red_args.out, "Write the instance here instead of stdout");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Random coprime instance file");
  gen->add_option("--n", gen_args.n, "Largest item index (n+1 items)");
  gen->add_option("--a-max", gen_args.a_max, "Upper bound on item sizes");
  gen->add_option("--seed", gen_args.seed, "Seed");
  gen->add_option("--t", gen_args.t, "Optional target line");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time engines over a generated corpus, CSV output");
  bench->add_option("--sizes", bench_args.sizes, "a_n values")->delimiter(',');
  bench->add_option("--per-size", bench_args.per_size, "Instances per size");
  bench->add_option("--n", bench_args.n, "Largest item index");
  bench->add_option("--seed", bench_args.seed, "Seed");
  bench->add_option("--engines", bench_args.engines, "Engines")->delimiter(',');
  bench->add_option("--reps", bench_args.reps, "Repetitions per cell (median reported)");
  bench->add_flag("--omit-timing", bench_args.omit_timing, "Write wall_ns = 0 for reproducible output");
  bench->add_option("--out", bench_args.out, "CSV path (default stdout)");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "Cross-engine equivalence and invariant suite");
  ver->add_option("--instances", ver_args.instances, "Random instances");
  ver->add_option("--max-n", ver_args.max_n, "Largest item index");
  ver->add_option("--a-max", ver_args.a_max, "Upper bound on item sizes");
  ver->add_option("--seed", ver_args.seed, "Seed");
  ver->add_flag("--structure", ver_args.structure, "Also check the lexmax support-structure bounds");
  ver->add_flag("--inject-fault", ver_args.inject_fault, "Corrupt the sumset engine (harness self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand("frobenius")) return cmd_frobenius(frob_args);
    if (app.got_subcommand("subsetsum")) return cmd_subsetsum(uss_args);
    if (app.got_subcommand("alltargets")) return cmd_alltargets(at_args);
    if (app.got_subcommand("subadd")) return cmd_subadd(sub_args);
    if (app.got_subcommand("reduce")) return cmd_reduce(red_args);
    if (app.got_subcommand("gen")) return cmd_gen(gen_args);
    if (app.got_subcommand("bench")) return cmd_bench(bench_args);
    if (app.got_subcommand("verify")) return cmd_verify(ver_args);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
