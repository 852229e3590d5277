#include "cli_app.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "trihex/counting.hpp"
#include "trihex/enumeration.hpp"
#include "trihex/errors.hpp"
#include "trihex/graph.hpp"
#include "trihex/io.hpp"
#include "trihex/numtheory.hpp"
#include "trihex/verification.hpp"

namespace trihex::cli {

namespace {

constexpr const char* kJobsEnv = "TRIHEX_JOBS";

struct CliConfig {
  std::optional<std::uint64_t> vertices;
  std::optional<std::uint64_t> from;
  std::optional<std::uint64_t> to;
  std::string format;
  std::string output;
  std::string stream = "reps";
  std::string signature;
  std::optional<std::uint64_t> modulus;
  bool with_graphs = false;
  unsigned jobs = 0;
  int verbosity = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> vertex_range(const CliConfig& cfg) {
  if (cfg.vertices && (cfg.from || cfg.to)) {
    throw UsageError("use either --v or --from/--to");
  }
  if (cfg.vertices) {
    counting::require_vertex_count(*cfg.vertices);
    return {*cfg.vertices};
  }
  if (!cfg.from || !cfg.to) throw UsageError("need --v or both --from and --to");
  counting::require_vertex_count(*cfg.from);
  counting::require_vertex_count(*cfg.to);
  if (*cfg.from > *cfg.to) throw UsageError("--from must not exceed --to");
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = *cfg.from; v <= *cfg.to; v += 4) out.push_back(v);
  return out;
}

unsigned resolve_jobs(unsigned requested) {
  if (requested == 0) {
    if (const char* env = std::getenv(kJobsEnv)) {
      try {
        requested = static_cast<unsigned>(std::stoul(env));
      } catch (const std::exception&) {
        throw UsageError(std::string(kJobsEnv) + " must be a nonnegative integer");
      }
    }
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

// Runs fn on every item with up to `jobs` workers; results keep input order.
template <typename Fn>
auto parallel_map(const std::vector<std::uint64_t>& items, unsigned jobs, Fn fn) {
  using Result = decltype(fn(items.front()));
  std::vector<std::optional<Result>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::min<std::size_t>(jobs, items.size());
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  std::vector<Result> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

// Writes to --output when given, otherwise to `out`.
void emit(const CliConfig& cfg, std::ostream& out, const std::string& payload) {
  if (cfg.output.empty() || cfg.output == "-") {
    out << payload;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot open " + cfg.output + " for writing");
  file << payload;
}

std::string structured(nlohmann::ordered_json body, const char* command) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  return doc.dump(2) + "\n";
}

int cmd_count(const CliConfig& cfg, std::ostream& out) {
  const auto range = vertex_range(cfg);
  const auto rows = parallel_map(range, resolve_jobs(cfg.jobs), counting::report);
  std::string payload;
  if (cfg.format == "structured") {
    auto array = nlohmann::ordered_json::array();
    for (const auto& r : rows) array.push_back(io::to_json(r));
    payload = structured({{"rows", std::move(array)}}, "count");
  } else if (cfg.format == "text") {
    std::ostringstream text;
    text << std::setw(6) << "V" << std::setw(8) << "sigma" << std::setw(7) << "delta"
         << std::setw(6) << "mu" << std::setw(4) << "nu" << std::setw(10) << "trihexes"
         << std::setw(7) << "gamma" << std::setw(5) << "rot" << '\n';
    for (const auto& r : rows) {
      text << std::setw(6) << r.vertices << std::setw(8) << r.sigma << std::setw(7)
           << r.delta << std::setw(6) << r.mu << std::setw(4) << r.nu << std::setw(10)
           << r.trihexes << std::setw(7) << r.gamma << std::setw(5) << r.rot_classes
           << '\n';
    }
    payload = text.str();
  } else {
    payload = io::csv_header() + "\n";
    for (const auto& r : rows) payload += io::csv_row(r) + "\n";
  }
  emit(cfg, out, payload);
  return kOk;
}

std::vector<Signature> select_stream(const std::string& stream, std::uint64_t v) {
  if (stream == "all") return enumeration::all_signatures(v);
  if (stream == "reps") return enumeration::trihex_reps(v);
  if (stream == "coinciding") return enumeration::coinciding_signatures(v);
  if (stream == "self-mirror") return enumeration::self_mirror_signatures(v);
  if (stream == "classes") return enumeration::graph_class_reps(v);
  throw UsageError("unknown stream '" + stream + "'");
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.vertices) throw UsageError("enumerate needs --v");
  counting::require_vertex_count(*cfg.vertices);
  const auto sigs = select_stream(cfg.stream, *cfg.vertices);
  std::string payload;
  if (cfg.format == "structured") {
    payload = structured({{"V", *cfg.vertices},
                          {"stream", cfg.stream},
                          {"signatures", io::to_json(sigs)}},
                         "enumerate");
  } else if (cfg.format == "csv") {
    payload = "s,b,f\n";
    for (const auto& sig : sigs) {
      payload += std::to_string(sig.s) + "," + std::to_string(sig.b) + "," +
                 std::to_string(sig.f) + "\n";
    }
  } else {
    payload = io::signature_lines(sigs);
  }
  emit(cfg, out, payload);
  return kOk;
}

int cmd_build(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.signature.empty()) throw UsageError("build needs --sig s,b,f");
  const Signature sig = parse_signature(cfg.signature);
  graph::ExportFormat format = graph::ExportFormat::structured;
  if (cfg.format == "planar_code") {
    format = graph::ExportFormat::planar_code;
  } else if (cfg.format == "dot") {
    format = graph::ExportFormat::dot;
  }
  const graph::EmbeddedGraph g = graph::build(sig);
  emit(cfg, out, graph::export_graph(g, format));
  err << to_string(sig) << ": " << g.size() << " vertices, faces";
  for (const auto& [length, count] : graph::face_census(g)) {
    err << ' ' << length << 'x' << count;
  }
  err << '\n';
  return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto range = vertex_range(cfg);
  const bool with_graphs = cfg.with_graphs;
  const auto per_v = parallel_map(range, resolve_jobs(cfg.jobs), [with_graphs](std::uint64_t v) {
    auto failures = verification::verify_counts(v);
    if (with_graphs) {
      auto more = verification::verify_graphs(v);
      failures.insert(failures.end(), more.begin(), more.end());
    }
    return failures;
  });
  std::vector<verification::CheckFailure> failures;
  for (const auto& chunk : per_v) failures.insert(failures.end(), chunk.begin(), chunk.end());

  std::string payload;
  if (cfg.format == "structured") {
    auto array = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
      array.push_back({{"V", f.vertices}, {"check", f.check},
                       {"expected", f.expected}, {"actual", f.actual}});
    }
    payload = structured({{"from", range.front()},
                          {"to", range.back()},
                          {"with_graphs", with_graphs},
                          {"checked", range.size()},
                          {"passed", failures.empty()},
                          {"failures", std::move(array)}},
                         "verify");
  } else if (cfg.format == "csv") {
    payload = "V,check,expected,actual\n";
    for (const auto& f : failures) {
      payload += std::to_string(f.vertices) + "," + f.check + "," + f.expected +
                 "," + f.actual + "\n";
    }
  } else {
    for (const auto& f : failures) {
      payload += "FAIL V=" + std::to_string(f.vertices) + " " + f.check +
                 ": expected " + f.expected + ", got " + f.actual + "\n";
    }
    payload += (failures.empty() ? "ok" : "FAILED") + std::string(" V=") +
               std::to_string(range.front()) + ".." + std::to_string(range.back()) +
               " (" + std::to_string(range.size()) + " values" +
               (with_graphs ? ", with graphs" : "") + ", " +
               std::to_string(failures.size()) + " failures)\n";
  }
  emit(cfg, out, payload);
  if (cfg.verbosity > 0) err << "verified " << range.size() << " vertex counts\n";
  return failures.empty() ? kOk : kVerificationFailed;
}

int cmd_congruence(const CliConfig& cfg, std::ostream& out) {
  if (!cfg.modulus) throw UsageError("congruence needs --n");
  if (*cfg.modulus == 0) throw InvalidInput("n must be positive");
  const auto f = numtheory::factorize(*cfg.modulus);
  const auto fast = numtheory::solve_fast(f);
  const auto naive = numtheory::solve_naive(*cfg.modulus);
  if (fast != naive || fast.roots.size() != numtheory::omega_count(f)) {
    throw InternalInconsistency("congruence solvers disagree for n=" +
                                std::to_string(*cfg.modulus));
  }
  std::string payload;
  if (cfg.format == "structured") {
    payload = structured({{"n", *cfg.modulus},
                          {"roots", fast.roots},
                          {"count", fast.roots.size()}},
                         "congruence");
  } else {
    for (std::size_t i = 0; i < fast.roots.size(); ++i) {
      if (i > 0) payload += ' ';
      payload += std::to_string(fast.roots[i]);
    }
    payload += "\ncount " + std::to_string(fast.roots.size()) + "\n";
  }
  emit(cfg, out, payload);
  return kOk;
}

void add_range_options(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--v", cfg.vertices, "Vertex count (multiple of 4)");
  cmd->add_option("--from", cfg.from, "First vertex count of the range");
  cmd->add_option("--to", cfg.to, "Last vertex count of the range (inclusive)");
}

void add_common_options(CLI::App* cmd, CliConfig& cfg,
                        const std::vector<std::string>& formats) {
  cmd->add_option("--format", cfg.format, "Output format (default " + formats.front() + ")")
      ->check(CLI::IsMember(formats));
  cmd->add_option("--output,-o", cfg.output, "Output path (default stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact enumeration and counting of trihexes"};
  app.name("trihex");
  app.require_subcommand(1);
  app.add_option("--jobs,-j", cfg.jobs,
                 "Worker threads (0 = $" + std::string(kJobsEnv) + " or all cores)");
  app.add_flag("--verbose,-v", cfg.verbosity, "More diagnostics");

  auto* count = app.add_subcommand("count", "Closed-form counts per vertex count");
  add_range_options(count, cfg);
  add_common_options(count, cfg, {"csv", "structured", "text"});

  auto* enumerate = app.add_subcommand("enumerate", "List one signature stream");
  enumerate->add_option("--v", cfg.vertices, "Vertex count")->required();
  enumerate->add_option("--stream", cfg.stream, "all|reps|coinciding|self-mirror|classes")
      ->check(CLI::IsMember({"all", "reps", "coinciding", "self-mirror", "classes"}))
      ->default_val("reps");
  add_common_options(enumerate, cfg, {"text", "csv", "structured"});

  auto* build = app.add_subcommand("build", "Realize a signature as a plane graph");
  build->add_option("--sig", cfg.signature, "Signature s,b,f")->required();
  add_common_options(build, cfg, {"structured", "planar_code", "dot"});

  auto* verify = app.add_subcommand("verify", "Check closed forms against enumeration");
  add_range_options(verify, cfg);
  verify->add_flag("--with-graphs", cfg.with_graphs, "Also run graph-level checks");
  add_common_options(verify, cfg, {"text", "csv", "structured"});

  auto* congruence = app.add_subcommand("congruence", "Roots of x^2+x+1 mod n");
  congruence->add_option("--n", cfg.modulus, "Modulus")->required();
  add_common_options(congruence, cfg, {"text", "structured"});

  std::vector<std::string> argv_storage{"trihex"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.format.empty()) {
    if (*count) {
      cfg.format = "csv";
    } else if (*build) {
      cfg.format = "structured";
    } else {
      cfg.format = "text";
    }
  }

  const auto started = std::chrono::steady_clock::now();
  int code = kOk;
  try {
    if (*count) {
      code = cmd_count(cfg, out);
    } else if (*enumerate) {
      code = cmd_enumerate(cfg, out);
    } else if (*build) {
      code = cmd_build(cfg, out, err);
    } else if (*verify) {
      code = cmd_verify(cfg, out, err);
    } else if (*congruence) {
      code = cmd_congruence(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
  if (cfg.verbosity > 0) {
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - started);
    err << "elapsed " << std::fixed << std::setprecision(3) << elapsed.count() << " s\n";
  }
  return code;
}

}  // namespace trihex::cli
