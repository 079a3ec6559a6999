#include "potmono/cli.hpp"

#include <openssl/evp.h>

#include <array>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "potmono/coloring.hpp"
#include "potmono/conjugacy.hpp"
#include "potmono/errors.hpp"
#include "potmono/oracle.hpp"
#include "potmono/orbits.hpp"
#include "potmono/reorder.hpp"

namespace potmono::cli {
namespace {

using json = nlohmann::ordered_json;
using presentation::ValidatedBijection;

class IoError : public Error {
 public:
  using Error::Error;
};

struct Outcome {
  json result = json::object();
  std::vector<VerificationReport> reports;
  std::vector<std::string> text;
};

const char* command_name(Command c) {
  switch (c) {
    case Command::Validate:
      return "validate";
    case Command::Orbits:
      return "orbits";
    case Command::Reorder:
      return "reorder";
    case Command::Color:
      return "color";
    case Command::Conjugacy:
      return "conjugacy";
    case Command::Verify:
      return "verify";
  }
  return "?";
}

// Integers travel as decimal strings; they are unbounded.
json num(const Integer& x) { return to_string(x); }

json nums(const std::vector<Integer>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(num(x));
  return out;
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"performed", c.performed}, {"violations", c.violations}});
  }
  return {{"subject", r.subject}, {"passed", r.passed()}, {"checks", checks}};
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string window_text(const Window& w) { return "[" + to_string(w.lo) + ", " + to_string(w.hi) + "]"; }

// Points of [-radius, radius] inside the window, for sample output.
std::vector<Integer> sample_points(const Window& w, int radius) {
  std::vector<Integer> out;
  for (Integer x = std::max(w.lo, Integer(-radius)); x <= std::min(w.hi, Integer(radius)); ++x) {
    out.push_back(x);
  }
  return out;
}

void require_analysis(const ValidatedBijection& f) {
  if (f.capability() != presentation::Capability::FullAnalysis) {
    throw UnsupportedPresentation("mixed presentation " + presentation::format(f) +
                                  " supports evaluation only");
  }
}

Outcome do_validate(const ValidatedBijection& f) {
  Outcome o;
  o.result["capability"] =
      f.capability() == presentation::Capability::FullAnalysis ? "full_analysis" : "eval_only";
  if (const auto* a = f.family_a()) {
    o.result["family"] = "translation";
    o.result["shift"] = num(a->shift());
    json patch = json::array();
    for (const auto& [k, v] : a->patch()) patch.push_back({num(k), num(v)});
    o.result["patch"] = patch;
  } else if (const auto* b = f.family_b()) {
    o.result["family"] = "paired_shift";
    o.result["direction"] = b->direction;
  } else {
    o.result["family"] = "opaque";
  }
  o.result["canonical"] = presentation::format(f);
  o.text.push_back("valid bijection (" + o.result["family"].get<std::string>() + ", " +
                   o.result["capability"].get<std::string>() + ")");
  return o;
}

Outcome do_orbits(const ValidatedBijection& f, const RunConfig& cfg) {
  require_analysis(f);
  Outcome o;
  orbits::OrbitStructure structure(f);
  auto classification = structure.classify(cfg.window);
  const auto& count = classification.line_count;

  o.result["line_count"] = count.countably_infinite ? json("countably_infinite") : num(count.count);
  if (count.countably_infinite) {
    o.result["representative_rule"] = "unpair(i, 0)";
  } else {
    o.result["representatives"] = nums(classification.representatives);
  }
  json cycles = json::array();
  for (const auto& c : classification.cycles) cycles.push_back(nums(c.cycle));
  o.result["cycles"] = cycles;
  o.result["cofinite_fixed_tail"] = classification.cofinite_fixed_tail;
  o.result["periodic_point_free"] = structure.is_periodic_point_free();
  o.result["potentially_monotonic"] = structure.is_periodic_point_free();

  o.text.push_back("line orbits: " + (count.countably_infinite ? std::string("countably infinite")
                                                               : to_string(count.count)));
  if (count.countably_infinite) {
    o.text.push_back("representatives: i -> unpair(i, 0)");
  } else {
    o.text.push_back("representatives: " + format_points(classification.representatives));
  }
  std::string cycle_line = "cycles";
  if (classification.cofinite_fixed_tail) cycle_line += " (fixed tail; listed within " + window_text(cfg.window) + ")";
  cycle_line += ": " + std::to_string(classification.cycles.size());
  o.text.push_back(cycle_line);
  for (std::size_t i = 0; i < classification.cycles.size() && i < 10; ++i) {
    o.text.push_back("  " + format_points(classification.cycles[i].cycle));
  }
  o.text.push_back(std::string("potentially monotonic: ") + (structure.is_periodic_point_free() ? "yes" : "no"));

  o.reports.push_back(oracle::compare_partitions(oracle::brute_orbits(f, cfg.window),
                                                 structure.restrict_to(cfg.window)));
  return o;
}

json label_json(const reorder::Label& l) {
  return {{"alpha", num(l.alpha)}, {"step", num(l.step)}, {"inner_rank", l.inner_rank}};
}

Outcome do_reorder(const ValidatedBijection& f, const RunConfig& cfg) {
  require_analysis(f);
  Outcome o;
  auto order = reorder::build_order(f);
  auto nf = reorder::normal_form(f);

  o.result["k"] = nf.k() ? num(*nf.k()) : json("countably_infinite");
  if (order.cover()) {
    json cover = json::array();
    for (const auto& set : order.cover()->sets) cover.push_back(nums({set.begin(), set.end()}));
    o.result["cover"] = cover;
  }
  json samples = json::array();
  o.text.push_back("normal form index group: " + (nf.k() ? "Z_" + to_string(*nf.k()) : std::string("Z")));
  o.text.push_back("sample labels (alpha, step, inner_rank) and h:");
  for (const Integer& x : sample_points(cfg.window, 5)) {
    auto label = order.label(x);
    auto h = nf.h(x);
    samples.push_back({{"x", num(x)}, {"label", label_json(label)}, {"h", {num(h.index), num(h.level)}}});
    o.text.push_back("  " + to_string(x) + ": (" + to_string(label.alpha) + ", " + to_string(label.step) + ", " +
                     std::to_string(label.inner_rank) + ")  h = (" + to_string(h.index) + ", " +
                     to_string(h.level) + ")");
  }
  o.result["sample_labels"] = samples;
  o.reports.push_back(reorder::verify_order(f, order, cfg.window, cfg.triple_samples));
  o.reports.push_back(reorder::verify_normal_form(f, nf, cfg.window));
  return o;
}

Outcome do_color(const ValidatedBijection& f, const RunConfig& cfg) {
  require_analysis(f);
  Outcome o;
  auto order = reorder::build_order(f);
  auto coloring = coloring::two_coloring(order);
  std::string line;
  json samples = json::array();
  for (const Integer& x : sample_points(cfg.window, 10)) {
    const char* c = coloring(x) == coloring::Color::A ? "A" : "B";
    samples.push_back({{"x", num(x)}, {"color", c}});
    line += " " + to_string(x) + ":" + c;
  }
  std::set<Integer> whole;
  for (Integer x = cfg.window.lo; x <= cfg.window.hi; ++x) whole.insert(x);
  const bool single = coloring::is_color(f, whole);
  o.result["chromatic_number"] = 2;
  o.result["sample_colors"] = samples;
  o.result["window_is_one_color"] = single;
  o.text.push_back("chromatic number: 2");
  o.text.push_back("sample colors:" + line);
  o.text.push_back(std::string("window as a single color: ") + (single ? "yes" : "no"));
  o.reports.push_back(coloring::verify_coloring(f, coloring, cfg.window));
  return o;
}

Outcome do_conjugacy(const ValidatedBijection& f, const RunConfig& cfg) {
  require_analysis(f);
  Outcome o;
  auto report = conjugacy::decide_shift_conjugacy(f);
  o.text.push_back("decision: " + conjugacy::describe(report));
  if (const auto* c = std::get_if<conjugacy::Conjugate>(&report)) {
    o.result["decision"] = "conjugate";
    o.result["k"] = num(c->k);
    json samples = json::array();
    for (const Integer& x : sample_points(cfg.window, 5)) samples.push_back({num(x), num(c->witness(x))});
    o.result["witness_samples"] = samples;
  } else if (std::holds_alternative<conjugacy::Identity>(report)) {
    o.result["decision"] = "identity";
  } else {
    o.result["decision"] = "not_conjugate";
    const auto& reason = std::get<conjugacy::NotConjugate>(report).reason;
    if (const auto* p = std::get_if<conjugacy::PeriodicPoints>(&reason)) {
      o.result["reason"] = "periodic_points";
      o.result["cycle"] = nums(p->cycle);
    } else {
      o.result["reason"] = "infinitely_many_orbits";
    }
  }
  o.reports.push_back(conjugacy::verify_conjugacy(f, report, cfg.window));
  return o;
}

Outcome do_verify(const ValidatedBijection& f, const RunConfig& cfg) {
  require_analysis(f);
  Outcome o = do_orbits(f, cfg);
  json result;
  result["orbits"] = o.result;
  if (orbits::is_periodic_point_free(f)) {
    for (auto part : {do_reorder(f, cfg), do_color(f, cfg)}) {
      o.reports.insert(o.reports.end(), part.reports.begin(), part.reports.end());
    }
    result["order"] = "checked";
  } else {
    result["order"] = "skipped: periodic points";
    o.text.push_back("order and coloring skipped: periodic points");
  }
  auto conj = do_conjugacy(f, cfg);
  result["conjugacy"] = conj.result;
  o.text.insert(o.text.end(), conj.text.begin(), conj.text.end());
  o.reports.insert(o.reports.end(), conj.reports.begin(), conj.reports.end());
  o.result = result;
  return o;
}

Outcome dispatch(const ValidatedBijection& f, const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Validate:
      return do_validate(f);
    case Command::Orbits:
      return do_orbits(f, cfg);
    case Command::Reorder:
      return do_reorder(f, cfg);
    case Command::Color:
      return do_color(f, cfg);
    case Command::Conjugacy:
      return do_conjugacy(f, cfg);
    case Command::Verify:
      return do_verify(f, cfg);
  }
  return {};
}

struct Failure {
  int status;
  std::string kind;
  std::string message;
  json details = json::object();
};

json witness_json(const NotBijective::Witness& w) {
  if (const auto* c = std::get_if<NotBijective::Collision>(&w)) {
    return {{"collision", {num(c->first), num(c->second)}}, {"image", num(c->image)}};
  }
  return {{"no_preimage", num(std::get<NotBijective::NoPreimage>(w).value)}};
}

}  // namespace

std::string orbit_diagram(const ValidatedBijection& f, const Window& window) {
  std::optional<coloring::Coloring> colors;
  if (f.capability() == presentation::Capability::FullAnalysis && orbits::is_periodic_point_free(f)) {
    colors = coloring::two_coloring(reorder::build_order(f));
  }
  std::ostringstream dot;
  dot << "digraph orbits {\n  node [shape=circle];\n";
  for (Integer x = window.lo; x <= window.hi; ++x) {
    dot << "  \"" << x << "\"";
    if (colors) {
      dot << " [style=filled, fillcolor=" << ((*colors)(x) == coloring::Color::A ? "lightblue" : "salmon") << "]";
    }
    dot << ";\n";
  }
  for (Integer x = window.lo; x <= window.hi; ++x) {
    Integer y = f.eval(x);
    if (window.contains(y)) dot << "  \"" << x << "\" -> \"" << y << "\";\n";
  }
  dot << "}\n";
  return dot.str();
}

void emit_orbit_diagram(const ValidatedBijection& f, const Window& window, const std::string& path) {
  std::string text = orbit_diagram(f, window);
  std::ofstream file(path);
  if (!file) throw IoError("cannot write diagram to '" + path + "'");
  file << text;
  if (!file) throw IoError("cannot write diagram to '" + path + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  json record;
  record["schema_version"] = kSchemaVersion;
  record["command"] = command_name(config.command);
  record["input"] = {{"path", config.spec_path}, {"digest", nullptr}};
  record["window"] = {num(config.window.lo), num(config.window.hi)};

  std::optional<Failure> failure;
  Outcome outcome;
  std::string canonical;
  try {
    std::ifstream file(config.spec_path, std::ios::binary);
    if (!file) throw IoError("cannot read spec file '" + config.spec_path + "'");
    std::string bytes((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    record["input"]["digest"] = "sha256:" + sha256_hex(bytes);

    ValidatedBijection f = presentation::load(bytes);
    canonical = presentation::format(f);
    outcome = dispatch(f, config);
    if (config.emit_diagram) emit_orbit_diagram(f, config.window, *config.emit_diagram);
  } catch (const SyntaxError& e) {
    failure = Failure{kExitInputError, "syntax_error", e.what(),
                      {{"line", e.line()}, {"column", e.column()}, {"expected", e.expected()}}};
  } catch (const InvalidPatch& e) {
    failure = Failure{kExitInputError, "invalid_patch", e.what(), {{"witness", nums(e.witness())}}};
  } catch (const NotBijective& e) {
    failure = Failure{kExitInputError, "not_bijective", e.what(), {{"witness", witness_json(e.witness())}}};
  } catch (const IoError& e) {
    failure = Failure{kExitInputError, "io_error", e.what()};
  } catch (const PeriodicPointFound& e) {
    failure = Failure{kExitRefused, "periodic_point_found", e.what(), {{"cycle", nums(e.cycle())}}};
  } catch (const UnsupportedPresentation& e) {
    failure = Failure{kExitRefused, "unsupported_presentation", e.what()};
  } catch (const std::exception& e) {
    failure = Failure{kExitRefused, "internal_error", e.what()};
  }

  int status = kExitOk;
  bool verified = true;
  for (const auto& r : outcome.reports) verified = verified && r.passed();
  if (failure) {
    status = failure->status;
  } else if (!verified) {
    status = kExitRefused;
  }

  record["status"] = failure ? (status == kExitInputError ? "input_error" : "refused")
                             : (verified ? "ok" : "verification_failed");
  record["exit_code"] = status;
  record["canonical"] = canonical.empty() ? json(nullptr) : json(canonical);
  record["result"] = failure ? json(nullptr) : outcome.result;
  json verification = json::array();
  json witnesses = json::array();
  for (const auto& r : outcome.reports) {
    verification.push_back(report_json(r));
    for (const auto& w : r.witnesses) {
      witnesses.push_back({{"subject", r.subject}, {"check", w.check}, {"points", nums(w.points)}});
    }
  }
  record["verification"] = verification;
  record["witnesses"] = witnesses;
  record["error"] = failure ? json{{"kind", failure->kind}, {"message", failure->message}, {"details", failure->details}}
                            : json(nullptr);
  if (config.timestamp) record["timestamp"] = utc_timestamp();

  if (failure) {
    err << "potmono: " << failure->kind << ": " << failure->message << " (" << config.spec_path << ")\n";
  } else if (!verified) {
    err << "potmono: verification failed for " << config.spec_path << "\n";
  }

  if (config.format == Format::Structured) {
    out << record.dump(2) << '\n';
    return status;
  }
  out << "command: " << command_name(config.command) << "\n";
  out << "spec: " << config.spec_path << "\n";
  if (!canonical.empty()) out << "canonical: " << canonical << "\n";
  if (failure) {
    out << "error (" << failure->kind << "): " << failure->message << "\n";
    return status;
  }
  for (const auto& line : outcome.text) out << line << "\n";
  for (const auto& r : outcome.reports) out << "verify " << r.summary() << "\n";
  if (config.timestamp) out << "timestamp: " << record["timestamp"].get<std::string>() << "\n";
  return status;
}

namespace {

std::optional<Window> parse_window(const std::string& text) {
  auto colon = text.find(':', 1);
  if (colon == std::string::npos) return std::nullopt;
  auto lo = parse_integer(text.substr(0, colon));
  auto hi = parse_integer(text.substr(colon + 1));
  if (!lo || !hi) return std::nullopt;
  return Window{*lo, *hi};
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Re-order Z so that a presented bijection becomes strictly increasing.", "potmono"};
  RunConfig config;
  std::string command;
  std::string window = "-200:200";
  std::string format = "text";
  std::string diagram;
  bool no_timestamp = false;

  app.add_option("command", command, "validate | orbits | reorder | color | conjugacy | verify")
      ->required()
      ->check(CLI::IsMember({"validate", "orbits", "reorder", "color", "conjugacy", "verify"}));
  app.add_option("--spec", config.spec_path, "Spec file in the map DSL")->required();
  app.add_option("--window", window, "Inspected window lo:hi (default -200:200)");
  app.add_option("--format", format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--emit-diagram", diagram, "Write a Graphviz orbit diagram of the window");
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field");
  app.add_option("--triple-samples", config.triple_samples, "Sampled triples for transitivity")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "potmono: " << e.what() << "\n";
    return kExitInputError;
  }

  auto parsed = parse_window(window);
  if (!parsed || parsed->lo >= parsed->hi) {
    err << "potmono: --window expects lo:hi with lo < hi, got '" << window << "'\n";
    return kExitInputError;
  }
  if (parsed->size() > kMaxWindowSize) {
    err << "potmono: --window spans more than " << kMaxWindowSize << " points\n";
    return kExitInputError;
  }
  config.window = *parsed;

  static const std::map<std::string, Command> commands{
      {"validate", Command::Validate}, {"orbits", Command::Orbits},       {"reorder", Command::Reorder},
      {"color", Command::Color},       {"conjugacy", Command::Conjugacy}, {"verify", Command::Verify}};
  config.command = commands.at(command);
  config.format = format == "structured" ? Format::Structured : Format::Text;
  if (!diagram.empty()) config.emit_diagram = diagram;
  config.timestamp = !no_timestamp;
  return run(config, out, err);
}

}  // namespace potmono::cli
