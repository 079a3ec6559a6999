// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "potmono/coloring.hpp"
#include "potmono/conjugacy.hpp"
#include "potmono/errors.hpp"
#include "potmono/oracle.hpp"
#include "potmono/orbits.hpp"
#include "potmono/reorder.hpp"
#include "support/corpus.hpp"

using namespace potmono;
using presentation::load;
using presentation::ValidatedBijection;

namespace {

constexpr std::size_t kCorpusSize = 100;
constexpr std::uint64_t kCorpusSeed = 20261016;
constexpr std::uint64_t kTripleSamples = 100000;
constexpr double kOrderSeconds = 60;
constexpr double kNormalFormSeconds = 10;
constexpr double kOracleSeconds = 120;
constexpr int kMutations = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string seconds_text(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

int failures = 0;

void report(int number, const std::string& title, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  std::cout << "criterion " << number << ": " << (out.pass ? "PASS" : "FAIL") << "  " << title << "  ["
            << out.detail << "; " << seconds_text(seconds_since(start)) << "]" << std::endl;
  if (!out.pass) ++failures;
}

std::vector<testing::CorpusEntry> corpus() {
  static const auto entries = testing::CorpusGenerator(kCorpusSeed).take(kCorpusSize);
  return entries;
}

Outcome order_construction() {
  auto start = std::chrono::steady_clock::now();
  Window w{-300, 300};
  std::uint64_t pairs = 0, triples = 0, violations = 0;
  for (const auto& [text, f] : corpus()) {
    auto order = reorder::build_order(f);
    auto r = reorder::verify_order(f, order, w, kTripleSamples);
    violations += r.violations();
    pairs += r.tally("monotonicity").performed;
    triples += r.tally("transitivity").performed;
    if (r.tally("transitivity").performed < kTripleSamples) ++violations;
  }
  double t = seconds_since(start);
  std::ostringstream d;
  d << corpus().size() << " maps, window [-300,300], " << pairs << " pairs, " << triples << " triples, " << violations
    << " violations, limit " << kOrderSeconds << " s";
  return {violations == 0 && corpus().size() >= 100 && t < kOrderSeconds, d.str()};
}

Outcome shift_normal_form() {
  auto start = std::chrono::steady_clock::now();
  std::vector<ValidatedBijection> maps;
  for (const auto& e : corpus()) maps.push_back(e.f);
  maps.push_back(load("paired_shift"));
  std::uint64_t checked = 0, bad = 0;
  for (const auto& f : maps) {
    auto nf = reorder::normal_form(f);
    for (long x = -1000; x <= 1000; ++x) {
      ++checked;
      if (nf.h(f.eval(x)) != nf.add(nf.h(x), reorder::NormalForm::shift())) ++bad;
    }
  }
  double t = seconds_since(start);
  std::ostringstream d;
  d << maps.size() << " maps incl. paired_shift, |x| <= 1000, " << checked << " points, " << bad
    << " mismatches, limit " << kNormalFormSeconds << " s";
  return {bad == 0 && t < kNormalFormSeconds, d.str()};
}

Outcome definition_equivalence() {
  std::uint64_t checked = 0, bad = 0;
  auto maps = corpus();
  maps.erase(maps.begin() + 25, maps.end());
  for (const auto& [text, f] : maps) {
    auto order = reorder::build_order(f);
    auto nf = reorder::normal_form(f);
    std::vector<reorder::GroupElement> h;
    std::vector<reorder::Label> labels;
    for (long x = -200; x <= 200; ++x) {
      h.push_back(nf.h(x));
      labels.push_back(order.label(x));
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = 0; j < h.size(); ++j) {
        ++checked;
        auto pulled = std::tie(h[i].index, h[i].level) <=> std::tie(h[j].index, h[j].level);
        if (pulled != (labels[i] <=> labels[j])) ++bad;
      }
    }
    // spot-check the handle's own comparator against the cached labels
    for (long x = -200; x <= 200; x += 13) {
      for (long y = -200; y <= 200; y += 11) {
        ++checked;
        if (order.compare(x, y) != (labels[x + 200] <=> labels[y + 200])) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << "25 maps, window [-200,200], " << checked << " pair comparisons, " << bad << " disagreements";
  return {bad == 0, d.str()};
}

Outcome chromatic_number_two() {
  std::uint64_t violations = 0, single_color_windows = 0;
  Window w{-500, 500};
  std::set<Integer> whole;
  for (long x = -500; x <= 500; ++x) whole.insert(x);
  for (const auto& [text, f] : corpus()) {
    auto c = coloring::two_coloring(reorder::build_order(f));
    violations += coloring::verify_coloring(f, c, w).violations();
    if (!f.family_a()->is_identity() && coloring::is_color(f, whole)) ++single_color_windows;
  }
  std::ostringstream d;
  d << corpus().size() << " maps, window [-500,500], " << violations << " coloring violations, "
    << single_color_windows << " windows that are a single color";
  return {violations == 0 && single_color_windows == 0, d.str()};
}

Outcome conjugacy_decisions() {
  using namespace conjugacy;
  Window w{-300, 300};
  std::vector<std::string> problems;
  for (long k : {1, 2, 3, 5}) {
    auto f = load("map{tail+=" + std::to_string(k) + ";tail-=" + std::to_string(k) + ";patch{}}");
    auto r = decide_shift_conjugacy(f);
    const auto* c = std::get_if<Conjugate>(&r);
    if (!c || c->k != k || !verify_conjugacy(f, r, w).passed()) problems.push_back("translation by " + std::to_string(k));
  }
  auto swap = decide_shift_conjugacy(load("map{tail+=0;tail-=0;patch{0->1,1->0}}"));
  const auto* ns = std::get_if<NotConjugate>(&swap);
  if (!ns || !std::holds_alternative<PeriodicPoints>(ns->reason)) problems.push_back("swap");
  auto ps = load("paired_shift");
  auto pr = decide_shift_conjugacy(ps);
  const auto* np = std::get_if<NotConjugate>(&pr);
  if (!np || !std::holds_alternative<InfinitelyManyOrbits>(np->reason)) problems.push_back("paired_shift decision");
  auto order = reorder::build_order(ps);
  auto vr = reorder::verify_order(ps, order, w, kTripleSamples);
  if (!vr.passed() || vr.tally("transitivity").performed < kTripleSamples) problems.push_back("paired_shift order");
  std::ostringstream d;
  d << "k in {1,2,3,5} conjugate on [-300,300]; swap refuted by cycle; paired_shift refuted and monotonized ("
    << vr.tally("monotonicity").performed << " pairs)";
  for (const auto& p : problems) d << "; failed: " << p;
  return {problems.empty(), d.str()};
}

Outcome oracle_equivalence() {
  auto start = std::chrono::steady_clock::now();
  testing::CorpusGenerator gen(kCorpusSeed + 1, {.periodic_point_free = false});
  Window w{-200, 200};
  int partition_bad = 0, with_cycles = 0;
  for (int i = 0; i < 100; ++i) {
    auto [text, f] = gen.next();
    orbits::OrbitStructure s(f);
    if (!s.is_periodic_point_free()) ++with_cycles;
    if (!oracle::compare_partitions(oracle::brute_orbits(f, w), s.restrict_to(w)).passed()) ++partition_bad;
    auto c = s.classify(w);
    std::size_t cycle_points = 0;
    for (const auto& p : c.cycles) cycle_points += p.cycle.size();
    std::size_t brute_cycle_points = 0;
    for (const auto& k : oracle::brute_orbits(f, w).classes) {
      if (k.kind == WindowPartition::Kind::Cycle) brute_cycle_points += k.points.size();
    }
    if (cycle_points != brute_cycle_points) ++partition_bad;
  }
  std::mt19937_64 rng(kCorpusSeed + 2);
  int discrete_bad = 0, discrete_true = 0;
  for (int i = 0; i < 1000; ++i) {
    auto [text, f] = gen.next();
    std::set<Integer> u;
    int n = static_cast<int>(rng() % 6);
    for (int j = 0; j < n; ++j) u.insert(Integer(static_cast<long>(rng() % 31) - 15));
    bool engine = orbits::strongly_discrete_set(f, u);
    discrete_true += engine;
    if (engine != oracle::brute_strongly_discrete(f, u, 100)) ++discrete_bad;
  }
  double t = seconds_since(start);
  std::ostringstream d;
  d << "100 partitions (" << with_cycles << " with cycles), " << partition_bad << " mismatches; 1000 (f,U) pairs ("
    << discrete_true << " strongly discrete), " << discrete_bad << " mismatches; limit " << kOracleSeconds << " s";
  return {partition_bad == 0 && discrete_bad == 0 && t < kOracleSeconds, d.str()};
}

Outcome greedy_cover() {
  std::vector<std::set<Integer>> singletons;
  for (long i = 0; i < 401; ++i) singletons.push_back({presentation::zigzag(i)});
  Window w{-200, 200};
  std::vector<std::string> problems;
  auto t1 = orbits::greedy_cover(load("map{tail+=1;tail-=1;patch{}}"), singletons, w);
  if (t1.sets != std::vector<std::set<Integer>>{{0}}) problems.push_back("translation by 1");
  auto t2 = orbits::greedy_cover(load("map{tail+=2;tail-=2;patch{}}"), singletons, w);
  if (t2.sets != std::vector<std::set<Integer>>{{0}, {1}}) problems.push_back("translation by 2");
  int invalid = 0;
  for (const auto& [text, f] : corpus()) {
    auto cover = orbits::greedy_cover(f, singletons, w);
    orbits::OrbitStructure s(f);
    if (orbits::find_cover_violation(s, cover, w)) ++invalid;
  }
  std::ostringstream d;
  d << "translation by 1 -> [{0}], by 2 -> [{0},{1}]; " << corpus().size() << " corpus covers, " << invalid
    << " invalid on [-200,200]";
  for (const auto& p : problems) d << "; failed: " << p;
  return {problems.empty() && invalid == 0, d.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Mutants that still parse and validate may legitimately succeed (exit 0);
// everything else must exit 1 or 2 with a diagnostic, and nothing may crash.
Outcome robustness() {
  namespace fs = std::filesystem;
  std::vector<std::string> seeds;
  for (const char* name : {"translate1.spec", "translate2.spec", "swap01.spec", "paired_shift.spec", "patched3.spec",
                           "composed.spec"}) {
    seeds.push_back(slurp(fs::path(POTMONO_TEST_DATA) / name));
  }
  for (const auto& e : testing::CorpusGenerator(kCorpusSeed + 3).take(6)) seeds.push_back(e.text + "\n");

  fs::path dir = fs::temp_directory_path() / ("potmono_mutants_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::mt19937_64 rng(kCorpusSeed + 4);
  int crashes = 0, rejected = 0, accepted = 0, silent = 0, wrongly_accepted = 0, other_status = 0;
  const std::vector<std::string> commands{"validate", "orbits", "reorder", "color", "conjugacy", "verify"};
  for (int i = 0; i < kMutations; ++i) {
    std::string text = seeds[rng() % seeds.size()];
    int edits = 1 + static_cast<int>(rng() % 3);
    for (int e = 0; e < edits; ++e) {
      std::size_t pos = text.empty() ? 0 : rng() % text.size();
      char byte = static_cast<char>(rng() % 256);
      switch (rng() % 3) {
        case 0:
          if (!text.empty()) text[pos] = byte;
          break;
        case 1:
          text.insert(text.begin() + static_cast<long>(pos), byte);
          break;
        default:
          if (!text.empty()) text.erase(pos, 1);
      }
    }
    fs::path spec = dir / "mutant.spec";
    fs::path err = dir / "stderr.txt";
    std::ofstream(spec, std::ios::binary) << text;
    const std::string& command = commands[rng() % commands.size()];
    std::string line = std::string("'") + POTMONO_CLI_PATH + "' " + command + " --spec '" + spec.string() +
                       "' --window=-20:20 --no-timestamp > /dev/null 2> '" + err.string() + "'";
    int raw = std::system(line.c_str());
    int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : 128 + WTERMSIG(raw);
    bool diagnostic = !slurp(err).empty();
    bool valid = true;
    try {
      load(text);
    } catch (const Error&) {
      valid = false;
    }
    if (status >= 128) {
      ++crashes;
    } else if (status == 1 || status == 2) {
      ++rejected;
      if (!diagnostic) ++silent;
    } else if (status == 0) {
      ++accepted;
      if (!valid) ++wrongly_accepted;
    } else {
      ++other_status;
    }
  }
  fs::remove_all(dir);
  std::ostringstream d;
  d << kMutations << " mutants: " << crashes << " crashes, " << rejected << " exited 1/2 (" << silent
    << " without diagnostic), " << accepted << " still-valid mutants exited 0 (" << wrongly_accepted
    << " of them invalid), " << other_status << " other statuses";
  return {crashes == 0 && silent == 0 && wrongly_accepted == 0 && other_status == 0, d.str()};
}

}  // namespace

int main() {
  report(1, "order construction on the corpus", order_construction);
  report(2, "shift normal form h(f(x)) = h(x) + (0,1)", shift_normal_form);
  report(3, "pulled-back normal-form order equals the constructed order", definition_equivalence);
  report(4, "two-coloring valid, no single color", chromatic_number_two);
  report(5, "conjugacy decisions and the paired-shift separation", conjugacy_decisions);
  report(6, "engine agrees with brute-force oracles", oracle_equivalence);
  report(7, "greedy cover", greedy_cover);
  report(8, "CLI robustness under byte mutations", robustness);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
