#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "potmono/integer.hpp"
#include "potmono/presentation.hpp"

namespace potmono::cli {

enum class Command { Validate, Orbits, Reorder, Color, Conjugacy, Verify };
enum class Format { Text, Structured };

struct RunConfig {
  Command command = Command::Validate;
  std::string spec_path;
  Window window{-200, 200};
  Format format = Format::Text;
  std::optional<std::string> emit_diagram;
  bool timestamp = true;
  std::uint64_t triple_samples = 100000;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefused = 1;     // analysis refused or a verification failed
inline constexpr int kExitInputError = 2;  // unreadable, malformed or non-bijective input

inline constexpr int kSchemaVersion = 1;
// Every pairwise check is quadratic in the window.
inline constexpr std::int64_t kMaxWindowSize = 20001;

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses arguments and runs; returns the exit status.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Graphviz DOT: window points as nodes, edges x -> f(x) inside the window,
// nodes filled by the two-coloring when the map has one.
std::string orbit_diagram(const presentation::ValidatedBijection& f, const Window& window);
// Throws Error naming the path if the file cannot be written.
void emit_orbit_diagram(const presentation::ValidatedBijection& f, const Window& window,
                        const std::string& path);

}  // namespace potmono::cli
