#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "stepalg/generators.hpp"

namespace stepalg {

// A fully-resolved command invocation.  The canonical key is a stable
// textual encoding of every field that influences the output; its hash
// names the cache entry.  The cache directory is deliberately not part
// of the key.
struct JobSpec {
  std::string command;           // describe | hasse | generators | verify | qcheck
  char series = 'A';
  int rank = 2;
  std::vector<int> levi;         // 1-based simple-root indices
  std::string side = "both";     // both | minus | plus
  int class_index = -1;          // -1 = all classes
  std::string format = "text";   // text | json | latex | graph
  bool oracle = false;
  int count = 200;
  std::uint64_t seed = 1;
  std::string cache_dir;         // empty = caching disabled

  std::string canonical_key() const;
};

std::uint64_t fnv1a64(std::string_view s);

// Models selected by the side/class filters, in deterministic order.
std::vector<ComplementModel> selected_models(
    const std::shared_ptr<const AlgebraContext>& ctx, const JobSpec& spec);

std::string render_describe(const JobSpec& spec);
std::string render_hasse(const JobSpec& spec);
std::string render_generators(const JobSpec& spec);

struct RunOutcome {
  bool ok = true;
  std::string output;
};
RunOutcome run_verify(const JobSpec& spec);
RunOutcome run_qcheck(const JobSpec& spec);

// Executes a fully-parsed job, including cache lookup/stores for the
// pure rendering commands.  Returns the process exit code (0 success /
// verified, 1 verification failure, 2 usage error).
int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err);

// Command-line entry point: parses arguments (and an optional flat
// key=value config file; explicit flags win), builds the JobSpec and
// runs it.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace stepalg
