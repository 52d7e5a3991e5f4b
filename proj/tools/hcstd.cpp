// Command-line front end: hcstd <command> [session-file] [options]

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hcstd/cli/commands.hpp"

namespace {

using namespace hcstd::cli;

template <class T>
std::vector<T> split_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<T>(v));
    } catch (const std::exception&) {
      throw hcstd::InvalidArgument(std::string("bad ") + what + " '" + text + "'");
    }
  }
  if (out.empty()) throw hcstd::InvalidArgument(std::string("empty ") + what);
  return out;
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hcstd::InvalidArgument("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standard bases of zero-dimensional ideals in local rings, truncated at the highest corner"};
  std::string command, session_path, point_text, examples_text;
  std::optional<std::uint32_t> prime;
  std::optional<int> example;
  CommandOptions opts;

  app.add_option("command", command, "std | hc | vdim | milnor | tjurina | run | bench")->required();
  app.add_option("session", session_path, "session file ('-' for stdin)");
  app.add_option("--example", example, "use built-in example 1..8 instead of a session file");
  app.add_option("--prime", prime, "first specialization prime");
  app.add_option("--point", point_text, "first parameter point v1,...,vs");
  app.add_option("--seed", opts.seed, "seed for specialization points and generated examples")->capture_default_str();
  app.add_option("--max-retries", opts.max_retries, "retries before the untruncated fallback")
      ->capture_default_str();
  app.add_flag("--no-truncate", opts.no_truncate, "compute without a truncation bound");
  app.add_flag("--json", opts.json, "JSON output");
  app.add_option("--timeout", opts.timeout_seconds, "abort after this many seconds");
  app.add_flag("--timings", opts.timings, "include per-phase timings");
  app.add_option("--ideal", opts.ideal, "ideal to use (default: last defined)");
  app.add_option("--poly", opts.poly, "polynomial for milnor/tjurina (default: last defined)");
  app.add_option("--examples", examples_text, "bench: comma-separated example numbers (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto cmd = parse_command(command);
    if (!cmd) throw hcstd::InvalidArgument("unknown command '" + command + "'");
    opts.prime = prime;
    if (!point_text.empty()) opts.point = split_list<std::int64_t>(point_text, "point");
    if (!examples_text.empty()) opts.examples = split_list<int>(examples_text, "example list");

    if (*cmd == Command::bench) {
      CommandResult r = run_bench(opts, std::cout);
      if (!r.err.empty()) std::cerr << "error: " << r.err << '\n';
      return r.exit_code;
    }

    std::string text;
    if (example) {
      if (!session_path.empty()) throw hcstd::InvalidArgument("give either a session file or --example");
      text = example_session(*example, opts.seed);
    } else if (!session_path.empty()) {
      text = read_all(session_path);
    } else {
      throw hcstd::InvalidArgument("no session file given");
    }
    const Session session = parse_session(text);
    CommandResult r = run_command(session, *cmd, opts);
    std::cout << r.out;
    if (!r.err.empty()) std::cerr << "error: " << r.err << '\n';
    return r.exit_code;
  } catch (const hcstd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
