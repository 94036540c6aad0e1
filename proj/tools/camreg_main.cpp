#include "camreg/dsl.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace camreg;

static int default_threads() {
  if (const char *env = std::getenv("CAMREG_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1)
      return t;
  }
  return 1;
}

int main(int argc, char **argv) {
  CLI::App app{"camreg: graded local cohomology and regularity calculator"};

  std::string input;
  bool json = false;
  int floor = POS_INF;
  int smax = 4;
  int threads = default_threads();
  unsigned seed = 0;
  int size = 20;
  bool seed_given = false, size_given = false;

  app.add_option("input", input,
                 "script file, '-' for stdin, or the word 'verify'");
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_option("--floor", floor, "override the formula scan floor");
  app.add_option("--smax", smax, "Frobenius iterate bound for fdepth");
  app.add_option("--threads", threads, "worker threads for verify");
  app.add_option("--seed", seed, "verify corpus seed")
      ->each([&](const std::string &) { seed_given = true; });
  app.add_option("--size", size, "verify corpus size")
      ->each([&](const std::string &) { size_given = true; });
  app.allow_extras(); // the verify statement id rides as an extra positional

  CLI11_PARSE(app, argc, argv);

  ExecFlags flags;
  flags.json = json;
  flags.floor = floor;
  flags.smax = smax;
  flags.threads = std::max(1, threads);
  flags.seed = seed;
  flags.size = size;
  flags.seed_set = seed_given;
  flags.size_set = size_given;

  if (input.empty()) {
    std::cerr << "usage: camreg <script|-> [flags]  or  camreg verify "
                 "<statement|all> [flags]\n";
    return 2;
  }

  if (input == "verify") {
    std::string statement = "all";
    auto extras = app.remaining();
    if (!extras.empty())
      statement = extras.front();
    ExecResult r = run_verify(statement, flags);
    std::cout << r.output;
    return r.exit_code;
  }

  std::string text;
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "camreg: cannot open '" << input << "'\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  try {
    SessionScript script = parse(text);
    ExecResult r = execute(script, flags);
    std::cout << r.output;
    return r.exit_code;
  } catch (const ParseError &e) {
    std::cerr << "camreg: " << e.what() << "\n";
    return 2;
  } catch (const SemanticError &e) {
    std::cerr << "camreg: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "camreg: engine error: " << e.what() << "\n";
    return 3;
  }
}
