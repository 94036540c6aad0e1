#pragma once

#include "camreg/verify.hpp"

#include <map>

namespace camreg {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int ln, int cl, const std::string &msg)
      : std::runtime_error("parse error at " + std::to_string(ln) + ":" +
                           std::to_string(cl) + ": " + msg),
        line(ln), col(cl) {}
};

struct SemanticError : std::runtime_error {
  int line;
  SemanticError(int ln, const std::string &msg)
      : std::runtime_error("semantic error at line " + std::to_string(ln) +
                           ": " + msg),
        line(ln) {}
};

struct SessionScript {
  RingSpec ring;
  std::vector<std::string> base_names, positive_names;
  std::map<std::string, std::vector<Polynomial>> ideals;
  std::vector<std::string> ideal_order;
  std::map<std::string, ModulePresentation> modules;
  std::vector<std::string> module_order;

  struct Cmd {
    std::string verb;      // gb resolve betti reg end cd grade fdepth verify
    std::string target;    // module / ideal / statement id / "all"
    std::string wrt_name;  // named ideal or "" for inline/R+
    std::vector<Polynomial> wrt_gens;
    bool wrt_rplus = false; // the +R+ tail (or bare R+)
    int arg = POS_INF;      // maxlen / level / at-degree
    unsigned seed = 0;
    int size = 20;
    int line = 0;
    std::string echo; // canonical one-line form
  };
  std::vector<Cmd> commands;
};

/// Full LL(1) parse with positioned errors.
SessionScript parse(const std::string &text);

/// Canonical pretty-print; parse(render_script(parse(s))) is stable.
std::string render_script(const SessionScript &s);

struct ExecFlags {
  bool json = false;
  int floor = POS_INF; // scan floor override for formula scans
  int smax = 4;
  int threads = 1;
  unsigned seed = 0; // defaults for verify without inline flags
  int size = 20;
  bool seed_set = false, size_set = false;
};

struct ExecResult {
  std::string output;
  int exit_code = 0; // 0 ok, 1 verify FAILS, 2 parse/semantic, 3 engine
};

/// Dispatch every command; deterministic output for fixed script + flags.
ExecResult execute(const SessionScript &s, const ExecFlags &flags);

/// Run the standalone suite (the `camreg verify ...` entry point).
ExecResult run_verify(const std::string &statement, const ExecFlags &flags);

} // namespace camreg
