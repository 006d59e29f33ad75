#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tate/cli.hpp"
#include "tate/io.hpp"

namespace golden {

struct Case {
  std::string name;
  int exit = 0;
  std::vector<std::string> args;
};

struct Outcome {
  int exit = 0;
  std::string out;
};

inline std::string substitute(std::string arg) {
  for (auto [key, dir] : {std::pair<std::string, std::string>{"$F", FIXTURE_DIR},
                          std::pair<std::string, std::string>{"$I", std::string(GOLDEN_DIR) + "/inputs"}}) {
    if (arg.rfind(key, 0) == 0) arg = dir + arg.substr(key.size());
  }
  return arg;
}

inline std::vector<Case> cases() {
  std::istringstream in(tate::read_file(std::string(GOLDEN_DIR) + "/cases.txt"));
  std::vector<Case> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    Case c;
    words >> c.name >> c.exit;
    for (std::string w; words >> w;) c.args.push_back(substitute(w));
    out.push_back(std::move(c));
  }
  return out;
}

inline Outcome run(const Case& c) {
  std::ostringstream out, err;
  int code = tate::cli::run(c.args, out, err);
  return {code, out.str()};
}

inline std::string expected_path(const Case& c) { return std::string(GOLDEN_DIR) + "/" + c.name + ".out"; }

// With TATE_REGEN_GOLDEN set, rewrites the expected output instead of comparing.
inline bool regenerating() { return std::getenv("TATE_REGEN_GOLDEN") != nullptr; }

inline void write(const Case& c, const std::string& text) { std::ofstream(expected_path(c)) << text; }

}  // namespace golden
