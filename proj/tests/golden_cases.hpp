#pragma once

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudofuzzy::testing {

struct GoldenCase {
  std::string name;
  std::optional<std::string> stdin_path;
  std::vector<std::string> args;
};

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

inline std::string expand(const std::string& token, const std::string& dir) {
  return token.rfind("@/", 0) == 0 ? dir + token.substr(1) : token;
}

inline std::vector<GoldenCase> load_golden_cases(const std::string& dir) {
  std::ifstream in(dir + "/cases.txt");
  if (!in) throw std::runtime_error("cannot open " + dir + "/cases.txt");
  std::vector<GoldenCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    const auto bar1 = line.find('|');
    const auto bar2 = line.find('|', bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos) throw std::runtime_error("bad case line: " + line);
    GoldenCase c;
    c.name = trim(line.substr(0, bar1));
    const auto input = trim(line.substr(bar1 + 1, bar2 - bar1 - 1));
    if (input != "-") c.stdin_path = expand(input, dir);
    std::istringstream args(line.substr(bar2 + 1));
    for (std::string tok; args >> tok;) c.args.push_back(expand(tok, dir));
    cases.push_back(std::move(c));
  }
  return cases;
}

inline std::string golden_record(const std::string& stdout_text, int exit_code) {
  return stdout_text + "[exit " + std::to_string(exit_code) + "]\n";
}

inline std::string expected_path(const std::string& dir, const std::string& name) {
  return dir + "/expected/" + name + ".txt";
}

inline std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace pseudofuzzy::testing
