#include "gft/grpfile.hpp"

#include <fstream>
#include <sstream>

namespace gft {

Group parse_group_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(first, last - first + 1);

    if (trimmed.rfind("degree:", 0) == 0) {
      if (degree >= 0)
        throw ParseError("duplicate degree line", lineno);
      try {
        degree = std::stoi(trimmed.substr(7));
      } catch (const std::exception&) {
        throw ParseError("malformed degree", lineno);
      }
      if (degree < 1) throw ParseError("degree must be positive", lineno);
    } else if (trimmed.rfind("gen:", 0) == 0) {
      if (degree < 0) throw ParseError("gen line before degree line", lineno);
      std::string cycles = trimmed.substr(4);
      try {
        gens.push_back(perm_from_cycles(cycles, degree));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), lineno, e.column);
      }
    } else {
      throw ParseError("unrecognized line '" + trimmed + "'", lineno);
    }
  }
  if (degree < 0) throw ParseError("missing degree line", lineno);
  return Group(degree, std::move(gens));
}

Group load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str());
}

std::string to_grp_text(const Group& g) {
  std::ostringstream out;
  out << "degree: " << g.degree() << "\n";
  for (const auto& gen : g.generators()) out << "gen: " << to_cycles(gen) << "\n";
  return out.str();
}

}  // namespace gft
