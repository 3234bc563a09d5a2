#pragma once

#include <string>

#include "gft/group.hpp"

namespace gft {

/// Parses the line-oriented ".grp" format:
///   degree: <n>
///   gen: <cycles>        (one line per generator; "gen: ()" is the identity)
/// Blank lines and '#' comments are ignored. Parse errors carry line numbers.
Group parse_group_file(const std::string& text);
Group load_group_file(const std::string& path);
std::string to_grp_text(const Group& g);

}  // namespace gft
