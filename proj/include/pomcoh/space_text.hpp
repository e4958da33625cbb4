#pragma once

#include <map>
#include <string>
#include <string_view>

#include "pomcoh/hyper.hpp"
#include "pomcoh/space.hpp"

namespace pomcoh {

// Text format for space files ('#' comments allowed):
//   space NAME { tokens: a, b, c; scoh: (a,b), (b,c); }
//   hspace NAME { tokens: a, b; gamma: {a,b}; }
// Reflexivity of coherence and the singleton members of gamma are implicit.
struct SpaceFile {
  std::map<std::string, Space> spaces;
  std::map<std::string, Hyper> hypers;
};

SpaceFile parse_space_file(std::string_view text);

}  // namespace pomcoh
