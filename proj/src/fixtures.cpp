#include <stdexcept>

#include "hh/harness.hpp"

namespace hh {

namespace {

// Five-vertex line 1→2→3→4→5 with shortcuts b: 2→4 and g: 1→5; every
// consecutive pair along the line and around b is a relation, so chains of
// every length up to 4 survive and both shortcuts are parallel to chains.
const char* kE5 =
    "vertices: 1 2 3 4 5\n"
    "arrow: a1 1 2\n"
    "arrow: a2 2 3\n"
    "arrow: a3 3 4\n"
    "arrow: a4 4 5\n"
    "arrow: b 2 4\n"
    "arrow: g 1 5\n"
    "relation: a1 a2\n"
    "relation: a2 a3\n"
    "relation: a3 a4\n"
    "relation: a1 b\n"
    "relation: b a4\n";

// Two vertices, one arrow: the smallest connected case with a differential.
const char* kA2 =
    "vertices: 1 2\n"
    "arrow: a 1 2\n";

// Two parallel arrows: every arrow is parallel to the other, so degree-1
// cochains are 4-dimensional.
const char* kK2 =
    "vertices: 1 2\n"
    "arrow: a 1 2\n"
    "arrow: b 1 2\n";

// Commutativity-square collapse: path al·be dies, ga survives parallel to it.
const char* kD3 =
    "vertices: 1 2 3\n"
    "arrow: al 1 2\n"
    "arrow: be 2 3\n"
    "arrow: ga 1 3\n"
    "relation: al be\n";

// Line with its only composite killed; no parallels at all.
const char* kA3R =
    "vertices: 1 2 3\n"
    "arrow: a 1 2\n"
    "arrow: b 2 3\n"
    "relation: a b\n";

// Fork after the relation: al·de is a nonzero path parallel to the chain
// al·be, giving a plus-type degree-2 element and a vanishing shift.
const char* kSD3 =
    "vertices: 1 2 3\n"
    "arrow: al 1 2\n"
    "arrow: be 2 3\n"
    "arrow: de 2 3\n"
    "relation: al be\n";

// Mirror image of SD3: the fork precedes the relation.
const char* kSD3M =
    "vertices: 1 2 3\n"
    "arrow: al 1 2\n"
    "arrow: de 1 2\n"
    "arrow: be 2 3\n"
    "relation: al be\n";

}  // namespace

const std::vector<std::pair<std::string, std::string>>& fixtures() {
  static const std::vector<std::pair<std::string, std::string>> all = {
      {"E5", kE5}, {"A2", kA2}, {"K2", kK2},     {"D3", kD3},
      {"A3R", kA3R}, {"SD3", kSD3}, {"SD3M", kSD3M},
  };
  return all;
}

const std::string& fixture(const std::string& name) {
  for (const auto& [n, text] : fixtures()) {
    if (n == name) return text;
  }
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace hh
