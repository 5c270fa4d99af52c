#pragma once

#include <string>

#include "braidkit/braiding.hpp"
#include "braidkit/lifting.hpp"
#include "braidkit/relations.hpp"

namespace braidkit {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"rank": 2, "q": [["0/1", "2/3"], ["1/3", "0/1"]]}
BraidingMatrix parse_braiding_json(const std::string& text);

// "0/1,2/3;1/3,0/1" (rows separated by ';')
BraidingMatrix parse_braiding_inline(const std::string& text);

// {"factors": [3, 3], "g": [[1, 0], [0, 1]], "chi": [["1/3", "0/1"], ...]}
YDDatum parse_datum_json(const std::string& text);

std::string braiding_to_json(const BraidingMatrix& b);

// "ζ5^2", "-1", "1": label style used in DOT output
std::string zeta_label(const RootOfUnity& r);

std::string diagram_to_dot(const DynkinDiagram& d);

// chain rendering o(q) --[label]-- o(q') when the diagram is a path;
// adjacency list otherwise
std::string diagram_to_text(const DynkinDiagram& d);

}  // namespace braidkit
