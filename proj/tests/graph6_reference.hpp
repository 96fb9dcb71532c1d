#pragma once

#include <string_view>
#include <utility>
#include <vector>

// Encodings produced by networkx.to_graph6_bytes for graphs with the
// listed edge sets; frozen here as an external reference.

namespace ref {

struct Graph6Reference {
  std::string_view name;
  int n;
  std::vector<std::pair<int, int>> edges;
  std::string_view graph6;
};

inline const std::vector<Graph6Reference>& graph6_references() {
  static const std::vector<Graph6Reference> refs = {
      {"K3", 3, {{0, 1}, {0, 2}, {1, 2}}, R"(Bw)"},
      {"K2", 2, {{0, 1}}, R"(A_)"},
      {"K1", 1, {}, R"(@)"},
      {"P4", 4, {{0, 1}, {1, 2}, {2, 3}}, R"(Ch)"},
      {"C5", 5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}, R"(Dhc)"},
      {"Petersen", 10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}}, R"(IheA@GUAo)"},
      {"K8", 8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}}, R"(G~~~~{)"},
      {"K12", 12, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 10}, {0, 11}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9}, {1, 10}, {1, 11}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {2, 10}, {2, 11}, {3, 4}, {3, 5}, {3, 6}, {3, 7}, {3, 8}, {3, 9}, {3, 10}, {3, 11}, {4, 5}, {4, 6}, {4, 7}, {4, 8}, {4, 9}, {4, 10}, {4, 11}, {5, 6}, {5, 7}, {5, 8}, {5, 9}, {5, 10}, {5, 11}, {6, 7}, {6, 8}, {6, 9}, {6, 10}, {6, 11}, {7, 8}, {7, 9}, {7, 10}, {7, 11}, {8, 9}, {8, 10}, {8, 11}, {9, 10}, {9, 11}, {10, 11}}, R"(K~~~~~~~~~~~)"},
      {"Star3", 4, {{0, 1}, {0, 2}, {0, 3}}, R"(Cs)"},
      {"E63", 63, {{0, 62}, {5, 40}, {10, 11}}, R"(~??~??????????@???????????????????????????????????????????????????????????????????????????????????????????????????????????????????????@????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????O??????????)"},
      {"E64", 64, {{0, 63}, {1, 2}}, R"(~?@?G????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????????C??????????)"},
  };
  return refs;
}

}  // namespace ref
