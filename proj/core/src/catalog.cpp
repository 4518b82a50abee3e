#include "alexbq/catalog.hpp"

#include <functional>
#include <map>

#include "alexbq/braid.hpp"
#include "alexbq/errors.hpp"

namespace alexbq {

namespace {

Diagram virtual_trefoil() { return parse_gauss("O1+O2+U1+U2+"); }

// Same knot as virtual_trefoil with its virtual crossing kept explicit.
Diagram virtual_trefoil_braid() { return braid_closure(parse_braid("width=2 s1 s1 v1")); }

Diagram vt1() { return set_base_point(virtual_trefoil(), 1); }
Diagram vt2() { return set_base_point(virtual_trefoil(), 0); }

// Relations a..h of the 8x8 example: three classical crossings, one virtual.
constexpr const char* kExample1 = R"(# a=1 b=2 c=3 d=4 e=5 f=6 g=7 h=8
P 6 1 2 7
P 2 5 6 3
N 3 8 1 4
V 7 4 5 8
)";

using Table = std::map<std::string, std::function<Diagram()>, std::less<>>;

const Table& entries() {
  static const Table table = {
      {"2.1", virtual_trefoil},
      {"2.1-braid", virtual_trefoil_braid},
      {"kishino", [] { return parse_gauss("O1-O2+U1-O4+U3-U4+O3-U2+"); }},
      // The virtual trefoil summed with its mirror image.
      {"kishino-like", [] { return connected_sum(virtual_trefoil(), 0, sign_switch(virtual_trefoil()), 2); }},
      {"kishino-like-braid",
       [] { return connected_sum(virtual_trefoil_braid(), 0, sign_switch(virtual_trefoil_braid()), 1); }},
      {"slavik", [] { return parse_gauss("O1+U2-O3-U1+O4+U5-O2-U3-O5-U4+"); }},
      {"miyazawa", [] { return parse_gauss("O1+O2+O3+O4-U3+U1+U4-U2+"); }},
      {"k#1", [] { return connected_sum(virtual_trefoil(), 0, virtual_trefoil(), 1); }},
      {"k#2", [] { return connected_sum(virtual_trefoil(), 0, virtual_trefoil(), 0); }},
      {"vt1", vt1},
      {"vt2", vt2},
      {"vt2#vt1", [] { return based_connected_sum(vt2(), vt1()); }},
      {"vt2#vt2", [] { return based_connected_sum(vt2(), vt2()); }},
      {"example1", [] { return parse_diagram(kExample1); }},
      {"trefoil", [] { return parse_gauss("O1+U2+O3+U1+O2+U3+"); }},
      {"figure-eight", [] { return parse_gauss("O1-U2-O3+U4+O2-U1-O4+U3+"); }},
      {"unknot", Diagram::unknot},
      {"unknot-kink", [] { return parse_diagram("P 1 2 1 2\n"); }},
      {"l1-braid", [] { return braid_closure(parse_braid("width=4 s3 v3 v1 s1 s2")); }},
  };
  return table;
}

}  // namespace

Diagram catalog(std::string_view name) {
  const auto& table = entries();
  if (auto it = table.find(name); it != table.end()) return it->second();
  std::string known;
  for (const auto& [n, f] : table) known += (known.empty() ? "" : ", ") + n;
  throw ValidationError("unknown catalog entry '" + std::string(name) + "'; known: " + known);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : entries()) out.push_back(n);
  return out;
}

}  // namespace alexbq
