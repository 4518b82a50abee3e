#include <utility>

#include "alexbq/diagram.hpp"
#include "alexbq/errors.hpp"

namespace alexbq {

Diagram reverse(const Diagram& d) {
  std::vector<Crossing> cs;
  cs.reserve(d.crossings().size());
  for (const auto& c : d.crossings()) {
    // Rotating the crossing by a half turn turns the reversed strands upward
    // again; the over strand still runs in_a -> out_d, so the sign is kept.
    cs.push_back({c.kind, {c.out_d(), c.out_c(), c.in_b(), c.in_a()}});
  }
  return Diagram(d.semiarc_count(), std::move(cs), d.base_point(), d.labels());
}

Diagram sign_switch(const Diagram& d) {
  std::vector<Crossing> cs = d.crossings();
  for (auto& c : cs) {
    if (c.kind == CrossingKind::positive) {
      c.kind = CrossingKind::negative;
    } else if (c.kind == CrossingKind::negative) {
      c.kind = CrossingKind::positive;
    }
  }
  return Diagram(d.semiarc_count(), std::move(cs), d.base_point(), d.labels());
}

namespace {

void require_knot(const Diagram& d, const char* what) {
  if (d.component_count() != 1) {
    throw ValidationError(std::string(what) + ": diagram has " + std::to_string(d.component_count()) +
                          " components, expected a knot");
  }
}

// Disjoint union with the input slots of a1 and a2 exchanged; a2 is offset by
// the semiarc count of d1 in the result.
std::vector<Crossing> splice(const Diagram& d1, SemiArc a1, const Diagram& d2, SemiArc a2) {
  const std::size_t offset = d1.semiarc_count();
  std::vector<Crossing> cs = d1.crossings();
  for (auto c : d2.crossings()) {
    for (auto& a : c.slots) a += offset;
    cs.push_back(c);
  }
  SlotRef q = *d1.target(a1);
  SlotRef s = *d2.target(a2);
  cs[q.crossing].slots[q.slot] = a2 + offset;
  cs[d1.crossings().size() + s.crossing].slots[s.slot] = a1;
  return cs;
}

}  // namespace

Diagram connected_sum(const Diagram& d1, SemiArc a1, const Diagram& d2, SemiArc a2) {
  if (a1 >= d1.semiarc_count()) throw ValidationError("connected_sum: semiarc " + std::to_string(a1) + " not found in first diagram");
  if (a2 >= d2.semiarc_count()) throw ValidationError("connected_sum: semiarc " + std::to_string(a2) + " not found in second diagram");
  if (d1.is_based() || d2.is_based()) throw ValidationError("connected_sum: based diagrams use based_connected_sum");
  require_knot(d1, "connected_sum");
  require_knot(d2, "connected_sum");
  if (d1.crossings().empty()) return d2;
  if (d2.crossings().empty()) return d1;
  return Diagram(d1.semiarc_count() + d2.semiarc_count(), splice(d1, a1, d2, a2));
}

Diagram set_base_point(const Diagram& d, SemiArc a) {
  if (a >= d.semiarc_count()) throw ValidationError("set_base_point: semiarc " + std::to_string(a) + " not found");
  return Diagram(d.semiarc_count(), d.crossings(), a, d.labels());
}

Diagram based_connected_sum(const Diagram& d1, const Diagram& d2) {
  if (!d1.is_based() || !d2.is_based()) throw ValidationError("based_connected_sum: both diagrams need a base point");
  require_knot(d1, "based_connected_sum");
  require_knot(d2, "based_connected_sum");
  if (d1.crossings().empty()) return d2;
  if (d2.crossings().empty()) return d1;
  SemiArc b1 = *d1.base_point(), b2 = *d2.base_point();
  // d1's closing arc now runs into the start of d2; d2's closing arc runs back
  // to the start of d1 and carries the new base point.
  return Diagram(d1.semiarc_count() + d2.semiarc_count(), splice(d1, b1, d2, b2), b2 + d1.semiarc_count());
}

}  // namespace alexbq
