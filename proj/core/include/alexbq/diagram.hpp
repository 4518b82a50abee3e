#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alexbq {

/// Index of a semiarc, the diagram segment between consecutive crossing points.
using SemiArc = std::size_t;

enum class CrossingKind { positive, negative, virtual_crossing };

// Slots follow braid positions: strands enter at the bottom (in_a on the left,
// in_b on the right) and leave at the top (out_c left, out_d right). The strand
// entering at in_a leaves at out_d and the one entering at in_b leaves at
// out_c. At a positive crossing the in_a -> out_d strand passes over, at a
// negative crossing the in_b -> out_c strand does.
struct Crossing {
  CrossingKind kind = CrossingKind::positive;
  std::array<SemiArc, 4> slots{};

  SemiArc in_a() const { return slots[0]; }
  SemiArc in_b() const { return slots[1]; }
  SemiArc out_c() const { return slots[2]; }
  SemiArc out_d() const { return slots[3]; }

  bool is_classical() const { return kind != CrossingKind::virtual_crossing; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Position of a semiarc end inside the crossing list.
struct SlotRef {
  std::size_t crossing;
  int slot;  // 0..3, see Crossing
};

// Oriented virtual link diagram. Every semiarc either fills exactly one input
// slot and one output slot, or fills none (a crossingless loop component).
// Instances are validated on construction and immutable afterwards.
class Diagram {
 public:
  /// Throws ValidationError if a slot names a missing semiarc or the
  /// input/output bijection fails.
  Diagram(std::size_t num_semiarcs, std::vector<Crossing> crossings,
          std::optional<SemiArc> base_point = std::nullopt, std::vector<std::string> labels = {});

  /// One crossingless loop.
  static Diagram unknot();

  std::size_t semiarc_count() const { return num_semiarcs_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::optional<SemiArc> base_point() const { return base_; }
  bool is_based() const { return base_.has_value(); }
  std::size_t component_count() const { return components_; }
  std::size_t classical_crossing_count() const;
  std::size_t virtual_crossing_count() const;

  /// Display label of a semiarc (the id used in the source text, if any).
  const std::string& label(SemiArc a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Output slot that produces `a` and input slot that consumes it; both are
  /// empty for a crossingless loop.
  std::optional<SlotRef> source(SemiArc a) const { return source_[a]; }
  std::optional<SlotRef> target(SemiArc a) const { return target_[a]; }

  /// Semiarc that continues the strand entering through `a`'s target slot.
  std::optional<SemiArc> next_along_strand(SemiArc a) const;

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.num_semiarcs_ == y.num_semiarcs_ && x.crossings_ == y.crossings_ && x.base_ == y.base_;
  }

 private:
  std::size_t num_semiarcs_;
  std::vector<Crossing> crossings_;
  std::optional<SemiArc> base_;
  std::vector<std::string> labels_;
  std::vector<std::optional<SlotRef>> source_;
  std::vector<std::optional<SlotRef>> target_;
  std::size_t components_ = 0;
};

// ---- text formats ---------------------------------------------------------

/// Crossing list: one `P a b c d`, `N a b c d` or `V a b c d` per line with
/// integer semiarc ids in slot order (in_a in_b out_c out_d); optional
/// `BASE k` and `LOOP k` lines; `#` starts a comment. An empty list is the
/// crossingless unknot.
Diagram parse_diagram(std::string_view text);

/// Writes the crossing-list format; parse_diagram(to_crossing_list(d)) == d.
std::string to_crossing_list(const Diagram& d);

/// Signed Gauss code of a knot, e.g. "O1+O2+U1+U2+". Virtual crossings are
/// not listed and produce no semiarcs.
Diagram parse_gauss(std::string_view text);

// ---- transforms -------------------------------------------------------------

/// Reverses the orientation of every strand; crossing signs are unchanged.
Diagram reverse(const Diagram& d);

/// Exchanges over and under at every classical crossing.
Diagram sign_switch(const Diagram& d);

/// Cuts a1 (running P -> Q) and a2 (running R -> S) and reconnects them as
/// P -> S and R -> Q. Both inputs must be unbased knots. Summing with a
/// crossingless unknot returns the other diagram unchanged.
Diagram connected_sum(const Diagram& d1, SemiArc a1, const Diagram& d2, SemiArc a2);

/// Marks `a` as the semiarc carrying the base point.
Diagram set_base_point(const Diagram& d, SemiArc a);

/// Long-knot concatenation: d1 followed by d2, based on the new closing arc.
Diagram based_connected_sum(const Diagram& d1, const Diagram& d2);

}  // namespace alexbq
