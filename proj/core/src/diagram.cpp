#include "alexbq/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "alexbq/errors.hpp"

namespace alexbq {

Diagram::Diagram(std::size_t num_semiarcs, std::vector<Crossing> crossings,
                 std::optional<SemiArc> base_point, std::vector<std::string> labels)
    : num_semiarcs_(num_semiarcs),
      crossings_(std::move(crossings)),
      base_(base_point),
      labels_(std::move(labels)),
      source_(num_semiarcs),
      target_(num_semiarcs) {
  if (labels_.empty()) {
    labels_.reserve(num_semiarcs_);
    for (std::size_t i = 0; i < num_semiarcs_; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != num_semiarcs_) {
    throw ValidationError("diagram: label count does not match semiarc count");
  }
  if (base_ && *base_ >= num_semiarcs_) {
    throw ValidationError("diagram: base point on missing semiarc " + std::to_string(*base_));
  }
  for (std::size_t ci = 0; ci < crossings_.size(); ++ci) {
    const auto& c = crossings_[ci];
    for (int slot = 0; slot < 4; ++slot) {
      SemiArc a = c.slots[slot];
      if (a >= num_semiarcs_) {
        throw ValidationError("diagram: crossing " + std::to_string(ci) + " references missing semiarc " +
                              std::to_string(a));
      }
      auto& ref = slot < 2 ? target_[a] : source_[a];
      if (ref) {
        throw ValidationError("diagram: semiarc " + labels_[a] + " used twice as " +
                              (slot < 2 ? "an input" : "an output") + " (crossings " +
                              std::to_string(ref->crossing) + " and " + std::to_string(ci) + ")");
      }
      ref = SlotRef{ci, slot};
    }
  }
  for (SemiArc a = 0; a < num_semiarcs_; ++a) {
    if (source_[a].has_value() != target_[a].has_value()) {
      throw ValidationError("diagram: semiarc " + labels_[a] + (source_[a] ? " has no input slot" : " has no output slot"));
    }
  }

  std::vector<bool> seen(num_semiarcs_, false);
  for (SemiArc a = 0; a < num_semiarcs_; ++a) {
    if (seen[a]) continue;
    ++components_;
    SemiArc cur = a;
    while (!seen[cur]) {
      seen[cur] = true;
      auto nxt = next_along_strand(cur);
      if (!nxt) break;
      cur = *nxt;
    }
  }
}

Diagram Diagram::unknot() { return Diagram(1, {}); }

std::size_t Diagram::classical_crossing_count() const {
  return static_cast<std::size_t>(
      std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& c) { return c.is_classical(); }));
}

std::size_t Diagram::virtual_crossing_count() const { return crossings_.size() - classical_crossing_count(); }

std::optional<SemiArc> Diagram::next_along_strand(SemiArc a) const {
  const auto& t = target_[a];
  if (!t) return std::nullopt;
  const Crossing& c = crossings_[t->crossing];
  return t->slot == 0 ? c.out_d() : c.out_c();
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool parse_int(const std::string& s, long& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  out = std::stol(s);
  return true;
}

}  // namespace

Diagram parse_diagram(std::string_view text) {
  struct RawCrossing {
    CrossingKind kind;
    std::array<long, 4> ids;
    std::size_t line;
  };
  std::vector<RawCrossing> raw;
  std::vector<std::pair<long, std::size_t>> loops;
  std::optional<std::pair<long, std::size_t>> base;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;

    const std::string& head = tok[0];
    if (head == "BASE" || head == "LOOP") {
      long id;
      if (tok.size() != 2 || !parse_int(tok[1], id)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected '" + head + " <id>'", line_no, 1);
      }
      if (head == "BASE") {
        if (base) throw ParseError("line " + std::to_string(line_no) + ": duplicate BASE", line_no, 1);
        base = {id, line_no};
      } else {
        loops.emplace_back(id, line_no);
      }
      continue;
    }
    CrossingKind kind;
    if (head == "P") {
      kind = CrossingKind::positive;
    } else if (head == "N") {
      kind = CrossingKind::negative;
    } else if (head == "V") {
      kind = CrossingKind::virtual_crossing;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + head + "' (expected P, N, V, BASE or LOOP)",
                       line_no, 1);
    }
    if (tok.size() != 5) {
      throw ParseError("line " + std::to_string(line_no) + ": crossing needs exactly four semiarc ids", line_no, 1);
    }
    RawCrossing rc{kind, {}, line_no};
    for (int i = 0; i < 4; ++i) {
      if (!parse_int(tok[i + 1], rc.ids[i])) {
        throw ParseError("line " + std::to_string(line_no) + ": bad semiarc id '" + tok[i + 1] + "'", line_no,
                         static_cast<std::size_t>(i + 2));
      }
    }
    raw.push_back(rc);
  }

  if (raw.empty() && loops.empty()) {
    Diagram d = Diagram::unknot();
    if (base) return set_base_point(d, 0);
    return d;
  }

  // Dense indices in ascending id order; check the slot bijection here so that
  // errors can point at a line.
  std::map<long, SemiArc> index;
  std::map<long, std::pair<int, std::size_t>> in_use, out_use;
  for (const auto& rc : raw) {
    for (int i = 0; i < 4; ++i) {
      index.emplace(rc.ids[i], 0);
      auto& use = i < 2 ? in_use[rc.ids[i]] : out_use[rc.ids[i]];
      if (++use.first > 1) {
        throw ParseError("line " + std::to_string(rc.line) + ": semiarc " + std::to_string(rc.ids[i]) +
                             " used twice as " + (i < 2 ? "an input" : "an output") +
                             " (first on line " + std::to_string(use.second) + ")",
                         rc.line, static_cast<std::size_t>(i + 2));
      }
      use.second = rc.line;
    }
  }
  for (const auto& [id, use] : in_use) {
    if (!out_use.count(id)) {
      throw ParseError("line " + std::to_string(use.second) + ": semiarc " + std::to_string(id) +
                           " enters a crossing but never leaves one",
                       use.second, 1);
    }
  }
  for (const auto& [id, use] : out_use) {
    if (!in_use.count(id)) {
      throw ParseError("line " + std::to_string(use.second) + ": semiarc " + std::to_string(id) +
                           " leaves a crossing but never enters one",
                       use.second, 1);
    }
  }
  for (const auto& [id, line] : loops) {
    if (index.count(id)) {
      throw ParseError("line " + std::to_string(line) + ": LOOP " + std::to_string(id) + " is attached to a crossing",
                       line, 1);
    }
    index.emplace(id, 0);
  }
  if (base && !index.count(base->first)) {
    throw ParseError("line " + std::to_string(base->second) + ": BASE names unknown semiarc " +
                         std::to_string(base->first),
                     base->second, 1);
  }

  std::vector<std::string> labels;
  SemiArc next = 0;
  for (auto& [id, idx] : index) {
    idx = next++;
    labels.push_back(std::to_string(id));
  }
  std::vector<Crossing> crossings;
  crossings.reserve(raw.size());
  for (const auto& rc : raw) {
    Crossing c{rc.kind, {}};
    for (int i = 0; i < 4; ++i) c.slots[i] = index.at(rc.ids[i]);
    crossings.push_back(c);
  }
  std::optional<SemiArc> b;
  if (base) b = index.at(base->first);
  return Diagram(index.size(), std::move(crossings), b, std::move(labels));
}

std::string to_crossing_list(const Diagram& d) {
  std::ostringstream out;
  if (d.crossings().empty() && d.semiarc_count() == 1) {
    if (d.base_point()) out << "BASE 0\n";
    return out.str();
  }
  for (const auto& c : d.crossings()) {
    char k = c.kind == CrossingKind::positive ? 'P' : c.kind == CrossingKind::negative ? 'N' : 'V';
    out << k;
    for (auto a : c.slots) out << ' ' << a;
    out << '\n';
  }
  for (SemiArc a = 0; a < d.semiarc_count(); ++a) {
    if (!d.source(a)) out << "LOOP " << a << '\n';
  }
  if (d.base_point()) out << "BASE " << *d.base_point() << '\n';
  return out.str();
}

Diagram parse_gauss(std::string_view text) {
  struct Passage {
    long label;
    bool over;
    std::size_t column;
  };
  std::vector<Passage> seq;
  std::map<long, int> sign;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg, std::size_t col) -> ParseError {
    return ParseError("gauss code: " + msg + " at column " + std::to_string(col + 1), 1, col + 1);
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ch != 'O' && ch != 'U') throw fail("expected 'O' or 'U'", i);
    ++i;
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (num_start == i) throw fail("expected crossing number", i);
    long label = std::stol(std::string(text.substr(num_start, i - num_start)));
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) throw fail("expected sign '+' or '-'", i);
    int sg = text[i] == '+' ? 1 : -1;
    ++i;
    auto [it, inserted] = sign.emplace(label, sg);
    if (!inserted && it->second != sg) throw fail("crossing " + std::to_string(label) + " has inconsistent signs", start);
    seq.push_back({label, ch == 'O', start});
  }
  if (seq.empty()) return Diagram::unknot();

  std::map<long, std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> where;  // over, under
  for (std::size_t p = 0; p < seq.size(); ++p) {
    auto& w = where[seq[p].label];
    auto& slot = seq[p].over ? w.first : w.second;
    if (slot) throw fail("crossing " + std::to_string(seq[p].label) + " passed " + (seq[p].over ? "over" : "under") + " twice", seq[p].column);
    slot = p;
  }
  for (const auto& [label, w] : where) {
    if (!w.first || !w.second) {
      throw ParseError("gauss code: crossing " + std::to_string(label) + " needs one O and one U", 1, 1);
    }
  }

  // Semiarc p runs from passage p to passage p + 1 (cyclically).
  const std::size_t n = seq.size();
  auto into = [n](std::size_t p) { return (p + n - 1) % n; };
  std::vector<Crossing> crossings;
  for (const auto& [label, w] : where) {
    std::size_t o = *w.first, u = *w.second;
    SemiArc over_in = into(o), over_out = o, under_in = into(u), under_out = u;
    if (sign.at(label) > 0) {
      crossings.push_back({CrossingKind::positive, {over_in, under_in, under_out, over_out}});
    } else {
      crossings.push_back({CrossingKind::negative, {under_in, over_in, over_out, under_out}});
    }
  }
  return Diagram(n, std::move(crossings));
}

}  // namespace alexbq
