#include "alexbq/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

#include "alexbq/errors.hpp"

namespace alexbq {

VirtualBraidWord parse_braid(std::string_view text) {
  VirtualBraidWord w;
  std::optional<std::size_t> width;
  std::istringstream in{std::string(text)};
  std::string tok;
  std::size_t column = 0;
  std::size_t max_index = 0;
  while (in >> tok) {
    ++column;
    if (tok.rfind("width=", 0) == 0) {
      std::string num = tok.substr(6);
      if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw ParseError("braid: bad width '" + tok + "'", 1, column);
      }
      width = std::stoul(num);
      if (*width < 2) throw ParseError("braid: width must be at least 2", 1, column);
      continue;
    }
    BraidLetterKind kind;
    switch (tok[0]) {
      case 's': kind = BraidLetterKind::sigma; break;
      case 'S': kind = BraidLetterKind::sigma_inverse; break;
      case 'v': kind = BraidLetterKind::virtual_swap; break;
      default: throw ParseError("braid: unknown letter '" + tok + "' (token " + std::to_string(column) + ")", 1, column);
    }
    std::string num = tok.substr(1);
    if (num.empty() || !std::all_of(num.begin(), num.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("braid: bad letter index in '" + tok + "' (token " + std::to_string(column) + ")", 1, column);
    }
    std::size_t idx = std::stoul(num);
    if (idx == 0) throw ParseError("braid: letter indices start at 1 ('" + tok + "')", 1, column);
    max_index = std::max(max_index, idx);
    w.letters.push_back({kind, idx});
  }
  w.width = width.value_or(std::max<std::size_t>(2, max_index + 1));
  if (max_index + 1 > w.width) {
    throw ParseError("braid: letter index " + std::to_string(max_index) + " exceeds width - 1 = " +
                         std::to_string(w.width - 1),
                     1, 0);
  }
  return w;
}

std::string to_string(const VirtualBraidWord& w) {
  std::ostringstream out;
  out << "width=" << w.width;
  for (const auto& l : w.letters) {
    char c = l.kind == BraidLetterKind::sigma ? 's' : l.kind == BraidLetterKind::sigma_inverse ? 'S' : 'v';
    out << ' ' << c << l.index;
  }
  return out.str();
}

VirtualBraidWord invert_braid(const VirtualBraidWord& w) {
  VirtualBraidWord r{w.width, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    BraidLetter l = *it;
    if (l.kind == BraidLetterKind::sigma) {
      l.kind = BraidLetterKind::sigma_inverse;
    } else if (l.kind == BraidLetterKind::sigma_inverse) {
      l.kind = BraidLetterKind::sigma;
    }
    r.letters.push_back(l);
  }
  return r;
}

Diagram braid_closure(const VirtualBraidWord& w) {
  if (w.width < 2) throw ValidationError("braid: width must be at least 2");
  std::vector<SemiArc> cur(w.width);
  std::iota(cur.begin(), cur.end(), SemiArc{0});
  SemiArc next = w.width;
  std::vector<Crossing> crossings;
  for (const auto& l : w.letters) {
    if (l.index < 1 || l.index >= w.width) throw ValidationError("braid: letter index out of range");
    std::size_t i = l.index - 1;
    CrossingKind kind = l.kind == BraidLetterKind::sigma           ? CrossingKind::positive
                        : l.kind == BraidLetterKind::sigma_inverse ? CrossingKind::negative
                                                                   : CrossingKind::virtual_crossing;
    SemiArc c = next++, d = next++;
    crossings.push_back({kind, {cur[i], cur[i + 1], c, d}});
    cur[i] = c;
    cur[i + 1] = d;
  }

  // The top arc at each position is the same semiarc as the bottom arc there.
  std::vector<SemiArc> parent(next);
  std::iota(parent.begin(), parent.end(), SemiArc{0});
  auto find = [&](SemiArc a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t p = 0; p < w.width; ++p) {
    SemiArc x = find(cur[p]), y = find(p);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
  std::vector<SemiArc> dense(next, 0);
  SemiArc count = 0;
  for (SemiArc a = 0; a < next; ++a) {
    if (find(a) == a) dense[a] = count++;
  }
  for (auto& c : crossings) {
    for (auto& a : c.slots) a = dense[find(a)];
  }
  return Diagram(count, std::move(crossings));
}

}  // namespace alexbq
