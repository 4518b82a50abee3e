#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "alexbq/diagram.hpp"

namespace alexbq {

enum class BraidLetterKind { sigma, sigma_inverse, virtual_swap };

struct BraidLetter {
  BraidLetterKind kind;
  std::size_t index;  // 1-based, acts on strands index and index + 1

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct VirtualBraidWord {
  std::size_t width = 2;
  std::vector<BraidLetter> letters;

  friend bool operator==(const VirtualBraidWord&, const VirtualBraidWord&) = default;
};

/// "width=3 s1 S2 v1": s<i> = sigma_i, S<i> = sigma_i^-1, v<i> = virtual.
VirtualBraidWord parse_braid(std::string_view text);

std::string to_string(const VirtualBraidWord& w);

/// Reverses the word and inverts each classical letter.
VirtualBraidWord invert_braid(const VirtualBraidWord& w);

/// Closure of the braid. Every letter, virtual ones included, becomes a
/// crossing with two fresh outgoing semiarcs; strands met by no letter close
/// up into crossingless loops.
Diagram braid_closure(const VirtualBraidWord& w);

}  // namespace alexbq
