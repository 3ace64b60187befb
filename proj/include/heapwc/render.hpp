#pragma once

#include "heapwc/heap.hpp"

#include <string>
#include <vector>

// Fixed-grid level-by-level heap pictures. Each node is right-aligned in a
// cell of width w = digits(N); carets run from a left child towards its
// sibling, or up under its parent's cell when it has no sibling.

namespace heapwc {

// one "Level k: ..." line per level, no trailing newline on lines
std::vector<std::string> render_levels(const Heap& h);

std::string render_heap(const Heap& h); // lines joined with '\n', trailing '\n'

} // namespace heapwc
