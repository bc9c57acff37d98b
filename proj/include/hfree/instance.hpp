#pragma once

#include <cstddef>

#include "hfree/graph.hpp"

namespace hfree {

/// A host graph together with an edge-deletion budget k.
struct Instance {
  Graph graph;
  std::size_t budget = 0;

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace hfree
