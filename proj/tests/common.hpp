#pragma once

#include <functional>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "scfc/scfc.hpp"

namespace testing_util {

// Connected graphs with 2 <= n <= max_n, in enumeration order.
inline const std::vector<scfc::Graph>& small_connected(int max_n) {
  static std::vector<std::vector<scfc::Graph>> cache(9);
  auto& slot = cache.at(max_n);
  if (slot.empty()) {
    for (int n = 2; n <= max_n; ++n) {
      auto c = scfc::enumerate_connected(n);
      slot.insert(slot.end(), c.graphs.begin(), c.graphs.end());
    }
  }
  return slot;
}

inline scfc::Graph shuffled(const scfc::Graph& g, std::mt19937& rng) {
  std::vector<scfc::Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return scfc::relabel(g, perm);
}

inline scfc::ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const scfc::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an scfc::Error";
  return scfc::ErrorKind::IoError;
}

// C6 on 0..5 plus the chord 1-3.
inline scfc::Graph c6_chord() {
  return scfc::build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 3}});
}

}  // namespace testing_util
