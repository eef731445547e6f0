#pragma once

#include "timecat/graded.hpp"
#include "timecat/signature.hpp"
#include "timecat/tiling.hpp"

namespace timecat::testing {

// Five generators whose pinwheel arrangement has no guillotine cut.
inline TimedPolygraph pinwheel_polygraph() {
  TimedPolygraph p;
  p.objects = {"A", "B", "C", "D", "E", "F", "G", "H"};
  p.generators = {
      {"f", {"A"}, {"E"}, 2},
      {"g", {"B"}, {"C", "D"}, 1},
      {"a", {"C"}, {"F"}, 1},
      {"h", {"D"}, {"H"}, 2},
      {"k", {"E", "F"}, {"G"}, 1},
  };
  return p;
}

inline Tiling pinwheel_tiling(bool with_waits = true) {
  Tiling t;
  t.width = with_waits ? 4 : 3;
  t.height = 3;
  t.tiles = {
      make_cell_tile("f", "f", {0, 2, 0, 1}),
      make_cell_tile("g", "g", {0, 1, 1, 3}),
      make_cell_tile("a", "a", {1, 2, 1, 2}),
      make_cell_tile("h", "h", {1, 3, 2, 3}),
      make_cell_tile("k", "k", {2, 3, 0, 2}),
  };
  if (with_waits) {
    t.tiles.push_back(make_cell_tile("wait G", wait_cell_name("G"), {3, 4, 0, 2}));
    t.tiles.push_back(make_cell_tile("wait H", wait_cell_name("H"), {3, 4, 2, 3}));
  }
  return t;
}

// 2x2 grid of unit tiles, each a one-in one-out generator.
inline TimedPolygraph grid_polygraph() {
  TimedPolygraph p;
  p.objects = {"P", "Q", "R", "S", "T", "U"};
  p.generators = {
      {"p", {"P"}, {"Q"}, 1},
      {"q", {"Q"}, {"R"}, 1},
      {"s", {"S"}, {"T"}, 1},
      {"t", {"T"}, {"U"}, 1},
  };
  return p;
}

inline Tiling grid_tiling() {
  Tiling t;
  t.width = 2;
  t.height = 2;
  t.tiles = {
      make_cell_tile("p", "p", {0, 1, 0, 1}),
      make_cell_tile("q", "q", {1, 2, 0, 1}),
      make_cell_tile("s", "s", {0, 1, 1, 2}),
      make_cell_tile("t", "t", {1, 2, 1, 2}),
  };
  return t;
}

// Kitchen process: cracked eggs are split, beaten, whisked and folded.
inline TimedPolygraph mascarpone_polygraph() {
  TimedPolygraph p;
  p.objects = {"egg", "yolk", "white", "sugar", "mascarpone", "yolkmix", "whipped", "cream", "crema"};
  p.generators = {
      {"crack", {"egg"}, {"yolk", "white"}, 1},
      {"beat", {"yolk", "sugar"}, {"yolkmix"}, 3},
      {"whisk", {"white"}, {"whipped"}, 4},
      {"stir", {"yolkmix", "mascarpone"}, {"cream"}, 2},
      {"fold", {"cream", "whipped"}, {"crema"}, 2},
  };
  return p;
}

}  // namespace timecat::testing
