#include "colsys/fixtures.hpp"

namespace colsys::fixtures {

ColoringSystem example_system() {
  return make_system(
      13, 1,
      {{0, 1},  {0, 4},   {1, 2},  {1, 5},   {2, 0},   {2, 3},  {3, 2},   {3, 5},   {4, 0},
       {4, 3},  {5, 1},   {5, 4},  {6, 6},   {6, 9},   {6, 10}, {7, 7},   {7, 8},   {7, 11},
       {7, 12}, {8, 6},   {8, 9},  {8, 10},  {9, 7},   {9, 8},  {9, 11},  {9, 12},  {10, 6},
       {10, 9}, {10, 10}, {11, 7}, {11, 8},  {11, 11}, {11, 12}, {12, 6}, {12, 9},  {12, 10}},
      {{0, 2},   {0, 4},   {0, 5},   {0, 8},   {0, 9},   {0, 12},  {1, 2},   {1, 4},
       {1, 5},   {1, 8},   {1, 9},   {1, 12},  {2, 2},   {2, 4},   {2, 5},   {2, 8},
       {2, 9},   {2, 12},  {3, 10},  {3, 11},  {4, 10},  {4, 11},  {5, 10},  {5, 11},
       {6, 0},   {6, 1},   {6, 3},   {7, 0},   {7, 1},   {7, 3},   {8, 0},   {8, 1},
       {8, 3},   {9, 2},   {9, 4},   {9, 5},   {9, 8},   {9, 9},   {9, 12},  {10, 2},
       {10, 4},  {10, 5},  {10, 8},  {10, 9},  {10, 12}, {11, 2},  {11, 4},  {11, 5},
       {11, 8},  {11, 9},  {11, 12}, {12, 6},  {12, 7}});
}

TriangleColoring example_triangle() {
  TriangleColoring tri;
  tri.depth = 54;
  tri.rows = {
      {1, 2, 0, 1, 2, 0, 1, 2, 0, 1},
      {8, 9, 8, 9, 8, 9, 8, 9, 8},
      {0, 4, 0, 4, 0, 4, 0, 4},
      {9, 11, 12, 10, 9, 11, 12},
      {8, 9, 7, 8, 9, 8},
      {0, 4, 0, 1, 2},
      {8, 10, 9, 8},
      {1, 5, 4},
      {9, 11},
      {8},
  };
  return tri;
}

}  // namespace colsys::fixtures
