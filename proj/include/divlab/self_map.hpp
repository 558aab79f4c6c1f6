#ifndef DIVLAB_SELF_MAP_HPP
#define DIVLAB_SELF_MAP_HPP

#include <vector>

#include "divlab/ground.hpp"

namespace divlab {

/// Total map from a ground set into itself, stored as image indices.
struct SelfMap {
  GroundSet ground;
  std::vector<int> image;  // image[i] = index of the image of point i

  SelfMap() = default;
  SelfMap(GroundSet g, std::vector<int> img);  // validates totality and range

  int apply(int i) const { return image.at(i); }
};

/// Pointwise image of a subset: union of the images of its members.
Mask map_image(const SelfMap& map, Mask a);

}  // namespace divlab

#endif
