#include "divlab/self_map.hpp"

#include <stdexcept>

namespace divlab {

SelfMap::SelfMap(GroundSet g, std::vector<int> img) : ground(std::move(g)), image(std::move(img)) {
  if (image.size() != static_cast<std::size_t>(ground.size()))
    throw std::invalid_argument("self map must be total on the ground set");
  for (int t : image)
    if (t < 0 || t >= ground.size())
      throw std::invalid_argument("self map target outside the ground set");
}

Mask map_image(const SelfMap& map, Mask a) {
  Mask out = 0;
  for_each_member(a, [&](int i) { out |= singleton(map.apply(i)); });
  return out;
}

}  // namespace divlab
