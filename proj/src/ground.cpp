#include "divlab/ground.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace divlab {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() > static_cast<std::size_t>(kMaxGroundSize))
    throw std::invalid_argument("ground set larger than " + std::to_string(kMaxGroundSize) +
                                " points");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty point label");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate point label '" + l + "'");
  }
}

int GroundSet::index(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

std::string GroundSet::format_subset(Mask m) const {
  std::string out = "{";
  bool first = true;
  for_each_member(m, [&](int i) {
    if (!first) out += ",";
    out += labels_[i];
    first = false;
  });
  out += "}";
  return out;
}

Mask GroundSet::parse_subset(std::string_view literal) const {
  std::string_view s = literal;
  auto strip = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  s = strip(s);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw std::invalid_argument("subset literal must look like {a,b,c}");
  s = strip(s.substr(1, s.size() - 2));
  Mask m = 0;
  if (s.empty()) return m;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view tok =
        strip(comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos));
    int idx = index(tok);
    if (idx < 0) throw std::invalid_argument("unknown point '" + std::string(tok) + "'");
    if (contains(m, idx))
      throw std::invalid_argument("duplicate point '" + std::string(tok) + "' in subset literal");
    m |= singleton(idx);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return m;
}

SetFunction::SetFunction(GroundSet ground)
    : ground_(std::move(ground)), values_(std::size_t{1} << ground_.size()) {}

void SetFunction::set(Mask m, Rat v) {
  if (m == 0 && !v.is_zero())
    throw std::invalid_argument("set function must vanish on the empty set");
  values_.at(m) = std::move(v);
}

bool SetFunction::is_monotone() const {
  const Mask all = ground_.all();
  for (Mask a = 0; a <= all; ++a) {
    for (int i = 0; i < ground_.size(); ++i) {
      if (contains(a, i)) continue;
      if (values_[a] > values_[a | singleton(i)]) return false;
    }
    if (a == all) break;
  }
  return true;
}

}  // namespace divlab
