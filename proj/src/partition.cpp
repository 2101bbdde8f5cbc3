#include "perim/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace perim {

void validate(const Partition& p) {
  if (p.parts.empty())
    throw std::domain_error("partition: at least one part required");
  int prev = 0;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    int part = p.parts[i];
    if (part < 1)
      throw std::domain_error("partition: parts must be positive");
    if (i > 0 && part > prev)
      throw std::domain_error("partition: parts must be nonincreasing");
    prev = part;
  }
}

int perimeter_of(const Partition& p) {
  validate(p);
  return p.perimeter();
}

BoundaryWord word_of(const Partition& p) {
  validate(p);
  std::string w;
  w.reserve(static_cast<std::size_t>(p.perimeter()) + 1);
  const auto& parts = p.parts;
  // Bottom row first: the full width of the smallest part, then one N per
  // row with the width increment walking upward.
  w.append(static_cast<std::size_t>(parts.back()), 'E');
  w.push_back('N');
  for (int i = p.leg() - 2; i >= 0; --i) {
    w.append(static_cast<std::size_t>(parts[i] - parts[i + 1]), 'E');
    w.push_back('N');
  }
  return BoundaryWord{std::move(w)};
}

Partition partition_of(const BoundaryWord& w) {
  const std::string& s = w.letters;
  if (s.empty() || s.front() != 'E')
    throw std::domain_error("boundary word: must start with E");
  if (s.back() != 'N')
    throw std::domain_error("boundary word: must end with N");
  std::vector<int> parts;
  int width = 0;
  for (char ch : s) {
    if (ch == 'E') {
      ++width;
    } else if (ch == 'N') {
      parts.push_back(width);
    } else {
      throw std::domain_error("boundary word: letters must be E or N");
    }
  }
  std::reverse(parts.begin(), parts.end());
  return Partition{std::move(parts)};
}

}  // namespace perim
