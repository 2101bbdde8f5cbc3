#pragma once

#include <string>
#include <vector>

namespace perim {

// An integer partition as a nonincreasing list of positive parts.
// arm = largest part, leg = number of parts, and the perimeter is
// arm + leg - 1 (the largest hook length of the Young diagram).
struct Partition {
  std::vector<int> parts;

  int arm() const { return parts.front(); }
  int leg() const { return static_cast<int>(parts.size()); }
  int perimeter() const { return arm() + leg() - 1; }

  bool operator==(const Partition&) const = default;
};

// Throws std::domain_error unless parts is nonempty, positive and nonincreasing.
void validate(const Partition& p);

// Validating wrapper around Partition::perimeter().
int perimeter_of(const Partition& p);

// Boundary word of a Young diagram: walk its lower-right boundary from the
// bottom-left corner to the top-right corner, writing E for each unit step
// east and N for each step north. The word has arm() E's and leg() N's, always
// starts with E and ends with N, and has length perimeter + 1. Conversely
// every E...N word over {E,N} arises from exactly one partition, which is why
// there are 2^(n-1) partitions of perimeter n.
struct BoundaryWord {
  std::string letters;  // over {'E','N'}

  bool operator==(const BoundaryWord&) const = default;
};

BoundaryWord word_of(const Partition& p);

// Inverse of word_of; throws std::domain_error on words that do not start
// with E, do not end with N, or contain other letters.
Partition partition_of(const BoundaryWord& w);

}  // namespace perim
