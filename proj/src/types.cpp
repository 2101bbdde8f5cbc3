#include "perim/types.hpp"

namespace perim {

std::string to_string(Family f) {
  switch (f) {
    case Family::H: return "h";
    case Family::F: return "f";
    case Family::L: return "l";
    case Family::LAB: return "lab";
  }
  return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "h" || s == "H") return Family::H;
  if (s == "f" || s == "F") return Family::F;
  if (s == "l" || s == "L") return Family::L;
  if (s == "lab" || s == "LAB") return Family::LAB;
  return std::nullopt;
}

}  // namespace perim
