#pragma once

#include <compare>
#include <string>
#include <vector>

namespace confdesign {

/// Weakly decreasing list of positive parts; L_{-p1} ... L_{-pk} v.
struct Partition {
  std::vector<int> parts;

  int degree() const;
  std::size_t length() const { return parts.size(); }
  bool empty() const { return parts.empty(); }
  /// Smallest part (0 for the empty partition).
  int min_part() const { return parts.empty() ? 0 : parts.back(); }
  /// "1" for the empty partition, otherwise e.g. "4.2.2".
  std::string to_string() const;
  static Partition parse(const std::string& text);

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of n with every part >= min_part, in descending
/// lexicographic order of their part lists.
std::vector<Partition> partitions(int n, int min_part);

/// Number of partitions of n with parts >= min_part.
long graded_dim(int n, int min_part);

}  // namespace confdesign
