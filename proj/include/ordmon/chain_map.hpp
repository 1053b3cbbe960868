#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ordmon {

// The six monoids of order-decreasing self-maps of the chain {1 < 2 < ... < n}.
//
//   D   full order-decreasing
//   PD  partial order-decreasing
//   ID  partial injective order-decreasing
//   C   full order-decreasing and order-preserving
//   IC  partial injective order-decreasing and order-preserving
//   PC  partial order-decreasing and order-preserving
enum class Family { D, PD, ID, C, IC, PC };

Family family_from_string(const std::string& name);
const char* family_name(Family fam);

struct PropertySet {
  bool order_decreasing = false;
  bool order_preserving = false;
  bool injective = false;
  bool full = false;

  bool operator==(const PropertySet&) const = default;
};

// A partial self-map of {1..n}, stored densely: images()[x-1] is the image of
// x, with 0 meaning "x not in the domain".  Composition is left to right
// throughout: x (a * b) = (x a) b.
class PartialMap {
 public:
  explicit PartialMap(int n);  // the empty map
  PartialMap(int n, std::vector<int> images);

  static PartialMap identity(int n);

  int n() const { return n_; }
  const std::vector<int>& images() const { return images_; }

  bool defined(int x) const;
  // Image of x, or 0 when undefined.  x must lie in 1..n.
  int apply(int x) const;

  PropertySet classify() const;
  bool in_family(Family fam) const;

  std::size_t domain_size() const;

  // Comma-separated image row, e.g. "1,0,3".
  std::string to_string() const;

  bool operator==(const PartialMap&) const = default;
  bool operator<(const PartialMap& other) const;

 private:
  int n_;
  std::vector<int> images_;
};

// Map with exactly the given point -> value assignments, undefined elsewhere.
// Points must be distinct and both coordinates must lie in 1..n.
PartialMap make_partial_map(int n, const std::vector<std::pair<int, int>>& assignments);

// x (compose(a, b)) = (x a) b.  Both maps must live on the same chain.
PartialMap compose(const PartialMap& first, const PartialMap& second);

inline constexpr std::uint64_t kDefaultCandidateCap = 100'000'000;

// All members of the family on {1..n}, in lexicographic order of image rows.
// Scans all (n+1)^n candidate rows; refuses when that exceeds candidate_cap.
std::vector<PartialMap> brute_force_enumerate(
    Family fam, int n, std::uint64_t candidate_cap = kDefaultCandidateCap);

// The isomorphism PD_n -> D_{n+1}: shift every point up by one and send
// everything that was undefined to the new bottom point 1.
PartialMap adjoin_bottom(const PartialMap& alpha);

struct PartialMapHash {
  std::size_t operator()(const PartialMap& m) const;
};

}  // namespace ordmon
