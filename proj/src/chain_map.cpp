#include "ordmon/chain_map.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ordmon/errors.hpp"

namespace ordmon {

Family family_from_string(const std::string& name) {
  std::string s;
  s.reserve(name.size());
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "d") return Family::D;
  if (s == "pd") return Family::PD;
  if (s == "id") return Family::ID;
  if (s == "c") return Family::C;
  if (s == "ic") return Family::IC;
  if (s == "pc") return Family::PC;
  throw ValidationError("unknown family '" + name + "'");
}

const char* family_name(Family fam) {
  switch (fam) {
    case Family::D: return "D";
    case Family::PD: return "PD";
    case Family::ID: return "ID";
    case Family::C: return "C";
    case Family::IC: return "IC";
    case Family::PC: return "PC";
  }
  throw ValidationError("bad family value");
}

static void require_valid_n(int n) {
  if (n < 1) throw ValidationError("chain size must be positive, got " + std::to_string(n));
}

PartialMap::PartialMap(int n) : n_(n), images_(static_cast<std::size_t>(n), 0) {
  require_valid_n(n);
}

PartialMap::PartialMap(int n, std::vector<int> images) : n_(n), images_(std::move(images)) {
  require_valid_n(n);
  if (images_.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("expected " + std::to_string(n) + " images, got " +
                          std::to_string(images_.size()));
  }
  for (int x = 1; x <= n_; ++x) {
    int y = images_[static_cast<std::size_t>(x - 1)];
    if (y < 0 || y > n_) {
      throw ValidationError("image of " + std::to_string(x) + " is " + std::to_string(y) +
                            ", outside 0.." + std::to_string(n_));
    }
  }
}

PartialMap PartialMap::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) images[static_cast<std::size_t>(x - 1)] = x;
  return PartialMap(n, std::move(images));
}

bool PartialMap::defined(int x) const { return apply(x) != 0; }

int PartialMap::apply(int x) const {
  if (x < 1 || x > n_) {
    throw ValidationError("point " + std::to_string(x) + " outside 1.." + std::to_string(n_));
  }
  return images_[static_cast<std::size_t>(x - 1)];
}

PropertySet PartialMap::classify() const {
  PropertySet p;
  p.order_decreasing = true;
  p.order_preserving = true;
  p.injective = true;
  p.full = true;
  int prev_defined_x = 0;
  std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
  for (int x = 1; x <= n_; ++x) {
    int y = images_[static_cast<std::size_t>(x - 1)];
    if (y == 0) {
      p.full = false;
      continue;
    }
    if (y > x) p.order_decreasing = false;
    if (seen[static_cast<std::size_t>(y)]) p.injective = false;
    seen[static_cast<std::size_t>(y)] = true;
    if (prev_defined_x != 0 &&
        images_[static_cast<std::size_t>(prev_defined_x - 1)] > y) {
      p.order_preserving = false;
    }
    prev_defined_x = x;
  }
  return p;
}

bool PartialMap::in_family(Family fam) const {
  PropertySet p = classify();
  switch (fam) {
    case Family::D: return p.full && p.order_decreasing;
    case Family::PD: return p.order_decreasing;
    case Family::ID: return p.injective && p.order_decreasing;
    case Family::C: return p.full && p.order_decreasing && p.order_preserving;
    case Family::IC: return p.injective && p.order_decreasing && p.order_preserving;
    case Family::PC: return p.order_decreasing && p.order_preserving;
  }
  throw ValidationError("bad family value");
}

std::size_t PartialMap::domain_size() const {
  return static_cast<std::size_t>(
      std::count_if(images_.begin(), images_.end(), [](int y) { return y != 0; }));
}

std::string PartialMap::to_string() const {
  std::string out;
  for (int x = 1; x <= n_; ++x) {
    if (x > 1) out.push_back(',');
    out += std::to_string(images_[static_cast<std::size_t>(x - 1)]);
  }
  return out;
}

bool PartialMap::operator<(const PartialMap& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return images_ < other.images_;
}

PartialMap make_partial_map(int n, const std::vector<std::pair<int, int>>& assignments) {
  require_valid_n(n);
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : assignments) {
    if (x < 1 || x > n || y < 1 || y > n) {
      throw ValidationError("assignment " + std::to_string(x) + "->" + std::to_string(y) +
                            " is outside the " + std::to_string(n) + "-chain");
    }
    int& slot = images[static_cast<std::size_t>(x - 1)];
    if (slot != 0) throw ValidationError("point " + std::to_string(x) + " assigned twice");
    slot = y;
  }
  return PartialMap(n, std::move(images));
}

PartialMap compose(const PartialMap& first, const PartialMap& second) {
  if (first.n() != second.n()) {
    throw ValidationError("cannot compose maps on chains of size " +
                          std::to_string(first.n()) + " and " + std::to_string(second.n()));
  }
  std::vector<int> images(static_cast<std::size_t>(first.n()), 0);
  for (int x = 1; x <= first.n(); ++x) {
    int y = first.apply(x);
    images[static_cast<std::size_t>(x - 1)] = (y == 0) ? 0 : second.apply(y);
  }
  return PartialMap(first.n(), std::move(images));
}

std::vector<PartialMap> brute_force_enumerate(Family fam, int n, std::uint64_t candidate_cap) {
  require_valid_n(n);
  std::uint64_t candidates = 1;
  for (int x = 0; x < n; ++x) {
    if (candidates > candidate_cap / static_cast<std::uint64_t>(n + 1)) {
      throw ResourceLimitError("(n+1)^n exceeds candidate cap " + std::to_string(candidate_cap) +
                               " at n=" + std::to_string(n));
    }
    candidates *= static_cast<std::uint64_t>(n + 1);
  }
  if (candidates > candidate_cap) {
    throw ResourceLimitError("(n+1)^n exceeds candidate cap " + std::to_string(candidate_cap) +
                             " at n=" + std::to_string(n));
  }

  std::vector<PartialMap> out;
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  // Odometer over image rows; lexicographic order falls out of the scan.
  while (true) {
    PartialMap candidate(n, images);
    if (candidate.in_family(fam)) out.push_back(candidate);
    int pos = n - 1;
    while (pos >= 0 && images[static_cast<std::size_t>(pos)] == n) {
      images[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++images[static_cast<std::size_t>(pos)];
  }
  return out;
}

PartialMap adjoin_bottom(const PartialMap& alpha) {
  if (!alpha.in_family(Family::PD)) {
    throw ValidationError("adjoin_bottom expects an order-decreasing map, got " +
                          alpha.to_string());
  }
  int n = alpha.n();
  std::vector<int> images(static_cast<std::size_t>(n) + 1, 0);
  images[0] = 1;
  for (int x = 2; x <= n + 1; ++x) {
    int y = alpha.apply(x - 1);
    images[static_cast<std::size_t>(x - 1)] = (y == 0) ? 1 : y + 1;
  }
  return PartialMap(n + 1, std::move(images));
}

std::size_t PartialMapHash::operator()(const PartialMap& m) const {
  std::size_t h = std::hash<int>{}(m.n());
  for (int y : m.images()) {
    h ^= std::hash<int>{}(y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace ordmon
