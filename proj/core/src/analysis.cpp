#include "cosetcover/analysis.hpp"

#include <algorithm>
#include <limits>

#include "cosetcover/errors.hpp"

namespace cosetcover {

CoverInstance::CoverInstance(std::size_t carrier_size, std::vector<ElementSet> members,
                             Provenance provenance)
    : carrier_size_(carrier_size), members_(std::move(members)), provenance_(std::move(provenance)) {
  if (carrier_size_ == 0) throw PreconditionError("cover instance needs a nonempty carrier");
  if (members_.empty()) throw PreconditionError("cover instance needs at least one member");
  if (members_.size() > IndexSet::max_size)
    throw CapExceeded("at most 64 members are supported");
  masks_.assign(carrier_size_, 0);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].universe() != carrier_size_)
      throw PreconditionError("member bitmap size differs from carrier size");
    members_[i].for_each([&](Element x) { masks_[x] |= std::uint64_t{1} << i; });
  }
}

CoverInstance CoverInstance::without(std::size_t i) const {
  return restrict_to(IndexSet::full(k()).without(i));
}

CoverInstance CoverInstance::restrict_to(IndexSet positions) const {
  std::vector<ElementSet> kept;
  positions.for_each([&](std::size_t i) { kept.push_back(members_.at(i)); });
  return CoverInstance(carrier_size_, std::move(kept), provenance_);
}

IndexSet index_map(const CoverInstance& inst, IndexSet positions, Element x) {
  if (x >= inst.carrier_size()) throw PreconditionError("index_map: element outside carrier");
  return inst.mask(x) & positions;
}

std::size_t multiplicity(const CoverInstance& inst) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (auto m : inst.masks()) best = std::min(best, static_cast<std::size_t>(std::popcount(m)));
  return best;
}

bool is_m_cover(const CoverInstance& inst, std::size_t m) { return multiplicity(inst) >= m; }

bool is_exact_m_cover(const CoverInstance& inst, std::size_t m) {
  return std::all_of(inst.masks().begin(), inst.masks().end(),
                     [m](std::uint64_t mask) { return static_cast<std::size_t>(std::popcount(mask)) == m; });
}

bool is_minimal_m_cover(const CoverInstance& inst, std::size_t m) {
  if (!is_m_cover(inst, m)) return false;
  // Member i is essential iff it contains a point covered exactly m times.
  std::uint64_t essential = 0;
  for (auto mask : inst.masks())
    if (static_cast<std::size_t>(std::popcount(mask)) == m) essential |= mask;
  return essential == IndexSet::full(inst.k()).bits();
}

bool is_minimal_m_cover_exhaustive(const CoverInstance& inst, std::size_t m) {
  if (!is_m_cover(inst, m)) return false;
  const auto k = inst.k();
  if (k > 24) throw CapExceeded("exhaustive minimality check limited to k <= 24");
  const std::uint64_t full = IndexSet::full(k).bits();
  for (std::uint64_t sub = 0; sub < full; ++sub) {
    bool covers = true;
    for (auto mask : inst.masks())
      if (static_cast<std::size_t>(std::popcount(mask & sub)) < m) {
        covers = false;
        break;
      }
    if (covers) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> distinct_masks(const CoverInstance& inst) {
  std::vector<std::uint64_t> v = inst.masks();
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

IndexSet regularity_obstruction(const CoverInstance& inst, std::size_t cap) {
  const auto k = inst.k();
  if (k > cap) throw CapExceeded("regularity test: k=" + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  // I^*(x) depends on x only through [1,k]^*(x), so the distinct full masks
  // are both the image S and the set of points worth probing.
  const auto image = distinct_masks(inst);
  const std::uint64_t full = IndexSet::full(k).bits();
  for (std::uint64_t sub = 1; sub < full; ++sub) {
    bool escapes = false;
    for (auto mask : image)
      if (!std::binary_search(image.begin(), image.end(), mask & sub)) {
        escapes = true;
        break;
      }
    if (!escapes) return IndexSet(sub);
  }
  return IndexSet{};
}

bool is_regular(const CoverInstance& inst, bool require_cover, std::size_t cap) {
  if (!regularity_obstruction(inst, cap).empty()) return false;
  return !require_cover || is_m_cover(inst, 1);
}

bool is_partition(const CoverInstance& inst) { return is_exact_m_cover(inst, 1); }

}  // namespace cosetcover
