#include "sperner/family.hpp"

#include <algorithm>
#include <unordered_set>

#include "sperner/errors.hpp"

namespace sperner {

GroundSet::GroundSet(std::size_t n) : n_(n) {
  if (n > kCapacity) {
    throw CapacityError("ground set of size " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kCapacity));
  }
}

GroundSet::GroundSet(std::size_t n, std::vector<std::string> labels) : GroundSet(n) {
  if (labels.size() != n) throw BadParams("expected " + std::to_string(n) + " labels");
  std::unordered_set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw BadParams("labels must be distinct");
  labels_ = std::move(labels);
}

std::string GroundSet::label(unsigned i) const {
  if (labels_) return (*labels_)[i];
  return std::to_string(i);
}

namespace {

void check_width(const GroundSet& ground, std::span<const SetWord> sets) {
  const SetWord all = ground.all();
  for (SetWord s : sets) {
    if (!s.is_subset_of(all)) {
      throw CapacityError("set {" + to_string(s) + "} does not fit a ground set of size " +
                          std::to_string(ground.size()));
    }
  }
}

}  // namespace

Family::Family(GroundSet ground, std::vector<SetWord> sets) : ground_(std::move(ground)), sets_(std::move(sets)) {
  check_width(ground_, sets_);
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

Family Family::strict(GroundSet ground, std::vector<SetWord> sets) {
  const std::size_t before = sets.size();
  Family f(std::move(ground), std::move(sets));
  if (f.size() != before) throw BadParams("duplicate sets");
  return f;
}

bool Family::contains(SetWord s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

std::optional<std::size_t> Family::index_of(SetWord s) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), s);
  if (it == sets_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - sets_.begin());
}

Family Family::with(SetWord s) const {
  std::vector<SetWord> sets(sets_);
  sets.push_back(s);
  return Family(ground_, std::move(sets));
}

Family Family::without(SetWord s) const {
  std::vector<SetWord> sets;
  sets.reserve(sets_.size());
  for (SetWord t : sets_)
    if (t != s) sets.push_back(t);
  Family out(ground_);
  out.sets_ = std::move(sets);
  return out;
}

Family Family::merged(const Family& other) const {
  if (!(ground_ == other.ground_)) throw BadParams("cannot merge families on different ground sets");
  std::vector<SetWord> sets(sets_);
  sets.insert(sets.end(), other.sets_.begin(), other.sets_.end());
  return Family(ground_, std::move(sets));
}

LayerSequence::LayerSequence(std::vector<Family> layers) : layers_(std::move(layers)) {
  std::unordered_set<SetWord, SetWordHash> seen;
  for (const Family& layer : layers_) {
    if (!(layer.ground() == layers_.front().ground())) throw BadParams("layers live on different ground sets");
    for (SetWord s : layer) {
      if (!seen.insert(s).second) throw BadParams("set {" + to_string(s) + "} occurs in two layers");
    }
  }
}

}  // namespace sperner
