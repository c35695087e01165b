#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sperner/set_word.hpp"

namespace sperner {

// The ground set {0, ..., n-1}. Labels are display-only.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::size_t n);
  GroundSet(std::size_t n, std::vector<std::string> labels);

  std::size_t size() const { return n_; }
  SetWord all() const { return SetWord::full(n_); }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  std::string label(unsigned i) const;

  bool operator==(const GroundSet& o) const { return n_ == o.n_; }

 private:
  std::size_t n_ = 0;
  std::optional<std::vector<std::string>> labels_;
};

// A duplicate-free collection of subsets of one ground set, stored in
// canonical order (cardinality, then numeric value).
class Family {
 public:
  Family() = default;
  explicit Family(GroundSet ground) : ground_(std::move(ground)) {}
  // Sorts and drops duplicates. Throws CapacityError for sets outside the ground set.
  Family(GroundSet ground, std::vector<SetWord> sets);
  // Like the constructor, but duplicates are an error (BadParams).
  static Family strict(GroundSet ground, std::vector<SetWord> sets);

  const GroundSet& ground() const { return ground_; }
  std::size_t n() const { return ground_.size(); }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  std::span<const SetWord> sets() const { return sets_; }
  const SetWord& operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  bool contains(SetWord s) const;
  // Canonical index of s, if present.
  std::optional<std::size_t> index_of(SetWord s) const;

  Family with(SetWord s) const;
  Family without(SetWord s) const;
  Family merged(const Family& other) const;

  bool operator==(const Family& o) const { return ground_ == o.ground_ && sets_ == o.sets_; }

 private:
  GroundSet ground_;
  std::vector<SetWord> sets_;
};

// Ordered layers over one ground set; layers are pairwise disjoint.
class LayerSequence {
 public:
  LayerSequence() = default;
  // Throws BadParams if the layers overlap or live on different ground sets.
  explicit LayerSequence(std::vector<Family> layers);

  std::size_t size() const { return layers_.size(); }
  bool empty() const { return layers_.empty(); }
  const Family& operator[](std::size_t i) const { return layers_[i]; }
  std::span<const Family> layers() const { return layers_; }
  auto begin() const { return layers_.begin(); }
  auto end() const { return layers_.end(); }

  bool operator==(const LayerSequence&) const = default;

 private:
  std::vector<Family> layers_;
};

}  // namespace sperner
