#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zmlhash/matrix.hpp"

namespace zmlhash {

// Sorted, duplicate-free list of label ids. May be empty (unlabeled target
// items, or items awaiting predicted labels).
using LabelSet = std::vector<int>;

LabelSet make_label_set(std::vector<int> ids);

// 1 iff the two sets share at least one label, else 0.
int pairwise_similarity(const LabelSet& a, const LabelSet& b);

// |a intersect b|
int shared_label_count(const LabelSet& a, const LabelSet& b);

struct LabelEntry {
  std::string name;
  std::vector<double> word_vector;
  bool seen = true;
};

// Label universe with dense ids 0..L-1 (entry order). Seen and unseen id
// sets partition the vocabulary.
class LabelVocabulary {
 public:
  LabelVocabulary() = default;
  explicit LabelVocabulary(std::vector<LabelEntry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t embedding_dim() const noexcept;
  const LabelEntry& entry(int id) const { return entries_.at(static_cast<std::size_t>(id)); }

  // Dense id for a name, or -1 when absent.
  int find(std::string_view name) const;

  const std::vector<int>& seen_ids() const noexcept { return seen_; }
  const std::vector<int>& unseen_ids() const noexcept { return unseen_; }

  // Word vectors of the given labels, one row per id, in the given order.
  Matrix word_matrix(std::span<const int> ids, bool l2_normalize = false) const;

 private:
  std::vector<LabelEntry> entries_;
  std::vector<int> seen_;
  std::vector<int> unseen_;
};

struct Instance {
  int id = 0;
  std::vector<double> features;
  LabelSet labels;  // ground truth; empty for unlabeled items
};

// Disjoint role assignment over dense instance ids. Source-train instances
// carry only seen labels; target ground truth is visible to metrics only.
struct ZeroShotSplit {
  std::vector<int> source_train;
  std::vector<int> target_train;
  std::vector<int> query;
  std::vector<int> database;
};

struct Dataset {
  LabelVocabulary vocab;
  std::vector<Instance> instances;
  ZeroShotSplit split;

  std::size_t feature_dim() const noexcept {
    return instances.empty() ? 0 : instances.front().features.size();
  }
};

// Throws if roles overlap, miss an instance, reference bad ids, or a
// source-train instance carries an unseen or empty label set.
void validate_dataset(const Dataset& data);

// Label-sharing similarity over per-instance label sets indexed by dense
// instance id. Holds a reference; the backing vector must outlive it.
class SimilarityOracle {
 public:
  explicit SimilarityOracle(const std::vector<LabelSet>& labels_by_id)
      : labels_(&labels_by_id) {}

  int similar(int a, int b) const {
    return pairwise_similarity((*labels_)[static_cast<std::size_t>(a)],
                               (*labels_)[static_cast<std::size_t>(b)]);
  }
  int shared_count(int a, int b) const {
    return shared_label_count((*labels_)[static_cast<std::size_t>(a)],
                              (*labels_)[static_cast<std::size_t>(b)]);
  }

 private:
  const std::vector<LabelSet>* labels_;
};

}  // namespace zmlhash
