#include "zmlhash/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "zmlhash/error.hpp"

namespace zmlhash {

LabelSet make_label_set(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

int pairwise_similarity(const LabelSet& a, const LabelSet& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) {
      return 1;
    }
    if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return 0;
}

int shared_label_count(const LabelSet& a, const LabelSet& b) {
  int count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia == *ib) {
      ++count;
      ++ia;
      ++ib;
    } else if (*ia < *ib) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return count;
}

LabelVocabulary::LabelVocabulary(std::vector<LabelEntry> entries) : entries_(std::move(entries)) {
  const std::size_t dim = entries_.empty() ? 0 : entries_.front().word_vector.size();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].word_vector.size() != dim) {
      throw ShapeError("vocabulary: word vector for '" + entries_[i].name + "' has " +
                       std::to_string(entries_[i].word_vector.size()) + " dims, expected " +
                       std::to_string(dim));
    }
    const int id = static_cast<int>(i);
    (entries_[i].seen ? seen_ : unseen_).push_back(id);
  }
}

std::size_t LabelVocabulary::embedding_dim() const noexcept {
  return entries_.empty() ? 0 : entries_.front().word_vector.size();
}

int LabelVocabulary::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

Matrix LabelVocabulary::word_matrix(std::span<const int> ids, bool l2_normalize) const {
  Matrix out(ids.size(), embedding_dim());
  for (std::size_t r = 0; r < ids.size(); ++r) {
    const auto& vec = entry(ids[r]).word_vector;
    double norm = 0.0;
    for (double v : vec) {
      norm += v * v;
    }
    norm = std::sqrt(norm);
    const double scale = (l2_normalize && norm > 0.0) ? 1.0 / norm : 1.0;
    for (std::size_t c = 0; c < vec.size(); ++c) {
      out(r, c) = vec[c] * scale;
    }
  }
  return out;
}

void validate_dataset(const Dataset& data) {
  const std::size_t n = data.instances.size();
  std::vector<int> role_count(n, 0);
  auto mark = [&](const std::vector<int>& ids, const char* role) {
    for (int id : ids) {
      if (id < 0 || static_cast<std::size_t>(id) >= n) {
        throw ContractError(std::string("split: ") + role + " references unknown instance id " +
                            std::to_string(id));
      }
      role_count[static_cast<std::size_t>(id)] += 1;
    }
  };
  mark(data.split.source_train, "source_train");
  mark(data.split.target_train, "target_train");
  mark(data.split.query, "query");
  mark(data.split.database, "database");
  for (std::size_t i = 0; i < n; ++i) {
    if (role_count[i] != 1) {
      throw ContractError("split: instance " + std::to_string(i) + " has " +
                          std::to_string(role_count[i]) + " roles, expected exactly 1");
    }
  }

  const std::size_t dim = data.feature_dim();
  for (const Instance& inst : data.instances) {
    if (inst.features.size() != dim) {
      throw ShapeError("instance " + std::to_string(inst.id) + ": feature dim " +
                       std::to_string(inst.features.size()) + ", dataset dim " +
                       std::to_string(dim));
    }
    for (int label : inst.labels) {
      if (label < 0 || static_cast<std::size_t>(label) >= data.vocab.size()) {
        throw VocabularyError("instance " + std::to_string(inst.id) +
                              ": label id out of range: " + std::to_string(label));
      }
    }
  }

  // Zero-shot exclusivity: source supervision never touches unseen labels.
  for (int id : data.split.source_train) {
    const Instance& inst = data.instances[static_cast<std::size_t>(id)];
    if (inst.labels.empty()) {
      throw ContractError("source_train instance " + std::to_string(id) + " is unlabeled");
    }
    for (int label : inst.labels) {
      if (!data.vocab.entry(label).seen) {
        throw ContractError("source_train instance " + std::to_string(id) +
                            " carries unseen label '" + data.vocab.entry(label).name + "'");
      }
    }
  }
}

}  // namespace zmlhash
