#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <vector>

#include "ccgwl/eval.hpp"
#include "ccgwl/rng.hpp"
#include "ccgwl/scene.hpp"

namespace ccgwl::scene {

inline constexpr int kMinObjects = 1;
inline constexpr int kMaxObjects = 6;

struct DatasetConfig {
  logic::PropertyInventory inventory = logic::PropertyInventory::defaults();
  int train_size = 400;
  int test_size = 100;
  uint64_t seed = 0;
  // When set, test utterances only use words appearing in the train set.
  bool test_known_words_only = false;

  friend bool operator==(const DatasetConfig&, const DatasetConfig&) = default;
};

// Uniform object count on [1,6]; every attribute sampled uniformly and
// independently from the inventory. Throws ConfigError on an empty
// inventory dimension.
Scene generate_scene(Rng& rng, const DatasetConfig& config);

// Every expression "the <color-word> <shape-word>" whose (color, shape) pair
// matches exactly one object, ordered by color index then shape index.
std::vector<ReferenceTrial> enumerate_trials(const Scene& scene,
                                             const logic::PropertyInventory& inventory);

// The validation function V: the referent set denoted by a logical form in
// a scene. Delegates to logic::evaluate; may be empty.
std::set<int> validate(const logic::Term& logical_form, const Scene& scene);

// The ground-truth logical form of "the <color> <shape>":
// iota(and(shape(x), color(x))).
logic::Term ground_truth_form(const logic::PropertyDescriptor& color,
                              const logic::PropertyDescriptor& shape);

struct Dataset {
  std::vector<ReferenceTrial> train;
  std::vector<ReferenceTrial> test;
};

// Pure function of the config: scenes are sampled per split from independent
// seeded streams, one enumerated trial drawn uniformly per scene; scenes with
// no valid trial are resampled.
Dataset generate_dataset(const DatasetConfig& config);

// Line-delimited records {"scene": [...], "utterance": [...], "referent": N}.
void write_jsonl(const std::vector<ReferenceTrial>& trials, const std::filesystem::path& path);
std::vector<ReferenceTrial> read_jsonl(const std::filesystem::path& path);

// Dataset directory layout: train.jsonl, test.jsonl, inventory.json.
void write_dataset_dir(const Dataset& dataset, const logic::PropertyInventory& inventory,
                       const std::filesystem::path& dir);
struct LoadedDataset {
  Dataset dataset;
  logic::PropertyInventory inventory;
};
LoadedDataset read_dataset_dir(const std::filesystem::path& dir);

}  // namespace ccgwl::scene
