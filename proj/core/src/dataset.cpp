#include "ccgwl/dataset.hpp"

#include <fstream>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "ccgwl/errors.hpp"

namespace ccgwl::scene {

using json = nlohmann::json;
using logic::PropertyDescriptor;
using logic::PropertyInventory;
using logic::PropertyType;

namespace {

constexpr uint64_t kTrainStream = 0x747261696eull;
constexpr uint64_t kTestStream = 0x74657374ull;

const std::string& sample_value(Rng& rng, const PropertyInventory& inv, PropertyType t) {
  const auto& vals = inv.values(t);
  if (vals.empty()) {
    throw ConfigError("empty inventory for attribute '" + std::string(logic::to_string(t)) + "'");
  }
  return vals[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(vals.size()) - 1))];
}

// Draws trials for one split from its own stream.
std::vector<ReferenceTrial> sample_split(Rng& rng, const DatasetConfig& config, int count) {
  std::vector<ReferenceTrial> out;
  out.reserve(static_cast<size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    Scene scene = generate_scene(rng, config);
    auto trials = enumerate_trials(scene, config.inventory);
    if (trials.empty()) continue;
    out.push_back(trials[static_cast<size_t>(
        rng.uniform_int(0, static_cast<int>(trials.size()) - 1))]);
  }
  return out;
}

json object_to_json(const SceneObject& o) {
  return json{{"id", o.id},
              {"color", o.color},
              {"shape", o.shape},
              {"material", o.material},
              {"size", o.size}};
}

SceneObject object_from_json(const json& j) {
  return SceneObject{j.at("id").get<int>(), j.at("color").get<std::string>(),
                     j.at("shape").get<std::string>(), j.at("material").get<std::string>(),
                     j.at("size").get<std::string>()};
}

}  // namespace

Scene generate_scene(Rng& rng, const DatasetConfig& config) {
  const auto& inv = config.inventory;
  for (PropertyType t : logic::kAllPropertyTypes) {
    if (inv.values(t).empty()) {
      throw ConfigError("empty inventory for attribute '" + std::string(logic::to_string(t)) +
                        "'");
    }
  }
  Scene scene;
  const int n = rng.uniform_int(kMinObjects, kMaxObjects);
  scene.objects.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    SceneObject o;
    o.id = i;
    o.color = sample_value(rng, inv, PropertyType::Color);
    o.shape = sample_value(rng, inv, PropertyType::Shape);
    o.material = sample_value(rng, inv, PropertyType::Material);
    o.size = sample_value(rng, inv, PropertyType::Size);
    scene.objects.push_back(std::move(o));
  }
  return scene;
}

std::vector<ReferenceTrial> enumerate_trials(const Scene& scene,
                                             const PropertyInventory& inventory) {
  std::vector<ReferenceTrial> out;
  for (const auto& color : inventory.values(PropertyType::Color)) {
    for (const auto& shape : inventory.values(PropertyType::Shape)) {
      const SceneObject* match = nullptr;
      bool unique = true;
      for (const auto& o : scene.objects) {
        if (o.color == color && o.shape == shape) {
          if (match) {
            unique = false;
            break;
          }
          match = &o;
        }
      }
      if (match && unique) {
        out.push_back(ReferenceTrial{scene, {"the", color, shape}, match->id});
      }
    }
  }
  return out;
}

std::set<int> validate(const logic::Term& logical_form, const Scene& scene) {
  return logic::evaluate(logical_form, scene);
}

logic::Term ground_truth_form(const PropertyDescriptor& color, const PropertyDescriptor& shape) {
  using logic::SemanticType;
  using logic::Term;
  Term x = Term::variable(0, SemanticType::entity());
  Term body = Term::conjunction(Term::application(Term::property(shape), x),
                                Term::application(Term::property(color), x));
  return Term::iota(Term::abstraction(SemanticType::entity(), body));
}

Dataset generate_dataset(const DatasetConfig& config) {
  Dataset ds;
  Rng train_rng(mix_seed(config.seed, kTrainStream));
  ds.train = sample_split(train_rng, config, config.train_size);

  Rng test_rng(mix_seed(config.seed, kTestStream));
  if (!config.test_known_words_only) {
    ds.test = sample_split(test_rng, config, config.test_size);
    return ds;
  }

  std::set<std::string> known;
  for (const auto& t : ds.train) {
    for (const auto& w : t.utterance) known.insert(w);
  }
  constexpr int kMaxAttempts = 200000;
  int attempts = 0;
  while (static_cast<int>(ds.test.size()) < config.test_size) {
    if (++attempts > kMaxAttempts) {
      throw ConfigError("cannot sample a test set restricted to train words");
    }
    Scene scene = generate_scene(test_rng, config);
    auto trials = enumerate_trials(scene, config.inventory);
    if (trials.empty()) continue;
    auto& trial = trials[static_cast<size_t>(
        test_rng.uniform_int(0, static_cast<int>(trials.size()) - 1))];
    bool ok = true;
    for (const auto& w : trial.utterance) ok = ok && known.count(w) > 0;
    if (ok) ds.test.push_back(std::move(trial));
  }
  return ds;
}

void write_jsonl(const std::vector<ReferenceTrial>& trials, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& t : trials) {
    json j;
    j["scene"] = json::array();
    for (const auto& o : t.scene.objects) j["scene"].push_back(object_to_json(o));
    j["utterance"] = t.utterance;
    j["referent"] = t.referent;
    out << j.dump() << '\n';
  }
}

std::vector<ReferenceTrial> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<ReferenceTrial> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    ReferenceTrial t;
    for (const auto& jo : j.at("scene")) t.scene.objects.push_back(object_from_json(jo));
    t.utterance = j.at("utterance").get<std::vector<std::string>>();
    t.referent = j.at("referent").get<int>();
    out.push_back(std::move(t));
  }
  return out;
}

void write_dataset_dir(const Dataset& dataset, const PropertyInventory& inventory,
                       const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  write_jsonl(dataset.train, dir / "train.jsonl");
  write_jsonl(dataset.test, dir / "test.jsonl");
  json j;
  for (PropertyType t : inventory.types()) {
    j[std::string(logic::to_string(t))] = inventory.values(t);
  }
  std::ofstream out(dir / "inventory.json");
  if (!out) throw IoError("cannot write inventory.json");
  out << j.dump(2) << '\n';
}

LoadedDataset read_dataset_dir(const std::filesystem::path& dir) {
  LoadedDataset loaded;
  loaded.dataset.train = read_jsonl(dir / "train.jsonl");
  loaded.dataset.test = read_jsonl(dir / "test.jsonl");
  std::ifstream in(dir / "inventory.json");
  if (!in) throw IoError("cannot read " + (dir / "inventory.json").string());
  json j = json::parse(in);
  for (PropertyType t : logic::kAllPropertyTypes) {
    const std::string key(logic::to_string(t));
    if (j.contains(key)) {
      loaded.inventory.set_values(t, j.at(key).get<std::vector<std::string>>());
    }
  }
  return loaded;
}

}  // namespace ccgwl::scene
