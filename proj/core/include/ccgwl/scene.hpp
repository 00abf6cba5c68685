#pragma once

#include <string>
#include <vector>

#include "ccgwl/property.hpp"

namespace ccgwl::scene {

struct SceneObject {
  int id = 0;
  std::string color, shape, material, size;

  const std::string& attribute(logic::PropertyType t) const {
    switch (t) {
      case logic::PropertyType::Color: return color;
      case logic::PropertyType::Shape: return shape;
      case logic::PropertyType::Material: return material;
      case logic::PropertyType::Size: return size;
    }
    return color;
  }

  bool has(const logic::PropertyDescriptor& v) const { return attribute(v.type) == v.value; }

  friend bool operator==(const SceneObject&, const SceneObject&) = default;
};

// Between 1 and 6 attributed objects with unique ids.
struct Scene {
  std::vector<SceneObject> objects;

  const SceneObject* find(int id) const {
    for (const auto& o : objects) {
      if (o.id == id) return &o;
    }
    return nullptr;
  }

  friend bool operator==(const Scene&, const Scene&) = default;
};

// One reference-game trial: "the <color-word> <shape-word>" picking out the
// unique matching object.
struct ReferenceTrial {
  Scene scene;
  std::vector<std::string> utterance;
  int referent = 0;

  friend bool operator==(const ReferenceTrial&, const ReferenceTrial&) = default;
};

}  // namespace ccgwl::scene
