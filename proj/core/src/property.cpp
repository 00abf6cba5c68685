#include "ccgwl/property.hpp"

#include <algorithm>

#include "ccgwl/errors.hpp"

namespace ccgwl::logic {

namespace {

const std::vector<std::string> kColorPool = {"blue",   "red",  "green", "yellow", "purple",
                                             "orange", "pink", "brown", "black",  "white"};
const std::vector<std::string> kShapePool = {"sphere",  "cube",  "cone", "cylinder", "pyramid",
                                             "torus",   "prism", "disc", "star",     "wedge"};
const std::vector<std::string> kMaterialPool = {"rubber", "metal", "wood"};
const std::vector<std::string> kSizePool = {"small", "medium", "large"};

const std::vector<std::string>& pool_for(PropertyType t) {
  switch (t) {
    case PropertyType::Color: return kColorPool;
    case PropertyType::Shape: return kShapePool;
    case PropertyType::Material: return kMaterialPool;
    case PropertyType::Size: return kSizePool;
  }
  return kColorPool;
}

std::vector<std::string> take_names(PropertyType t, int count) {
  if (count < 1) {
    throw ConfigError("property inventory for '" + std::string(to_string(t)) +
                      "' must have at least one value");
  }
  const auto& pool = pool_for(t);
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (i < static_cast<int>(pool.size())) {
      names.push_back(pool[static_cast<size_t>(i)]);
    } else {
      names.push_back(std::string(to_string(t)) + std::to_string(i + 1));
    }
  }
  return names;
}

}  // namespace

std::string_view to_string(PropertyType t) {
  switch (t) {
    case PropertyType::Color: return "color";
    case PropertyType::Shape: return "shape";
    case PropertyType::Material: return "material";
    case PropertyType::Size: return "size";
  }
  return "color";
}

std::optional<PropertyType> parse_property_type(std::string_view s) {
  for (PropertyType t : kAllPropertyTypes) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

PropertyInventory PropertyInventory::defaults() { return with_counts(10, 10, 3, 3); }

PropertyInventory PropertyInventory::with_counts(int colors, int shapes, int materials,
                                                 int sizes) {
  PropertyInventory inv;
  inv.set_values(PropertyType::Color, take_names(PropertyType::Color, colors));
  inv.set_values(PropertyType::Shape, take_names(PropertyType::Shape, shapes));
  inv.set_values(PropertyType::Material, take_names(PropertyType::Material, materials));
  inv.set_values(PropertyType::Size, take_names(PropertyType::Size, sizes));
  return inv;
}

void PropertyInventory::set_values(PropertyType t, std::vector<std::string> names) {
  for (auto it = by_value_.begin(); it != by_value_.end();) {
    it = it->second == t ? by_value_.erase(it) : std::next(it);
  }
  for (const auto& name : names) {
    if (name.empty()) throw ConfigError("empty property value name");
    auto [it, inserted] = by_value_.emplace(name, t);
    if (!inserted) {
      throw ConfigError("property value '" + name + "' registered under two types");
    }
  }
  values_[t] = std::move(names);
}

const std::vector<std::string>& PropertyInventory::values(PropertyType t) const {
  static const std::vector<std::string> empty;
  auto it = values_.find(t);
  return it == values_.end() ? empty : it->second;
}

std::vector<PropertyType> PropertyInventory::types() const {
  std::vector<PropertyType> out;
  for (PropertyType t : kAllPropertyTypes) {
    if (!values(t).empty()) out.push_back(t);
  }
  return out;
}

bool PropertyInventory::contains(std::string_view value) const {
  return by_value_.find(value) != by_value_.end();
}

std::optional<PropertyType> PropertyInventory::type_of(std::string_view value) const {
  auto it = by_value_.find(value);
  if (it == by_value_.end()) return std::nullopt;
  return it->second;
}

std::optional<PropertyDescriptor> PropertyInventory::descriptor(std::string_view value) const {
  auto t = type_of(value);
  if (!t) return std::nullopt;
  return PropertyDescriptor{*t, std::string(value)};
}

std::vector<PropertyDescriptor> PropertyInventory::all_values() const {
  std::vector<PropertyDescriptor> out;
  for (PropertyType t : types()) {
    for (const auto& v : values(t)) out.push_back(PropertyDescriptor{t, v});
  }
  return out;
}

}  // namespace ccgwl::logic
