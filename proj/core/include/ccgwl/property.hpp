#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ccgwl::logic {

// Abstract attribute dimensions of scene objects.
enum class PropertyType { Color, Shape, Material, Size };

inline constexpr std::array<PropertyType, 4> kAllPropertyTypes = {
    PropertyType::Color, PropertyType::Shape, PropertyType::Material, PropertyType::Size};

std::string_view to_string(PropertyType t);
std::optional<PropertyType> parse_property_type(std::string_view s);

// A concrete attribute value together with the dimension it belongs to,
// e.g. (Color, "blue") or (Shape, "sphere").
struct PropertyDescriptor {
  PropertyType type;
  std::string value;

  friend bool operator==(const PropertyDescriptor&, const PropertyDescriptor&) = default;
  friend auto operator<=>(const PropertyDescriptor&, const PropertyDescriptor&) = default;
};

// The attribute value inventories. Every value name is globally unique, so
// the value -> type map is deterministic.
class PropertyInventory {
 public:
  PropertyInventory() = default;

  // 10 colors, 10 shapes, 3 materials, 3 sizes.
  static PropertyInventory defaults();

  // First N names from the built-in pools; synthesized names ("color11")
  // past the end of a pool. Throws ConfigError when a count is < 1.
  static PropertyInventory with_counts(int colors, int shapes, int materials, int sizes);

  // Throws ConfigError if a name is already registered under another type.
  void set_values(PropertyType t, std::vector<std::string> names);

  const std::vector<std::string>& values(PropertyType t) const;

  // Types that have at least one value, in canonical order.
  std::vector<PropertyType> types() const;

  bool contains(std::string_view value) const;
  std::optional<PropertyType> type_of(std::string_view value) const;
  std::optional<PropertyDescriptor> descriptor(std::string_view value) const;

  // All values, canonical order: type order, then index within the type.
  std::vector<PropertyDescriptor> all_values() const;

  friend bool operator==(const PropertyInventory&, const PropertyInventory&) = default;

 private:
  std::map<PropertyType, std::vector<std::string>> values_;
  std::map<std::string, PropertyType, std::less<>> by_value_;
};

}  // namespace ccgwl::logic
