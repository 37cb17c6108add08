#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "phonograd/units.hpp"

namespace phonograd {

struct AtomSpecies {
  std::string name;
  Mass mass;
  Length a_scatt;
  ThreeBodyRate three_body_D;  // stored in SI; three_body_from_cgs for cm^6 s^-1

  friend bool operator==(const AtomSpecies&, const AtomSpecies&) = default;
};

/// Throws kInvalidInput unless mass > 0, a_scatt > 0, D >= 0 (all finite).
void validate(const AtomSpecies& species);

/// 87Rb: 86.909180527 u, a = 5.2 nm, D = 5.8e-30 cm^6 s^-1.
const AtomSpecies& rubidium87();

/// Immutable after construction; the built-in table holds "Rb87".
class SpeciesTable {
 public:
  static const SpeciesTable& builtin();

  explicit SpeciesTable(std::vector<AtomSpecies> entries);

  /// Throws kUnknownSpecies for absent names.
  [[nodiscard]] const AtomSpecies& lookup(std::string_view name) const;
  [[nodiscard]] bool contains(std::string_view name) const;
  [[nodiscard]] std::vector<std::string> names() const;

 private:
  std::map<std::string, AtomSpecies, std::less<>> entries_;
};

/// Lookup in the built-in table.
const AtomSpecies& species_lookup(std::string_view name);

}  // namespace phonograd
