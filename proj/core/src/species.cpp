#include "phonograd/species.hpp"

#include <cmath>

#include "phonograd/constants.hpp"
#include "phonograd/error.hpp"

namespace phonograd {

void validate(const AtomSpecies& species) {
  if (!(species.mass.value() > 0.0) || !isfinite(species.mass))
    throw Error(ErrorCode::kInvalidInput, "species '" + species.name + "': mass must be positive");
  if (!(species.a_scatt.value() > 0.0) || !isfinite(species.a_scatt))
    throw Error(ErrorCode::kInvalidInput, "species '" + species.name + "': scattering length must be positive");
  if (!(species.three_body_D.value() >= 0.0) || !isfinite(species.three_body_D))
    throw Error(ErrorCode::kInvalidInput, "species '" + species.name + "': three-body constant must be >= 0");
}

const AtomSpecies& rubidium87() {
  static const AtomSpecies rb{
      .name = "Rb87",
      .mass = 86.909180527 * kConstants.atomic_mass_unit,
      .a_scatt = Length{5.2e-9},
      .three_body_D = three_body_from_cgs(5.8e-30),
  };
  return rb;
}

const SpeciesTable& SpeciesTable::builtin() {
  static const SpeciesTable table({rubidium87()});
  return table;
}

SpeciesTable::SpeciesTable(std::vector<AtomSpecies> entries) {
  for (auto& e : entries) {
    validate(e);
    std::string key = e.name;
    entries_.emplace(std::move(key), std::move(e));
  }
}

const AtomSpecies& SpeciesTable::lookup(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw Error(ErrorCode::kUnknownSpecies, "no species named '" + std::string(name) + "'");
  return it->second;
}

bool SpeciesTable::contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }

std::vector<std::string> SpeciesTable::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

const AtomSpecies& species_lookup(std::string_view name) { return SpeciesTable::builtin().lookup(name); }

}  // namespace phonograd
