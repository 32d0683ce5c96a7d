#pragma once

#include <map>
#include <memory>
#include <string>

#include "cellred/audit.hpp"

namespace testing_support {

inline std::shared_ptr<const cellred::WeylGroup> group(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const cellred::WeylGroup>> cache;
  auto& slot = cache[name];
  if (!slot)
    slot = std::make_shared<const cellred::WeylGroup>(
        cellred::WeylGroup::generate(cellred::CartanType::parse(name)));
  return slot;
}

// Full per-type context, built once per test binary.
inline const cellred::TypeContext& context(const std::string& name) {
  static std::map<std::string, std::unique_ptr<cellred::TypeContext>> cache;
  auto& slot = cache[name];
  if (!slot)
    slot = std::make_unique<cellred::TypeContext>(cellred::TypeContext::build(
        cellred::CartanType::parse(name), cellred::default_data_dir(), cellred::Exec::Parallel));
  return *slot;
}

inline cellred::IntPoly P(const char* text) { return cellred::IntPoly::parse(text); }

}  // namespace testing_support
