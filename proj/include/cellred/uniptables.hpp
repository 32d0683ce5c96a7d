#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellred/coxeter.hpp"
#include "cellred/poly.hpp"
#include "cellred/rootdata.hpp"

namespace cellred {

struct WCharTable;
struct LeadingData;

/// Dominant weight whose coordinates are affine in p: coords[i] = c0 + c1 * p.
struct WeightTemplate {
  std::vector<std::pair<std::int64_t, std::int64_t>> coords;

  Weight instantiate(std::int64_t p) const;
  /// Dominant for every p >= min_prime.
  bool dominant_from(std::int64_t min_prime) const;
  /// "(p-3,0)"
  std::string str() const;
};

struct TemplateTerm {
  std::int64_t coef = 1;
  WeightTemplate tmpl;
};

using MwDef = std::map<ElemId, std::vector<TemplateTerm>>;

struct UnipotentChar {
  std::string label;
  IntPoly degree;
  std::string ref;
  /// Type A only: label of the matching W-character row, e.g. "(3,1)".
  std::string w_char;
};

/// Transcribed tables for one Cartan type. Optional slots are empty when the
/// data file holds null (A4 has no M_w, decomposition or duality data).
struct TypeTables {
  explicit TypeTables(CartanType t) : type(t) {}

  CartanType type;
  std::vector<UnipotentChar> unipotent;
  std::optional<std::vector<ElemId>> near_involutions;
  std::optional<std::map<ElemId, std::map<std::string, std::int64_t>>> r_alpha;
  std::optional<MwDef> m_w;
  std::optional<std::map<ElemId, IntPoly>> delta;
  std::optional<std::map<std::string, std::map<ElemId, std::int64_t>>> decomp;
  /// Symmetric: both w -> w~ and w~ -> w are stored.
  std::optional<std::map<ElemId, ElemId>> duality;
  std::int64_t min_prime = 2;
  std::int64_t proximity_bound = 4;
  std::map<std::string, std::string> refs;
  /// True when unipotent / r_alpha were generated from computed c_{w,E}.
  bool derived = false;

  bool has_mw_data() const { return m_w.has_value() && delta.has_value(); }
  const UnipotentChar& unipotent_char(const std::string& label) const;
  std::string ref(const std::string& key) const;
};

/// CELLRED_DATA_DIR if set, else the directory baked in at build time.
std::filesystem::path default_data_dir();

/// Loads <dir>/<type>.json and verifies structural invariants.
/// Throws Error(DataIntegrityFailure) naming the offending table and location.
TypeTables load_tables(const WeylGroup& g, const std::filesystem::path& dir = default_data_dir());

/// (rho : R_{alpha_w}); 0 when absent. Throws Error(UnknownLabel).
std::int64_t r_alpha_multiplicity(const TypeTables& t, const std::string& label, ElemId w);

/// Unipotent degree attached to a partition of n: q^{n(lambda)} [n]! / prod of hook q-integers.
IntPoly hook_degree(const std::vector<int>& partition);
std::vector<int> parse_partition(const std::string& label);

/// Type A: fills empty unipotent / r_alpha slots from computed c_{w,E} via
/// rho_E <-> E and marks the tables derived.
void derive_type_a_tables(TypeTables& t, const WCharTable& table, const LeadingData& leading);

}  // namespace cellred
