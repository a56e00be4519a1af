#pragma once

#include "floorsum/verdict.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace floorsum {

enum class Mode { exact, numeric, coefficient };
const char* to_string(Mode m);

// A named parameter with its default grid. `variants` lists the variant
// numbers the parameter applies to (empty: all variants).
struct ParamSpec {
  std::string name;
  std::vector<Rational> values;
  std::vector<long> variants;
  std::string constraint;  // human-readable predicate, e.g. "k >= 1"

  bool applies_to(long variant) const;
};

struct IdentityRecord {
  std::string id;
  std::string anchor;   // what is being verified, in words
  std::string formula;  // the statement in compact plain text
  Mode mode = Mode::exact;
  std::vector<long> variants;  // values of parameter "v"; empty when single
  std::vector<ParamSpec> params;
  // Returns an error message for cells outside the declared domain.
  std::function<std::string(const Params&)> validate;
  std::function<Verdict(const Params&, const Policy&)> evaluate;

  std::string schema() const;
};

// Per-parameter replacement grids, e.g. {"k": 1..8}.
using GridOverrides = std::map<std::string, std::vector<Rational>>;

const std::vector<IdentityRecord>& registry();
const IdentityRecord* find_identity(std::string_view id);
// Case-insensitive substring match on id, anchor and formula.
std::vector<const IdentityRecord*> list_identities(std::string_view filter = {});

// Cells of the default grid (with overrides), filtered by `validate`.
std::vector<Params> cells(const IdentityRecord& rec, const GridOverrides& overrides = {});

// Single-cell verification; schema violations yield std::invalid_argument.
Verdict verify(const IdentityRecord& rec, const Params& params, const Policy& policy);

// Catalog builders, one per family.
void add_gf_catalog(std::vector<IdentityRecord>& out);
void add_series_catalog(std::vector<IdentityRecord>& out);
void add_binom_catalog(std::vector<IdentityRecord>& out);

// Helpers for catalog definitions.
std::vector<Rational> range(long lo, long hi, long step = 1);
std::vector<Rational> values(std::initializer_list<Rational> v);

}  // namespace floorsum
