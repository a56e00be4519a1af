#include "floorsum/registry.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <stdexcept>

namespace floorsum {

const char* to_string(Mode m) {
  switch (m) {
    case Mode::exact:
      return "exact";
    case Mode::numeric:
      return "numeric";
    case Mode::coefficient:
      break;
  }
  return "coefficient";
}

bool ParamSpec::applies_to(long variant) const {
  return variants.empty() || std::find(variants.begin(), variants.end(), variant) != variants.end();
}

std::string IdentityRecord::schema() const {
  std::string out;
  if (!variants.empty()) out = "v in {" + std::to_string(variants.front()) + ".." + std::to_string(variants.back()) + "}";
  for (const auto& p : params) {
    if (!out.empty()) out += "; ";
    out += p.constraint.empty() ? p.name : p.constraint;
    if (!p.variants.empty()) {
      out += " [v=";
      for (std::size_t i = 0; i < p.variants.size(); ++i) out += (i ? "," : "") + std::to_string(p.variants[i]);
      out += "]";
    }
  }
  return out;
}

std::vector<Rational> range(long lo, long hi, long step) {
  std::vector<Rational> out;
  for (long x = lo; x <= hi; x += step) out.emplace_back(x);
  return out;
}

std::vector<Rational> values(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> reg = [] {
    std::vector<IdentityRecord> out;
    add_gf_catalog(out);
    add_series_catalog(out);
    add_binom_catalog(out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
  }();
  return reg;
}

const IdentityRecord* find_identity(std::string_view id) {
  for (const auto& rec : registry())
    if (rec.id == id) return &rec;
  return nullptr;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

void product(const std::vector<const ParamSpec*>& specs, std::size_t i, Params& cur, const GridOverrides& ov,
             std::vector<Params>& out) {
  if (i == specs.size()) {
    out.push_back(cur);
    return;
  }
  const ParamSpec& s = *specs[i];
  auto it = ov.find(s.name);
  const auto& vals = it != ov.end() ? it->second : s.values;
  for (const auto& v : vals) {
    cur[s.name] = v;
    product(specs, i + 1, cur, ov, out);
  }
  cur.erase(s.name);
}

}  // namespace

std::vector<const IdentityRecord*> list_identities(std::string_view filter) {
  std::vector<const IdentityRecord*> out;
  const std::string f = lower(filter);
  for (const auto& rec : registry()) {
    if (f.empty() || lower(rec.id).find(f) != std::string::npos || lower(rec.anchor).find(f) != std::string::npos ||
        lower(rec.formula).find(f) != std::string::npos)
      out.push_back(&rec);
  }
  return out;
}

std::vector<Params> cells(const IdentityRecord& rec, const GridOverrides& overrides) {
  std::vector<long> variants = rec.variants;
  if (auto it = overrides.find("v"); it != overrides.end() && !variants.empty()) {
    std::vector<long> chosen;
    for (const auto& q : it->second) {
      long v = to_long(q);
      if (std::find(variants.begin(), variants.end(), v) != variants.end()) chosen.push_back(v);
    }
    variants = chosen;
  }
  const bool has_variants = !rec.variants.empty();
  if (!has_variants) variants = {0};
  std::vector<Params> out;
  for (long v : variants) {
    std::vector<const ParamSpec*> specs;
    for (const auto& p : rec.params)
      if (p.applies_to(v)) specs.push_back(&p);
    Params cur;
    if (has_variants) cur["v"] = v;
    std::vector<Params> raw;
    product(specs, 0, cur, overrides, raw);
    for (auto& p : raw)
      if (!rec.validate || rec.validate(p).empty()) out.push_back(std::move(p));
  }
  return out;
}

Verdict verify(const IdentityRecord& rec, const Params& params, const Policy& policy) {
  long variant = 0;
  if (!rec.variants.empty()) {
    variant = param_long(params, "v");
    if (std::find(rec.variants.begin(), rec.variants.end(), variant) == rec.variants.end())
      throw std::invalid_argument(rec.id + ": unknown variant v=" + std::to_string(variant));
  }
  for (const auto& p : rec.params)
    if (p.applies_to(variant) && params.find(p.name) == params.end())
      throw std::invalid_argument(rec.id + ": missing parameter '" + p.name + "'");
  for (const auto& [name, value] : params) {
    if (name == "v" && !rec.variants.empty()) continue;
    bool known = std::any_of(rec.params.begin(), rec.params.end(),
                             [&](const ParamSpec& p) { return p.name == name && p.applies_to(variant); });
    if (!known) throw std::invalid_argument(rec.id + ": unexpected parameter '" + name + "'");
  }
  if (rec.validate) {
    std::string err = rec.validate(params);
    if (!err.empty()) throw std::invalid_argument(rec.id + ": " + err);
  }
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = rec.evaluate(params, policy);
  } catch (const std::domain_error& e) {
    v = inconclusive_verdict(rec.id, params, std::string("evaluation error: ") + e.what(), policy.precision);
  }
  v.id = rec.id;
  v.params = params;
  if (v.wall_ms == 0)
    v.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

}  // namespace floorsum
