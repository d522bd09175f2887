#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "repbasis/builder.hpp"
#include "repbasis/density.hpp"
#include "repbasis/forms.hpp"
#include "repbasis/lemma.hpp"
#include "repbasis/oracle.hpp"

namespace repbasis::io {

// Field order is insertion order so output is stable and diffable.
using json = nlohmann::ordered_json;

/// Set files: a JSON array of integers, a JSON object with a "set" array, or
/// one decimal integer per line (blank lines ignored). Throws Parse with the
/// offending line number.
IntSet parse_set(std::string_view text);
json to_json(const IntSet& s);

Multiplicity multiplicity_from_json(const json& j);
json to_json(Multiplicity m);

ZeroSetSpec zero_set_from_json(const json& j);
json to_json(const ZeroSetSpec& z);

/// {"default": int|"inf", "overrides": {"n": int|"inf"}, "zero_set": {...}}
TargetSpec target_spec_from_json(const json& j);
json to_json(const TargetSpec& t);

/// {"lo": int, "hi": int, "counts": {"n": count}} with zeros omitted.
json to_json(const RepTable& t);
RepTable rep_table_from_json(const json& j);

json to_json(const AdmissibilityReport& r);
json to_json(const Certificate& c);
json to_json(const DensityProfile& p);
std::string to_csv(const DensityProfile& p);

/// {"form", "bezout", "target", "window", "rounds", "steps", "set"}; steps
/// carry the rejected candidates when `explain` is set.
json to_json(const Construction& c, bool explain = false);

/// Parses a JSON document, mapping syntax errors to ErrorKind::Parse.
json parse_json(std::string_view text);

}  // namespace repbasis::io
