#include "repbasis/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>

namespace repbasis::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

i64 as_i64(const json& j, std::string_view what) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<i64>::max()))
            parse_error(std::string(what) + ": integer out of 64-bit range");
        return j.get<i64>();
    }
    parse_error(std::string(what) + ": expected an integer, got " + j.dump());
}

std::uint64_t as_u64(const json& j, std::string_view what) {
    const i64 v = as_i64(j, what);
    if (v < 0) parse_error(std::string(what) + ": expected a nonnegative integer");
    return static_cast<std::uint64_t>(v);
}

i64 parse_decimal(std::string_view s, std::string_view what) {
    i64 v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) parse_error(std::string(what) + ": integer out of 64-bit range");
    if (ec != std::errc() || ptr != last || first == last)
        parse_error(std::string(what) + ": not a decimal integer: '" + std::string(s) + "'");
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

const json& require(const json& j, const char* key, std::string_view where) {
    auto it = j.find(key);
    if (it == j.end()) parse_error(std::string(where) + ": missing \"" + key + "\"");
    return *it;
}

IntSet set_from_json_array(const json& arr) {
    std::vector<i64> values;
    values.reserve(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) values.push_back(as_i64(arr[k], "set element " + std::to_string(k)));
    return IntSet::from_values(std::move(values));
}

}  // namespace

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
}

IntSet parse_set(std::string_view text) {
    const std::string_view body = trim(text);
    if (!body.empty() && (body.front() == '[' || body.front() == '{')) {
        const json j = parse_json(body);
        if (j.is_array()) return set_from_json_array(j);
        if (j.is_object() && j.contains("set") && j["set"].is_array()) return set_from_json_array(j["set"]);
        parse_error("set file: expected a JSON array or an object with a \"set\" array");
    }

    std::vector<i64> values;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        ++line_no;
        const std::string_view line = trim(text.substr(pos, eol - pos));
        if (!line.empty()) values.push_back(parse_decimal(line, "line " + std::to_string(line_no)));
        pos = eol + 1;
    }
    return IntSet::from_values(std::move(values));
}

json to_json(const IntSet& s) {
    json arr = json::array();
    for (i64 x : s) arr.push_back(x);
    return arr;
}

Multiplicity multiplicity_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Multiplicity::infinity();
        parse_error("target value: expected a nonnegative integer or \"inf\", got " + j.dump());
    }
    return Multiplicity(as_u64(j, "target value"));
}

json to_json(Multiplicity m) {
    if (m.is_infinite()) return "inf";
    return m.value();
}

ZeroSetSpec zero_set_from_json(const json& j) {
    if (!j.is_object()) parse_error("zero_set: expected an object");
    const std::string kind = require(j, "kind", "zero_set").get<std::string>();
    if (kind == "empty") return ZeroSetSpec::empty();
    if (kind == "finite-list") {
        const json& values = require(j, "values", "zero_set finite-list");
        if (!values.is_array()) parse_error("zero_set finite-list: \"values\" must be an array");
        return ZeroSetSpec::finite(set_from_json_array(values).values());
    }
    if (kind == "perfect-squares") return ZeroSetSpec::perfect_squares();
    if (kind == "powers-of-base") return ZeroSetSpec::powers_of(as_i64(require(j, "base", "zero_set powers-of-base"), "base"));
    if (kind == "shifted-scaled")
        return ZeroSetSpec::shifted_scaled(as_i64(require(j, "scale", "zero_set shifted-scaled"), "scale"),
                                           as_i64(require(j, "shift", "zero_set shifted-scaled"), "shift"),
                                           zero_set_from_json(require(j, "inner", "zero_set shifted-scaled")));
    if (kind == "union") {
        const json& parts = require(j, "parts", "zero_set union");
        if (!parts.is_array()) parse_error("zero_set union: \"parts\" must be an array");
        std::vector<ZeroSetSpec> out;
        for (const auto& p : parts) out.push_back(zero_set_from_json(p));
        return ZeroSetSpec::union_of(std::move(out));
    }
    parse_error("zero_set: unknown kind '" + kind + "'");
}

json to_json(const ZeroSetSpec& z) {
    json j;
    switch (z.kind()) {
    case ZeroSetSpec::Kind::Empty: j["kind"] = "empty"; break;
    case ZeroSetSpec::Kind::FiniteList:
        j["kind"] = "finite-list";
        j["values"] = to_json(z.list());
        break;
    case ZeroSetSpec::Kind::PerfectSquares: j["kind"] = "perfect-squares"; break;
    case ZeroSetSpec::Kind::PowersOfBase:
        j["kind"] = "powers-of-base";
        j["base"] = z.base();
        break;
    case ZeroSetSpec::Kind::ShiftedScaled:
        j["kind"] = "shifted-scaled";
        j["scale"] = z.scale();
        j["shift"] = z.shift();
        j["inner"] = to_json(z.inner());
        break;
    case ZeroSetSpec::Kind::Union:
        j["kind"] = "union";
        j["parts"] = json::array();
        for (const auto& p : z.parts()) j["parts"].push_back(to_json(p));
        break;
    }
    return j;
}

TargetSpec target_spec_from_json(const json& j) {
    if (!j.is_object()) parse_error("target spec: expected a JSON object");
    const Multiplicity dflt = multiplicity_from_json(require(j, "default", "target spec"));
    std::map<i64, Multiplicity> overrides;
    if (auto it = j.find("overrides"); it != j.end()) {
        if (!it->is_object()) parse_error("target spec: \"overrides\" must be an object");
        for (const auto& [key, value] : it->items())
            overrides[parse_decimal(key, "override key")] = multiplicity_from_json(value);
    }
    ZeroSetSpec zero = ZeroSetSpec::empty();
    if (auto it = j.find("zero_set"); it != j.end()) zero = zero_set_from_json(*it);
    return TargetSpec(dflt, std::move(overrides), std::move(zero));
}

json to_json(const TargetSpec& t) {
    json j;
    j["default"] = to_json(t.default_value());
    j["overrides"] = json::object();
    for (const auto& [n, v] : t.overrides()) j["overrides"][std::to_string(n)] = to_json(v);
    j["zero_set"] = to_json(t.declared_zero_set());
    return j;
}

json to_json(const RepTable& t) {
    json j;
    j["lo"] = t.window.lo;
    j["hi"] = t.window.hi;
    j["counts"] = json::object();
    for (const auto& [n, c] : t.counts)
        if (c != 0) j["counts"][std::to_string(n)] = c;
    return j;
}

RepTable rep_table_from_json(const json& j) {
    RepTable t;
    t.window = {as_i64(require(j, "lo", "rep table"), "lo"), as_i64(require(j, "hi", "rep table"), "hi")};
    for (const auto& [key, value] : require(j, "counts", "rep table").items()) {
        const std::uint64_t c = as_u64(value, "count");
        if (c != 0) t.counts[parse_decimal(key, "count key")] = c;
    }
    return t;
}

json to_json(const AdmissibilityReport& r) {
    json j;
    j["verdict"] = r.admissible ? "admissible" : "rejected";
    if (r.reason) j["case"] = std::string(to_string(*r.reason));
    if (r.witness) {
        j["witness"] = *r.witness;
        j["observed"] = r.observed;
        j["expected"] = r.expected;
    }
    j["values_checked"] = r.values_checked;
    return j;
}

json to_json(const Certificate& c) {
    json j;
    j["window"] = {c.window.lo, c.window.hi};
    j["clean"] = c.clean();
    j["targets_checked"] = c.targets_checked;
    j["violations"] = json::array();
    for (const auto& v : c.violations)
        j["violations"].push_back({{"check", std::string(1, v.check)},
                                   {"n", v.n},
                                   {"count", v.observed},
                                   {"required", to_json(v.required)}});
    j["table"] = to_json(c.table);
    return j;
}

json to_json(const DensityProfile& p) {
    json j;
    j["profile"] = json::array();
    for (std::size_t k = 0; k < p.radii.size(); ++k)
        j["profile"].push_back({{"radius", p.radii[k]}, {"count", p.counts[k]}, {"ratio", p.ratios[k]}});
    j["non_increasing"] = p.non_increasing;
    return j;
}

std::string to_csv(const DensityProfile& p) {
    std::string out = "radius,count,ratio\n";
    char buf[96];
    for (std::size_t k = 0; k < p.radii.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%lld,%llu,%.12g\n", static_cast<long long>(p.radii[k]),
                      static_cast<unsigned long long>(p.counts[k]), p.ratios[k]);
        out += buf;
    }
    return out;
}

json to_json(const Construction& c, bool explain) {
    json j;
    j["form"] = {c.form.u1(), c.form.u2()};
    j["bezout"] = {c.bezout.v1, c.bezout.v2};
    j["target"] = to_json(c.spec);
    j["window"] = c.radius;
    j["rounds"] = c.rounds;
    j["steps"] = json::array();
    for (const auto& s : c.steps) {
        json step;
        step["i"] = s.index;
        step["b"] = s.b;
        step["round"] = s.round;
        if (s.t) {
            step["t"] = *s.t;
            step["added"] = {s.added[0], s.added[1]};
        } else {
            step["t"] = "skipped";
        }
        step["size"] = s.set_size;
        if (explain && s.t) {
            step["rejected"] = json::array();
            for (const auto& r : s.rejected) {
                json rj = to_json(r.report);
                rj["t"] = r.t;
                step["rejected"].push_back(std::move(rj));
            }
        }
        j["steps"].push_back(std::move(step));
    }
    j["set"] = to_json(c.final_set);
    return j;
}

}  // namespace repbasis::io
