#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "repbasis/builder.hpp"
#include "repbasis/density.hpp"
#include "repbasis/gadic.hpp"
#include "repbasis/io.hpp"
#include "repbasis/lemma.hpp"
#include "repbasis/oracle.hpp"

namespace repbasis::cli {

namespace {

using io::json;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<i64> parse_int_list(const std::string& text, std::string_view what) {
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::Parse, std::string(what) + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

LinearForm parse_binary_form(const std::string& text) {
    const auto c = parse_int_list(text, "--form");
    if (c.size() != 2) throw Error(ErrorKind::Parse, "--form expects two comma-separated coefficients");
    return validate_form(c[0], c[1]);
}

/// "const:<n|inf>", "@file.json", or inline JSON.
TargetSpec parse_target(const std::string& text) {
    if (text.rfind("const:", 0) == 0) {
        const std::string value = text.substr(6);
        if (value == "inf") return TargetSpec::constant(Multiplicity::infinity());
        const auto v = parse_int_list(value, "--target");
        if (v.size() != 1 || v[0] < 0) throw Error(ErrorKind::Parse, "--target const: needs a nonnegative integer or inf");
        return TargetSpec::constant(Multiplicity(static_cast<std::uint64_t>(v[0])));
    }
    const std::string body = text.rfind('@', 0) == 0 ? read_file(text.substr(1)) : text;
    return io::target_spec_from_json(io::parse_json(body));
}

/// "empty", "perfect-squares", "powers-of-base:K", "finite-list:a,b,...",
/// "@file.json" or inline JSON.
ZeroSetSpec parse_zero_set(const std::string& text) {
    if (text == "empty") return ZeroSetSpec::empty();
    if (text == "perfect-squares") return ZeroSetSpec::perfect_squares();
    if (text.rfind("powers-of-base:", 0) == 0) {
        const auto v = parse_int_list(text.substr(15), "--zero-set");
        if (v.size() != 1) throw Error(ErrorKind::Parse, "powers-of-base: needs one base");
        return ZeroSetSpec::powers_of(v[0]);
    }
    if (text.rfind("finite-list:", 0) == 0) return ZeroSetSpec::finite(parse_int_list(text.substr(12), "--zero-set"));
    const std::string body = text.rfind('@', 0) == 0 ? read_file(text.substr(1)) : text;
    return io::zero_set_from_json(io::parse_json(body));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

struct ConstructOptions {
    std::string form;
    std::string target = "const:1";
    i64 window = 10;
    std::uint64_t rounds = 1;
    i64 search_radius = kDefaultMaxRadius;
    std::optional<i64> cert_radius;
    std::string out_path;
    bool explain = false;
};

int cmd_construct(const ConstructOptions& o, std::ostream& out, std::ostream& err) {
    const LinearForm form = parse_binary_form(o.form);
    const TargetSpec spec = parse_target(o.target);

    Construction c = [&] {
        try {
            return build(form, spec, o.window, o.rounds, o.search_radius);
        } catch (const BuildError& e) {
            json diag;
            diag["error"] = std::string(to_string(e.kind()));
            diag["message"] = e.what();
            diag["step"] = e.failed_step();
            diag["histogram"] = json::object();
            for (const auto& [k, v] : e.histogram()) diag["histogram"][std::string(to_string(k))] = v;
            diag["partial"] = io::to_json(e.partial());
            err << diag.dump(2) << '\n';
            throw;
        }
    }();

    std::optional<Window> window;
    if (o.cert_radius) window = Window{-*o.cert_radius, *o.cert_radius};
    const Certificate cert = certify(c, window);

    json j = io::to_json(c, o.explain);
    j["certificate"] = io::to_json(cert);
    if (o.out_path.empty()) {
        emit(out, j);
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw Error(ErrorKind::Parse, "cannot write '" + o.out_path + "'");
        emit(f, j);
    }
    if (!cert.clean()) {
        err << "certificate violations: " << cert.violations.size() << '\n';
        return kCertificateViolation;
    }
    return kOk;
}

struct RepfnOptions {
    std::string set_path;
    std::string form;
    i64 lo = 0;
    i64 hi = 0;
};

int cmd_repfn(const RepfnOptions& o, std::ostream& out) {
    const LinearForm form = parse_binary_form(o.form);
    const IntSet a = io::parse_set(read_file(o.set_path));
    emit(out, io::to_json(rep_table(a, form, o.lo, o.hi)));
    return kOk;
}

struct SidonOptions {
    std::string set_path;
    std::string form;
    std::int64_t g = 1;
    i64 lo = 0;
    i64 hi = 0;
    std::uint64_t cap = 100'000'000;
};

int cmd_sidon(const SidonOptions& o, std::ostream& out) {
    if (o.g < 1) throw Error(ErrorKind::InvalidArgument, "--g must be at least 1");
    if (o.lo > o.hi) throw Error(ErrorKind::InvalidArgument, "--lo must not exceed --hi");
    const MaryForm form(parse_int_list(o.form, "--form"));
    const IntSet a = io::parse_set(read_file(o.set_path));
    const BfgVerdict v = is_b_f_g(a, form, static_cast<std::uint64_t>(o.g), {o.lo, o.hi}, o.cap);
    json j;
    j["holds"] = v.holds;
    j["g"] = o.g;
    j["window"] = {o.lo, o.hi};
    if (v.witness) {
        j["witness"] = *v.witness;
        j["count"] = v.witness_count;
    }
    emit(out, j);
    return v.holds ? kOk : kPredicateFalse;
}

struct GadicOptions {
    i64 g = 0;
    i64 m = 0;
    std::optional<i64> limit;
    std::optional<i64> decode;
    bool decode_table = false;
};

int cmd_gadic(const GadicOptions& o, std::ostream& out) {
    const GadicParams p = GadicParams::make(o.g, o.m);
    json j;
    j["g"] = p.g;
    j["m"] = p.m;
    j["form"] = gadic_form(p).coefficients();
    if (o.limit) {
        if (*o.limit < 0) throw Error(ErrorKind::InvalidArgument, "--limit must be nonnegative");
        j["limit"] = *o.limit;
        j["set"] = io::to_json(gadic_set(p, *o.limit));
        if (o.decode_table) {
            j["decode_table"] = json::array();
            for (i64 n = 0; n <= *o.limit; ++n) j["decode_table"].push_back({{"n", n}, {"tuple", gadic_decode(p, n)}});
        }
    } else if (o.decode_table) {
        throw Error(ErrorKind::InvalidArgument, "--decode-table needs --limit");
    }
    if (o.decode) j["decode"] = {{"n", *o.decode}, {"tuple", gadic_decode(p, *o.decode)}};
    emit(out, j);
    return kOk;
}

struct DensityOptions {
    std::string zero_set;
    std::string radii = "10,100,1000";
    std::string format = "json";
};

int cmd_density(const DensityOptions& o, std::ostream& out) {
    const ZeroSetSpec z = parse_zero_set(o.zero_set);
    const DensityProfile p = density_profile(z, parse_int_list(o.radii, "--radii"));
    if (o.format == "csv") {
        out << io::to_csv(p);
    } else {
        json j;
        j["zero_set"] = io::to_json(z);
        const json profile = io::to_json(p);
        for (const auto& [k, v] : profile.items()) j[k] = v;
        emit(out, j);
    }
    return kOk;
}

struct ExplainOptions {
    std::string form;
    std::string set_path;
    std::string zero_set = "empty";
    i64 b = 0;
    std::optional<i64> t;
    std::optional<i64> scan;
};

int cmd_explain(const ExplainOptions& o, std::ostream& out) {
    const LinearForm form = parse_binary_form(o.form);
    const IntSet a = o.set_path.empty() ? IntSet{} : io::parse_set(read_file(o.set_path));
    const ZeroSetSpec w = parse_zero_set(o.zero_set);
    const BezoutPair bez = bezout(form);

    json j;
    j["form"] = {form.u1(), form.u2()};
    j["bezout"] = {bez.v1, bez.v2};
    j["b"] = o.b;
    if (o.scan) {
        const TSearchResult r = find_admissible_t(a, o.b, w, form, bez, *o.scan);
        j["rejected"] = json::array();
        for (const auto& rc : r.rejected) {
            json rj = io::to_json(rc.report);
            rj["t"] = rc.t;
            j["rejected"].push_back(std::move(rj));
        }
        j["t"] = r.t;
        j["pair"] = {r.aug.pair[0], r.aug.pair[1]};
        j["report"] = io::to_json(r.report);
        j["set"] = io::to_json(r.aug.c_set);
        emit(out, j);
        return kOk;
    }
    const i64 t = o.t.value_or(0);
    const Augmentation aug = make_augmentation(a, o.b, t, form, bez);
    const AdmissibilityReport rep = check_admissible(a, o.b, w, aug, form);
    j["t"] = t;
    j["pair"] = {aug.pair[0], aug.pair[1]};
    j["report"] = io::to_json(rep);
    j["set"] = io::to_json(aug.c_set);
    emit(out, j);
    return rep.admissible ? kOk : kPredicateFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation-function bases for linear forms", "repbasis"};
    app.require_subcommand(1);

    ConstructOptions co;
    auto* construct = app.add_subcommand("construct", "Build a finite set with a prescribed representation function");
    construct->add_option("--form", co.form, "Binary form coefficients u1,u2")->required();
    construct->add_option("--target", co.target, "const:<n|inf>, @spec.json, or inline JSON");
    construct->add_option("--window", co.window, "Target radius N");
    construct->add_option("--rounds", co.rounds, "Round cap K");
    construct->add_option("--radius", co.search_radius, "Largest |t| tried per step");
    construct->add_option("--cert-radius", co.cert_radius, "Certificate window half-width");
    construct->add_option("--out", co.out_path, "Write the construction here instead of stdout");
    construct->add_flag("--explain", co.explain, "Include rejected t candidates per step");

    RepfnOptions ro;
    auto* repfn = app.add_subcommand("repfn", "Tabulate R_{A,F} over a window");
    repfn->add_option("--set", ro.set_path, "Set file (JSON or one integer per line; - for stdin)")->required();
    repfn->add_option("--form", ro.form, "Binary form coefficients u1,u2")->required();
    repfn->add_option("--lo", ro.lo)->required();
    repfn->add_option("--hi", ro.hi)->required();

    SidonOptions so;
    auto* sidon = app.add_subcommand("sidon", "Check the B_F[g] property on a window");
    sidon->add_option("--set", so.set_path, "Set file")->required();
    sidon->add_option("--form", so.form, "Form coefficients c1,...,cm")->required();
    sidon->add_option("--g", so.g, "Bound g (1 = Sidon)");
    sidon->add_option("--lo", so.lo)->required();
    sidon->add_option("--hi", so.hi)->required();
    sidon->add_option("--cap", so.cap, "Work cap on |A|^m");

    GadicOptions go;
    auto* gadic = app.add_subcommand("gadic", "Digit-restricted Sidon basis for N0");
    gadic->add_option("--g", go.g)->required();
    gadic->add_option("--m", go.m)->required();
    gadic->add_option("--limit", go.limit, "Emit every member <= limit");
    gadic->add_option("--decode", go.decode, "Decode n into its unique representation");
    gadic->add_flag("--decode-table", go.decode_table, "Decode every n in [0, limit]");

    DensityOptions dop;
    auto* density = app.add_subcommand("density", "Empirical density profile of a zero set");
    density->add_option("--zero-set", dop.zero_set, "empty | perfect-squares | powers-of-base:K | finite-list:a,b | @file | JSON")
        ->required();
    density->add_option("--radii", dop.radii, "Comma-separated increasing radii");
    density->add_option("--format", dop.format)->check(CLI::IsMember({"json", "csv"}));

    ExplainOptions eo;
    auto* explain = app.add_subcommand("explain-t", "Admissibility report for one t, or a scan");
    explain->add_option("--form", eo.form)->required();
    explain->add_option("--set", eo.set_path, "A' (default empty)");
    explain->add_option("--zero-set", eo.zero_set);
    explain->add_option("--b", eo.b)->required();
    explain->add_option("--t", eo.t);
    explain->add_option("--scan", eo.scan, "Search |t| <= R instead of checking one t");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*construct) return cmd_construct(co, out, err);
        if (*repfn) return cmd_repfn(ro, out);
        if (*sidon) return cmd_sidon(so, out);
        if (*gadic) return cmd_gadic(go, out);
        if (*density) return cmd_density(dop, out);
        if (*explain) return cmd_explain(eo, out);
    } catch (const SearchExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kSearchExhausted;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        if (e.kind() == ErrorKind::SearchExhausted) return kSearchExhausted;
        if (e.kind() == ErrorKind::Internal) return kCertificateViolation;
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "error (parse): " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace repbasis::cli
