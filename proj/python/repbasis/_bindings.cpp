// Thin pybind11 layer. Structured results cross the boundary as JSON text and
// are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "repbasis/builder.hpp"
#include "repbasis/density.hpp"
#include "repbasis/gadic.hpp"
#include "repbasis/io.hpp"
#include "repbasis/lemma.hpp"
#include "repbasis/oracle.hpp"

namespace py = pybind11;
using namespace repbasis;
using io::json;

namespace {

IntSet to_set(const std::vector<i64>& v) { return IntSet::from_values(v); }

ZeroSetSpec zero_set_arg(const std::string& text) {
    return text.empty() ? ZeroSetSpec::empty() : io::zero_set_from_json(io::parse_json(text));
}

std::string construct(i64 u1, i64 u2, const std::string& target, i64 radius, std::uint64_t rounds,
                      i64 max_radius, bool explain) {
    const LinearForm form = validate_form(u1, u2);
    const TargetSpec spec = target.empty() ? TargetSpec::constant(Multiplicity(1))
                                           : io::target_spec_from_json(io::parse_json(target));
    const Construction c = build(form, spec, radius, rounds, max_radius);
    json j = io::to_json(c, explain);
    j["certificate"] = io::to_json(certify(c));
    return j.dump();
}

std::string explain_t(i64 u1, i64 u2, const std::vector<i64>& a_prime, i64 b, i64 t, const std::string& zero_set) {
    const LinearForm form = validate_form(u1, u2);
    const IntSet a = to_set(a_prime);
    const Augmentation aug = make_augmentation(a, b, t, form, bezout(form));
    json j = io::to_json(check_admissible(a, b, zero_set_arg(zero_set), aug, form));
    j["pair"] = {aug.pair[0], aug.pair[1]};
    return j.dump();
}

py::tuple find_t(i64 u1, i64 u2, const std::vector<i64>& a_prime, i64 b, const std::string& zero_set,
                 i64 max_radius) {
    const LinearForm form = validate_form(u1, u2);
    const TSearchResult r = find_admissible_t(to_set(a_prime), b, zero_set_arg(zero_set), form, bezout(form), max_radius);
    return py::make_tuple(r.t, py::make_tuple(r.aug.pair[0], r.aug.pair[1]));
}

}  // namespace

PYBIND11_MODULE(_repbasis, m) {
    m.doc() = "Native core for repbasis";

    py::register_exception<Error>(m, "RepbasisError", PyExc_ValueError);
    py::register_local_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const json::exception& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("seven_coefficients", [](i64 u1, i64 u2) {
        const auto c = seven_coefficients(validate_form(u1, u2));
        return std::vector<i64>(c.begin(), c.end());
    });
    m.def("bezout", [](i64 u1, i64 u2) {
        const BezoutPair p = bezout(validate_form(u1, u2));
        return py::make_tuple(p.v1, p.v2);
    });
    m.def("rep_count", [](const std::vector<i64>& a, i64 u1, i64 u2, i64 n) {
        return rep_count(to_set(a), validate_form(u1, u2), n);
    });
    m.def("rep_table", [](const std::vector<i64>& a, i64 u1, i64 u2, i64 lo, i64 hi) {
        return rep_table(to_set(a), validate_form(u1, u2), lo, hi).counts;
    });
    m.def("is_b_f_g",
          [](const std::vector<i64>& a, const std::vector<i64>& coeffs, std::uint64_t g, i64 lo, i64 hi,
             std::uint64_t cap) {
              const BfgVerdict v = is_b_f_g(to_set(a), MaryForm(coeffs), g, Window{lo, hi}, cap);
              return py::make_tuple(v.holds, v.witness ? py::cast(*v.witness) : py::none(), v.witness_count);
          });
    m.def("gadic_set", [](i64 g, i64 mm, i64 limit) { return gadic_set(GadicParams::make(g, mm), limit).values(); });
    m.def("gadic_decode", [](i64 g, i64 mm, i64 n) { return gadic_decode(GadicParams::make(g, mm), n); });
    m.def("density_profile", [](const std::string& zero_set, const std::vector<i64>& radii) {
        return io::to_json(density_profile(zero_set_arg(zero_set), radii)).dump();
    });
    m.def("construct", &construct);
    m.def("explain_t", &explain_t);
    m.def("find_t", &find_t);
}
