#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trivspec/json_io.hpp"

namespace py = pybind11;
using namespace trivspec;

// Everything crosses the boundary as JSON text; the Python package wraps it
// with json.loads / json.dumps.
namespace {

AlgebraPtr alg_of(const std::string& text) { return algebra_from_json(parse_json_text(text)); }
OperatorSpace space_of(const std::string& text) { return space_from_json(parse_json_text(text)); }
Profile profile_of(const AlgebraPtr& alg) {
  return alg->attached_profile() ? *alg->attached_profile() : standard_profile(*alg);
}

}  // namespace

PYBIND11_MODULE(_trivspec, m) {
  static py::exception<Error> exc(m, "TrivspecError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.attr("SCHEMA") = kSchema;
  m.attr("DEFAULT_BUDGET") = kDefaultBudget;
  m.def("alpha", [](std::uint64_t n, std::uint64_t d) { return alpha(n, d); });
  m.def("algebra", [](const std::string& a) { return to_json(*alg_of(a)).dump(); });
  m.def("verify_algebra", [](const std::string& a, std::uint64_t budget, std::uint64_t seed) {
    Rng rng(seed);
    return to_json(verify_division_algebra(*alg_of(a), budget, rng)).dump();
  });
  m.def("standard_profile", [](const std::string& a) { return to_json(profile_of(alg_of(a))).dump(); });
  m.def("triangular_model",
        [](const std::string& a, std::size_t n) { return to_json(construct_triangular_model(alg_of(a), n)).dump(); });
  m.def("sh", [](const std::string& a, std::size_t n) {
    AlgebraPtr alg = alg_of(a);
    return to_json(construct_SH(alg, n, profile_of(alg))).dump();
  });
  m.def("twisted_sh", [](const std::string& a, const std::string& p) {
    AlgebraPtr alg = alg_of(a);
    return to_json(twisted_SH(dmatrix_from_json(alg, parse_json_text(p), ""), profile_of(alg))).dump();
  });
  m.def("hermitian", [](const std::string& a, std::size_t n) {
    AlgebraPtr alg = alg_of(a);
    return to_json(hermitian_space(alg, n, profile_of(alg))).dump();
  });
  m.def("orthogonal_complement", [](const std::string& s) { return to_json(orthogonal_complement(space_of(s))).dump(); });
  m.def("has_trivial_spectrum", [](const std::string& s, std::uint64_t budget, std::uint64_t seed) {
    Rng rng(seed);
    return to_json(has_trivial_spectrum(space_of(s), budget, rng)).dump();
  });
  m.def("classify_optimal", [](const std::string& s, std::uint64_t budget, std::uint64_t seed) {
    Rng rng(seed);
    return to_json(classify_optimal(space_of(s), budget, rng)).dump();
  });
  m.def("is_deeply_intransitive", [](const std::string& s, std::uint64_t budget, std::uint64_t seed) {
    Rng rng(seed);
    return to_json(is_deeply_intransitive(space_of(s), budget, rng)).dump();
  });
  m.def("alternator_dim", [](const std::string& s) { return alternator_space(space_of(s)).size(); });
  m.def("detect_quadratic_type",
        [](const std::string& s, std::uint64_t budget) { return to_json(detect_quadratic_type(space_of(s), budget)).dump(); });
  m.def("generic_rank", [](const std::string& s, std::uint64_t seed) {
    Rng rng(seed);
    return to_json(poly_rank(generic_of(space_of(s)), rng)).dump();
  });
  m.def("affine_minrank", [](const std::string& a, std::size_t n, std::size_t p, std::size_t r) {
    return to_json(build_affine_minrank(alg_of(a), n, p, r)).dump();
  });
  m.def("verify_minrank", [](const std::string& aff, std::size_t r, std::uint64_t budget, std::uint64_t seed) {
    Rng rng(seed);
    return to_json(verify_minrank(affine_from_json(parse_json_text(aff)), r, budget, rng)).dump();
  });
  m.def("max_trivspec", [](const std::string& a, std::size_t n, std::uint64_t budget) {
    return to_json(exhaustive_max_trivspec(alg_of(a), n, budget)).dump();
  });
  m.def("max_diagonalisable", [](const std::string& a, std::size_t n, std::uint64_t budget) {
    return to_json(exhaustive_max_diagonalisable(alg_of(a), n, budget)).dump();
  });
  m.def("max_semisimple", [](const std::string& a, std::size_t n, std::uint64_t budget) {
    return to_json(exhaustive_max_semisimple(alg_of(a), n, budget)).dump();
  });
  m.def("random_spaces", [](const std::string& a, std::size_t rows, std::size_t cols, std::size_t count,
                            std::uint64_t seed) {
    Json out = Json::array();
    for (const auto& s : random_space_fuzzer(alg_of(a), rows, cols, count, seed)) out.push_back(to_json(s));
    return out.dump();
  });
}
