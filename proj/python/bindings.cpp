#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qchar/characters.hpp"
#include "qchar/decomp.hpp"
#include "qchar/errors.hpp"
#include "qchar/io.hpp"
#include "qchar/quiver_a.hpp"
#include "qchar/qstrings.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using Zeros = std::map<int, int>;
using Term = std::pair<std::map<int, int>, qchar::Coeff>;

qchar::DrinfeldData drinfeld(const Zeros& zeros) { return qchar::DrinfeldData(zeros); }

// Terms in canonical order as (exponent -> power, coefficient).
std::vector<Term> terms(const qchar::LaurentPoly& p) {
  std::vector<Term> out;
  for (const auto& [m, c] : p.terms()) {
    out.emplace_back(std::map<int, int>(m.factors().begin(), m.factors().end()), c);
  }
  return out;
}

std::vector<qchar::Coeff> coeffs(const qchar::TPoly& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

std::vector<std::tuple<int, int, int>> parts(const qchar::StringDecomposition& d) {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& [s, c] : d.parts()) out.emplace_back(s.base, s.len, c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_qchar, m) {
  m.doc() = "q-characters and decomposition numbers for quantum affine sl2";

  auto base = py::register_exception<qchar::Error>(m, "QcharError", PyExc_RuntimeError);
  py::register_exception<qchar::DomainError>(m, "DomainError", base.ptr());
  py::register_exception<qchar::OverflowError>(m, "OverflowError", base.ptr());
  py::register_exception<qchar::InvariantError>(m, "InvariantError", base.ptr());
  py::register_exception<qchar::ParseError>(m, "ParseError", base.ptr());

  m.def("parse_drinfeld",
        [](const std::string& text) { return qchar::io::parse_drinfeld(text).mult(); }, "text"_a);

  m.def("gauss_binom_t", [](int a, int n) { return coeffs(qchar::gauss_binom_t(a, n)); }, "a"_a,
        "n"_a);

  m.def("kr_character", [](int n, int k) { return terms(qchar::kr_character(n, k)); }, "n"_a,
        "k"_a = 0);
  m.def("t_system_holds", &qchar::t_system_holds, "n"_a, "k"_a = 0);
  m.def("simple_character",
        [](const Zeros& z) { return terms(qchar::simple_character(drinfeld(z))); }, "zeros"_a);
  m.def("standard_character",
        [](const Zeros& z) { return terms(qchar::standard_character(drinfeld(z))); }, "zeros"_a);
  m.def("standard_character_geometric",
        [](const Zeros& z) { return terms(qchar::standard_character_geometric(drinfeld(z))); },
        "zeros"_a);
  m.def("standard_ordering", [](const Zeros& z) { return qchar::standard_ordering(drinfeld(z)); },
        "zeros"_a);
  m.def("character_dimension",
        [](const std::vector<Term>& ts) {
          qchar::Coeff sum = 0;
          for (const auto& t : ts) sum = qchar::checked_add(sum, t.second);
          return sum;
        },
        "terms"_a);

  m.def("decompose", [](const Zeros& z) { return parts(qchar::decompose(drinfeld(z))); },
        "zeros"_a);
  m.def("decompose_bruteforce",
        [](const Zeros& z, int cap) { return parts(qchar::decompose_bruteforce(drinfeld(z), cap)); },
        "zeros"_a, "cap"_a = qchar::kDefaultBruteforceCap);
  m.def("in_general_position",
        [](int n, int x, int len, int y) {
          return qchar::in_general_position({n, x}, {len, y});
        },
        "len1"_a, "base1"_a, "len2"_a, "base2"_a);

  m.def("rigid_decomposition", [](const std::vector<int>& d) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [u, c] : qchar::rigid_decomposition(d)) out[{u.i, u.j}] = c;
    return out;
  }, "d"_a);

  m.def("stratum", [](std::vector<int> w, std::vector<int> r) {
    const qchar::ComplexStratum s(std::move(w), std::move(r));
    py::dict out;
    out["w"] = s.w();
    out["r"] = s.r();
    out["h"] = s.h();
    out["omega"] = std::vector<int>(s.omega().begin(), s.omega().end());
    out["sparse"] = qchar::is_sparse(s);
    out["orbit_dim"] = qchar::orbit_dim(s);
    return out;
  }, "w"_a, "r"_a);

  m.def("rank_tuple", [](const Zeros& pi, const Zeros& pitilde) -> std::optional<std::vector<int>> {
    const auto q = qchar::MultiplicityQuery::align(drinfeld(pi), drinfeld(pitilde));
    if (!q) return std::nullopt;
    return qchar::rank_tuple(*q);
  }, "pi"_a, "pitilde"_a);
  m.def("multiplicity_closed",
        [](const Zeros& pi, const Zeros& pitilde) {
          return qchar::multiplicity_closed(drinfeld(pi), drinfeld(pitilde)).value;
        },
        "pi"_a, "pitilde"_a);
  m.def("multiplicity_oracle",
        [](const Zeros& pi, const Zeros& pitilde, int cap) {
          return qchar::multiplicity_oracle(drinfeld(pi), drinfeld(pitilde), {cap});
        },
        "pi"_a, "pitilde"_a, "cap"_a = 10);
  m.def("decomposition_row",
        [](const Zeros& pi, int cap, bool reverse_ties) {
          const auto tie = reverse_ties ? qchar::TieBreak::kLexLargest : qchar::TieBreak::kLexSmallest;
          std::vector<std::pair<Zeros, qchar::Coeff>> out;
          for (const auto& [dd, mult] : qchar::decomposition_row(drinfeld(pi), {cap, tie})) {
            out.emplace_back(dd.mult(), mult);
          }
          return out;
        },
        "pi"_a, "cap"_a = 10, "reverse_ties"_a = false);
  m.def("ic_stalk_poly",
        [](std::vector<int> w, std::vector<int> r, std::vector<int> k) {
          return coeffs(qchar::ic_stalk_poly({qchar::ComplexStratum(std::move(w), std::move(r)),
                                              std::move(k)}));
        },
        "w"_a, "r"_a, "k"_a);

  m.def("row_json", [](const Zeros& pi, int cap) {
    return qchar::io::to_json(qchar::decomposition_row(drinfeld(pi), {cap})).dump();
  }, "pi"_a, "cap"_a = 10);
}
