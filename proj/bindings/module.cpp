#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsums/expressions.hpp"
#include "qsums/harness.hpp"
#include "qsums/oracles.hpp"
#include "qsums/qcore.hpp"
#include "qsums/qfamilies.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace qsums;

namespace {

py::object big_to_pyint(const BigInt& v) {
    PyObject* obj = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

BigInt pyint_to_big(const py::object& v) {
    return BigInt(py::str(v).cast<std::string>());
}

LaurentPoly poly_from_coeffs(long min_exp, const py::sequence& coeffs) {
    std::vector<BigInt> cs;
    cs.reserve(py::len(coeffs));
    for (const auto& c : coeffs) cs.push_back(pyint_to_big(py::reinterpret_borrow<py::object>(c)));
    return LaurentPoly(min_exp, std::move(cs));
}

py::list poly_coeffs(const LaurentPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(big_to_pyint(c));
    return out;
}

// Division verdicts cross the boundary as LaurentPoly | DivisionFailure.
py::object division_result(ExactDivision d) {
    if (d.ok()) return py::cast(d.quotient());
    return py::cast(d.failure());
}

ParamTuple params_from_kwargs(const std::vector<long>& ns, long r, long j,
                              std::optional<long> s, std::optional<long> t,
                              std::optional<long> a) {
    ParamTuple p;
    p.ns = ns;
    p.r = r;
    p.j = j;
    p.s = s;
    p.t = t;
    p.a = a;
    return p;
}

}  // namespace

PYBIND11_MODULE(_qsums, m) {
    m.doc() = "Exact q-binomial sum arithmetic and divisibility verification";
    m.attr("__version__") = kToolVersion;

    py::class_<LaurentPoly>(m, "LaurentPoly")
        .def(py::init<>())
        .def(py::init(&poly_from_coeffs), py::arg("min_exp"), py::arg("coeffs"))
        .def_static(
            "monomial",
            [](const py::object& c, long e) {
                return LaurentPoly::monomial(pyint_to_big(c), e);
            },
            py::arg("c"), py::arg("e"))
        .def_property_readonly("min_exp", &LaurentPoly::min_exp)
        .def_property_readonly("coeffs", &poly_coeffs)
        .def("is_zero", &LaurentPoly::is_zero)
        .def("degree", &LaurentPoly::degree)
        .def("low_exp", &LaurentPoly::low_exp)
        .def("is_polynomial", &LaurentPoly::is_polynomial)
        .def("has_nonneg_coeffs", &LaurentPoly::has_nonneg_coeffs)
        .def("eval_at_one",
             [](const LaurentPoly& p) { return big_to_pyint(p.eval_at_one()); })
        .def("subst_q_inverse", &LaurentPoly::subst_q_inverse)
        .def("shifted", &LaurentPoly::shifted, py::arg("e"))
        .def("coeff",
             [](const LaurentPoly& p, long e) { return big_to_pyint(p.coeff(e)); },
             py::arg("e"))
        .def("__add__", [](const LaurentPoly& a, const LaurentPoly& b) { return a + b; })
        .def("__sub__", [](const LaurentPoly& a, const LaurentPoly& b) { return a - b; })
        .def("__mul__", [](const LaurentPoly& a, const LaurentPoly& b) { return a * b; })
        .def("__neg__", [](const LaurentPoly& a) { return -a; })
        .def("__pow__", [](const LaurentPoly& a, long k) { return a.pow(k); })
        .def("__eq__", [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; })
        .def("__str__", &LaurentPoly::to_string)
        .def("__repr__", [](const LaurentPoly& p) {
            return "LaurentPoly(" + p.to_string() + ")";
        });

    py::class_<DivisionFailure>(m, "DivisionFailure")
        .def_property_readonly("kind",
                               [](const DivisionFailure& f) {
                                   return f.kind ==
                                                  DivisionFailure::Kind::NonIntegerStep
                                              ? "non_integer_step"
                                              : "nonzero_remainder";
                               })
        .def_readonly("remainder", &DivisionFailure::remainder)
        .def("__repr__", [](const DivisionFailure& f) {
            return "DivisionFailure(" + f.describe() + ")";
        });

    py::class_<CyclotomicFactorization>(m, "CyclotomicFactorization")
        .def_property_readonly("factors", &CyclotomicFactorization::factors)
        .def("expand", &CyclotomicFactorization::expand)
        .def("__eq__", [](const CyclotomicFactorization& a,
                          const CyclotomicFactorization& b) { return a == b; })
        .def("__str__", &CyclotomicFactorization::to_string)
        .def("__repr__", [](const CyclotomicFactorization& f) {
            return "CyclotomicFactorization(" + f.to_string() + ")";
        });

    m.def("exact_div",
          [](const LaurentPoly& num, const LaurentPoly& den) {
              return division_result(exact_div(num, den));
          },
          py::arg("num"), py::arg("den"));

    m.def("q_int", &q_int, py::arg("n"));
    m.def("q_pochhammer", &q_pochhammer, py::arg("n"));
    m.def("q_factorial", &q_factorial, py::arg("n"));
    m.def("q_binomial", &q_binomial, py::arg("n"), py::arg("k"));
    m.def("cyclotomic", &cyclotomic, py::arg("d"));
    m.def("q_binomial_cyclotomic", &q_binomial_cyclotomic, py::arg("m"), py::arg("k"));
    m.def("q_int_factorization", &q_int_factorization, py::arg("n"));
    m.def("q_gcd", &q_gcd, py::arg("a"), py::arg("b"));

    m.def("catalan_triangle", &catalan_triangle, py::arg("n"), py::arg("k"));
    m.def("q_catalan", &q_catalan, py::arg("n"));
    m.def("q_narayana", &q_narayana, py::arg("n"), py::arg("k"));
    m.def("q_super_catalan", &q_super_catalan, py::arg("m"), py::arg("n"));

    m.def("sum_S_r", &sum_S_r, py::arg("n"), py::arg("r"));
    m.def("sum_T_r", &sum_T_r, py::arg("n"), py::arg("r"));
    m.def("product_C",
          [](const std::vector<long>& as, long k) { return product_C(as, k); },
          py::arg("as_"), py::arg("k"));

    m.def("thm_1_1",
          [](long n, long r, long j) { return division_result(thm_1_1(n, r, j)); },
          py::arg("n"), py::arg("r"), py::arg("j"));
    m.def("thm_1_2",
          [](const std::vector<long>& ns, long r, long j) {
              return division_result(thm_1_2(ns, r, j));
          },
          py::arg("ns"), py::arg("r"), py::arg("j"));
    m.def("thm_1_3",
          [](long n, long r, long s, long j) {
              return division_result(thm_1_3(n, r, s, j));
          },
          py::arg("n"), py::arg("r"), py::arg("s"), py::arg("j"));
    m.def("thm_5_4",
          [](const std::vector<long>& ns, long r, long j) {
              return division_result(thm_5_4(ns, r, j));
          },
          py::arg("ns"), py::arg("r"), py::arg("j"));
    m.def("cor_5_1",
          [](long mm, long n, long r, long a, long j) {
              return division_result(cor_5_1(mm, n, r, a, j));
          },
          py::arg("m"), py::arg("n"), py::arg("r"), py::arg("a"), py::arg("j"));
    m.def("cor_5_2",
          [](long l, long mm, long n, long r, long a, long j) {
              return division_result(cor_5_2(l, mm, n, r, a, j));
          },
          py::arg("l"), py::arg("m"), py::arg("n"), py::arg("r"), py::arg("a"),
          py::arg("j"));
    m.def("cor_5_3",
          [](long n, long r, long s, long a, long j) {
              return division_result(cor_5_3(n, r, s, a, j));
          },
          py::arg("n"), py::arg("r"), py::arg("s"), py::arg("a"), py::arg("j"));
    m.def("cor_5_5",
          [](long mm, long n, long r, long s, long a, long j) {
              return division_result(cor_5_5(mm, n, r, s, a, j));
          },
          py::arg("m"), py::arg("n"), py::arg("r"), py::arg("s"), py::arg("a"),
          py::arg("j"));
    m.def("cor_5_5_narayana",
          [](long n, long r, long a, long j) {
              return division_result(cor_5_5_narayana(n, r, a, j));
          },
          py::arg("n"), py::arg("r"), py::arg("a"), py::arg("j"));
    m.def("cong_5_2",
          [](long n, long r, long j) { return division_result(cong_5_2(n, r, j)); },
          py::arg("n"), py::arg("r"), py::arg("j"));

    py::class_<ClaimVerdict>(m, "ClaimVerdict")
        .def_readonly("integral", &ClaimVerdict::integral)
        .def_readonly("nonneg", &ClaimVerdict::nonneg)
        .def_readonly("polynomial", &ClaimVerdict::polynomial)
        .def_readonly("quotient", &ClaimVerdict::quotient)
        .def_readonly("failure", &ClaimVerdict::failure)
        .def("__repr__", [](const ClaimVerdict& v) {
            return std::string("ClaimVerdict(integral=") +
                   (v.integral ? "True" : "False") + ")";
        });

    m.def("conj_6_1", &conj_6_1, py::arg("m"), py::arg("n"), py::arg("r"),
          py::arg("s"), py::arg("t"), py::arg("j"));
    m.def("conj_6_2", &conj_6_2, py::arg("n"), py::arg("r"), py::arg("a"),
          py::arg("j"));
    m.def("conj_6_3",
          [](const std::vector<long>& ns, long r, long j) {
              return conj_6_3(ns, r, j);
          },
          py::arg("ns"), py::arg("r"), py::arg("j"));
    m.def("conj_6_4",
          [](const std::vector<long>& ns, long r, long j) {
              return conj_6_4(ns, r, j);
          },
          py::arg("ns"), py::arg("r"), py::arg("j"));

    m.def("evaluate_claim",
          [](const std::string& claim, const std::vector<long>& ns, long r,
             long j, std::optional<long> s, std::optional<long> t,
             std::optional<long> a) {
              auto id = claim_from_name(claim);
              if (!id) throw py::value_error("unknown claim: " + claim);
              return evaluate_claim(*id, params_from_kwargs(ns, r, j, s, t, a));
          },
          py::arg("claim"), py::arg("ns"), py::arg("r") = 0, py::arg("j") = 0,
          py::arg("s") = std::nullopt, py::arg("t") = std::nullopt,
          py::arg("a") = std::nullopt);

    m.def("list_claims", [] {
        py::list out;
        for (const auto& info : all_claims()) {
            py::dict d;
            d["name"] = info.name;
            d["reference"] = info.reference;
            d["shape"] = info.shape;
            d["statement"] = info.statement;
            d["conjecture"] = info.conjecture;
            out.append(d);
        }
        return out;
    });

    m.def("list_oracles", [] {
        py::list out;
        for (const auto& info : all_oracles()) {
            py::dict d;
            d["name"] = info.name;
            d["description"] = info.description;
            out.append(d);
        }
        return out;
    });

    m.def(
        "run_sweep",
        [](const std::vector<std::string>& claims, long n_max, long m_max,
           long r_max, long s_max, long t_max, long a_max,
           std::optional<std::pair<long, long>> j_window, unsigned workers,
           std::optional<std::size_t> limit, bool deterministic,
           const std::string& format) {
            std::vector<ClaimId> ids;
            for (const auto& name : claims) {
                auto id = claim_from_name(name);
                if (!id) throw py::value_error("unknown claim: " + name);
                ids.push_back(*id);
            }
            SweepRanges g;
            g.n_max = n_max;
            g.m_max = m_max;
            g.r_max = r_max;
            g.s_max = s_max;
            g.t_max = t_max;
            g.a_max = a_max;
            if (j_window) g.j_window = JWindow::fixed(j_window->first, j_window->second);
            g.limit = limit;
            Report rep;
            {
                py::gil_scoped_release release;
                rep = run_sweep(ids, g, workers);
            }
            return report_to_string(
                rep, format == "csv" ? Format::Csv : Format::Json, deterministic);
        },
        py::arg("claims"), py::arg("n_max") = 4, py::arg("m_max") = 3,
        py::arg("r_max") = 2, py::arg("s_max") = 2, py::arg("t_max") = 2,
        py::arg("a_max") = 2, py::arg("j_window") = std::nullopt,
        py::arg("workers") = 4, py::arg("limit") = std::nullopt,
        py::arg("deterministic") = true, py::arg("format") = "json");

    m.def(
        "run_oracles",
        [](const std::vector<std::string>& which, unsigned workers,
           bool deterministic, const std::string& format) {
            std::vector<OracleKind> kinds;
            if (which.empty()) {
                for (const auto& info : all_oracles()) kinds.push_back(info.kind);
            } else {
                for (const auto& name : which) {
                    auto kind = oracle_from_name(name);
                    if (!kind) throw py::value_error("unknown oracle: " + name);
                    kinds.push_back(*kind);
                }
            }
            OracleRanges g;
            Report rep;
            {
                py::gil_scoped_release release;
                rep = run_oracles(kinds, g, workers);
            }
            return report_to_string(
                rep, format == "csv" ? Format::Csv : Format::Json, deterministic);
        },
        py::arg("which") = std::vector<std::string>{}, py::arg("workers") = 4,
        py::arg("deterministic") = true, py::arg("format") = "json");
}
