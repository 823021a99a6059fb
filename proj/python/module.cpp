#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "arfkit/document.hpp"
#include "arfkit/lattice.hpp"
#include "arfkit/quadspace.hpp"
#include "arfkit/rochlin.hpp"
#include "arfkit/seifert.hpp"

namespace py = pybind11;
using namespace arfkit;

namespace {

BigInt to_bigint(py::handle h) {
    if (!py::isinstance<py::int_>(h)) throw py::type_error("matrix entries must be ints");
    return BigInt(py::str(h).cast<std::string>());
}

py::object from_bigint(const BigInt& v) {
    std::string s = v.str();
    PyObject* p = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!p) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

IntMatrix to_int_matrix(py::sequence rows) {
    std::vector<std::vector<BigInt>> out;
    for (py::handle row : rows) {
        std::vector<BigInt> r;
        for (py::handle e : py::cast<py::sequence>(row)) r.push_back(to_bigint(e));
        out.push_back(std::move(r));
    }
    return IntMatrix::from_rows(out);
}

F2Matrix to_f2_matrix(py::sequence rows) {
    std::vector<std::vector<int>> out;
    for (py::handle row : rows) {
        std::vector<int> r;
        for (py::handle e : py::cast<py::sequence>(row)) {
            long v = py::cast<long>(e);
            if (v != 0 && v != 1) throw py::value_error("mod-2 matrix entries must be 0 or 1");
            r.push_back(static_cast<int>(v));
        }
        out.push_back(std::move(r));
    }
    return F2Matrix::from_rows(out);
}

std::vector<std::uint8_t> to_bytes(py::sequence xs, int max_value) {
    std::vector<std::uint8_t> out;
    for (py::handle e : xs) {
        long v = py::cast<long>(e);
        if (v < 0 || v > max_value) throw py::value_error("value list entry out of range");
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

py::object arf_to_py(ArfValue a) {
    if (!arf_is_finite(a)) return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(arf_bit(a));
}

py::object brown_to_py(const BrownValue& b) {
    if (!b.is_finite()) return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(b.value());
}

ArfValue arf_from_py(py::handle h) {
    if (py::isinstance<py::float_>(h)) {
        double v = py::cast<double>(h);
        if (std::isinf(v) && v > 0) return ArfValue::infinity;
        throw py::value_error("Arf value must be 0, 1, or float('inf')");
    }
    long v = py::cast<long>(h);
    if (v != 0 && v != 1) throw py::value_error("Arf value must be 0, 1, or float('inf')");
    return arf_from_bit(static_cast<int>(v));
}

BrownValue brown_from_py(py::handle h) {
    if (py::isinstance<py::float_>(h)) {
        double v = py::cast<double>(h);
        if (std::isinf(v) && v > 0) return BrownValue::infinity();
        throw py::value_error("Brown value must be an integer mod 8 or float('inf')");
    }
    return BrownValue::finite(static_cast<int>(py::cast<long>(h)));
}

SeifertData seifert_from_py(py::sequence matrix, int components, py::object linking) {
    std::optional<IntMatrix> lk;
    if (!linking.is_none()) lk = to_int_matrix(py::cast<py::sequence>(linking));
    return SeifertData(to_int_matrix(matrix), components, std::move(lk));
}

py::dict residual_to_py(const Residual& r) {
    py::dict d;
    d["residual"] = r.value;
    d["modulus"] = r.modulus;
    d["holds"] = r.holds;
    return d;
}

py::dict scenario_to_py(const RelativeScenario& s) {
    py::dict d;
    d["family"] = s.family == ScenarioFamily::orientable ? "orientable" : "nonorientable";
    d["sigma_x"] = s.sigma_x;
    d["f_square"] = s.f_square;
    if (s.family == ScenarioFamily::orientable) {
        d["arf_f"] = arf_to_py(s.arf_f);
        d["arf_boundary"] = arf_to_py(s.arf_boundary);
    } else {
        d["beta_f"] = brown_to_py(s.beta_f);
        d["beta_boundary"] = brown_to_py(s.beta_boundary);
    }
    d["mu_boundary"] = s.mu_boundary;
    d["ks"] = s.ks;
    return d;
}

RelativeScenario scenario_from_py(py::dict d) {
    RelativeScenario s;
    std::string family = py::cast<std::string>(d["family"]);
    if (family == "orientable")
        s.family = ScenarioFamily::orientable;
    else if (family == "nonorientable")
        s.family = ScenarioFamily::nonorientable;
    else
        throw py::value_error("family must be \"orientable\" or \"nonorientable\"");
    s.sigma_x = py::cast<long long>(d["sigma_x"]);
    s.f_square = py::cast<long long>(d["f_square"]);
    s.beta_f = BrownValue::finite(0);
    s.beta_boundary = BrownValue::finite(0);
    if (s.family == ScenarioFamily::orientable) {
        if (d.contains("arf_f")) s.arf_f = arf_from_py(d["arf_f"]);
        if (d.contains("arf_boundary")) s.arf_boundary = arf_from_py(d["arf_boundary"]);
    } else {
        if (d.contains("beta_f")) s.beta_f = brown_from_py(d["beta_f"]);
        if (d.contains("beta_boundary")) s.beta_boundary = brown_from_py(d["beta_boundary"]);
    }
    if (d.contains("mu_boundary")) s.mu_boundary = py::cast<int>(d["mu_boundary"]);
    if (d.contains("ks")) s.ks = py::cast<int>(d["ks"]);
    return s;
}

} // namespace

PYBIND11_MODULE(_arfkit, m) {
    m.doc() = "Exact Arf, Brown, and Rochlin invariant computations";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    m.def(
        "arf_of_seifert",
        [](py::sequence matrix, int components, py::object linking) {
            return arf_to_py(arf_of_link(seifert_from_py(matrix, components, linking)));
        },
        py::arg("matrix"), py::arg("components") = 1, py::arg("linking") = py::none(),
        "Arf invariant of the link presented by a Seifert matrix; float('inf') when improper.");

    m.def(
        "classify_quadratic",
        [](py::sequence gram, py::sequence qvals) {
            QuadClass c = classify(QuadraticSpace(to_f2_matrix(gram), to_bytes(qvals, 1)));
            return py::make_tuple(c.dim, c.rad_dim, arf_to_py(c.arf));
        },
        py::arg("gram"), py::arg("qvals"),
        "Isomorphism class (dim, radical_dim, arf) of a mod-2 quadratic space.");

    m.def(
        "brown_of_enhanced",
        [](py::sequence gram, py::sequence evals) {
            return brown_to_py(brown_gauss(EnhancedSpace(to_f2_matrix(gram), to_bytes(evals, 3))));
        },
        py::arg("gram"), py::arg("evals"),
        "Brown invariant mod 8 of a Z/4-enhanced space; float('inf') when improper.");

    m.def(
        "beta_of_surface",
        [](py::sequence gram, py::sequence evals, py::int_ boundary_framing_sum) {
            SurfaceData surf(to_f2_matrix(gram), to_bytes(evals, 3),
                             to_bigint(boundary_framing_sum));
            return brown_to_py(beta_of_link(surf));
        },
        py::arg("gram"), py::arg("evals"), py::arg("boundary_framing_sum"),
        "Brown invariant of the boundary link of a spanning surface.");

    m.def(
        "arf_beta_relation_check",
        [](py::sequence matrix, int components, py::object linking, py::sequence gram,
           py::sequence evals, py::int_ boundary_framing_sum) {
            SeifertData sd = seifert_from_py(matrix, components, linking);
            SurfaceData surf(to_f2_matrix(gram), to_bytes(evals, 3),
                             to_bigint(boundary_framing_sum));
            return arf_beta_relation_check(sd, surf);
        },
        py::arg("matrix"), py::arg("components"), py::arg("linking"), py::arg("gram"),
        py::arg("evals"), py::arg("boundary_framing_sum"),
        "Checks beta(L) = 4*Arf(L) + lk(L) mod 8 for matching link presentations.");

    m.def(
        "signature",
        [](py::sequence matrix) { return signature(IntLattice(to_int_matrix(matrix))); },
        py::arg("matrix"), "Signature of a nondegenerate symmetric integer form.");

    m.def(
        "is_unimodular",
        [](py::sequence matrix) { return is_unimodular(IntLattice(to_int_matrix(matrix))); },
        py::arg("matrix"));

    m.def(
        "is_even", [](py::sequence matrix) { return is_even(IntLattice(to_int_matrix(matrix))); },
        py::arg("matrix"));

    m.def(
        "characteristic_vector",
        [](py::sequence matrix) {
            IntLattice l(to_int_matrix(matrix));
            CharVector xi = characteristic_vector(l);
            py::list out;
            for (auto b : xi.xi) out.append(static_cast<int>(b));
            return out;
        },
        py::arg("matrix"), "A 0/1 characteristic vector of a unimodular form.");

    m.def(
        "van_der_blij_holds",
        [](py::sequence matrix) {
            IntLattice l(to_int_matrix(matrix));
            return check_van_der_blij(l, characteristic_vector(l));
        },
        py::arg("matrix"), "Checks xi.xi = signature mod 8 for a characteristic vector.");

    m.def(
        "mu_from_presentation",
        [](py::sequence matrix) {
            return mu_from_presentation(EvenPresentation(IntLattice(to_int_matrix(matrix))));
        },
        py::arg("matrix"), "Rochlin invariant signature/8 mod 2 of an even unimodular form.");

    m.def(
        "mu_from_surgery",
        [](py::sequence matrix, long long alpha) {
            return mu_from_surgery(SeifertData(to_int_matrix(matrix), 1), alpha);
        },
        py::arg("matrix"), py::arg("alpha"),
        "Rochlin invariant of alpha-surgery on the knot with this Seifert matrix.");

    m.def(
        "verify_closed",
        [](long long sigma, long long xi_square, py::handle arf, int ks) {
            return residual_to_py(verify_closed(sigma, xi_square, arf_from_py(arf), ks));
        },
        py::arg("sigma"), py::arg("xi_square"), py::arg("arf"), py::arg("ks"),
        "Closed-case congruence Arf = KS + (sigma - xi^2)/8 mod 2.");

    m.def(
        "verify_relative",
        [](py::dict scenario) { return residual_to_py(verify_relative(scenario_from_py(scenario))); },
        py::arg("scenario"), "Relative congruence for an orientable or nonorientable scenario.");

    m.def(
        "build_surgery_scenario",
        [](py::sequence matrix, long long alpha) {
            return scenario_to_py(build_surgery_scenario(SeifertData(to_int_matrix(matrix), 1), alpha));
        },
        py::arg("matrix"), py::arg("alpha"),
        "The surgery-trace scenario for a knot with framing alpha in {-1, +1}.");
}
