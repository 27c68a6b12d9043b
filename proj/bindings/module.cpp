#include <pybind11/pybind11.h>

#include <string>

#include <json.hpp>

#include "latframe/criterion.hpp"
#include "latframe/errors.hpp"
#include "latframe/invariants.hpp"
#include "latframe/lattice.hpp"
#include "latframe/report.hpp"
#include "latframe/skew_normal_form.hpp"
#include "latframe/smith.hpp"
#include "latframe/version.hpp"

namespace py = pybind11;

namespace {

using namespace latframe;

py::object int_to_py(const Integer& x) {
    PyObject* p = PyLong_FromString(x.get_str().c_str(), nullptr, 10);
    if (!p) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(p);
}

Rational rational_from_py(py::handle obj) {
    if (py::isinstance<py::str>(obj)) {
        return parse_rational(obj.cast<std::string>());
    }
    if (py::isinstance<py::bool_>(obj)) {
        throw InvalidInput("matrix entries must be integers, strings or fractions");
    }
    if (py::isinstance<py::int_>(obj)) {
        return Rational(Integer(py::str(obj).cast<std::string>()));
    }
    // covers fractions.Fraction (and anything else with exact parts)
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        const Integer num(py::str(obj.attr("numerator")).cast<std::string>());
        const Integer den(py::str(obj.attr("denominator")).cast<std::string>());
        return make_rational(num, den);
    }
    throw InvalidInput("cannot interpret matrix entry as an exact rational");
}

RatMatrix rat_matrix_from_py(py::handle obj) {
    const py::sequence rows = py::reinterpret_borrow<py::sequence>(obj);
    const std::size_t row_count = rows.size();
    if (row_count == 0) {
        throw ParseError("matrix has no rows");
    }
    const std::size_t col_count = py::reinterpret_borrow<py::sequence>(rows[0]).size();
    RatMatrix m(row_count, col_count);
    for (std::size_t i = 0; i < row_count; ++i) {
        const py::sequence row = py::reinterpret_borrow<py::sequence>(rows[i]);
        if (row.size() != col_count) {
            throw DimensionError("matrix rows have inconsistent lengths");
        }
        for (std::size_t j = 0; j < col_count; ++j) m(i, j) = rational_from_py(row[j]);
    }
    return m;
}

IntMatrix int_matrix_from_py(py::handle obj) {
    return to_integer(rat_matrix_from_py(obj));
}

py::list int_matrix_to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(int_to_py(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::null:
            return py::none();
        case nlohmann::ordered_json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::ordered_json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::ordered_json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::ordered_json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::ordered_json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::ordered_json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out[py::str(it.key())] = json_to_py(it.value());
            }
            return out;
        }
        default:
            return py::none();
    }
}

Lattice lattice_from_py(py::handle matrix, py::handle d, bool nonrational) {
    std::optional<std::size_t> expect_d;
    if (!d.is_none()) {
        const long long value = d.cast<long long>();
        if (value < 1) {
            throw ParseError("d must be a positive integer");
        }
        expect_d = static_cast<std::size_t>(value);
    }
    if (py::isinstance<py::str>(matrix)) {
        const Lattice parsed = parse_lattice_inline(matrix.cast<std::string>(), expect_d);
        return Lattice(parsed.generator(), nonrational);
    }
    RatMatrix m = rat_matrix_from_py(matrix);
    if (expect_d && m.rows() != 2 * *expect_d) {
        throw DimensionError("matrix size does not match d");
    }
    return Lattice(std::move(m), nonrational);
}

py::dict py_analyze(py::object matrix, py::object d, bool nonrational, bool oracle) {
    const AnalysisReport report = analyze(lattice_from_py(matrix, d, nonrational), oracle);
    return json_to_py(report_to_json(report));
}

std::string py_analyze_json(const std::string& document, bool oracle) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return report_to_json(analyze(parse_lattice_json(doc), oracle)).dump(2);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact frame-theoretic invariants of time-frequency lattices";
    m.attr("__version__") = LATFRAME_VERSION;

    py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<SelfCheckFailure>(m, "SelfCheckError", PyExc_RuntimeError);

    m.def("analyze", &py_analyze, py::arg("matrix"), py::arg("d") = py::none(),
          py::arg("nonrational") = false, py::arg("oracle") = false,
          "Full analysis of a lattice generator. The matrix is either an\n"
          "inline string ('1,0;0,1/2') or a sequence of rows whose entries\n"
          "are ints, 'p/q' strings or fractions. Returns the report as a\n"
          "dict with the same keys as the CLI's JSON output.");

    m.def("analyze_json", &py_analyze_json, py::arg("document"), py::arg("oracle") = false,
          "Analyze a JSON lattice document {d, matrix, nonrational?} and\n"
          "return the serialized report, byte-identical to the CLI.");

    m.def(
        "det", [](py::object matrix) { return to_string(det(rat_matrix_from_py(matrix))); },
        py::arg("matrix"), "Exact determinant as a canonical 'p/q' string.");

    m.def(
        "covolume",
        [](py::object matrix) { return to_string(covolume(Lattice(rat_matrix_from_py(matrix)))); },
        py::arg("matrix"), "Absolute determinant of a lattice generator.");

    m.def(
        "order",
        [](py::object matrix) {
            return int_to_py(order(SkewMatrix(rat_matrix_from_py(matrix))));
        },
        py::arg("matrix"),
        "Least positive integer r making the skew-symmetric matrix integral.");

    m.def(
        "smith_normal_form",
        [](py::object matrix) {
            const SmithNormalForm f = smith_normal_form(int_matrix_from_py(matrix));
            return py::make_tuple(int_matrix_to_py(f.u), int_matrix_to_py(f.s),
                                  int_matrix_to_py(f.v));
        },
        py::arg("matrix"), "Returns (U, S, V) with S == U @ N @ V diagonal.");

    m.def(
        "skew_normal_form",
        [](py::object matrix) {
            const SkewNormalFormResult res = skew_normal_form(int_matrix_from_py(matrix));
            py::list h;
            for (const Integer& x : res.h) h.append(int_to_py(x));
            return py::make_tuple(h, int_matrix_to_py(res.transform));
        },
        py::arg("matrix"),
        "Returns (h, R) with R^t N R in the block form [[0, B], [-B, 0]],\n"
        "B = diag(h), h[i] | h[i+1].");

    m.def(
        "standard_symplectic",
        [](std::size_t d) { return int_matrix_to_py(standard_symplectic(d)); }, py::arg("d"),
        "The 2d x 2d matrix [[0, I], [-I, 0]].");

    m.def(
        "symplectic_pairing",
        [](py::object z, py::object w) {
            const py::sequence zs = py::reinterpret_borrow<py::sequence>(z);
            const py::sequence ws = py::reinterpret_borrow<py::sequence>(w);
            RatVector zv, wv;
            for (py::handle item : zs) zv.push_back(rational_from_py(item));
            for (py::handle item : ws) wv.push_back(rational_from_py(item));
            return to_string(symplectic_pairing(zv, wv));
        },
        py::arg("z"), py::arg("w"), "<z, J w> as a canonical 'p/q' string.");
}
