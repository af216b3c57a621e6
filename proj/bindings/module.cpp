#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evildet/intmat.hpp"
#include "evildet/quad.hpp"
#include "evildet/report.hpp"
#include "evildet/verify.hpp"

#include <nlohmann/json.hpp>

namespace py = pybind11;
using namespace evildet;

namespace {

py::int_ to_py(const mpz_class& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object opt_to_py(const std::optional<mpz_class>& v) {
    if (!v) return py::none();
    return to_py(*v);
}

std::vector<std::vector<long>> matrix_rows(const IntMatrix& m) {
    std::vector<std::vector<long>> rows(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = static_cast<long>(m.at(i, j).get_si());
    return rows;
}

IntMatrix matrix_from_rows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("ragged matrix");
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = static_cast<long>(rows[i][j]);
    }
    return m;
}

py::dict record_to_dict(const VerificationRecord& rec) {
    py::dict d;
    d["p"] = rec.p;
    d["residue_class_mod8"] = rec.residue_class_mod8;
    d["det_bareiss"] = to_py(rec.det_bareiss);
    d["det_modular"] = to_py(rec.det_modular);
    d["h"] = rec.h ? py::object(py::int_(*rec.h)) : py::object(py::none());
    d["eps_alpha"] = opt_to_py(rec.eps_alpha);
    d["eps_beta"] = opt_to_py(rec.eps_beta);
    d["a"] = opt_to_py(rec.a);
    d["b"] = opt_to_py(rec.b);
    py::dict checks;
    for (const auto& name : check_names())
        checks[py::str(name)] =
            to_string(rec.checks.count(name) ? rec.checks.at(name)
                                             : CheckStatus::Skipped);
    d["checks"] = checks;
    d["passed"] = rec.passed();
    return d;
}

VerifyOptions make_options(const std::string& depth, unsigned workers,
                           std::uint64_t cyclo_cap, bool continue_on_failure) {
    VerifyOptions opt;
    if (depth == "full") opt.depth = Depth::FullIdentities;
    else if (depth == "determinant-only") opt.depth = Depth::DeterminantOnly;
    else throw std::invalid_argument("depth must be 'determinant-only' or 'full'");
    opt.workers = workers;
    opt.cyclo_cap = cyclo_cap;
    opt.continue_on_failure = continue_on_failure;
    return opt;
}

ClassFilter make_filter(const std::string& cls) {
    if (cls == "1mod4") return ClassFilter::OneMod4;
    if (cls == "3mod4") return ClassFilter::ThreeMod4;
    if (cls == "both") return ClassFilter::Both;
    throw std::invalid_argument("class must be '1mod4', '3mod4' or 'both'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification of the quadratic-residue determinant theorem";

    m.def("is_prime", &is_prime, py::arg("n"));

    m.def(
        "legendre",
        [](long long a, std::uint64_t p) { return legendre(a, OddPrime(p)); },
        py::arg("a"), py::arg("p"));

    m.def(
        "chapman_matrix",
        [](std::uint64_t p) { return matrix_rows(build_chapman(OddPrime(p))); },
        py::arg("p"), "Rows of the (n+1) x (n+1) Legendre-symbol matrix");

    m.def(
        "det_bareiss",
        [](const std::vector<std::vector<long long>>& rows) {
            return to_py(det_bareiss(matrix_from_rows(rows)));
        },
        py::arg("rows"));

    m.def(
        "det_modular",
        [](const std::vector<std::vector<long long>>& rows, unsigned workers) {
            return to_py(det_modular(matrix_from_rows(rows), workers));
        },
        py::arg("rows"), py::arg("workers") = 1);

    m.def(
        "chapman_det",
        [](std::uint64_t p) {
            return to_py(det_modular(build_chapman(OddPrime(p))));
        },
        py::arg("p"));

    m.def(
        "fundamental_unit",
        [](std::uint64_t p) {
            QuadElem eps = fundamental_unit(OddPrime(p));
            return py::make_tuple(to_py(eps.alpha()), to_py(eps.beta()));
        },
        py::arg("p"), "(alpha, beta) with eps = (alpha + beta sqrt p) / 2");

    m.def(
        "class_number",
        [](std::uint64_t p) { return class_number(OddPrime(p)); }, py::arg("p"));

    m.def(
        "compute_a",
        [](std::uint64_t p) {
            PellPair ab = compute_a(OddPrime(p));
            return py::make_tuple(to_py(ab.a), to_py(ab.b));
        },
        py::arg("p"), "(a, b) with a + b sqrt p the predicted unit power");

    m.def(
        "verify_prime",
        [](std::uint64_t p, const std::string& depth, unsigned workers,
           std::uint64_t cyclo_cap) {
            return record_to_dict(verify_prime(
                OddPrime(p), make_options(depth, workers, cyclo_cap, false)));
        },
        py::arg("p"), py::arg("depth") = "determinant-only", py::arg("workers") = 1,
        py::arg("cyclo_cap") = 61);

    m.def(
        "verify_range",
        [](std::uint64_t bound, const std::string& cls, const std::string& depth,
           unsigned workers, std::uint64_t cyclo_cap, bool continue_on_failure) {
            auto records = verify_range(
                bound, make_filter(cls),
                make_options(depth, workers, cyclo_cap, continue_on_failure));
            py::list out;
            for (const auto& rec : records) out.append(record_to_dict(rec));
            return out;
        },
        py::arg("bound"), py::arg("cls") = "both",
        py::arg("depth") = "determinant-only", py::arg("workers") = 1,
        py::arg("cyclo_cap") = 61, py::arg("continue_on_failure") = false);

    m.def(
        "sequence",
        [](std::uint64_t bound) {
            py::list out;
            for (const auto& [p, d] : emit_sequence(bound))
                out.append(py::make_tuple(p, to_py(d)));
            return out;
        },
        py::arg("bound"), "(p, det C) for p == 1 (mod 4), p <= bound");

    m.def(
        "records_json",
        [](std::uint64_t bound, const std::string& cls, const std::string& depth) {
            return records_to_json(
                verify_range(bound, make_filter(cls), make_options(depth, 1, 61, false)));
        },
        py::arg("bound"), py::arg("cls") = "both",
        py::arg("depth") = "determinant-only");
}
