#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "scn/asymptotic.hpp"
#include "scn/empirical.hpp"
#include "scn/ensemble.hpp"
#include "scn/exact_dist.hpp"
#include "scn/gamma.hpp"
#include "scn/quadrature.hpp"
#include "scn/rng.hpp"
#include "scn/special_functions.hpp"

namespace py = pybind11;

namespace {

scn::Statistic parse_statistic(const std::string& name) {
    if (name == "kappa_sq") return scn::Statistic::kappa_sq;
    if (name == "min_eig") return scn::Statistic::min_eig;
    if (name == "trace_over_nsq") return scn::Statistic::trace_over_nsq;
    throw std::invalid_argument(
        "statistic must be kappa_sq, min_eig, or trace_over_nsq");
}

scn::ExactPdfParams make_params(int n, int alpha, double eta) {
    return {{n, alpha}, {eta}};
}

}  // namespace

PYBIND11_MODULE(_scndist, m) {
    m.doc() =
        "Distributions of the squared scaled condition number and the "
        "minimum eigenvalue of single-spiked complex Wishart matrices";

    // --- exact finite-size laws ---
    m.def("pdf_kappa_sq",
          py::vectorize([](double z, int n, int alpha, double eta) {
              return scn::pdf_kappa_sq(z, make_params(n, alpha, eta));
          }),
          py::arg("z"), py::arg("n"), py::arg("alpha"), py::arg("eta") = 0.0,
          "Exact density of kappa_SC^2 at z (zero for z <= n)");
    m.def("cdf_kappa_sq",
          py::vectorize([](double z, int n, int alpha, double eta) {
              return scn::cdf_kappa_sq(z, make_params(n, alpha, eta));
          }),
          py::arg("z"), py::arg("n"), py::arg("alpha"), py::arg("eta") = 0.0);
    m.def("pdf_kappa_sq_white",
          py::vectorize([](double z, int n, int alpha) {
              return scn::pdf_kappa_sq_white(z, {n, alpha});
          }),
          py::arg("z"), py::arg("n"), py::arg("alpha"));
    m.def("mgf_kappa_sq",
          py::vectorize([](double s, int n, int alpha, double eta) {
              return scn::mgf_kappa_sq(s, make_params(n, alpha, eta));
          }),
          py::arg("s"), py::arg("n"), py::arg("alpha"), py::arg("eta") = 0.0,
          "E[exp(-s kappa_SC^2)] (Laplace-transform sign convention)");
    m.def("pdf_min_eig",
          py::vectorize([](double x, int n, int alpha, double eta) {
              return scn::pdf_min_eig(x, make_params(n, alpha, eta));
          }),
          py::arg("x"), py::arg("n"), py::arg("alpha"), py::arg("eta") = 0.0);
    m.def("cdf_min_eig",
          py::vectorize([](double x, int n, int alpha, double eta) {
              return scn::cdf_min_eig(x, make_params(n, alpha, eta));
          }),
          py::arg("x"), py::arg("n"), py::arg("alpha"), py::arg("eta") = 0.0);

    // --- hard-edge limits ---
    m.def("cdf_scaled_min_eig",
          py::vectorize([](double x, int alpha, double mu) {
              return scn::cdf_scaled_min_eig(x, {alpha, mu, 0.0});
          }),
          py::arg("x"), py::arg("alpha"), py::arg("mu") = 1.0);
    m.def("cdf_scaled_kappa",
          py::vectorize([](double v, int alpha, double mu) {
              return scn::cdf_scaled_kappa(v, {alpha, mu, 0.0});
          }),
          py::arg("v"), py::arg("alpha"), py::arg("mu") = 1.0);
    m.def("pdf_scaled_kappa",
          py::vectorize([](double v, int alpha, double mu) {
              return scn::pdf_scaled_kappa(v, {alpha, mu, 0.0});
          }),
          py::arg("v"), py::arg("alpha"), py::arg("mu") = 1.0);

    // --- ensemble simulation ---
    m.def(
        "monte_carlo",
        [](int n, int alpha, double eta, long long trials, uint64_t seed,
           const std::string& statistic, int threads) {
            auto emp = scn::monte_carlo({n, alpha}, {eta}, trials, seed,
                                        parse_statistic(statistic), threads);
            return py::array_t<double>(py::ssize_t(emp.count()),
                                       emp.samples().data());
        },
        py::arg("n"), py::arg("alpha"), py::arg("eta"), py::arg("trials"),
        py::arg("seed"), py::arg("statistic") = "kappa_sq",
        py::arg("threads") = 0,
        "Sorted Monte Carlo samples of the chosen statistic");
    m.def(
        "sample_spiked_gaussian",
        [](int n, int alpha, double eta, uint64_t seed) {
            scn::Xoshiro256pp rng(seed);
            return scn::sample_spiked_gaussian({n, alpha}, {eta}, rng);
        },
        py::arg("n"), py::arg("alpha"), py::arg("eta"), py::arg("seed"),
        "One (n+alpha) x n draw with covariance I + eta e1 e1*");
    m.def(
        "eigenvalues_hermitian",
        [](const Eigen::MatrixXcd& w) { return scn::eigenvalues_hermitian(w); },
        py::arg("w"));
    m.def(
        "joint_density",
        [](const std::vector<double>& eigs, int n, int alpha, double eta) {
            return scn::joint_density(eigs, {n, alpha}, {eta});
        },
        py::arg("eigs"), py::arg("n"), py::arg("alpha"), py::arg("eta") = 0.0);

    // --- special-function layer ---
    m.def("log_gamma", py::vectorize(&scn::log_gamma), py::arg("x"));
    m.def(
        "pochhammer",
        [](double a, long long j) { return scn::pochhammer(a, j).to_real(); },
        py::arg("a"), py::arg("j"));
    m.def(
        "laguerre",
        [](int m_deg, double rho, double z) {
            return scn::laguerre(m_deg, rho, z).to_real();
        },
        py::arg("degree"), py::arg("rho"), py::arg("z"));
    m.def("bessel_i", py::vectorize(&scn::bessel_i), py::arg("order"),
          py::arg("x"));
    m.def(
        "hyp_3f2",
        [](double a1, double a2, double a3, double b1, double b2, double x) {
            return scn::hyp_3f2(a1, a2, a3, b1, b2, x).to_real();
        },
        py::arg("a1"), py::arg("a2"), py::arg("a3"), py::arg("b1"),
        py::arg("b2"), py::arg("x"));

    // --- closed-form multiple integrals ---
    m.def(
        "r_det",
        [](int n, int alpha, double t) { return scn::r_det(n, alpha, t).to_real(); },
        py::arg("n"), py::arg("alpha"), py::arg("t"));
    m.def(
        "t_det",
        [](int n, int alpha, double a, double b) {
            return scn::t_det(n, alpha, a, b).to_real();
        },
        py::arg("n"), py::arg("alpha"), py::arg("a"), py::arg("b"));
    m.def(
        "q_det",
        [](int n, int alpha, double a, double b) {
            return scn::q_det(n, alpha, a, b).to_real();
        },
        py::arg("n"), py::arg("alpha"), py::arg("a"), py::arg("b"));
}
