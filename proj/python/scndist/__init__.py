"""Distributions of the squared scaled (Demmel) condition number of
single-spiked complex Wishart matrices: exact finite-size laws,
hard-edge limits, and a seedable Monte Carlo sampler."""

from ._scndist import (  # noqa: F401
    bessel_i,
    cdf_kappa_sq,
    cdf_min_eig,
    cdf_scaled_kappa,
    cdf_scaled_min_eig,
    eigenvalues_hermitian,
    hyp_3f2,
    joint_density,
    laguerre,
    log_gamma,
    mgf_kappa_sq,
    monte_carlo,
    pdf_kappa_sq,
    pdf_kappa_sq_white,
    pdf_min_eig,
    pdf_scaled_kappa,
    pochhammer,
    q_det,
    r_det,
    sample_spiked_gaussian,
    t_det,
)

__all__ = [
    "bessel_i",
    "cdf_kappa_sq",
    "cdf_min_eig",
    "cdf_scaled_kappa",
    "cdf_scaled_min_eig",
    "eigenvalues_hermitian",
    "hyp_3f2",
    "joint_density",
    "laguerre",
    "log_gamma",
    "mgf_kappa_sq",
    "monte_carlo",
    "pdf_kappa_sq",
    "pdf_kappa_sq_white",
    "pdf_min_eig",
    "pdf_scaled_kappa",
    "pochhammer",
    "q_det",
    "r_det",
    "sample_spiked_gaussian",
    "t_det",
]
