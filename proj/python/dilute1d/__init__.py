"""Dilute one-dimensional Bose and Fermi gases.

Thin Python layer over the native core. Functions that return structured
results give plain dictionaries.
"""

import json as _json

from ._dilute1d import (
    Error,
    InvalidParameter,
    InvalidRadius,
    InvalidScale,
    IoError,
    ParseError,
    Potential,
    fermi_energy,
    ll_expansion,
    ll_lower_bound,
    psi_F,
    rho2,
)
from . import _dilute1d as _core

__all__ = [
    "Error",
    "InvalidParameter",
    "InvalidRadius",
    "InvalidScale",
    "IoError",
    "ParseError",
    "Potential",
    "fermi_energy",
    "ll_expansion",
    "ll_lower_bound",
    "psi_F",
    "rho2",
    "scatter",
    "lieb_liniger",
    "oracle",
    "trial",
    "validate",
]


def scatter(potential, radius, channel="even", samples=0):
    """Zero-energy scattering solution; ``scattering_length`` is None for v = 0."""
    return _json.loads(_core.scatter_json(potential, channel, radius, samples))


def lieb_liniger(gamma, nodes=200, density=False):
    return _json.loads(_core.ll_json(gamma, nodes, density))


def oracle(n, length, bc="dirichlet", potential=None, fermi=False, cells=256, refinements=3):
    potential = Potential() if potential is None else potential
    return _json.loads(_core.oracle_json(n, length, bc, potential, fermi, cells, refinements))


def trial(n, length, potential, b, order=64):
    return _json.loads(_core.trial_json(n, length, potential, b, order))


def validate(n, length, potential=None, symmetry="bose", kappa=0.0, c=0.0, oracle=False,
             cells=256, refinements=3, c_upper=1.0, c_lower=1.0):
    potential = Potential() if potential is None else potential
    return _json.loads(_core.validate_json(n, length, potential, symmetry, kappa, c, oracle,
                                           cells, refinements, c_upper, c_lower))
