"""Exact negativity certificates for subsystems of symmetric qudit states."""

import json as _json

from ._core import (
    __version__,
    bipartite_matrix,
    choose_witness,
    dense_dicke,
    dense_min_eigenvalue,
    dense_partial_trace,
    dense_partial_transpose,
    enumerate_full,
    enumerate_restricted,
    hermitian_form,
    multinomial,
    ppt_spectrum,
    qubit_bounds,
    reduced_state,
    schmidt_coefficient,
    schmidt_decomposition,
    spectral_min,
    verify_schmidt_identity,
)
from ._core import certify_json as _certify_json

__all__ = [
    "__version__",
    "bipartite_matrix",
    "certify",
    "choose_witness",
    "dense_dicke",
    "dense_min_eigenvalue",
    "dense_partial_trace",
    "dense_partial_transpose",
    "enumerate_full",
    "enumerate_restricted",
    "hermitian_form",
    "multinomial",
    "ppt_spectrum",
    "qubit_bounds",
    "reduced_state",
    "schmidt_coefficient",
    "schmidt_decomposition",
    "spectral_min",
    "verify_schmidt_identity",
]


def certify(parent, threads=1):
    """Certification report for every cut of every subsystem, as a dict.

    The layout matches the JSON document the command line tool emits.
    """
    return _json.loads(_certify_json(list(parent), threads))
