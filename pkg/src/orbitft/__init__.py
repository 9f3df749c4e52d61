"""Exponential-type atomic orbitals and their momentum-space Fourier transforms."""

from .errors import DomainError, QuadratureError, SeriesConvergenceError
from .momentum import (FtRepresentation, ft_bfunction, ft_closed_form, ft_slater,
                       ft_via_expansion, valid_representations)
from .oracle import QuadratureConfig, fock_limit_error, ft_numeric, overlap_numeric
from .orbitals import Basis, Expansion, Family, OrbitalModel, evaluate, expand

__version__ = "0.1.0"

__all__ = [
    "Basis", "DomainError", "Expansion", "Family", "FtRepresentation", "OrbitalModel",
    "QuadratureConfig", "QuadratureError", "SeriesConvergenceError", "evaluate", "expand",
    "fock_limit_error", "ft_bfunction", "ft_closed_form", "ft_numeric", "ft_slater",
    "ft_via_expansion", "overlap_numeric", "valid_representations",
]
