"""Gravitational UCN bouncer levels and their Earth-rotation shift."""

from ._core import (
    NumericalError,
    airy,
    airy_zero,
    budget,
    constants,
    crossover,
    fd_eigenvalues,
    joules_to_peV,
    level,
    mean_height_quadrature,
    peV_to_joules,
    reduced_scales,
    relative_shift,
    rotation_shift,
    spectrum,
)

__all__ = [
    "NumericalError",
    "airy",
    "airy_zero",
    "budget",
    "constants",
    "crossover",
    "fd_eigenvalues",
    "joules_to_peV",
    "level",
    "mean_height_quadrature",
    "peV_to_joules",
    "reduced_scales",
    "relative_shift",
    "rotation_shift",
    "spectrum",
]
