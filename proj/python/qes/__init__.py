"""Closed-form bound states of the Coulomb plus harmonic oscillator potential."""

from ._core import (
    NoEigenvalueInBracket,
    SolverFailure,
    beta_of,
    check,
    constraint,
    general_energy,
    series,
    solve,
    wavefunction,
)

__all__ = [
    "NoEigenvalueInBracket",
    "SolverFailure",
    "beta_of",
    "check",
    "constraint",
    "general_energy",
    "series",
    "solve",
    "wavefunction",
]
