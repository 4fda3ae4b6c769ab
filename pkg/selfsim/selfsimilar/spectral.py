from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from sympy import Matrix, Poly, Rational, Symbol

from ..config import SPECTRAL_TOLERANCE
from ..nilpotent.element import GroupElement
from .endomorphism import VirtualEndomorphism


LOGGER = logging.getLogger(__name__)

T = Symbol("t")


class SingularLatticeError(ValueError):
    pass


def abelianized_matrix_from(generators: Sequence[GroupElement], images: Sequence[GroupElement]) -> Matrix:
    """Rational matrix of the map induced on G/G' by h_i -> images[i]."""
    if not generators or len(generators) != len(images):
        raise ValueError("need as many images as domain generators")
    domain = Matrix([list(g.abelianization()) for g in generators]).T
    target = Matrix([list(image.abelianization()) for image in images]).T
    if domain.shape[0] != domain.shape[1] or domain.det() == 0:
        raise SingularLatticeError("domain generators do not span a full-rank lattice in G/G'")
    return (target * domain.inv()).applyfunc(Rational)


def abelianized_matrix(f: VirtualEndomorphism) -> Matrix:
    return abelianized_matrix_from(f.generators, f.images)


def companion_matrix(exponents: Sequence[int]) -> Matrix:
    """Abelianized matrix of the cyclic map g_1^{n_1} -> g_r, g_{i+1}^{n_{i+1}} -> g_i."""
    values = [int(n) for n in exponents]
    if not values or any(n < 1 for n in values):
        raise ValueError("exponents must be positive integers")
    rank = len(values)
    matrix = Matrix.zeros(rank, rank)
    matrix[rank - 1, 0] = Rational(1, values[0])
    for i in range(1, rank):
        matrix[i - 1, i] = Rational(1, values[i])
    return matrix


def characteristic_polynomial(matrix: Matrix) -> Poly:
    return matrix.charpoly(T)


def _pure_power_constant(coefficients: list) -> Rational | None:
    # t^r + a_r: every middle coefficient vanishes
    if len(coefficients) < 2 or any(c != 0 for c in coefficients[1:-1]):
        return None
    return coefficients[-1]


def spectral_radius(matrix: Matrix) -> float:
    coefficients = characteristic_polynomial(matrix).all_coeffs()
    constant = _pure_power_constant(coefficients)
    if constant is not None:
        degree = len(coefficients) - 1
        return float(abs(constant) ** Rational(1, degree))
    values = np.linalg.eigvals(np.array(matrix.tolist(), dtype=float))
    return float(np.max(np.abs(values)))


def classify_radius(radius: float, tolerance: float = SPECTRAL_TOLERANCE) -> str:
    if abs(radius - 1.0) <= tolerance:
        return "indeterminate"
    return "contracting" if radius < 1.0 else "expanding"


@dataclass(frozen=True)
class SpectralReport:
    matrix: Matrix
    polynomial: Poly
    radius: float
    classification: str
    exact: bool = False

    @property
    def coefficients(self) -> list[Rational]:
        return list(self.polynomial.all_coeffs())


def spectral_report(target: Matrix | VirtualEndomorphism) -> SpectralReport:
    """Matrix, characteristic polynomial and radius; ``exact`` when the radius is a root of a rational."""
    matrix = abelianized_matrix(target) if isinstance(target, VirtualEndomorphism) else target
    polynomial = characteristic_polynomial(matrix)
    radius = spectral_radius(matrix)
    report = SpectralReport(
        matrix=matrix,
        polynomial=polynomial,
        radius=radius,
        classification=classify_radius(radius),
        exact=_pure_power_constant(polynomial.all_coeffs()) is not None,
    )
    LOGGER.info("Spectral radius %.12g (%s)", radius, report.classification)
    return report
