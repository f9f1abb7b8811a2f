"""Boundary-torus self-maps as integer matrices with rational phase data.

An automorphism models (u, v) -> (c1 * u^a * v^b, c2 * u^c * v^d) on
S^1 x S^1, recorded by the homology matrix [[a, b], [c, d]] (determinant
+-1) and the phases of the constants c1, c2.  This level of detail is
exactly what survives on homology plus the rotation data, and it is enough
to decide finite order and to transport boundary actions across fillings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rational import RationalAngle, ZERO_ANGLE
from .seifert import SeifertPair, gluing_pair

__all__ = [
    "IDENTITY",
    "TorusAutomorphism",
    "compose",
    "conjugate_by_gluing",
    "format_automorphism",
    "gluing_automorphism",
    "inverse",
    "order",
    "power",
]

# Any finite-order 2x2 integer matrix has order 1, 2, 3, 4 or 6, so powers
# up to 12 certify infinite order.
_MATRIX_ORDER_CUTOFF = 12


@dataclass(frozen=True)
class TorusAutomorphism:
    m11: int
    m12: int
    m21: int
    m22: int
    phase1: RationalAngle = ZERO_ANGLE
    phase2: RationalAngle = ZERO_ANGLE

    def __post_init__(self) -> None:
        if abs(self.det) != 1:
            raise ValueError(
                f"matrix [[{self.m11},{self.m12}],[{self.m21},{self.m22}]] "
                "is not invertible over the integers"
            )

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def matrix(self) -> tuple[int, int, int, int]:
        return (self.m11, self.m12, self.m21, self.m22)

    def is_identity(self) -> bool:
        return (
            self.matrix() == (1, 0, 0, 1)
            and self.phase1.is_zero()
            and self.phase2.is_zero()
        )

    def __str__(self) -> str:
        return format_automorphism(self)


IDENTITY = TorusAutomorphism(1, 0, 0, 1)


def compose(f: TorusAutomorphism, g: TorusAutomorphism) -> TorusAutomorphism:
    """f after g: matrix product, phases M_f * phase(g) + phase(f)."""
    return TorusAutomorphism(
        f.m11 * g.m11 + f.m12 * g.m21,
        f.m11 * g.m12 + f.m12 * g.m22,
        f.m21 * g.m11 + f.m22 * g.m21,
        f.m21 * g.m12 + f.m22 * g.m22,
        g.phase1.scale(f.m11) + g.phase2.scale(f.m12) + f.phase1,
        g.phase1.scale(f.m21) + g.phase2.scale(f.m22) + f.phase2,
    )


def inverse(f: TorusAutomorphism) -> TorusAutomorphism:
    d = f.det
    i11, i12 = f.m22 * d, -f.m12 * d
    i21, i22 = -f.m21 * d, f.m11 * d
    return TorusAutomorphism(
        i11,
        i12,
        i21,
        i22,
        -(f.phase1.scale(i11) + f.phase2.scale(i12)),
        -(f.phase1.scale(i21) + f.phase2.scale(i22)),
    )


def power(f: TorusAutomorphism, k: int) -> TorusAutomorphism:
    if k < 0:
        return power(inverse(f), -k)
    result = IDENTITY
    for _ in range(k):
        result = compose(result, f)
    return result


def _matrix_power(m: tuple[int, int, int, int], f: TorusAutomorphism):
    a, b, c, d = m
    return (
        a * f.m11 + b * f.m21,
        a * f.m12 + b * f.m22,
        c * f.m11 + d * f.m21,
        c * f.m12 + d * f.m22,
    )


def order(f: TorusAutomorphism) -> int | None:
    """Least k >= 1 with f^k = identity (matrix and phases), None if infinite.

    The matrix part is iterated up to the rank-2 cutoff; once it stabilizes
    at the identity after k0 steps, the remaining phase vector lives in
    (Q/Z)^2 and its order is the lcm of the denominators.
    """
    m = f.matrix()
    matrix_order = None
    for k in range(1, _MATRIX_ORDER_CUTOFF + 1):
        if k > 1:
            m = _matrix_power(m, f)
        if m == (1, 0, 0, 1):
            matrix_order = k
            break
    if matrix_order is None:
        return None
    stabilized = power(f, matrix_order)
    phase_order = math.lcm(stabilized.phase1.order, stabilized.phase2.order)
    return matrix_order * phase_order


def conjugate_by_gluing(
    f: TorusAutomorphism, d: TorusAutomorphism
) -> TorusAutomorphism:
    """Transport f across an attaching map d: returns d^-1 after f after d."""
    return compose(inverse(d), compose(f, d))


def gluing_automorphism(pair: SeifertPair) -> TorusAutomorphism:
    """Attaching map of a filling pair as a phase-free automorphism.

    The matrix is [[x, p], [y, q]] with x*q - y*p = -1, sending the solid
    torus framing to the framing of the boundary torus it fills.
    """
    gp = gluing_pair(pair)
    return TorusAutomorphism(gp.x, pair.p, gp.y, pair.q)


def format_automorphism(f: TorusAutomorphism) -> str:
    return (
        f"[[{f.m11},{f.m12}],[{f.m21},{f.m22}]] + ({f.phase1}, {f.phase2})"
    )
