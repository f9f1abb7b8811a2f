"""Extended product actions: the data (theta1, alpha, beta, theta2) and its
compatibility laws, boundary evaluation, and transport across fillings.

A finite group acts on the trivially fibered piece by rotating fibers
(theta1), permuting boundary components (beta), rotating each boundary
circle (theta2), and possibly reflecting both directions (alpha = -1).  The
laws below are exactly what makes g -> (action of g) a homomorphism; they
are checked value-by-value, never assumed.

Composition convention: beta(g1*g2) = beta(g1) o beta(g2), i.e. the group
acts on boundary indices from the left.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .groups import FiniteGroup, parse_group_file
from .obstruction import ObstructionWitness, decompose
from .rational import RationalAngle, ZERO_ANGLE, parse_fraction
from .seifert import NormalizedPresentation, SeifertPair, parse_pair
from .torus import TorusAutomorphism
from . import seifert

__all__ = [
    "ActionDataError",
    "ActionFormatError",
    "ExtendedActionData",
    "SolidTorusPoint",
    "UnsupportedExtensionError",
    "action_obstruction_check",
    "boundary_action",
    "boundary_orbit_numbers",
    "format_action",
    "induced_filling_action",
    "kernel_on_boundary",
    "parse_action_file",
    "parse_action_text",
    "solid_torus_eval",
    "verify_action",
]


class ActionDataError(ValueError):
    """Raised for structurally malformed action data."""


class ActionFormatError(ValueError):
    """Raised for unparseable action files."""


class UnsupportedExtensionError(ValueError):
    """Raised when a boundary map does not cone over the solid torus."""


@dataclass(frozen=True)
class ExtendedActionData:
    """Per-element action data on the boundary of the fibered piece.

    alpha, theta1, beta and theta2 are indexed by element; theta2[g][i] is
    the rotation of boundary circle i under g.  beta images are 0-based
    boundary indices.
    """

    group: FiniteGroup
    pairs: tuple[SeifertPair, ...]
    alpha: tuple[int, ...]
    theta1: tuple[RationalAngle, ...]
    beta: tuple[tuple[int, ...], ...]
    theta2: tuple[tuple[RationalAngle, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.pairs)
        order = self.group.order
        if n < 1:
            raise ActionDataError("at least one boundary component is required")
        for pair in self.pairs:
            if pair.q < 1 or math.gcd(pair.q, abs(pair.p)) != 1:
                raise ActionDataError(f"invalid Seifert pair {pair}")
        for name, seq in (
            ("alpha", self.alpha),
            ("theta1", self.theta1),
            ("beta", self.beta),
            ("theta2", self.theta2),
        ):
            if len(seq) != order:
                raise ActionDataError(
                    f"{name} has {len(seq)} entries, expected one per element ({order})"
                )
        for g, value in enumerate(self.alpha):
            if value not in (-1, 1):
                raise ActionDataError(f"alpha[{g}]={value} must be +1 or -1")
        for g, perm in enumerate(self.beta):
            if sorted(perm) != list(range(n)):
                raise ActionDataError(
                    f"beta[{g}]={perm} is not a permutation of 0..{n - 1}"
                )
        for g, row in enumerate(self.theta2):
            if len(row) != n:
                raise ActionDataError(
                    f"theta2[{g}] has {len(row)} angles, expected {n}"
                )

    @property
    def n_boundary(self) -> int:
        return len(self.pairs)


def verify_action(data: ExtendedActionData) -> list[str]:
    """Check every compatibility law over all element pairs and boundary
    indices; an empty report means the data defines a group action."""
    group = data.group
    problems = []
    for g1 in group.elements():
        for g2 in group.elements():
            g12 = group.mul(g1, g2)
            if data.alpha[g12] != data.alpha[g1] * data.alpha[g2]:
                problems.append(
                    f"alpha is not a homomorphism at ({g1},{g2}): "
                    f"alpha({g12})={data.alpha[g12]:+d} but product is "
                    f"{data.alpha[g1] * data.alpha[g2]:+d}"
                )
            expected1 = data.theta1[g1] + data.theta1[g2].scale(data.alpha[g1])
            if data.theta1[g12] != expected1:
                problems.append(
                    f"theta1 twisted-cocycle law fails at ({g1},{g2}): "
                    f"theta1({g12})={data.theta1[g12]} but law gives {expected1}"
                )
            composed = tuple(data.beta[g1][data.beta[g2][i]] for i in range(data.n_boundary))
            if data.beta[g12] != composed:
                problems.append(
                    f"beta is not a homomorphism at ({g1},{g2}): "
                    f"beta({g12})={data.beta[g12]} but composition is {composed}"
                )
            for i in range(data.n_boundary):
                expected2 = data.theta2[g1][data.beta[g2][i]] + data.theta2[g2][
                    i
                ].scale(data.alpha[g1])
                if data.theta2[g12][i] != expected2:
                    problems.append(
                        f"theta2 twisted-cocycle law fails at ({g1},{g2}) on "
                        f"boundary {i}: theta2({g12},{i})={data.theta2[g12][i]} "
                        f"but law gives {expected2}"
                    )
    for g in group.elements():
        for i, j in enumerate(data.beta[g]):
            if data.pairs[i] != data.pairs[j]:
                problems.append(
                    f"beta({g}) sends boundary {i} to {j} but the fillings "
                    f"differ: {data.pairs[i]} vs {data.pairs[j]}"
                )
    return problems


def boundary_action(
    data: ExtendedActionData, g: int, i: int
) -> tuple[int, TorusAutomorphism]:
    """Action of g on boundary torus i of the fibered piece: the target
    index and the map (u, v) -> (theta1(g) u^alpha, theta2(i,g) v^alpha)."""
    a = data.alpha[g]
    return data.beta[g][i], TorusAutomorphism(
        a, 0, 0, a, data.theta1[g], data.theta2[g][i]
    )


def induced_filling_action(
    data: ExtendedActionData, g: int, i: int
) -> tuple[int, TorusAutomorphism]:
    """Action of g on the boundary of filled solid torus i, in the filling
    framing: phases (-q*theta1 + p*theta2, y*theta1 - x*theta2).

    Equals the boundary action conjugated by the attaching map, exactly.
    """
    pair = data.pairs[i]
    gp = seifert.gluing_pair(pair)
    a = data.alpha[g]
    t1, t2 = data.theta1[g], data.theta2[g][i]
    return data.beta[g][i], TorusAutomorphism(
        a,
        0,
        0,
        a,
        t1.scale(-pair.q) + t2.scale(pair.p),
        t1.scale(gp.y) + t2.scale(-gp.x),
    )


@dataclass(frozen=True)
class SolidTorusPoint:
    """Point (u, r, v) of S^1 x D with the disc in polar form.

    The meridian angle is meaningless on the core circle, so it is
    canonicalized to 0 whenever r = 0.
    """

    longitude: RationalAngle
    radius: Fraction
    meridian: RationalAngle

    def __post_init__(self) -> None:
        if not 0 <= self.radius <= 1:
            raise ValueError(f"radius must lie in [0, 1], got {self.radius}")
        if self.radius == 0 and not self.meridian.is_zero():
            object.__setattr__(self, "meridian", ZERO_ANGLE)


def solid_torus_eval(
    filling_action: TorusAutomorphism, point: SolidTorusPoint
) -> SolidTorusPoint:
    """Extend a boundary map over the solid torus by coning inwards.

    Only maps with matrix +-identity extend this way: the boundary rotations
    apply at every radius and the radius is preserved.
    """
    m = filling_action.matrix()
    if m == (1, 0, 0, 1):
        sign = 1
    elif m == (-1, 0, 0, -1):
        sign = -1
    else:
        raise UnsupportedExtensionError(
            f"matrix {m} is not +-identity; the map does not cone radially"
        )
    return SolidTorusPoint(
        filling_action.phase1 + point.longitude.scale(sign),
        point.radius,
        filling_action.phase2 + point.meridian.scale(sign),
    )


def boundary_orbit_numbers(data: ExtendedActionData) -> dict[int, int]:
    """Orbit size of each boundary index under the permutation part."""
    sizes = {}
    for i in range(data.n_boundary):
        orbit = {data.beta[g][i] for g in data.group.elements()}
        sizes[i] = len(orbit)
    return sizes


def action_obstruction_check(
    data: ExtendedActionData,
    pres: NormalizedPresentation,
    regular_orbits: tuple[int, ...] = (),
) -> ObstructionWitness | None:
    """Decide the obstruction condition for this action on this manifold.

    The critical fillings of the action must match the critical pairs of
    the presentation.  Orbit numbers come from the permutation part of the
    action; orbit numbers of interior regular fibers, which the boundary
    data cannot see, may be supplied by the caller.
    """
    critical = sorted(pair for pair in data.pairs if pair.q >= 2)
    if critical != sorted(pres.pairs):
        raise ActionDataError(
            "critical fillings of the action do not match the presentation: "
            f"{critical} vs {sorted(pres.pairs)}"
        )
    numbers = set(boundary_orbit_numbers(data).values())
    numbers.update(regular_orbits)
    return decompose(pres.b, sorted(numbers))


def kernel_on_boundary(data: ExtendedActionData) -> list[int]:
    """Elements acting trivially on every boundary datum; always normal."""
    trivial_beta = tuple(range(data.n_boundary))
    return [
        g
        for g in data.group.elements()
        if data.alpha[g] == 1
        and data.beta[g] == trivial_beta
        and data.theta1[g].is_zero()
        and all(data.theta2[g][i].is_zero() for i in range(data.n_boundary))
    ]


def _parse_angle(text: str, where: str) -> RationalAngle:
    try:
        return RationalAngle(parse_fraction(text))
    except ValueError:
        raise ActionFormatError(f"{where}: bad angle {text!r}") from None


def parse_action_text(
    text: str, base_dir: str | Path = ".", source: str = "<string>"
) -> ExtendedActionData:
    """Parse an action file.

    Format: a `group:` line naming the group file (relative to the action
    file), a `pairs:` line listing the fillings, then one line per element:

        g: alpha=+1 theta1=1/3 beta=(2,3,1) theta2=0,0,1/2

    beta is in one-line notation on the 1-based boundary indices 1..n.
    """
    group = None
    pairs = None
    element_lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ActionFormatError(f"{source}:{lineno}: expected 'key: value'")
        key = key.strip()
        rest = rest.strip()
        if key == "group":
            group = parse_group_file(Path(base_dir) / rest)
        elif key == "pairs":
            try:
                pairs = tuple(parse_pair(tok) for tok in rest.split())
            except seifert.PresentationError as exc:
                raise ActionFormatError(f"{source}:{lineno}: {exc}") from None
        elif key.isdigit():
            element_lines[int(key)] = (lineno, rest)
        else:
            raise ActionFormatError(f"{source}:{lineno}: unknown key {key!r}")
    if group is None:
        raise ActionFormatError(f"{source}: missing 'group:' line")
    if pairs is None or not pairs:
        raise ActionFormatError(f"{source}: missing or empty 'pairs:' line")
    n = len(pairs)
    alpha, theta1, beta, theta2 = [], [], [], []
    for g in range(group.order):
        if g not in element_lines:
            raise ActionFormatError(f"{source}: missing line for element {g}")
        lineno, rest = element_lines[g]
        where = f"{source}:{lineno}"
        fields = {}
        for tok in rest.split():
            name, sep, value = tok.partition("=")
            if not sep:
                raise ActionFormatError(f"{where}: expected name=value, got {tok!r}")
            fields[name] = value
        missing = {"alpha", "theta1", "beta", "theta2"} - fields.keys()
        if missing:
            raise ActionFormatError(f"{where}: missing fields {sorted(missing)}")
        if fields["alpha"] not in ("+1", "-1", "1"):
            raise ActionFormatError(f"{where}: alpha must be +1 or -1")
        alpha.append(1 if fields["alpha"] in ("+1", "1") else -1)
        theta1.append(_parse_angle(fields["theta1"], where))
        perm_text = fields["beta"]
        if not (perm_text.startswith("(") and perm_text.endswith(")")):
            raise ActionFormatError(f"{where}: beta must be parenthesized")
        try:
            images = tuple(int(tok) - 1 for tok in perm_text[1:-1].split(","))
        except ValueError:
            raise ActionFormatError(f"{where}: bad beta {perm_text!r}") from None
        if sorted(images) != list(range(n)):
            raise ActionFormatError(
                f"{where}: beta must be a permutation of 1..{n}"
            )
        beta.append(images)
        angle_toks = fields["theta2"].split(",")
        if len(angle_toks) != n:
            raise ActionFormatError(
                f"{where}: theta2 needs {n} angles, got {len(angle_toks)}"
            )
        theta2.append(tuple(_parse_angle(tok, where) for tok in angle_toks))
    extra = set(element_lines) - set(range(group.order))
    if extra:
        raise ActionFormatError(f"{source}: element indices out of range: {sorted(extra)}")
    return ExtendedActionData(
        group, pairs, tuple(alpha), tuple(theta1), tuple(beta), tuple(theta2)
    )


def parse_action_file(path: str | Path) -> ExtendedActionData:
    path = Path(path)
    return parse_action_text(
        path.read_text(encoding="utf-8"), base_dir=path.parent, source=str(path)
    )


def format_action(data: ExtendedActionData, group_path: str) -> str:
    lines = [f"group: {group_path}"]
    lines.append("pairs: " + " ".join(str(pair) for pair in data.pairs))
    for g in data.group.elements():
        beta = ",".join(str(i + 1) for i in data.beta[g])
        theta2 = ",".join(str(data.theta2[g][i]) for i in range(data.n_boundary))
        lines.append(
            f"{g}: alpha={data.alpha[g]:+d} theta1={data.theta1[g]} "
            f"beta=({beta}) theta2={theta2}"
        )
    return "\n".join(lines) + "\n"
