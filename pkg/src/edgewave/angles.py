"""Dihedral angle representation, rationality detection and exclusion grids.

Rationality is a property of the representation, never of floating point:
an angle carries an exact reduced fraction only when constructed from one
("q/p" text) or when a continued-fraction match within 1e-12 is requested
explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

DETECT_TOL = 1e-12
DEFAULT_MAX_DEN = 1000


class AngleError(ValueError):
    pass


@dataclass(frozen=True)
class Angle:
    """Angle alpha in units of pi, alpha in (0, 2) and alpha != 1."""

    value: float
    rational: Optional[Tuple[int, int]] = None  # reduced (q, p)

    def __post_init__(self):
        if not (0.0 < self.value < 2.0) or self.value == 1.0:
            raise AngleError(f"angle {self.value} outside (0,2)\\{{1}}")
        if self.rational is not None:
            q, p = self.rational
            if p < 1 or q < 1 or math.gcd(q, p) != 1:
                raise AngleError(f"fraction {q}/{p} not reduced/positive")
            if abs(self.value - q / p) > DETECT_TOL:
                raise AngleError("stored value disagrees with fraction")

    @property
    def is_rational(self):
        return self.rational is not None

    def equals_fraction(self, q, p):
        if self.rational is None:
            return False
        fr = Fraction(q, p)
        return self.rational == (fr.numerator, fr.denominator)

    def __str__(self):
        if self.rational:
            return f"{self.rational[0]}/{self.rational[1]}"
        return repr(self.value)


def parse_angle(text):
    """Parse "q/p" (exact, reduced on input) or a decimal literal.

    Decimal inputs stay rational-free until detect_rational is applied.
    """
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            fr = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise AngleError(f"cannot parse fraction {text!r}") from exc
        value = fr.numerator / fr.denominator
        if not (0 < value < 2) or value == 1:
            raise AngleError(f"angle {text} outside (0,2)\\{{1}}")
        return Angle(value=value, rational=(fr.numerator, fr.denominator))
    try:
        value = float(text)
    except ValueError as exc:
        raise AngleError(f"cannot parse angle {text!r}") from exc
    return Angle(value=value)


def detect_rational(angle, max_den=DEFAULT_MAX_DEN):
    """Attach a reduced fraction iff a denominator <= max_den matches to 1e-12.

    Uses the continued-fraction best approximation; idempotent.
    """
    if max_den < 1:
        raise AngleError("max_den must be >= 1")
    if angle.rational is not None:
        return angle
    best = Fraction(angle.value).limit_denominator(max_den)
    if best.denominator >= 1 and abs(angle.value - float(best)) < DETECT_TOL:
        if 0 < best < 2 and best != 1:
            return Angle(value=angle.value, rational=(best.numerator, best.denominator))
    return angle


def grid_exclusion_order(angle, grid, n_max):
    """Brute-force scan of the exclusion grid, p = 1..n_max.

    grid = "qp":   hits are alpha = q/p with q = 1..2p-1
    grid = "q2p":  hits are alpha = q/(2p) with q = 1..4p-1

    Returns the largest N such that no p <= N produces a hit; angles without
    a rational tag never hit, so the scan returns n_max (read: ">= n_max").
    """
    if grid not in ("qp", "q2p"):
        raise ValueError("grid must be 'qp' or 'q2p'")
    if angle.rational is None:
        return n_max
    aq, ap = angle.rational
    for p in range(1, n_max + 1):
        if grid == "qp":
            qmax = 2 * p - 1
            hits = any(angle.equals_fraction(q, p) for q in range(1, qmax + 1))
        else:
            qmax = 4 * p - 1
            hits = any(angle.equals_fraction(q, 2 * p) for q in range(1, qmax + 1))
        if hits:
            return p - 1
    return n_max


@dataclass(frozen=True)
class PolyhedronAngles:
    """One angle per edge-corner of a polyhedron."""

    angles: tuple

    def __post_init__(self):
        if not self.angles:
            raise AngleError("need at least one angle")


def polyhedron_degree(poly):
    """Classification: ("irrational", None) or ("rational", smallest degree p)."""
    degrees = [a.rational[1] for a in poly.angles if a.rational is not None]
    if not degrees:
        return ("irrational", None)
    return ("rational", min(degrees))
