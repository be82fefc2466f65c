"""Order-by-order constraint systems on the wave-expansion coefficients.

For each order n the unknowns are the 2(2n+1) coefficients
{a_n^m, b_n^m : m in [n]_0}, ordered as

    b_n^0, a_n^0, then for m = 1..n: a_n^m, a_n^{-m}, b_n^m, b_n^{-m}.

The assembled rows for the impedance-impedance pairing are

  * the two recursive chains per face: the order-n relations obtained by
    comparing the r^{n-1} coefficient of the tangential boundary series
    against each Legendre component mu = 0..n (tags "faceJ-chain-eK mu=M"),
  * three matching rows from equating the two faces' edge combinations
    (tags "matching-x/y/z"), and
  * three rows from the face-2 condition evaluated on the edge
    (tags "face2-edge-x/y/z").

At n = 1 only the relations actually derived at first order enter: the two
3x3 head blocks (block A on a_1^{+-1}, b_1^0; block B on b_1^{+-1}, a_1^0)
plus the third face-2 edge row.  The PEC/PMC pairing assembles the leading
tangential relations plus the second-lowest-order coupling rows.  Mixed
pairings are reduced by the reflection principle to an impedance-impedance
system at the doubled angle given by the four-branch table.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Tuple, Union

import numpy as np

from .angles import Angle, grid_exclusion_order
from .corner import ImpedanceKind
from .swe import norm_constant

INFINITE = math.inf


class CaseKind(Enum):
    IMP_IMP = "imp-imp"
    PEC_PMC = "pec-pmc"
    IMP_PEC = "imp-pec"   # face 1 PEC (eta = inf), face 2 impedance series
    IMP_PMC = "imp-pmc"   # face 1 PMC (eta = 0), face 2 impedance series

    @classmethod
    def parse(cls, text):
        for kind in cls:
            if kind.value == text:
                return kind
        raise ValueError(f"unknown case {text!r}")


class UnsupportedPairingError(ValueError):
    pass


class RankAmbiguityError(RuntimeError):
    """A singular value fell inside the undecidable band around the threshold."""

    def __init__(self, message, order=None, values=()):
        super().__init__(message)
        self.order = order
        self.values = tuple(values)


def case_of_config(config):
    """Classify a config's boundary pairing; PEC-PEC/PMC-PMC are rejected."""
    k1, k2 = config.bc1.kind, config.bc2.kind
    if k1 == k2 == ImpedanceKind.SERIES:
        return CaseKind.IMP_IMP
    if k1 == ImpedanceKind.INFINITE and k2 == ImpedanceKind.ZERO:
        return CaseKind.PEC_PMC
    if k1 == ImpedanceKind.INFINITE and k2 == ImpedanceKind.SERIES:
        return CaseKind.IMP_PEC
    if k1 == ImpedanceKind.ZERO and k2 == ImpedanceKind.SERIES:
        return CaseKind.IMP_PMC
    raise UnsupportedPairingError(
        f"unsupported boundary pairing ({k1.name}, {k2.name})")


def column_labels(n):
    cols = [("b", 0), ("a", 0)]
    for m in range(1, n + 1):
        cols += [("a", m), ("a", -m), ("b", m), ("b", -m)]
    return cols


class EffectiveAngle:
    """Angle carrier for assembled systems; tolerates the boundary value 1,
    which reflected configurations at alpha = 1/2 land on."""

    __slots__ = ("value", "rational")

    def __init__(self, value, rational=None):
        self.value = float(value)
        self.rational = rational

    @classmethod
    def of(cls, angle):
        return cls(angle.value, angle.rational)

    def __str__(self):
        if self.rational:
            return f"{self.rational[0]}/{self.rational[1]}"
        return repr(self.value)


@dataclass
class ConstraintSystem:
    """Labeled linear system over the order-n unknowns."""

    n: int
    case: CaseKind
    alpha: EffectiveAngle             # angle the rows were assembled at
    columns: List[Tuple[str, int]]
    rows: np.ndarray                  # complex, shape (nrows, ncols)
    provenance: List[str]
    eta1: Optional[complex] = None    # constants used in assembly
    eta2: Optional[complex] = None
    k: Optional[float] = None
    block_A: Optional[np.ndarray] = None   # 3x3 head block, det ~ sin^2
    block_B: Optional[np.ndarray] = None   # 3x3 head block, det ~ sin^2 cos^2
    source_case: Optional[CaseKind] = None  # original pairing before reflection
    source_alpha: Optional[Angle] = None

    @property
    def column_index(self):
        return {c: i for i, c in enumerate(self.columns)}


# ---------------------------------------------------------------------------
# impedance-impedance rows
# ---------------------------------------------------------------------------

def chain_rows(n, eta, k, phase, face_tag, ix, ncols):
    """The two order-n recursive chains of one face (2(n+1) rows).

    phase is 0 on face 1 and alpha*pi on face 2; an order-m coefficient pair
    enters every relation as x^m e^{i m phase} + x^{-m} e^{-i m phase}.
    """
    sL = math.sqrt(n * (n + 1))
    c = [norm_constant(n, m) for m in range(0, n + 1)]
    rows, tags = [], []

    def pair(row, fam, m, coeff):
        row[ix[(fam, m)]] += coeff * cmath.exp(1j * m * phase)
        row[ix[(fam, -m)]] += coeff * cmath.exp(-1j * m * phase)

    for mu in range(0, n + 1):
        row = np.zeros(ncols, dtype=complex)
        if mu == 0:
            row[ix[("a", 0)]] += 1j * k * sL * c[0] / (2 * n + 1)
        else:
            pair(row, "a", mu, 1j * k * sL * c[mu] / (2 * n + 1))
        if mu + 1 <= n:
            pair(row, "b", mu + 1,
                 -eta * (n + 1) * c[mu + 1] * (n + mu + 1) * (n - mu)
                 / (2 * (2 * n + 1) * sL))
        if mu - 1 >= 1:
            pair(row, "b", mu - 1,
                 eta * (n + 1) * c[mu - 1] / (2 * (2 * n + 1) * sL))
        elif mu == 1:
            row[ix[("b", 0)]] += eta * (n + 1) * c[0] / ((2 * n + 1) * sL)
        rows.append(row)
        tags.append(f"{face_tag}-chain-e1 mu={mu}")

    for mu in range(0, n + 1):
        row = np.zeros(ncols, dtype=complex)
        m = mu + 1
        if m <= n:
            pair(row, "a", m,
                 1j * k * (n + 1) * c[m] * (n + m) * (n - m + 1)
                 / (2 * (2 * n + 1) * sL))
        if m - 2 >= 1:
            pair(row, "a", m - 2,
                 -1j * k * (n + 1) * c[m - 2] / (2 * (2 * n + 1) * sL))
        elif m - 2 == 0:
            row[ix[("a", 0)]] += -1j * k * (n + 1) * c[0] / ((2 * n + 1) * sL)
        if m - 1 >= 1:
            pair(row, "b", m - 1, eta * c[m - 1] * sL / (2 * n + 1))
        else:
            row[ix[("b", 0)]] += eta * c[0] * sL / (2 * n + 1)
        rows.append(row)
        tags.append(f"{face_tag}-chain-e2 mu={mu}")
    return rows, tags


def _head_quantities(n, alpha_val):
    c0, c1 = norm_constant(n, 0), norm_constant(n, 1)
    sL = math.sqrt(n * (n + 1))
    s, co = math.sin(alpha_val * math.pi), math.cos(alpha_val * math.pi)
    Kp = n * (n + 1) ** 2 * c1 / (2 * (2 * n + 1) * sL)
    Ap = sL * c0 / (2 * n + 1)
    return s, co, Kp, Ap


def edge_rows(n, alpha_val, eta1, eta2, k, ix, ncols):
    """Matching rows plus face-2 edge rows (six rows, orders m <= 1 only)."""
    s, co, Kp, Ap = _head_quantities(n, alpha_val)
    rows, tags = [], []

    def build(ap, am, bp, bm, b0, a0, tag):
        row = np.zeros(ncols, dtype=complex)
        row[ix[("a", 1)]], row[ix[("a", -1)]] = ap, am
        row[ix[("b", 1)]], row[ix[("b", -1)]] = bp, bm
        row[ix[("b", 0)]], row[ix[("a", 0)]] = b0, a0
        rows.append(row)
        tags.append(tag)

    build(1j * k * Kp * s * s - k * Kp * s * co,
          1j * k * Kp * s * s + k * Kp * s * co,
          0, 0, -(eta1 + eta2 * co) * Ap, 0, "matching-x")
    build(-1j * k * Kp * s * co - k * Kp * s * s,
          -1j * k * Kp * s * co + k * Kp * s * s,
          0, 0, -eta2 * s * Ap, 0, "matching-y")
    build(0, 0,
          (eta1 - eta2 * co) * Kp + 1j * eta2 * s * Kp,
          (eta1 - eta2 * co) * Kp - 1j * eta2 * s * Kp,
          0, 0, "matching-z")
    build(0, 0,
          -eta2 * co * co * Kp + 1j * eta2 * s * co * Kp,
          -eta2 * co * co * Kp - 1j * eta2 * s * co * Kp,
          0, 1j * k * co * Ap, "face2-edge-x")
    build(0, 0,
          eta2 * s * co * Kp + 1j * eta2 * s * s * Kp,
          eta2 * s * co * Kp - 1j * eta2 * s * s * Kp,
          0, 1j * k * s * Ap, "face2-edge-y")
    build(1j * k * Kp * co + k * Kp * s,
          1j * k * Kp * co - k * Kp * s,
          0, 0, eta2 * Ap, 0, "face2-edge-z")
    return rows, tags


def head_row(n, eta1, k, ix, ncols):
    """The face-1 e2-chain head relation (mu = 0) closing head block A."""
    sL = math.sqrt(n * (n + 1))
    c0, c1 = norm_constant(n, 0), norm_constant(n, 1)
    row = np.zeros(ncols, dtype=complex)
    coeff = 1j * k * (n + 1) * c1 * (n + 1) * n / (2 * (2 * n + 1) * sL)
    row[ix[("a", 1)]] = coeff
    row[ix[("a", -1)]] = coeff
    row[ix[("b", 0)]] = eta1 * c0 * sL / (2 * n + 1)
    return row


def head_block_A(n, alpha_val, eta1, eta2, k):
    """3x3 block on (a_n^1 + a_n^-1, a_n^1 - a_n^-1, b_n^0)."""
    s, co, Kp, Ap = _head_quantities(n, alpha_val)
    return np.array([
        [1j * k * Kp * s * s, -k * Kp * s * co, -(eta1 + eta2 * co) * Ap],
        [-1j * k * Kp * s * co, -k * Kp * s * s, -eta2 * s * Ap],
        [1j * k * Kp, 0.0, eta1 * Ap],
    ], dtype=complex)


def head_block_B(n, alpha_val, eta1, eta2, k):
    """3x3 block on (b_n^1 + b_n^-1, b_n^1 - b_n^-1, a_n^0)."""
    s, co, Kp, Ap = _head_quantities(n, alpha_val)
    return np.array([
        [-eta2 * co * co * Kp, 1j * eta2 * s * co * Kp, 1j * k * co * Ap],
        [eta2 * s * co * Kp, 1j * eta2 * s * s * Kp, 1j * k * s * Ap],
        [(eta1 - eta2 * co) * Kp, 1j * eta2 * s * Kp, 0.0],
    ], dtype=complex)


def _closed_det_prefactor(n):
    c0, c1 = norm_constant(n, 0), norm_constant(n, 1)
    return ((n + 1) / (2 * n + 1)) ** 3 * n * math.sqrt(n * (n + 1)) / 2 * c1 ** 2 * c0


def closed_det_A_values(n, alpha_val, eta1, k):
    return (-1j * k ** 2 * eta1 * _closed_det_prefactor(n)
            * math.sin(alpha_val * math.pi) ** 2)


def closed_det_B_values(n, alpha_val, eta2, k):
    ap = alpha_val * math.pi
    return (-k * eta2 ** 2 * _closed_det_prefactor(n)
            * math.sin(ap) ** 2 * math.cos(ap) ** 2)


def _require_impimp(config):
    if not (config.bc1.kind == ImpedanceKind.SERIES
            and config.bc2.kind == ImpedanceKind.SERIES):
        raise UnsupportedPairingError(
            "closed determinants are defined for the impedance-impedance case")
    return config.bc1.eta0, config.bc2.eta0


def closed_det_A(n, config):
    """Closed form of det(head block A), impedance-impedance case."""
    eta1, _ = _require_impimp(config)
    return closed_det_A_values(n, config.alpha.value, eta1, config.k)


def closed_det_B(n, config):
    """Closed form of det(head block B), impedance-impedance case."""
    _, eta2 = _require_impimp(config)
    return closed_det_B_values(n, config.alpha.value, eta2, config.k)


def block_det(m, alpha, kind):
    """Cascade block determinants: -2i sin(m alpha pi) or 2 cos(m alpha pi)."""
    if m < 1:
        raise ValueError("block index must be >= 1")
    aval = alpha.value if hasattr(alpha, "value") else float(alpha)
    if kind == "sin":
        return -2j * math.sin(m * aval * math.pi)
    if kind == "cos":
        return 2.0 * math.cos(m * aval * math.pi)
    raise ValueError("kind must be 'sin' or 'cos'")


def _assemble_impimp(n, eff, eta1, eta2, k):
    cols = column_labels(n)
    ix = {c: i for i, c in enumerate(cols)}
    ncols = len(cols)
    rows, tags = edge_rows(n, eff.value, eta1, eta2, k, ix, ncols)
    if n == 1:
        rows.append(head_row(n, eta1, k, ix, ncols))
        tags.append("face1-chain-e2 mu=0")
    else:
        for eta, phase, tag in ((eta1, 0.0, "face1"),
                                (eta2, eff.value * math.pi, "face2")):
            ch, ct = chain_rows(n, eta, k, phase, tag, ix, ncols)
            rows.extend(ch)
            tags.extend(ct)
    return ConstraintSystem(
        n=n, case=CaseKind.IMP_IMP, alpha=eff, columns=cols,
        rows=np.array(rows), provenance=tags, eta1=eta1, eta2=eta2, k=k,
        block_A=head_block_A(n, eff.value, eta1, eta2, k),
        block_B=head_block_B(n, eff.value, eta1, eta2, k))


def _assemble_pecpmc(n, eff):
    """Face 1 PEC, face 2 PMC: leading tangential relations plus the
    second-lowest-order coupling rows."""
    cols = column_labels(n)
    ix = {c: i for i, c in enumerate(cols)}
    ncols = len(cols)
    phase = eff.value * math.pi
    rows, tags = [], []

    def add(entries, tag):
        row = np.zeros(ncols, dtype=complex)
        for col, val in entries:
            row[ix[col]] = val
        rows.append(row)
        tags.append(tag)

    add([(("b", 0), 1.0)], "face1-pec b0")
    add([(("a", 0), 1.0)], "face2-pmc a0")
    for m in range(1, n + 1):
        cm = norm_constant(n, m)
        add([(("b", m), cm), (("b", -m), cm)], f"face1-pec sum m={m}")
        add([(("a", m), cm * cmath.exp(1j * m * phase)),
             (("a", -m), cm * cmath.exp(-1j * m * phase))],
            f"face2-pmc phased-sum m={m}")
        add([(("a", m), 1.0), (("a", -m), -1.0)], f"face1-pec coupling-diff m={m}")
        add([(("b", m), cmath.exp(1j * m * phase)),
             (("b", -m), -cmath.exp(-1j * m * phase))],
            f"face2-pmc coupling-diff m={m}")
    return ConstraintSystem(n=n, case=CaseKind.PEC_PMC, alpha=eff,
                            columns=cols, rows=np.array(rows), provenance=tags)


def reflected_angle(alpha, case):
    """Doubled angle of the reflected configuration, by the four-branch table:
    2a on (0,1/2), 2(1-a) on [1/2,1), 2(a-1) on (1,3/2), 2(2-a) on [3/2,2)."""
    a = alpha.value
    if case == CaseKind.IMP_PMC and not (0 < a < 1):
        raise ValueError("the PMC-impedance pairing is defined for alpha in (0,1)")
    if 0 < a < 0.5:
        val, mapper = 2 * a, (lambda q, p: (2 * q, p))
    elif 0.5 <= a < 1:
        val, mapper = 2 * (1 - a), (lambda q, p: (2 * (p - q), p))
    elif 1 < a < 1.5:
        val, mapper = 2 * (a - 1), (lambda q, p: (2 * (q - p), p))
    elif 1.5 <= a < 2:
        val, mapper = 2 * (2 - a), (lambda q, p: (2 * (2 * p - q), p))
    else:
        raise ValueError(f"angle {a} out of range")
    frac = None
    if alpha.rational is not None:
        nq, np_ = mapper(*alpha.rational)
        g = math.gcd(nq, np_)
        frac = (nq // g, np_ // g)
    return EffectiveAngle(val, frac)


def assemble_order_system(n, config):
    """Full order-n constraint system for the configured boundary pairing."""
    if n < 1:
        raise ValueError("order must be >= 1")
    case = case_of_config(config)
    eff = EffectiveAngle.of(config.alpha)
    if case == CaseKind.IMP_IMP:
        return _assemble_impimp(n, eff, config.bc1.eta0, config.bc2.eta0, config.k)
    if case == CaseKind.PEC_PMC:
        return _assemble_pecpmc(n, eff)
    # mixed pairing: the impedance condition transfers to the mirror plane
    # with the same series, so assemble the impedance-impedance system at the
    # doubled angle with eta on both faces
    eff2 = reflected_angle(config.alpha, case)
    eta = config.bc2.eta0
    system = _assemble_impimp(n, eff2, eta, eta, config.k)
    system.source_case = case
    system.source_alpha = config.alpha
    return system


def _equilibrate(rows, guard=1e-13):
    """Scale columns to unit max magnitude (rank preserving).

    The norm constants weight high orders m by 1/sqrt((n+m)!), so raw columns
    span many decades and a full-rank system can show spurious near-zero
    singular values.  Columns whose maximum falls below guard * (global max)
    are left untouched: those are zero columns up to rounding (genuinely
    unconstrained unknowns) and must keep their zero singular values.  The
    guard is safe for orders n <= 12, where the smallest legitimate column
    scale c_n^n stays above 1e-12 of the largest.
    """
    M = rows.copy()
    g = np.max(np.abs(M))
    if g == 0.0:
        return M
    cs = np.max(np.abs(M), axis=0, keepdims=True)
    cs = np.where(cs > guard * g, cs, 1.0)
    return M / cs


def nullspace_dim(system, tol=1e-9):
    """Number of singular values below tol * s_max, with an ambiguity guard.

    The row matrix is equilibrated first (row/column scaling, which leaves
    the nullspace dimension unchanged).  Relative singular values inside
    (tol/10, tol*10) are neither clearly zero nor clearly nonzero; these
    raise RankAmbiguityError instead of guessing.
    """
    rows = system.rows if isinstance(system, ConstraintSystem) else np.asarray(system)
    s = np.linalg.svd(_equilibrate(rows), compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return rows.shape[1]
    rel = s / s[0]
    band = [float(v) for v in rel if tol / 10.0 < v < tol * 10.0]
    if band:
        order = system.n if isinstance(system, ConstraintSystem) else None
        raise RankAmbiguityError(
            f"singular values {band} within a factor 10 of threshold {tol}",
            order=order, values=band)
    return int(np.sum(rel < tol))


def nullspace_basis(system, tol=1e-9):
    """Orthonormal basis of the (equilibrated) nullspace, columns of shape
    (ncols, dim).  Useful for building fields that satisfy a degenerate
    order-n system."""
    rows = system.rows if isinstance(system, ConstraintSystem) else np.asarray(system)
    dim = nullspace_dim(system, tol=tol)
    if dim == 0:
        return np.zeros((rows.shape[1], 0), dtype=complex)
    _, _, vh = np.linalg.svd(_equilibrate(rows))
    return vh[rows.shape[1] - dim:].conj().T


# ---------------------------------------------------------------------------
# induction driver and report
# ---------------------------------------------------------------------------

@dataclass
class OrderDiagnostics:
    n: int
    nullspace_dim: int
    det_A_closed: Optional[complex] = None
    det_A_numeric: Optional[complex] = None
    det_B_closed: Optional[complex] = None
    det_B_numeric: Optional[complex] = None
    block_dets: List[complex] = field(default_factory=list)  # m = 2..n


@dataclass
class VanishReport:
    alpha: Angle
    case: CaseKind
    per_order: List[OrderDiagnostics]
    order_lower_bound: int
    at_nmax: bool                      # every order up to N_max was trivial
    theorem_bound: Union[int, float]   # int or INFINITE
    n_max: int
    strict_excess: bool = False        # assembled bound strictly exceeds theorem

    def to_json_dict(self):
        per = []
        for d in self.per_order:
            per.append({
                "n": d.n,
                "nullspace_dim": d.nullspace_dim,
                "det_A": None if d.det_A_closed is None
                else [d.det_A_closed.real, d.det_A_closed.imag],
                "det_B": None if d.det_B_closed is None
                else [d.det_B_closed.real, d.det_B_closed.imag],
                "block_dets": [[z.real, z.imag] for z in d.block_dets],
            })
        return {
            "alpha": {"value": self.alpha.value,
                      "rational": list(self.alpha.rational)
                      if self.alpha.rational else None},
            "case": self.case.value,
            "per_order": per,
            "order_lower_bound": "gte_nmax" if self.at_nmax
            else self.order_lower_bound,
            "theorem_bound": "infinite" if self.theorem_bound == INFINITE
            else int(self.theorem_bound),
        }

    @classmethod
    def from_json_dict(cls, data):
        alpha = Angle(value=data["alpha"]["value"],
                      rational=tuple(data["alpha"]["rational"])
                      if data["alpha"]["rational"] else None)
        per = [OrderDiagnostics(
            n=e["n"], nullspace_dim=e["nullspace_dim"],
            det_A_closed=None if e["det_A"] is None else complex(*e["det_A"]),
            det_B_closed=None if e["det_B"] is None else complex(*e["det_B"]),
            block_dets=[complex(re, im) for re, im in e.get("block_dets", [])])
            for e in data["per_order"]]
        n_max = per[-1].n if per else 0
        at_nmax = data["order_lower_bound"] == "gte_nmax"
        bound = n_max if at_nmax else int(data["order_lower_bound"])
        theorem = INFINITE if data["theorem_bound"] == "infinite" \
            else int(data["theorem_bound"])
        excess = theorem != INFINITE and bound > theorem
        return cls(alpha=alpha, case=CaseKind.parse(data["case"]), per_order=per,
                   order_lower_bound=bound, at_nmax=at_nmax, theorem_bound=theorem,
                   n_max=n_max, strict_excess=excess)

    def render(self):
        lines = [f"alpha = {self.alpha}   case = {self.case.value}",
                 f"{'n':>3} {'null dim':>9} {'|det A|':>12} {'|det B|':>12} "
                 f"{'min |block det|':>16}"]
        for d in self.per_order:
            da = "-" if d.det_A_closed is None else f"{abs(d.det_A_closed):.3e}"
            db = "-" if d.det_B_closed is None else f"{abs(d.det_B_closed):.3e}"
            bd = "-" if not d.block_dets \
                else f"{min(abs(z) for z in d.block_dets):.3e}"
            lines.append(f"{d.n:>3} {d.nullspace_dim:>9} {da:>12} {db:>12} {bd:>16}")
        olb = f">= {self.n_max}" if self.at_nmax else str(self.order_lower_bound)
        tb = (f">= {self.n_max} (irrational)" if self.theorem_bound == INFINITE
              else str(int(self.theorem_bound)))
        lines.append(f"order lower bound (assembled systems): {olb}")
        lines.append(f"guaranteed bound (angle grid):         {tb}")
        if self.strict_excess:
            lines.append("note: assembled bound strictly exceeds the guaranteed "
                         "bound (both are lower bounds; excess flagged, not "
                         "asserted sharp)")
        return "\n".join(lines)


# Angles where the first-order head blocks already degenerate (the B-block
# determinant carries sin^2 cos^2): the N = 1 induction step needs these
# excluded even though the stated grids of the N >= 2 steps start later.
_IMPIMP_FIRST_ORDER_EXCEPTIONS = ((1, 2), (3, 2))
_MIXED_FIRST_ORDER_EXCEPTIONS = ((1, 4), (3, 4), (5, 4), (7, 4))


def theorem_bound(alpha, case, n_max):
    """Largest N for which the angle avoids the case's exclusion grid.

    Returns INFINITE for angles without a rational tag; n_max means the scan
    reached its horizon without a hit (read: ">= n_max").
    """
    if case == CaseKind.IMP_PMC and not (0 < alpha.value < 1):
        raise ValueError("the PMC-impedance pairing is defined for alpha in (0,1)")
    if alpha.rational is None:
        return INFINITE
    if case == CaseKind.IMP_IMP:
        if any(alpha.equals_fraction(q, p)
               for q, p in _IMPIMP_FIRST_ORDER_EXCEPTIONS):
            return 0
        return grid_exclusion_order(alpha, "qp", n_max)
    if case in (CaseKind.IMP_PEC, CaseKind.IMP_PMC):
        if any(alpha.equals_fraction(q, p)
               for q, p in _MIXED_FIRST_ORDER_EXCEPTIONS):
            return 0
        return grid_exclusion_order(alpha, "q2p", n_max)
    if case == CaseKind.PEC_PMC:
        return grid_exclusion_order(alpha, "q2p", n_max)
    raise UnsupportedPairingError(str(case))


def vanishing_order(config, n_max, tol=1e-9):
    """Per-order nullspace analysis for n = 1..n_max plus the grid bound.

    Each order is analyzed independently, exactly as the induction does (the
    hypothesis that all lower orders vanish is structural, so no cross-order
    rows appear).  order_lower_bound is the largest n0 with trivial nullspace
    at every order n <= n0.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    case = case_of_config(config)
    per = []
    bound = 0
    failed = False
    for n in range(1, n_max + 1):
        system = assemble_order_system(n, config)
        try:
            dim = nullspace_dim(system, tol=tol)
        except RankAmbiguityError as exc:
            raise RankAmbiguityError(str(exc), order=n, values=exc.values) from exc
        diag = OrderDiagnostics(n=n, nullspace_dim=dim)
        if system.block_A is not None:
            diag.det_A_numeric = complex(np.linalg.det(system.block_A))
            diag.det_B_numeric = complex(np.linalg.det(system.block_B))
            diag.det_A_closed = closed_det_A_values(n, system.alpha.value,
                                                    system.eta1, system.k)
            diag.det_B_closed = closed_det_B_values(n, system.alpha.value,
                                                    system.eta2, system.k)
        kind = "cos" if case == CaseKind.PEC_PMC else "sin"
        diag.block_dets = [block_det(m, system.alpha, kind)
                           for m in range(2, n + 1)]
        per.append(diag)
        if dim == 0 and not failed:
            bound = n
        elif dim > 0:
            failed = True
    tb = theorem_bound(config.alpha, case, n_max)
    at_nmax = (bound == n_max)
    excess = tb != INFINITE and bound > tb
    return VanishReport(alpha=config.alpha, case=case, per_order=per,
                        order_lower_bound=bound, at_nmax=at_nmax,
                        theorem_bound=tb, n_max=n_max, strict_excess=excess)
