"""Chessboard Goeritz forms, exact definiteness, slopes, and identity checks.

The form attached to a color class is built from that class's regions
``R_0 .. R_m``: for ``i != j`` the entry ``x_ij`` is ``-sum(eta(c))`` over
crossings whose same-color corner pair joins ``R_i`` and ``R_j``, diagonal
entries make every row sum to zero, and row/column 0 is deleted.  The
crossing sign ``eta(c)`` is ``+1`` when the color's two corners at ``c``
sit counterclockwise-after the understrand darts and ``-1`` otherwise;
this normalization makes the 3-region class of the right-handed trefoil
produce ``[[2, -1], [-1, 2]]``.

A form built from the regions of one color represents the pairing on the
first homology of the chessboard surface of the *opposite* color; the
dimensions match because a connected ``r``-region chessboard on an
``n``-crossing diagram has first Betti number ``n - r + 1``.

All arithmetic is exact: signatures come from a rational symmetric
congruence diagonalization with symmetric pivot swaps and hyperbolic
2x2 steps, never from floating point.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .diagram import (
    Color,
    Coloring,
    Diagram,
    PreconditionFailed,
    color_chessboard,
    crossing_signs,
    is_alternating,
    is_reduced,
    writhe,
)


class NotConnectedDiagram(Exception):
    pass


class DisconnectedChessboard(Exception):
    pass


class NotAlternating(Exception):
    pass


class Definiteness(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    INDEFINITE = "indefinite"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class SymmetricIntForm:
    """A symmetric integer matrix; dimension 0 is the empty form."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = len(self.entries)
        for row in self.entries:
            if len(row) != m:
                raise ValueError("entries must be square")
        for i in range(m):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"entries not symmetric at ({i}, {j})")

    @staticmethod
    def from_rows(rows) -> "SymmetricIntForm":
        return SymmetricIntForm(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def determinant(self) -> int:
        """Exact determinant (empty form has determinant 1)."""
        a = [[Fraction(x) for x in row] for row in self.entries]
        m = self.dim
        det = Fraction(1)
        for k in range(m):
            piv = next((i for i in range(k, m) if a[i][k] != 0), None)
            if piv is None:
                return 0
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                det = -det
            det *= a[k][k]
            for i in range(k + 1, m):
                factor = a[i][k] / a[k][k]
                for j in range(k, m):
                    a[i][j] -= factor * a[k][j]
        assert det.denominator == 1
        return int(det)

    def evaluate(self, v: tuple[int, ...]) -> int:
        """Self-pairing of the integer vector ``v``."""
        return sum(
            v[i] * self.entries[i][j] * v[j]
            for i in range(self.dim)
            for j in range(self.dim)
        )


def signature(f: SymmetricIntForm) -> tuple[int, int, int]:
    """Inertia ``(positive, negative, zero)`` of the real form, exactly.

    Symmetric congruence diagonalization over the rationals.  A zero
    diagonal with a nonzero off-diagonal entry is handled as a hyperbolic
    pair contributing (+1, -1).
    """
    m = f.dim
    a = [[Fraction(x) for x in row] for row in f.entries]
    pos = neg = zero = 0

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]

    k = 0
    while k < m:
        piv = next((i for i in range(k, m) if a[i][i] != 0), None)
        if piv is not None:
            if piv != k:
                swap(k, piv)
            d = a[k][k]
            if d > 0:
                pos += 1
            else:
                neg += 1
            for i in range(k + 1, m):
                for j in range(k + 1, m):
                    a[i][j] -= a[i][k] * a[k][j] / d
            k += 1
            continue
        off = next(
            ((i, j) for i in range(k, m) for j in range(i + 1, m) if a[i][j] != 0),
            None,
        )
        if off is None:
            zero += m - k
            break
        i0, j0 = off
        if i0 != k:
            swap(k, i0)
        if j0 != k + 1:
            swap(k + 1, j0)
        b = a[k][k + 1]
        pos += 1
        neg += 1
        for i in range(k + 2, m):
            for j in range(k + 2, m):
                a[i][j] -= (a[i][k] * a[k + 1][j] + a[i][k + 1] * a[k][j]) / b
        k += 2
    return pos, neg, zero


def definiteness(f: SymmetricIntForm) -> Definiteness:
    """Exact classification of the real signature.

    The empty form is classified Positive by convention; it only arises
    from chessboards that are disks.
    """
    if f.dim == 0:
        return Definiteness.POSITIVE
    pos, neg, zero = signature(f)
    if zero > 0:
        return Definiteness.DEGENERATE
    if pos == f.dim:
        return Definiteness.POSITIVE
    if neg == f.dim:
        return Definiteness.NEGATIVE
    return Definiteness.INDEFINITE


# --------------------------------------------------------------------------
# chessboard forms


def _eta(d: Diagram, coloring: Coloring, color: Color, crossing: int) -> int:
    """Goeritz crossing sign for the chosen shading."""
    base = 4 * crossing
    k = next(
        k for k in (0, 1) if coloring.color_of_dart(base + k) is color
    )
    return 1 if not d.is_over_dart(base + k) else -1


def _color_diagonal(
    coloring: Coloring, color: Color, crossing: int
) -> tuple[int, int]:
    """Region ids of the two same-color corners at a crossing."""
    base = 4 * crossing
    k = next(k for k in (0, 1) if coloring.regions[
        coloring.region_of_dart[base + k]].color is color)
    return (coloring.region_of_dart[base + k],
            coloring.region_of_dart[base + k + 2])


def goeritz_matrix(d: Diagram, coloring: Coloring, color: Color) -> SymmetricIntForm:
    """The Goeritz form built from the regions of the given color.

    Raises NotConnectedDiagram for the (defensively checked) disconnected
    case; construction already rejects split diagrams.
    """
    if d.n == 0:
        raise NotConnectedDiagram("empty diagram")
    region_ids = [r.id for r in coloring.regions_of(color)]
    index = {rid: i for i, rid in enumerate(region_ids)}
    m = len(region_ids)
    pre = [[0] * m for _ in range(m)]
    for c in range(d.n):
        i, j = (index[r] for r in _color_diagonal(coloring, color, c))
        if i == j:
            continue
        e = _eta(d, coloring, color, c)
        pre[i][j] -= e
        pre[j][i] -= e
    for i in range(m):
        pre[i][i] = -sum(pre[i][j] for j in range(m) if j != i)
    return SymmetricIntForm.from_rows(
        [row[1:] for row in pre[1:]]
    )


def _chessboard_connected(d: Diagram, coloring: Coloring, color: Color) -> bool:
    region_ids = [r.id for r in coloring.regions_of(color)]
    parent = {rid: rid for rid in region_ids}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in range(d.n):
        i, j = _color_diagonal(coloring, color, c)
        parent[find(i)] = find(j)
    return len({find(r) for r in region_ids}) == 1


def beta1_chessboard(d: Diagram, coloring: Coloring, color: Color) -> int:
    """First Betti number of the chessboard surface of the given color."""
    if not _chessboard_connected(d, coloring, color):
        raise DisconnectedChessboard(f"{color.value} chessboard is not connected")
    r = coloring.count(color)
    b1 = d.n - r + 1
    # the same surface is presented by the form built from the other color
    assert b1 == goeritz_matrix(d, coloring, color.opposite()).dim
    return b1


@dataclass(frozen=True)
class ChessboardSummary:
    """One chessboard surface with its form, relabeled by sign.

    ``color`` is the sign-based name: Black is the positive-definite
    chessboard, White the negative-definite one (for reduced alternating
    diagrams exactly one labeling works).  ``anchor_color`` records which
    raw coloring class the surface came from.
    """

    color: Color
    anchor_color: Color
    beta1: int
    form: SymmetricIntForm
    definiteness: Definiteness
    slope: int


def chessboard_summaries(d: Diagram) -> tuple[ChessboardSummary, ChessboardSummary]:
    """Summaries ``(B, W)`` with B the positive-definite chessboard.

    Requires a connected alternating diagram whose two forms are definite
    of opposite signs.
    """
    if not is_alternating(d):
        raise NotAlternating("chessboard summaries need an alternating diagram")
    coloring = color_chessboard(d)
    form_of_surface = {
        color: goeritz_matrix(d, coloring, color.opposite())
        for color in (Color.BLACK, Color.WHITE)
    }
    defs = {color: definiteness(f) for color, f in form_of_surface.items()}
    by_def = {v: k for k, v in defs.items()}
    if set(defs.values()) != {Definiteness.POSITIVE, Definiteness.NEGATIVE}:
        raise PreconditionFailed(
            "definite_dichotomy",
            f"chessboard forms are {defs[Color.BLACK].value}/{defs[Color.WHITE].value}, "
            "expected one positive and one negative",
        )
    signs = crossing_signs(d)
    positive = sum(1 for s in signs.values() if s > 0)
    negative = sum(1 for s in signs.values() if s < 0)
    s_b, s_w = 2 * positive, -2 * negative

    def summary(label: Color, anchor: Color, slope: int) -> ChessboardSummary:
        return ChessboardSummary(
            color=label,
            anchor_color=anchor,
            beta1=beta1_chessboard(d, coloring, anchor),
            form=form_of_surface[anchor],
            definiteness=defs[anchor],
            slope=slope,
        )

    b = summary(Color.BLACK, by_def[Definiteness.POSITIVE], s_b)
    w = summary(Color.WHITE, by_def[Definiteness.NEGATIVE], s_w)
    assert b.beta1 == b.form.dim and w.beta1 == w.form.dim
    return b, w


def slopes(d: Diagram) -> tuple[int, int]:
    """Chessboard slopes ``(s_B, s_W)`` from the crossing signs.

    ``s_B = 2 * (#positive crossings)`` and ``s_W = -2 * (#negative)``,
    with B the positive-definite chessboard.  Postconditions
    ``(s_B - s_W) / 2 == n`` and ``(s_B + s_W) / 2 == writhe`` are checked.
    """
    b, w = chessboard_summaries(d)
    s_b, s_w = b.slope, w.slope
    assert (s_b - s_w) // 2 == d.n
    assert (s_b + s_w) // 2 == writhe(d)
    return s_b, s_w


# --------------------------------------------------------------------------
# identity checks


@dataclass(frozen=True)
class CheckResult:
    check: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"check": self.check, "pass": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _has_unit_self_pairing(f: SymmetricIntForm, bound: int = 2) -> bool:
    """Bounded search for an integer vector with self-pairing +-1.

    Conclusive positives only; vectors range over [-bound, bound]^dim.
    """
    if f.dim == 0:
        return False
    if any(abs(f.entries[i][i]) == 1 for i in range(f.dim)):
        return True
    vec = [-bound] * f.dim

    def step() -> bool:
        for i in range(f.dim):
            if vec[i] < bound:
                vec[i] += 1
                for j in range(i):
                    vec[j] = -bound
                return True
        return False

    while True:
        if any(vec) and abs(f.evaluate(tuple(vec))) == 1:
            return True
        if not step():
            return False


def check_identities(d: Diagram) -> ValidationReport:
    """Validate the slope, definiteness, and reducedness identities.

    Failures are reported, not raised.  Checks: (a) the two chessboard
    forms are definite of opposite signs; (b) the slope difference equals
    twice the sum of the Betti numbers; (c) for reduced diagrams the slope
    difference equals twice the crossing count; (d) the diagram is reduced
    and neither form represents +-1 (bounded search); (e) both forms have
    the same determinant up to sign.
    """
    if not is_alternating(d):
        raise NotAlternating("identity checks are stated for alternating diagrams")
    coloring = color_chessboard(d)
    form_black_surface = goeritz_matrix(d, coloring, Color.WHITE)
    form_white_surface = goeritz_matrix(d, coloring, Color.BLACK)
    def_black = definiteness(form_black_surface)
    def_white = definiteness(form_white_surface)
    checks: list[CheckResult] = []

    dichotomy = {def_black, def_white} == {
        Definiteness.POSITIVE,
        Definiteness.NEGATIVE,
    }
    checks.append(CheckResult(
        "definite_dichotomy",
        dichotomy,
        f"anchor-black surface {def_black.value}, anchor-white surface {def_white.value}",
    ))

    signs = crossing_signs(d)
    s_b = 2 * sum(1 for s in signs.values() if s > 0)
    s_w = -2 * sum(1 for s in signs.values() if s < 0)
    try:
        beta_sum = (beta1_chessboard(d, coloring, Color.BLACK)
                    + beta1_chessboard(d, coloring, Color.WHITE))
        beta_ok = s_b - s_w == 2 * beta_sum
        beta_detail = f"s_B - s_W = {s_b - s_w}, 2(beta1+beta1) = {2 * beta_sum}"
    except DisconnectedChessboard as exc:
        beta_ok, beta_detail = False, str(exc)
    checks.append(CheckResult("slope_betti_sum", beta_ok, beta_detail))

    reduced = is_reduced(d)
    if reduced:
        checks.append(CheckResult(
            "slope_crossing_count",
            s_b - s_w == 2 * d.n,
            f"s_B - s_W = {s_b - s_w}, 2n = {2 * d.n}",
        ))
    else:
        checks.append(CheckResult(
            "slope_crossing_count", True, "not applicable: diagram not reduced"))

    unit = (_has_unit_self_pairing(form_black_surface)
            or _has_unit_self_pairing(form_white_surface))
    checks.append(CheckResult(
        "reduced_no_unit_self_pairing",
        reduced and not unit,
        f"reduced={reduced}, unit self-pairing found={unit} "
        "(bounded search over entries in [-2, 2])",
    ))

    det_b = form_black_surface.determinant()
    det_w = form_white_surface.determinant()
    checks.append(CheckResult(
        "determinants_agree",
        abs(det_b) == abs(det_w),
        f"|det| = {abs(det_b)} vs {abs(det_w)}",
    ))
    return ValidationReport(tuple(checks))


def link_determinant(d: Diagram) -> int:
    """The link determinant, as the absolute Goeritz determinant."""
    coloring = color_chessboard(d)
    return abs(goeritz_matrix(d, coloring, Color.BLACK).determinant())
