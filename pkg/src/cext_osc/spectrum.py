"""Exact spectrum analysis of the bosonic oscillator Hamiltonian.

Level energies are rational, so degeneracy means rational equality, never an
epsilon test. For lambda = 3 the full named taxonomy of spectrum types is
decided by integer/rational window arithmetic on (alpha_0, alpha_1); an
energy-sorting oracle provides the independent cross-check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import AlgebraParams, UnsupportedLambda, new_params

NONDEG_VARIANTS = ("1", "2")
DEG_VARIANTS = ("a", "b", "c", "abc")


class NotPeriodic(ValueError):
    """The sorted spectrum prefix is not periodically spaced with period lambda."""


@dataclass(frozen=True)
class Level:
    index: int
    energy: Fraction
    subspace: int


@dataclass(frozen=True)
class DegeneracyPattern:
    """Levels of a spectrum prefix grouped by exact energy, ascending."""

    groups: tuple[tuple[Fraction, tuple[int, ...]], ...]
    prefix: int

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(g[1]) for g in self.groups)


@dataclass(frozen=True)
class PatternDescriptor:
    """Parameter-free shape of a spectrum prefix: per-group sorted level indices.

    Two parameter points share a descriptor iff their first ``prefix`` levels
    interleave and degenerate identically.
    """

    lam: int
    groups: tuple[tuple[int, ...], ...]

    @property
    def prefix(self) -> int:
        return sum(len(g) for g in self.groups)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.groups)

    @property
    def index_order(self) -> tuple[int, ...]:
        return tuple(i for g in self.groups for i in g)

    def subspace_multisets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(i % self.lam for i in g)) for g in self.groups)


@dataclass(frozen=True)
class SpectrumType:
    """One label of the closed lambda=3 taxonomy, with its integer indices.

    family "I" carries a single index n (m is None); families "II" and "III"
    carry (m, n). variant is "1"/"2" for nondegenerate subclasses, "a"/"b"/"c"
    for the doubly-degenerate types, "abc" for the triply-degenerate ones.
    """

    family: str
    variant: str
    n: int
    m: int | None = None

    def __post_init__(self):
        if self.family not in ("I", "II", "III"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.variant not in NONDEG_VARIANTS + DEG_VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.n < 1:
            raise ValueError(f"index n must be >= 1, got {self.n}")
        if self.family == "I":
            if self.m is not None:
                raise ValueError("family I has no m index")
        elif self.m is None or self.m < 1:
            raise ValueError(f"family {self.family} needs m >= 1, got {self.m}")

    @property
    def label(self) -> str:
        if self.family == "I":
            if self.variant in NONDEG_VARIANTS:
                return f"I.{self.variant}.{self.n}"
            return f"I.{self.n}.{self.variant}"
        if self.variant in NONDEG_VARIANTS:
            return f"{self.family}.{self.variant}.{self.m}.{self.n}"
        return f"{self.family}.{self.m}.{self.n}.{self.variant}"

    def __str__(self) -> str:
        return self.label


def levels(p: AlgebraParams, count: int) -> list[Level]:
    """First ``count`` levels in index order (not energy order)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return [
        Level(index=n, energy=p.energy(n), subspace=n % p.lam)
        for n in range(count)
    ]


def degeneracy_pattern(p: AlgebraParams, count: int) -> DegeneracyPattern:
    """Group the first ``count`` levels by exact energy, ascending."""
    by_energy: dict[Fraction, list[int]] = {}
    for lv in levels(p, count):
        by_energy.setdefault(lv.energy, []).append(lv.index)
    groups = tuple(
        (e, tuple(sorted(by_energy[e]))) for e in sorted(by_energy)
    )
    return DegeneracyPattern(groups=groups, prefix=count)


def classify_oracle(p: AlgebraParams, count: int = 30) -> PatternDescriptor:
    """Brute-force shape descriptor: sort exact energies, group exact ties.

    Makes no use of the classification windows; exists to cross-validate
    :func:`classify3` (and as the only classifier for lambda != 3).
    """
    pat = degeneracy_pattern(p, count)
    return PatternDescriptor(lam=p.lam, groups=tuple(g for _, g in pat.groups))


def classify3(p: AlgebraParams) -> SpectrumType:
    """Assign the unique lambda=3 taxonomy label by exact window arithmetic.

    Steps: (i) the ground-level comparison splits the admissible plane into
    the three general classes and the two boundary lines between them;
    (ii) rational inequalities locate the integer indices; (iii) equality on
    a window boundary selects the degenerate variant.
    """
    if p.lam != 3:
        raise UnsupportedLambda(f"named taxonomy requires lambda=3, got {p.lam}")
    a0, a1 = p.alphas[0], p.alphas[1]

    if a0 < 2:
        # class I: E0 < E1 < E2. The n-th cell is 6n - a0 - 8 < a1 <= 6n - a0 - 2.
        n = math.ceil((a0 + a1 + 2) / 6)
        assert n >= 1
        if a1 == 6 * n - a0 - 2:
            return SpectrumType("I", "a", n=n)
        if a1 == 6 * n - 4:
            return SpectrumType("I", "b", n=n)
        return SpectrumType("I", "1" if a1 < 6 * n - 4 else "2", n=n)

    if a1 >= -4:
        # class II plus its feeding boundary lines (a0 = 2 and a1 = -4).
        # Columns a0 = 6c + 2 host the c-types (m = c + 1) and, jointly with
        # rows a1 = 6r - 10, the triply-degenerate points.
        col = (a0 - 2) / 6
        row = (a1 + 10) / 6
        if col.denominator == 1 and row.denominator == 1:
            c, r = int(col), int(row)
            if c == 0:
                assert r >= 2
                return SpectrumType("I", "abc", n=r - 1)
            return SpectrumType("II", "abc", m=c, n=r)
        if col.denominator == 1:
            return SpectrumType("II", "c", m=int(col) + 1, n=math.floor(row))
        m = math.floor((a0 + 4) / 6)
        assert m >= 1
        if row.denominator == 1:
            return SpectrumType("II", "b", m=m, n=int(row))
        n = math.floor(row)
        a_line = 6 * m + 6 * n - a0 - 8
        if a1 == a_line:
            return SpectrumType("II", "a", m=m, n=n)
        return SpectrumType("II", "1" if a1 < a_line else "2", m=m, n=n)

    # class III: a0 > 2 and -2 - a0 < a1 < -4. Strips in a1 are separated by
    # the b-lines a1 = -4 - 6n; bands in a0 by the c-lines a0 = 6s - 4.
    w = (-4 - a1) / 6
    on_b = w.denominator == 1
    n = int(w) if on_b else math.floor(w) + 1
    sfrac = (a0 + 4) / 6
    on_c = sfrac.denominator == 1
    s = int(sfrac) if on_c else math.floor(sfrac)
    if on_c and on_b:
        assert s - 1 - n >= 1
        return SpectrumType("III", "abc", m=s - 1 - n, n=n)
    if on_c:
        assert s - n >= 1
        return SpectrumType("III", "c", m=s - n, n=n)
    if on_b:
        assert s - n >= 1
        return SpectrumType("III", "b", m=s - n, n=n)
    a_line = 6 * (s - n) - a0 - 2
    if a1 == a_line:
        assert s - n >= 1
        return SpectrumType("III", "a", m=s - n, n=n)
    if a1 < a_line:
        assert s - n >= 1
        return SpectrumType("III", "2", m=s - n, n=n)
    assert s - n + 1 >= 1
    return SpectrumType("III", "1", m=s - n + 1, n=n)


def representative_params(t: SpectrumType) -> AlgebraParams:
    """A canonical interior point of the parameter window carrying label ``t``.

    Every window is a product of the printed exact inequalities, so a fixed
    rational choice along each free direction lands strictly inside (or, for
    degenerate variants, exactly on the defining line/point).
    """
    n = Fraction(t.n)
    m = Fraction(t.m) if t.m is not None else None
    if t.family == "I":
        table = {
            "1": (Fraction(1, 2), 6 * n - 6),
            "2": (Fraction(1, 2), 6 * n - Fraction(13, 4)),
            "a": (Fraction(1, 2), 6 * n - Fraction(5, 2)),
            "b": (Fraction(1, 2), 6 * n - 4),
            "abc": (Fraction(2), 6 * n - 4),
        }
    elif t.family == "II":
        table = {
            "1": (6 * m - 1, 6 * n - Fraction(17, 2)),
            "2": (6 * m - 1, 6 * n - Fraction(11, 2)),
            "a": (6 * m - 1, 6 * n - 7),
            "b": (6 * m - 1, 6 * n - 10),
            "c": (6 * m - 4, 6 * n - 7),
            "abc": (6 * m + 2, 6 * n - 10),
        }
    else:
        table = {
            "1": (6 * m + 6 * n - 7, Fraction(1, 2) - 6 * n),
            "2": (6 * m + 6 * n - 1, -6 * n - Fraction(5, 2)),
            "a": (6 * m + 6 * n - 1, -6 * n - 1),
            "b": (6 * m + 6 * n - 1, -6 * n - 4),
            "c": (6 * m + 6 * n - 4, -6 * n - 1),
            "abc": (6 * m + 6 * n + 2, -6 * n - 4),
        }
    a0, a1 = table[t.variant]
    return new_params(3, [a0, a1])


@lru_cache(maxsize=4096)
def expected_prefix(t: SpectrumType, count: int = 30) -> PatternDescriptor:
    """The level-index interleaving that label ``t`` prescribes for its window.

    Evaluated at the canonical window point; the ordering and tie structure
    of exact energies is constant across each window, so this is the exact
    chain the taxonomy prints for ``t``.
    """
    return classify_oracle(representative_params(t), count)


@dataclass(frozen=True)
class PeriodReport:
    """Cyclic spacing structure of a nondegenerate spectrum prefix."""

    omegas: tuple[Fraction, ...]
    ground_order: tuple[int, ...]

    @property
    def big_omega(self) -> Fraction:
        return sum(self.omegas, Fraction(0))


def period3_omegas(p: AlgebraParams, t: SpectrumType) -> tuple[Fraction, ...]:
    """Closed-form level spacings for the three period-three labels."""
    a0, a1 = p.alphas[0], p.alphas[1]
    if t == SpectrumType("I", "1", n=1):
        return ((a0 + a1 + 2) / 2, (2 - a0) / 2, (2 - a1) / 2)
    if t == SpectrumType("II", "1", n=1, m=1):
        return ((a1 + 4) / 2, (a0 - 2) / 2, (4 - a0 - a1) / 2)
    if t == SpectrumType("III", "1", n=1, m=1):
        return ((-a1 - 4) / 2, (a0 + a1 + 2) / 2, (8 - a0) / 2)
    raise ValueError(f"no closed-form spacings for {t.label}")


def detect_period(p: AlgebraParams, count: int = 30) -> PeriodReport:
    """Detect period-lambda spacing of the sorted spectrum prefix.

    Requires all ``count`` energies distinct and the consecutive spacings to
    repeat with period lambda, all positive; otherwise raises
    :class:`NotPeriodic`. For lambda=3 the result is cross-checked against
    the closed-form spacings of the periodic taxonomy labels.
    """
    lam = p.lam
    if count < 3 * lam:
        raise ValueError(f"count must be >= {3 * lam}")
    energies = sorted(p.energy(n) for n in range(count))
    spacings = [b - a for a, b in zip(energies, energies[1:])]
    if any(s == 0 for s in spacings):
        raise NotPeriodic("spectrum prefix contains exact degeneracies")
    for i, s in enumerate(spacings):
        if s <= 0 or spacings[i % lam] != s:
            raise NotPeriodic("spacings do not repeat with the cyclic period")
    omegas = tuple(spacings[:lam])
    ground_order = tuple(sorted(range(lam), key=lambda mu: p.energy(mu)))
    if lam == 3:
        closed = period3_omegas(p, classify3(p))
        assert omegas == closed, "period detector disagrees with closed forms"
    return PeriodReport(omegas=omegas, ground_order=ground_order)


def susy_window(p: AlgebraParams) -> bool:
    """True iff every spacing 1 + alpha_mu is positive.

    Equivalent to the printed chain of parameter restrictions for the
    supersymmetric hierarchy at any lambda.
    """
    return all(1 + a > 0 for a in p.alphas)


def lowest_double_position(t: SpectrumType) -> int:
    """1-based position of the lowest doubly-degenerate group for a/b/c types."""
    if t.variant not in ("a", "b", "c"):
        raise ValueError(f"{t.label} has no doubly-degenerate level")
    n, m = t.n, t.m
    if t.family == "I":
        return n + 1 if t.variant == "a" else n + 2
    if t.family == "II":
        return {"a": 2 * m + n, "b": n, "c": 2 * m + n - 1}[t.variant]
    return {"a": 2 * m + n + 1, "b": n + 1, "c": 2 * m + n}[t.variant]


def random_admissible_params(
    rng: random.Random,
    lam: int = 3,
    max_numer: int = 30,
    max_denom: int = 12,
) -> AlgebraParams:
    """Draw a uniform-ish random admissible rational parameter vector."""
    while True:
        head = []
        lo = Fraction(-1)
        ok = True
        for mu in range(lam - 1):
            q = rng.randint(1, max_denom)
            lo_int = math.floor(lo * q)
            a = Fraction(rng.randint(lo_int, max_numer * q), q)
            # existence needs F(mu+1) = mu + 1 + sum(head) + a > 0
            if mu + 1 + sum(head, Fraction(0)) + a <= 0:
                ok = False
                break
            head.append(a)
            lo = -Fraction(mu + 2) - sum(head, Fraction(0))
        if not ok:
            continue
        try:
            return new_params(lam, head)
        except ValueError:
            continue
