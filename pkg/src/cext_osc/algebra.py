"""Exact-rational parameters of cyclic-group-extended oscillator algebras.

All scalar data (deformation parameters, structure-function values, level
energies) live in ``fractions.Fraction`` so that equalities used downstream
for degeneracy detection and region classification are decidable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Rational = Fraction
RationalLike = Fraction | int | str


class ExistenceViolation(ValueError):
    """The Fock space does not exist: F(mu) <= 0 for the given subspace index."""

    def __init__(self, mu: int, value: Fraction):
        self.mu = mu
        self.value = value
        super().__init__(f"F({mu}) = {value} <= 0: bosonic Fock space does not exist")


class UnsupportedLambda(ValueError):
    """Operation only defined for a specific cyclic-group order."""


class InadmissibleParams(ValueError):
    """Parameters outside the admissible domain."""


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, float):
        raise TypeError(
            f"refusing float {x!r}: pass Fraction, int, or a 'p/q' string"
        )
    return Fraction(x)


@dataclass(frozen=True)
class AlgebraParams:
    """Parameter vector (alpha_0, ..., alpha_{lambda-1}) with zero sum.

    ``betas[mu]`` is the partial sum ``alpha_0 + ... + alpha_{mu-1}`` (so
    ``betas[0] = 0``); the structure function is ``F(n) = n + betas[n % lam]``.
    Use :func:`new_params` to build from the independent head parameters.
    """

    lam: int
    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]

    def __post_init__(self):
        if self.lam < 2:
            raise InadmissibleParams(f"lambda must be >= 2, got {self.lam}")
        if len(self.alphas) != self.lam or len(self.betas) != self.lam:
            raise InadmissibleParams("alphas/betas length must equal lambda")
        if sum(self.alphas) != 0:
            raise InadmissibleParams(f"sum of alphas must vanish, got {sum(self.alphas)}")
        expect = Fraction(0)
        for mu in range(self.lam):
            if self.betas[mu] != expect:
                raise InadmissibleParams(f"beta_{mu} inconsistent with alphas")
            expect += self.alphas[mu]
        for mu in range(1, self.lam):
            f = mu + self.betas[mu]
            if f <= 0:
                raise ExistenceViolation(mu, f)

    def alpha(self, mu: int) -> Fraction:
        """alpha_mu with the cyclic index convention alpha_mu = alpha_{mu mod lambda}."""
        return self.alphas[mu % self.lam]

    def beta(self, mu: int) -> Fraction:
        return self.betas[mu % self.lam]

    def structure_function(self, n: int) -> Fraction:
        """F(n) = n + beta_{n mod lambda}; solves F(n+1) - F(n) = G(n), F(0) = 0."""
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return n + self.betas[n % self.lam]

    def g_function(self, n: int) -> Fraction:
        """G(n) = 1 + alpha_{n mod lambda}, the deformed commutator eigenvalue."""
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return 1 + self.alphas[n % self.lam]

    def gamma_coeffs(self) -> tuple[Fraction, ...]:
        """Energy offsets per subspace: gamma_mu = (beta_mu + beta_{mu+1}) / 2.

        The wrap-around term uses beta_lambda = 0, which reproduces the
        closed lambda=3 expressions (alpha_0/2, (2 alpha_0 + alpha_1)/2,
        (alpha_0 + alpha_1)/2) exactly.
        """
        betas = self.betas + (Fraction(0),)
        return tuple((betas[mu] + betas[mu + 1]) / 2 for mu in range(self.lam))

    def energy(self, n: int) -> Fraction:
        """Oscillator-Hamiltonian eigenvalue of level n: n + 1/2 + gamma_{n mod lambda}."""
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return n + Fraction(1, 2) + self.gamma_coeffs()[n % self.lam]


def new_params(lam: int, alphas_head: Sequence[RationalLike]) -> AlgebraParams:
    """Build an admissible parameter vector from its lambda-1 free entries.

    The last entry is fixed by the zero-sum constraint; Fock-space existence
    (F(mu) > 0 for mu = 1 .. lambda-1) is validated and the first failing
    subspace reported via :class:`ExistenceViolation`.
    """
    if lam < 2:
        raise InadmissibleParams(f"lambda must be >= 2, got {lam}")
    head = tuple(_as_fraction(a) for a in alphas_head)
    if len(head) != lam - 1:
        raise InadmissibleParams(
            f"expected {lam - 1} head parameters for lambda={lam}, got {len(head)}"
        )
    alphas = head + (-sum(head, Fraction(0)),)
    betas = []
    acc = Fraction(0)
    for mu in range(lam):
        betas.append(acc)
        acc += alphas[mu]
    return AlgebraParams(lam=lam, alphas=alphas, betas=tuple(betas))


@dataclass(frozen=True)
class KappaPair:
    """The complex constant kappa_1 (kappa_2 = kappa_1* implied), lambda = 3.

    The imaginary part carries an irrational factor, so the stored field is
    ``im_kappa1_sqrt3`` = sqrt(3) * Im(kappa_1), keeping the map to the
    alpha parameters rational-exact.
    """

    re_kappa1: Fraction
    im_kappa1_sqrt3: Fraction


def kappa_to_alpha(k: KappaPair) -> AlgebraParams:
    """alpha_0 = 2 Re k1, alpha_1 = -Re k1 - sqrt(3) Im k1 (lambda = 3)."""
    a0 = 2 * k.re_kappa1
    a1 = -k.re_kappa1 - k.im_kappa1_sqrt3
    return new_params(3, [a0, a1])


def alpha_to_kappa(p: AlgebraParams) -> KappaPair:
    """Inverse of :func:`kappa_to_alpha`; defined for lambda = 3 only."""
    if p.lam != 3:
        raise UnsupportedLambda(f"kappa map requires lambda=3, got {p.lam}")
    re = p.alphas[0] / 2
    im_sqrt3 = -p.alphas[1] - re
    return KappaPair(re_kappa1=re, im_kappa1_sqrt3=im_sqrt3)


def format_rational(x: Fraction) -> str:
    """Render as 'p' or 'p/q' for reports and CLI output."""
    return str(x)


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q', integer, or finite-decimal strings without float round-off."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InadmissibleParams(f"cannot parse rational {text!r}") from exc


def floor_fraction(x: Fraction) -> int:
    return math.floor(x)


def ceil_fraction(x: Fraction) -> int:
    return math.ceil(x)
