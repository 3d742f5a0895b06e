from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cext_osc import (
    ExistenceViolation,
    InadmissibleParams,
    KappaPair,
    UnsupportedLambda,
    alpha_to_kappa,
    kappa_to_alpha,
    new_params,
)
from cext_osc.algebra import parse_rational

from conftest import params3


def iterate_structure(alphas, n):
    """Independent oracle: integrate F(k+1) = F(k) + G(k) from F(0) = 0."""
    lam = len(alphas)
    f = Fraction(0)
    for k in range(n):
        f += 1 + alphas[k % lam]
    return f


def admissible_heads(max_mag=20):
    a0 = st.fractions(min_value=Fraction(-1), max_value=max_mag, max_denominator=9)
    return a0.flatmap(
        lambda x: st.tuples(
            st.just(x),
            st.fractions(min_value=-2 - x, max_value=max_mag, max_denominator=9),
        )
    ).filter(lambda t: t[0] > -1 and t[1] > -2 - t[0])


class TestConstruction:
    def test_harmonic(self):
        p = new_params(3, [0, 0])
        assert p.alphas == (0, 0, 0)
        assert p.betas == (0, 0, 0)

    def test_figure_point(self):
        p = params3(0, 6)
        assert p.alphas == (0, 6, -6)
        assert p.betas == (0, 0, 6)

    def test_existence_violation_names_first_mu(self):
        with pytest.raises(ExistenceViolation) as exc:
            new_params(3, [-1, 0])
        assert exc.value.mu == 1

    def test_existence_second_subspace(self):
        with pytest.raises(ExistenceViolation) as exc:
            new_params(3, [0, -3])
        assert exc.value.mu == 2

    def test_lambda_too_small(self):
        with pytest.raises(InadmissibleParams):
            new_params(1, [])

    def test_head_length_checked(self):
        with pytest.raises(InadmissibleParams):
            new_params(3, [1])

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            new_params(3, [0.5, 0])

    def test_general_lambda(self):
        p = new_params(5, [1, Fraction(1, 2), 0, Fraction(-1, 2)])
        assert sum(p.alphas) == 0
        assert len(p.betas) == 5


class TestStructureFunction:
    def test_undeformed(self):
        p = new_params(3, [0, 0])
        assert p.structure_function(5) == 5

    @pytest.mark.parametrize("n,expected", [(2, 8), (3, 3)])
    def test_deformed_against_iteration(self, n, expected):
        p = params3(0, 6)
        assert iterate_structure(p.alphas, n) == expected
        assert p.structure_function(n) == expected

    def test_g_values(self):
        p = params3(0, 6)
        assert p.g_function(7) == 1 + p.alphas[1]
        assert p.g_function(1) == 7 == p.structure_function(2) - p.structure_function(1)
        assert p.g_function(2) == -5 == p.structure_function(3) - p.structure_function(2)

    @given(admissible_heads(), st.integers(min_value=0, max_value=40))
    def test_difference_law(self, head, n):
        p = new_params(3, list(head))
        assert p.structure_function(0) == 0
        assert p.structure_function(n + 1) - p.structure_function(n) == p.g_function(n)
        assert p.structure_function(n) == iterate_structure(p.alphas, n)


class TestGammaAndEnergy:
    def test_gamma_trivial(self):
        assert new_params(3, [0, 0]).gamma_coeffs() == (0, 0, 0)

    def test_gamma_examples(self):
        assert params3(0, 6).gamma_coeffs() == (0, 3, 3)
        assert params3(10, 4).gamma_coeffs() == (5, 12, 7)

    def test_gamma_closed_form(self):
        p = params3(10, 4)
        a0, a1 = p.alphas[0], p.alphas[1]
        assert p.gamma_coeffs() == (a0 / 2, (2 * a0 + a1) / 2, (a0 + a1) / 2)

    def test_energy_examples(self):
        assert new_params(3, [0, 0]).energy(4) == Fraction(9, 2)
        assert params3(0, 6).energy(0) == Fraction(1, 2)
        assert params3(0, 6).energy(1) == Fraction(9, 2)

    @given(admissible_heads(), st.integers(min_value=0, max_value=40))
    def test_energy_is_structure_midpoint(self, head, n):
        p = new_params(3, list(head))
        mid = (p.structure_function(n) + p.structure_function(n + 1)) / 2
        assert p.energy(n) == mid

    @given(admissible_heads())
    def test_gamma_alternating_identity(self, head):
        g = new_params(3, list(head)).gamma_coeffs()
        assert g[0] - g[1] + g[2] == 0

    def test_energy_midpoint_general_lambda(self):
        p = new_params(4, [Fraction(1, 3), Fraction(-1, 4), 2])
        for n in range(12):
            mid = (p.structure_function(n) + p.structure_function(n + 1)) / 2
            assert p.energy(n) == mid


class TestKappaMap:
    def test_zero(self):
        p = kappa_to_alpha(KappaPair(Fraction(0), Fraction(0)))
        assert p.alphas == (0, 0, 0)

    def test_figure_inversion(self):
        k = alpha_to_kappa(params3(0, 6))
        assert k.re_kappa1 == 0
        assert k.im_kappa1_sqrt3 == -6

    def test_fig7_inversion(self):
        k = alpha_to_kappa(params3(2, 8))
        assert k.re_kappa1 == 1
        assert k.im_kappa1_sqrt3 == -9

    @given(admissible_heads())
    def test_round_trip(self, head):
        p = new_params(3, list(head))
        assert kappa_to_alpha(alpha_to_kappa(p)) == p

    def test_rejects_other_lambda(self):
        with pytest.raises(UnsupportedLambda):
            alpha_to_kappa(new_params(2, [Fraction(1, 2)]))


class TestRationalParsing:
    @pytest.mark.parametrize("text,expected", [
        ("1/3", Fraction(1, 3)),
        ("-7/2", Fraction(-7, 2)),
        ("4", Fraction(4)),
        ("0.25", Fraction(1, 4)),
    ])
    def test_exact(self, text, expected):
        assert parse_rational(text) == expected

    def test_bad_input(self):
        with pytest.raises(InadmissibleParams):
            parse_rational("one half")
