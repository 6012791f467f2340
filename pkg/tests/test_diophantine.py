import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selli_cert.diophantine import (
    DioParams,
    Mod4Tables,
    bounded_search,
    eval_equation,
    eval_lhs,
    mod4_obstruction,
    obstruction_sweep,
    parity_claim_check,
    qr_law_check,
    residue_obstruction,
    search_box,
    validate_dio_params,
)
from selli_cert.errors import BudgetExceededError, HypothesisError, ParameterError

PARAM_TRIPLES = [(13, 3, 2), (25, 3, 4), (37, 3, 2)]


def test_validate_derives_b():
    assert validate_dio_params(13, 3, 2).b == 101
    assert validate_dio_params(25, 3, 4).b == 197
    assert validate_dio_params(37, 3, 2).b == 293


def test_validate_corollary_mode():
    p = validate_dio_params(13, 3, 2, b_mode="corollary1", m_prime=3)
    assert p.b == 2**3 * 13 - 27
    with pytest.raises(HypothesisError) as exc:
        validate_dio_params(13, 3, 2, b_mode="corollary1", m_prime=2)
    assert any(code == "D5" for code, _ in exc.value.violations)


def test_validate_violation_codes():
    cases = [
        ((14, 3, 2), "D1"),
        ((13, 5, 2), "D2"),
        ((13, 3, 3), "D3"),
        ((13, 9, 6), "D4"),
    ]
    for args, code in cases:
        with pytest.raises(HypothesisError) as exc:
            validate_dio_params(*args)
        assert any(c == code for c, _ in exc.value.violations), (args, code)


def test_eval_lhs():
    assert eval_lhs(13, 101, 3, 2, 0, 0, 0) == -101
    assert eval_lhs(13, 101, 3, 2, 2, 0, 0) == 3
    assert eval_lhs(25, 197, 3, 4, 1, 1, 1) == -173


def test_eval_equation_uses_params():
    p = validate_dio_params(13, 3, 2)
    assert eval_equation(p, 0, 0, 0) == -101
    assert eval_equation(p, 2, 0, 0) == 3


def test_bounded_search_empty_for_all_triples():
    for a, d1, d2 in PARAM_TRIPLES:
        params = validate_dio_params(a, d1, d2)
        assert bounded_search(params, 30) == [], (a, d1, d2)


def test_search_matches_bruteforce_small():
    for a, d1, d2 in PARAM_TRIPLES:
        params = validate_dio_params(a, d1, d2)
        fast = search_box(params.a, params.b, d1, d2, 8)
        slow = sorted(
            (x, y, z)
            for x in range(-8, 9)
            for y in range(-8, 9)
            for z in range(-8, 9)
            if eval_lhs(params.a, params.b, d1, d2, x, y, z) == 0
        )
        assert fast == slow


def test_search_planted_root_fires():
    # b chosen so (2, 1, 2) solves a x^3 - y^2 - z^2 + xyz - b = 0
    a = 13
    b = a * 8 - 1 - 4 + 4
    found = search_box(a, b, 3, 2, 8)
    assert (2, 1, 2) in found


def test_search_solution_set_closed_under_negation():
    # (x, y, z) -> (x, -y, -z) preserves every term
    a, b = 13, 103
    sols = set(search_box(a, b, 3, 2, 10))
    assert sols == {(x, -y, -z) for x, y, z in sols}


def test_search_x_class_restriction():
    a, b = 13, 103
    all_sols = search_box(a, b, 3, 2, 10)
    classed = search_box(a, b, 3, 2, 10, x_class=(0, 2))
    assert classed == [s for s in all_sols if s[0] % 2 == 0]


def test_search_box_validation():
    with pytest.raises(ParameterError):
        search_box(13, 101, 3, 2, 0)


def test_mod4_tables():
    t = mod4_obstruction()
    assert t.squares_attained == (0, 1)
    assert t.sum_attained == (0, 1, 2)
    assert t.sum_obstructs_3
    assert t.diff_attained == (0, 1, 3)
    assert not t.diff_obstructs_3  # 3 = 0 - 1 mod 4 is attained
    assert len(t.sum_table) == 16 and len(t.diff_table) == 16


def test_parity_table():
    t = parity_claim_check()
    assert t.solutions == ((0, 0),)
    assert t.only_origin


def test_qr_law_holds():
    assert qr_law_check(10**4)
    with pytest.raises(ParameterError):
        qr_law_check(3)


def test_residue_obstruction_mod4():
    # x = 0 mod 2 certifies at modulus 4; x = 1 mod 4 does not
    for a, d1, d2 in PARAM_TRIPLES:
        params = validate_dio_params(a, d1, d2)
        cert = residue_obstruction(params, 4, (0, 2))
        assert cert is not None
        assert cert.exhaustive
        assert cert.tuples_checked == 2 * 16
        assert residue_obstruction(params, 4, (1, 4)) is None


def test_residue_obstruction_mod12_known_class():
    # at modulus 12 the only solvable x are 5 and 9; the class 5 mod 12
    # therefore does not certify
    params = validate_dio_params(13, 3, 2)
    assert residue_obstruction(params, 12, (5, 12)) is None
    assert residue_obstruction(params, 12, (4, 12)) is not None


def test_residue_obstruction_validation():
    params = validate_dio_params(13, 3, 2)
    with pytest.raises(ParameterError):
        residue_obstruction(params, 12, (0, 5))  # 5 does not divide 12
    with pytest.raises(BudgetExceededError):
        residue_obstruction(params, 1200, (0, 12))


def test_solvable_x_mod12_oracle():
    # brute force: which x mod 12 admit any (y, z) solving the congruence
    for a, d1, d2 in PARAM_TRIPLES:
        params = validate_dio_params(a, d1, d2)
        solvable = {
            x
            for x in range(12)
            for y in range(12)
            for z in range(12)
            if eval_lhs(params.a, params.b, d1, d2, x, y, z) % 12 == 0
        }
        assert solvable == {5, 9}, (a, d1, d2)


def test_obstruction_sweep_all_triples():
    for a, d1, d2 in PARAM_TRIPLES:
        params = validate_dio_params(a, d1, d2)
        sweep = obstruction_sweep(params, 360)
        expected = tuple(None if r in (5, 9) else 12 for r in range(12))
        assert sweep.smallest_modulus == expected, (a, d1, d2)
        for r in range(12):
            cert = sweep.certificates[r]
            if r in (5, 9):
                assert cert is None
            else:
                assert cert.modulus == 12
                assert cert.x_class == (r, 12)
                assert cert.tuples_checked == 12 * 12


def test_sweep_agrees_with_residue_obstruction():
    params = validate_dio_params(13, 3, 2)
    sweep = obstruction_sweep(params, 48)
    for r in range(12):
        expected = residue_obstruction(params, 12, (r, 12))
        if sweep.smallest_modulus[r] == 12:
            assert expected is not None
        else:
            assert expected is None


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(PARAM_TRIPLES), st.sampled_from([12, 24, 36, 48]))
def test_solvable_flags_match_bruteforce(triple, modulus):
    a, d1, d2 = triple
    params = validate_dio_params(a, d1, d2)
    for r in range(0, modulus, 7):  # spot-check a spread of classes
        cert = residue_obstruction(params, modulus, (r, modulus))
        brute_solvable = any(
            eval_lhs(params.a, params.b, d1, d2, r, y, z) % modulus == 0
            for y in range(modulus)
            for z in range(modulus)
        )
        assert (cert is None) == brute_solvable
