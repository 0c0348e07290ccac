import itertools
import random

import pytest

from cmkit import (
    AlexanderExponents,
    TorsionSequence,
    characteristic_residues,
    coefficients,
    exponents_from_torsion,
    genus_from_changemaker,
    inner_product,
    iter_changemakers,
    lemma4_witness,
    min_level_by_scan,
    torsion_at_most,
    torsion_difference,
    torsion_from_alexander,
    torsion_from_changemaker,
    torsion_staircase,
    torus_knot_exponents,
)

from oracle_utils import torus_alexander_coefficients


def test_coefficients_examples():
    assert coefficients((2, 1)) == {2: 1, 1: -1, 0: 1, -1: -1, -2: 1}
    assert coefficients((1,)) == {1: 1, 0: -1, -1: 1}
    got = coefficients((3, 2, 1))
    assert got[3] == 1 and got[2] == -1 and got[1] == 1 and got[0] == -1


def test_coefficients_unknot():
    assert coefficients(()) == {0: 1}


def test_torus_knot_exponents_against_polynomial_oracle():
    for g in range(1, 9):
        ae = torus_knot_exponents(g)
        assert ae.exponents == tuple(range(g, 0, -1))
        assert coefficients(ae) == torus_alexander_coefficients(g)


def test_torus_knot_exponents_domain():
    with pytest.raises(ValueError):
        torus_knot_exponents(0)


def test_torsion_from_alexander_examples():
    assert torsion_from_alexander((2, 1), 0) == 1
    assert torsion_from_alexander((3, 2, 1), 0) == 2
    for ae in [(2, 1), (3, 2, 1), (5, 4, 2, 1)]:
        g = ae[0]
        assert torsion_from_alexander(ae, g) == 0
        assert torsion_from_alexander(ae, g + 3) == 0


def test_torsion_difference_examples():
    assert torsion_difference((2, 1), 1) == 1
    assert torsion_difference((2, 1), 2) == 0
    assert torsion_difference((3, 2, 1), 0) == 1


def test_torsion_difference_consistency():
    rng = random.Random(31)
    for _ in range(60):
        g = rng.randint(1, 9)
        rest = sorted(rng.sample(range(1, g), rng.randint(0, g - 1)), reverse=True)
        ae = AlexanderExponents((g, *rest))
        for i in range(g + 2):
            assert torsion_difference(ae, i) == torsion_from_alexander(
                ae, i
            ) - torsion_from_alexander(ae, i + 1)


def test_lens_space_flag_gates_second_exponent():
    with pytest.raises(ValueError):
        AlexanderExponents((3, 1), lens_space=True)
    assert AlexanderExponents((3, 1)).genus == 3
    assert AlexanderExponents((3, 2), lens_space=True).r == 2


def test_torsion_sequence_validation():
    assert TorsionSequence((1, 1, 0, 0)).values == (1, 1, 0)
    assert TorsionSequence((0,)).genus == 0
    with pytest.raises(ValueError):
        TorsionSequence((2, 0))
    with pytest.raises(ValueError):
        TorsionSequence((1, 2, 0))
    with pytest.raises(ValueError):
        TorsionSequence((1, 1))
    with pytest.raises(ValueError):
        TorsionSequence((-1, 0))
    with pytest.raises(ValueError):
        TorsionSequence(())


def test_exponents_from_torsion_examples():
    assert exponents_from_torsion((1, 1, 0)).exponents == (2, 1)
    assert exponents_from_torsion((2, 1, 1, 0)).exponents == (3, 2, 1)
    assert exponents_from_torsion((0,)).exponents == ()


def test_exponents_from_torsion_inverts_all_small_sequences():
    for g in range(1, 9):
        for r_tail in range(g):
            for rest in itertools.combinations(range(1, g), r_tail):
                ae = AlexanderExponents((g, *sorted(rest, reverse=True)))
                stair = [torsion_from_alexander(ae, i) for i in range(g + 1)]
                assert exponents_from_torsion(stair).exponents == ae.exponents


def test_genus_from_changemaker():
    assert genus_from_changemaker((1, 2, 2)) == 2
    assert genus_from_changemaker((1, 1, 1, 1)) == 0
    assert genus_from_changemaker((1, 1, 3)) == 3
    with pytest.raises(ValueError):
        genus_from_changemaker((0, 1, 1))


def test_torsion_from_changemaker_worked_example():
    assert torsion_from_changemaker((1, 2, 2), 2) == 0
    assert torsion_from_changemaker((1, 2, 2), 0) == 1
    assert torsion_from_changemaker((1, 2, 2), 1) == 1


def test_torsion_from_changemaker_index_domain():
    with pytest.raises(ValueError):
        torsion_from_changemaker((1, 2, 2), -1)
    with pytest.raises(ValueError):
        torsion_from_changemaker((1, 2, 2), 5)
    assert torsion_from_changemaker((1, 2, 2), 4) == 0  # between g and p/2


def test_torsion_staircases():
    assert torsion_staircase((1, 1)) == (0,)
    assert torsion_staircase((1,)) == (0,)
    assert torsion_staircase((1, 1, 3)) == (1, 1, 1, 0)
    assert torsion_staircase((1, 2, 2)) == (1, 1, 0)


def test_characteristic_residues_level_zero():
    # sums over +-1 vectors against (1, 2, 2), mod 18
    got = characteristic_residues((1, 2, 2), 0)
    assert got == frozenset({1, 3, 5, 13, 15, 17})


def test_scan_agrees_with_dp_on_small_changemakers():
    for rank in (1, 2, 3):
        for sig in iter_changemakers(rank):
            g = genus_from_changemaker(sig)
            stair = torsion_staircase(sig)
            for i in range(g + 1):
                assert stair[i] == min_level_by_scan(sig, i)


def test_torsion_at_most_matches_exact_values():
    for rank in (1, 2, 3):
        for sig in iter_changemakers(rank):
            g = genus_from_changemaker(sig)
            for i in range(g + 1):
                t = torsion_from_changemaker(sig, i)
                for level in range(4):
                    assert torsion_at_most(sig, i, level) == (t <= level)


def test_witness_examples():
    assert lemma4_witness((1, 1, 3)).coords == (1, 1, 3)
    assert lemma4_witness((1, 1, 1, 3)).coords == (1, 1, 1, 3)
    w = lemma4_witness((1, 2, 4))
    assert w.coords == (-1, 1, 3)
    assert w.level == 1
    # p = 21, |sigma|_1 = 7, g = 7: the pairing lands at 2g - 6 = 8
    assert genus_from_changemaker((1, 2, 4)) == 7
    assert 21 + inner_product(w.coords, (1, 2, 4)) == 8


def test_witness_inapplicable():
    with pytest.raises(ValueError):
        lemma4_witness((1, 2, 2))


def test_witness_contract_over_small_census():
    for rank in (2, 3, 4, 5):
        for sig in iter_changemakers(rank):
            if sig[-1] < 3:
                continue
            w = lemma4_witness(sig)
            g = genus_from_changemaker(sig)
            p = sum(x * x for x in sig)
            assert w.level == 1
            assert p + inner_product(w.coords, sig) == 2 * g - 6
            assert p + inner_product(w.coords, sig) == p - sum(sig) - 6
            # and the witness certifies the torsion bound three below genus
            assert torsion_at_most(sig, g - 3, 1)
            assert torsion_from_changemaker(sig, g - 3) == 1
