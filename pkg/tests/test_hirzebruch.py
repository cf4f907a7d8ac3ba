import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import (
    decomposition_slow,
    in_e_basis,
    level_slow,
    pair_slow,
    phi_slow,
    top_level_slow,
)
from toric_contact.errors import ConsistencyError, DomainError, UnsupportedShapeError
from toric_contact.hirzebruch import (
    Basis,
    DivisorClass,
    LevelData,
    Parity,
    SubfamilyParams,
    admissible_set,
    basis_element,
    canonical_divisor,
    top_level_ceiling,
    fibre_class,
    intersection_number,
    iter_subfamily,
    level_decomposition,
    level_of,
    orbifold_chern_evaluation,
    pullback_defect,
    quotient_orbifold,
    symplectic_class,
    top_level_cardinality,
)
from toric_contact.structures import ManifoldType, Quadruple

T, N = ManifoldType.TRIVIAL, ManifoldType.NONTRIVIAL
E, O = Parity.EVEN, Parity.ODD


def test_admissible_sets():
    assert admissible_set(9, 8, T) == [1, 3, 5, 7, 9]
    assert admissible_set(7, 1, T) == list(range(1, 8))
    assert admissible_set(9, 9, N) == [2, 5, 8]


@pytest.mark.parametrize(
    "k,l,j,bundle,expected",
    [
        (9, 8, 3, T, LevelData(4, 3, 2, O)),
        (9, 8, 9, T, LevelData(8, 0, 1, E)),
        (9, 9, 2, N, LevelData(3, 5, 3, O)),
        (9, 9, 5, N, LevelData(9, 1, 1, O)),
    ],
)
def test_level_of(k, l, j, bundle, expected):
    assert level_of(SubfamilyParams(k, l, j, bundle)) == expected


def test_level_of_rejects_inadmissible():
    with pytest.raises(DomainError):
        level_of(SubfamilyParams(9, 8, 2, T))
    with pytest.raises(DomainError):
        SubfamilyParams(9, 8, 10, T)


def test_decompositions():
    assert level_decomposition(9, 8, T) == {(8, E): [1, 9], (8, O): [5], (4, O): [3, 7]}
    assert level_decomposition(9, 9, N) == {(9, O): [5], (3, O): [2, 8]}
    for p in (3, 5, 7, 11, 13, 97):
        assert level_decomposition(p, p, T) == {(1, E): list(range(1, p))}


def test_decomposition_matches_oracle_and_partitions():
    for bundle, nontrivial in ((T, False), (N, True)):
        for k in range(1, 61):
            for l in range(1, k + 1):
                got = level_decomposition(k, l, bundle)
                slow = {(g, E if par == "even" else O): js for (g, par), js in decomposition_slow(k, l, nontrivial).items()}
                assert got == slow
                flat = sorted(j for js in got.values() for j in js)
                assert flat == admissible_set(k, l, bundle)


@pytest.mark.parametrize(
    "k,l,bundle,parity,expected",
    [(9, 8, T, E, 2), (9, 8, T, O, 1), (9, 9, N, O, 1), (2, 2, T, E, 0), (9, 9, T, E, 0)],
)
def test_top_level_cardinality(k, l, bundle, parity, expected):
    assert top_level_cardinality(k, l, bundle, parity) == expected


def test_ceiling_alone_overcounts_when_residue_class_is_inadmissible():
    # (2,2): j = 2 is the only j with g = 2 and it fails gcd(j, l) = 1
    assert top_level_ceiling(2, 2, T, E) == 1
    assert top_level_slow(2, 2, False, "even") == 0
    # odd l has no odd top level on S2 x S3, yet the ceiling is positive
    assert top_level_ceiling(9, 3, T, O) == 3
    assert top_level_slow(9, 3, False, "odd") == 0


def test_ceiling_is_exact_when_residue_class_is_admissible():
    checked = 0
    for k in range(1, 61):
        for l in range(1, k + 1):
            for bundle, nontrivial in ((T, False), (N, True)):
                for parity, name in ((E, "even"), (O, "odd")):
                    if top_level_cardinality(k, l, bundle, parity) > 0:
                        checked += 1
                        assert top_level_ceiling(k, l, bundle, parity) == top_level_slow(k, l, nontrivial, name)
    assert checked > 1000


def test_top_level_needs_k_at_least_l():
    with pytest.raises(DomainError):
        top_level_cardinality(3, 4, T, E)


def test_phi_count_small():
    for p in range(2, 60):
        assert len(admissible_set(p, p, T)) == phi_slow(p)


def test_parity_laws():
    for params in iter_subfamily(40, T):
        lev = level_of(params)
        if lev.parity is O:
            assert lev.g % 2 == 0
    for params in iter_subfamily(40, N):
        lev = level_of(params)
        assert params.l % 2 == 1 and lev.g % 2 == 1 and lev.n % 2 == 1 and lev.m % 2 == 1


def test_level_invariants_against_oracle():
    for bundle, nontrivial in ((T, False), (N, True)):
        for params in iter_subfamily(30, bundle):
            lev = level_of(params)
            g, n, m, par = level_slow(params.k, params.l, params.j, nontrivial)
            assert (lev.g, lev.n, lev.m, lev.parity.value) == (g, n, m, par)
            assert lev.n * lev.g == 2 * (params.k - params.j) + (1 if nontrivial else 0)
            assert lev.m * lev.g == params.l
            assert math.gcd(lev.m, lev.n) == 1


# --- divisor arithmetic -------------------------------------------------------

def test_basis_squares():
    for n in range(0, 12):
        e0 = basis_element(Basis.E0, n)
        em1 = basis_element(Basis.EM1, n)
        L = fibre_class(n)
        assert intersection_number(L, L) == 0
        assert intersection_number(basis_element(Basis.E, n), basis_element(Basis.E, n)) == n
        assert intersection_number(e0, L) == 1 and intersection_number(em1, L) == 1
        # E0 is square zero and E_{-1} square -1 on every S_n as Q-divisors
        assert intersection_number(e0, e0) == 0
        assert intersection_number(em1, em1) == -1


def test_even_surface_e0_square_displayed_form():
    # on S_{2n}: (E - nL)^2 = E.E - 2n E.L + n^2 L.L = 2n - 2n
    for n in range(0, 10):
        e = basis_element(Basis.E, 2 * n)
        e0 = DivisorClass(1, -n, Basis.E, 2 * n)
        assert intersection_number(e, e) - 2 * n * intersection_number(e, fibre_class(2 * n)) == 0
        assert intersection_number(e0, e0) == 0


def test_mismatched_surfaces():
    with pytest.raises(DomainError):
        intersection_number(fibre_class(1), fibre_class(2))


fracs = st.fractions(min_value=-20, max_value=20, max_denominator=6)
bases = st.sampled_from(list(Basis))


@given(fracs, fracs, bases, fracs, fracs, bases, st.integers(0, 15), bases)
def test_pairing_matches_gram_matrix(a1, b1, x1, a2, b2, x2, n, target):
    u = DivisorClass(a1, b1, x1, n)
    v = DivisorClass(a2, b2, x2, n)
    expected = pair_slow(in_e_basis(a1, b1, x1.value, n), in_e_basis(a2, b2, x2.value, n), n)
    assert intersection_number(u, v) == expected
    assert intersection_number(u.to_basis(target), v) == expected
    assert u.to_basis(target).to_basis(x1) == u


def test_canonical_divisor_forms():
    for p in (3, 5, 7, 9):
        for q in range(1, p):
            k_e0 = canonical_divisor(2 * q, p).to_basis(Basis.E0)
            assert k_e0.coefficients() == (Fraction(-2, p), -2, Basis.E0)
    for n in range(0, 8):
        assert canonical_divisor(n, 1).to_basis(Basis.E0).coefficients() == (-2, -2, Basis.E0)
        assert canonical_divisor(n, 1).coefficients() == (-2, n - 2, Basis.E)
    for p in (2, 4, 6, 8, 10):
        for q in range(1, p, 2):
            K = canonical_divisor(q, p // 2)
            assert K.coefficients() == (Fraction(-4, p), Fraction(-2 * (p - q), p), Basis.E)
            assert K.to_basis(Basis.EM1).coefficients() == (Fraction(-4, p), Fraction(-2 * (p + 1), p), Basis.EM1)


def test_chern_evaluations():
    for params in [SubfamilyParams(9, 8, 3, T), SubfamilyParams(9, 8, 9, T), SubfamilyParams(9, 9, 2, N)]:
        s = quotient_orbifold(params)
        assert orbifold_chern_evaluation(s, fibre_class(s.n)) == Fraction(2, s.m)
        assert orbifold_chern_evaluation(s, basis_element(Basis.E0, s.n)) == 2
    with pytest.raises(DomainError):
        orbifold_chern_evaluation(quotient_orbifold(SubfamilyParams(9, 8, 3, T)), fibre_class(0))


def test_symplectic_classes():
    assert symplectic_class(SubfamilyParams(9, 9, 5, N)).coefficients() == (9, 14, Basis.EM1)
    assert symplectic_class(SubfamilyParams(9, 9, 2, N)).coefficients() == (3, 11, Basis.EM1)
    for p in (3, 5, 7, 9, 11):
        for j in admissible_set(p, p, T):
            assert symplectic_class(SubfamilyParams(p, p, j, T)).coefficients() == (1, p, Basis.E0)
    for p in (2, 4, 6, 8, 10):
        for j in admissible_set(p, p, T):
            assert symplectic_class(SubfamilyParams(p, p, j, T)).coefficients() == (2, p + 1, Basis.EM1)


def test_symplectic_class_constant_on_levels():
    for bundle in (T, N):
        for k in range(1, 41):
            for l in range(1, k + 1):
                for js in level_decomposition(k, l, bundle).values():
                    coeffs = {symplectic_class(SubfamilyParams(k, l, j, bundle)).coefficients() for j in js}
                    assert len(coeffs) == 1


def test_pullback_vanishes_in_e0_basis():
    for bundle in (T, N):
        for params in iter_subfamily(40, bundle):
            assert pullback_defect(params) == 0


def test_trivial_even_class_satisfies_raw_identity():
    # a*k - b*i = 0 holds verbatim when the class is already in {E0, L}
    for params in iter_subfamily(30, T):
        cls = symplectic_class(params)
        if cls.basis is Basis.E0:
            assert cls.coeff_e * params.k - cls.coeff_l * level_of(params).g == 0


def test_quotient_examples():
    for p in (3, 5, 7, 9):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                s = quotient_orbifold(SubfamilyParams(p, p, p - q, T))
                assert (s.n, s.m) == (2 * q, p)
                assert s.branch_coefficient == 1 - Fraction(1, p)
                assert s.log_del_pezzo
    s = quotient_orbifold(SubfamilyParams(9, 8, 1, T))
    assert (s.n, s.m, s.branch_coefficient, s.log_del_pezzo) == (2, 1, 0, False)
    s = quotient_orbifold(SubfamilyParams(9, 9, 5, N))
    assert (s.n, s.m, s.branch_coefficient) == (1, 1, 0)


def test_positivity_agreement_to_60():
    for bundle in (T, N):
        for params in iter_subfamily(60, bundle):
            s = quotient_orbifold(params)  # raises ConsistencyError on disagreement
            lev = s.level
            assert s.log_del_pezzo == (2 * lev.m > lev.n)
            assert (s.branch_coefficient == 0) == (lev.m == 1)


def test_from_quadruple():
    assert SubfamilyParams.from_quadruple(Quadruple(17, 1, 8, 8)) == SubfamilyParams(9, 8, 1, T)
    assert SubfamilyParams.from_quadruple(Quadruple(9, 9, 2, 17)) == SubfamilyParams(9, 9, 2, N)
    with pytest.raises(UnsupportedShapeError):
        SubfamilyParams.from_quadruple(Quadruple(1, 2, 3, 4))


def test_consistency_error_type_is_runtime():
    assert issubclass(ConsistencyError, RuntimeError)
