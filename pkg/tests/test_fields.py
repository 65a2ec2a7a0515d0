import pytest

from chartab import FieldSpec, field_rows, galois_image_row, in_field
from chartab.fields import field_from_label, minimal_field_label

from helpers import table_of


def test_fieldspec_validation():
    with pytest.raises(ValueError):
        FieldSpec("rational", 3)
    with pytest.raises(ValueError):
        FieldSpec("cyclotomic")
    with pytest.raises(ValueError):
        FieldSpec("galois")
    assert field_from_label("Qp", 7) == FieldSpec.cyclotomic(7)
    with pytest.raises(ValueError):
        field_from_label("Qp")


def test_galois_identity_and_trivial_row():
    t = table_of("A(5)")
    e = t.q_field.exponent
    for row in range(t.n_classes):
        assert galois_image_row(t, row, 1) == row
    for k in range(1, e):
        if __import__("math").gcd(k, e) == 1:
            assert galois_image_row(t, 0, k) == 0


def test_galois_swaps_cyclic3_rows():
    t = table_of("C(3)")
    assert galois_image_row(t, 1, 2) == 2
    assert galois_image_row(t, 2, 2) == 1
    # verify through the lifted values: conjugation negates exponents
    e = t.q_field.exponent
    for j in range(3):
        (l1, m1), = t.lifted[1][j]
        (l2, m2), = t.lifted[2][j]
        assert m1 == m2 == 1 and (l1 * 2) % e == l2


def test_galois_requires_coprime_k():
    t = table_of("C(6)")
    with pytest.raises(ValueError):
        galois_image_row(t, 1, 2)


def test_s4_all_rational():
    t = table_of("S(4)")
    assert field_rows(t, FieldSpec.rational()) == tuple(range(5))


def test_cyclic3_rationality():
    t = table_of("C(3)")
    assert field_rows(t, FieldSpec.rational()) == (0,)
    assert not in_field(t, 1, FieldSpec.real())
    assert not in_field(t, 2, FieldSpec.rational())


def test_aff73_q7_rows():
    t = table_of("Aff(7,3)")
    q7 = FieldSpec.cyclotomic(7)
    rows = field_rows(t, q7)
    assert sorted(t.degrees[r] for r in rows) == [1, 3, 3]
    linear_nonprincipal = [r for r in range(5)
                           if t.degrees[r] == 1 and r != 0]
    assert all(not in_field(t, r, q7) for r in linear_nonprincipal)


def test_field_rows_all():
    t = table_of("D(5)")
    assert field_rows(t, FieldSpec.all()) == tuple(range(t.n_classes))


def test_galois_action_permutes_rows_preserving_degrees():
    import math
    for expr in ("SL(2,5)", "Aff(13,4)", "C(9)", "D(7)"):
        t = table_of(expr)
        e = t.q_field.exponent
        for k in range(1, e):
            if math.gcd(k, e) != 1:
                continue
            images = [galois_image_row(t, r, k) for r in range(t.n_classes)]
            assert sorted(images) == list(range(t.n_classes))
            assert all(t.degrees[i] == t.degrees[r]
                       for r, i in enumerate(images))


def test_field_containments():
    for expr in ("S(4)", "SL(2,5)", "Aff(7,3)", "C(12)", "PSL(2,7)"):
        t = table_of(expr)
        rational = set(field_rows(t, FieldSpec.rational()))
        real = set(field_rows(t, FieldSpec.real()))
        everything = set(field_rows(t, FieldSpec.all()))
        assert rational <= real <= everything
        for p in (2, 3, 5, 7):
            qp = set(field_rows(t, FieldSpec.cyclotomic(p)))
            assert rational <= qp <= everything
            if t.q_field.exponent % p != 0:
                assert qp == rational


def test_real_agrees_with_inverse_class_columns():
    for expr in ("SL(2,5)", "D(7)", "Aff(5,4)", "C(8)"):
        t = table_of(expr)
        inv = t.inverse_classes()
        for r in range(t.n_classes):
            direct = all(int(t.values_mod_q[r][j]) == int(t.values_mod_q[r][inv[j]])
                         for j in range(t.n_classes))
            assert direct == in_field(t, r, FieldSpec.real())


def test_minimal_field_labels():
    t = table_of("SL(2,5)")
    labels = [minimal_field_label(t, r, primes=(5,)) for r in range(t.n_classes)]
    assert labels[0] == "Q"
    # the degree-2 faithful rows are real with golden-ratio values in Q(zeta_5)
    deg2 = [r for r in range(t.n_classes) if t.degrees[r] == 2]
    for r in deg2:
        assert "R" in labels[r] and "Q5" in labels[r]
