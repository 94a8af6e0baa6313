from fractions import Fraction

from qlzero.linalg import LinearBasis
from qlzero.scalars import qpow, qq_int


def test_rank_and_membership_over_field():
    lb = LinearBasis(certificates=True)
    assert lb.add({"a": qq_int(1), "b": qpow(1)}, "g1")
    assert lb.add({"b": qq_int(2)}, "g2")
    assert not lb.add({"a": qq_int(3), "b": qpow(1) * qq_int(3)}, "g3")  # dependent
    assert lb.rank == 2
    ok, res, cert = lb.member({"a": qpow(2), "b": qq_int(-1)}, want_cert=True)
    assert ok and not res
    # reconstruct: sum cert[g] * gen_g must equal the vector
    gens = {"g1": {"a": qq_int(1), "b": qpow(1)},
            "g2": {"b": qq_int(2)},
            "g3": {"a": qq_int(3), "b": qpow(1) * qq_int(3)}}
    acc = {}
    for g, c in cert.items():
        for col, v in gens[g].items():
            acc[col] = acc.get(col, qq_int(0)) + c * v
    acc = {k: v for k, v in acc.items() if v}
    assert acc == {"a": qpow(2), "b": qq_int(-1)}


def test_residual_is_canonical():
    lb = LinearBasis()
    lb.add({"a": qq_int(1), "c": qq_int(1)})
    v1 = lb.reduce({"a": qq_int(2), "b": qq_int(1)})
    v2 = lb.reduce(dict(v1))
    assert v1 == v2
    assert "a" not in v1  # pivot eliminated


def test_standard_columns():
    lb = LinearBasis()
    lb.add({"a": qq_int(1), "b": qq_int(1)})
    assert lb.standard_columns(["a", "b", "c"]) == ["b", "c"]


def test_works_with_fractions():
    lb = LinearBasis()
    lb.add({"x": Fraction(2), "y": Fraction(1, 3)})
    lb.add({"y": Fraction(5)})
    ok, res = lb.member({"x": Fraction(4), "y": Fraction(7)})
    assert ok and not res
    ok, res = lb.member({"z": Fraction(1)})
    assert not ok and res


def test_custom_column_order_controls_pivots():
    lb = LinearBasis(key=lambda c: -ord(c))
    lb.add({"a": qq_int(1), "z": qq_int(1)})
    assert "z" in lb.pivots and "a" not in lb.pivots
