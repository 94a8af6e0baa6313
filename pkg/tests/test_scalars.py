import random

from hypothesis import given, settings, strategies as st

from qlzero.scalars import (
    QP_ONE,
    QP_ZERO,
    QQ_ONE,
    QQ_ZERO,
    RatFuncQ,
    eta_expand,
    qp_from_dict,
    qp_gcd,
    qp_monomial,
    qp_mul,
    qp_sub,
    qpow,
    qq_int,
    rfq_normalize,
)


def test_normalize_cancels_common_factor():
    # (q^2 - 1)/(q - 1) = q + 1
    a = rfq_normalize(qp_from_dict({2: 1, 0: -1}), qp_from_dict({1: 1, 0: -1}))
    assert a == rfq_normalize(qp_from_dict({0: 1, 1: 1}))


def test_normalize_zero_numerator():
    z = rfq_normalize(QP_ZERO, qp_monomial(3))
    assert z == QQ_ZERO
    assert z.num == QP_ZERO and z.den == QP_ONE


def test_normalize_already_reduced():
    b = rfq_normalize(qp_from_dict({2: 1, 0: -1}), qp_monomial(1))
    assert b.num == qp_from_dict({2: 1, 0: -1})
    assert b.den == qp_monomial(1)


def test_normalize_scale_invariance():
    c = qp_from_dict({3: 2, 1: -5})
    a = rfq_normalize(qp_mul(qp_from_dict({1: 1}), c), qp_mul(qp_from_dict({0: 2, 2: 1}), c))
    b = rfq_normalize(qp_from_dict({1: 1}), qp_from_dict({0: 2, 2: 1}))
    assert a == b


def test_normalize_rejects_zero_denominator():
    import pytest

    with pytest.raises(ZeroDivisionError):
        rfq_normalize(QP_ONE, QP_ZERO)


def test_denominator_leading_coefficient_positive():
    a = rfq_normalize(qp_from_dict({0: 1}), qp_from_dict({1: -1}))
    assert a.den[-1] > 0


def test_qpow_and_field_ops():
    assert qpow(3) * qpow(-5) == qpow(-2)
    s = qpow(1) + qpow(-1)
    assert s.inv() * s == QQ_ONE
    assert (qpow(1) - qpow(-1)) * s == qpow(2) - qpow(-2)
    assert (s - s) == QQ_ZERO


scalars = st.integers(min_value=-40, max_value=40).map(qq_int)
small_rfq = st.builds(
    lambda n, k: qq_int(n) * qpow(k),
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=-4, max_value=4),
)


@given(small_rfq, small_rfq, small_rfq)
@settings(max_examples=120, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


def test_gcd_primitive_positive():
    a = qp_from_dict({0: -2, 1: -4})     # -2(1+2q)
    b = qp_from_dict({0: 2, 2: 2})       # 2(1+q^2)
    g = qp_gcd(a, b)
    assert g == qp_from_dict({0: 2})


def test_eta_order_zero_and_one():
    e = eta_expand(0)
    assert e[0] == QQ_ONE
    e = eta_expand(1)
    # geometric-series oracle: sum q^{4n+4} - sum q^{4n+6} = q^4(1-q^2)/(1-q^4)
    oracle = (qpow(4) - qpow(6)) * rfq_normalize(QP_ONE, qp_sub(QP_ONE, qp_monomial(4)))
    assert e[1] == oracle


def test_eta_against_euler_sum_oracle():
    # (z; p)_inf = sum_k (-z)^k p^{k(k-1)/2} / (p; p)_k with p = q^4, and the
    # reciprocal with unsigned terms; convolve the two factors of eta.
    D = 8
    p4 = 4

    def pochhammer_inv(k):  # 1/(p;p)_k
        out = QQ_ONE
        for i in range(1, k + 1):
            out = out * rfq_normalize(QP_ONE, qp_sub(QP_ONE, qp_monomial(p4 * i)))
        return out

    num = []  # coefficients of (q^6 z; q^4)_inf
    den_inv = []  # coefficients of 1/(q^4 z; q^4)_inf
    for k in range(D + 1):
        c = qpow(6 * k + p4 * (k * (k - 1) // 2)) * pochhammer_inv(k)
        num.append(c if k % 2 == 0 else -c)
        den_inv.append(qpow(4 * k) * pochhammer_inv(k))
    e = eta_expand(D)
    for d in range(D + 1):
        conv = QQ_ZERO
        for k in range(d + 1):
            conv = conv + num[k] * den_inv[d - k]
        assert conv == e[d], d


def test_eta_times_inverse_is_one():
    D = 12
    e = eta_expand(D)
    einv = eta_expand(D, inverse=True)
    for d in range(D + 1):
        acc = QQ_ZERO
        for k in range(d + 1):
            acc = acc + e[k] * einv[d - k]
        assert acc == (QQ_ONE if d == 0 else QQ_ZERO)


def test_serialization_roundtrip():
    rng = random.Random(7)
    for _ in range(40):
        num = qp_from_dict({rng.randrange(6): rng.randrange(-9, 10) for _ in range(3)})
        den = qp_from_dict({rng.randrange(4): rng.randrange(1, 9) for _ in range(2)})
        if not den:
            continue
        a = rfq_normalize(num, den)
        assert RatFuncQ.from_text(a.to_text()) == a
