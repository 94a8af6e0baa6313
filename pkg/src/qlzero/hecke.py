"""The constant Hecke operator S, its polynomial twin G, and the R-matrix.

S acts on tensor slots only:

    S (v+ (x) v+) = -q^{-1} v+ (x) v+          (and likewise for --)
    S (v+ (x) v-) = (q - q^{-1}) v+ (x) v-  -  v- (x) v+
    S (v- (x) v+) = - v+ (x) v-

G acts on coefficient polynomials only,

    G^{+-1} f = (q^{-1} z_j - q z_k) d_{jk} f + q^{+-1} f,

with d_{jk} the exact divided difference; both satisfy the same quadratic,
commutation and braid relations.  The R-matrix never appears as a power
series here: R(z_k/z_j) is handled through its cross-multiplied numerator
(S z_k - S^{-1} z_j) against the denominator (q z_k - q^{-1} z_j).
"""

from __future__ import annotations

from .laurent import LaurentPoly, lp_divided_difference, lp_specialize, lp_swap
from .report import CheckReport, check, timer
from .scalars import QQ_ONE, qpow, qq_int
from .tensor import MINUS, PLUS, TensorPoly, sign_strings, singlet_vector
from .windows import Window

Q = qpow(1)
QINV = qpow(-1)
QDIFF = qpow(1) - qpow(-1)  # q - q^{-1}
NEG_ONE = qq_int(-1)

# pair channel maps: {(a, b): [((a', b'), coeff), ...]}
S_PAIR = {
    (PLUS, PLUS): [((PLUS, PLUS), -QINV)],
    (MINUS, MINUS): [((MINUS, MINUS), -QINV)],
    (PLUS, MINUS): [((PLUS, MINUS), QDIFF), ((MINUS, PLUS), NEG_ONE)],
    (MINUS, PLUS): [((PLUS, MINUS), NEG_ONE)],
}

def _build_s_inv():
    # S^{-1} = S - (q - q^{-1})
    out = {}
    for key, imgs in S_PAIR.items():
        d = {im: c for im, c in imgs}
        d[key] = d.get(key, qq_int(0)) - QDIFF
        out[key] = [(im, c) for im, c in d.items() if c]
    return out


S_INV_PAIR = _build_s_inv()


def apply_pair(x: TensorPoly, j: int, k: int, table: dict) -> TensorPoly:
    """Apply a two-slot map given by a channel table at slots (j, k)."""
    if not (1 <= j <= x.arity and 1 <= k <= x.arity) or j == k:
        raise IndexError("slot pair out of range")
    out = TensorPoly.zero(x.arity, x.nvars)
    for e, p in x.terms.items():
        key = (e[j - 1], e[k - 1])
        for (a, b), c in table.get(key, ()):
            t = list(e)
            t[j - 1], t[k - 1] = a, b
            out = out + TensorPoly(x.arity, {tuple(t): p.scale_coeffs(c)},
                                   nvars=x.nvars)
    return out


def S_apply(x: TensorPoly, j: int, k: int | None = None) -> TensorPoly:
    """S on slots (j, j+1) by default, or an arbitrary ordered pair."""
    return apply_pair(x, j, k if k is not None else j + 1, S_PAIR)


def S_inv_apply(x: TensorPoly, j: int, k: int | None = None) -> TensorPoly:
    return apply_pair(x, j, k if k is not None else j + 1, S_INV_PAIR)


_G_MONO_CACHE: dict = {}


def _g_mono(arity: int, expo: tuple, j: int, k: int, exponent: int) -> LaurentPoly:
    key = (arity, expo, j, k, exponent)
    hit = _G_MONO_CACHE.get(key)
    if hit is None:
        f = LaurentPoly.monomial(arity, expo)
        dd = lp_divided_difference(f, j, k)
        mult = (LaurentPoly.var(arity, j).scale_coeffs(QINV)
                - LaurentPoly.var(arity, k).scale_coeffs(Q))
        hit = mult * dd + f.scale_coeffs(qpow(1 if exponent > 0 else -1))
        _G_MONO_CACHE[key] = hit
    return hit


def G_poly(f: LaurentPoly, j: int, k: int, exponent: int = 1) -> LaurentPoly:
    """G_{j,k}^{+-1} on a bare Laurent polynomial (monomial images cached)."""
    out: dict = {}
    for expo, c in f.terms.items():
        for e2, c2 in _g_mono(f.arity, expo, j, k, exponent).terms.items():
            s = out.get(e2)
            v = c * c2
            s = v if s is None else s + v
            if s:
                out[e2] = s
            elif e2 in out:
                del out[e2]
    return LaurentPoly(f.arity, out)


def G_apply(x: TensorPoly, j: int, k: int, exponent: int = 1) -> TensorPoly:
    """G acts on coefficients only; tensor slots are untouched."""
    return x.map_coeffs(lambda f: G_poly(f, j, k, exponent))


def K_apply(x: TensorPoly, j: int, k: int) -> TensorPoly:
    return x.map_coeffs(lambda f: lp_swap(f, j, k))


def R_apply(x: TensorPoly, j: int, k: int) -> tuple[TensorPoly, LaurentPoly]:
    """Cross-multiplied R-matrix at argument z_k/z_j on slots (j, k).

    Returns (numerator, denominator) with numerator = (S z_k - S^{-1} z_j) x
    and denominator = q z_k - q^{-1} z_j, so that formally R x = num/den.
    Callers compare cross-multiplied quantities only.
    """
    if j >= k:
        raise IndexError("R_apply expects j < k")
    nv = x.nvars
    zj = LaurentPoly.var(nv, j)
    zk = LaurentPoly.var(nv, k)
    num = S_apply(x, j, k).mul_poly(zk) - S_inv_apply(x, j, k).mul_poly(zj)
    den = zk.scale_coeffs(Q) - zj.scale_coeffs(QINV)
    return num, den


def R_numerator_op(x: TensorPoly, j: int, k: int, a: int, b: int) -> TensorPoly:
    """(S_{jk} z_b - S^{-1}_{jk} z_a) x: numerator of R_{jk}(z_b/z_a)."""
    za = LaurentPoly.var(x.nvars, a)
    zb = LaurentPoly.var(x.nvars, b)
    return S_apply(x, j, k).mul_poly(zb) - S_inv_apply(x, j, k).mul_poly(za)


def R_matrix_entries(z: LaurentPoly | None = None):
    """The explicit two-slot R-matrix table, cross-multiplied by (1 - q^2 z).

    Returns {channel_in: [(channel_out, numerator poly in one variable)]}
    with the common denominator 1 - q^2 z.  Used as the independent side of
    the decomposition check against (S z - S^{-1}).
    """
    z = LaurentPoly.var(1, 1)
    one = LaurentPoly.one(1)
    q2 = qpow(2)
    same = z - one.scale_coeffs(q2)                      # z - q^2
    stay_pm = z.scale_coeffs(QQ_ONE - q2)                # (1 - q^2) z
    cross = (z - one).scale_coeffs(Q)                    # q(z - 1)
    stay_mp = one.scale_coeffs(QQ_ONE - q2)              # 1 - q^2
    return {
        (PLUS, PLUS): [((PLUS, PLUS), same)],
        (MINUS, MINUS): [((MINUS, MINUS), same)],
        (PLUS, MINUS): [((PLUS, MINUS), stay_pm), ((MINUS, PLUS), cross)],
        (MINUS, PLUS): [((PLUS, MINUS), cross), ((MINUS, PLUS), stay_mp)],
    }


# -- relation suite ----------------------------------------------------------


def hecke_suite(N: int, window: Window | None = None) -> CheckReport:
    """Exact verification of the Hecke-algebra layer at arity N.

    Covers: quadratic, far commutation and braid relations for S (tensor
    side) and for G (polynomial side over the window); the cross-multiplied
    R-matrix decomposition; the R-matrix unitarity point z=1 on the
    invariant vector; Yang-Baxter; eigenvalues of S; S commuting with the
    finite quantum-group action; and the two intertwining exchange rules.
    """
    from .tensor import uq_apply  # local import to keep module load light

    rep = CheckReport(f"hecke suite N={N}")
    window = window or Window(N, -2)

    # --- S relations on the full tensor basis (coefficients irrelevant)
    basis = [TensorPoly.basis(e, LaurentPoly.one(N)) for e in sign_strings(N)]

    with timer() as t:
        bad = 0
        for x in basis:
            for j in range(1, N):
                lhs = S_apply(x, j) - S_inv_apply(x, j)
                if lhs - x.scale(QDIFF):
                    bad += 1
    check(rep, f"hecke.quadratic.S.N{N}", "T - T^{-1} = q - q^{-1}", bad == 0,
          f"{len(basis)} basis vectors", bad, t.seconds)

    with timer() as t:
        bad = 0
        for x in basis:
            for j in range(1, N):
                for k in range(j + 2, N):
                    if S_apply(S_apply(x, j), k) - S_apply(S_apply(x, k), j):
                        bad += 1
                if j + 1 < N:
                    l, r = _braid(x, j, S_apply), _braid_rev(x, j, S_apply)
                    if l - r:
                        bad += 1
    check(rep, f"hecke.braid.S.N{N}", "braid and far commutation", bad == 0,
          "", bad, t.seconds)

    # --- inverse really inverts
    with timer() as t:
        bad = sum(1 for x in basis for j in range(1, N)
                  if S_inv_apply(S_apply(x, j), j) - x)
    check(rep, f"hecke.inverse.S.N{N}", "S S^{-1} = 1", bad == 0, "", bad, t.seconds)

    # --- G relations over window monomials
    monos = list(window.exponents())
    with timer() as t:
        bad = 0
        for expo in monos:
            f = LaurentPoly.monomial(N, expo)
            for j in range(1, N):
                lhs = G_poly(f, j, j + 1, 1) - G_poly(f, j, j + 1, -1)
                if lhs - f.scale_coeffs(QDIFF):
                    bad += 1
                if G_poly(G_poly(f, j, j + 1, 1), j, j + 1, -1) - f:
                    bad += 1
    check(rep, f"hecke.quadratic.G.N{N}", "T - T^{-1} = q - q^{-1}", bad == 0,
          f"{len(monos)} window monomials", bad, t.seconds)

    with timer() as t:
        bad = 0
        for expo in monos:
            f = LaurentPoly.monomial(N, expo)
            for j in range(1, N - 1):
                l = G_poly(G_poly(G_poly(f, j, j + 1), j + 1, j + 2), j, j + 1)
                r = G_poly(G_poly(G_poly(f, j + 1, j + 2), j, j + 1), j + 1, j + 2)
                if l - r:
                    bad += 1
            for j in range(1, N):
                for k in range(j + 2, N):
                    if (G_poly(G_poly(f, j, j + 1), k, k + 1)
                            - G_poly(G_poly(f, k, k + 1), j, j + 1)):
                        bad += 1
    check(rep, f"hecke.braid.G.N{N}", "braid and far commutation", bad == 0,
          "", bad, t.seconds)

    # --- G locality over window monomials
    with timer() as t:
        bad = 0
        for expo in monos:
            f = LaurentPoly.monomial(N, expo)
            for j in range(1, N):
                g = G_poly(f, j, j + 1)
                s0 = expo[j - 1] + expo[j]
                m0 = max(expo[j - 1], expo[j])
                for e2 in g.support():
                    if e2[j - 1] + e2[j] != s0 or max(e2[j - 1], e2[j]) > m0:
                        bad += 1
    check(rep, f"hecke.locality.G.N{N}",
          "pair sums preserved, pair max never grows", bad == 0, "", bad, t.seconds)

    # --- eigenvalues of S and projector idempotence (two slots suffice)
    with timer() as t:
        ok = True
        sing = singlet_vector()
        ok &= not (S_apply(sing, 1) - sing.scale(Q))
        one0 = LaurentPoly.one(0)
        trip = [
            TensorPoly.basis((PLUS, PLUS), one0),
            TensorPoly.basis((MINUS, MINUS), one0),
            TensorPoly.basis((PLUS, MINUS), one0)
            + TensorPoly.basis((MINUS, PLUS), one0.scale_coeffs(Q)),
        ]
        for v in trip:
            ok &= not (S_apply(v, 1) + v.scale(QINV))
        # projectors built from S: P = (S + q^{-1})/(q + q^{-1}) etc.
        norm = (Q + QINV).inv()
        for v in [sing] + trip:
            p1 = (S_apply(v, 1) + v.scale(QINV)).scale(norm)
            p2 = (S_apply(p1, 1) + p1.scale(QINV)).scale(norm)
            ok &= not (p2 - p1)
    check(rep, f"hecke.eigen.S.N{N}", "eigenvalues q and -q^{-1}; projectors idempotent",
          ok, "", 0 if ok else 1, t.seconds)

    # --- [S, Delta^op(x)] = 0 for the finite subalgebra
    with timer() as t:
        bad = 0
        probes = basis + [TensorPoly.monomial(e, (-1,) + (0,) * (N - 1))
                          for e in sign_strings(N)]
        for x in probes:
            for g in ("e1", "f1", "t1"):
                for j in range(1, N):
                    if S_apply(uq_apply(g, x), j) - uq_apply(g, S_apply(x, j)):
                        bad += 1
    check(rep, f"hecke.commute.S-uq.N{N}", "[S, Delta^op(x)] = 0", bad == 0,
          "e1, f1, t1 on basis and shifted probes", bad, t.seconds)

    # --- intertwining exchange rules on two slots
    with timer() as t:
        ok = True
        for e in sign_strings(2):
            x = TensorPoly.basis(e, one0)
            # S (f1 (x) t1^{-1}) = (1 (x) f1) S
            lhs = S_apply(_slot_f1(_slot_t1inv(x, 2), 1), 1)
            rhs = _slot_f1(S_apply(x, 1), 2)
            ok &= not (lhs - rhs)
            # S (t1 (x) e1) = (e1 (x) 1) S
            lhs = S_apply(_slot_t1(_slot_e1(x, 2), 1), 1)
            rhs = _slot_e1(S_apply(x, 1), 1)
            ok &= not (lhs - rhs)
    check(rep, f"hecke.exchange.N{N}",
          "S(f1 x t1^{-1}) = (1 x f1)S and S(t1 x e1) = (e1 x 1)S",
          ok, "", 0 if ok else 1, t.seconds)

    # --- R-matrix decomposition, cross-multiplied against the table
    with timer() as t:
        ok = True
        table = R_matrix_entries()
        zz = LaurentPoly.var(1, 1)
        one1 = LaurentPoly.one(1)
        den_table = one1 - zz.scale_coeffs(qpow(2))          # 1 - q^2 z
        den_rs = zz.scale_coeffs(Q) - one1.scale_coeffs(QINV)  # q z - q^{-1}
        for key in table:
            x = TensorPoly.basis(key, one1)
            rs_num = (S_apply(x, 1).mul_poly(zz) - S_inv_apply(x, 1))
            tab_num = TensorPoly.zero(2, 1)
            for out_ch, poly in table[key]:
                tab_num = tab_num + TensorPoly.basis(out_ch, poly)
            ok &= not (rs_num.map_coeffs(lambda f: f * den_table)
                       - tab_num.map_coeffs(lambda f: f * den_rs))
    check(rep, f"hecke.rs.N{N}", "R(z) = (Sz - S^{-1})/(qz - q^{-1})", ok,
          "cross-multiplied against the explicit table", 0 if ok else 1, t.seconds)

    # --- R at z = 1 fixes the invariant vector (cross-multiplied)
    with timer() as t:
        x = singlet_vector(2)
        num, den = R_apply(x, 1, 2)
        resid = (num - x.mul_poly(den)).map_coeffs(
            lambda f: lp_specialize(f, 2, 1, QQ_ONE))
        ok = not resid
    check(rep, f"hecke.r_at_1.N{N}", "R(1) fixes the invariant vector", ok,
          "", 0 if ok else 1, t.seconds)

    # --- Yang-Baxter, cross-multiplied numerators
    if N >= 3:
        with timer() as t:
            bad = 0
            for e in sign_strings(N):
                x = TensorPoly.basis(e, LaurentPoly.one(N))
                for j in range(1, N - 1):
                    a, b, c = j, j + 1, j + 2
                    l = R_numerator_op(R_numerator_op(R_numerator_op(
                        x, a, b, b, c), b, c, a, c), a, b, a, b)
                    r = R_numerator_op(R_numerator_op(R_numerator_op(
                        x, b, c, a, b), a, b, a, c), b, c, b, c)
                    if l - r:
                        bad += 1
        check(rep, f"hecke.ybe.N{N}", "Yang-Baxter, cross-multiplied", bad == 0,
              "", bad, t.seconds)
    return rep


def _braid(x, j, op):
    return op(op(op(x, j), j + 1), j)


def _braid_rev(x, j, op):
    return op(op(op(x, j + 1), j), j + 1)


def _slot_f1(x: TensorPoly, j: int) -> TensorPoly:
    from .tensor import apply_slot
    return apply_slot(x, j, {PLUS: [(MINUS, QQ_ONE)]})


def _slot_e1(x: TensorPoly, j: int) -> TensorPoly:
    from .tensor import apply_slot
    return apply_slot(x, j, {MINUS: [(PLUS, QQ_ONE)]})


def _slot_t1(x: TensorPoly, j: int) -> TensorPoly:
    from .tensor import apply_slot
    return apply_slot(x, j, {PLUS: [(PLUS, Q)], MINUS: [(MINUS, QINV)]})


def _slot_t1inv(x: TensorPoly, j: int) -> TensorPoly:
    from .tensor import apply_slot
    return apply_slot(x, j, {PLUS: [(PLUS, QINV)], MINUS: [(MINUS, Q)]})
