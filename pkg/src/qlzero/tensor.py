"""V^{tensor N}-valued Laurent polynomials: the free model of spinon windows.

A TensorPoly of arity N maps sign strings (tuples of +1/-1, length N) to
LaurentPoly coefficients.  Two readings coexist and share this container:

  * mode windows: the monomial with exponent vector m in the coefficient of
    a sign string stands for the basis symbol with mode vector m (so the
    formal series variable enters as z^{-m});
  * series values: inside the generating-series pipelines the coefficient
    is an honest polynomial in the z's.

Slot operators (the quantum-group generators below, and the constant Hecke
operator elsewhere) act the same way under both readings; the distinction
only matters for variable operators, which live in the modules that use
them.

The number of z-variables normally equals the arity but may exceed it when
fusion leaves spectator variables behind.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .laurent import LaurentPoly
from .scalars import QQ_ONE, RatFuncQ, eta_expand, qpow, qq_int

SignString = tuple  # tuple of +1 / -1

PLUS, MINUS = 1, -1


def sign_strings(n: int) -> list[SignString]:
    """All sign strings of length n, lexicographic with + before -."""
    if n == 0:
        return [()]
    rest = sign_strings(n - 1)
    return [(s,) + r for s in (PLUS, MINUS) for r in rest]


class TensorPoly:
    __slots__ = ("arity", "nvars", "terms")

    def __init__(self, arity: int, terms: dict[SignString, LaurentPoly] | None = None,
                 nvars: int | None = None):
        self.arity = arity
        self.nvars = arity if nvars is None else nvars
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero(arity: int, nvars: int | None = None) -> "TensorPoly":
        return TensorPoly(arity, nvars=nvars)

    @staticmethod
    def basis(eps: SignString, poly: LaurentPoly) -> "TensorPoly":
        if not poly:
            return TensorPoly(len(eps), nvars=poly.arity)
        return TensorPoly(len(eps), {tuple(eps): poly}, nvars=poly.arity)

    @staticmethod
    def monomial(eps: SignString, expo: tuple, c: RatFuncQ = QQ_ONE) -> "TensorPoly":
        return TensorPoly.basis(eps, LaurentPoly.monomial(len(expo), expo, c))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return (self.arity == other.arity and self.nvars == other.nvars
                and self.terms == other.terms)

    def __add__(self, other: "TensorPoly") -> "TensorPoly":
        if self.arity != other.arity or self.nvars != other.nvars:
            raise ValueError("shape mismatch")
        out = dict(self.terms)
        for e, p in other.terms.items():
            s = out.get(e)
            s = p if s is None else s + p
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return TensorPoly(self.arity, out, nvars=self.nvars)

    def __neg__(self):
        return TensorPoly(self.arity, {e: -p for e, p in self.terms.items()},
                          nvars=self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: RatFuncQ) -> "TensorPoly":
        if not c:
            return TensorPoly(self.arity, nvars=self.nvars)
        return TensorPoly(self.arity, {e: p.scale_coeffs(c) for e, p in self.terms.items()},
                          nvars=self.nvars)

    def mul_poly(self, f: LaurentPoly) -> "TensorPoly":
        out = {}
        for e, p in self.terms.items():
            r = p * f
            if r:
                out[e] = r
        return TensorPoly(self.arity, out, nvars=self.nvars)

    def map_coeffs(self, fn: Callable[[LaurentPoly], LaurentPoly]) -> "TensorPoly":
        """Apply a z-operator to every coefficient polynomial."""
        out = {}
        nv = self.nvars
        for e, p in self.terms.items():
            r = fn(p)
            if r:
                out[e] = r
                nv = r.arity
        return TensorPoly(self.arity, out, nvars=nv if out else self.nvars)

    def coeff(self, eps: SignString) -> LaurentPoly:
        return self.terms.get(tuple(eps), LaurentPoly.zero(self.nvars))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            tag = "".join("+" if s > 0 else "-" for s in e) or "()"
            bits.append(f"[{tag}]({self.terms[e]!r})")
        return " + ".join(bits)


# -- slot-local linear maps --------------------------------------------------


def apply_slot(x: TensorPoly, j: int, images: dict) -> TensorPoly:
    """Apply a single-slot linear map given as {eps_in: [(eps_out, coeff)]}."""
    out = TensorPoly.zero(x.arity, x.nvars)
    for e, p in x.terms.items():
        for eps_out, c in images.get(e[j - 1], ()):
            t = list(e)
            t[j - 1] = eps_out
            out = out + TensorPoly(x.arity, {tuple(t): p.scale_coeffs(c)}, nvars=x.nvars)
    return out


def weight(eps: SignString) -> int:
    return sum(eps)


@dataclass(frozen=True)
class GradedSlot:
    """Homogeneous bidegree of a window component."""

    weight: int
    degree: int  # minus the total mode index


def weight_degree(x: TensorPoly) -> set[GradedSlot]:
    """Occupied (weight, degree) cells of a mode-window element."""
    out = set()
    for e, p in x.terms.items():
        w = weight(e)
        for expo in p.support():
            out.add(GradedSlot(w, -sum(expo)))
    return out


# -- the quantum-group generators (opposite-coproduct tensor action) --------

GENERATORS = ("e1", "f1", "t1", "t1inv", "e0aff", "f0aff", "qd")


def uq_apply(gen: str, x: TensorPoly) -> TensorPoly:
    """Iterated opposite-coproduct action on a mode window.

    Single-slot actions: e1 turns - into +, f1 turns + into -, t1 scales by
    q^{eps}; the affine pair additionally shifts the slot's mode by +1 (e0)
    or -1 (f0) and flips the other way; qd multiplies each term by q to the
    total mode.  Tails of t-factors implement the opposite coproduct:
    e-type generators carry t's to the right of the moving slot, f-type
    generators carry inverse t's to the left.
    """
    N = x.arity
    if gen == "t1":
        return _diag_weight(x, 1)
    if gen == "t1inv":
        return _diag_weight(x, -1)
    if gen == "qd":
        out = {}
        for e, p in x.terms.items():
            r = LaurentPoly(p.arity, {expo: c * qpow(sum(expo))
                                      for expo, c in p.terms.items()})
            out[e] = r
        return TensorPoly(N, out, nvars=x.nvars)
    if gen not in GENERATORS:
        raise ValueError(f"unknown generator {gen!r}")

    out = TensorPoly.zero(N, x.nvars)
    for e, p in x.terms.items():
        for j in range(1, N + 1):
            s = e[j - 1]
            if gen == "e1":
                if s != MINUS:
                    continue
                tail = sum(e[j:])  # t1 on the slots right of j
                t = list(e)
                t[j - 1] = PLUS
                out = out + TensorPoly(N, {tuple(t): p.scale_coeffs(qpow(tail))},
                                       nvars=x.nvars)
            elif gen == "f1":
                if s != PLUS:
                    continue
                head = sum(e[: j - 1])  # t1^{-1} on the slots left of j
                t = list(e)
                t[j - 1] = MINUS
                out = out + TensorPoly(N, {tuple(t): p.scale_coeffs(qpow(-head))},
                                       nvars=x.nvars)
            elif gen == "e0aff":
                if s != PLUS:
                    continue
                tail = -sum(e[j:])  # t0 = t1^{-1} on the right
                t = list(e)
                t[j - 1] = MINUS
                shifted = _shift_mode(p, j, +1).scale_coeffs(qpow(tail))
                from .locality import LEDGER
                LEDGER.record_shift("uq.e0aff", 1)
                out = out + TensorPoly(N, {tuple(t): shifted}, nvars=x.nvars)
            elif gen == "f0aff":
                if s != MINUS:
                    continue
                head = sum(e[: j - 1])  # t0^{-1} = t1 on the left
                t = list(e)
                t[j - 1] = PLUS
                shifted = _shift_mode(p, j, -1).scale_coeffs(qpow(head))
                out = out + TensorPoly(N, {tuple(t): shifted}, nvars=x.nvars)
    return out


def _diag_weight(x: TensorPoly, sign: int) -> TensorPoly:
    out = {}
    for e, p in x.terms.items():
        out[e] = p.scale_coeffs(qpow(sign * weight(e)))
    return TensorPoly(x.arity, out, nvars=x.nvars)


def _shift_mode(p: LaurentPoly, j: int, d: int) -> LaurentPoly:
    out = {}
    for expo, c in p.terms.items():
        t = list(expo)
        t[j - 1] += d
        out[tuple(t)] = c
    return LaurentPoly(p.arity, out)


SINGLET_COEFFS = {(PLUS, MINUS): QQ_ONE}  # v+ (x) v-  -  q^{-1} v- (x) v+
_SINGLET_SECOND = qq_int(-1) * qpow(-1)


def singlet_vector(nvars: int = 0) -> TensorPoly:
    """The two-slot invariant vector with unit coefficient polynomial."""
    one = LaurentPoly.one(nvars)
    return (TensorPoly.basis((PLUS, MINUS), one)
            + TensorPoly.basis((MINUS, PLUS), one.scale_coeffs(_SINGLET_SECOND)))


def singlet_contract(x: TensorPoly, j: int) -> TensorPoly:
    """Project slots j, j+1 onto the dual invariant channel.

    The (+,-) channel carries weight 1 and the (-,+) channel weight -q^{-1};
    all other channels die.  Channel weights of the fusion relation are the
    caller's business.  Variables are untouched.
    """
    if x.arity < 2 or not (1 <= j <= x.arity - 1):
        raise ValueError("need two adjacent slots")
    out = TensorPoly.zero(x.arity - 2, x.nvars)
    for e, p in x.terms.items():
        a, b = e[j - 1], e[j]
        if a + b != 0:
            continue
        c = QQ_ONE if a == PLUS else _SINGLET_SECOND
        rest = e[: j - 1] + e[j + 1:]
        out = out + TensorPoly(x.arity - 2, {rest: p.scale_coeffs(c)}, nvars=x.nvars)
    return out


# -- change of basis between mode symbols and monomial tensors --------------


def kappa(N: int) -> tuple:
    """Triangular offset vector; component j is floor((N-j)/2)."""
    return tuple((N - j) // 2 for j in range(1, N + 1))


def basis_change_F_monomial(direction: str, eps: SignString, m: tuple,
                            depth: int) -> TensorPoly:
    """Expand one basis symbol through the normalizing infinite products.

    direction 'forward'  : mode symbol at m  ->  monomial tensors,
    direction 'backward' : monomial tensor at m  ->  mode symbols.

    The expansion runs over the positive cone spanned by the adjacent steps
    (-1 at k, +1 at k+1); depth bounds the total number of steps.  Exact to
    the stated depth.
    """
    N = len(eps)
    if direction not in ("forward", "backward"):
        raise ValueError("direction must be 'forward' or 'backward'")
    inverse = direction == "forward"
    eta = eta_expand(depth, inverse=inverse)
    kap = kappa(N)
    sign = 1 if direction == "forward" else -1
    pairs = [(j, k) for j in range(N) for k in range(j + 1, N)]
    out = TensorPoly.zero(N)

    def rec(i: int, budget: int, shift: list, coeff: RatFuncQ):
        nonlocal out
        if i == len(pairs):
            n = tuple(m[t] + sign * kap[t] + shift[t] for t in range(N))
            out = out + TensorPoly.monomial(tuple(eps), n, coeff)
            return
        j, k = pairs[i]
        step = k - j
        d = 0
        while d * step <= budget:
            c = coeff * eta[d]
            if c:
                shift2 = list(shift)
                shift2[j] -= d
                shift2[k] += d
                rec(i + 1, budget - d * step, shift2, c)
            d += 1

    rec(0, depth, [0] * N, QQ_ONE)
    return out


def iter_lattice_steps(N: int, depth: int) -> Iterable[tuple]:
    """Vectors of the positive cone with at most `depth` adjacent steps."""
    def rec(i, budget, acc):
        if i == N - 1:
            yield tuple(acc)
            return
        for d in range(budget + 1):
            acc2 = list(acc)
            acc2[i] -= d
            acc2[i + 1] += d
            yield from rec(i + 1, budget - d, acc2)

    yield from rec(0, depth, [0] * N)
