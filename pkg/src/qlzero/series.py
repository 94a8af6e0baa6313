"""Symbol-valued series windows.

A SymbolSeries is a finite chunk of a generating series whose coefficients
are tracked as formal basis symbols: it maps symbols (eps, m) - a sign
string and a mode vector, the sector being the string's length - to the
Laurent polynomial (in honest series variables) that multiplies them.

Pipelines apply variable operators to the values and slot operators to the
symbols' sign strings; at the end, `extract` reads off the coefficient of
a chosen series monomial as an exact vector over symbols.  Initializing a
window over non-positive modes implements the highest-weight truncation:
everything computed here is exact modulo that family.

Mode vectors index the coefficient of z^{-m}, so the value attached to the
symbol (eps, m) starts life as the formal monomial z^{+...} with exponent
vector -m.
"""

from __future__ import annotations

from .laurent import LaurentPoly, lp_insert_var, lp_specialize
from .scalars import RatFuncQ
from .tensor import SignString
from .windows import cone_exponents

Symbol = tuple  # (eps, m)


class SymbolSeries:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Symbol, LaurentPoly] | None = None):
        self.nvars = nvars
        self.terms = terms if terms is not None else {}

    @staticmethod
    def window(eps: SignString, max_degree: int) -> "SymbolSeries":
        """The truncated series for one sign string: all symbols with
        non-positive modes of total degree <= max_degree."""
        N = len(eps)
        terms = {}
        for m in cone_exponents(N, max_degree):
            terms[(tuple(eps), m)] = LaurentPoly.monomial(N, tuple(-x for x in m))
        return SymbolSeries(N, terms)

    def map_values(self, fn) -> "SymbolSeries":
        out = {}
        nv = self.nvars
        for sym, p in self.terms.items():
            r = fn(p)
            if r:
                out[sym] = r
                nv = r.arity
        return SymbolSeries(nv if out else self.nvars, out)

    def mul(self, poly: LaurentPoly) -> "SymbolSeries":
        return self.map_values(lambda p: p * poly)

    def scale(self, c: RatFuncQ) -> "SymbolSeries":
        if not c:
            return SymbolSeries(self.nvars)
        return self.map_values(lambda p: p.scale_coeffs(c))

    def specialize(self, j: int, k: int, c: RatFuncQ) -> "SymbolSeries":
        out = self.map_values(lambda p: lp_specialize(p, j, k, c))
        out.nvars = self.nvars - 1
        return out

    def insert_var(self, j: int) -> "SymbolSeries":
        out = self.map_values(lambda p: lp_insert_var(p, j))
        out.nvars = self.nvars + 1
        return out

    def __add__(self, other: "SymbolSeries") -> "SymbolSeries":
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")
        out = dict(self.terms)
        for sym, p in other.terms.items():
            s = out.get(sym)
            s = p if s is None else s + p
            if s:
                out[sym] = s
            elif sym in out:
                del out[sym]
        return SymbolSeries(self.nvars, out)

    def __neg__(self):
        return SymbolSeries(self.nvars, {s: -p for s, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def apply_pair_table(self, j: int, table: dict) -> "SymbolSeries":
        """Two-slot operator on the symbols' sign strings at slots (j, j+1)."""
        out: dict[Symbol, LaurentPoly] = {}
        for (eps, m), p in self.terms.items():
            key = (eps[j - 1], eps[j])
            for (a, b), c in table.get(key, ()):
                t = list(eps)
                t[j - 1], t[j] = a, b
                sym = (tuple(t), m)
                r = p.scale_coeffs(c)
                s = out.get(sym)
                s = r if s is None else s + r
                if s:
                    out[sym] = s
                elif sym in out:
                    del out[sym]
        return SymbolSeries(self.nvars, out)

    def apply_slot_images(self, j: int, images: dict) -> "SymbolSeries":
        """Single-slot operator {eps_in: [(eps_out, coeff)]} at slot j."""
        out: dict[Symbol, LaurentPoly] = {}
        for (eps, m), p in self.terms.items():
            for eps_out, c in images.get(eps[j - 1], ()):
                t = list(eps)
                t[j - 1] = eps_out
                sym = (tuple(t), m)
                r = p.scale_coeffs(c)
                s = out.get(sym)
                s = r if s is None else s + r
                if s:
                    out[sym] = s
                elif sym in out:
                    del out[sym]
        return SymbolSeries(self.nvars, out)

    def targets(self) -> set:
        """Union of the value supports: candidate extraction exponents."""
        out = set()
        for p in self.terms.values():
            out.update(p.support())
        return out

    def extract(self, expo: tuple) -> dict:
        """Coefficient of the series monomial with the given (formal)
        exponent vector, as a sparse vector over symbols."""
        out = {}
        for sym, p in self.terms.items():
            c = p.terms.get(tuple(expo))
            if c is not None:
                out[sym] = c
        return out

    def extract_all(self) -> dict[tuple, dict]:
        """All coefficients at once: {exponent: {symbol: coeff}}."""
        out: dict[tuple, dict] = {}
        for sym, p in self.terms.items():
            for expo, c in p.terms.items():
                out.setdefault(expo, {})[sym] = c
        return out
