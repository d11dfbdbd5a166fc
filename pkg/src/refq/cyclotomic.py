"""Exact arithmetic in Q(zeta_N) for a fixed conductor N.

Elements are stored on the power basis 1, z, ..., z^(phi(N)-1) with rational
coefficients, fully reduced modulo the N-th cyclotomic polynomial, so equality
is coefficient-wise and every value has exactly one representation.  All
values are immutable; a single analysis session uses a single conductor and
mixed-conductor arithmetic is rejected.
"""

from __future__ import annotations

from math import gcd

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

from .errors import InputError

_Q0 = Q(0)
_Q1 = Q(1)


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _int_poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    """Divide integer polynomials (coefficient lists, low degree first); den monic."""
    num = list(num)
    dn = len(den) - 1
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c == 0:
            continue
        quot[k - dn] = c
        for j in range(dn + 1):
            num[k - dn + j] -= c * den[j]
    assert not any(num), "inexact cyclotomic polynomial division"
    return quot


_CYC_POLY: dict[int, list[int]] = {}


def cyclotomic_polynomial(n: int) -> list[int]:
    """Integer coefficients of the n-th cyclotomic polynomial, low degree first."""
    if n in _CYC_POLY:
        return _CYC_POLY[n]
    p = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        p = _int_poly_div_exact(p, cyclotomic_polynomial(d))
    _CYC_POLY[n] = p
    return p


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


class _Field:
    """Per-conductor data: phi(N) and the reduction table for high powers of z."""

    __slots__ = ("n", "phi", "red", "zero", "one")

    def __init__(self, n: int):
        self.n = n
        poly = cyclotomic_polynomial(n)
        phi = len(poly) - 1
        self.phi = phi
        # red[k - phi] = coefficients of z^k on the power basis, for
        # phi <= k <= max(2*phi - 2, n - 1) (products and parsed exponents).
        top = max(2 * phi - 2, n - 1)
        red: list[tuple] = []
        cur = [-Q(c) for c in poly[:phi]]
        red.append(tuple(cur))
        for _ in range(phi + 1, top + 1):
            nxt = [_Q0] + cur[: phi - 1]
            lead = cur[phi - 1]
            if lead:
                first = red[0]
                nxt = [a + lead * b for a, b in zip(nxt, first)]
            red.append(tuple(nxt))
            cur = nxt
        self.red = red
        self.zero = None
        self.one = None


_FIELDS: dict[int, _Field] = {}


def _field(n: int) -> _Field:
    f = _FIELDS.get(n)
    if f is None:
        if n < 1:
            raise InputError(f"conductor must be a positive integer, got {n}")
        f = _Field(n)
        _FIELDS[n] = f
        f.zero = Cyclotomic(n, (_Q0,) * f.phi)
        f.one = Cyclotomic(n, (_Q1,) + (_Q0,) * (f.phi - 1))
    return f


def _solve_rational(mat: list[list], rhs: list) -> list | None:
    """Solve a small square rational system by Gaussian elimination; None if singular."""
    k = len(mat)
    aug = [list(mat[i]) + [rhs[i]] for i in range(k)]
    for col in range(k):
        piv = None
        for r in range(col, k):
            if aug[r][col]:
                piv = r
                break
        if piv is None:
            return None
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][k] for i in range(k)]


class Cyclotomic:
    """An element of Q(zeta_N), canonical on the power basis."""

    __slots__ = ("n", "c", "_hash")

    def __init__(self, n: int, coeffs: tuple):
        self.n = n
        self.c = coeffs
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n: int) -> "Cyclotomic":
        return _field(n).zero

    @staticmethod
    def one(n: int) -> "Cyclotomic":
        return _field(n).one

    @staticmethod
    def from_rational(n: int, value) -> "Cyclotomic":
        f = _field(n)
        return Cyclotomic(n, (Q(value),) + (_Q0,) * (f.phi - 1))

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        """zeta_N^k, reduced."""
        f = _field(n)
        k %= n
        if k < f.phi:
            coeffs = [_Q0] * f.phi
            coeffs[k] = _Q1
            return Cyclotomic(n, tuple(coeffs))
        return Cyclotomic(n, f.red[k - f.phi])

    # -- helpers ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.n != self.n:
                raise InputError(
                    f"conductor mismatch: {self.n} vs {other.n}"
                )
            return other
        if isinstance(other, int) or type(other) is type(_Q0):
            return Cyclotomic.from_rational(self.n, other)
        return None

    def is_zero(self) -> bool:
        return not any(self.c)

    def is_one(self) -> bool:
        return self.c[0] == 1 and not any(self.c[1:])

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def rational_value(self):
        if not self.is_rational():
            raise InputError(f"{self} is not rational")
        return self.c[0]

    def key(self) -> tuple:
        """Deterministic sort key (numerator/denominator pairs of the coefficients)."""
        return tuple((int(q.numerator), int(q.denominator)) for q in self.c)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.n, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Cyclotomic(self.n, tuple(a - b for a, b in zip(self.c, other.c)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Cyclotomic(self.n, tuple(-a for a in self.c))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.c, other.c
        phi = len(a)
        if phi == 1:
            return Cyclotomic(self.n, (a[0] * b[0],))
        conv = [_Q0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    conv[i + j] += ai * bj
        red = _field(self.n).red
        out = conv[:phi]
        for k in range(2 * phi - 2, phi - 1, -1):
            ck = conv[k]
            if ck:
                row = red[k - phi]
                out = [x + ck * y for x, y in zip(out, row)]
        return Cyclotomic(self.n, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise InputError("division by zero in the cyclotomic field")
        phi = len(self.c)
        if phi == 1:
            return Cyclotomic(self.n, (1 / self.c[0],))
        # Columns of multiplication-by-self on the power basis: self * z^j.
        cols = [self]
        z = Cyclotomic.zeta(self.n, 1)
        for _ in range(1, phi):
            cols.append(cols[-1] * z)
        mat = [[cols[j].c[i] for j in range(phi)] for i in range(phi)]
        rhs = [_Q1] + [_Q0] * (phi - 1)
        sol = _solve_rational(mat, rhs)
        if sol is None:  # pragma: no cover - impossible in a field
            raise InputError("non-invertible cyclotomic element")
        return Cyclotomic(self.n, tuple(sol))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int,)) or type(other) is type(_Q0):
            return self.is_rational() and self.c[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.c))
        return self._hash

    # -- presentation ---------------------------------------------------

    def __str__(self):
        parts = []
        sym = f"z{self.n}"
        for e, q in enumerate(self.c):
            if not q:
                continue
            if e == 0:
                mag = str(abs(q))
            else:
                power = sym if e == 1 else f"{sym}^{e}"
                mag = power if abs(q) == 1 else f"{abs(q)}*{power}"
            if not parts:
                parts.append(mag if q > 0 else f"-{mag}")
            else:
                parts.append(f"+ {mag}" if q > 0 else f"- {mag}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Cyclotomic({self.n}, {self})"

    # -- JSON term encoding ----------------------------------------------

    def to_terms(self) -> list[list[int]]:
        """Encode as [numerator, denominator, exponent] triples."""
        return [
            [int(q.numerator), int(q.denominator), e]
            for e, q in enumerate(self.c)
            if q
        ]

    @staticmethod
    def from_terms(n: int, terms) -> "Cyclotomic":
        """Decode a term list; exponents are taken modulo N and reduced."""
        total = Cyclotomic.zero(n)
        for t in terms:
            if len(t) != 3:
                raise InputError(f"bad cyclotomic term {t!r}; expected [num, den, exp]")
            num, den, exp = t
            if den == 0:
                raise InputError("zero denominator in cyclotomic term")
            total = total + Cyclotomic.zeta(n, exp) * Q(int(num), int(den))
        return total


def root_of_unity_order(a: Cyclotomic, bound: int | None = None) -> int | None:
    """Smallest m >= 1 with a**m == 1, searched up to 2N; None if there is none.

    The roots of unity of Q(zeta_N) have order dividing lcm(2, N), so the
    2N search bound is exhaustive.
    """
    if bound is None:
        bound = 2 * a.n
    one = Cyclotomic.one(a.n)
    acc = a
    for m in range(1, bound + 1):
        if acc == one:
            return m
        acc = acc * a
    return None


def rational(value) -> Q:
    """Construct the rational scalar type used throughout (gmpy2.mpq)."""
    return Q(value)
