"""Sparse multivariate polynomials over Q(zeta_N) with a fixed term order.

The term order is graded reverse lexicographic with x0 > x1 > ... throughout
the package, so echelonized bases and rendered polynomials are deterministic.
Exponent vectors are dense tuples (dimension stays small), coefficients are
kept in a sparse map with no stored zeros.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclotomic import Cyclotomic
from .errors import InputError
from .linalg import Echelon, Matrix


def grevlex_key(expt: tuple) -> tuple:
    """Sort key: larger key = larger monomial in grevlex with x0 > x1 > ..."""
    return (sum(expt), tuple(-e for e in reversed(expt)))


@lru_cache(maxsize=None)
def monomials_of_degree(nvars: int, degree: int) -> tuple:
    """All exponent tuples of the given total degree, descending grevlex."""
    def rec(k, rem):
        if k == 1:
            yield (rem,)
            return
        for e in range(rem, -1, -1):
            for rest in rec(k - 1, rem - e):
                yield (e,) + rest

    mons = sorted(rec(nvars, degree), key=grevlex_key, reverse=True)
    return tuple(mons)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> dict:
    """Map exponent tuple -> position in the descending grevlex list."""
    return {m: i for i, m in enumerate(monomials_of_degree(nvars, degree))}


class Poly:
    """Immutable sparse polynomial; `terms` maps exponent tuples to nonzero scalars."""

    __slots__ = ("nvars", "conductor", "terms", "_hash")

    def __init__(self, nvars: int, conductor: int, terms: dict | None = None):
        self.nvars = nvars
        self.conductor = conductor
        self.terms = dict(terms) if terms else {}
        self._hash = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(nvars: int, conductor: int) -> "Poly":
        return Poly(nvars, conductor)

    @staticmethod
    def constant(nvars: int, value: Cyclotomic) -> "Poly":
        p = Poly(nvars, value.n)
        if not value.is_zero():
            p.terms[(0,) * nvars] = value
        return p

    @staticmethod
    def variable(nvars: int, index: int, conductor: int) -> "Poly":
        expt = tuple(1 if i == index else 0 for i in range(nvars))
        return Poly(nvars, conductor, {expt: Cyclotomic.one(conductor)})

    @staticmethod
    def monomial(nvars: int, expt: tuple, coeff: Cyclotomic) -> "Poly":
        p = Poly(nvars, coeff.n)
        if not coeff.is_zero():
            p.terms[tuple(expt)] = coeff
        return p

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Max total degree of the stored terms; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    def _check(self, other: "Poly"):
        if self.nvars != other.nvars or self.conductor != other.conductor:
            raise InputError("polynomial variable/conductor mismatch")

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            nv = c if cur is None else cur + c
            if nv.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = nv
        return Poly(self.nvars, self.conductor, terms)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            nv = -c if cur is None else cur - c
            if nv.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = nv
        return Poly(self.nvars, self.conductor, terms)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, self.conductor, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        out: dict = {}
        if len(self.terms) > len(other.terms):
            a, b = other, self
        else:
            a, b = self, other
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                cur = out.get(e)
                nv = c if cur is None else cur + c
                if nv.is_zero():
                    out.pop(e, None)
                else:
                    out[e] = nv
        return Poly(self.nvars, self.conductor, out)

    def scale(self, scalar: Cyclotomic) -> "Poly":
        if scalar.is_zero():
            return Poly.zero(self.nvars, self.conductor)
        return Poly(
            self.nvars, self.conductor, {e: c * scalar for e, c in self.terms.items()}
        )

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise InputError("negative polynomial power")
        result = Poly.constant(self.nvars, Cyclotomic.one(self.conductor))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- term order --------------------------------------------------------

    def sorted_terms(self) -> list[tuple]:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading(self) -> tuple:
        if not self.terms:
            raise InputError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def monic(self) -> "Poly":
        _, c = self.leading()
        return self.scale(c.inverse())

    def coefficient(self, expt: tuple) -> Cyclotomic:
        return self.terms.get(tuple(expt), Cyclotomic.zero(self.conductor))

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.conductor == other.conductor
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.nvars, self.conductor, tuple(sorted(self.terms.items(), key=lambda t: t[0])))
            )
        return self._hash

    # -- calculus / substitution ----------------------------------------------

    def derivative(self, var: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            ne = tuple(v - 1 if i == var else v for i, v in enumerate(e))
            out[ne] = c * k
        return Poly(self.nvars, self.conductor, out)

    def substitute_linear(self, rows) -> "Poly":
        """Substitute x_i -> sum_j rows[i][j] * x_j (raw linear substitution)."""
        n = self.nvars
        images = [
            Poly(
                n,
                self.conductor,
                {
                    tuple(1 if jj == j else 0 for jj in range(n)): v
                    for j, v in enumerate(rows[i])
                    if not v.is_zero()
                },
            )
            for i in range(n)
        ]
        power_cache: dict = {}

        def power(i, e):
            key = (i, e)
            got = power_cache.get(key)
            if got is None:
                got = images[i] ** e
                power_cache[key] = got
            return got

        total = Poly.zero(n, self.conductor)
        for e, c in self.terms.items():
            term = Poly.constant(n, c)
            for i, ei in enumerate(e):
                if ei:
                    term = term * power(i, ei)
            total = total + term
        return total

    def eval_at(self, values: list["Poly"]) -> "Poly":
        """Substitute values[i] for x_i; values live in their own variable space."""
        if len(values) != self.nvars:
            raise InputError("wrong number of substitution values")
        if not values:
            raise InputError("cannot evaluate a polynomial in zero variables")
        tgt_nvars = values[0].nvars
        conductor = values[0].conductor
        power_cache: dict = {}

        def power(i, e):
            key = (i, e)
            got = power_cache.get(key)
            if got is None:
                got = values[i] ** e
                power_cache[key] = got
            return got

        total = Poly.zero(tgt_nvars, conductor)
        for e, c in self.terms.items():
            term = Poly.constant(tgt_nvars, c)
            for i, ei in enumerate(e):
                if ei:
                    term = term * power(i, ei)
            total = total + term
        return total

    # -- presentation ------------------------------------------------------------

    def render(self, varname: str = "x") -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"{varname}{i}" if k == 1 else f"{varname}{i}^{k}"
                for i, k in enumerate(e)
                if k
            )
            if c.is_rational():
                q = c.rational_value()
                neg = q < 0
                mag = abs(q)
                coeff = None if mag == 1 and mono else str(mag)
            else:
                neg = False
                coeff = f"({c})"
            body = "*".join(x for x in (coeff, mono) if x) or "1"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self.render()})"


def act(matrix: Matrix, p: Poly) -> Poly:
    """Group action g.p = p o g^{-1}; satisfies act(g, act(h, p)) == act(g*h, p)."""
    if matrix.n_cols != p.nvars:
        raise InputError("matrix size does not match polynomial variables")
    inv = matrix.inverse()
    return p.substitute_linear(inv.rows)


def compose_linear(p: Poly, matrix: Matrix) -> Poly:
    """Alias of the group action used by the analysis pipeline."""
    return act(matrix, p)


# -- linear forms ------------------------------------------------------------


def linear_form_from_row(row, nvars: int, conductor: int) -> Poly:
    """Build the normalized linear form sum row[j] * x_j (leading coefficient 1)."""
    terms = {}
    for j, v in enumerate(row):
        if not v.is_zero():
            terms[tuple(1 if jj == j else 0 for jj in range(nvars))] = v
    if not terms:
        raise InputError("zero row does not define a hyperplane")
    form = Poly(nvars, conductor, terms)
    return normalize_linear_form(form)


def normalize_linear_form(form: Poly) -> Poly:
    """Scale so the first nonzero coefficient (in variable order) is 1."""
    ok = (
        not form.is_zero()
        and form.total_degree() == 1
        and all(sum(e) == 1 for e in form.terms)
    )
    if not ok:
        raise InputError("not a linear form without constant term")
    for i in range(form.nvars):
        e = tuple(1 if j == i else 0 for j in range(form.nvars))
        c = form.terms.get(e)
        if c is not None:
            return form.scale(c.inverse())
    raise InputError("zero linear form")  # pragma: no cover


def linear_form_key(form: Poly) -> tuple:
    """Deterministic ordering key: coefficient tuple in variable order."""
    out = []
    zero = Cyclotomic.zero(form.conductor)
    for i in range(form.nvars):
        e = tuple(1 if j == i else 0 for j in range(form.nvars))
        out.append(form.terms.get(e, zero).key())
    return tuple(out)


# -- echelonized spans --------------------------------------------------------


def _poly_to_row(p: Poly, degree: int) -> dict:
    idx = monomial_index(p.nvars, degree)
    return {idx[e]: c for e, c in p.terms.items()}


def _row_to_poly(row: dict, nvars: int, degree: int, conductor: int) -> Poly:
    mons = monomials_of_degree(nvars, degree)
    return Poly(nvars, conductor, {mons[i]: c for i, c in row.items()})


def echelon_basis(polys: list[Poly], degree: int | None = None) -> list[Poly]:
    """Canonical RREF basis of the span of homogeneous polynomials of one degree."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    if degree is None:
        degree = polys[0].total_degree()
    nvars, conductor = polys[0].nvars, polys[0].conductor
    for p in polys:
        if not p.is_homogeneous() or p.total_degree() != degree:
            raise InputError("echelon_basis expects homogeneous polynomials of one degree")
    ech = Echelon()
    for p in polys:
        ech.add(_poly_to_row(p, degree))
    return [_row_to_poly(r, nvars, degree, conductor) for r in ech.basis_rows()]


def express_in_span(target: Poly, polys: list[Poly]):
    """Coefficients writing `target` as a combination of `polys`, or None."""
    from .linalg import solve_sparse_columns

    columns = [{e: c for e, c in p.terms.items()} for p in polys]
    goal = {e: c for e, c in target.terms.items()}
    return solve_sparse_columns(columns, goal)


def graded_piece_basis(polys: list[Poly], degree: int) -> list[Poly]:
    """Canonical basis of the degree-`degree` ambient graded piece of the
    subalgebra generated by the given homogeneous polynomials.

    Built degree by degree: the span at degree d is the sum of p_i times the
    span at degree d - deg(p_i), starting from the constants at degree 0.
    """
    if degree < 0:
        raise InputError("degree must be non-negative")
    gens = [p for p in polys if not p.is_zero()]
    if not gens:
        return []
    nvars, conductor = gens[0].nvars, gens[0].conductor
    for p in gens:
        if not p.is_homogeneous():
            raise InputError("graded_piece_basis expects homogeneous generators")
        if p.total_degree() == 0:
            raise InputError("constant generators are not allowed")
    levels: dict[int, list[Poly]] = {
        0: [Poly.constant(nvars, Cyclotomic.one(conductor))]
    }
    for d in range(1, degree + 1):
        ech = Echelon()
        for g in gens:
            dg = g.total_degree()
            if dg > d:
                continue
            for b in levels[d - dg]:
                ech.add(_poly_to_row(g * b, d))
        levels[d] = [
            _row_to_poly(r, nvars, d, conductor) for r in ech.basis_rows()
        ]
    return levels[degree]


# -- determinants over the polynomial ring -------------------------------------


def det_poly_matrix(rows: list[list[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials (division-free).

    Laplace expansion along columns with memoization on row subsets; fine for
    the sizes this package needs (Sylvester and Jacobian matrices, n <= ~9).
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InputError("determinant of a non-square polynomial matrix")
    if n == 0:
        raise InputError("empty determinant")
    nvars, conductor = rows[0][0].nvars, rows[0][0].conductor
    one = Poly.constant(nvars, Cyclotomic.one(conductor))
    zero = Poly.zero(nvars, conductor)
    cache: dict[tuple, Poly] = {}

    def minor(row_mask: int, col: int) -> Poly:
        if col == n:
            return one
        got = cache.get((row_mask, col))
        if got is not None:
            return got
        total = zero
        sign = 1
        for r in range(n):
            bit = 1 << r
            if row_mask & bit:
                continue
            entry = rows[r][col]
            if not entry.is_zero():
                sub = minor(row_mask | bit, col + 1)
                piece = entry * sub
                total = total + piece if sign == 1 else total - piece
            sign = -sign
        cache[(row_mask, col)] = total
        return total

    return minor(0, 0)


def coefficients_in_variable(p: Poly, var: int) -> list[Poly]:
    """Coefficient polynomials of p as a polynomial in x_var, ascending degree."""
    deg = max((e[var] for e in p.terms), default=-1)
    if deg < 0:
        return []
    coeffs = [Poly.zero(p.nvars, p.conductor) for _ in range(deg + 1)]
    for e, c in p.terms.items():
        k = e[var]
        rest = tuple(0 if i == var else v for i, v in enumerate(e))
        coeffs[k] = coeffs[k] + Poly.monomial(p.nvars, rest, c)
    return coeffs


def resultant(f: Poly, g: Poly, var: int) -> Poly:
    """Resultant of f and g with respect to x_var, by the Sylvester determinant.

    Convention: the Sylvester matrix has deg(g) shifted rows of f's
    coefficients on top of deg(f) shifted rows of g's coefficients, both in
    descending degree.  With this convention resultant(x - a, x - b) = a - b
    and resultant(f, g) = (-1)^(deg f * deg g) * resultant(g, f).
    """
    if f.is_zero() or g.is_zero():
        raise InputError("resultant of the zero polynomial")
    fc = coefficients_in_variable(f, var)
    gc = coefficients_in_variable(g, var)
    m = len(fc) - 1
    n = len(gc) - 1
    if m == 0 and n == 0:
        return Poly.constant(f.nvars, Cyclotomic.one(f.conductor))
    size = m + n
    zero = Poly.zero(f.nvars, f.conductor)
    rows = []
    f_desc = fc[::-1]
    g_desc = gc[::-1]
    for shift in range(n):
        rows.append([zero] * shift + f_desc + [zero] * (size - shift - m - 1))
    for shift in range(m):
        rows.append([zero] * shift + g_desc + [zero] * (size - shift - n - 1))
    return det_poly_matrix(rows)


def jacobian_determinant(polys: list[Poly]) -> Poly:
    """Determinant of the Jacobian matrix of n polynomials in n variables."""
    if not polys:
        raise InputError("empty Jacobian")
    n = polys[0].nvars
    if len(polys) != n:
        raise InputError("Jacobian needs as many polynomials as variables")
    rows = [[p.derivative(j) for j in range(n)] for p in polys]
    return det_poly_matrix(rows)
