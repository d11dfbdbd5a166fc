"""Finite matrix groups: closure from generators and subgroup machinery.

A MatrixGroup owns the deduplicated element list (element 0 is the identity,
the rest in BFS discovery order, so the ordering is deterministic) and lazy
multiplication/inverse/order/determinant oracles on element indices.
Subgroups are index sets into the parent group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import Cyclotomic, root_of_unity_order
from .errors import InputError, InternalCheckError, LimitError
from .linalg import Matrix

DEFAULT_MAX_ORDER = 2000


class MatrixGroup:
    """A finite group of invertible matrices, closed under multiplication."""

    def __init__(self, dimension, conductor, elements, generator_indices, provenance):
        self.dimension = dimension
        self.conductor = conductor
        self.elements: tuple[Matrix, ...] = tuple(elements)
        self.generator_indices: tuple[int, ...] = tuple(generator_indices)
        # provenance[i] = (parent index, generator index) with i = parent * gen,
        # None for the identity; lets callers rebuild homomorphic images cheaply.
        self.provenance = tuple(provenance)
        self._index = {m: i for i, m in enumerate(self.elements)}
        self._mul: dict[tuple[int, int], int] = {}
        self._inv: dict[int, int] = {}
        self._order: dict[int, int] = {}
        self._det: dict[int, Cyclotomic] = {}
        self._monomial: bool | None = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def matrix(self, i: int) -> Matrix:
        return self.elements[i]

    def index_of(self, m: Matrix) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise InputError("matrix is not an element of the group") from None

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        got = self._mul.get(key)
        if got is None:
            got = self.index_of(self.elements[i] * self.elements[j])
            self._mul[key] = got
        return got

    def inv(self, i: int) -> int:
        got = self._inv.get(i)
        if got is None:
            got = self.index_of(self.elements[i].inverse())
            self._inv[i] = got
        return got

    def element_order(self, i: int) -> int:
        got = self._order.get(i)
        if got is None:
            k, cur = 1, i
            while cur != 0:
                cur = self.mul(cur, i)
                k += 1
            self._order[i] = got = k
        return got

    def det(self, i: int) -> Cyclotomic:
        got = self._det.get(i)
        if got is None:
            got = self.elements[i].det()
            self._det[i] = got
        return got

    def is_monomial_action(self) -> bool:
        """True when every element maps each variable to a scalar multiple of one."""
        if self._monomial is None:
            self._monomial = all(m.is_monomial() for m in self.elements)
        return self._monomial

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)), self.generator_indices)

    def commutator(self, i: int, j: int) -> int:
        return self.mul(self.mul(i, j), self.mul(self.inv(i), self.inv(j)))

    def conjugate(self, g: int, h: int) -> int:
        """g h g^{-1} as an element index."""
        return self.mul(self.mul(g, h), self.inv(g))

    # -- JSON group description -------------------------------------------

    def to_description(self) -> dict:
        return {
            "conductor": self.conductor,
            "dimension": self.dimension,
            "generators": [
                matrix_to_json(self.elements[i]) for i in self.generator_indices
            ],
        }

    @staticmethod
    def from_description(desc: dict, max_order: int = DEFAULT_MAX_ORDER) -> "MatrixGroup":
        gens = parse_description(desc)
        return close_group(gens, max_order=max_order)


def matrix_to_json(m: Matrix) -> list:
    """Row-major list of cyclotomic term arrays."""
    return [entry.to_terms() for row in m.rows for entry in row]


def matrix_from_json(flat: list, dimension: int, conductor: int) -> Matrix:
    if len(flat) != dimension * dimension:
        raise InputError(
            f"matrix entry count {len(flat)} does not match dimension {dimension}"
        )
    entries = [Cyclotomic.from_terms(conductor, t) for t in flat]
    rows = [
        entries[r * dimension : (r + 1) * dimension] for r in range(dimension)
    ]
    return Matrix(rows)


def parse_description(desc: dict) -> list[Matrix]:
    try:
        conductor = int(desc["conductor"])
        dimension = int(desc["dimension"])
        raw_gens = desc["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad group description: {exc}") from exc
    if dimension < 1:
        raise InputError("dimension must be positive")
    if conductor < 1:
        raise InputError("conductor must be positive")
    if not isinstance(raw_gens, list):
        raise InputError("generators must be a list")
    return [matrix_from_json(g, dimension, conductor) for g in raw_gens]


def close_group(generators: list[Matrix], max_order: int = DEFAULT_MAX_ORDER) -> MatrixGroup:
    """Breadth-first closure with deterministic element order.

    Elements are discovered from the identity by right-multiplication with the
    generators in input order; exceeding max_order raises LimitError.
    """
    if not generators:
        raise InputError("at least one generator (or an explicit identity) is required")
    dim = generators[0].n_rows
    conductor = generators[0].conductor
    for g in generators:
        if g.n_rows != g.n_cols:
            raise InputError("generators must be square")
        if g.n_rows != dim:
            raise InputError("generators must share one dimension")
        if g.conductor != conductor:
            raise InputError("generators must share one conductor")
        if g.det().is_zero():
            raise InputError("singular generator: the action would not be faithful")

    identity = Matrix.identity(dim, conductor)
    elements = [identity]
    provenance: list[tuple[int, int] | None] = [None]
    index = {identity: 0}
    gen_indices: list[int] = []
    cursor = 0
    while cursor < len(elements):
        current = elements[cursor]
        for gi, g in enumerate(generators):
            prod = current * g
            if prod not in index:
                if len(elements) >= max_order:
                    raise LimitError(
                        f"group closure exceeded {max_order} elements; "
                        "group too large or possibly infinite"
                    )
                index[prod] = len(elements)
                elements.append(prod)
                provenance.append((cursor, gi))
        cursor += 1
    for g in generators:
        gen_indices.append(index[g])
    return MatrixGroup(dim, conductor, elements, gen_indices, provenance)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a MatrixGroup as a sorted member-index tuple."""

    group: MatrixGroup
    members: tuple[int, ...]
    generator_indices: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, i: int) -> bool:
        return i in self._member_set()

    def _member_set(self) -> frozenset:
        got = getattr(self, "_cached_set", None)
        if got is None:
            got = frozenset(self.members)
            object.__setattr__(self, "_cached_set", got)
        return got

    def is_trivial(self) -> bool:
        return self.members == (0,)

    def __repr__(self):
        return f"Subgroup(order={self.order}, generators={list(self.generator_indices)})"


def subgroup_generated(group: MatrixGroup, seeds) -> Subgroup:
    """Smallest subgroup of `group` containing the seed element indices."""
    seeds = list(seeds)
    for s in seeds:
        if not 0 <= s < group.order:
            raise InputError(f"element index {s} out of range")
    members = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for m in frontier:
            for s in seeds:
                prod = group.mul(m, s)
                if prod not in members:
                    members.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return Subgroup(group, tuple(sorted(members)), tuple(dict.fromkeys(seeds)))


def commutator_subgroup(sub: Subgroup) -> Subgroup:
    """Derived subgroup: normal closure in `sub` of its generator commutators."""
    group = sub.group
    gens = list(sub.generator_indices)
    seeds = {group.commutator(a, b) for a in gens for b in gens}
    seeds.discard(0)
    current = subgroup_generated(group, sorted(seeds))
    while True:
        extra = set()
        members = set(current.members)
        for g in gens:
            for m in current.members:
                c = group.conjugate(g, m)
                if c not in members:
                    extra.add(c)
        if not extra:
            return current
        current = subgroup_generated(
            group, sorted(set(current.generator_indices) | extra)
        )


def is_normal(sub: Subgroup, within: Subgroup | None = None) -> bool:
    """Whether `sub` is normal in `within` (default: the whole parent group)."""
    group = sub.group
    if within is None:
        within = group.full_subgroup()
    members = sub._member_set()
    if not members <= within._member_set():
        raise InputError("subgroup is not contained in the ambient subgroup")
    amb_gens = within.generator_indices or tuple(within.members)
    sub_gens = sub.generator_indices or tuple(sub.members)
    for g in amb_gens:
        for h in sub_gens:
            if group.conjugate(g, h) not in members:
                return False
    return True


def coset_decomposition(within: Subgroup, sub: Subgroup) -> list[tuple[int, ...]]:
    """Left cosets of `sub` in `within` as sorted index tuples.

    Cosets are ordered by their smallest member, which is also the canonical
    representative, so the decomposition is deterministic.
    """
    group = within.group
    if not sub._member_set() <= within._member_set():
        raise InputError("subgroup is not contained in the ambient subgroup")
    seen = set()
    cosets = []
    for g in within.members:
        if g in seen:
            continue
        coset = tuple(sorted(group.mul(g, h) for h in sub.members))
        if not set(coset) <= within._member_set():  # pragma: no cover
            raise InternalCheckError("coset escapes the ambient subgroup")
        seen.update(coset)
        cosets.append(coset)
    cosets.sort(key=lambda c: c[0])
    return cosets


def coset_representatives(within: Subgroup, sub: Subgroup) -> list[int]:
    return [c[0] for c in coset_decomposition(within, sub)]


def quotient_mul(group: MatrixGroup, sub: Subgroup, coset_of: dict, a: int, b: int) -> int:
    """Representative of the coset containing a*b (requires normality for a group law)."""
    return coset_of[group.mul(a, b)]


def coset_lookup(within: Subgroup, sub: Subgroup) -> dict[int, int]:
    """Map each member of `within` to its coset representative."""
    out = {}
    for coset in coset_decomposition(within, sub):
        rep = coset[0]
        for m in coset:
            out[m] = rep
    return out


def determinant_character(sub: Subgroup) -> dict[int, Cyclotomic]:
    """det on each member; every value is checked to be a root of unity."""
    group = sub.group
    out = {}
    for i in sub.members:
        d = group.det(i)
        if root_of_unity_order(d) is None:
            raise InternalCheckError(
                f"determinant of element {i} is not a root of unity"
            )
        out[i] = d
    return out
