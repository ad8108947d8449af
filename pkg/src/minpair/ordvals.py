"""Totally ordered value arithmetic and finitely generated value groups.

Values live in Q^k ordered lexicographically (k = 1 for the classical
rank-one case, k = 2 once a transcendental jump is adjoined), together
with a single formal infinity that dominates everything.  Value groups
are given by finite generating sets; membership, index and order
computations reduce to integer lattice work after clearing
denominators.
"""

from __future__ import annotations

import math
from fractions import Fraction


class RankMismatchError(ValueError):
    """Raised when two finite values of different ranks are combined."""


class NotASubgroupError(ValueError):
    """Raised when an index is requested over a non-subgroup.

    The offending generator is kept in ``witness``.
    """

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class OrderedValue:
    """An element of Q^k with the lexicographic order, or infinity.

    Instances are immutable.  ``coords`` is a tuple of Fractions, or
    None for the infinite value (use the module constant INFINITY).
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        if coords is None:
            object.__setattr__(self, "coords", None)
        else:
            object.__setattr__(
                self, "coords", tuple(Fraction(c) for c in coords)
            )
            if not self.coords:
                raise ValueError("a finite value needs at least one coordinate")

    @classmethod
    def of(cls, *coords):
        return cls(coords)

    @classmethod
    def zero(cls, rank=1):
        return cls((0,) * rank)

    def __setattr__(self, name, value):
        raise AttributeError("OrderedValue is immutable")

    @property
    def is_infinite(self):
        return self.coords is None

    @property
    def rank(self):
        if self.coords is None:
            raise ValueError("infinity has no rank")
        return len(self.coords)

    def is_zero(self):
        return self.coords is not None and all(c == 0 for c in self.coords)

    def embed(self, rank):
        """Pad with trailing zeros up to the given rank.

        The first coordinate is the dominant one, so a rank-one value
        alpha becomes (alpha, 0, ...) and order relations with other
        embedded rank-one values are preserved.
        """
        if self.coords is None:
            return self
        if rank < len(self.coords):
            raise RankMismatchError("cannot embed into a smaller rank")
        if rank == len(self.coords):
            return self
        return OrderedValue(self.coords + (0,) * (rank - len(self.coords)))

    def __getitem__(self, i):
        if self.coords is None:
            raise ValueError("infinity has no coordinates")
        return self.coords[i]

    def __add__(self, other):
        if not isinstance(other, OrderedValue):
            return NotImplemented
        if self.coords is None or other.coords is None:
            return INFINITY
        self._check_rank(other)
        return OrderedValue(a + b for a, b in zip(self.coords, other.coords))

    def __neg__(self):
        if self.coords is None:
            raise ValueError("infinity has no negative")
        return OrderedValue(-c for c in self.coords)

    def __sub__(self, other):
        if not isinstance(other, OrderedValue):
            return NotImplemented
        if other.coords is None:
            raise ValueError("cannot subtract infinity")
        if self.coords is None:
            return INFINITY
        self._check_rank(other)
        return OrderedValue(a - b for a, b in zip(self.coords, other.coords))

    def __mul__(self, k):
        if not isinstance(k, (int, Fraction)):
            return NotImplemented
        if self.coords is None:
            if k > 0:
                return INFINITY
            raise ValueError("infinity may only be scaled by a positive factor")
        return OrderedValue(k * c for c in self.coords)

    __rmul__ = __mul__

    def _check_rank(self, other):
        if len(self.coords) != len(other.coords):
            raise RankMismatchError(
                "rank %d vs rank %d" % (len(self.coords), len(other.coords))
            )

    def _cmp(self, other):
        if not isinstance(other, OrderedValue):
            raise TypeError("cannot compare OrderedValue with %r" % (other,))
        if self.coords is None and other.coords is None:
            return 0
        if self.coords is None:
            return 1
        if other.coords is None:
            return -1
        self._check_rank(other)
        if self.coords < other.coords:
            return -1
        if self.coords > other.coords:
            return 1
        return 0

    def __eq__(self, other):
        if not isinstance(other, OrderedValue):
            return NotImplemented
        if self.coords is None or other.coords is None:
            return self.coords is other.coords is None
        return self.coords == other.coords

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        if self.coords is None:
            return "OrderedValue(inf)"
        return "OrderedValue(%s)" % (", ".join(str(c) for c in self.coords))


INFINITY = OrderedValue(None)


def compare(u, v):
    """Three-way comparison: -1, 0 or 1."""
    return u._cmp(v)


def value_to_json(v):
    if v.coords is None:
        return "inf"
    if len(v.coords) == 1:
        return str(v.coords[0])
    return [str(c) for c in v.coords]


def value_from_json(obj):
    if obj == "inf":
        return INFINITY
    if isinstance(obj, str):
        return OrderedValue((Fraction(obj),))
    if isinstance(obj, (int, Fraction)):
        return OrderedValue((Fraction(obj),))
    return OrderedValue(tuple(Fraction(str(c)) for c in obj))


def _xgcd(a, b):
    """Extended gcd: returns (g, x, y) with g = ax + by, g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        return -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _pivot(row):
    for i, x in enumerate(row):
        if x:
            return i
    return None


class _ZLattice:
    """A subgroup of Z^dim kept as a row-echelon integer basis.

    Rows are stored with strictly increasing pivot columns and positive
    pivots, so membership tests and coordinate extraction are a single
    front-to-back pass.
    """

    def __init__(self, dim):
        self.dim = dim
        self.rows = []

    @property
    def rank(self):
        return len(self.rows)

    def add(self, vec):
        v = [int(x) for x in vec]
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        idx = 0
        while True:
            p = _pivot(v)
            if p is None:
                return
            while idx < len(self.rows) and _pivot(self.rows[idx]) < p:
                idx += 1
            if idx == len(self.rows) or _pivot(self.rows[idx]) > p:
                if v[p] < 0:
                    v = [-x for x in v]
                self.rows.insert(idx, v)
                return
            row = self.rows[idx]
            g, x, y = _xgcd(row[p], v[p])
            combined = [x * a + y * b for a, b in zip(row, v)]
            v = [
                (row[p] // g) * b - (v[p] // g) * a
                for a, b in zip(row, v)
            ]
            self.rows[idx] = combined

    def coordinates(self, vec):
        """Express vec over the basis; returns the integer coefficient
        list, or None when vec is not in the lattice."""
        v = [int(x) for x in vec]
        coeffs = []
        for row in self.rows:
            p = _pivot(row)
            if _pivot(v) is not None and _pivot(v) < p:
                return None
            if v[p] % row[p] != 0:
                return None
            q = v[p] // row[p]
            coeffs.append(q)
            v = [a - q * b for a, b in zip(v, row)]
        if _pivot(v) is not None:
            return None
        return coeffs

    def contains(self, vec):
        return self.coordinates(vec) is not None


def _det(mat):
    n = len(mat)
    m = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


def _common_scale(values):
    d = 1
    for v in values:
        for c in v.coords:
            d = d * c.denominator // math.gcd(d, c.denominator)
    return d


def _check_finite_same_rank(values):
    rank = None
    for v in values:
        if v.coords is None:
            raise ValueError("value groups contain only finite values")
        if rank is None:
            rank = v.rank
        elif v.rank != rank:
            raise RankMismatchError(
                "mixed ranks %d and %d in one computation" % (rank, v.rank)
            )
    return rank


class ValueGroup:
    """A finitely generated subgroup of Q^rank (lex ordered)."""

    __slots__ = ("rank_", "generators")

    def __init__(self, rank, generators):
        gens = tuple(generators)
        for g in gens:
            if g.coords is None:
                raise ValueError("infinity cannot generate a value group")
            if g.rank != rank:
                raise RankMismatchError(
                    "generator of rank %d in a rank-%d group" % (g.rank, rank)
                )
        object.__setattr__(self, "rank_", rank)
        object.__setattr__(self, "generators", gens)

    @property
    def rank(self):
        return self.rank_

    def __setattr__(self, name, value):
        raise AttributeError("ValueGroup is immutable")

    def _lattice(self, scale):
        lat = _ZLattice(self.rank_)
        for g in self.generators:
            lat.add([c * scale for c in g.coords])
        return lat

    def contains(self, value):
        if value.coords is None:
            return False
        if value.rank != self.rank_:
            raise RankMismatchError(
                "value of rank %d against a rank-%d group"
                % (value.rank, self.rank_)
            )
        scale = _common_scale(list(self.generators) + [value])
        lat = self._lattice(scale)
        return lat.contains([c * scale for c in value.coords])

    def __repr__(self):
        return "ValueGroup(rank=%d, generators=%s)" % (
            self.rank_,
            list(self.generators),
        )


def group_membership(value, group):
    return group.contains(value)


def group_index(group, subgroup):
    """Index of subgroup inside group: a positive int, or math.inf when
    the ranks of the generated lattices differ.

    Raises NotASubgroupError when some generator of the alleged
    subgroup falls outside the bigger group.
    """
    if group.rank != subgroup.rank:
        raise RankMismatchError(
            "group of rank %d vs subgroup of rank %d"
            % (group.rank, subgroup.rank)
        )
    everything = list(group.generators) + list(subgroup.generators)
    if not everything:
        return 1
    scale = _common_scale(everything)
    big = group._lattice(scale)
    small = subgroup._lattice(scale)
    for g in subgroup.generators:
        if not big.contains([c * scale for c in g.coords]):
            raise NotASubgroupError("generator %r not in group" % (g,), g)
    if small.rank < big.rank:
        return math.inf
    if small.rank == 0:
        return 1
    coord_matrix = [big.coordinates(row) for row in small.rows]
    index = abs(_det(coord_matrix))
    assert index.denominator == 1 and index > 0
    return int(index)


def least_multiple_in(value, group):
    """Smallest m >= 1 with m * value in the group, or None.

    The quotient (group + Z*value) / group is cyclic, generated by the
    class of value, so the order of that class is exactly the index of
    the two lattices; no scanning is needed.
    """
    if value.coords is None:
        raise ValueError("infinity has no finite multiple in any group")
    if value.rank != group.rank:
        raise RankMismatchError(
            "value of rank %d against a rank-%d group"
            % (value.rank, group.rank)
        )
    if value.is_zero():
        return 1
    extended = ValueGroup(group.rank, list(group.generators) + [value])
    index = group_index(extended, group)
    if index is math.inf:
        return None
    return index
