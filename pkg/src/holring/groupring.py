"""Group rings K[G] with exact coefficients, and matrices over them.

Coefficients are ints, Fractions or cyclotomic numbers; integer
coefficients stay plain ints so that the matrix power computations run
on machine integers.  Central elements carry a second representation by
their scalar action on each irreducible character, which turns products
of central elements into pointwise multiplications.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .chartable import CharTable, Character
from .cyclotomic import CycloNum
from .groups import FiniteGroup


def canon_coeff(c):
    """Normal form: rational values as int or Fraction, never CycloNum."""
    if isinstance(c, CycloNum):
        r = c.as_rational()
        if r is None:
            return c
        c = r
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient {c!r}")


def is_integral_coeff(c) -> bool:
    """True when the coefficient has integer coordinates in the power basis."""
    c = canon_coeff(c)
    if isinstance(c, int):
        return True
    if isinstance(c, Fraction):
        return False
    return all(x.denominator == 1 for x in c.c)


class GroupRingElem:
    __slots__ = ("group", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs):
        coeffs = list(coeffs)
        assert len(coeffs) == group.order
        self.group = group
        self.coeffs = tuple(canon_coeff(c) for c in coeffs)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(group: FiniteGroup) -> "GroupRingElem":
        return GroupRingElem(group, [0] * group.order)

    @staticmethod
    def one(group: FiniteGroup) -> "GroupRingElem":
        return GroupRingElem.basis(group, 0)

    @staticmethod
    def basis(group: FiniteGroup, element_id: int) -> "GroupRingElem":
        c = [0] * group.order
        c[element_id] = 1
        return GroupRingElem(group, c)

    @staticmethod
    def from_dict(group: FiniteGroup, d: dict) -> "GroupRingElem":
        c = [0] * group.order
        for gid, v in d.items():
            c[gid] = v
        return GroupRingElem(group, c)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, GroupRingElem):
            return GroupRingElem(
                self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)]
            )
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, GroupRingElem):
            return GroupRingElem(
                self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)]
            )
        return NotImplemented

    def __neg__(self):
        return GroupRingElem(self.group, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, GroupRingElem):
            g = self.group
            out = [0] * g.order
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if not b:
                        continue
                    k = g.mul(i, j)
                    out[k] = out[k] + a * b
            return GroupRingElem(g, out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s) -> "GroupRingElem":
        return GroupRingElem(self.group, [s * a for a in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElem)
            and self.group is other.group
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        h = 0
        for c in self.coeffs:
            h = hash((h, c if not isinstance(c, CycloNum) else c.c))
        return h

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        n = sum(1 for c in self.coeffs if c)
        return f"GroupRingElem(order={self.group.order}, support={n})"

    # -- structure --------------------------------------------------------

    def support(self) -> list:
        return [i for i, c in enumerate(self.coeffs) if c]

    def has_integral_coeffs(self) -> bool:
        return all(is_integral_coeff(c) for c in self.coeffs)

    def class_collapse(self) -> list:
        """Sum of coefficients over each conjugacy class."""
        cls = self.group.classes()
        out = [0] * len(cls.classes)
        for i, c in enumerate(self.coeffs):
            if c:
                ci = cls.class_of[i]
                out[ci] = out[ci] + c
        return [canon_coeff(x) for x in out]

    def is_central(self) -> bool:
        cls = self.group.classes()
        for members in cls.classes:
            first = self.coeffs[members[0]]
            if any(self.coeffs[x] != first for x in members[1:]):
                return False
        return True

    def char_value(self, ch: Character):
        """chi extended linearly: sum of a_g chi(g)."""
        collapsed = self.class_collapse()
        total = 0
        for s, v in zip(collapsed, ch.values):
            if s:
                total = total + s * v
        return canon_coeff(total)


class GroupRingMatrix:
    __slots__ = ("group", "n", "rows")

    def __init__(self, group: FiniteGroup, rows):
        self.group = group
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        assert all(len(r) == self.n for r in self.rows)

    @staticmethod
    def identity(group: FiniteGroup, n: int) -> "GroupRingMatrix":
        one, zero = GroupRingElem.one(group), GroupRingElem.zero(group)
        return GroupRingMatrix(
            group, [[one if i == j else zero for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def scalar(group: FiniteGroup, n: int, elem: GroupRingElem) -> "GroupRingMatrix":
        zero = GroupRingElem.zero(group)
        return GroupRingMatrix(
            group, [[elem if i == j else zero for j in range(n)] for i in range(n)]
        )

    def __add__(self, other):
        return GroupRingMatrix(
            self.group,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        return GroupRingMatrix(
            self.group,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __mul__(self, other):
        if isinstance(other, GroupRingMatrix):
            n = self.n
            out = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = GroupRingElem.zero(self.group)
                    for t in range(n):
                        acc = acc + self.rows[i][t] * other.rows[t][j]
                    row.append(acc)
                out.append(row)
            return GroupRingMatrix(self.group, out)
        return GroupRingMatrix(
            self.group, [[e * other for e in row] for row in self.rows]
        )

    def __eq__(self, other):
        return isinstance(other, GroupRingMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def scale(self, s) -> "GroupRingMatrix":
        return GroupRingMatrix(
            self.group, [[e.scale(s) for e in row] for row in self.rows]
        )

    def trace(self) -> GroupRingElem:
        acc = GroupRingElem.zero(self.group)
        for i in range(self.n):
            acc = acc + self.rows[i][i]
        return acc

    def has_integral_coeffs(self) -> bool:
        return all(e.has_integral_coeffs() for row in self.rows for e in row)


class CentralElement:
    """Element of the center of C[G], stored by its value on each character.

    The value on chi is the scalar by which the element acts in the
    irreducible representation with character chi; products of central
    elements are pointwise products of values.
    """

    __slots__ = ("table", "values")

    def __init__(self, table: CharTable, values):
        values = list(values)
        assert len(values) == len(table.characters)
        self.table = table
        self.values = tuple(canon_coeff(v) for v in values)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(table: CharTable) -> "CentralElement":
        return CentralElement(table, [0] * len(table.characters))

    @staticmethod
    def one(table: CharTable) -> "CentralElement":
        return CentralElement(table, [1] * len(table.characters))

    @staticmethod
    def from_indicator(table: CharTable, char_indices) -> "CentralElement":
        s = set(char_indices)
        return CentralElement(
            table, [1 if i in s else 0 for i in range(len(table.characters))]
        )

    @staticmethod
    def from_class_coords(table: CharTable, coords) -> "CentralElement":
        """From coefficients a_c: the element sum_c a_c (class sum of c)."""
        g = table.group
        cls = g.classes()
        coords = list(coords)
        values = []
        for ch in table.characters:
            total = 0
            for c, a in enumerate(coords):
                if a:
                    total = total + a * cls.sizes[c] * ch.values[c]
            values.append(total * Fraction(1, ch.degree))
        return CentralElement(table, values)

    @staticmethod
    def from_group_ring(table: CharTable, elem: GroupRingElem) -> "CentralElement":
        assert elem.is_central(), "element is not central"
        cls = table.group.classes()
        coords = [elem.coeffs[members[0]] for members in cls.classes]
        return CentralElement.from_class_coords(table, coords)

    # -- conversions ---------------------------------------------------------

    def to_class_coords(self) -> list:
        """Coefficient on (any element of) each conjugacy class."""
        g = self.table.group
        cls = g.classes()
        k = len(cls.classes)
        coords = []
        for c in range(k):
            cinv = cls.inverse_class(c, g)
            total = 0
            for v, ch in zip(self.values, self.table.characters):
                if v:
                    total = total + v * ch.degree * ch.values[cinv]
            coords.append(canon_coeff(total * Fraction(1, g.order)))
        return coords

    def to_group_ring(self) -> GroupRingElem:
        g = self.table.group
        cls = g.classes()
        coords = self.to_class_coords()
        return GroupRingElem(g, [coords[cls.class_of[i]] for i in range(g.order)])

    # -- predicates ------------------------------------------------------------

    def is_rational(self) -> bool:
        """True when the group ring coefficients are all rational."""
        return all(not isinstance(c, CycloNum) for c in self.to_class_coords())

    def is_galois_equivariant(self) -> bool:
        """Values commute with the Galois action permuting the characters."""
        table = self.table
        exponent = table.group.exponent()
        lookup = {ch.values: i for i, ch in enumerate(table.characters)}
        for k in range(1, exponent + 1):
            if math.gcd(k, exponent) != 1:
                continue
            for i, ch in enumerate(table.characters):
                moved = tuple(
                    (v.galois(k) if isinstance(v, CycloNum) else
                     CycloNum.rational(v)).minimal()
                    for v in ch.values
                )
                j = lookup[moved]
                vi = self.values[i]
                expect = vi.galois(k) if isinstance(vi, CycloNum) else vi
                if canon_coeff(expect) != self.values[j]:
                    return False
        return True

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, CentralElement):
            return CentralElement(
                self.table, [a + b for a, b in zip(self.values, other.values)]
            )
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, CentralElement):
            return CentralElement(
                self.table, [a - b for a, b in zip(self.values, other.values)]
            )
        return NotImplemented

    def __neg__(self):
        return CentralElement(self.table, [-a for a in self.values])

    def __mul__(self, other):
        if isinstance(other, CentralElement):
            return CentralElement(
                self.table, [a * b for a, b in zip(self.values, other.values)]
            )
        return CentralElement(self.table, [other * a for a in self.values])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        return (
            isinstance(other, CentralElement)
            and self.table is other.table
            and self.values == other.values
        )

    def __hash__(self):
        return hash(tuple(
            v.c if isinstance(v, CycloNum) else v for v in self.values
        ))

    def __repr__(self):
        return f"CentralElement(values={list(self.values)!r})"


def random_integral_element(group: FiniteGroup, rng, bound: int = 3) -> GroupRingElem:
    return GroupRingElem(
        group, [rng.randint(-bound, bound) for _ in range(group.order)]
    )


def random_integral_matrix(group: FiniteGroup, n: int, rng,
                           bound: int = 3) -> GroupRingMatrix:
    return GroupRingMatrix(
        group,
        [[random_integral_element(group, rng, bound) for _ in range(n)]
         for _ in range(n)],
    )
