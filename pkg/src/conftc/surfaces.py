"""Cohomology of cartesian powers of a closed orientable surface.

The degree-1 classes of one surface factor come in dual pairs a(p), b(p)
(p up to the genus) with a single degree-2 class w; products follow
a(p)b(p) = w, a(p)b(q) = 0 for p != q, a(p)a(q) = b(p)b(q) = 0 and
w kills everything of positive degree.  A basis monomial of the n-fold
power carries one such letter per cartesian coordinate; letters are
encoded as small integers so monomials are plain int tuples:

    0 -> 1,  2p-1 -> a(p),  2p -> b(p),  2g+1 -> w

The encoding makes tuple order agree with the fixed enumeration
1 < a(1) < b(1) < ... < a(g) < b(g) < w used for pivots and output.

This module also builds the derived generator families (the x/y change of
letters in coordinate 1), the relation sets feeding the quotient layer,
and the restricted monomial bases of the first quotient.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass

from .algebra import Element, GradedAlgebraBase
from .errors import SizeGuardError
from .fields import RATIONALS

UNIT = 0


def a_letter(p):
    return 2 * p - 1


def b_letter(p):
    return 2 * p


def omega_letter(genus):
    return 2 * genus + 1


_LETTER_RE = re.compile(r"([ab])(\d+)\((\d+)\)$|w(\d+)$")

DEFAULT_MAX_BASIS = 10**5


def _basis_limit(max_basis):
    if max_basis is not None:
        return max_basis
    return int(os.environ.get("TCCONF_MAX_BASIS", DEFAULT_MAX_BASIS))


class SurfacePowerAlgebra(GradedAlgebraBase):
    """The full cohomology algebra of the n-fold power of a genus-g surface."""

    def __init__(self, genus, points, max_basis=None):
        if genus < 1:
            raise ValueError("genus must be at least 1 (genus 0 is handled by formula only)")
        if points < 1:
            raise ValueError("points must be at least 1")
        dim = (2 * genus + 2) ** points
        limit = _basis_limit(max_basis)
        if dim > limit:
            raise SizeGuardError(
                f"basis size {dim} for genus {genus} with {points} points "
                f"exceeds the limit {limit}",
                estimate=dim,
                limit=limit,
            )
        self.genus = genus
        self.points = points
        self.field = RATIONALS
        self._omega = 2 * genus + 1
        self._deg = [0] + [1] * (2 * genus) + [2]
        self._ltab = self._local_table()
        self.one = (UNIT,) * points
        letters = range(2 * genus + 2)
        monos = []
        deg = self._deg
        for m in itertools.product(letters, repeat=points):
            monos.append((m, sum(deg[c] for c in m)))
        self._set_basis(monos)

    def _local_table(self):
        """Products of two letters sharing a coordinate: (letter, sign) or None."""
        g = self.genus
        omega = self._omega
        size = 2 * g + 2
        tab = [[None] * size for _ in range(size)]
        for c in range(size):
            tab[UNIT][c] = (c, 1)
            tab[c][UNIT] = (c, 1)
        # omega times anything positive is zero (already None); degree-1 pairs:
        for p in range(1, g + 1):
            for q in range(1, g + 1):
                if p == q:
                    tab[2 * p - 1][2 * q] = (omega, 1)   # a(p) b(p) = w
                    tab[2 * p][2 * q - 1] = (omega, -1)  # b(p) a(p) = -w
        return tab

    # -- monomial products ------------------------------------------------

    def mono_mul(self, m1, m2):
        deg = self._deg
        ltab = self._ltab
        # Koszul sign from interleaving: slot i of m2 crosses slots > i of m1.
        par = 0
        suffix_odd = 0
        for i in range(self.points - 1, -1, -1):
            if deg[m2[i]] & 1:
                par ^= suffix_odd & 1
            if deg[m1[i]] & 1:
                suffix_odd += 1
        out = []
        for c1, c2 in zip(m1, m2):
            r = ltab[c1][c2]
            if r is None:
                return None
            c3, s = r
            if s < 0:
                par ^= 1
            out.append(c3)
        return (tuple(out), -1 if par else 1)

    def local_multiply(self, c1, c2):
        """Product of two letter codes in one coordinate: (letter, sign) or None."""
        size = 2 * self.genus + 2
        if not (0 <= c1 < size and 0 <= c2 < size):
            raise ValueError(f"generator out of range: letter codes {c1}, {c2}")
        return self._ltab[c1][c2]

    # -- generators ---------------------------------------------------------

    def _check_coord(self, i):
        if not 1 <= i <= self.points:
            raise ValueError(f"generator out of range: coordinate {i} of {self.points}")

    def _check_puncture(self, p):
        if not 1 <= p <= self.genus:
            raise ValueError(f"generator out of range: index {p} exceeds genus {self.genus}")

    def _mono_with(self, assignments):
        word = [UNIT] * self.points
        for i, c in assignments:
            word[i - 1] = c
        return tuple(word)

    def a(self, i, p=1):
        self._check_coord(i)
        self._check_puncture(p)
        return Element.monomial(self, self._mono_with([(i, 2 * p - 1)]))

    def b(self, i, p=1):
        self._check_coord(i)
        self._check_puncture(p)
        return Element.monomial(self, self._mono_with([(i, 2 * p)]))

    def omega(self, i):
        self._check_coord(i)
        return Element.monomial(self, self._mono_with([(i, self._omega)]))

    def x(self, i, p=1):
        """x_i(p): equals a_i(p) except x_i(1) = a_i(1) - a_1(1) for i >= 2."""
        if p >= 2 or i == 1:
            return self.a(i, p)
        return self.a(i, 1) - self.a(1, 1)

    def y(self, i, p=1):
        """y_i(p): equals b_i(p) except y_i(1) = b_i(1) - b_1(1) for i >= 2."""
        if p >= 2 or i == 1:
            return self.b(i, p)
        return self.b(i, 1) - self.b(1, 1)

    # -- text form ------------------------------------------------------------

    def monomial_word(self, m) -> str:
        parts = []
        for i, c in enumerate(m, start=1):
            if c == UNIT:
                continue
            if c == self._omega:
                parts.append(f"w{i}")
            elif c & 1:
                parts.append(f"a{i}({(c + 1) // 2})")
            else:
                parts.append(f"b{i}({c // 2})")
        return "*".join(parts) if parts else "1"

    def parse_word(self, word: str):
        if word == "1":
            return self.one
        codes = [UNIT] * self.points
        for piece in word.split("*"):
            m = _LETTER_RE.match(piece)
            if not m:
                raise ValueError(f"unknown monomial word: {piece!r}")
            if m.group(4) is not None:
                i, c = int(m.group(4)), self._omega
            else:
                i, p = int(m.group(2)), int(m.group(3))
                self._check_puncture(p)
                c = 2 * p - 1 if m.group(1) == "a" else 2 * p
            self._check_coord(i)
            if codes[i - 1] != UNIT:
                raise ValueError(f"coordinate {i} repeated in word {word!r}")
            codes[i - 1] = c
        return tuple(codes)

    def term_key(self, m):
        return m

    def __repr__(self):
        return f"SurfacePowerAlgebra(genus={self.genus}, points={self.points})"


def surface_power(genus, points, max_basis=None):
    return SurfacePowerAlgebra(genus, points, max_basis=max_basis)


@dataclass(frozen=True)
class RelationSet:
    """A labeled list of homogeneous relation elements."""

    label: str
    generators: tuple

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def totaro_relations(algebra) -> RelationSet:
    """One degree-2 generator per coordinate pair i < j.

    The pair (i, j) contributes w_i + w_j + sum_p (b_i(p)a_j(p) - a_i(p)b_j(p)).
    """
    gens = []
    n, g = algebra.points, algebra.genus
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            e = algebra.omega(i) + algebra.omega(j)
            for p in range(1, g + 1):
                e = e + algebra.b(i, p) * algebra.a(j, p) - algebra.a(i, p) * algebra.b(j, p)
            gens.append(e)
    return RelationSet("TOTARO", tuple(gens))


def cross_handle_relations(algebra) -> RelationSet:
    """All mixed products of index >= 2 letters across distinct coordinates.

    Empty for genus 1; these present the first quotient of the power algebra.
    """
    gens = []
    n, g = algebra.points, algebra.genus
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for u in range(2, g + 1):
                for v in range(2, g + 1):
                    for left in (algebra.a(i, u), algebra.b(i, u)):
                        for right in (algebra.a(j, v), algebra.b(j, v)):
                            gens.append(left * right)
    return RelationSet("CROSS_HANDLE", tuple(gens))


def xy_pair_relations(algebra) -> RelationSet:
    """The products x_i y_j over i, j in {2, ..., n} (i = j included)."""
    gens = []
    n = algebra.points
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            gens.append(algebra.x(i) * algebra.y(j))
    return RelationSet("XY_PAIRS", tuple(gens))


def _special_codes(algebra):
    # letters a(p), b(p) with p >= 2, plus w; everything of code >= 3
    return frozenset(range(3, 2 * algebra.genus + 2))


def reduced_letter_basis(algebra):
    """Monomials with at most one coordinate carrying an index >= 2 or w letter.

    For genus 1 this degenerates to the full monomial basis.
    """
    if algebra.genus == 1:
        return [
            Element.monomial(algebra, m)
            for d in range(algebra.top_degree + 1)
            for m in algebra.monomials_of_degree(d)
        ]
    special = _special_codes(algebra)
    out = []
    for d in range(algebra.top_degree + 1):
        for m in algebra.monomials_of_degree(d):
            if sum(1 for c in m if c in special) <= 1:
                out.append(Element.monomial(algebra, m))
    return out


def _letter_element(algebra, i, kind, p):
    if kind == "1":
        return Element.unit(algebra)
    if kind == "x":
        return algebra.x(i, p)
    if kind == "y":
        return algebra.y(i, p)
    if kind == "w":
        return algebra.omega(i)
    raise ValueError(f"unknown letter kind {kind!r}")


def shifted_basis_products(algebra):
    """The reduced basis rebuilt from shifted letters, with the choices attached.

    Returns (choices, element) pairs where choices holds one (kind, p) per
    coordinate, kind in {'1', 'x', 'y', 'w'}.  A choice is special when it
    is 'w' or carries p >= 2; products keep at most one special coordinate
    (no restriction for genus 1, where only plain letters exist).
    """
    g, n = algebra.genus, algebra.points
    plain = [("1", 0), ("x", 1), ("y", 1)]
    special = [(k, p) for p in range(2, g + 1) for k in ("x", "y")] + [("w", 0)]
    if g == 1:
        options = plain + [("w", 0)]
        allowed = itertools.product(options, repeat=n)
    else:
        allowed = (
            combo
            for combo in itertools.product(plain + special, repeat=n)
            if sum(1 for c in combo if c in special) <= 1
        )
    out = []
    for combo in allowed:
        e = Element.unit(algebra)
        for i, (kind, p) in enumerate(combo, start=1):
            e = e * _letter_element(algebra, i, kind, p)
        out.append((combo, e))
    return out


def reduced_shifted_basis(algebra):
    return [e for _, e in shifted_basis_products(algebra)]
