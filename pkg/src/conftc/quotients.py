"""Graded ideal spans and quotient algebras with normal forms.

An ideal of a finite-dimensional graded-commutative algebra is stored as
the per-degree linear span of all basis-monomial multiples of its
generators (one multiplication pass suffices: any product of ring
elements with a generator reduces to signed monomial multiples).  A
:class:`QuotientAlgebra` wraps such a span and exposes the induced ring:
``normal_form`` reduces against the span, standard monomials (the
non-pivot basis monomials) enumerate the quotient basis, and tensor
elements reduce slotwise.

Builders for the three quotients used throughout the package are cached:
the base-axis quotient of the power algebra by the degree-2 pair
relations ('E'), the intermediate quotient by the mixed index >= 2
products ('A'), and the small certificate ring on top of it ('B').
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .algebra import Element, TensorElement
from .linalg import GradedSubspace
from .surfaces import (
    SurfacePowerAlgebra,
    cross_handle_relations,
    xy_pair_relations,
    totaro_relations,
)

QUOTIENT_LABELS = ("BASE_AXIS", "HANDLE_REDUCED", "CERTIFICATE", "CUSTOM")


def element_vector(e, degree):
    """Index-keyed coefficient vector of the degree-d part of an element."""
    alg = e.algebra
    vec = {}
    for m, c in e.terms.items():
        d, i = alg.monomial_index(m)
        if d == degree:
            vec[i] = c
    return vec


def element_from_vector(algebra, degree, vec):
    return Element(
        algebra, {algebra.monomial_at(degree, i): c for i, c in vec.items()}
    )


def ideal_span(algebra, generators, max_degree=None):
    """Linear span of all basis-monomial multiples of the generators.

    Generators must be homogeneous; the result is frozen.  ``max_degree``
    caps the degrees that get populated (and the degrees the resulting
    quotient can reduce in), which is sound because the ideal is graded.
    """
    gens = list(getattr(generators, "generators", generators))
    top = algebra.top_degree if max_degree is None else min(max_degree, algebra.top_degree)
    dims = {d: len(algebra.monomials_of_degree(d)) for d in range(top + 1)}
    space = GradedSubspace(dims, algebra.field)
    for r in gens:
        if r.is_zero():
            continue
        if not r.is_homogeneous():
            raise ValueError(f"inhomogeneous generator: {r.to_text()}")
        e = r.degree()
        rterms = list(r.terms.items())
        for d in range(top - e + 1):
            for m in algebra.monomials_of_degree(d):
                vec = {}
                for mr, cr in rterms:
                    res = algebra.mono_mul(m, mr)
                    if res is None:
                        continue
                    mm, sg = res
                    c = cr if sg > 0 else -cr
                    i = algebra.monomial_index(mm)[1]
                    cur = vec.get(i)
                    cur = c if cur is None else cur + c
                    if cur:
                        vec[i] = cur
                    else:
                        del vec[i]
                if vec:
                    space.insert(vec, d + e)
    return space.freeze()


class QuotientAlgebra:
    """A parent algebra modulo a per-degree row-reduced ideal span."""

    def __init__(self, parent, ideal, label="CUSTOM"):
        if label not in QUOTIENT_LABELS:
            raise ValueError(f"unknown quotient label {label!r}")
        for d in ideal.degrees():
            if ideal.ambient_dims[d] != len(parent.monomials_of_degree(d)):
                raise ValueError("ideal does not match the parent algebra's basis")
        ideal.freeze()
        self.parent = parent
        self.ideal = ideal
        self.label = label
        self._std = {}
        for d in ideal.degrees():
            pivots = set(ideal.pivots(d))
            self._std[d] = tuple(
                m
                for i, m in enumerate(parent.monomials_of_degree(d))
                if i not in pivots
            )
        self._nf_mono = {}

    @property
    def max_degree(self):
        return max(self._std)

    def standard_monomials(self, degree):
        if degree not in self._std:
            raise ValueError(f"degree out of range: {degree}")
        return self._std[degree]

    def dimensions_by_degree(self):
        return [len(self._std[d]) for d in sorted(self._std)]

    @property
    def dimension(self):
        return sum(len(s) for s in self._std.values())

    # -- normal forms -----------------------------------------------------

    def normal_form(self, e):
        """The unique representative of e supported on standard monomials."""
        if e.algebra is not self.parent:
            raise ValueError("element does not belong to the parent algebra")
        out = {}
        for d in e.degrees():
            vec = self.ideal.reduce(element_vector(e, d), d)
            for i, c in vec.items():
                out[self.parent.monomial_at(d, i)] = c
        return Element(self.parent, out)

    def _nf_monomial(self, m):
        cached = self._nf_mono.get(m)
        if cached is None:
            cached = self.normal_form(Element.monomial(self.parent, m))
            self._nf_mono[m] = cached
        return cached

    def multiply(self, e1, e2):
        """Induced product: normal form of the parent product."""
        return self.normal_form(e1 * e2)

    def tensor_normal_form(self, t):
        """Slotwise normal form of a tensor element.

        Zero exactly when the image in the tensor power of the quotient is
        zero (over a field the tensor power of a quotient is the slotwise
        quotient of the tensor power).
        """
        if t.algebra is not self.parent:
            raise ValueError("tensor element does not belong to the parent algebra")
        out = {}
        for tup, c in t.terms.items():
            partial = [((), c)]
            for m in tup:
                piece = self._nf_monomial(m)
                if piece.is_zero():
                    partial = []
                    break
                partial = [
                    (pt + (m2,), pc * c2)
                    for pt, pc in partial
                    for m2, c2 in piece.terms.items()
                ]
            for pt, pc in partial:
                cur = out.get(pt)
                cur = pc if cur is None else cur + pc
                if cur:
                    out[pt] = cur
                else:
                    del out[pt]
        return TensorElement(self.parent, t.arity, out)

    def mu(self, t):
        """Iterated multiplication of the slots, evaluated in the quotient."""
        return self.normal_form(t.mu())

    def __repr__(self):
        p = self.parent
        return f"QuotientAlgebra({self.label}, genus={p.genus}, points={p.points})"


def quotient(algebra, ideal, label="CUSTOM"):
    return QuotientAlgebra(algebra, ideal, label)


# -- cached builders for the standard quotients ---------------------------


@lru_cache(maxsize=None)
def _surface(genus, points, max_basis):
    return SurfacePowerAlgebra(genus, points, max_basis=max_basis)


def cached_surface(genus, points, max_basis=None):
    """One shared algebra instance per (genus, points, guard) triple."""
    return _surface(genus, points, max_basis)


@lru_cache(maxsize=None)
def _quotient(genus, points, kind, max_basis, max_degree):
    alg = cached_surface(genus, points, max_basis)
    if kind == "E":
        gens = list(totaro_relations(alg))
        label = "BASE_AXIS"
    elif kind == "A":
        gens = list(cross_handle_relations(alg))
        label = "HANDLE_REDUCED"
    elif kind == "B":
        gens = list(cross_handle_relations(alg)) + list(xy_pair_relations(alg))
        label = "CERTIFICATE"
    else:
        raise ValueError(f"unknown quotient kind {kind!r}")
    return QuotientAlgebra(alg, ideal_span(alg, gens, max_degree=max_degree), label)


def cached_quotient(genus, points, kind, max_basis=None, max_degree=None):
    """The 'E', 'A' or 'B' quotient of the cached power algebra."""
    return _quotient(genus, points, kind, max_basis, max_degree)


# -- the genus chain -------------------------------------------------------


def genus_embedding(src, dst):
    """Element map induced by the identity on generators between genera.

    Letters a_i(p), b_i(p) keep their meaning; the top class of the source
    goes to the top class of the target.
    """
    if src.points != dst.points or src.genus > dst.genus:
        raise ValueError("no generator-preserving map between these algebras")
    src_omega = 2 * src.genus + 1
    dst_omega = 2 * dst.genus + 1

    def map_element(e):
        if e.algebra is not src:
            raise ValueError("element does not belong to the source algebra")
        terms = {}
        for m, c in e.terms.items():
            mm = tuple(dst_omega if cde == src_omega else cde for cde in m)
            terms[mm] = c
        return Element(dst, terms)

    return map_element


@dataclass
class ChainCheck:
    source_genus: int
    target_genus: int
    relation_label: str
    index: int
    ok: bool


@dataclass
class ChainReport:
    genus: int
    points: int
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)


def verify_subalgebra_chain(genus, points, max_basis=None):
    """Check the generator maps between consecutive certificate rings.

    Every defining relation of the source ring must normal-form to zero
    in the target ring; failures are reported per relation.
    """
    if genus < 2:
        raise ValueError("the chain check needs a target genus of at least 2")
    report = ChainReport(genus, points)
    for h in range(1, genus):
        src = cached_surface(h, points, max_basis)
        dst = cached_surface(h + 1, points, max_basis)
        target = cached_quotient(h + 1, points, "B", max_basis)
        embed = genus_embedding(src, dst)
        for rels in (cross_handle_relations(src), xy_pair_relations(src)):
            for k, r in enumerate(rels):
                ok = target.normal_form(embed(r)).is_zero()
                report.checks.append(ChainCheck(h, h + 1, rels.label, k, ok))
    return report
