"""Sparse elements of finite-dimensional graded algebras and their tensor powers.

An algebra object owns a finite monomial basis organized by degree and
knows how to multiply two basis monomials (returning a single signed
monomial or zero; both presentations used in this package have that
property).  :class:`Element` is a sparse scalar combination of monomials,
:class:`TensorElement` a sparse combination of s-tuples of monomials with
the Koszul sign convention: moving a factor of degree p past one of
degree q costs (-1)^{pq}.

Elements serialize to a stable text form, one signed coefficient followed
by a monomial word per term (tensor slots joined by ``(x)``), and parse
back bit-exactly.
"""

from __future__ import annotations

from .errors import SizeGuardError


class GradedAlgebraBase:
    """Shared monomial bookkeeping for concrete algebra presentations.

    Subclasses call :meth:`_set_basis` once with ``(monomial, degree)``
    pairs and implement ``mono_mul``, ``monomial_word``, ``parse_word``
    and ``term_key``.  Monomials must be hashable; ``one`` is the unit
    monomial.
    """

    field = None
    one = None

    def _set_basis(self, monos_with_degree):
        by_deg = {}
        for m, d in monos_with_degree:
            by_deg.setdefault(d, []).append(m)
        top = max(by_deg)
        self.monomials_by_degree = [
            tuple(sorted(by_deg.get(d, []), key=self.term_key)) for d in range(top + 1)
        ]
        self._index = {}
        for d, monos in enumerate(self.monomials_by_degree):
            for i, m in enumerate(monos):
                self._index[m] = (d, i)

    # -- basis queries -------------------------------------------------

    def monomial_index(self, m):
        """(degree, position) of a basis monomial in the fixed enumeration."""
        return self._index[m]

    def monomial_degree(self, m):
        return self._index[m][0]

    def monomial_at(self, degree, i):
        return self.monomials_by_degree[degree][i]

    def monomials_of_degree(self, degree):
        if not 0 <= degree < len(self.monomials_by_degree):
            raise ValueError(f"degree out of range: {degree}")
        return self.monomials_by_degree[degree]

    def dimensions_by_degree(self):
        return [len(ms) for ms in self.monomials_by_degree]

    @property
    def dimension(self):
        return len(self._index)

    @property
    def top_degree(self):
        return len(self.monomials_by_degree) - 1

    # -- presentation hooks --------------------------------------------

    def mono_mul(self, m1, m2):
        """Product of two basis monomials: ``(monomial, sign)`` or None."""
        raise NotImplementedError

    def monomial_word(self, m) -> str:
        raise NotImplementedError

    def parse_word(self, word: str):
        raise NotImplementedError

    def term_key(self, m):
        raise NotImplementedError


def _coerce(field, c):
    return field.from_int(c) if isinstance(c, int) else c


class Element:
    """A sparse linear combination of basis monomials of one algebra.

    Mixed-degree sums are allowed; ``degrees()`` reports the occurring
    degrees.  No zero coefficient is ever stored.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c}

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, algebra):
        return cls(algebra, {})

    @classmethod
    def monomial(cls, algebra, m, coeff=1):
        if m not in algebra._index:
            raise ValueError(f"monomial {m!r} is not in the basis")
        return cls(algebra, {m: _coerce(algebra.field, coeff)})

    @classmethod
    def unit(cls, algebra):
        return cls.monomial(algebra, algebra.one)

    # -- linear structure -----------------------------------------------

    def _require_same(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("elements belong to different algebras")

    def __add__(self, other):
        self._require_same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Element(self.algebra, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def scaled(self, c):
        c = _coerce(self.algebra.field, c)
        if not c:
            return Element.zero(self.algebra)
        return Element(self.algebra, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scaled(other)
        self._require_same(other)
        alg = self.algebra
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                r = alg.mono_mul(m1, m2)
                if r is None:
                    continue
                m, sign = r
                c = c1 * c2
                if sign < 0:
                    c = -c
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Element(alg, out)

    def __rmul__(self, c):
        return self.scaled(c)

    # -- queries ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        """Sorted tuple of degrees occurring in this element."""
        return tuple(sorted({self.algebra.monomial_degree(m) for m in self.terms}))

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"element is not homogeneous: degrees {degs}")
        return degs[0]

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.algebra), frozenset(self.terms.items())))

    # -- text form --------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        alg = self.algebra
        parts = []
        for m in sorted(self.terms, key=alg.term_key):
            parts.append(alg.field.signed_text(self.terms[m]))
            parts.append(alg.monomial_word(m))
        return " ".join(parts)

    @classmethod
    def from_text(cls, algebra, text: str):
        tokens = text.split()
        if tokens == ["0"]:
            return cls.zero(algebra)
        if len(tokens) % 2:
            raise ValueError(f"malformed element text: {text!r}")
        terms = {}
        for k in range(0, len(tokens), 2):
            c = algebra.field.parse(tokens[k])
            m = algebra.parse_word(tokens[k + 1])
            terms[m] = terms.get(m, algebra.field.zero) + c
        return cls(algebra, terms)

    def __repr__(self):
        return f"<{self.to_text()}>"


class TensorElement:
    """A sparse combination of s-tuples of monomials of one algebra."""

    __slots__ = ("algebra", "arity", "terms")

    def __init__(self, algebra, arity, terms):
        if arity < 1:
            raise ValueError("tensor arity must be at least 1")
        self.algebra = algebra
        self.arity = arity
        self.terms = {t: c for t, c in terms.items() if c}

    @classmethod
    def zero(cls, algebra, arity):
        return cls(algebra, arity, {})

    @classmethod
    def unit(cls, algebra, arity):
        one = (algebra.one,) * arity
        return cls(algebra, arity, {one: algebra.field.one})

    @classmethod
    def of_elements(cls, elements):
        """The tensor e_1 (x) ... (x) e_s of algebra elements."""
        alg = elements[0].algebra
        terms = {(): alg.field.one}
        for e in elements:
            if e.algebra is not alg:
                raise ValueError("elements belong to different algebras")
            terms = {
                t + (m,): c * cm
                for t, c in terms.items()
                for m, cm in e.terms.items()
            }
        return cls(alg, len(elements), terms)

    @classmethod
    def slot_embed(cls, element, arity, slot):
        """element placed in the given slot (1-based), 1 elsewhere."""
        if not 1 <= slot <= arity:
            raise ValueError(f"slot {slot} out of range for arity {arity}")
        alg = element.algebra
        unit = Element.unit(alg)
        return cls.of_elements(
            [element if k == slot else unit for k in range(1, arity + 1)]
        )

    # -- linear structure -----------------------------------------------

    def _require_same(self, other):
        if self.algebra is not other.algebra:
            raise ValueError("tensor elements belong to different algebras")
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        self._require_same(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t)
            s = c if s is None else s + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return TensorElement(self.algebra, self.arity, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(
            self.algebra, self.arity, {t: -c for t, c in self.terms.items()}
        )

    def scaled(self, c):
        c = _coerce(self.algebra.field, c)
        if not c:
            return TensorElement.zero(self.algebra, self.arity)
        return TensorElement(
            self.algebra, self.arity, {t: v * c for t, v in self.terms.items()}
        )

    def __rmul__(self, c):
        return self.scaled(c)

    def __mul__(self, other):
        """Slotwise product with the global Koszul sign.

        Moving the slot-k factor of ``other`` past the higher slots of
        ``self`` contributes (-1)^{deg*deg} per crossing.
        """
        if not isinstance(other, TensorElement):
            return self.scaled(other)
        self._require_same(other)
        alg = self.algebra
        deg = alg.monomial_degree
        s = self.arity
        out = {}
        for t1, c1 in self.terms.items():
            # sufpar[k]: parity of the total degree of slots k..s-1 of t1
            sufpar = [0] * (s + 1)
            for k in range(s - 1, -1, -1):
                sufpar[k] = sufpar[k + 1] ^ (deg(t1[k]) & 1)
            for t2, c2 in other.terms.items():
                sign = 1
                slots = []
                dead = False
                for k in range(s):
                    if deg(t2[k]) & 1 and sufpar[k + 1]:
                        sign = -sign
                    r = alg.mono_mul(t1[k], t2[k])
                    if r is None:
                        dead = True
                        break
                    m, sg = r
                    if sg < 0:
                        sign = -sign
                    slots.append(m)
                if dead:
                    continue
                t = tuple(slots)
                c = c1 * c2
                if sign < 0:
                    c = -c
                cur = out.get(t)
                cur = c if cur is None else cur + c
                if cur:
                    out[t] = cur
                else:
                    out.pop(t, None)
        return TensorElement(alg, s, out)

    # -- queries ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        deg = self.algebra.monomial_degree
        return tuple(sorted({sum(deg(m) for m in t) for t in self.terms}))

    def __eq__(self, other):
        return (
            isinstance(other, TensorElement)
            and self.algebra is other.algebra
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((id(self.algebra), self.arity, frozenset(self.terms.items())))

    def mu(self):
        """Multiply the slots left to right inside the algebra."""
        alg = self.algebra
        out = {}
        for t, c in self.terms.items():
            m = t[0]
            sign = 1
            dead = False
            for k in range(1, self.arity):
                r = alg.mono_mul(m, t[k])
                if r is None:
                    dead = True
                    break
                m, sg = r
                if sg < 0:
                    sign = -sign
            if dead:
                continue
            v = c if sign > 0 else -c
            cur = out.get(m)
            cur = v if cur is None else cur + v
            if cur:
                out[m] = cur
            else:
                out.pop(m, None)
        return Element(alg, out)

    # -- text form --------------------------------------------------------

    def _term_key(self, t):
        key = self.algebra.term_key
        return tuple(key(m) for m in t)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        alg = self.algebra
        parts = []
        for t in sorted(self.terms, key=self._term_key):
            parts.append(alg.field.signed_text(self.terms[t]))
            parts.append("(x)".join(alg.monomial_word(m) for m in t))
        return " ".join(parts)

    @classmethod
    def from_text(cls, algebra, arity, text: str):
        tokens = text.split()
        if tokens == ["0"]:
            return cls.zero(algebra, arity)
        if len(tokens) % 2:
            raise ValueError(f"malformed tensor text: {text!r}")
        terms = {}
        for k in range(0, len(tokens), 2):
            c = algebra.field.parse(tokens[k])
            words = tokens[k + 1].split("(x)")
            if len(words) != arity:
                raise ValueError(
                    f"expected {arity} tensor slots, got {len(words)}: {tokens[k + 1]!r}"
                )
            t = tuple(algebra.parse_word(w) for w in words)
            terms[t] = terms.get(t, algebra.field.zero) + c
        return cls(algebra, arity, terms)

    def __repr__(self):
        return f"<{self.to_text()}>"


def poincare_polynomial(obj):
    """Basis count per degree of an algebra or quotient."""
    return obj.dimensions_by_degree()


class TruncatedPolynomialAlgebra(GradedAlgebraBase):
    """F[t]/(t^k) on one generator of the given degree.

    Used for the mod-2 real-projective-space check and as a tiny search
    space; over the rationals it is only graded-commutative when the
    generator degree is even or the truncation is at most 2.
    """

    def __init__(self, field, truncation, gen_degree=1, name="t", max_basis=None):
        if truncation < 1:
            raise ValueError("truncation must be at least 1")
        limit = max_basis or 10**5
        if truncation > limit:
            raise SizeGuardError(
                f"basis size {truncation} exceeds the limit {limit}",
                estimate=truncation,
                limit=limit,
            )
        self.field = field
        self.truncation = truncation
        self.gen_degree = gen_degree
        self.name = name
        self.one = 0
        self._set_basis([(e, e * gen_degree) for e in range(truncation)])

    def mono_mul(self, m1, m2):
        e = m1 + m2
        return None if e >= self.truncation else (e, 1)

    def monomial_word(self, m) -> str:
        if m == 0:
            return "1"
        if m == 1:
            return self.name
        return f"{self.name}^{m}"

    def parse_word(self, word: str):
        if word == "1":
            return 0
        if word == self.name:
            return 1
        head, sep, exp = word.partition("^")
        if head != self.name or not sep or not exp.isdigit():
            raise ValueError(f"unknown monomial word: {word!r}")
        e = int(exp)
        if e >= self.truncation:
            raise ValueError(f"monomial {word!r} exceeds truncation {self.truncation}")
        return e

    def term_key(self, m):
        return m
