"""Per-degree row-reduced subspaces of sparse exact vectors.

A vector is a dict mapping basis index to a nonzero scalar of the ambient
field.  A :class:`GradedSubspace` keeps, for every degree of a graded
ambient space, a basis of such vectors in reduced echelon form: each row
is normalized so its pivot (the lowest occupied index) has coefficient 1,
pivots are distinct, and no row has an entry at another row's pivot.
These spans back every ideal and normal-form computation in the package:
``reduce`` is the normal-form map, ``insert`` grows a span, ``rank``
counts it.

Subspaces are mutable while being built and are meant to be frozen
afterwards; a frozen subspace only ever reads its rows.
"""

from __future__ import annotations


def vec_scaled_sub(v, c, row):
    """Return v - c*row, dropping entries that become zero."""
    out = dict(v)
    for i, r in row.items():
        cur = out.get(i)
        nxt = r * (-c) if cur is None else cur - c * r
        if nxt:
            out[i] = nxt
        else:
            out.pop(i, None)
    return out


class GradedSubspace:
    """Row-reduced echelon bases, one per degree of the ambient space."""

    def __init__(self, ambient_dims, field):
        # ambient_dims: mapping degree -> dimension of the ambient basis.
        self.ambient_dims = dict(ambient_dims)
        self.field = field
        self._rows = {d: {} for d in self.ambient_dims}  # degree -> {pivot: row}
        self._frozen = False

    def _check_degree(self, degree):
        if degree not in self.ambient_dims:
            raise ValueError(f"degree out of range: {degree}")

    def _check_vector(self, v, degree):
        dim = self.ambient_dims[degree]
        for i in v:
            if not 0 <= i < dim:
                raise ValueError(
                    f"index {i} outside ambient basis of size {dim} in degree {degree}"
                )

    def reduce(self, v, degree):
        """Normal form of v against the stored rows of the given degree.

        The result is the unique representative of v modulo the span with
        zero coefficient at every pivot index; it is linear in v,
        idempotent, and zero exactly when v lies in the span.
        """
        self._check_degree(degree)
        self._check_vector(v, degree)
        rows = self._rows[degree]
        out = {i: c for i, c in v.items() if c}
        # Rows are mutually reduced, so eliminating one pivot never
        # reintroduces another; a single pass over the pivots present
        # in v suffices.
        for p in [i for i in v if i in rows]:
            c = out.get(p)
            if c:
                out = vec_scaled_sub(out, c, rows[p])
        return out

    def insert(self, v, degree):
        """Add v to the span; returns True iff it enlarged the span."""
        if self._frozen:
            raise RuntimeError("subspace is frozen")
        r = self.reduce(v, degree)
        if not r:
            return False
        pivot = min(r)
        inv = self.field.one / r[pivot]
        row = {i: c * inv for i, c in r.items()}
        rows = self._rows[degree]
        for other in rows.values():
            c = other.get(pivot)
            if c:
                updated = vec_scaled_sub(other, c, row)
                other.clear()
                other.update(updated)
        rows[pivot] = row
        return True

    def rank(self, degree):
        self._check_degree(degree)
        return len(self._rows[degree])

    def total_rank(self):
        return sum(len(rows) for rows in self._rows.values())

    def pivots(self, degree):
        """Sorted pivot indices of the given degree."""
        self._check_degree(degree)
        return sorted(self._rows[degree])

    def degrees(self):
        return sorted(self.ambient_dims)

    def freeze(self):
        self._frozen = True
        return self

    @property
    def frozen(self):
        return self._frozen
