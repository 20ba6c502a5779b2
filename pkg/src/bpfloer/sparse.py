"""Sparse exact linear algebra over a coefficient field.

The pivot rule is fixed (smallest column index, then smallest row index) so
that every elimination is deterministic; golden tests rely on this.
"""
from __future__ import annotations

from .fields import QQ


class SparseMat:
    """A rows x cols matrix stored as {(i, j): value}; zero entries are dropped."""

    def __init__(self, nrows, ncols, entries=None, field=QQ):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        data = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError("entry (%d, %d) out of range" % (i, j))
            v = field.of(v)
            if not field.is_zero(v):
                data[(i, j)] = v
        self.data = data

    @classmethod
    def from_rows(cls, rows, field=QQ):
        entries = {}
        ncols = max((len(r) for r in rows), default=0)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v:
                    entries[(i, j)] = v
        return cls(len(rows), ncols, entries, field)

    def columns(self):
        """Column-major view: list of dicts row -> value."""
        cols = [dict() for _ in range(self.ncols)]
        for (i, j), v in self.data.items():
            cols[j][i] = v
        return cols

    def rows(self):
        rows = [dict() for _ in range(self.nrows)]
        for (i, j), v in self.data.items():
            rows[i][j] = v
        return rows

    def apply(self, vec):
        """Matrix times a sparse vector (dict col -> value)."""
        f = self.field
        cols = getattr(self, "_cols", None)
        if cols is None:
            cols = self._cols = self.columns()
        out = {}
        for j, x in vec.items():
            if f.is_zero(x):
                continue
            for i, v in cols[j].items():
                out[i] = f.add(out.get(i, f.zero), f.mul(v, x))
        return {i: v for i, v in out.items() if not f.is_zero(v)}

    def transpose(self):
        return SparseMat(
            self.ncols, self.nrows, {(j, i): v for (i, j), v in self.data.items()}, self.field
        )

    def __repr__(self):
        return "SparseMat(%dx%d, %d nonzero)" % (self.nrows, self.ncols, len(self.data))


def _eliminate(rows, ncols, field):
    """Row reduce a list of sparse rows in place; returns [(row, pivot col)]."""
    f = field
    pivots = []
    used = set()
    for j in range(ncols):
        pr = None
        for r in range(len(rows)):
            if r not in used and not f.is_zero(rows[r].get(j, f.zero)):
                pr = r
                break
        if pr is None:
            continue
        inv = f.inv(rows[pr][j])
        rows[pr] = {c: f.mul(v, inv) for c, v in rows[pr].items() if not f.is_zero(v)}
        prow = rows[pr]
        for r in range(len(rows)):
            if r == pr:
                continue
            coef = rows[r].get(j)
            if coef is None or f.is_zero(coef):
                continue
            row = rows[r]
            for c, v in prow.items():
                nv = f.sub(row.get(c, f.zero), f.mul(coef, v))
                if f.is_zero(nv):
                    row.pop(c, None)
                else:
                    row[c] = nv
        used.add(pr)
        pivots.append((pr, j))
    return pivots


def rank_kernel_image(m: SparseMat):
    """Exact (rank, kernel basis, image basis) of a sparse matrix.

    Kernel vectors are dicts col -> value with M.v = 0 exactly; the image
    basis is the original pivot columns (dicts row -> value).
    """
    f = m.field
    rows = m.rows()
    pivots = _eliminate(rows, m.ncols, f)
    pivot_cols = [j for (_, j) in pivots]
    pivot_set = set(pivot_cols)
    kernel = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec = {free: f.one}
        for r, j in pivots:
            coef = rows[r].get(free)
            if coef is not None and not f.is_zero(coef):
                vec[j] = f.neg(coef)
        kernel.append(vec)
    cols = m.columns()
    image = [cols[j] for j in sorted(pivot_cols)]
    return len(pivots), kernel, image


def dense_rank(matrix_rows, field=QQ):
    """Dense Gaussian elimination oracle; input is a list of value lists."""
    f = field
    rows = [[f.of(v) for v in r] for r in matrix_rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    lead = 0
    for j in range(ncols):
        pivot = None
        for i in range(lead, len(rows)):
            if not f.is_zero(rows[i][j]):
                pivot = i
                break
        if pivot is None:
            continue
        rows[lead], rows[pivot] = rows[pivot], rows[lead]
        inv = f.inv(rows[lead][j])
        rows[lead] = [f.mul(v, inv) for v in rows[lead]]
        for i in range(len(rows)):
            if i != lead and not f.is_zero(rows[i][j]):
                coef = rows[i][j]
                rows[i] = [f.sub(a, f.mul(coef, b)) for a, b in zip(rows[i], rows[lead])]
        lead += 1
        rank += 1
    return rank


class Echelon:
    """A growing row space kept in reduced echelon form.

    Every stored row is zero at the pivot columns of all other rows, so a
    single pass over the pivot columns of a vector reduces it completely.
    """

    def __init__(self, field=QQ):
        self.field = field
        self.rows = {}  # pivot col -> row dict

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return vec reduced against the stored rows (sparse dict).

        Stored rows have support starting at their pivot, so eliminating the
        smallest pivot column present only introduces larger columns.
        """
        f = self.field
        v = {c: x for c, x in vec.items() if not f.is_zero(x)}
        while True:
            hits = set(v) & set(self.rows)
            if not hits:
                return v
            c = min(hits)
            coef = v[c]
            for cc, rv in self.rows[c].items():
                nv = f.sub(v.get(cc, f.zero), f.mul(coef, rv))
                if f.is_zero(nv):
                    v.pop(cc, None)
                else:
                    v[cc] = nv
        return v

    def insert(self, vec):
        """Reduce and store vec; returns the pivot col or None if dependent."""
        f = self.field
        v = self.reduce(vec)
        if not v:
            return None
        c = min(v)
        inv = f.inv(v[c])
        new_row = {cc: f.mul(x, inv) for cc, x in v.items()}
        for pc, row in self.rows.items():
            coef = row.get(c)
            if coef is None or f.is_zero(coef):
                continue
            for cc, rv in new_row.items():
                nv = f.sub(row.get(cc, f.zero), f.mul(coef, rv))
                if f.is_zero(nv):
                    row.pop(cc, None)
                else:
                    row[cc] = nv
        self.rows[c] = new_row
        return c

    def contains(self, vec):
        return not self.reduce(vec)


class TrackedEchelon:
    """Reduced echelon that remembers how each row combines the inserted tags."""

    def __init__(self, field=QQ):
        self.field = field
        self.rows = {}  # pivot col -> (row dict, coeffs dict tag -> value)

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return (residue, coeffs) with vec = residue + sum coeffs[tag]*V_tag."""
        f = self.field
        v = {c: x for c, x in vec.items() if not f.is_zero(x)}
        coeffs = {}
        while True:
            hits = set(v) & set(self.rows)
            if not hits:
                return v, coeffs
            c = min(hits)
            coef = v[c]
            row, rc = self.rows[c]
            for cc, rv in row.items():
                nv = f.sub(v.get(cc, f.zero), f.mul(coef, rv))
                if f.is_zero(nv):
                    v.pop(cc, None)
                else:
                    v[cc] = nv
            for tag, tv in rc.items():
                nv = f.add(coeffs.get(tag, f.zero), f.mul(coef, tv))
                if f.is_zero(nv):
                    coeffs.pop(tag, None)
                else:
                    coeffs[tag] = nv
        return v, coeffs

    def insert(self, vec, tag=None):
        f = self.field
        v, coeffs = self.reduce(vec)
        if not v:
            return None
        c = min(v)
        inv = f.inv(v[c])
        row = {cc: f.mul(x, inv) for cc, x in v.items()}
        rc = {t: f.mul(f.neg(x), inv) for t, x in coeffs.items()}
        if tag is not None:
            rc[tag] = inv
        for pc, (orow, orc) in self.rows.items():
            coef = orow.get(c)
            if coef is None or f.is_zero(coef):
                continue
            for cc, rv in row.items():
                nv = f.sub(orow.get(cc, f.zero), f.mul(coef, rv))
                if f.is_zero(nv):
                    orow.pop(cc, None)
                else:
                    orow[cc] = nv
            for t, tv in rc.items():
                nv = f.sub(orc.get(t, f.zero), f.mul(coef, tv))
                if f.is_zero(nv):
                    orc.pop(t, None)
                else:
                    orc[t] = nv
        self.rows[c] = (row, rc)
        return c
