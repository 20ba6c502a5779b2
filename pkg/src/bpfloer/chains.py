"""Finite graded chain complexes with exact homology and filtered pages.

A FiniteComplex holds, per degree, an ordered basis of hashable labels and a
sparse boundary into the next degree down.  Chain maps are stored the same
way.  Everything is exact over the attached field.
"""
from __future__ import annotations

from .errors import BPFloerError
from .fields import QQ
from .sparse import Echelon, TrackedEchelon


class FiniteComplex:
    def __init__(self, field=QQ):
        self.field = field
        self.basis = {}      # degree -> list of labels
        self.index = {}      # degree -> {label: position}
        self.boundary = {}   # degree -> list of column dicts (pos in deg-1 -> value)
        self.levels = {}     # degree -> list of filtration levels (optional)

    def add_generator(self, degree, label, level=None):
        lst = self.basis.setdefault(degree, [])
        idx = self.index.setdefault(degree, {})
        if label in idx:
            raise BPFloerError("duplicate generator %r in degree %d" % (label, degree))
        idx[label] = len(lst)
        lst.append(label)
        self.boundary.setdefault(degree, []).append({})
        self.levels.setdefault(degree, []).append(level)

    def set_boundary(self, degree, label, image):
        """image: dict target-label -> coefficient (targets in degree-1)."""
        f = self.field
        pos = self.index[degree][label]
        tgt = self.index.get(degree - 1, {})
        col = {}
        for lab, v in image.items():
            v = f.of(v)
            if lab not in tgt:
                continue  # target truncated away by the window
            if not f.is_zero(v):
                col[tgt[lab]] = v
        self.boundary[degree][pos] = col

    def degrees(self):
        return sorted(self.basis)

    def dim(self, degree):
        return len(self.basis.get(degree, []))

    def total_dim(self):
        return sum(len(v) for v in self.basis.values())

    def boundary_columns(self, degree):
        return self.boundary.get(degree, [])

    def check_dd_zero(self):
        f = self.field
        for n in self.degrees():
            lower = self.boundary.get(n - 1, [])
            for col in self.boundary_columns(n):
                acc = {}
                for row, v in col.items():
                    for row2, w in lower[row].items():
                        acc[row2] = f.add(acc.get(row2, f.zero), f.mul(v, w))
                if any(not f.is_zero(v) for v in acc.values()):
                    raise BPFloerError("dd != 0 in degree %d" % n)
        return True


class ChainMap:
    """A degree-d map between complexes, stored as per-degree sparse columns."""

    def __init__(self, source, target, degree):
        self.source = source
        self.target = target
        self.degree = degree
        self.columns = {}  # source degree -> list of column dicts (target pos -> value)

    def set_image(self, degree, label, image):
        f = self.source.field
        pos = self.source.index[degree][label]
        cols = self.columns.setdefault(degree, [dict() for _ in self.source.basis[degree]])
        tgt = self.target.index.get(degree + self.degree, {})
        col = {}
        for lab, v in image.items():
            v = f.of(v)
            if lab in tgt and not f.is_zero(v):
                col[tgt[lab]] = v
        cols[pos] = col

    def column(self, degree, pos):
        cols = self.columns.get(degree)
        if cols is None:
            return {}
        return cols[pos]

    def apply(self, degree, vec):
        """Apply to a sparse vector in source degree; result in degree+self.degree."""
        f = self.source.field
        out = {}
        for pos, x in vec.items():
            for row, v in self.column(degree, pos).items():
                out[row] = f.add(out.get(row, f.zero), f.mul(v, x))
        return {k: v for k, v in out.items() if not f.is_zero(v)}

    def is_chain_map(self, sign=1):
        """Check f d = sign * d f degreewise (sign -1 for odd-degree maps)."""
        f = self.source.field
        s = f.of(sign)
        for n in self.source.degrees():
            for pos in range(self.source.dim(n)):
                left = self.apply(n - 1, self.source.boundary_columns(n)[pos])
                fx = self.apply(n, {pos: f.one})
                tn = n + self.degree
                right = {}
                tcols = self.target.boundary_columns(tn)
                for row, v in fx.items():
                    for row2, w in tcols[row].items():
                        right[row2] = f.add(right.get(row2, f.zero), f.mul(v, w))
                for k in set(left) | set(right):
                    if not f.is_zero(f.sub(left.get(k, f.zero), f.mul(s, right.get(k, f.zero)))):
                        return False
        return True


def _kernel_of_columns(columns, ncols, field):
    """Kernel basis of the map sending basis vector j to columns[j]."""
    f = field
    ech = TrackedEchelon(f)
    kernel = []
    for j in range(ncols):
        residue, coeffs = ech.reduce(dict(columns[j]))
        if residue:
            c = min(residue)
            inv = f.inv(residue[c])
            row = {cc: f.mul(x, inv) for cc, x in residue.items()}
            rc = {t: f.mul(f.neg(x), inv) for t, x in coeffs.items()}
            rc[j] = inv
            ech.rows[c] = (row, rc)
        else:
            vec = {j: f.one}
            for t, x in coeffs.items():
                vec[t] = f.neg(x)
            kernel.append(vec)
    return kernel, ech.rank


class HomologyData:
    """Homology of a FiniteComplex: dims, representatives and coordinates."""

    def __init__(self, complex_):
        self.complex = complex_
        f = complex_.field
        self.cycle_basis = {}
        self.rank_boundary = {}
        degrees = complex_.degrees()
        for n in degrees:
            cols = complex_.boundary_columns(n)
            kernel, rank = _kernel_of_columns(cols, complex_.dim(n), f)
            self.cycle_basis[n] = kernel
            self.rank_boundary[n] = rank  # rank of d_n : C_n -> C_{n-1}
        self.reps = {}
        self._coord = {}
        for n in degrees:
            tracked = TrackedEchelon(f)
            # boundaries first, untagged
            if n + 1 in self.basis_degrees():
                for j, col in enumerate(complex_.boundary_columns(n + 1)):
                    if col:
                        tracked.insert(dict(col))
            reps = []
            for vec in self.cycle_basis.get(n, []):
                tag = len(reps)
                if tracked.insert(dict(vec), tag=tag) is not None:
                    reps.append(vec)
            self.reps[n] = reps
            self._coord[n] = tracked

    def basis_degrees(self):
        return self.complex.basis.keys()

    def dim(self, n):
        return len(self.reps.get(n, []))

    def dims(self):
        return {n: self.dim(n) for n in self.complex.degrees()}

    def coords(self, n, vec):
        """Coordinates of a cycle in the homology basis of degree n.

        Returns None when vec is not a cycle class of this complex.
        """
        vec = {k: v for k, v in vec.items() if not self.complex.field.is_zero(v)}
        if n not in self._coord:
            return {} if not vec else None
        residue, coeffs = self._coord[n].reduce(dict(vec))
        if residue:
            return None
        return coeffs

def induced_map_between(h_source: HomologyData, h_target: HomologyData, cmap: ChainMap, n):
    """Induced map H_n(source) -> H_{n+d}(target) as a list of coordinate dicts."""
    cols = []
    for vec in h_source.reps.get(n, []):
        img = cmap.apply(n, vec)
        coords = h_target.coords(n + cmap.degree, img)
        if coords is None:
            raise BPFloerError("image of a cycle is not a cycle mod boundaries")
        cols.append(coords)
    return cols


def matrix_rank(cols, field):
    ech = Echelon(field)
    for col in cols:
        ech.insert(dict(col))
    return ech.rank


# ---------------------------------------------------------------------------
# Spectral sequence of a finite filtered complex (dimension data only).


class FilteredPages:
    """E^r page dimensions of the filtration of a FiniteComplex by levels.

    Levels must be attached to every generator.  Only dimensions are
    computed; this is the generic oracle used by the accounting checks.
    """

    def __init__(self, complex_: FiniteComplex):
        self.complex = complex_
        self.field = complex_.field
        levels = [l for lst in complex_.levels.values() for l in lst]
        if any(l is None for l in levels):
            raise BPFloerError("filtered pages need levels on every generator")
        self.min_level = min(levels) if levels else 0
        self.max_level = max(levels) if levels else 0
        self._z_cache = {}

    def _z_basis(self, s, n, r):
        """Basis of Z^r_s in degree n: x in F_s C_n with dx in F_{s-r} C_{n-1}."""
        key = (s, n, r)
        got = self._z_cache.get(key)
        if got is not None:
            return got
        f = self.field
        cx = self.complex
        idxs = [i for i, l in enumerate(cx.levels.get(n, [])) if l <= s]
        cols = []
        lev_lower = cx.levels.get(n - 1, [])
        for i in idxs:
            col = cx.boundary_columns(n)[i]
            cols.append({row: v for row, v in col.items() if lev_lower[row] > s - r})
        kernel, _ = _kernel_of_columns(cols, len(idxs), f)
        out = []
        for vec in kernel:
            out.append({idxs[i]: v for i, v in vec.items()})
        self._z_cache[key] = out
        return out

    def page_dim(self, r, s, t):
        """dim E^r_{s,t} for r >= 1."""
        f = self.field
        n = s + t
        z = self._z_basis(s, n, r)
        if not z:
            return 0
        ech = Echelon(f)
        for vec in self._z_basis(s - 1, n, r - 1):
            ech.insert(dict(vec))
        cx = self.complex
        for vec in self._z_basis(s + r - 1, n + 1, r - 1):
            img = {}
            for pos, x in vec.items():
                for row, v in cx.boundary_columns(n + 1)[pos].items():
                    img[row] = f.add(img.get(row, f.zero), f.mul(v, x))
            ech.insert(img)
        dim_bottom = ech.rank
        for vec in z:
            ech.insert(dict(vec))
        return ech.rank - dim_bottom

    def stable_r(self):
        return self.max_level - self.min_level + 2

    def einfty_dim(self, s, t):
        return self.page_dim(self.stable_r(), s, t)

    def einfty_total(self, n):
        """sum over s of dim E^infty_{s, n-s}; levels outside range contribute 0."""
        total = 0
        for s in range(self.min_level, self.max_level + 1):
            total += self.einfty_dim(s, n - s)
        return total
