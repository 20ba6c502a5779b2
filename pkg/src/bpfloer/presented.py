"""Mod-8-periodic graded module presentations and window comparisons.

A PresentedModule is a finite list of generator families.  Each family is a
tower x^k (k >= floor, or k in Z for Laurent families) with degree
base + step*k, sitting at a fixed filtration column; the U-action either
shifts the tower index or is overridden per index by explicit corrections
into other families.  Window realizations enumerate the finitely many
elements with level in (q, p] and degree in [n_lo, n_hi].
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .donaldson import Window
from .errors import BPFloerError
from .fields import QQ
from .sparse import Echelon

PI8 = "pi8"
OPLUS8 = "oplus8"
PIINF8 = "piinf8"
FINITE = "finite"


@dataclass(frozen=True)
class Family:
    label: str
    base_degree: int        # degree of index 0 in the shift-0 copy
    step: int               # degree increment per index (0 for a single class)
    column: int             # filtration level of the shift-0 copy
    floor: int = 0          # smallest index; None for Laurent towers
    top: int | None = None  # largest index (0 for a single class), None if infinite

    def degree(self, k):
        return self.base_degree + self.step * k

    def valid(self, k):
        if self.floor is not None and k < self.floor:
            return False
        if self.top is not None and k > self.top:
            return False
        return True


@dataclass
class PresentedModule:
    flavor_tag: str
    families: list
    # U-rules: per family label either ("shift", ds) meaning U x^k = x^{k+ds},
    # with out-of-range images dropped, or explicit corrections per index:
    # corrections[(label, k)] = [(label2, k2, coeff), ...] overriding the shift.
    shifts: dict = field(default_factory=dict)
    corrections: dict = field(default_factory=dict)

    def family(self, label):
        for f in self.families:
            if f.label == label:
                return f
        raise BPFloerError("no family %r" % label)

    def u_image(self, label, k):
        """U . x^k as [(label, index, integer coeff)]; degree drops by 4."""
        if (label, k) in self.corrections:
            return list(self.corrections[(label, k)])
        f = self.family(label)
        ds = self.shifts.get(label)
        if ds is None:
            return []
        k2 = k + ds
        if not f.valid(k2):
            return []
        return [(label, k2, 1)]

    def even_degrees_only(self):
        """True when every element of the module sits in even degree."""
        for f in self.families:
            if f.step % 2:
                return False
            k0 = f.floor if f.floor is not None else 0
            if f.degree(k0) % 2:
                return False
        return True

    def dual(self):
        """Degree-negated dual; only for plain free-tower presentations."""
        if self.corrections:
            raise BPFloerError("dual() supports only free-tower modules")
        fams, shifts = [], {}
        for f in self.families:
            if f.floor != 0 or f.top is not None:
                if f.top == 0 and f.floor == 0:
                    fams.append(Family(f.label, -f.base_degree, 0, -f.column, 0, 0))
                    continue
                raise BPFloerError("dual() expects towers with floor 0")
            fams.append(Family(f.label, -f.base_degree, -f.step, -f.column, 0, None))
            shifts[f.label] = -self.shifts[f.label]
        return PresentedModule(self.flavor_tag, fams, shifts, {})


class ModuleWindow:
    """Finite realization of a PresentedModule inside a window."""

    def __init__(self, module: PresentedModule, win: Window, field=QQ):
        self.module = module
        self.win = win
        self.field = field
        basis = []
        for f in module.families:
            # copies: level = column + 8*shift in (q, p]
            lo_shift = -((f.column - (win.q + 1)) // 8)
            for s in range(lo_shift, (win.p - f.column) // 8 + 1):
                level = f.column + 8 * s
                if not (win.q < level <= win.p):
                    continue
                ks = self._indices(f, s)
                for k in ks:
                    basis.append((f.label, k, s))
        self.basis = sorted(basis, key=lambda b: (self._deg(b), b))
        self.index = {b: i for i, b in enumerate(self.basis)}
        self.by_degree = {}
        for b in self.basis:
            self.by_degree.setdefault(self._deg(b), []).append(b)

    def _indices(self, f: Family, shift):
        lo, hi = self.win.n_lo, self.win.n_hi
        out = []
        if f.step == 0:
            ks = range(f.floor or 0, (f.top if f.top is not None else f.floor or 0) + 1)
            for k in ks:
                if lo <= f.degree(k) + 8 * shift <= hi:
                    out.append(k)
            return out
        # solve lo <= base + step*k + 8*shift <= hi exactly over the integers
        a, b = lo - f.base_degree - 8 * shift, hi - f.base_degree - 8 * shift
        if f.step < 0:
            a, b = -b, -a
        step = abs(f.step)
        kmin = -((-a) // step)   # ceil(a / step)
        kmax = b // step         # floor(b / step)
        for k in range(kmin, kmax + 1):
            if f.valid(k):
                out.append(k)
        return out

    def _deg(self, b):
        label, k, s = b
        return self.module.family(label).degree(k) + 8 * s

    def dims(self):
        return {n: len(v) for n, v in self.by_degree.items()}

    def dim(self, n):
        return len(self.by_degree.get(n, []))

    def u_matrix(self, n):
        """Columns of U restricted to degree n, into degree n-4 (index dicts)."""
        f = self.field
        cols = []
        for label, k, s in self.by_degree.get(n, []):
            col = {}
            for lab2, k2, coeff in self.module.u_image(label, k):
                fam2 = self.module.family(lab2)
                # shift of the target copy fixed by the degree bookkeeping
                d_target = self._deg((label, k, s)) - 4
                s2, rem = divmod(d_target - fam2.degree(k2), 8)
                if rem != 0:
                    raise BPFloerError("degree bookkeeping broke for %r" % ((label, k),))
                key = (lab2, k2, s2)
                pos = self.index.get(key)
                if pos is not None:
                    col[pos] = f.add(col.get(pos, f.zero), f.of(coeff))
            cols.append({p: v for p, v in col.items() if not f.is_zero(v)})
        return cols

    def u_power_rank(self, k, n):
        """rank of U^k from the degree-n slice to degree n-4k."""
        f = self.field
        vectors = [{self.index[b]: f.one} for b in self.by_degree.get(n, [])]
        deg = n
        for _ in range(k):
            cols = self.u_matrix(deg)
            rows = {self.index[b]: i for i, b in enumerate(self.by_degree.get(deg, []))}
            new_vectors = []
            for vec in vectors:
                acc = {}
                for pos, x in vec.items():
                    col = cols[rows[pos]]
                    for tgt, v in col.items():
                        acc[tgt] = f.add(acc.get(tgt, f.zero), f.mul(v, x))
                new_vectors.append({t: v for t, v in acc.items() if not f.is_zero(v)})
            vectors = new_vectors
            deg -= 4
        ech = Echelon(f)
        for vec in vectors:
            ech.insert(vec)
        return ech.rank


class HomologyWindow:
    """dims / U^k-rank view of a computed window homology."""

    def __init__(self, homology, u_chain_map):
        from .chains import HomologyData, induced_map_between

        self.h = homology
        self.field = homology.complex.field
        self._u = {}
        for n in homology.complex.degrees():
            try:
                self._u[n] = induced_map_between(homology, homology, u_chain_map, n)
            except BPFloerError:
                self._u[n] = None  # boundary degree; U image leaves the window

    def dim(self, n):
        return self.h.dim(n)

    def dims(self):
        return self.h.dims()

    def u_power_rank(self, k, n):
        f = self.field
        vectors = [{i: f.one} for i in range(self.h.dim(n))]
        deg = n
        for _ in range(k):
            cols = self._u.get(deg)
            if cols is None:
                return None
            new_vectors = []
            for vec in vectors:
                acc = {}
                for pos, x in vec.items():
                    for tgt, v in cols[pos].items():
                        acc[tgt] = f.add(acc.get(tgt, f.zero), f.mul(v, x))
                new_vectors.append(acc)
            vectors = new_vectors
            deg -= 4
        ech = Echelon(f)
        for vec in vectors:
            ech.insert(vec)
        return ech.rank


def reflected_window(win: Window) -> Window:
    """The window pairing with win under degree negation.

    Levels l in (q, p] pair with -l in [-p, -q) = (-p-1, -q-1]; degrees
    [n_lo, n_hi] pair with [-n_hi, -n_lo].
    """
    return Window(-win.p - 1, -win.q - 1, -win.n_hi, -win.n_lo)


@dataclass
class CompareReport:
    ok: bool
    checked_degrees: list
    mismatches: list

    def __bool__(self):
        return self.ok


def compare_windows(left, right, win: Window, degree_margin=4, level_margin=4, u_powers=6):
    """PASS iff dims agree and rank U^k agree on the safe interior.

    The safe interior keeps degrees at distance > degree_margin from the
    degree cutoffs and > level_margin from the filtration cutoffs.
    """
    lo = max(win.n_lo + degree_margin, win.q + level_margin) + 1
    hi = min(win.n_hi - degree_margin, win.p - level_margin) - 1
    degrees = list(range(lo, hi + 1))
    mismatches = []
    for n in degrees:
        a, b = left.dim(n), right.dim(n)
        if a != b:
            mismatches.append(("dim", n, a, b))
    for k in range(1, u_powers + 1):
        for n in degrees:
            if not (lo <= n - 4 * k <= hi):
                continue
            ra, rb = left.u_power_rank(k, n), right.u_power_rank(k, n)
            if ra is None or rb is None:
                continue
            if ra != rb:
                mismatches.append(("rankU^%d" % k, n, ra, rb))
    return CompareReport(not mismatches, degrees, mismatches)
