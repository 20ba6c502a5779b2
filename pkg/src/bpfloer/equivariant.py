"""Double-complex models for the three equivariant chain functors over the
exterior algebra on one degree-3 generator, the norm map and its cone, a
literal bar-construction oracle, and orbit-homology calculators.

One code path materializes all three flavors: the double complex has columns
p (p >= 0 for '+', p <= 0 for '-', all p for 'inf'), column p carrying the
source shifted by 4p, horizontal differential (-1)^(n+1) u and vertical
differential the source boundary.  On finite sources all totalizations
coincide degreewise, so the flavor only selects the column range.
"""
from __future__ import annotations

from dataclasses import dataclass

from .chains import ChainMap, FiniteComplex, HomologyData, induced_map_between, matrix_rank
from .donaldson import WindowedComplex
from .errors import BPFloerError, OracleMismatch, TriangleViolation
from .groups import FULLY_REDUCIBLE, REDUCIBLE
from .presented import FINITE, PI8, PIINF8, Family, PresentedModule

PLUS = "+"
MINUS = "-"
TATE = "inf"


@dataclass(frozen=True)
class ColGen:
    """Column-p copy of a source generator."""

    p: int
    gen: object

    def __repr__(self):
        return "(p=%d)%r" % (self.p, self.gen)


class FunctorModel:
    """Materialized totalization of one flavor over a degree range."""

    def __init__(self, source_complex: FiniteComplex, source_u: ChainMap, flavor,
                 deg_lo=None, deg_hi=None):
        if flavor not in (PLUS, MINUS, TATE):
            raise BPFloerError("flavor must be '+', '-' or 'inf'")
        self.flavor = flavor
        self.source = source_complex
        self.source_u = source_u
        field = source_complex.field
        src_degrees = source_complex.degrees()
        if not src_degrees:
            deg_lo = deg_lo if deg_lo is not None else 0
            deg_hi = deg_hi if deg_hi is not None else 0
        s_lo, s_hi = (min(src_degrees), max(src_degrees)) if src_degrees else (0, 0)
        if deg_lo is None:
            deg_lo = s_lo
        if deg_hi is None:
            deg_hi = s_hi
        self.deg_lo, self.deg_hi = deg_lo, deg_hi
        cx = FiniteComplex(field)
        cols = {}
        for n in range(deg_lo, deg_hi + 1):
            for d in src_degrees:
                p = (n - d) // 4
                if (n - d) % 4 != 0:
                    continue
                if flavor == PLUS and p < 0:
                    continue
                if flavor == MINUS and p > 0:
                    continue
                for i, g in enumerate(source_complex.basis[d]):
                    lev = source_complex.levels[d][i]
                    cx.add_generator(n, ColGen(p, g), level=lev)
                cols.setdefault(n, []).append(p)
        f = field
        for n in range(deg_lo, deg_hi + 1):
            for cg in cx.basis.get(n, []):
                d = n - 4 * cg.p
                img = {}
                pos = source_complex.index[d][cg.gen]
                for row, v in source_complex.boundary_columns(d)[pos].items():
                    img[ColGen(cg.p, source_complex.basis[d - 1][row])] = v
                if self._col_ok(cg.p - 1):
                    sgn = f.of(1 if (n + 1) % 2 == 0 else -1)
                    for row, v in source_u.column(d, pos).items():
                        tgt = ColGen(cg.p - 1, source_complex.basis[d + 3][row])
                        img[tgt] = f.add(img.get(tgt, f.zero), f.mul(sgn, v))
                cx.set_boundary(n, cg, img)
        self.complex = cx
        u = ChainMap(cx, cx, -4)
        for n in range(deg_lo, deg_hi + 1):
            for cg in cx.basis.get(n, []):
                img = {}
                if self._col_ok(cg.p - 1):
                    img[ColGen(cg.p - 1, cg.gen)] = 1
                u.set_image(n, cg, img)
        self.u = u
        self._homology = None

    def _col_ok(self, p):
        if self.flavor == PLUS:
            return p >= 0
        if self.flavor == MINUS:
            return p <= 0
        return True

    def horizontal_vertical(self):
        """The two pieces of the differential, for the double-complex axioms."""
        f = self.complex.field
        dh = ChainMap(self.complex, self.complex, -1)
        dv = ChainMap(self.complex, self.complex, -1)
        for n in self.complex.degrees():
            for cg in self.complex.basis[n]:
                d = n - 4 * cg.p
                pos = self.source.index[d][cg.gen]
                vimg = {}
                for row, v in self.source.boundary_columns(d)[pos].items():
                    vimg[ColGen(cg.p, self.source.basis[d - 1][row])] = v
                dv.set_image(n, cg, vimg)
                himg = {}
                if self._col_ok(cg.p - 1):
                    sgn = f.of(1 if (n + 1) % 2 == 0 else -1)
                    for row, v in self.source_u.column(d, pos).items():
                        himg[ColGen(cg.p - 1, self.source.basis[d + 3][row])] = f.mul(sgn, v)
                dh.set_image(n, cg, himg)
        return dh, dv

    def homology(self) -> HomologyData:
        if self._homology is None:
            self._homology = HomologyData(self.complex)
        return self._homology

    def interior_degrees(self, margin=4):
        return range(self.deg_lo + margin + 1, self.deg_hi - margin)


def functor_model(window: WindowedComplex, flavor, deg_lo=None, deg_hi=None) -> FunctorModel:
    return FunctorModel(window.complex, window.u, flavor, deg_lo, deg_hi)


def orbit_homology(kind, flavor) -> PresentedModule:
    """Closed-form equivariant homology of a single critical orbit."""
    if flavor == PLUS:
        if kind == FULLY_REDUCIBLE:
            return PresentedModule(PI8, [Family("V", 0, 4, 0)], {"V": -1}, {})
        if kind == REDUCIBLE:
            return PresentedModule(PI8, [Family("W", 0, 2, 0)], {"W": -2}, {})
        return PresentedModule(
            FINITE, [Family("g", 0, 0, 0, 0, 0)], {}, {("g", 0): []}
        )
    if flavor == MINUS:
        if kind == FULLY_REDUCIBLE:
            return PresentedModule(PI8, [Family("U", 0, -4, 0)], {"U": 1}, {})
        if kind == REDUCIBLE:
            return PresentedModule(PI8, [Family("Z", 2, -2, 0)], {"Z": 2}, {})
        return PresentedModule(
            FINITE, [Family("h", 3, 0, 0, 0, 0)], {}, {("h", 0): []}
        )
    if kind == FULLY_REDUCIBLE:
        return PresentedModule(PIINF8, [Family("T", 0, -4, 0, None)], {"T": 1}, {})
    if kind == REDUCIBLE:
        return PresentedModule(PIINF8, [Family("S", 0, -2, 0, None)], {"S": 2}, {})
    return PresentedModule(FINITE, [], {}, {})


# ---------------------------------------------------------------------------
# Literal bar-construction oracle.


class BarComplexes:
    """Literal bar-side complexes for the two uncompleted flavors.

    '+' is the two-sided bar construction with trivial right coefficients;
    '-' is the complex of linear functionals on the reduced-letter basis of
    the resolution.  Differentials and the degree -4 action are derived from
    the generic simplicial/internal formulas specialized to a single
    degree-3 exterior letter.
    """

    def __init__(self, window: WindowedComplex, flavor, deg_lo=None, deg_hi=None):
        if flavor not in (PLUS, MINUS):
            raise BPFloerError("bar oracle covers flavors '+' and '-' only")
        self.flavor = flavor
        src = window.complex
        u = window.u
        field = src.field
        src_degrees = src.degrees()
        s_lo, s_hi = (min(src_degrees), max(src_degrees)) if src_degrees else (0, 0)
        deg_lo = s_lo if deg_lo is None else deg_lo
        deg_hi = s_hi if deg_hi is None else deg_hi
        self.deg_lo, self.deg_hi = deg_lo, deg_hi
        cx = FiniteComplex(field)
        for n in range(deg_lo, deg_hi + 1):
            for d in src_degrees:
                if flavor == PLUS:
                    # m [u|...|u], p letters: total degree |m| + 4p, p >= 0
                    p4 = n - d
                else:
                    # value slot at [u|...|u] with p letters: m of degree n + 4p
                    p4 = d - n
                if p4 < 0 or p4 % 4:
                    continue
                p = p4 // 4
                for i, g in enumerate(src.basis[d]):
                    cx.add_generator(n, ColGen(p, g), level=src.levels[d][i])
        f = field
        for n in range(deg_lo, deg_hi + 1):
            for cg in cx.basis.get(n, []):
                p = cg.p
                if flavor == PLUS:
                    d = n - 4 * p
                    pos = src.index[d][cg.gen]
                    img = {}
                    sgn = f.of(1 if p % 2 == 0 else -1)
                    for row, v in src.boundary_columns(d)[pos].items():
                        img[ColGen(p, src.basis[d - 1][row])] = f.mul(sgn, v)
                    if p >= 1:
                        for row, v in u.column(d, pos).items():
                            tgt = ColGen(p - 1, src.basis[d + 3][row])
                            img[tgt] = f.add(img.get(tgt, f.zero), v)
                else:
                    d = n + 4 * p
                    pos = src.index[d][cg.gen]
                    img = {}
                    for row, v in src.boundary_columns(d)[pos].items():
                        img[ColGen(p, src.basis[d - 1][row])] = v
                    # the letter-sequence boundary contributes at slot p+1
                    sgn = f.of(1 if (n + p) % 2 == 0 else -1)
                    for row, v in u.column(d, pos).items():
                        tgt = ColGen(p + 1, src.basis[d + 3][row])
                        img[tgt] = f.add(img.get(tgt, f.zero), f.mul(sgn, v))
                cx.set_boundary(n, cg, img)
        self.complex = cx
        uu = ChainMap(cx, cx, -4)
        for n in range(deg_lo, deg_hi + 1):
            for cg in cx.basis.get(n, []):
                p = cg.p
                if flavor == PLUS:
                    d = n - 4 * p
                    img = {}
                    if p >= 1:
                        sgn = 1 if (d + p) % 2 == 0 else -1
                        img[ColGen(p - 1, cg.gen)] = sgn
                else:
                    sgn = 1 if (p + 1) % 2 == 0 else -1
                    img = {ColGen(p + 1, cg.gen): sgn}
                uu.set_image(n, cg, img)
        self.u = uu

    def sign_iso(self, model: FunctorModel) -> ChainMap:
        """The diagonal sign map identifying the model with the bar side."""
        iso = ChainMap(model.complex, self.complex, 0)
        for n in model.complex.degrees():
            for cg in model.complex.basis[n]:
                if self.flavor == PLUS:
                    p = cg.p
                    e = (p * n + p * (p + 1) // 2) % 2
                    tgt = ColGen(p, cg.gen)
                else:
                    p = -cg.p
                    e = (p * (p + 1) // 2) % 2
                    tgt = ColGen(p, cg.gen)
                iso.set_image(n, cg, {tgt: 1 if e == 0 else -1})
        return iso


def bar_oracle(window: WindowedComplex, flavor, deg_lo=None, deg_hi=None):
    """Build the literal bar complexes and verify the sign isomorphism.

    Returns (bar, model, iso); raises OracleMismatch naming the first
    offending generator when a square fails to commute.
    """
    bar = BarComplexes(window, flavor, deg_lo, deg_hi)
    model = FunctorModel(window.complex, window.u, flavor, bar.deg_lo, bar.deg_hi)
    iso = bar.sign_iso(model)
    f = model.complex.field
    for n in model.complex.degrees():
        for pos, cg in enumerate(model.complex.basis[n]):
            lhs = {}
            for row, v in iso.column(n, pos).items():
                for row2, w in bar.complex.boundary_columns(n)[row].items():
                    lhs[row2] = f.add(lhs.get(row2, f.zero), f.mul(v, w))
            rhs = iso.apply(n - 1, model.complex.boundary_columns(n)[pos])
            if any(not f.is_zero(f.sub(lhs.get(k, f.zero), rhs.get(k, f.zero)))
                   for k in set(lhs) | set(rhs)):
                raise OracleMismatch("differential square fails at %r in degree %d" % (cg, n))
            if n - 4 >= bar.deg_lo:
                lhs = {}
                for row, v in iso.column(n, pos).items():
                    for row2, w in bar.u.column(n, row).items():
                        lhs[row2] = f.add(lhs.get(row2, f.zero), f.mul(v, w))
                rhs = iso.apply(n - 4, model.u.column(n, pos))
                if any(not f.is_zero(f.sub(lhs.get(k, f.zero), rhs.get(k, f.zero)))
                       for k in set(lhs) | set(rhs)):
                    raise OracleMismatch("degree -4 action square fails at %r in degree %d" % (cg, n))
    return bar, model, iso


# ---------------------------------------------------------------------------
# Norm map, cone, Tate comparison.


class NormData:
    """The degree-3 composite from the '+' to the '-' model, the degree-0
    homotopy witnessing its commutation with the degree -4 action up to
    homotopy, and the cone with the adjusted action."""

    def __init__(self, plus: FunctorModel, minus: FunctorModel):
        if plus.flavor != PLUS or minus.flavor != MINUS:
            raise BPFloerError("norm data needs a '+' and a '-' model")
        self.plus, self.minus = plus, minus
        f = plus.complex.field
        src = plus.source
        nu = ChainMap(plus.complex, minus.complex, 3)
        psi_s = ChainMap(plus.complex, minus.complex, 0)
        for n in plus.complex.degrees():
            for cg in plus.complex.basis[n]:
                img_nu, img_s = {}, {}
                if cg.p == 0:
                    d = n
                    pos = src.index[d][cg.gen]
                    sgn = f.of(1 if n % 2 == 0 else -1)
                    for row, v in plus.source_u.column(d, pos).items():
                        img_nu[ColGen(0, src.basis[d + 3][row])] = f.mul(sgn, v)
                    img_s[ColGen(0, cg.gen)] = 1
                nu.set_image(n, cg, img_nu)
                psi_s.set_image(n, cg, img_s)
        self.nu = nu
        self.psi_s = psi_s

    def check_chain_map(self):
        """nu d = -d nu on the overlap of the materialized ranges."""
        return self.nu.is_chain_map(sign=-1)

    def check_homotopy(self):
        """nu U - U nu = d psi_s - psi_s d, away from the degree cutoffs."""
        f = self.plus.complex.field
        lo = max(self.plus.deg_lo, self.minus.deg_lo)
        hi = min(self.plus.deg_hi, self.minus.deg_hi)
        for n in self.plus.complex.degrees():
            if not (lo + 4 <= n <= hi - 4):
                continue
            for pos in range(self.plus.complex.dim(n)):
                start = {pos: f.one}
                a = self.nu.apply(n - 4, self.plus.u.apply(n, start))   # nu U
                b = self.minus.u.apply(n + 3, self.nu.apply(n, start))  # U nu
                lhs = {k: f.sub(a.get(k, f.zero), b.get(k, f.zero)) for k in set(a) | set(b)}
                c = {}
                for row, v in self.psi_s.apply(n, start).items():
                    for row2, w in self.minus.complex.boundary_columns(n)[row].items():
                        c[row2] = f.add(c.get(row2, f.zero), f.mul(v, w))
                d = self.psi_s.apply(n - 1, self.plus.complex.boundary_columns(n)[pos])
                rhs = {k: f.sub(c.get(k, f.zero), d.get(k, f.zero)) for k in set(c) | set(d)}
                for k in set(lhs) | set(rhs):
                    if not f.is_zero(f.sub(lhs.get(k, f.zero), rhs.get(k, f.zero))):
                        return False
        return True

    def cone(self):
        """Cone of nu with the adjusted degree -4 action.

        Returns (complex, u) where degree n holds the '-' part in degree n
        and the '+' part in degree n - 4.
        """
        f = self.plus.complex.field
        cx = FiniteComplex(f)
        lo = max(self.minus.deg_lo, self.plus.deg_lo + 4)
        hi = min(self.minus.deg_hi, self.plus.deg_hi + 4)
        for n in range(lo, hi + 1):
            for cg in self.minus.complex.basis.get(n, []):
                cx.add_generator(n, ("m", cg), level=None)
            for cg in self.plus.complex.basis.get(n - 4, []):
                cx.add_generator(n, ("p", cg), level=None)
        for n in range(lo, hi + 1):
            for cg in self.minus.complex.basis.get(n, []):
                pos = self.minus.complex.index[n][cg]
                img = {}
                for row, v in self.minus.complex.boundary_columns(n)[pos].items():
                    img[("m", self.minus.complex.basis[n - 1][row])] = v
                cx.set_boundary(n, ("m", cg), img)
            for cg in self.plus.complex.basis.get(n - 4, []):
                pos = self.plus.complex.index[n - 4][cg]
                img = {}
                for row, v in self.plus.complex.boundary_columns(n - 4)[pos].items():
                    img[("p", self.plus.complex.basis[n - 5][row])] = v
                for row, v in self.nu.column(n - 4, pos).items():
                    tgt = ("m", self.minus.complex.basis[n - 1][row])
                    img[tgt] = f.add(img.get(tgt, f.zero), f.neg(v))
                cx.set_boundary(n, ("p", cg), img)
        u = ChainMap(cx, cx, -4)
        for n in range(lo, hi + 1):
            for cg in self.minus.complex.basis.get(n, []):
                pos = self.minus.complex.index[n][cg]
                img = {("m", self.minus.complex.basis[n - 4][row]): v
                       for row, v in self.minus.u.column(n, pos).items()}
                u.set_image(n, ("m", cg), img)
            for cg in self.plus.complex.basis.get(n - 4, []):
                pos = self.plus.complex.index[n - 4][cg]
                img = {}
                for row, v in self.plus.u.column(n - 4, pos).items():
                    img[("p", self.plus.complex.basis[n - 8][row])] = v
                for row, v in self.psi_s.column(n - 4, pos).items():
                    tgt = ("m", self.minus.complex.basis[n - 4][row])
                    img[tgt] = f.add(img.get(tgt, f.zero), v)
                u.set_image(n, ("p", cg), img)
        return cx, u

    def cone_matches_tate(self, tate: FunctorModel):
        """The cone is degreewise the flavor-'inf' model: the '-' part sits in
        columns p <= 0 and the '+' part shifted into columns p >= 1; check
        that differentials and the adjusted action agree on the overlap."""
        cone_cx, cone_u = self.cone()
        f = cone_cx.field

        def relabel(lbl):
            part, cg = lbl
            return ColGen(cg.p if part == "m" else cg.p + 1, cg.gen)

        lo = max(min(cone_cx.degrees(), default=0), tate.deg_lo + 1)
        hi = min(max(cone_cx.degrees(), default=0), tate.deg_hi)
        for n in range(lo + 1, hi + 1):
            for lbl in cone_cx.basis.get(n, []):
                tgt_idx = tate.complex.index.get(n, {})
                if relabel(lbl) not in tgt_idx:
                    return False
                pos = cone_cx.index[n][lbl]
                got = {relabel(cone_cx.basis[n - 1][row]): v
                       for row, v in cone_cx.boundary_columns(n)[pos].items()}
                tpos = tgt_idx[relabel(lbl)]
                want = {tate.complex.basis[n - 1][row]: v
                        for row, v in tate.complex.boundary_columns(n)[tpos].items()}
                for k in set(got) | set(want):
                    if not f.is_zero(f.sub(got.get(k, f.zero), want.get(k, f.zero))):
                        return False
                if n - 4 >= lo:
                    gotu = {relabel(cone_cx.basis[n - 4][row]): v
                            for row, v in cone_u.column(n, pos).items()}
                    wantu = {tate.complex.basis[n - 4][row]: v
                             for row, v in tate.u.column(n, tpos).items()}
                    for k in set(gotu) | set(wantu):
                        if not f.is_zero(f.sub(gotu.get(k, f.zero), wantu.get(k, f.zero))):
                            return False
        return True


def exact_triangle_check(window: WindowedComplex, deg_lo=None, deg_hi=None, margin=4):
    """Verify the cone long exact sequence on a window, flavorwise.

    For every safe interior degree n:
        dim Hinf_n = dim coker(H(nu) -> Hminus_n) + dim ker(H(nu) on Hplus_{n-4}).
    Returns a dict report; raises TriangleViolation on an interior failure.
    """
    plus = functor_model(window, PLUS, deg_lo, deg_hi)
    minus = functor_model(window, MINUS, deg_lo, deg_hi)
    tate = functor_model(window, TATE, deg_lo, deg_hi)
    norm = NormData(plus, minus)
    hp, hm, ht = plus.homology(), minus.homology(), tate.homology()
    field = window.field
    report = {"checked": [], "flagged_boundary": []}
    lo, hi = plus.deg_lo, plus.deg_hi
    wlo = max(lo, window.win.n_lo, window.win.q)
    whi = min(hi, window.win.n_hi, window.win.p)
    for n in range(wlo + margin + 1, whi - margin):
        try:
            m1 = induced_map_between(hp, hm, norm.nu, n - 3)
            m2 = induced_map_between(hp, hm, norm.nu, n - 4)
        except BPFloerError:
            report["flagged_boundary"].append(n)
            continue
        coker = hm.dim(n) - matrix_rank(m1, field)
        ker = hp.dim(n - 4) - matrix_rank(m2, field)
        if ht.dim(n) != coker + ker:
            raise TriangleViolation(
                "degree %d: dim Hinf = %d but coker+ker = %d+%d" % (n, ht.dim(n), coker, ker)
            )
        report["checked"].append(n)
    return report
