"""Command-line surface and the end-to-end verification pipeline.

Subcommands: groups, repr, mckay, sgraph, dci, floer, floer-raw, cs, verify.
Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.  A key=value
config file (--config or the BPFLOER_CONFIG environment variable) supplies
defaults that explicit flags override.
"""
from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import serialize
from .chains import HomologyData
from .cs import cs_table, q_vertex
from .donaldson import BAR, STD, Window, build_model, toi_multicomplex_matches
from .equivariant import MINUS, PLUS, TATE, bar_oracle, functor_model
from .errors import BPFloerError
from .fields import parse_field
from .floer import (
    MinusPages,
    assemble,
    duality_pairing_report,
    duality_transpose_check,
    norm_vanishing_and_splitting,
    run_to_einfty,
    ss_accounting,
)
from .groups import (
    GroupId,
    T_STAR,
    O_STAR,
    I_STAR,
    binary_dihedral,
    cyclic,
    parse_group,
    verify_orthogonality,
)
from .mckay import s_graph_matches_expected
from .presented import ModuleWindow, compare_windows
from .theorems import encoded_module

DEFAULT_GROUPS = (
    [T_STAR, O_STAR, I_STAR]
    + [cyclic(k) for k in range(2, 9)]
    + [binary_dihedral(k) for k in range(2, 8)]
)

FLAVORS = {"+": PLUS, "-": MINUS, "inf": TATE}


def _parse_pair(text, sep=":"):
    a, b = text.split(sep)
    return int(a), int(b)


def load_config(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise BPFloerError("bad config line: %r" % line)
            k, v = line.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def make_parser():
    p = argparse.ArgumentParser(prog="bpfloer", description=__doc__)
    p.add_argument("--config", default=os.environ.get("BPFLOER_CONFIG"))
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("groups", help="list the supported groups")

    pr = sub.add_parser("repr", help="character tables")
    pr.add_argument("action", choices=["table"])
    pr.add_argument("group")
    pr.add_argument("--format", choices=["text", "json"], default=None)

    pm = sub.add_parser("mckay", help="McKay graphs")
    pm.add_argument("action", choices=["graph"])
    pm.add_argument("group")
    pm.add_argument("--dot", action="store_true")

    ps = sub.add_parser("sgraph", help="labeled graphs on flat connections")
    ps.add_argument("group")
    ps.add_argument("--dot", action="store_true")
    ps.add_argument("--json", action="store_true")

    pd = sub.add_parser("dci", help="model multicomplex windows")
    pd.add_argument("group")
    pd.add_argument("--orientation", choices=[BAR, STD], default=None)
    pd.add_argument("--window", default=None, help="q:p filtration levels")
    pd.add_argument("--degrees", default=None, help="lo:hi total degrees")
    pd.add_argument("--format", choices=["text", "json"], default=None)
    pd.add_argument("--coeff", default=None)

    pf = sub.add_parser("floer", help="assembled equivariant homology modules")
    pf.add_argument("group")
    pf.add_argument("--orientation", choices=[BAR, STD], default=None)
    pf.add_argument("--flavor", choices=list(FLAVORS), default=None)
    pf.add_argument("--coeff", default=None)
    pf.add_argument("--window", default=None)
    pf.add_argument("--degrees", default=None)
    pf.add_argument("--format", choices=["text", "json"], default=None)

    pw = sub.add_parser("floer-raw", help="window homology and accounting reports")
    pw.add_argument("group")
    pw.add_argument("--orientation", choices=[BAR, STD], default=None)
    pw.add_argument("--flavor", choices=list(FLAVORS), default=None)
    pw.add_argument("--window", default=None)
    pw.add_argument("--degrees", default=None)
    pw.add_argument("--coeff", default=None)
    pw.add_argument("--format", choices=["text", "json"], default=None)

    pc = sub.add_parser("cs", help="Chern-Simons invariants of flat connections")
    pc.add_argument("group")
    pc.add_argument("--orientation", choices=[STD, BAR], default=None)
    pc.add_argument("--format", choices=["text", "json"], default=None)

    pv = sub.add_parser("verify", help="run the end-to-end verification pipeline")
    pv.add_argument("--groups", default=None, help="comma list, e.g. T*,C_4,D*_5")
    pv.add_argument("--coeff", default=None)
    pv.add_argument("--jobs", type=int, default=None)
    pv.add_argument("--format", choices=["text", "json"], default=None)
    pv.add_argument("--quick", action="store_true", help="smaller windows")
    return p


def _merged(args, cfg, key, fallback):
    val = getattr(args, key, None)
    if val is not None:
        return val
    if key in cfg:
        return cfg[key]
    return fallback


def _window_from(args, cfg):
    q, p = _parse_pair(_merged(args, cfg, "window", "-24:24"))
    lo, hi = _parse_pair(_merged(args, cfg, "degrees", "-24:24"))
    return Window(q, p, lo, hi)


def cmd_groups(args, cfg):
    rows = [(str(g), g.order, str(g.abelianization())) for g in DEFAULT_GROUPS]
    print("group  order  abelianization (invariant factors)")
    for name, order, ab in rows:
        print("%-6s %5d  %s" % (name, order, ab))
    print("(cyclic and binary dihedral families accept any parameter)")
    return 0


def cmd_repr(args, cfg):
    g = parse_group(args.group)
    fmt = _merged(args, cfg, "format", "text")
    print(serialize.table_json(g) if fmt == "json" else serialize.table_text(g))
    return 0


def cmd_mckay(args, cfg):
    g = parse_group(args.group)
    print(serialize.mckay_dot(g) if args.dot else serialize.mckay_text(g))
    return 0


def cmd_sgraph(args, cfg):
    g = parse_group(args.group)
    if args.dot:
        print(serialize.sgraph_dot(g))
    elif args.json:
        print(serialize.sgraph_json(g))
    else:
        print(serialize.sgraph_text(g))
    return 0


def cmd_dci(args, cfg):
    g = parse_group(args.group)
    orientation = _merged(args, cfg, "orientation", BAR)
    field = parse_field(_merged(args, cfg, "coeff", "q"))
    win = _window_from(args, cfg)
    model = build_model(g, orientation)
    fmt = _merged(args, cfg, "format", "text")
    out = serialize.dci_json(model, win, field) if fmt == "json" else serialize.dci_text(model, win, field)
    print(out)
    return 0


def cmd_floer(args, cfg):
    g = parse_group(args.group)
    orientation = _merged(args, cfg, "orientation", BAR)
    flavor = FLAVORS[_merged(args, cfg, "flavor", "-")]
    field = parse_field(_merged(args, cfg, "coeff", "q"))
    win = _window_from(args, cfg)
    model = build_model(g, orientation)
    asm = assemble(model, flavor, field)
    enc = encoded_module(g, orientation, _merged(args, cfg, "flavor", "-"))
    bar_pages = MinusPages(build_model(g, BAR), field)
    margin = max(4, 4 * bar_pages.r_last + 4)
    if orientation == STD and flavor == PLUS:
        pages, degen = None, None  # assembled through duality, no page run
    else:
        pages, degen = run_to_einfty(model, flavor, field)
        if pages is None and flavor == MINUS and orientation == BAR:
            pages = bar_pages
    rep = compare_windows(ModuleWindow(asm, win, field), ModuleWindow(enc, win, field),
                          win, 4, margin, 6)
    fmt = _merged(args, cfg, "format", "text")
    if fmt == "json":
        print(serialize.presented_json(asm, "assembled %s %s %s" % (g, orientation, flavor)))
        print(serialize.report_json(
            [("assembly-vs-closed-form", str(g), "PASS" if rep.ok else "FAIL",
              "%d degrees" % len(rep.checked_degrees))],
            {"group": str(g), "orientation": orientation, "flavor": flavor,
             "coeff": field.name}, 0.0))
    else:
        print("assembled module for %s (%s orientation, flavor %s over %s):"
              % (g, orientation, flavor, field.name))
        for f in asm.families:
            kind = "Laurent tower" if f.floor is None else (
                "class" if f.top == 0 else "tower")
            print("  %-28s degree %3d  column %d  (%s, step %d)"
                  % (f.label, f.base_degree, f.column, kind, f.step))
        if pages is not None:
            print("stable page table (columns 0 and 4):")
            for col in (0, 4):
                surv = pages.surviving_h(col)
                print("  column %d: t=3 survivors %d" % (col, surv))
                for r in range(1, pages.r_last + 3):
                    ker = pages.kernel_space(col, r)
                    labels = [pages.gen_label(col, r, v) for v in ker]
                    print("    t=%-4d dim %d  %s" % (-4 * (r - 1), len(ker), labels))
        if degen is None:
            print("assembled through the duality with the other orientation")
        else:
            print("degeneration page: %d" % degen)
        print("comparison with the closed form: %s (%d safe degrees)"
              % ("PASS" if rep.ok else "FAIL", len(rep.checked_degrees)))
        for m in rep.mismatches[:10]:
            print("  mismatch:", m)
    return 0 if rep.ok else 1


def cmd_floer_raw(args, cfg):
    g = parse_group(args.group)
    orientation = _merged(args, cfg, "orientation", BAR)
    flavor_key = _merged(args, cfg, "flavor", "-")
    flavor = FLAVORS[flavor_key]
    field = parse_field(_merged(args, cfg, "coeff", "q"))
    win = _window_from(args, cfg)
    model = build_model(g, orientation)
    src = Window(win.q, win.p, win.q + 1, win.p + 3)
    w = model.window(src, field)
    fm = functor_model(w, flavor, win.n_lo, win.n_hi)
    h = fm.homology()
    dims = {n: h.dim(n) for n in fm.complex.degrees() if h.dim(n)}
    uranks = {}
    from .equivariant import exact_triangle_check
    from .presented import HomologyWindow

    hw = HomologyWindow(h, fm.u)
    for n in sorted(dims):
        r = hw.u_power_rank(1, n)
        if r is not None:
            uranks[n] = r
    triangle = exact_triangle_check(w, win.n_lo, win.n_hi)
    fmt = _merged(args, cfg, "format", "text")
    if fmt == "json":
        print(serialize.to_json({
            "group": str(g), "orientation": orientation, "flavor": flavor_key,
            "coeff": field.name,
            "window": {"q": win.q, "p": win.p, "n_lo": win.n_lo, "n_hi": win.n_hi},
            "homology_dims": {str(k): v for k, v in sorted(dims.items())},
            "u_ranks": {str(k): v for k, v in sorted(uranks.items())},
            "triangle_report": {
                "checked_degrees": triangle["checked"],
                "boundary_flagged": triangle["flagged_boundary"],
            },
        }))
    else:
        print("window homology of %s (%s, flavor %s, %s):" % (g, orientation, flavor_key, field.name))
        for n in sorted(dims):
            extra = "  rank U = %d" % uranks[n] if n in uranks else ""
            print("  H_%-4d dim %d%s" % (n, dims[n], extra))
        print("cone triangle verified on interior degrees %s (boundary flagged: %s)"
              % (triangle["checked"], triangle["flagged_boundary"] or "none"))
    return 0


def cmd_cs(args, cfg):
    g = parse_group(args.group)
    orientation = _merged(args, cfg, "orientation", STD)
    rows = cs_table(g, orientation)
    fmt = _merged(args, cfg, "format", "text")
    if fmt == "json":
        print(serialize.to_json({
            "group": str(g), "orientation": orientation,
            "flat_connections": [
                {"name": n, "cs": str(v), "c2": str(c)} for n, v, c in rows
            ],
        }))
    else:
        print("flat connections over %s (%s orientation):" % (g, orientation))
        for n, v, c in rows:
            print("  %-10s cs = %-8s c2 = %s" % (n, v, c))
    return 0


# ---------------------------------------------------------------------------
# verify pipeline


def _verify_group(g: GroupId, field, quick):
    """All per-group checks; returns a list of (check, target, status, detail)."""
    checks = []
    name = str(g)

    def run(tag, fn, detail=""):
        try:
            extra = fn()
            checks.append((tag, name, "PASS", extra if isinstance(extra, str) else detail))
        except Exception as e:  # noqa: BLE001 - report, do not crash the pipeline
            checks.append((tag, name, "FAIL", "%s" % e))

    run("character-table-orthogonality", lambda: (verify_orthogonality(g), "")[1])

    def sgraph_check():
        ok, msg = s_graph_matches_expected(g)
        if not ok:
            raise BPFloerError(msg)
        return "vertices+labels+gradings"
    run("sgraph-structure", sgraph_check)

    if name in ("T*", "O*", "I*"):
        def toi():
            ok, msg = toi_multicomplex_matches(g)
            if not ok:
                raise BPFloerError(msg)
            return "ranks+arrows"
        run("model-multicomplex-figures", toi)

    size = 8 if quick else 12
    win = Window(-size - 1, size - 1, -size, size)

    def oracle():
        model = build_model(g, BAR)
        w = model.window(Window(win.q, win.p, win.q + 1, win.p + 3), field)
        for flavor in (PLUS, MINUS):
            bar, fmodel, _ = bar_oracle(w, flavor, win.n_lo, win.n_hi)
            hb = HomologyData(bar.complex)
            hm = fmodel.homology()
            for n in fmodel.complex.degrees():
                if hb.dim(n) != hm.dim(n):
                    raise BPFloerError("bar homology differs in degree %d" % n)
        return "both flavors"
    run("bar-construction-oracle", oracle)

    def accounting():
        w = Window(-5, 5, -8, 8) if quick else Window(-9, 7, -10, 10)
        ss_accounting(g, BAR, MINUS, w, field)
        ss_accounting(g, STD, PLUS, w, field)
        return "pages vs direct homology"
    run("spectral-sequence-accounting", accounting)

    def assembly():
        cmp_win = Window(-24, 24, -24, 24)
        pages = MinusPages(build_model(g, BAR), field)
        margin = max(4, 4 * pages.r_last + 4)
        for orientation in (BAR, STD):
            model = build_model(g, orientation)
            for flavor_key in ("-", "+", "inf"):
                asm = assemble(model, FLAVORS[flavor_key], field)
                enc = encoded_module(g, orientation, flavor_key)
                rep = compare_windows(
                    ModuleWindow(asm, cmp_win, field),
                    ModuleWindow(enc, cmp_win, field), cmp_win, 4, margin, 6)
                if not rep.ok:
                    raise BPFloerError("%s %s: %r" % (orientation, flavor_key, rep.mismatches[:3]))
        return "all flavors, both orientations"
    run("assembly-vs-closed-form", assembly)

    def triangle():
        norm_vanishing_and_splitting(g, None if quick else Window(-17, 15, -16, 16), field)
        return "norm zero + splitting dims"
    run("triangle-and-norm", triangle)

    run("cs-golden-values", lambda: (
        _check_cs(g), "Q-vertex and path independence")[1])

    def duality():
        rep = duality_pairing_report(g, field)
        if rep:
            raise BPFloerError(repr(rep[:3]))
        mism = duality_transpose_check(g, Window(-13, 11, -12, 12), field)
        if mism:
            raise BPFloerError(repr(mism[:3]))
        return "module pairing + transposed windows"
    run("orientation-duality", duality)
    return checks


def _check_cs(g):
    from .cs import chern_simons
    from fractions import Fraction

    v = chern_simons(g, q_vertex(g))
    want = Fraction(g.order - 1, g.order) if g.order > 1 else Fraction(0)
    if v.value != want:
        raise BPFloerError("cs(Q-vertex) = %s, wanted %s" % (v, want))


def cmd_verify(args, cfg):
    field = parse_field(_merged(args, cfg, "coeff", "q"))
    names = _merged(args, cfg, "groups", None)
    if names:
        groups = [parse_group(x) for x in names.split(",")]
    else:
        groups = list(DEFAULT_GROUPS)
    jobs = int(_merged(args, cfg, "jobs", 1))
    quick = bool(getattr(args, "quick", False)) or cfg.get("quick") == "true"
    t0 = time.time()
    all_checks = []
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            for chunk in ex.map(lambda g: _verify_group(g, field, quick), groups):
                all_checks.extend(chunk)
    else:
        for g in groups:
            all_checks.extend(_verify_group(g, field, quick))
    all_checks.sort(key=lambda c: (c[1], c[0]))
    elapsed = time.time() - t0
    fmt = _merged(args, cfg, "format", "text")
    ok = all(c[2] == "PASS" for c in all_checks)
    if fmt == "json":
        print(serialize.report_json(all_checks, {
            "groups": ",".join(str(g) for g in groups),
            "coeff": field.name, "jobs": jobs, "quick": quick}, elapsed))
    else:
        for tag, target, status, detail in all_checks:
            print("%-34s %-6s %s %s" % (tag, target, status, detail))
        print("verify: %s in %.1fs (%d checks)" % ("PASS" if ok else "FAIL", elapsed, len(all_checks)))
    return 0 if ok else 1


COMMANDS = {
    "groups": cmd_groups,
    "repr": cmd_repr,
    "mckay": cmd_mckay,
    "sgraph": cmd_sgraph,
    "dci": cmd_dci,
    "floer": cmd_floer,
    "floer-raw": cmd_floer_raw,
    "cs": cmd_cs,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    cfg = {}
    if args.config:
        try:
            cfg = load_config(args.config)
        except (OSError, BPFloerError) as e:
            print("config error: %s" % e, file=sys.stderr)
            return 2
    coeff = cfg.get("coeff") or getattr(args, "coeff", None)
    if coeff:
        try:
            parse_field(coeff)
        except BPFloerError as e:
            print("usage error: %s" % e, file=sys.stderr)
            return 2
    try:
        return COMMANDS[args.command](args, cfg)
    except BPFloerError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
