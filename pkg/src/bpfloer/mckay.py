"""McKay graphs, quotient graphs, the labeled graphs on flat connections,
and the representation-ring equation solver.

The edge labels are computed algebraically (exact linear solve of the
representation-ring equation plus regular-representation normalization); the
graphical deletion procedure is implemented separately as a cross-check
oracle on adjacent pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BPFloerError, GraphShapeError, LabelMismatch, NotDynkin, Unsolvable
from .groups import (
    CYCLIC,
    IRREDUCIBLE,
    REDUCIBLE,
    GroupId,
    binary_dihedral,
    character_table,
    cyclic,
    q_tensor_matrix,
    quaternionic_reps,
    GroupId as _G,
)
from .groups import ICOSA, OCTA, TETRA


class VirtualRep:
    """An integer vector over the irreducible characters of a fixed group."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: GroupId, coeffs):
        self.group = group
        self.coeffs = tuple(int(c) for c in coeffs)
        if len(self.coeffs) != len(character_table(group).irreps):
            raise BPFloerError("coefficient count mismatch for %s" % group)

    @classmethod
    def zero(cls, group):
        return cls(group, [0] * len(character_table(group).irreps))

    @classmethod
    def of_quat(cls, group, quat):
        vec = [0] * len(character_table(group).irreps)
        for i, m in quat.components:
            vec[i] += m
        return cls(group, vec)

    @classmethod
    def regular(cls, group):
        return cls(group, [ir.dim for ir in character_table(group).irreps])

    def __add__(self, other):
        return VirtualRep(self.group, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        return VirtualRep(self.group, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, k):
        return VirtualRep(self.group, [k * a for a in self.coeffs])

    def epsilon(self):
        """Augmentation: total complex dimension."""
        dims = [ir.dim for ir in character_table(self.group).irreps]
        return sum(a * d for a, d in zip(self.coeffs, dims))

    def is_actual(self):
        return all(a >= 0 for a in self.coeffs)

    def is_zero(self):
        return all(a == 0 for a in self.coeffs)

    def mult_by_two_minus_q(self):
        """Multiplication by (2 - Q) in the representation ring."""
        a = q_tensor_matrix(self.group)
        n = len(self.coeffs)
        out = [2 * self.coeffs[j] for j in range(n)]
        for i, c in enumerate(self.coeffs):
            if c:
                for j in range(n):
                    out[j] -= c * a[i][j]
        return VirtualRep(self.group, out)

    def __eq__(self, other):
        return isinstance(other, VirtualRep) and other.group == self.group and other.coeffs == self.coeffs

    def __hash__(self):
        return hash((self.group, self.coeffs))

    def __repr__(self):
        names = [ir.name for ir in character_table(self.group).irreps]
        terms = ["%d*%s" % (c, n) for c, n in zip(self.coeffs, names) if c]
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class McKayGraph:
    group: GroupId
    adjacency: tuple          # tuple of tuples, multiplicities
    dims: tuple
    trivial: int
    dynkin_type: str          # "A~0", "A~1", "A~n", "D~n", "E~6", "E~7", "E~8"

    def neighbors(self, i):
        return [j for j, a in enumerate(self.adjacency[i]) if a]


@lru_cache(maxsize=None)
def mckay_graph(g: GroupId) -> McKayGraph:
    t = character_table(g)
    a = q_tensor_matrix(g)
    n = len(t.irreps)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise GraphShapeError("McKay matrix not symmetric for %s" % g)
    dims = tuple(ir.dim for ir in t.irreps)
    # the dims vector spans the kernel of 2I - A (the extended Dynkin marks)
    for j in range(n):
        if sum(a[i][j] * dims[i] for i in range(n)) != 2 * dims[j]:
            raise GraphShapeError("mark property fails for %s" % g)
    if g.family == CYCLIC and g.param <= 2:
        # degenerate affine A_0 (loop) and A_1 (double bond) cases
        tag = "A~0" if g.param == 1 else "A~1"
        return McKayGraph(g, a, dims, 0, tag)
    for i in range(n):
        if a[i][i] != 0:
            raise GraphShapeError("self-adjacency in the McKay graph of %s" % g)
        for j in range(n):
            if a[i][j] not in (0, 1):
                raise GraphShapeError("multiplicity %d edge in %s" % (a[i][j], g))
    if g.family == CYCLIC:
        want = "A~%d" % (g.param - 1)
    elif g.family == "D":
        want = "D~%d" % (g.param + 2)
    else:
        want = {TETRA: "E~6", OCTA: "E~7", ICOSA: "E~8"}[g.family]
    degs = sorted(sum(1 for x in row if x) for row in a)
    if g.family == CYCLIC:
        ok = all(d == 2 for d in degs)
    elif g.family == "D":
        ok = degs.count(1) == 4 and degs.count(3) == 2 and degs.count(2) == len(degs) - 6
        if g.param == 2:
            ok = degs == [1, 1, 1, 1, 4]
    else:
        ok = degs.count(3) == 1 and degs.count(1) == 3
    if not ok:
        raise GraphShapeError("graph of %s does not have the %s shape" % (g, want))
    return McKayGraph(g, a, dims, 0, want)


@dataclass(frozen=True)
class QuotientGraph:
    """Vertices are dual-involution orbits of McKay vertices."""

    group: GroupId
    orbits: tuple             # tuple of sorted tuples of irreducible indices
    adjacency: tuple          # 0/1 matrix on orbits
    loops: tuple              # orbit indices carrying a self-loop

    def orbit_of(self, irr_index):
        for k, orb in enumerate(self.orbits):
            if irr_index in orb:
                return k
        raise BPFloerError("index %d not found" % irr_index)


def quotient_graph(m: McKayGraph, iota) -> QuotientGraph:
    n = len(m.dims)
    seen = set()
    orbits = []
    for i in range(n):
        if i in seen:
            continue
        orb = tuple(sorted({i, iota[i]}))
        seen.update(orb)
        orbits.append(orb)
    orbits = tuple(orbits)
    idx = {}
    for k, orb in enumerate(orbits):
        for i in orb:
            idx[i] = k
    size = len(orbits)
    adj = [[0] * size for _ in range(size)]
    loops = set()
    for i in range(n):
        for j in range(n):
            if m.adjacency[i][j]:
                a, b = idx[i], idx[j]
                if a == b:
                    loops.add(a)
                else:
                    adj[a][b] = adj[b][a] = 1
    return QuotientGraph(m.group, orbits, tuple(tuple(r) for r in adj), tuple(sorted(loops)))


def solve_rep_equation(g: GroupId, alpha: VirtualRep, beta: VirtualRep) -> VirtualRep:
    """Minimal positive solution of (2 - Q) H = alpha - beta.

    Solved exactly on the matrix 2I - A, then normalized by subtracting the
    largest multiple of the regular representation preserving nonnegativity.
    """
    rhs = (alpha - beta).coeffs
    a = q_tensor_matrix(g)
    n = len(rhs)
    # dense fraction solve; the kernel is spanned by the dimension vector
    rows = [[Fraction(2 if i == j else 0) - a[j][i] for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    pivots = []
    lead = 0
    for j in range(n):
        piv = None
        for i in range(lead, n):
            if rows[i][j] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[lead], rows[piv] = rows[piv], rows[lead]
        inv = 1 / rows[lead][j]
        rows[lead] = [v * inv for v in rows[lead]]
        for i in range(n):
            if i != lead and rows[i][j] != 0:
                c = rows[i][j]
                rows[i] = [u - c * v for u, v in zip(rows[i], rows[lead])]
        pivots.append((lead, j))
        lead += 1
    for i in range(lead, n):
        if rows[i][n] != 0:
            raise Unsolvable("no solution of the representation-ring equation")
    h = [Fraction(0)] * n
    for i, j in pivots:
        h[j] = rows[i][n]
    dims = [ir.dim for ir in character_table(g).irreps]
    # integral representative: adjust by t * dims; dims[0] = 1 pins t mod 1
    t = -h[0]
    cand = [hi + t * d for hi, d in zip(h, dims)]
    if any(c.denominator != 1 for c in cand):
        raise Unsolvable("no integral solution of the representation-ring equation")
    ints = [int(c) for c in cand]
    k = max(-(v // d) for v, d in zip(ints, dims))
    out = VirtualRep(g, [v + k * d for v, d in zip(ints, dims)])
    if not out.is_actual():
        raise Unsolvable("normalization failed to reach a nonnegative solution")
    if out.mult_by_two_minus_q() != alpha - beta:
        raise Unsolvable("verification of (2-Q)H failed")
    return out


def recognize_subgroup(vertices, adjacency):
    """Classify a connected simply-laced Dynkin graph; returns (GroupId, order).

    A_n -> C_{n+1}, D_n -> D*_{n-2}, E6/E7/E8 -> T*/O*/I*.
    """
    n = len(vertices)
    if n == 0:
        raise NotDynkin("empty component")
    deg = {v: sum(1 for w in vertices if adjacency(v, w)) for v in vertices}
    branch = [v for v in vertices if deg[v] >= 3]
    if any(deg[v] > 3 for v in vertices):
        raise NotDynkin("vertex of degree > 3")
    if not branch:
        ends = [v for v in vertices if deg[v] <= 1]
        if n == 1:
            g = cyclic(2)
            return g, g.order
        if len(ends) != 2:
            raise NotDynkin("cycle is not a Dynkin graph")
        g = cyclic(n + 1)
        return g, g.order
    if len(branch) != 1:
        raise NotDynkin("more than one branch vertex")
    b = branch[0]
    # walk the three arms
    arms = []
    for w in vertices:
        if not adjacency(b, w):
            continue
        length = 1
        prev, cur = b, w
        while True:
            nxt = [u for u in vertices if adjacency(cur, u) and u != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                raise NotDynkin("nested branching")
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if len(arms) != 3 or 1 + sum(arms) != n:
        raise NotDynkin("arm structure does not cover the component")
    if arms[0] == arms[1] == 1:
        g = binary_dihedral(n - 2)
        return g, g.order
    if arms == [1, 2, 2]:
        return _G(TETRA), 24
    if arms == [1, 2, 3]:
        return _G(OCTA), 48
    if arms == [1, 2, 4]:
        return _G(ICOSA), 120
    raise NotDynkin("arms %r are not of ADE type" % (arms,))


def minimal_solution_graphical(g: GroupId, alpha, beta):
    """Deletion-procedure oracle for adjacent pairs; returns (H, subgroup, order).

    Deletes beta's vertex or vertices from the McKay graph, restricts to the
    component containing alpha, and solves the Cartan system there.
    """
    m = mckay_graph(g)
    beta_vs = {i for i, c in enumerate(beta.coeffs) if c}
    alpha_vs = {i for i, c in enumerate(alpha.coeffs) if c}
    keep = [i for i in range(len(m.dims)) if i not in beta_vs]

    def adj(i, j):
        return m.adjacency[i][j] != 0

    # component containing alpha
    comp = set()
    stack = [v for v in alpha_vs if v in keep]
    if not stack:
        raise BPFloerError("alpha deleted entirely; pair is not adjacent")
    while stack:
        v = stack.pop()
        if v in comp:
            continue
        comp.add(v)
        stack.extend(w for w in keep if adj(v, w) and w not in comp)
    comp = sorted(comp)
    sub, order = recognize_subgroup(comp, adj)
    # Cartan solve on the component: (2I - A) h = alpha restricted
    k = len(comp)
    pos = {v: i for i, v in enumerate(comp)}
    rows = []
    for v in comp:
        row = [Fraction(0)] * (k + 1)
        row[pos[v]] = Fraction(2)
        for w in comp:
            if adj(v, w):
                row[pos[w]] -= 1
        row[k] = Fraction(alpha.coeffs[v])
        rows.append(row)
    # dense solve (Cartan matrices are invertible)
    for j in range(k):
        piv = next(i for i in range(j, k) if rows[i][j] != 0)
        rows[j], rows[piv] = rows[piv], rows[j]
        inv = 1 / rows[j][j]
        rows[j] = [v * inv for v in rows[j]]
        for i in range(k):
            if i != j and rows[i][j] != 0:
                c = rows[i][j]
                rows[i] = [u - c * v for u, v in zip(rows[i], rows[j])]
    coeffs = [0] * len(m.dims)
    for v in comp:
        val = rows[pos[v]][k]
        if val.denominator != 1 or val <= 0:
            raise Unsolvable("graphical solve produced a bad weight %s" % val)
        coeffs[v] = int(val)
    return VirtualRep(g, coeffs), sub, order


@dataclass(frozen=True)
class SVertex:
    name: str
    kind: str
    j: int          # grading for the reversed orientation, mod 8 (0 or 4)
    i: int          # grading for the standard orientation, mod 8


class SGraph:
    """The labeled graph on 1-dimensional quaternionic representations."""

    def __init__(self, group, vertices, edges, labels):
        self.group = group
        self.vertices = tuple(vertices)          # SVertex, theta first
        self.edges = tuple(edges)                # (name, name) pairs
        self.labels = dict(labels)               # (irr name, other name) -> int
        self._by_name = {v.name: v for v in self.vertices}

    def vertex(self, name):
        return self._by_name[name]

    def neighbors(self, name):
        out = []
        for a, b in self.edges:
            if a == name:
                out.append(b)
            elif b == name:
                out.append(a)
        return out

    def label(self, target, source):
        """n_{target,source}: coefficient of the differential into target."""
        return self.labels.get((target, source), 0)

    def adjacent(self, a, b):
        return (a, b) in self.edges or (b, a) in self.edges

    def path(self, a, b):
        """Unique simple path between two vertices (the graph is a tree)."""
        parent = {a: None}
        queue = [a]
        while queue:
            v = queue.pop(0)
            if v == b:
                break
            for w in self.neighbors(v):
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if b not in parent:
            raise BPFloerError("no path from %s to %s" % (a, b))
        path = [b]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return list(reversed(path))

    def irreducibles(self):
        return [v.name for v in self.vertices if v.kind == IRREDUCIBLE]


def _grade_i(kind, j):
    if kind == IRREDUCIBLE:
        return (j - 3) % 8
    if kind == REDUCIBLE:
        return (j - 2) % 8
    return j % 8


@lru_cache(maxsize=None)
def s_graph(g: GroupId) -> SGraph:
    table = character_table(g)
    quats = quaternionic_reps(g)
    by_name = {q.name: q for q in quats}
    edges = []
    if g.family == CYCLIC:
        # authoritative chain; the odd-l quotient graph has a loop at the end
        chain = [q.name for q in quats]
        edges = list(zip(chain, chain[1:]))
    else:
        m = mckay_graph(g)
        quo = quotient_graph(m, table.iota)
        # orbit index of each quaternionic rep
        loc = {}
        for q in quats:
            verts = sorted({i for i, _ in q.components})
            loc[q.name] = quo.orbit_of(verts[0])
        quat_orbits = set(loc.values())

        def tree_path(a, b):
            parent = {a: None}
            queue = [a]
            while queue:
                v = queue.pop(0)
                if v == b:
                    break
                for w in range(len(quo.orbits)):
                    if quo.adjacency[v][w] and w not in parent:
                        parent[w] = v
                        queue.append(w)
            path = [b]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            return list(reversed(path))

        names = [q.name for q in quats]
        for x in range(len(names)):
            for y in range(x + 1, len(names)):
                p = tree_path(loc[names[x]], loc[names[y]])
                if all(v not in quat_orbits for v in p[1:-1]):
                    edges.append((names[x], names[y]))
    # gradings from tree distance to theta
    dist = {"theta": 0}
    queue = ["theta"]
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    while queue:
        v = queue.pop(0)
        for w in adj.get(v, []):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    vertices = []
    for q in quats:
        j = (4 * dist[q.name]) % 8
        vertices.append(SVertex(q.name, q.kind, j, _grade_i(q.kind, j)))
    # labels on edges with an irreducible endpoint
    labels = {}
    for a, b in edges:
        for tgt, src in ((a, b), (b, a)):
            if by_name[tgt].kind != IRREDUCIBLE:
                continue
            va = VirtualRep.of_quat(g, by_name[src])
            vb = VirtualRep.of_quat(g, by_name[tgt])
            h = solve_rep_equation(g, va, vb)
            _, sub, order = minimal_solution_graphical(g, va, vb)
            num = 2 * h.epsilon()
            if num % order != 0:
                raise LabelMismatch("label 2*%d/%d is not integral" % (h.epsilon(), order))
            labels[(tgt, src)] = num // order
    return SGraph(g, vertices, edges, labels)


def expected_s_graph_data(g: GroupId):
    """The closed-form labeled graphs, encoded family by family.

    Returns (edges, labels, gradings j) in the same naming scheme as s_graph;
    used as golden data by the verification layer.
    """
    fam = g.family
    edges, labels, dist = [], {}, {}
    if fam == CYCLIC:
        l = g.param
        if l == 1:
            chain = ["theta"]
        elif l % 2 == 0:
            chain = ["theta"] + ["lambda%d" % k for k in range(1, l // 2)] + (
                ["eta"] if l >= 2 else []
            )
        else:
            chain = ["theta"] + ["lambda%d" % k for k in range(1, (l - 1) // 2 + 1)]
        edges = list(zip(chain, chain[1:]))
        dist = {v: k for k, v in enumerate(chain)}
    elif fam == "D":
        n = g.param
        m = n // 2
        if n % 2 == 0:
            chain = ["alpha%d" % k for k in range(1, m + 1)]
            edges = [("theta", "alpha1"), ("eta1", "alpha1")]
            edges += list(zip(chain, chain[1:]))
            edges += [("alpha%d" % m, "eta2"), ("alpha%d" % m, "eta3")]
            labels = {("alpha1", "theta"): 1, ("alpha1", "eta1"): 1}
            for k in range(1, m):
                labels[("alpha%d" % k, "alpha%d" % (k + 1))] = 2
                labels[("alpha%d" % (k + 1), "alpha%d" % k)] = 2
            labels[("alpha%d" % m, "eta2")] = 1
            labels[("alpha%d" % m, "eta3")] = 1
            dist = {"theta": 0, "eta1": 0}
            for k in range(1, m + 1):
                dist["alpha%d" % k] = k
            dist["eta2"] = dist["eta3"] = m + 1
        else:
            m = (n - 1) // 2
            chain = ["alpha%d" % k for k in range(1, m + 1)]
            edges = [("theta", "alpha1"), ("eta", "alpha1")]
            edges += list(zip(chain, chain[1:]))
            edges += [("alpha%d" % m, "lambda")]
            labels = {("alpha1", "theta"): 1, ("alpha1", "eta"): 1}
            for k in range(1, m):
                labels[("alpha%d" % k, "alpha%d" % (k + 1))] = 2
                labels[("alpha%d" % (k + 1), "alpha%d" % k)] = 2
            labels[("alpha%d" % m, "lambda")] = 2
            dist = {"theta": 0, "eta": 0}
            for k in range(1, m + 1):
                dist["alpha%d" % k] = k
            dist["lambda"] = m + 1
    elif fam == TETRA:
        edges = [("theta", "alpha"), ("alpha", "lambda")]
        labels = {("alpha", "theta"): 1, ("alpha", "lambda"): 3}
        dist = {"theta": 0, "alpha": 1, "lambda": 2}
    elif fam == OCTA:
        edges = [("theta", "alpha"), ("alpha", "beta"), ("beta", "eta")]
        labels = {
            ("alpha", "theta"): 1,
            ("alpha", "beta"): 3,
            ("beta", "alpha"): 3,
            ("beta", "eta"): 1,
        }
        dist = {"theta": 0, "alpha": 1, "beta": 2, "eta": 3}
    else:
        edges = [("theta", "alpha"), ("alpha", "beta")]
        labels = {("alpha", "theta"): 1, ("alpha", "beta"): 3, ("beta", "alpha"): 4}
        dist = {"theta": 0, "alpha": 1, "beta": 2}
    gradings = {v: (4 * d) % 8 for v, d in dist.items()}
    return edges, labels, gradings


def s_graph_matches_expected(g: GroupId):
    """Exact comparison of the computed labeled graph with the closed form."""
    sg = s_graph(g)
    edges, labels, gradings = expected_s_graph_data(g)
    norm = lambda es: {tuple(sorted(e)) for e in es}
    if norm(sg.edges) != norm(edges):
        return False, "edge sets differ"
    if dict(sg.labels) != labels:
        diff = set(sg.labels.items()) ^ set(labels.items())
        return False, "labels differ: %r" % (sorted(diff),)
    for v in sg.vertices:
        if gradings[v.name] != v.j:
            return False, "grading of %s differs" % v.name
    return True, "ok"
