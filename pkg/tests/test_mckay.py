"""McKay graphs, the equation solver, labels and gradings."""
import random

import pytest

from bpfloer.errors import NotDynkin, Unsolvable
from bpfloer.groups import (
    I_STAR,
    O_STAR,
    T_STAR,
    binary_dihedral,
    character_table,
    cyclic,
    quaternionic_reps,
)
from bpfloer.mckay import (
    VirtualRep,
    expected_s_graph_data,
    mckay_graph,
    minimal_solution_graphical,
    quotient_graph,
    recognize_subgroup,
    s_graph,
    s_graph_matches_expected,
    solve_rep_equation,
)

ACCEPT_GROUPS = (
    [cyclic(k) for k in range(2, 13)]
    + [binary_dihedral(k) for k in range(2, 13)]
    + [T_STAR, O_STAR, I_STAR]
)


def quat_vec(g, name):
    qs = {q.name: q for q in quaternionic_reps(g)}
    return VirtualRep.of_quat(g, qs[name])


def test_mckay_shapes():
    assert mckay_graph(O_STAR).dynkin_type == "E~7"
    assert sorted(mckay_graph(O_STAR).dims) == [1, 1, 2, 2, 2, 3, 3, 4]
    assert mckay_graph(cyclic(3)).dynkin_type == "A~2"
    m = mckay_graph(cyclic(3))
    assert all(sum(row) == 2 for row in m.adjacency)  # a 3-cycle
    assert mckay_graph(binary_dihedral(2)).dynkin_type == "D~4"
    assert mckay_graph(T_STAR).dynkin_type == "E~6"
    assert mckay_graph(I_STAR).dynkin_type == "E~8"


def test_mckay_marks_are_dims():
    for g in (T_STAR, O_STAR, I_STAR, binary_dihedral(5), cyclic(7)):
        m = mckay_graph(g)
        n = len(m.dims)
        for j in range(n):
            assert sum(m.adjacency[i][j] * m.dims[i] for i in range(n)) == 2 * m.dims[j]


def test_quotient_graphs():
    # five-orbit chain for the tetrahedral case
    m = mckay_graph(T_STAR)
    quo = quotient_graph(m, character_table(T_STAR).iota)
    assert len(quo.orbits) == 5
    degs = sorted(sum(row) for row in quo.adjacency)
    assert degs == [1, 1, 2, 2, 2] and not quo.loops
    # even cyclic: chain theta -- lambda1 -- eta
    m = mckay_graph(cyclic(4))
    quo = quotient_graph(m, character_table(cyclic(4)).iota)
    assert len(quo.orbits) == 3 and not quo.loops
    # odd cyclic: loop at the far end
    m = mckay_graph(cyclic(5))
    quo = quotient_graph(m, character_table(cyclic(5)).iota)
    assert len(quo.orbits) == 3 and len(quo.loops) == 1
    # icosahedral: the involution is the identity
    m = mckay_graph(I_STAR)
    quo = quotient_graph(m, character_table(I_STAR).iota)
    assert len(quo.orbits) == 9


def test_solver_trivial_and_examples():
    g = O_STAR
    alpha = quat_vec(g, "alpha")
    assert solve_rep_equation(g, alpha, alpha).is_zero()
    h = solve_rep_equation(g, quat_vec(g, "eta"), quat_vec(g, "beta"))
    names = [ir.name for ir in character_table(g).irreps]
    assert h.coeffs[names.index("rho2")] == 1 and h.epsilon() == 1
    h2 = solve_rep_equation(g, quat_vec(g, "beta"), quat_vec(g, "alpha"))
    assert h2.epsilon() == 24


@pytest.mark.parametrize("g", ACCEPT_GROUPS, ids=str)
def test_solver_exactness_all_pairs(g):
    qs = quaternionic_reps(g)
    for a in qs:
        for b in qs:
            va, vb = VirtualRep.of_quat(g, a), VirtualRep.of_quat(g, b)
            h = solve_rep_equation(g, va, vb)
            assert h.mult_by_two_minus_q() == va - vb
            assert h.is_actual()
            assert any(c == 0 for c in h.coeffs) or h.is_zero()


def test_recognition():
    adj = lambda pairs: (lambda i, j: (i, j) in pairs or (j, i) in pairs)
    g, order = recognize_subgroup([0], adj(set()))
    assert str(g) == "C_2" and order == 2
    chain6 = {(i, i + 1) for i in range(5)}
    chain6 |= {(1, 6)}  # fork at vertex 1 -> D-type on 7 vertices
    g, order = recognize_subgroup(list(range(7)), adj(chain6))
    assert g.family == "D" and order == 4 * (7 - 2)
    # D6 recognizes the order-16 subgroup
    d6 = {(0, 2), (1, 2), (2, 3), (3, 4), (4, 5)}
    g, order = recognize_subgroup(list(range(6)), adj(d6))
    assert str(g) == "D*_4" and order == 16
    for n, want in ((6, "T*"), (7, "O*"), (8, "I*")):
        arms = {(0, 1), (1, 2), (2, 3)} | {(2, 4)} | {(3, 5)}
        if n >= 7:
            arms |= {(5, 6)}
        if n >= 8:
            arms |= {(6, 7)}
        g, _ = recognize_subgroup(list(range(n)), adj(arms))
        assert str(g) == want
    with pytest.raises(NotDynkin):
        recognize_subgroup([0, 1, 2], adj({(0, 1), (1, 2), (0, 2)}))


def test_graphical_oracle_agrees_with_algebraic():
    for g in (T_STAR, O_STAR, I_STAR, binary_dihedral(5), binary_dihedral(8)):
        sg = s_graph(g)
        qs = {q.name: q for q in quaternionic_reps(g)}
        for a, b in sg.edges:
            for x, y in ((a, b), (b, a)):
                if sg.vertex(x).kind != "irreducible":
                    continue
                va = VirtualRep.of_quat(g, qs[y])
                vb = VirtualRep.of_quat(g, qs[x])
                h_alg = solve_rep_equation(g, va, vb)
                h_gra, sub, order = minimal_solution_graphical(g, va, vb)
                assert h_alg == h_gra
                assert 2 * h_alg.epsilon() % order == 0


@pytest.mark.parametrize("g", ACCEPT_GROUPS, ids=str)
def test_sgraph_matches_closed_form(g):
    ok, msg = s_graph_matches_expected(g)
    assert ok, msg


def test_sgraph_examples():
    sg = s_graph(I_STAR)
    assert sg.label("alpha", "theta") == 1
    assert sg.label("alpha", "beta") == 3 and sg.label("beta", "alpha") == 4
    sg = s_graph(T_STAR)
    assert sg.label("alpha", "lambda") == 3
    for n in (4, 6, 10):
        sg = s_graph(binary_dihedral(n))
        for k in range(1, n // 2):
            assert sg.label("alpha%d" % k, "alpha%d" % (k + 1)) == 2
            assert sg.label("alpha%d" % (k + 1), "alpha%d" % k) == 2


def test_unit_label_lemma():
    # whenever a doubled real character tensors with Q into an irreducible,
    # the corresponding edge label is 1
    for g in (O_STAR, binary_dihedral(4), binary_dihedral(7)):
        sg = s_graph(g)
        for a, b in sg.edges:
            for irr, other in ((a, b), (b, a)):
                if (
                    sg.vertex(irr).kind == "irreducible"
                    and sg.vertex(other).kind == "fully-reducible"
                ):
                    assert sg.label(irr, other) == 1


def test_path_additivity():
    # for non-adjacent vertices the minimal solution is the sum of the
    # edge solutions along the tree path
    for g in (O_STAR, I_STAR, binary_dihedral(6), cyclic(9)):
        sg = s_graph(g)
        qs = {q.name: q for q in quaternionic_reps(g)}
        names = [q.name for q in quaternionic_reps(g)]
        for a in names:
            for b in names:
                path = sg.path(a, b)
                if len(path) < 3:
                    continue
                va, vb = VirtualRep.of_quat(g, qs[a]), VirtualRep.of_quat(g, qs[b])
                total = solve_rep_equation(g, va, vb)
                acc = VirtualRep.zero(g)
                for x, y in zip(path, path[1:]):
                    acc = acc + solve_rep_equation(
                        g, VirtualRep.of_quat(g, qs[x]), VirtualRep.of_quat(g, qs[y])
                    )
                assert acc == total


def test_mirror_symmetry_of_even_dihedral_labels():
    for m in (2, 3, 4):
        g = binary_dihedral(2 * m)
        edges, labels, _ = expected_s_graph_data(g)
        sg = s_graph(g)
        assert sg.label("alpha1", "theta") == sg.label("alpha%d" % m, "eta2")
        assert sg.label("alpha1", "eta1") == sg.label("alpha%d" % m, "eta3")


@pytest.mark.parametrize("g", ACCEPT_GROUPS, ids=str)
def test_gradings(g):
    sg = s_graph(g)
    for v in sg.vertices:
        assert v.j % 4 == 0
        want_i = {"irreducible": (v.j - 3) % 8, "reducible": (v.j - 2) % 8,
                  "fully-reducible": v.j % 8}[v.kind]
        assert v.i == want_i
    for a, b in sg.edges:
        assert (sg.vertex(a).j - sg.vertex(b).j) % 8 == 4


def test_unsolvable_inputs():
    g = T_STAR
    bad = VirtualRep(g, [1, 0, 0, 0, 0, 0, 0])  # augmentation 1; not a difference
    with pytest.raises(Unsolvable):
        solve_rep_equation(g, bad, VirtualRep.zero(g))


def test_walk_counts_match_path_enumeration():
    # powers of the walk matrix count labeled walks through free orbits
    rng = random.Random(11)
    for g in (O_STAR, I_STAR, binary_dihedral(8)):
        sg = s_graph(g)
        names = [v.name for v in sg.vertices]
        irr = set(sg.irreducibles())

        def walks(src, r):
            # enumerate length-r walks src -> w through free-orbit vertices
            out = {}
            frontier = {src: 1}
            for _ in range(r):
                nxt = {}
                for v, c in frontier.items():
                    for w in sg.neighbors(v):
                        if w in irr and sg.label(w, v):
                            nxt[w] = nxt.get(w, 0) + c * sg.label(w, v)
                frontier = nxt
            return frontier

        psi = {w: {v: sg.label(w, v) for v in names if sg.label(w, v)} for w in irr}
        for src in names:
            vec = {src: 1}
            for r in range(1, 5):
                nxt = {}
                for v, c in vec.items():
                    for w, row in psi.items():
                        if v in row:
                            nxt[w] = nxt.get(w, 0) + c * row[v]
                vec = nxt
                assert vec == walks(src, r)
