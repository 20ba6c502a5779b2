"""Walk through the combinatorial layer: character tables, McKay graphs,
and the labeled graphs on flat connections.

Run:  python demos/01_groups_and_graphs.py
"""
from bpfloer import (
    O_STAR,
    T_STAR,
    binary_dihedral,
    character_table,
    fs_indicator,
    mckay_graph,
    parse_group,
    quaternionic_reps,
    s_graph,
    solve_rep_equation,
    tensor_decompose,
)
from bpfloer.mckay import VirtualRep, minimal_solution_graphical
from bpfloer.serialize import mckay_text, sgraph_text, table_text

print("=" * 72)
print("Character tables are exact: entries live in Q[x]/(x^N - 1).")
print("=" * 72)
print(table_text(T_STAR))

print()
print("Types are recomputed from the squaring classes, never trusted:")
t = character_table(T_STAR)
for i, ir in enumerate(t.irreps):
    print("  %-7s dim %d  indicator %2d  (%s type)" % (ir.name, ir.dim, fs_indicator(T_STAR, i), ir.rtype))

print()
print("=" * 72)
print("Tensoring with the canonical 2-dimensional representation cuts out")
print("the extended Dynkin diagram (the McKay correspondence).")
print("=" * 72)
for name in ("C_3", "D*_2", "T*", "O*", "I*"):
    print(" ", mckay_text(parse_group(name)).splitlines()[0])
print()
print(mckay_text(O_STAR))

print()
print("=" * 72)
print("Flat connections = 1-dimensional quaternionic representations;")
print("the labeled graph on them drives every differential downstream.")
print("=" * 72)
for name in ("T*", "O*", "I*", "D*_5"):
    print(sgraph_text(parse_group(name)))
    print()

print("A label is 2 dim(H) / |G'| for the minimal solution H of the")
print("representation-ring equation; algebraic and graphical routes agree:")
g = O_STAR
qs = {q.name: q for q in quaternionic_reps(g)}
beta = VirtualRep.of_quat(g, qs["beta"])
alpha = VirtualRep.of_quat(g, qs["alpha"])
h = solve_rep_equation(g, beta, alpha)
h2, sub, order = minimal_solution_graphical(g, beta, alpha)
print("  algebraic solve:", h, " -> dimension", h.epsilon())
print("  deletion recipe:", h2, " -> subgroup %s of order %d" % (sub, order))
print("  label 2*%d/%d = %d" % (h.epsilon(), order, 2 * h.epsilon() // order))
