"""Character tables, types, tensor decomposition, quaternionic representations."""
import pytest

from bpfloer.errors import DecompositionFailure
from bpfloer.groups import (
    FULLY_REDUCIBLE,
    I_STAR,
    IRREDUCIBLE,
    O_STAR,
    REDUCIBLE,
    T_STAR,
    binary_dihedral,
    character_table,
    cyclic,
    fs_indicator,
    parse_group,
    q_tensor_matrix,
    quaternionic_reps,
    tensor_decompose,
    verify_orthogonality,
)

ALL_GROUPS = (
    [cyclic(k) for k in range(1, 13)]
    + [binary_dihedral(k) for k in range(2, 13)]
    + [T_STAR, O_STAR, I_STAR]
)


@pytest.mark.parametrize("g", ALL_GROUPS, ids=str)
def test_orthogonality_all_tables(g):
    assert verify_orthogonality(g)


@pytest.mark.parametrize("g", ALL_GROUPS, ids=str)
def test_fs_indicator_matches_type_column(g):
    t = character_table(g)
    for i, ir in enumerate(t.irreps):
        assert fs_indicator(g, i) == {"R": 1, "C": 0, "H": -1}[ir.rtype]


def test_table_shapes():
    t = character_table(T_STAR)
    assert [ir.dim for ir in t.irreps] == [1, 1, 1, 2, 2, 2, 3]
    t = character_table(cyclic(3))
    assert [ir.dim for ir in t.irreps] == [1, 1, 1]
    assert [ir.rtype for ir in t.irreps] == ["R", "C", "C"]
    t = character_table(binary_dihedral(2))
    assert sorted(ir.dim for ir in t.irreps) == [1, 1, 1, 1, 2]
    assert sum(ir.dim ** 2 for ir in t.irreps) == 8


def test_fs_examples():
    # trivial character is always real type
    for g in (T_STAR, O_STAR, I_STAR, cyclic(5), binary_dihedral(3)):
        assert fs_indicator(g, 0) == 1
    # the 2-dim quaternionic irreducible of the tetrahedral-type group
    names = [ir.name for ir in character_table(T_STAR).irreps]
    assert fs_indicator(T_STAR, names.index("rho4")) == -1
    # binary dihedral 2-dims alternate H/R with the index parity
    for n in (3, 4, 6):
        t = character_table(binary_dihedral(n))
        for k in range(1, n):
            idx = [ir.name for ir in t.irreps].index("tau%d" % k)
            assert fs_indicator(binary_dihedral(n), idx) == (-1) ** k


def test_tensor_unit():
    for g in (T_STAR, O_STAR, I_STAR, binary_dihedral(4), cyclic(7)):
        t = character_table(g)
        a = q_tensor_matrix(g)
        # Q (x) trivial = Q with multiplicity 1
        if t.q_index is not None:
            want = [0] * len(t.irreps)
            want[t.q_index] = 1
            assert list(a[0]) == want


def test_tensor_dihedral_square():
    # tau1 (x) tau1 = tau2 + rho1 + rho0
    for n in (3, 5, 8):
        g = binary_dihedral(n)
        t = character_table(g)
        names = [ir.name for ir in t.irreps]
        mults = tensor_decompose(g, names.index("tau1"), names.index("tau1"))
        want = {names.index("tau2"), names.index("rho1"), names.index("rho0")}
        assert {i for i, m in enumerate(mults) if m} == want
        assert all(m in (0, 1) for m in mults)


def test_tensor_e6_adjacency():
    # Q (x) the 2-dim quaternionic irreducible is supported on its two
    # graph neighbours (dims 1 and 3)
    t = character_table(T_STAR)
    names = [ir.name for ir in t.irreps]
    mults = tensor_decompose(T_STAR, names.index("rho4"), t.q_index)
    support = {names[i] for i, m in enumerate(mults) if m}
    assert support == {"rho1", "rho5"}


def test_tensor_dimension_balance():
    for g in (T_STAR, O_STAR, I_STAR):
        t = character_table(g)
        for i in range(len(t.irreps)):
            mults = tensor_decompose(g, t.q_index, i)
            assert sum(m * t.irreps[k].dim for k, m in enumerate(mults)) == 2 * t.irreps[i].dim


def test_quaternionic_rep_lists():
    names = lambda g: [q.name for q in quaternionic_reps(g)]
    kinds = lambda g: [q.kind for q in quaternionic_reps(g)]
    assert names(O_STAR) == ["theta", "alpha", "beta", "eta"]
    assert kinds(O_STAR) == [FULLY_REDUCIBLE, IRREDUCIBLE, IRREDUCIBLE, FULLY_REDUCIBLE]
    assert names(T_STAR) == ["theta", "alpha", "lambda"]
    assert names(I_STAR) == ["theta", "alpha", "beta"]
    assert names(cyclic(5)) == ["theta", "lambda1", "lambda2"]


@pytest.mark.parametrize("g", ALL_GROUPS, ids=str)
def test_quaternionic_counts(g):
    count = len(quaternionic_reps(g))
    if g.family == "C":
        l = g.param
        assert count == (l // 2 + 1 if l % 2 == 0 else (l - 1) // 2 + 1)
    elif g.family == "D":
        n = g.param
        assert count == (n // 2 + 4 if n % 2 == 0 else (n - 1) // 2 + 3)
    else:
        assert count == {"T": 3, "O": 4, "I": 3}[g.family]


@pytest.mark.parametrize("g", ALL_GROUPS, ids=str)
def test_regular_representation_dimension(g):
    t = character_table(g)
    assert sum(ir.dim * ir.dim for ir in t.irreps) == g.order


@pytest.mark.parametrize("g", ALL_GROUPS, ids=str)
def test_dual_involution_is_mckay_automorphism(g):
    t = character_table(g)
    a = q_tensor_matrix(g)
    iota = t.iota
    n = len(t.irreps)
    assert [iota[iota[i]] for i in range(n)] == list(range(n))
    for i in range(n):
        # real and quaternionic characters are self-dual
        if t.irreps[i].rtype in ("R", "H"):
            assert iota[i] == i
        for j in range(n):
            assert a[iota[i]][iota[j]] == a[i][j]


def test_group_parsing_and_order():
    assert parse_group("C_5").order == 5
    assert parse_group("D*_4").order == 16
    assert parse_group("Dstar3").order == 12
    assert parse_group("T*").order == 24
    assert str(parse_group("I")) == "I*"
    assert parse_group("O").abelianization() == (2,)
    assert parse_group("C12").abelianization() == (12,)
    assert parse_group("D5").abelianization() == (4,)
    assert parse_group("D6").abelianization() == (2, 2)


def test_bad_multiplicity_detected():
    # corrupting a character value must surface as a decomposition failure
    from bpfloer.cyclo import Cyclo

    t = character_table(T_STAR)
    broken = list(t.irreps[0].values)
    broken[3] = Cyclo.integer(2, 24)
    with pytest.raises(DecompositionFailure):
        from bpfloer.groups import product_decompose

        product_decompose(T_STAR, tuple(broken), t.irreps[0].values)
