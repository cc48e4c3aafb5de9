from segal_abacus.corpus import (
    antichain,
    chain_poset,
    diamond_poset,
    glued_edges_sset,
    nerve,
    two_segal_partial_monoid,
)
from segal_abacus.presheaf import (
    Square,
    colimit0,
    constant_sset,
    empty_sset,
    identity_smap,
    is_pullback,
    iso_report_sset,
    pullback_sets,
    pullback_universal_check,
    sub_trunc,
    validate,
)
from segal_abacus.simplex import MonotoneMap, coface, identity


def corrupt_face(X, n, k):
    """Copy X with one face-table entry redirected to another element."""
    import copy

    Y = copy.deepcopy(X)
    table = Y.faces[(n, k)]
    x = next(iter(sorted(table, key=str)))
    tgt = Y.level(n - 1)
    other = next(t for t in tgt if t != table[x])
    table[x] = other
    return Y


def test_nerve_validates_and_corruption_detected():
    X = nerve(chain_poset(2), 4)
    assert validate(X).passed
    bad = corrupt_face(X, 2, 1)
    rep = validate(bad)
    assert not rep.passed
    assert rep.witnesses


def test_empty_presheaf_validates():
    assert validate(empty_sset(3)).passed


def test_act_matches_chain_reindexing():
    X = nerve(chain_poset(2), 4)
    f = MonotoneMap(3, 3, (0, 0, 2))
    # acting on a 2-simplex of a poset nerve re-labels its vertex chain
    ch = ((0, 1), (1, 2))  # the chain 0 <= 1 <= 2
    assert X.act(f, ch) == ((0, 0), (0, 2))
    assert X.act(identity(2), ch) == ch
    # functoriality on a sample of composites
    g = coface(1, 3)
    three = next(iter(X.level(3)))
    assert X.act(g, three) == X.face(3, 1, three)


def test_pullback_sets_examples():
    C = ["c1", "c2"]
    f = {"a1": "c1", "a2": "c1", "a3": "c2"}
    g = {"b1": "c1", "b2": "c2"}
    P, pa, pb = pullback_sets(f, g, sorted(f), sorted(g))
    assert len(P) == 3
    # over a point the pullback is the product
    fp = {a: "*" for a in f}
    gp = {b: "*" for b in g}
    P2, _, _ = pullback_sets(fp, gp, sorted(f), sorted(g))
    assert len(P2) == len(f) * len(g)
    # diagonal against identities
    idc = {c: c for c in C}
    P3, _, _ = pullback_sets(idc, idc, C, C)
    assert len(P3) == len(C)


def test_is_pullback_identity_square():
    elems = ("x", "y")
    ident = {e: e for e in elems}
    sq = Square("id", elems, elems, elems, ident, ident, ident, ident)
    assert is_pullback(sq).passed


def test_is_pullback_witnesses():
    # a non-surjective comparison
    sq = Square(
        "bad",
        ("p",),
        ("a1", "a2"),
        ("b",),
        {"p": "a1"},
        {"p": "b"},
        {"a1": "c", "a2": "c"},
        {"b": "c"},
    )
    rep = is_pullback(sq)
    assert not rep.passed
    assert any("not surjective" in w.equation for w in rep.witnesses)


def test_is_pullback_noncommuting_is_its_own_failure():
    sq = Square(
        "nc",
        ("p",),
        ("a",),
        ("b",),
        {"p": "a"},
        {"p": "b"},
        {"a": "c1"},
        {"b": "c2"},
    )
    rep = is_pullback(sq)
    assert not rep.passed
    assert any("does not commute" in w.equation for w in rep.witnesses)


def test_pullback_agrees_with_universal_property():
    import random

    rng = random.Random(7)
    for _ in range(12):
        A = [f"a{i}" for i in range(rng.randint(1, 3))]
        B = [f"b{i}" for i in range(rng.randint(1, 3))]
        C = [f"c{i}" for i in range(rng.randint(1, 2))]
        f = {a: rng.choice(C) for a in A}
        g = {b: rng.choice(C) for b in B}
        P, pa, pb = pullback_sets(f, g, A, B)
        sq = Square("rand", P, tuple(A), tuple(B), pa, pb, f, g)
        assert is_pullback(sq).passed
        assert pullback_universal_check(sq, cone_sizes=(1, 2))


def test_colimit0():
    assert colimit0(nerve(chain_poset(2), 2))[0] == (0,)
    assert len(colimit0(nerve(antichain(3), 2))[0]) == 3
    S = constant_sset(["p", "q", "r"], 2)
    classes, aug = colimit0(S)
    assert classes == ("p", "q", "r")
    assert aug == {x: x for x in "pqr"}
    # disjoint union of two connected nerves has two components
    X = nerve(diamond_poset(), 2)
    classes, _ = colimit0(X)
    assert len(classes) == 1


def test_smap_validation_detects_broken_naturality():
    X = nerve(chain_poset(1), 3)
    F = identity_smap(X)
    assert validate(F).passed
    broken = {n: dict(t) for n, t in F.levels.items()}
    lvl1 = sorted(broken[1], key=str)
    broken[1][lvl1[0]] = lvl1[1]
    from segal_abacus.presheaf import SMap

    rep = validate(SMap(X, X, broken))
    assert not rep.passed


def test_iso_report():
    X = nerve(chain_poset(1), 3)
    maps = {n: {x: x for x in X.level(n)} for n in range(4)}
    assert iso_report_sset(X, X, maps).passed
    Y = sub_trunc(X, 2)
    assert validate(Y).passed


def test_validate_partial_monoid_and_graph():
    assert validate(two_segal_partial_monoid(4)).passed
    assert validate(glued_edges_sset(4)).passed
