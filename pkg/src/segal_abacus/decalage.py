"""Decalage, splittings, and local initial/terminal objects.

The lower decalage forgets bottom faces and reindexes; a bottom-split
simplicial set carries extra sections under the bottom faces, which is
the same data as a coalgebra for the lower-decalage comonad.  Rigidity
(the structure map being cartesian) is what makes a splitting behave
like a choice of local initial objects, and the pair of functors
``h_lower`` / ``h_upper`` exchanges the two descriptions.
"""

from __future__ import annotations

from .presheaf import (
    CheckReport,
    SMap,
    TruncSSet,
    Witness,
    cartesian_on,
    constant_sset,
    _sorted_ids,
    validate_sset,
)


# ---------------------------------------------------------------------------
# Decalage of simplicial sets and maps


def dec(X: TruncSSet, side: str) -> TruncSSet:
    """Shift down by one, dropping bottom (resp. top) faces and degeneracies."""
    if X.trunc < 1:
        raise ValueError("decalage needs trunc >= 1")
    T = X.trunc - 1
    levels = {n: X.level(n + 1) for n in range(T + 1)}
    faces = {}
    degens = {}
    for n in range(1, T + 1):
        for k in range(n + 1):
            faces[(n, k)] = X.faces[(n + 1, k + 1 if side == "bottom" else k)]
    for n in range(T):
        for k in range(n + 1):
            degens[(n, k)] = X.degens[(n + 1, k + 1 if side == "bottom" else k)]
    return TruncSSet(T, levels, faces, degens)


def dec_map(F: SMap, side: str) -> SMap:
    return SMap(
        dec(F.source, side),
        dec(F.target, side),
        {n: F.levels[n + 1] for n in range(min(F.source.trunc, F.target.trunc))},
    )


def counit(X: TruncSSet, side: str) -> SMap:
    """The map dec(X) -> X given by the dropped face in each degree."""
    D = dec(X, side)
    levels = {
        n: {x: X.face(n + 1, 0 if side == "bottom" else n + 1, x) for x in D.level(n)}
        for n in range(D.trunc + 1)
    }
    return SMap(D, X, levels)


def comult(X: TruncSSet) -> SMap:
    """dec_bottom(X) -> dec_bottom(dec_bottom(X)) by bottom degeneracies."""
    if X.trunc < 2:
        raise ValueError("comultiplication needs trunc >= 2")
    D = dec(X, "bottom")
    DD = dec(D, "bottom")
    levels = {
        n: {x: X.deg(n + 1, 0, x) for x in D.level(n)} for n in range(DD.trunc + 1)
    }
    return SMap(sub_trunc_sset(D, DD.trunc), DD, levels)


def sub_trunc_sset(X: TruncSSet, T: int) -> TruncSSet:
    from .presheaf import sub_trunc

    return sub_trunc(X, T)


def alpha_aug(X: TruncSSet, side: str = "bottom") -> SMap:
    """The canonical augmentation of a decalage to the constant set on X_0.

    Bottom decalage augments by composites of top faces (degree zero is
    d_1); the top decalage dually augments by composites of bottom faces.
    """
    D = dec(X, side)
    C = constant_sset(X.level(0), D.trunc)
    levels = {}
    for n in range(D.trunc + 1):
        table = {}
        for x in D.level(n):
            y, m = x, n + 1
            while m > 0:
                y = X.face(m, m if side == "bottom" else 0, y)
                m -= 1
            table[x] = y
        levels[n] = table
    return SMap(D, C, levels)


# ---------------------------------------------------------------------------
# Total decalage and edgewise subdivision


def tot(X: TruncSSet):
    """The total decalage as a bisimplicial set of truncation T - 1."""
    from .presheaf import BiSSet

    if X.trunc < 1:
        raise ValueError("total decalage needs trunc >= 1")
    T = X.trunc - 1
    levels = {}
    e, t, d, s = {}, {}, {}, {}
    for i in range(T + 1):
        for j in range(T + 1 - i):
            levels[(i, j)] = X.level(i + 1 + j)
            n = i + 1 + j
            if i >= 1:
                for k in range(i + 1):
                    e[((i, j), k)] = X.faces[(n, k)]
            if j >= 1:
                for k in range(j + 1):
                    d[((i, j), k)] = X.faces[(n, i + 1 + k)]
            if i + j < T:
                for k in range(i + 1):
                    t[((i, j), k)] = X.degens[(n, k)]
                for k in range(j + 1):
                    s[((i, j), k)] = X.degens[(n, i + 1 + k)]
    return BiSSet(T, levels, e, t, d, s)


def sd(X: TruncSSet) -> TruncSSet:
    """Edgewise subdivision: level n is X_{2n+1} with paired outer actions."""
    T = (X.trunc - 1) // 2
    if T < 0:
        raise ValueError("subdivision needs trunc >= 1")
    levels = {n: X.level(2 * n + 1) for n in range(T + 1)}
    faces = {}
    degens = {}
    for n in range(1, T + 1):
        for k in range(n + 1):
            table = {}
            for x in levels[n]:
                y = X.face(2 * n + 1, n + 1 + k, x)
                table[x] = X.face(2 * n, n - k, y)
            faces[(n, k)] = table
    for n in range(T):
        for k in range(n + 1):
            table = {}
            for x in levels[n]:
                y = X.deg(2 * n + 1, n - k, x)
                table[x] = X.deg(2 * n + 2, n + 2 + k, y)
            degens[(n, k)] = table
    return TruncSSet(T, levels, faces, degens)


def sd_map(F: SMap) -> SMap:
    S = sd(F.source)
    return SMap(S, sd(F.target), {n: {x: F.at(2 * n + 1, x) for x in S.level(n)}
                                  for n in range(S.trunc + 1)})


# ---------------------------------------------------------------------------
# Split and pointed structures


class BottomSplitSSet:
    """A simplicial set with extra bottom sections s# : X_n -> X_{n+1}."""

    def __init__(self, sset: TruncSSet, split: dict):
        self.sset = sset
        self.split = split  # n -> dict, for 0 <= n < trunc

    @property
    def trunc(self):
        return self.sset.trunc


class AugBottomSplitSSet:
    """A bottom-split simplicial set with a split augmentation level."""

    def __init__(self, sset: TruncSSet, split: dict, aug_level, aug: dict, aug_split: dict):
        self.sset = sset
        self.split = split
        self.aug_level = _sorted_ids(aug_level)
        self.aug = aug            # d_0 : X_0 -> X_{-1}
        self.aug_split = aug_split  # s# : X_{-1} -> X_0


class PointedSSet:
    """A simplicial set with a pointing a : C -> X_0."""

    def __init__(self, sset: TruncSSet, point_set, pointing: dict):
        self.sset = sset
        self.point_set = _sorted_ids(point_set)
        self.pointing = pointing


def validate_pointed(P: PointedSSet, name: str = "pointed") -> CheckReport:
    rep = validate_sset(P.sset, name)
    witnesses = list(rep.witnesses)
    checked = rep.checked
    lvl0 = set(P.sset.level(0))
    for c in P.point_set:
        checked += 1
        if P.pointing.get(c) not in lvl0:
            witnesses.append(Witness("pointing", "pointing misses level 0", (c,)))
    return CheckReport.from_witnesses(name, witnesses, checked)


def validate_coalgebra(A, name: str = "split") -> CheckReport:
    """The split-simplicial identities; for augmented input also the
    augmentation square and section."""
    X = A.sset
    witnesses = []
    checked = 0
    base = validate_sset(X, name)
    witnesses += base.witnesses
    checked += base.checked
    for n in range(X.trunc):
        table = A.split.get(n)
        if table is None or set(table) != set(X.level(n)):
            witnesses.append(Witness(f"split@{n}", "splitting missing or partial", ()))
            continue
        for x in X.level(n):
            checked += 1
            if X.face(n + 1, 0, table[x]) != x:
                witnesses.append(Witness(f"split-counit@{n}", "d_0 s# = id", (x,)))
            for k in range(n + 1):
                checked += 1
                if n >= 1:
                    lhs = X.face(n + 1, k + 1, table[x])
                    rhs = A.split[n - 1][X.face(n, k, x)]
                    if lhs != rhs:
                        witnesses.append(Witness(f"split-face{k}@{n}", "d_k+1 s# = s# d_k", (x,)))
            if n + 1 < X.trunc:
                for k in range(n + 1):
                    checked += 1
                    if X.deg(n + 1, k + 1, table[x]) != A.split[n + 1][X.deg(n, k, x)]:
                        witnesses.append(Witness(f"split-deg{k}@{n}", "s_k+1 s# = s# s_k", (x,)))
                checked += 1
                if X.deg(n + 1, 0, table[x]) != A.split[n + 1][table[x]]:
                    witnesses.append(Witness(f"split-coassoc@{n}", "s_0 s# = s# s#", (x,)))
    if isinstance(A, AugBottomSplitSSet):
        aug_set = set(A.aug_level)
        for x in X.level(0):
            checked += 1
            if A.aug.get(x) not in aug_set:
                witnesses.append(Witness("aug", "augmentation missing", (x,)))
        for c in A.aug_level:
            checked += 1
            if A.aug.get(A.aug_split.get(c)) != c:
                witnesses.append(Witness("aug-counit", "d_0 s# = id at -1", (c,)))
            if X.trunc >= 1:
                checked += 1
                if X.face(1, 1, A.split[0][A.aug_split[c]]) != A.aug_split[c]:
                    witnesses.append(Witness("aug-split-face", "d_1 s# = s# d_0 at 0", (c,)))
                checked += 1
                if X.deg(0, 0, A.aug_split[c]) != A.split[0][A.aug_split[c]]:
                    witnesses.append(Witness("aug-split-coassoc", "s_0 s# = s# s# at -1", (c,)))
        for x in X.level(0):
            if X.trunc >= 1:
                checked += 1
                if X.face(1, 1, A.split[0][x]) != A.aug_split[A.aug[x]]:
                    witnesses.append(Witness("aug-shift", "d_1 s# = s# d_0 at 0", (x,)))
    return CheckReport.from_witnesses(name, witnesses, checked)


def gamma(A: BottomSplitSSet) -> SMap:
    """The coalgebra structure map X -> dec_bottom(X) built from the splitting."""
    X = A.sset
    D = dec(X, "bottom")
    levels = {n: {x: A.split[n][x] for x in X.level(n)} for n in range(D.trunc + 1)}
    return SMap(sub_trunc_sset(X, D.trunc), D, levels)


def is_rigid(A: BottomSplitSSet, name: str = "is_rigid") -> CheckReport:
    """Rigidity: the structure map is cartesian on every operator."""
    return cartesian_on(gamma(A), "all", name)


def underlying_split(A: AugBottomSplitSSet) -> BottomSplitSSet:
    return BottomSplitSSet(A.sset, A.split)


def pullback_coalgebra(F: SMap, C_split: dict, name: str = "pullback_coalgebra"):
    """Pull a bottom splitting on the target back along a right fibration.

    ``C_split[n]`` splits the target.  The source splitting lifts through
    the d_0 pullback squares; returns (BottomSplitSSet, CheckReport).
    """
    from .fibrations import is_right_fibration

    pre = is_right_fibration(F)
    if not pre.passed:
        return None, CheckReport.precondition_failure(name, "map is not a right fibration")
    X, Y = F.source, F.target
    T = min(X.trunc, Y.trunc)
    split = {}
    witnesses = []
    for n in range(T):
        table = {}
        want = {}
        for x in X.level(n):
            want[x] = (x, C_split[n][F.at(n, x)])
        lookup = {(X.face(n + 1, 0, z), F.at(n + 1, z)): z for z in X.level(n + 1)}
        for x, key in want.items():
            if key not in lookup:
                witnesses.append(Witness(f"lift@{n}", "no pullback lift", (x,)))
            else:
                table[x] = lookup[key]
        split[n] = table
    if witnesses:
        return None, CheckReport.from_witnesses(name, witnesses, T)
    A = BottomSplitSSet(sub_trunc_sset(X, T), split)
    rep = validate_coalgebra(A, name)
    return A, rep


# ---------------------------------------------------------------------------
# Local initial and terminal objects


def _aug_pullback_levels(P: PointedSSet, side: str):
    """Levels of the pullback of the pointed constant against dec's
    canonical augmentation, with the comparison composite to X."""
    X = P.sset
    al = alpha_aug(X, side)
    D = al.source
    eps = counit(X, side)
    levels = {}
    compare = {}
    for n in range(D.trunc + 1):
        elems = []
        comp = {}
        for c in P.point_set:
            for x in D.level(n):
                if al.at(n, x) == P.pointing[c]:
                    elems.append((c, x))
                    comp[(c, x)] = eps.at(n, x)
        levels[n] = _sorted_ids(elems)
        compare[n] = comp
    return levels, compare


def _local_report(P: PointedSSet, side: str, name: str) -> CheckReport:
    X = P.sset
    if X.trunc < 1:
        return CheckReport.precondition_failure(name, "trunc too small")
    levels, compare = _aug_pullback_levels(P, side)
    witnesses = []
    checked = 0
    for n in sorted(levels):
        seen = {}
        for z, img in compare[n].items():
            checked += 1
            if img in seen:
                witnesses.append(Witness(f"level@{n}", "comparison not injective", (seen[img], z)))
            seen[img] = z
        for x in X.level(n):
            if x not in seen:
                witnesses.append(Witness(f"level@{n}", "comparison not surjective", (x,)))
    return CheckReport.from_witnesses(name, witnesses, checked)


def is_local_initial(P: PointedSSet) -> CheckReport:
    """The pointed comparison to the bottom decalage is a degreewise bijection."""
    return _local_report(P, "bottom", "is_local_initial")


def is_local_terminal(P: PointedSSet) -> CheckReport:
    return _local_report(P, "top", "is_local_terminal")


# ---------------------------------------------------------------------------
# The comparison functors between pointings and split structures


def h_lower(P: PointedSSet) -> AugBottomSplitSSet:
    """Pointed set to split-augmented set, by pulling back the shifted set.

    Level n is the pullback of C against X_{n+1} over X_0; the splitting
    comes from the bottom degeneracies that survive the shift.
    """
    X = P.sset
    if X.trunc < 1:
        raise ValueError("h_lower needs trunc >= 1")
    T = X.trunc - 1
    al = alpha_aug(X, "bottom")
    levels = {}
    for n in range(T + 1):
        levels[n] = _sorted_ids(
            (c, x)
            for c in P.point_set
            for x in X.level(n + 1)
            if al.at(n, x) == P.pointing[c]
        )
    faces = {}
    degens = {}
    for n in range(1, T + 1):
        for k in range(n + 1):
            faces[(n, k)] = {(c, x): (c, X.face(n + 1, k + 1, x)) for (c, x) in levels[n]}
    for n in range(T):
        for k in range(n + 1):
            degens[(n, k)] = {(c, x): (c, X.deg(n + 1, k + 1, x)) for (c, x) in levels[n]}
    sset = TruncSSet(T, levels, faces, degens)
    split = {
        n: {(c, x): (c, X.deg(n + 1, 0, x)) for (c, x) in levels[n]} for n in range(T)
    }
    aug = {(c, x): c for (c, x) in levels[0]}
    aug_split = {c: (c, X.deg(0, 0, P.pointing[c])) for c in P.point_set}
    return AugBottomSplitSSet(sset, split, P.point_set, aug, aug_split)


def h_upper(A: AugBottomSplitSSet) -> PointedSSet:
    """Forget the splitting, keeping the augmentation section as pointing."""
    return PointedSSet(A.sset, A.aug_level, dict(A.aug_split))


def h_counit_map(P: PointedSSet) -> SMap:
    """The comparison from the underlying set of h_lower(P) back to P's set."""
    A = h_lower(P)
    X = P.sset
    levels = {
        n: {(c, x): X.face(n + 1, 0, x) for (c, x) in A.sset.level(n)}
        for n in range(A.sset.trunc + 1)
    }
    return SMap(A.sset, sub_trunc_sset(X, A.sset.trunc), levels)


def h_unit_report(A: AugBottomSplitSSet, name: str = "h_unit") -> CheckReport:
    """Bijectivity of the unit A -> h_lower(h_upper(A)), which holds exactly
    for rigid coalgebras."""
    B = h_lower(h_upper(A))
    X = A.sset
    witnesses = []
    checked = 0
    for n in range(B.sset.trunc + 1):
        img = {}
        for x in X.level(n):
            checked += 1
            y, m = x, n
            while m > 0:
                y = X.face(m, m, y)
                m -= 1
            target = (A.aug[y], A.split[n][x])
            if target not in set(B.sset.level(n)):
                witnesses.append(Witness(f"unit@{n}", "unit misses the pullback", (x,)))
                continue
            if target in img:
                witnesses.append(Witness(f"unit@{n}", "unit not injective", (img[target], x)))
            img[target] = x
        for z in B.sset.level(n):
            if z not in img:
                witnesses.append(Witness(f"unit@{n}", "unit not surjective", (z,)))
    return CheckReport.from_witnesses(name, witnesses, checked)
