"""The main constructions: right Kan extension along the augmentations,
the cartesian-abacus condition, bicomodule configurations, the pointing
axioms, and the extension from pointed bisimplicial sets back to abacus
presheaves.

Conventions.  A simplicial map F : X -> Y becomes an abacus presheaf
``q_lower_star(F)`` with bulk level (i, j) the pairs (x, y) in
X_i x Y_{i+1+j} agreeing over Y_i; the augmentation column stores X's
elements and the augmentation row Y's.  All actions are induced by
precomposition with the generator squares of the abacus category, so a
single generic formula covers every generator.
"""

from __future__ import annotations

from .abacus import DObject, bead_of_generator
from .corpus import chain_poset, nerve
from .decalage import PointedSSet, dec, is_local_initial, is_local_terminal, tot
from .fibrations import (
    cartesian_on,
    is_culf,
    is_double_segal,
    is_segal,
    is_2segal,
    stability,
)
from .presheaf import (
    BiSSet,
    CheckReport,
    DSet,
    SMap,
    SigmaSet,
    TruncSSet,
    Witness,
    _sorted_ids,
    col_sset,
    dset_action_ranges,
    dset_levels,
    idkey,
    row_sset,
    sub_trunc,
    validate,
)
from .simplex import MonotoneMap


# ---------------------------------------------------------------------------
# The right Kan extension of a simplicial map


def _x_part(lvl, elem, F: SMap):
    i, j = lvl
    if j == -1:
        return elem
    if i == -1:
        return None
    return elem[0]


def _y_part(lvl, elem, F: SMap):
    i, j = lvl
    if j == -1:
        return F.at(i, elem)
    if i == -1:
        return elem
    return elem[1]


def _pack(lvl, x, y):
    i, j = lvl
    if j == -1:
        return x
    if i == -1:
        return y
    return (x, y)


def q_lower_star(F: SMap) -> DSet:
    """The abacus presheaf of a simplicial map.

    Bulk level (i, j) is the strict pullback X_i x_{Y_i} Y_{i+1+j}; the
    augmentation column is X itself and the augmentation row is Y.  Each
    generator acts by precomposition with its defining square.
    """
    X, Y = F.source, F.target
    T = min(X.trunc, Y.trunc)
    levels = {}
    for (i, j) in dset_levels(T):
        if j == -1:
            levels[(i, j)] = X.level(i)
        elif i == -1:
            levels[(i, j)] = Y.level(j)
        else:
            inc = MonotoneMap(i + 1, i + j + 2, tuple(range(i + 1)))
            levels[(i, j)] = _sorted_ids(
                (x, y)
                for x in X.level(i)
                for y in Y.level(i + 1 + j)
                if F.at(i, x) == Y.act(inc, y)
            )
    e, t, d, s, f, ssub = {}, {}, {}, {}, {}, {}
    stores = {"e": e, "t": t, "d": d, "s": s, "f": f, "ssub": ssub}
    for lvl in levels:
        for kind, k, tgt in dset_action_ranges(lvl[0], lvl[1], T):
            g = bead_of_generator(kind, k, DObject(*tgt))
            assert (g.tgt.i, g.tgt.j) == lvl
            table = {}
            for elem in levels[lvl]:
                xp = _x_part(lvl, elem, F)
                yp = _y_part(lvl, elem, F)
                nx = X.act(g.top_part(), xp) if tgt[0] >= 0 else None
                ny = Y.act(g.carrier, yp)
                table[elem] = _pack(tgt, nx, ny)
            if kind in ("f", "ssub"):
                stores[kind][lvl] = table
            else:
                stores[kind][(lvl, k)] = table
    return DSet(T, levels, e, t, d, s, f, ssub)


def r_star(X: TruncSSet) -> DSet:
    """The total decalage with its row-and-column augmentations: level
    (i, j) is X_{i+1+j} and every generator acts through its carrier."""
    T = X.trunc
    levels = {lvl: X.level(lvl[0] + 1 + lvl[1]) for lvl in dset_levels(T)}
    e, t, d, s, f, ssub = {}, {}, {}, {}, {}, {}
    stores = {"e": e, "t": t, "d": d, "s": s, "f": f, "ssub": ssub}
    for lvl in levels:
        for kind, k, tgt in dset_action_ranges(lvl[0], lvl[1], T):
            g = bead_of_generator(kind, k, DObject(*tgt))
            table = {x: X.act(g.carrier, x) for x in levels[lvl]}
            if kind in ("f", "ssub"):
                stores[kind][lvl] = table
            else:
                stores[kind][(lvl, k)] = table
    return DSet(T, levels, e, t, d, s, f, ssub)


def q_upper_star(B: DSet) -> SMap:
    """Restrict to the augmentations: the simplicial map from the
    augmentation column to the augmentation row via abacus composites."""
    X = col_sset(B, -1)
    Y = row_sset(B, -1)
    T = min(X.trunc, Y.trunc)
    levels = {}
    for n in range(T + 1):
        table = {}
        for z in B.level(n, -1):
            lvl, cur = (n, -1), z
            for _ in range(n + 1):
                lvl, cur = B.act("f", None, lvl, cur)
            table[z] = cur
        levels[n] = table
    return SMap(sub_trunc(X, T), sub_trunc(Y, T), levels)


# ---------------------------------------------------------------------------
# Condition (star) and the unit


def abacus_row_map(B: DSet, i: int) -> SMap | None:
    """The abacus maps as a simplicial map from row i+1 to the bottom
    decalage of row i (i >= -1)."""
    upper = row_sset(B, i + 1)
    lower = dec(row_sset(B, i), "bottom") if row_sset(B, i).trunc >= 1 else None
    if lower is None or upper.trunc < 0:
        return None
    T = min(upper.trunc, lower.trunc)
    levels = {n: {x: B.f[(i + 1, n)][x] for x in B.level(i + 1, n)} for n in range(T + 1)}
    return SMap(sub_trunc(upper, T), sub_trunc(lower, T), levels)


def abacus_col_map(B: DSet, j: int) -> SMap:
    """The abacus maps as a simplicial map from the top decalage of
    column j to column j+1 (j >= -1)."""
    src = dec(col_sset(B, j), "top")
    tgt = col_sset(B, j + 1)
    T = min(src.trunc, tgt.trunc)
    levels = {n: {x: B.f[(n + 1, j)][x] for x in B.level(n + 1, j)} for n in range(T + 1)}
    return SMap(sub_trunc(src, T), sub_trunc(tgt, T), levels)


def condition_star(B: DSet) -> CheckReport:
    """Every abacus row map is cartesian, including the augmentation row."""
    reports = []
    rows = sorted({i for (i, j) in B.levels})
    for i in rows:
        if (i + 1) not in rows:
            continue
        F = abacus_row_map(B, i)
        if F is None:
            continue
        reports.append(cartesian_on(F, "all", f"star-row{i}"))
    return CheckReport.conjunction("condition_star", reports)


def unit_iso(B: DSet) -> CheckReport:
    """Bijectivity of the unit comparison into the Kan-extension levels."""
    witnesses = []
    checked = 0
    rows = {i for (i, j) in B.levels}
    if -1 not in rows:
        return CheckReport.precondition_failure("unit_iso", "no augmentation row")
    for (i, j) in sorted(B.levels, key=lambda lv: (lv[0] + 1 + lv[1], lv)):
        if i < 0 or j < 0:
            continue
        # components: project to the augmentation column and row
        eta = {}
        for b in B.level(i, j):
            lvl, cur = (i, j), b
            for k in range(j, -1, -1):
                lvl, cur = B.act("d", k, lvl, cur)
            xc = cur
            lvl, cur = (i, j), b
            for _ in range(i + 1):
                lvl, cur = B.act("f", None, lvl, cur)
            eta[b] = (xc, cur)
        want = set()
        fx = {}
        for x in B.level(i, -1):
            lvl, cur = (i, -1), x
            for _ in range(i + 1):
                lvl, cur = B.act("f", None, lvl, cur)
            fx[x] = cur
        for x in B.level(i, -1):
            for y in B.level(-1, i + 1 + j):
                lvl, cur = (-1, i + 1 + j), y
                for k in range(i + 1 + j, i, -1):
                    lvl, cur = B.act("d", k, lvl, cur)
                if cur == fx[x]:
                    want.add((x, y))
        seen = {}
        for b, im in eta.items():
            checked += 1
            if im not in want:
                witnesses.append(Witness(f"unit@({i},{j})", "unit leaves the pullback", (b,)))
            elif im in seen:
                witnesses.append(Witness(f"unit@({i},{j})", "unit not injective", (seen[im], b)))
            seen[im] = b
        for im in sorted(want - set(seen), key=idkey):
            witnesses.append(Witness(f"unit@({i},{j})", "unit not surjective", im))
    return CheckReport.from_witnesses("unit_iso", witnesses, checked)


# ---------------------------------------------------------------------------
# Bicomodule configurations and the simplicial-map dictionary


def aug_row_map(B: DSet) -> SMap:
    """The vertical augmentation map from row 0 to the augmentation row."""
    upper = row_sset(B, 0)
    lower = row_sset(B, -1)
    T = min(upper.trunc, lower.trunc)
    levels = {n: {x: B.e[((0, n), 0)][x] for x in B.level(0, n)} for n in range(T + 1)}
    return SMap(sub_trunc(upper, T), sub_trunc(lower, T), levels)


def aug_col_map(B: DSet) -> SMap:
    upper = col_sset(B, 0)
    lower = col_sset(B, -1)
    T = min(upper.trunc, lower.trunc)
    levels = {n: {x: B.d[((n, 0), 0)][x] for x in B.level(n, 0)} for n in range(T + 1)}
    return SMap(sub_trunc(upper, T), sub_trunc(lower, T), levels)


def is_bicomodule_config(B: DSet) -> CheckReport:
    """Stable, double Segal, 2-Segal augmentations, culf augmentation maps."""
    parts = [
        stability(B, "both", "bicomodule:stability"),
        is_double_segal(B, "bicomodule:double-segal"),
        is_2segal(row_sset(B, -1), "both", "bicomodule:aug-row-2segal"),
        is_2segal(col_sset(B, -1), "both", "bicomodule:aug-col-2segal"),
        CheckReport.conjunction("bicomodule:aug-row-culf", [is_culf(aug_row_map(B))]),
        CheckReport.conjunction("bicomodule:aug-col-culf", [is_culf(aug_col_map(B))]),
    ]
    return CheckReport.conjunction("is_bicomodule_config", parts)


def is_rel_upper_2segal(F: SMap) -> CheckReport:
    """The pullback of the top-decalage counit along F is Segal."""
    X, Y = F.source, F.target
    T = min(X.trunc, Y.trunc) - 1
    if T < 2:
        return CheckReport.precondition_failure("is_rel_upper_2segal", "needs trunc >= 3")
    levels = {}
    for n in range(T + 1):
        levels[n] = _sorted_ids(
            (x, y) for x in X.level(n) for y in Y.level(n + 1)
            if F.at(n, x) == Y.face(n + 1, n + 1, y)
        )
    faces = {
        (n, k): {(x, y): (X.face(n, k, x), Y.face(n + 1, k, y)) for (x, y) in levels[n]}
        for n in range(1, T + 1)
        for k in range(n + 1)
    }
    degens = {
        (n, k): {(x, y): (X.deg(n, k, x), Y.deg(n + 1, k, y)) for (x, y) in levels[n]}
        for n in range(T)
        for k in range(n + 1)
    }
    P = TruncSSet(T, levels, faces, degens)
    return CheckReport.conjunction("is_rel_upper_2segal", [is_segal(P)])


def dictionary_conditions(F: SMap) -> dict:
    return {
        "source_2segal": is_2segal(F.source, "both"),
        "target_2segal": is_2segal(F.target, "both"),
        "rel_upper_2segal": is_rel_upper_2segal(F),
    }


def has_invertible_abacus(B: DSet) -> CheckReport:
    """Every stored abacus action is a bijection onto its target level."""
    witnesses = []
    checked = 0
    for lvl in sorted(B.f, key=lambda lv: (lv[0] + 1 + lv[1], lv)):
        table = B.f[lvl]
        tgt = B.level(lvl[0] - 1, lvl[1] + 1)
        checked += 1
        seen = {}
        for x, y in table.items():
            if y in seen:
                witnesses.append(Witness(f"f@{lvl}", "abacus not injective", (seen[y], x)))
            seen[y] = x
        for y in tgt:
            if y not in seen:
                witnesses.append(Witness(f"f@{lvl}", "abacus not surjective", (y,)))
    return CheckReport.from_witnesses("has_invertible_abacus", witnesses, checked)


# ---------------------------------------------------------------------------
# Pointed bisimplicial sets: restriction, axioms, total decalage


_BULK_STEP = {"e": (-1, 0), "t": (1, 0), "d": (0, -1), "s": (0, 1)}


def j_upper_star(B: DSet) -> SigmaSet:
    """Forget down to the pointing shape: keep the bulk, point with the
    zeroth augmentation-column level via its splitting."""
    Tb = B.trunc - 1
    levels = {
        lv: B.level(*lv)
        for lv in B.levels
        if lv[0] >= 0 and lv[1] >= 0 and lv[0] + lv[1] <= Tb
    }
    stores = {"e": {}, "t": {}, "d": {}, "s": {}}
    for kind, (di, dj) in _BULK_STEP.items():
        for (lv, k), table in getattr(B, kind).items():
            tgt = (lv[0] + di, lv[1] + dj)
            if lv in levels and tgt in levels:
                stores[kind][(lv, k)] = table
    bulk = BiSSet(Tb, levels, stores["e"], stores["t"], stores["d"], stores["s"])
    return SigmaSet(bulk, B.level(0, -1), dict(B.ssub[(0, -1)]))


def p_star_tot(X: TruncSSet) -> SigmaSet:
    """The total decalage pointed by the zeroth degeneracy."""
    bulk = tot(X)
    return SigmaSet(bulk, X.level(0), dict(X.degens[(0, 0)]))


def pointed_row0(A: SigmaSet) -> PointedSSet:
    return PointedSSet(row_sset(A.bulk, 0), A.point_set, dict(A.pointing))


def pointed_col0(A: SigmaSet) -> PointedSSet:
    return PointedSSet(col_sset(A.bulk, 0), A.point_set, dict(A.pointing))


def boors_axioms(A: SigmaSet, half: bool = False) -> CheckReport:
    """Stability, double Segal, and the two pointing axioms.

    With ``half=True`` only the horizontal half is required: upper
    stability, Segal rows, and the pointing a local-initial structure on
    the zeroth row.
    """
    if half:
        rows = sorted({i for (i, j) in A.bulk.levels})
        segal_rows = [
            is_segal(row_sset(A.bulk, i), f"row{i}")
            for i in rows
            if row_sset(A.bulk, i).trunc >= 2
        ]
        parts = [
            stability(A.bulk, "upper", "half:upper-stability"),
            CheckReport.conjunction("half:segal-rows", segal_rows),
            CheckReport.conjunction("half:horizontal-pointing",
                                    [is_local_initial(pointed_row0(A))]),
        ]
        return CheckReport.conjunction("half_boors_axioms", parts)
    parts = [
        stability(A.bulk, "both", "boors:stability"),
        is_double_segal(A.bulk, "boors:double-segal"),
        CheckReport.conjunction("boors:horizontal-pointing",
                                [is_local_initial(pointed_row0(A))]),
        CheckReport.conjunction("boors:vertical-pointing",
                                [is_local_terminal(pointed_col0(A))]),
    ]
    return CheckReport.conjunction("boors_axioms", parts)


# ---------------------------------------------------------------------------
# The extension from the pointing shape to the abacus shape


def _row0_splittings(A: SigmaSet):
    """Row-zero splittings from the local-initial structure.

    psi_j inverts (c, b') -> d_0 b' over the pullback of the pointing;
    returns (srow0, d0aug, ok) with d0aug the component map to the
    pointing set.
    """
    bulk = A.bulk
    Tb = bulk.trunc
    srow0 = {}
    d0aug = {}
    for j in range(Tb):
        inv = {}
        for c in A.point_set:
            for b2 in bulk.level(0, j + 1):
                cur = b2
                for m in range(j + 1, 0, -1):
                    cur = bulk.d[((0, m), m)][cur]
                if cur != A.pointing[c]:
                    continue
                key = bulk.d[((0, j + 1), 0)][b2]
                if key in inv:
                    return None, None, False
                inv[key] = (c, b2)
        if set(inv) != set(bulk.level(0, j)):
            return None, None, False
        srow0[j] = {b: inv[b][1] for b in bulk.level(0, j)}
        if j == 0:
            d0aug = {b: inv[b][0] for b in bulk.level(0, 0)}
    return srow0, d0aug, True


def _col0_tsplittings(A: SigmaSet):
    """Column-zero top splittings from the local-terminal structure."""
    bulk = A.bulk
    Tb = bulk.trunc
    tcol0 = {}
    for i in range(Tb):
        inv = {}
        for c in A.point_set:
            for b2 in bulk.level(i + 1, 0):
                cur = b2
                for m in range(i + 1, 0, -1):
                    cur = bulk.e[((m, 0), 0)][cur]
                if cur != A.pointing[c]:
                    continue
                key = bulk.e[((i + 1, 0), i + 1)][b2]
                if key in inv:
                    return None, False
                inv[key] = b2
        if set(inv) != set(bulk.level(i, 0)):
            return None, False
        tcol0[i] = inv
    return tcol0, True


def extend_sigma_to_d(A: SigmaSet, half: bool = False):
    """Rebuild the abacus presheaf from a pointed bisimplicial set.

    Splittings propagate down the rows by upper stability; row-wise
    colimits build the augmentation column; column-wise colimits build
    the augmentation row (skipped for ``half=True``, which targets the
    shape without the augmentation row).  Returns (DSet, CheckReport).
    """
    axioms = boors_axioms(A, half=half)
    if not axioms.passed:
        return None, CheckReport.precondition_failure(
            "extend_sigma_to_d", "pointing axioms fail"
        )
    bulk = A.bulk
    Tb = bulk.trunc
    TD = Tb - 1
    if TD < 0:
        return None, CheckReport.precondition_failure("extend_sigma_to_d", "trunc too small")

    srow0, d0aug0, ok = _row0_splittings(A)
    if not ok:
        return None, CheckReport.precondition_failure("extend_sigma_to_d", "row-zero inversion failed")
    srow = {0: srow0}
    for i in range(1, Tb + 1):
        srow[i] = {}
        for j in range(Tb - i):
            lookup = {
                (bulk.d[((i, j + 1), 0)][z], bulk.e[((i, j + 1), 0)][z]): z
                for z in bulk.level(i, j + 1)
            }
            table = {}
            for b in bulk.level(i, j):
                key = (b, srow[i - 1][j][bulk.e[((i, j), 0)][b]])
                if key not in lookup:
                    return None, CheckReport.precondition_failure(
                        "extend_sigma_to_d", f"splitting lift failed at ({i},{j})"
                    )
                table[b] = lookup[key]
            srow[i][j] = table

    tcol = None
    if not half:
        tcol0, ok = _col0_tsplittings(A)
        if not ok:
            return None, CheckReport.precondition_failure(
                "extend_sigma_to_d", "column-zero inversion failed"
            )
        tcol = {0: tcol0}
        for j in range(1, Tb + 1):
            tcol[j] = {}
            for i in range(Tb - j):
                lookup = {
                    (bulk.e[((i + 1, j), i + 1)][z], bulk.d[((i + 1, j), j)][z]): z
                    for z in bulk.level(i + 1, j)
                }
                table = {}
                for b in bulk.level(i, j):
                    key = (b, tcol[j - 1][i][bulk.d[((i, j), j)][b]])
                    if key not in lookup:
                        return None, CheckReport.precondition_failure(
                            "extend_sigma_to_d", f"top splitting lift failed at ({i},{j})"
                        )
                    table[b] = lookup[key]
                tcol[j][i] = table

    # augmentation column: the pointing set in row zero, quotients below
    col_classes = {0: tuple(A.point_set)}
    col_quot = {0: d0aug0}
    for i in range(1, TD + 1):
        parent = {b: b for b in bulk.level(i, 0)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for z in bulk.level(i, 1):
            a0, a1 = find(bulk.d[((i, 1), 0)][z]), find(bulk.d[((i, 1), 1)][z])
            if a0 != a1:
                lo, hi = sorted((a0, a1), key=idkey)
                parent[hi] = lo
        members = {}
        for b in bulk.level(i, 0):
            members.setdefault(find(b), []).append(b)
        reps = {root: min(ms, key=idkey) for root, ms in members.items()}
        col_classes[i] = _sorted_ids(reps.values())
        col_quot[i] = {b: reps[find(b)] for b in bulk.level(i, 0)}

    def rep_col(i, z):
        return A.pointing[z] if i == 0 else z

    row_classes = {}
    row_quot = {}
    if not half:
        for j in range(TD + 1):
            parent = {b: b for b in bulk.level(0, j)}

            def findr(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for z in bulk.level(1, j):
                a0, a1 = findr(bulk.e[((1, j), 0)][z]), findr(bulk.e[((1, j), 1)][z])
                if a0 != a1:
                    lo, hi = sorted((a0, a1), key=idkey)
                    parent[hi] = lo
            members = {}
            for b in bulk.level(0, j):
                members.setdefault(findr(b), []).append(b)
            reps = {root: min(ms, key=idkey) for root, ms in members.items()}
            row_classes[j] = _sorted_ids(reps.values())
            row_quot[j] = {b: reps[findr(b)] for b in bulk.level(0, j)}

    levels = {}
    for lvl in dset_levels(TD, with_aug_row=not half):
        i, j = lvl
        if j == -1:
            levels[lvl] = col_classes[i]
        elif i == -1:
            levels[lvl] = row_classes[j]
        else:
            levels[lvl] = bulk.level(i, j)

    e, t, d, s, f, ssub = {}, {}, {}, {}, {}, {}

    def bulk_f(i, j):
        # e_top after the splitting, levelwise
        if i >= 1:
            return {b: bulk.e[((i, j + 1), i)][srow[i][j][b]] for b in bulk.level(i, j)}
        return {b: row_quot[j + 1][srow[0][j][b]] for b in bulk.level(0, j)}

    def saug(i, z):
        # the splitting section of the augmentation column
        if i == 0:
            return A.pointing[z]
        return bulk.d[((i, 1), 1)][srow[i][0][rep_col(i, z)]]

    for lvl in levels:
        i, j = lvl
        for kind, k, tgt in dset_action_ranges(i, j, TD):
            if half and tgt[0] == -1:
                continue
            if i >= 0 and j >= 0:  # bulk sources
                if kind == "f":
                    f[lvl] = bulk_f(i, j)
                elif kind == "ssub":
                    ssub[lvl] = dict(srow[i][j])
                elif kind == "e" and tgt[0] == -1:
                    e[(lvl, k)] = {b: row_quot[j][b] for b in bulk.level(i, j)}
                elif kind == "d" and tgt[1] == -1:
                    d[(lvl, k)] = {b: col_quot[i][b] for b in bulk.level(i, j)}
                else:
                    store = {"e": e, "t": t, "d": d, "s": s}[kind]
                    store[(lvl, k)] = dict(getattr(bulk, kind)[(lvl, k)])
            elif j == -1:  # augmentation column sources
                if kind == "e":
                    table = {}
                    for z in levels[lvl]:
                        img = bulk.e[((i, 0), k)][rep_col(i, z)]
                        table[z] = col_quot[i - 1][img] if i >= 2 else d0aug0[img]
                    e[(lvl, k)] = table
                elif kind == "t":
                    t[(lvl, k)] = {
                        z: col_quot[i + 1][bulk.t[((i, 0), k)][rep_col(i, z)]]
                        for z in levels[lvl]
                    }
                elif kind == "ssub":
                    ssub[lvl] = {z: saug(i, z) for z in levels[lvl]}
                elif kind == "f":
                    if i == 0:
                        f[lvl] = {c: row_quot[0][A.pointing[c]] for c in levels[lvl]}
                    else:
                        f[lvl] = {
                            z: bulk.e[((i, 0), i)][saug(i, z)] for z in levels[lvl]
                        }
            else:  # augmentation row sources
                if kind == "d":
                    d[(lvl, k)] = {
                        z: row_quot[j - 1][bulk.d[((0, j), k)][z]] for z in levels[lvl]
                    }
                elif kind == "s":
                    s[(lvl, k)] = {
                        z: row_quot[j + 1][bulk.s[((0, j), k)][z]] for z in levels[lvl]
                    }

    t_split = {}
    if tcol is not None:
        for j in sorted(tcol):
            for i in sorted(tcol[j]):
                if (i, j) in levels and (i + 1, j) in levels:
                    t_split[(i, j)] = dict(tcol[j][i])
        for j in range(TD + 1):
            t_split[(-1, j)] = {
                z: bulk.e[((1, j), 0)][tcol[j][0][z]] for z in row_classes[j]
            }

    B = DSet(TD, levels, e, t, d, s, f, ssub, t_split=t_split)
    rep = validate(B, "extension")
    return B, rep


def ts_compat(B: DSet) -> CheckReport:
    """The key splitting compatibility: the top degeneracy and the top
    splitting agree after the bottom splitting, including on the
    augmentation column."""
    witnesses = []
    checked = 0
    t_split = B.t_split or _derived_t_split(B)
    if t_split is None:
        return CheckReport.precondition_failure("ts_compat", "no top splittings available")
    for (i, j) in sorted(B.ssub, key=lambda lv: (lv[0] + 1 + lv[1], lv)):
        if i < 0:
            continue
        mid = (i, j + 1)
        if mid not in t_split or ((mid, i) not in B.t):
            continue
        for b in B.level(i, j):
            checked += 1
            sb = B.ssub[(i, j)][b]
            if B.t[(mid, i)][sb] != t_split[mid][sb]:
                witnesses.append(Witness(f"ts@({i},{j})", "t_top s# = t# s#", (b,)))
    return CheckReport.from_witnesses("ts_compat", witnesses, checked)


def _derived_t_split(B: DSet):
    """Top splittings t# = f^{-1} s_0 from inverted abacus maps."""
    if not has_invertible_abacus(B).passed:
        return None
    inv = {lvl: {v: k for k, v in tab.items()} for lvl, tab in B.f.items()}
    out = {}
    for (i, j) in B.levels:
        up = (i + 1, j)
        if up not in inv:
            continue
        if j >= 0:
            s0 = B.s.get(((i, j), 0))
            if s0 is not None:
                out[(i, j)] = {b: inv[up][s0[b]] for b in B.level(i, j)}
        else:
            sec = B.ssub.get((i, j))
            if sec is not None:
                out[(i, j)] = {b: inv[up][sec[b]] for b in B.level(i, j)}
    return out


def invertibility_pair_check(B: DSet) -> CheckReport:
    """g = d_bot t# inverts f = e_top s# wherever both splittings exist."""
    witnesses = []
    checked = 0
    t_split = B.t_split or _derived_t_split(B)
    if not t_split:
        return CheckReport.precondition_failure("invertibility_pair", "no top splittings")
    for (i, j), ftab in sorted(B.f.items(), key=lambda kv: (kv[0][0] + 1 + kv[0][1], kv[0])):
        tgt = (i - 1, j + 1)
        d_key = ((i, j + 1), 0)
        if tgt not in t_split or d_key not in B.d:
            continue
        g = {y: B.d[d_key][t_split[tgt][y]] for y in B.level(*tgt)}
        for b in B.level(i, j):
            checked += 1
            if g[ftab[b]] != b:
                witnesses.append(Witness(f"gf@({i},{j})", "d_bot t# f = id", (b,)))
        for y in B.level(*tgt):
            checked += 1
            if ftab[g[y]] != y:
                witnesses.append(Witness(f"fg@({i},{j})", "f d_bot t# = id", (y,)))
    return CheckReport.from_witnesses("invertibility_pair", witnesses, checked)


# ---------------------------------------------------------------------------
# The cocartesian correspondence over the arrow


def build_M(B: DSet):
    """Package the slice-shaped levels as one simplicial set over the arrow.

    Level n is the disjoint union of the levels of total degree n, with
    faces the vertical ones below the marker and horizontal above; the
    projection lands in the nerve of the arrow.  Returns (M, proj SMap).
    """
    T = B.trunc
    levels = {n: _sorted_ids(
        ((i, j), x)
        for (i, j) in B.levels
        if i + 1 + j == n
        for x in B.level(i, j)
    ) for n in range(T + 1)}
    faces = {}
    degens = {}
    for n in range(1, T + 1):
        for k in range(n + 1):
            table = {}
            for ((i, j), x) in levels[n]:
                if k <= i:
                    tgt, y = B.act("e", k, (i, j), x)
                else:
                    tgt, y = B.act("d", k - i - 1, (i, j), x)
                table[((i, j), x)] = (tgt, y)
            faces[(n, k)] = table
    for n in range(T):
        for k in range(n + 1):
            table = {}
            for ((i, j), x) in levels[n]:
                if k <= i:
                    tgt, y = B.act("t", k, (i, j), x)
                else:
                    tgt, y = B.act("s", k - i - 1, (i, j), x)
                table[((i, j), x)] = (tgt, y)
            degens[(n, k)] = table
    M = TruncSSet(T, levels, faces, degens)
    arrow = nerve(chain_poset(1), T)
    proj_levels = {}
    for n in range(T + 1):
        table = {}
        for ((i, j), x) in levels[n]:
            if n == 0:
                table[((i, j), x)] = 0 if j == -1 else 1
            elif j == -1:
                table[((i, j), x)] = ((0, 0),) * n
            elif i == -1:
                table[((i, j), x)] = ((1, 1),) * n
            else:
                table[((i, j), x)] = ((0, 0),) * i + ((0, 1),) + ((1, 1),) * j
        proj_levels[n] = table
    return M, SMap(M, arrow, proj_levels)


def extract_from_M(M: TruncSSet, proj: SMap) -> dict:
    """Recover the slice-shaped levels from the fibers of the projection."""
    T = M.trunc
    out_levels = {}
    for n in range(T + 1):
        for m in M.level(n):
            z = proj.at(n, m)
            if n == 0:
                lvl = (0, -1) if z == 0 else (-1, 0)
            else:
                zeros = sum(1 for c in z if c == (0, 0))
                ones = sum(1 for c in z if c == (1, 1))
                cross = sum(1 for c in z if c == (0, 1))
                lvl = (zeros, n - 1 - zeros) if cross else ((n, -1) if ones == 0 else (-1, n))
            out_levels.setdefault(lvl, []).append(m)
    return {lvl: _sorted_ids(xs) for lvl, xs in out_levels.items()}


def m_2segal_dictionary(F: SMap) -> CheckReport:
    """Both sides of the correspondence computed independently must agree:
    the packaged total space is 2-Segal exactly when source and target are
    2-Segal and the map is relatively upper 2-Segal."""
    conds = dictionary_conditions(F)
    lhs = all(r.passed for r in conds.values())
    B = q_lower_star(F)
    M, proj = build_M(B)
    rhs_rep = is_2segal(M, "both", "m-total-2segal")
    rhs = rhs_rep.passed
    witnesses = []
    if lhs != rhs:
        witnesses.append(
            Witness("m_2segal_dictionary",
                    "conditions on F match 2-Segal total space",
                    (f"conditions={lhs}", f"total={rhs}"))
        )
    checked = rhs_rep.checked + sum(r.checked for r in conds.values())
    return CheckReport.from_witnesses("m_2segal_dictionary", witnesses, checked)


# ---------------------------------------------------------------------------
# Comparison helpers


def dset_iso_report(B1: DSet, B2: DSet, maps: dict, name: str = "dset_iso") -> CheckReport:
    """Levelwise bijections commuting with every stored action of B1."""
    witnesses = []
    checked = 0
    T = min(B1.trunc, B2.trunc)
    for lvl in dset_levels(T, with_aug_row=B1.has_aug_row() and B2.has_aug_row()):
        m = maps.get(lvl)
        checked += 1
        if m is None or set(m) != set(B1.level(*lvl)) or sorted(
            map(idkey, m.values())
        ) != sorted(map(idkey, B2.level(*lvl))):
            witnesses.append(Witness(f"level@{lvl}", "not a bijection", (lvl,)))
    if witnesses:
        return CheckReport.from_witnesses(name, witnesses, checked)
    for lvl in dset_levels(T, with_aug_row=B1.has_aug_row() and B2.has_aug_row()):
        i, j = lvl
        for kind, k, tgt in dset_action_ranges(i, j, T):
            if tgt[0] == -1 and not (B1.has_aug_row() and B2.has_aug_row()):
                continue
            for x in B1.level(i, j):
                checked += 1
                _, y1 = B1.act(kind, k, lvl, x)
                _, y2 = B2.act(kind, k, lvl, maps[lvl][x])
                if maps[tgt][y1] != y2:
                    witnesses.append(
                        Witness(f"{kind}{'' if k is None else k}@{lvl}", "iso does not commute", (x,))
                    )
    return CheckReport.from_witnesses(name, witnesses, checked)


def sigmaset_equal(A1: SigmaSet, A2: SigmaSet) -> bool:
    T = min(A1.trunc, A2.trunc)
    for (i, j) in A1.bulk.levels:
        if i + j <= T and A1.bulk.level(i, j) != A2.bulk.level(i, j):
            return False
    if A1.point_set != A2.point_set or A1.pointing != A2.pointing:
        return False
    for kind in ("e", "t", "d", "s"):
        t1, t2 = getattr(A1.bulk, kind), getattr(A2.bulk, kind)
        for key, table in t1.items():
            (i, j), k = key
            if i + j <= T - (1 if kind in ("t", "s") else 0) and key in t2:
                if table != t2[key]:
                    return False
    return True


def collapse_aug_row(B: DSet, point="*") -> DSet:
    """A validated abacus presheaf failing the cartesian-abacus condition:
    the augmentation row is collapsed to a point."""
    levels = dict(B.levels)
    e = dict(B.e)
    t = dict(B.t)
    d = dict(B.d)
    s = dict(B.s)
    f = dict(B.f)
    ssub = dict(B.ssub)
    for lvl in list(levels):
        i, j = lvl
        if i == -1:
            levels[lvl] = (point,)
    for key in list(d):
        (lvl, k) = key
        if lvl[0] == -1:
            d[key] = {point: point}
    for key in list(s):
        (lvl, k) = key
        if lvl[0] == -1:
            s[key] = {point: point}
    for key in list(e):
        (lvl, k) = key
        if lvl[0] == 0:
            e[key] = {x: point for x in B.level(*lvl)}
    for lvl in list(f):
        if lvl[0] == 0:
            f[lvl] = {x: point for x in B.level(*lvl)}
    return DSet(B.trunc, levels, e, t, d, s, f, ssub)


def restrict(functor, P):
    """Restrict a presheaf along one of the structural functors.

    Tags: "q" (abacus presheaf to the simplicial map between its
    augmentations), "j" (to the pointing shape), "r" (simplicial set to
    its augmented total decalage), "p" (to the pointed total decalage),
    "h" (split augmented to pointed), "bulk" (forget the abacus actions,
    keeping the slice-shaped levels and actions).
    """
    from .abacus import IndexFunctor
    from .decalage import h_upper

    tag = functor.tag if isinstance(functor, IndexFunctor) else functor
    if tag == "q":
        return q_upper_star(P)
    if tag == "j":
        return j_upper_star(P)
    if tag == "r":
        return r_star(P)
    if tag == "p":
        return p_star_tot(P)
    if tag == "h":
        return h_upper(P)
    if tag == "bulk":
        return {"levels": dict(P.levels), "e": dict(P.e), "t": dict(P.t),
                "d": dict(P.d), "s": dict(P.s)}
    raise ValueError(f"unknown functor tag {tag!r}")


def drop_aug_row(B: DSet) -> DSet:
    """The restriction away from the augmentation row."""
    levels = {lv: xs for lv, xs in B.levels.items() if lv[0] >= 0}
    e = {key: v for key, v in B.e.items() if key[0][0] >= 1}
    t = {key: v for key, v in B.t.items() if key[0][0] >= 0}
    d = {key: v for key, v in B.d.items() if key[0][0] >= 0}
    s = {key: v for key, v in B.s.items() if key[0][0] >= 0}
    f = {lv: v for lv, v in B.f.items() if lv[0] >= 1}
    ssub = {lv: v for lv, v in B.ssub.items() if lv[0] >= 0}
    tsp = {lv: v for lv, v in (B.t_split or {}).items() if lv[0] >= 0}
    return DSet(B.trunc, levels, e, t, d, s, f, ssub, t_split=tsp)


def tot_roundtrip_iso(X: TruncSSet, B_ext: DSet) -> dict:
    """The canonical level maps from the extension of the pointed total
    decalage onto the Kan extension of the identity.

    Bulk elements pair with their top-face projections; augmentation
    classes map through the face their representatives were split from.
    """
    TD = B_ext.trunc
    maps = {}
    for (i, j) in dset_levels(TD):
        if i >= 0 and j >= 0:
            table = {}
            for u in B_ext.level(i, j):
                cur, m = u, i + 1 + j
                for _ in range(j + 1):
                    cur = X.face(m, m, cur)
                    m -= 1
                table[u] = (cur, u)
            maps[(i, j)] = table
        elif j == -1 and i == 0:
            maps[(0, -1)] = {c: c for c in B_ext.level(0, -1)}
        elif j == -1:
            maps[(i, -1)] = {z: X.face(i + 1, i + 1, z) for z in B_ext.level(i, -1)}
        else:
            maps[(-1, j)] = {z: X.face(j + 1, 0, z) for z in B_ext.level(-1, j)}
    return maps


def boors_roundtrip(X: TruncSSet) -> dict:
    """The full equivalence round trip on a single simplicial set.

    Returns named CheckReports: axioms of the pointed total decalage,
    validity of the extension, invertibility, splitting compatibility,
    exact recovery under the pointing restriction, and the canonical
    isomorphism with the Kan extension of the identity.
    """
    from .presheaf import identity_smap

    out = {}
    A = p_star_tot(X)
    out["axioms"] = boors_axioms(A)
    B, rep = extend_sigma_to_d(A)
    out["extension_valid"] = rep
    if B is None:
        return out
    out["invertible_abacus"] = has_invertible_abacus(B)
    out["ts_compat"] = ts_compat(B)
    out["invertibility_pair"] = invertibility_pair_check(B)
    recovered = sigmaset_equal(j_upper_star(B), A)
    out["pointing_restriction"] = CheckReport(
        "pointing_restriction", recovered,
        [] if recovered else [Witness("j*", "restriction differs from input", ())],
        1,
    )
    Q = sub_trunc_dset(q_lower_star(identity_smap(X)), B.trunc)
    out["iso_with_kan"] = dset_iso_report(B, Q, tot_roundtrip_iso(X, B), "iso_with_kan")
    return out


def half_roundtrip(F: SMap) -> dict:
    """The half-axiom equivalence round trip starting from a simplicial map.

    The pointed restriction of its Kan extension satisfies the horizontal
    half of the axioms; extending without the augmentation row must land
    back on the Kan extension away from that row.
    """
    out = {}
    B = q_lower_star(F)
    A = j_upper_star(B)
    out["half_axioms"] = boors_axioms(A, half=True)
    out["full_axioms"] = boors_axioms(A)
    Bh, rep = extend_sigma_to_d(A, half=True)
    out["extension_valid"] = rep
    if Bh is None:
        return out
    recovered = sigmaset_equal(j_upper_star_no_row(Bh), A)
    out["pointing_restriction"] = CheckReport(
        "pointing_restriction", recovered,
        [] if recovered else [Witness("restrict", "restriction differs from input", ())],
        1,
    )
    Q = drop_aug_row(sub_trunc_dset(B, Bh.trunc))
    maps = {}
    for (i, j) in dset_levels(Bh.trunc, with_aug_row=False):
        if j >= 0 or i == 0:
            maps[(i, j)] = {x: x for x in Bh.level(i, j)}
        else:
            maps[(i, -1)] = {z: B.d[((i, 0), 0)][z] for z in Bh.level(i, -1)}
    out["iso_with_kan"] = dset_iso_report(Bh, Q, maps, "iso_with_kan")
    return out


def j_upper_star_no_row(B: DSet) -> SigmaSet:
    """The pointing restriction of a presheaf without an augmentation row."""
    return j_upper_star(B)


def sub_trunc_dset(B: DSet, T: int) -> DSet:
    keep = set(dset_levels(T, with_aug_row=B.has_aug_row()))
    levels = {lv: xs for lv, xs in B.levels.items() if lv in keep}
    e = {key: v for key, v in B.e.items() if key[0] in keep and (key[0][0] - 1, key[0][1]) in keep}
    t = {key: v for key, v in B.t.items() if key[0] in keep and (key[0][0] + 1, key[0][1]) in keep}
    d = {key: v for key, v in B.d.items() if key[0] in keep and (key[0][0], key[0][1] - 1) in keep}
    s = {key: v for key, v in B.s.items() if key[0] in keep and (key[0][0], key[0][1] + 1) in keep}
    f = {lv: v for lv, v in B.f.items() if lv in keep and (lv[0] - 1, lv[1] + 1) in keep}
    ssub = {lv: v for lv, v in B.ssub.items() if lv in keep and (lv[0], lv[1] + 1) in keep}
    tsp = {lv: v for lv, v in (B.t_split or {}).items() if lv in keep and (lv[0] + 1, lv[1]) in keep}
    return DSet(T, levels, e, t, d, s, f, ssub, t_split=tsp)
