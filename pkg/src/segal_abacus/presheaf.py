"""Truncated finite Set-valued presheaves and their checkers.

Levels hold opaque element ids (strings, or tuples for constructed sets)
and actions are stored as dicts, one per generator per source level.
Presheaves are immutable by convention after construction: nothing here
mutates them, and all checkers are read-only.

Every checker reports relative to the truncation: verdicts are "pass up
to T", with the checked instances counted, never silently vacuous.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import abacus
from .reports import CheckReport, Witness
from .simplex import MonotoneMap, epi_mono_factor


def fmt_id(x) -> str:
    """Canonical string form of an element id (tuples nest with parens)."""
    if isinstance(x, tuple):
        return "(" + ",".join(fmt_id(v) for v in x) + ")"
    return str(x)


def idkey(x) -> str:
    return fmt_id(x)


def _sorted_ids(xs) -> tuple:
    return tuple(sorted(xs, key=idkey))


# ---------------------------------------------------------------------------
# Simplicial sets


class TruncSSet:
    """A finite simplicial set truncated at degree T.

    ``levels[n]`` lists the n-simplices; ``faces[(n, k)]`` is the action
    of d_k : X_n -> X_{n-1} and ``degens[(n, k)]`` of s_k : X_n -> X_{n+1}.
    """

    def __init__(self, trunc: int, levels: dict, faces: dict, degens: dict):
        self.trunc = trunc
        self.levels = {n: _sorted_ids(xs) for n, xs in levels.items()}
        self.faces = faces
        self.degens = degens

    def level(self, n: int) -> tuple:
        return self.levels.get(n, ())

    def face(self, n: int, k: int, x):
        return self.faces[(n, k)][x]

    def deg(self, n: int, k: int, x):
        return self.degens[(n, k)][x]

    def act(self, f: MonotoneMap, x):
        """Contravariant action of an arbitrary monotone map.

        ``f : [m] -> [n]`` acts on an n-simplex and returns an m-simplex,
        by the canonical face-then-degeneracy decomposition.
        """
        n = f.cod_n
        epi, mono = epi_mono_factor(f)
        for _, i in reversed(mono.tokens):  # faces, largest index first
            x = self.face(n, i, x)
            n -= 1
        for _, j in reversed(epi.tokens):  # degeneracies, smallest index first
            x = self.deg(n, j, x)
            n += 1
        return x

    def __repr__(self):
        sizes = {n: len(xs) for n, xs in sorted(self.levels.items())}
        return f"TruncSSet(T={self.trunc}, sizes={sizes})"


@dataclass
class SMap:
    """A simplicial map: per-level functions between same-truncation sets."""

    source: TruncSSet
    target: TruncSSet
    levels: dict

    def at(self, n: int, x):
        return self.levels[n][x]


def empty_sset(trunc: int) -> TruncSSet:
    levels = {n: () for n in range(trunc + 1)}
    faces = {(n, k): {} for n in range(1, trunc + 1) for k in range(n + 1)}
    degens = {(n, k): {} for n in range(trunc) for k in range(n + 1)}
    return TruncSSet(trunc, levels, faces, degens)


def constant_sset(elements, trunc: int) -> TruncSSet:
    """The constant (equivalently discrete) simplicial set on a finite set."""
    elems = _sorted_ids(elements)
    levels = {n: elems for n in range(trunc + 1)}
    ident = {x: x for x in elems}
    faces = {(n, k): dict(ident) for n in range(1, trunc + 1) for k in range(n + 1)}
    degens = {(n, k): dict(ident) for n in range(trunc) for k in range(n + 1)}
    return TruncSSet(trunc, levels, faces, degens)


def identity_smap(X: TruncSSet) -> SMap:
    return SMap(X, X, {n: {x: x for x in X.level(n)} for n in X.levels})


def constant_smap_to(X: TruncSSet, C: TruncSSet, point_map: dict) -> SMap:
    """The map to a constant simplicial set determined degreewise."""
    return SMap(X, C, point_map)


def sub_trunc(X: TruncSSet, T: int) -> TruncSSet:
    levels = {n: xs for n, xs in X.levels.items() if n <= T}
    faces = {(n, k): v for (n, k), v in X.faces.items() if n <= T}
    degens = {(n, k): v for (n, k), v in X.degens.items() if n < T}
    return TruncSSet(T, levels, faces, degens)


def validate_sset(X: TruncSSet, name: str = "sset") -> CheckReport:
    """Well-formedness plus all simplicial identities within truncation."""
    witnesses = []
    checked = 0
    for n in range(X.trunc + 1):
        if n not in X.levels:
            witnesses.append(Witness(f"level@{n}", "level missing", ()))
    for n in range(1, X.trunc + 1):
        for k in range(n + 1):
            checked += _check_total(X.faces.get((n, k)), X.level(n), X.level(n - 1),
                                    f"d{k}@{n}", witnesses)
    for n in range(X.trunc):
        for k in range(n + 1):
            checked += _check_total(X.degens.get((n, k)), X.level(n), X.level(n + 1),
                                    f"s{k}@{n}", witnesses)
    if witnesses:
        return CheckReport.from_witnesses(name, witnesses, checked)
    for n in range(2, X.trunc + 1):
        for j in range(n + 1):
            for i in range(j):
                for x in X.level(n):
                    checked += 1
                    if X.face(n - 1, i, X.face(n, j, x)) != X.face(n - 1, j - 1, X.face(n, i, x)):
                        witnesses.append(Witness(f"dd(i={i},j={j})@{n}", "d_i d_j = d_(j-1) d_i", (x,)))
    for n in range(X.trunc - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for x in X.level(n):
                    checked += 1
                    if X.deg(n + 1, j + 1, X.deg(n, i, x)) != X.deg(n + 1, i, X.deg(n, j, x)):
                        witnesses.append(Witness(f"ss(i={i},j={j})@{n}", "s_j+1 s_i = s_i s_j", (x,)))
    for n in range(X.trunc):
        for j in range(n + 1):
            for i in range(n + 2):
                for x in X.level(n):
                    checked += 1
                    y = X.face(n + 1, i, X.deg(n, j, x))
                    if i < j:
                        ok = n >= 1 and y == X.deg(n - 1, j - 1, X.face(n, i, x))
                    elif i in (j, j + 1):
                        ok = y == x
                    else:
                        ok = n >= 1 and y == X.deg(n - 1, j, X.face(n, i - 1, x))
                    if i in (j, j + 1) or n >= 1:
                        if not ok:
                            witnesses.append(Witness(f"ds(i={i},j={j})@{n}", "face-degeneracy identity", (x,)))
    return CheckReport.from_witnesses(name, witnesses, checked)


def _check_total(table, src, tgt, label, witnesses) -> int:
    if table is None:
        witnesses.append(Witness(label, "action table missing", ()))
        return 0
    tgt_set = set(tgt)
    n = 0
    for x in src:
        n += 1
        if x not in table:
            witnesses.append(Witness(label, "action undefined", (x,)))
        elif table[x] not in tgt_set:
            witnesses.append(Witness(label, "action leaves level", (x, table[x])))
    return n


def validate_smap(F: SMap, name: str = "smap") -> CheckReport:
    """Naturality of a simplicial map against every stored generator."""
    X, Y = F.source, F.target
    witnesses = []
    checked = 0
    for n in range(min(X.trunc, Y.trunc) + 1):
        table = F.levels.get(n)
        checked += _check_total(table, X.level(n), Y.level(n), f"F@{n}", witnesses)
    if witnesses:
        return CheckReport.from_witnesses(name, witnesses, checked)
    for n in range(1, min(X.trunc, Y.trunc) + 1):
        for k in range(n + 1):
            for x in X.level(n):
                checked += 1
                if F.at(n - 1, X.face(n, k, x)) != Y.face(n, k, F.at(n, x)):
                    witnesses.append(Witness(f"nat-d{k}@{n}", "F d_k = d_k F", (x,)))
    for n in range(min(X.trunc, Y.trunc)):
        for k in range(n + 1):
            for x in X.level(n):
                checked += 1
                if F.at(n + 1, X.deg(n, k, x)) != Y.deg(n, k, F.at(n, x)):
                    witnesses.append(Witness(f"nat-s{k}@{n}", "F s_k = s_k F", (x,)))
    return CheckReport.from_witnesses(name, witnesses, checked)


# ---------------------------------------------------------------------------
# Pullbacks of finite sets


def pullback_sets(f: dict, g: dict, a_elems, b_elems):
    """The strict pullback of f : A -> C against g : B -> C.

    Returns (pairs, proj_a, proj_b) with canonical tuple ids.
    """
    pairs = _sorted_ids((a, b) for a in a_elems for b in b_elems if f[a] == g[b])
    proj_a = {p: p[0] for p in pairs}
    proj_b = {p: p[1] for p in pairs}
    return pairs, proj_a, proj_b


@dataclass(frozen=True)
class Square:
    """A commuting square candidate, checked via its comparison map.

    ``p -> a -> c`` and ``p -> b -> c``; it is a pullback when
    ``p -> {(a, b) : a_to_c(a) = b_to_c(b)}`` is a bijection.
    """

    name: str
    p_elems: tuple
    a_elems: tuple
    b_elems: tuple
    p_to_a: dict
    p_to_b: dict
    a_to_c: dict
    b_to_c: dict


def is_pullback(sq: Square) -> CheckReport:
    witnesses = []
    checked = 0
    for p in sq.p_elems:
        checked += 1
        if sq.a_to_c[sq.p_to_a[p]] != sq.b_to_c[sq.p_to_b[p]]:
            witnesses.append(Witness(sq.name, "square does not commute", (p,)))
    if witnesses:
        return CheckReport.from_witnesses("is_pullback", witnesses, checked)
    want = {(a, b) for a in sq.a_elems for b in sq.b_elems if sq.a_to_c[a] == sq.b_to_c[b]}
    seen = {}
    for p in sq.p_elems:
        checked += 1
        im = (sq.p_to_a[p], sq.p_to_b[p])
        if im in seen:
            witnesses.append(Witness(sq.name, "comparison not injective", (seen[im], p)))
        seen[im] = p
    for ab in sorted(want - set(seen), key=idkey):
        witnesses.append(Witness(sq.name, "comparison not surjective", ab))
    return CheckReport.from_witnesses("is_pullback", witnesses, checked or 1)


def pullback_universal_check(sq: Square, cone_sizes=(1, 2, 3)) -> bool:
    """Brute-force universal property over all cones from small index sets."""
    rep = is_pullback(sq)
    comparison_ok = rep.passed
    for size in cone_sizes:
        idx = tuple(range(size))
        for to_a in _all_functions(idx, sq.a_elems):
            for to_b in _all_functions(idx, sq.b_elems):
                if any(sq.a_to_c[to_a[i]] != sq.b_to_c[to_b[i]] for i in idx):
                    continue
                lifts = _cone_lifts(sq, idx, to_a, to_b)
                if len(lifts) != 1:
                    return False
    return comparison_ok


def _all_functions(dom, cod):
    if not cod:
        if dom:
            return
        yield {}
        return
    from itertools import product

    for vals in product(cod, repeat=len(dom)):
        yield dict(zip(dom, vals))


def _cone_lifts(sq: Square, idx, to_a, to_b):
    lifts = []
    by_image = {}
    for p in sq.p_elems:
        by_image.setdefault((sq.p_to_a[p], sq.p_to_b[p]), []).append(p)
    choices = [by_image.get((to_a[i], to_b[i]), []) for i in idx]
    from itertools import product

    for combo in product(*choices) if all(choices) else []:
        lifts.append(dict(zip(idx, combo)))
    if not all(choices):
        return []
    return lifts


# ---------------------------------------------------------------------------
# Cartesian-on-a-class checks for simplicial maps

OPERATOR_CLASSES = ("all", "d_bot", "d_top", "inner_faces", "degeneracies", "active")


def _class_operators(n: int, cls: str, for_faces: bool):
    if for_faces:
        if cls == "all":
            return range(n + 1)
        if cls == "d_bot":
            return [0]
        if cls == "d_top":
            return [n]
        if cls in ("inner_faces", "active"):
            return range(1, n)
        return []
    if cls in ("all", "degeneracies", "active"):
        return range(n + 1)
    return []


def cartesian_on(F: SMap, cls: str, name: str | None = None) -> CheckReport:
    """Check that F forms pullback squares with the chosen operator class."""
    if cls not in OPERATOR_CLASSES:
        raise ValueError(f"unknown operator class {cls!r}")
    X, Y = F.source, F.target
    T = min(X.trunc, Y.trunc)
    reports = []
    for n in range(1, T + 1):
        for k in _class_operators(n, cls, True):
            sq = Square(
                f"d{k}@{n}",
                X.level(n), X.level(n - 1), Y.level(n),
                X.faces[(n, k)], F.levels[n], F.levels[n - 1], Y.faces[(n, k)],
            )
            reports.append(is_pullback(sq))
    for n in range(T):
        for k in _class_operators(n, cls, False):
            sq = Square(
                f"s{k}@{n}",
                X.level(n), X.level(n + 1), Y.level(n),
                X.degens[(n, k)], F.levels[n], F.levels[n + 1], Y.degens[(n, k)],
            )
            reports.append(is_pullback(sq))
    return CheckReport.conjunction(name or f"cartesian_on[{cls}]", reports)


# ---------------------------------------------------------------------------
# Colimit in degree zero (the discrete geometric realization)


def colimit0(X: TruncSSet):
    """Coequalize d_0, d_1 : X_1 => X_0; returns (classes, augmentation).

    Classes are named by their minimal representative.
    """
    if X.trunc < 1:
        raise ValueError("colimit0 needs at least one level above zero")
    parent = {x: x for x in X.level(0)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in X.level(1):
        a, b = find(X.face(1, 0, e)), find(X.face(1, 1, e))
        if a != b:
            lo, hi = sorted((a, b), key=idkey)
            parent[hi] = lo
    members: dict = {}
    for x in X.level(0):
        members.setdefault(find(x), []).append(x)
    reps = {root: min(ms, key=idkey) for root, ms in members.items()}
    aug = {x: reps[find(x)] for x in X.level(0)}
    classes = _sorted_ids(reps.values())
    return classes, aug


# ---------------------------------------------------------------------------
# Bisimplicial sets


class BiSSet:
    """A bisimplicial set truncated at total degree i + j <= T.

    ``e``/``t`` act vertically (first index), ``d``/``s`` horizontally.
    Action tables are keyed ``((i, j), k)`` by source level.
    """

    def __init__(self, trunc: int, levels: dict, e: dict, t: dict, d: dict, s: dict):
        self.trunc = trunc
        self.levels = {lv: _sorted_ids(xs) for lv, xs in levels.items()}
        self.e, self.t, self.d, self.s = e, t, d, s

    def level(self, i: int, j: int) -> tuple:
        return self.levels.get((i, j), ())

    def bulk_levels(self):
        return sorted(self.levels, key=lambda ij: (ij[0] + ij[1], ij))

    def __repr__(self):
        return f"BiSSet(T={self.trunc}, levels={len(self.levels)})"


def bisset_action_ranges(i: int, j: int, trunc: int):
    """Yield (kind, k, target) for the actions out of bulk level (i, j)."""
    if i >= 1:
        for k in range(i + 1):
            yield ("e", k, (i - 1, j))
    if j >= 1:
        for k in range(j + 1):
            yield ("d", k, (i, j - 1))
    if i + j < trunc:
        for k in range(i + 1):
            yield ("t", k, (i + 1, j))
        for k in range(j + 1):
            yield ("s", k, (i, j + 1))


def row_sset(B, i: int) -> TruncSSet:
    """Bulk row i as a simplicial set (horizontal structure)."""
    T = _row_trunc(B, i)
    levels = {n: B.level(i, n) for n in range(T + 1)}
    faces = {(n, k): B.d[((i, n), k)] for n in range(1, T + 1) for k in range(n + 1)}
    degens = {(n, k): B.s[((i, n), k)] for n in range(T) for k in range(n + 1)}
    return TruncSSet(T, levels, faces, degens)


def col_sset(B, j: int) -> TruncSSet:
    """Bulk column j as a simplicial set (vertical structure)."""
    T = _col_trunc(B, j)
    levels = {n: B.level(n, j) for n in range(T + 1)}
    faces = {(n, k): B.e[((n, j), k)] for n in range(1, T + 1) for k in range(n + 1)}
    degens = {(n, k): B.t[((n, j), k)] for n in range(T) for k in range(n + 1)}
    return TruncSSet(T, levels, faces, degens)


def _row_trunc(B, i: int) -> int:
    if isinstance(B, DSet):
        return B.trunc - i - 1
    return B.trunc - i


def _col_trunc(B, j: int) -> int:
    if isinstance(B, DSet):
        return B.trunc - j - 1
    return B.trunc - j


def validate_bisset(B: BiSSet, name: str = "bisset") -> CheckReport:
    witnesses = []
    checked = 0
    for (i, j), xs in sorted(B.levels.items(), key=lambda kv: kv[0]):
        for kind, k, tgt in bisset_action_ranges(i, j, B.trunc):
            table = getattr(B, kind).get(((i, j), k))
            checked += _check_total(table, xs, B.level(*tgt), f"{kind}{k}@({i},{j})", witnesses)
    if witnesses:
        return CheckReport.from_witnesses(name, witnesses, checked)
    for i in range(B.trunc + 1):
        rep = validate_sset(row_sset(B, i), f"row{i}")
        checked += rep.checked
        witnesses += [Witness(f"row{i}:{w.site}", w.equation, w.offenders) for w in rep.witnesses]
    for j in range(B.trunc + 1):
        rep = validate_sset(col_sset(B, j), f"col{j}")
        checked += rep.checked
        witnesses += [Witness(f"col{j}:{w.site}", w.equation, w.offenders) for w in rep.witnesses]
    # vertical operators commute with horizontal ones
    for (i, j), xs in sorted(B.levels.items(), key=lambda kv: kv[0]):
        for vkind, vk, vtgt in bisset_action_ranges(i, j, B.trunc):
            if vkind not in ("e", "t"):
                continue
            for hkind, hk, htgt in bisset_action_ranges(i, j, B.trunc):
                if hkind not in ("d", "s"):
                    continue
                corner = (vtgt[0], htgt[1])
                if corner not in B.levels or (vtgt[0] + htgt[1]) > B.trunc:
                    continue
                vt = getattr(B, vkind)
                ht = getattr(B, hkind)
                if ((vtgt), hk) not in ht or ((htgt), vk) not in vt:
                    continue
                for x in xs:
                    checked += 1
                    if ht[(vtgt, hk)][vt[((i, j), vk)][x]] != vt[(htgt, vk)][ht[((i, j), hk)][x]]:
                        witnesses.append(
                            Witness(f"{vkind}{vk}.{hkind}{hk}@({i},{j})", "directions commute", (x,))
                        )
    return CheckReport.from_witnesses(name, witnesses, checked)


# ---------------------------------------------------------------------------
# Presheaves on the abacus category


class DSet:
    """A presheaf on the abacus category, truncated at i + 1 + j <= T.

    Levels exist for i, j >= -1 (not both).  Besides the bisimplicial
    actions it stores the abacus actions ``f : B(i,j) -> B(i-1,j+1)`` and
    the splittings ``ssub : B(i,j) -> B(i,j+1)`` for i >= 0, keyed by
    source level.
    """

    def __init__(self, trunc, levels, e, t, d, s, f, ssub, t_split=None):
        self.trunc = trunc
        self.levels = {lv: _sorted_ids(xs) for lv, xs in levels.items()}
        self.e, self.t, self.d, self.s = e, t, d, s
        self.f, self.ssub = f, ssub
        # vertical top splittings, populated by constructions that have them
        self.t_split = t_split or {}

    def level(self, i: int, j: int) -> tuple:
        return self.levels.get((i, j), ())

    def has_aug_row(self) -> bool:
        return any(i == -1 for (i, j) in self.levels)

    def act(self, kind: str, k, lvl: tuple, x):
        """Apply one generator action from source level ``lvl``; returns
        (target_level, image)."""
        i, j = lvl
        if kind == "e":
            return (i - 1, j), self.e[(lvl, k)][x]
        if kind == "t":
            return (i + 1, j), self.t[(lvl, k)][x]
        if kind == "d":
            return (i, j - 1), self.d[(lvl, k)][x]
        if kind == "s":
            return (i, j + 1), self.s[(lvl, k)][x]
        if kind == "f":
            return (i - 1, j + 1), self.f[lvl][x]
        if kind == "ssub":
            return (i, j + 1), self.ssub[lvl][x]
        raise ValueError(kind)

    def __repr__(self):
        return f"DSet(T={self.trunc}, levels={len(self.levels)})"


def dset_levels(trunc: int, with_aug_row: bool = True):
    out = []
    for d in range(trunc + 1):
        for i in range(-1 if with_aug_row else 0, d + 2):
            j = d - 1 - i
            if j >= -1 and not (i == -1 and j == -1) and i >= (-1 if with_aug_row else 0):
                out.append((i, j))
    return sorted(out, key=lambda ij: (ij[0] + 1 + ij[1], ij))


def dset_action_ranges(i: int, j: int, trunc: int):
    """Yield (kind, k, target) for every action required out of level (i, j)."""
    deg = i + 1 + j
    if i >= 0 and not (i - 1 == -1 and j == -1):
        for k in range(i + 1):
            yield ("e", k, (i - 1, j))
    if j >= 0 and not (i == -1 and j - 1 == -1):
        for k in range(j + 1):
            yield ("d", k, (i, j - 1))
    if deg < trunc:
        if i >= 0:
            for k in range(i + 1):
                yield ("t", k, (i + 1, j))
        if j >= 0:
            for k in range(j + 1):
                yield ("s", k, (i, j + 1))
        if i >= 0:
            yield ("ssub", None, (i, j + 1))
    if i >= 0:
        yield ("f", None, (i - 1, j + 1))


def _action_table(B: DSet, kind: str, k, lvl):
    if kind == "f":
        return B.f.get(lvl)
    if kind == "ssub":
        return B.ssub.get(lvl)
    return getattr(B, kind).get((lvl, k))


def validate_dset(B: DSet, name: str = "dset") -> CheckReport:
    """Well-formedness plus the full relation table of the abacus category,
    applied contravariantly to every element within truncation."""
    witnesses = []
    checked = 0
    with_aug = B.has_aug_row()
    expect = set(dset_levels(B.trunc, with_aug))
    for lvl in expect:
        if lvl not in B.levels:
            witnesses.append(Witness(f"level@{lvl}", "level missing", ()))
    for lvl in sorted(B.levels, key=lambda ij: (ij[0] + 1 + ij[1], ij)):
        i, j = lvl
        for kind, k, tgt in dset_action_ranges(i, j, B.trunc):
            if not with_aug and tgt[0] == -1:
                continue
            table = _action_table(B, kind, k, lvl)
            label = f"{kind}{'' if k is None else k}@({i},{j})"
            checked += _check_total(table, B.level(i, j), B.level(*tgt), label, witnesses)
    if witnesses:
        return CheckReport.from_witnesses(name, witnesses, checked)
    max_i = max((i for (i, j) in B.levels), default=-1)
    max_j = max((j for (i, j) in B.levels), default=-1)
    for rel_name, lhs, rhs in abacus.relation_instances(max_i, max_j):
        path_l = _word_levels(lhs)
        path_r = _word_levels(rhs)
        if path_l is None or path_r is None:
            continue
        if not with_aug and any(lv[0] == -1 for lv in path_l + path_r):
            continue
        if any(lv not in B.levels for lv in path_l + path_r):
            continue
        target = path_l[-1]
        assert target == path_r[-1]
        for x in B.level(*target):
            checked += 1
            if _act_word(B, lhs, x) != _act_word(B, rhs, x):
                witnesses.append(Witness(rel_name, f"{lhs} = {rhs}", (x,)))
    return CheckReport.from_witnesses(name, witnesses, checked)


def _word_levels(word):
    """Source-to-target object path of a generator word, or None if illegal."""
    try:
        cur = abacus.bead_identity(word.source)
        path = [(cur.tgt.i, cur.tgt.j)]
        for kind, k in word.tokens:
            cur = abacus.bead_compose(abacus.bead_of_generator(kind, k, cur.tgt), cur)
            path.append((cur.tgt.i, cur.tgt.j))
        return path
    except ValueError:
        return None


def _act_word(B: DSet, word, x):
    """Contravariant action of a generator word on an element of its target."""
    path = _word_levels(word)
    for idx in range(len(word.tokens) - 1, -1, -1):
        kind, k = word.tokens[idx]
        _, x = B.act(kind, k, path[idx + 1], x)
    return x


# ---------------------------------------------------------------------------
# Pointed bisimplicial sets


class SigmaSet:
    """A bisimplicial set with a pointing set mapping into level (0, 0)."""

    def __init__(self, bulk: BiSSet, point_set, pointing: dict):
        self.bulk = bulk
        self.point_set = _sorted_ids(point_set)
        self.pointing = pointing

    @property
    def trunc(self) -> int:
        return self.bulk.trunc

    def __repr__(self):
        return f"SigmaSet(T={self.trunc}, |point|={len(self.point_set)})"


def validate_sigmaset(A: SigmaSet, name: str = "sigmaset") -> CheckReport:
    rep = validate_bisset(A.bulk, name)
    witnesses = list(rep.witnesses)
    checked = rep.checked
    level00 = set(A.bulk.level(0, 0))
    for c in A.point_set:
        checked += 1
        if c not in A.pointing:
            witnesses.append(Witness("pointing", "pointing undefined", (c,)))
        elif A.pointing[c] not in level00:
            witnesses.append(Witness("pointing", "pointing leaves level (0,0)", (c,)))
    return CheckReport.from_witnesses(name, witnesses, checked)


def validate(P, name: str | None = None) -> CheckReport:
    """Validate any presheaf-like value against its index category."""
    if isinstance(P, TruncSSet):
        return validate_sset(P, name or "sset")
    if isinstance(P, SMap):
        return validate_smap(P, name or "smap")
    if isinstance(P, DSet):
        return validate_dset(P, name or "dset")
    if isinstance(P, BiSSet):
        return validate_bisset(P, name or "bisset")
    if isinstance(P, SigmaSet):
        return validate_sigmaset(P, name or "sigmaset")
    from .decalage import AugBottomSplitSSet, BottomSplitSSet, PointedSSet, validate_coalgebra, validate_pointed

    if isinstance(P, (BottomSplitSSet, AugBottomSplitSSet)):
        return validate_coalgebra(P, name or "split")
    if isinstance(P, PointedSSet):
        return validate_pointed(P, name or "pointed")
    raise TypeError(f"cannot validate {type(P).__name__}")


# ---------------------------------------------------------------------------
# Isomorphism checking


def iso_report_sset(X: TruncSSet, Y: TruncSSet, maps: dict, name: str = "iso") -> CheckReport:
    """Check that per-level maps form a bijective simplicial map X -> Y."""
    witnesses = []
    checked = 0
    T = min(X.trunc, Y.trunc)
    for n in range(T + 1):
        m = maps.get(n, {})
        checked += 1
        if sorted(map(idkey, m.values())) != sorted(map(idkey, Y.level(n))) or set(m) != set(X.level(n)):
            witnesses.append(Witness(f"level@{n}", "not a bijection", (len(X.level(n)), len(Y.level(n)))))
    if witnesses:
        return CheckReport.from_witnesses(name, witnesses, checked)
    F = SMap(sub_trunc(X, T), sub_trunc(Y, T), {n: maps[n] for n in range(T + 1)})
    nat = validate_smap(F, name)
    return CheckReport.conjunction(name, [nat])


def smap_equal(F: SMap, G: SMap) -> bool:
    T = min(F.source.trunc, G.source.trunc)
    return all(F.levels.get(n) == G.levels.get(n) for n in range(T + 1))
