"""Decidable map-classes and Segal-type conditions, with witnesses.

Left and right fibrations are cartesian on top (resp. bottom) faces;
culf maps are cartesian on the active operators, checked here on the
generating family of inner faces plus all degeneracies.  The Segal
condition is the d_0-against-d_top square family, and the 2-Segal
conditions are the Segal condition after decalage.
"""

from __future__ import annotations

from .decalage import dec
from .presheaf import (
    CheckReport,
    SMap,
    Square,
    TruncSSet,
    cartesian_on,
    col_sset,
    is_pullback,
    row_sset,
)

__all__ = [
    "cartesian_on",
    "is_left_fibration",
    "is_right_fibration",
    "is_culf",
    "is_segal",
    "is_2segal",
    "stability",
    "reduced_stability",
    "is_double_segal",
]


def is_left_fibration(F: SMap) -> CheckReport:
    return cartesian_on(F, "d_top", "is_left_fibration")


def is_right_fibration(F: SMap) -> CheckReport:
    return cartesian_on(F, "d_bot", "is_right_fibration")


def is_culf(F: SMap) -> CheckReport:
    return cartesian_on(F, "active", "is_culf")


def is_segal(X: TruncSSet, name: str = "is_segal") -> CheckReport:
    """For each 2 <= n <= T, the square of d_0 against d_n is a pullback.

    Below truncation 2 nothing is checkable; that is reported as zero
    coverage, never as a bare pass.
    """
    if X.trunc < 2:
        return CheckReport(name, True, [], 0, [f"unverifiable:{name}:trunc<2"])
    reports = []
    for n in range(2, X.trunc + 1):
        sq = Square(
            f"segal@{n}",
            X.level(n), X.level(n - 1), X.level(n - 1),
            X.faces[(n, n)], X.faces[(n, 0)], X.faces[(n - 1, 0)], X.faces[(n - 1, n - 1)],
        )
        reports.append(is_pullback(sq))
    return CheckReport.conjunction(name, reports)


def is_2segal(X: TruncSSet, side: str = "both", name: str | None = None) -> CheckReport:
    """Upper: dec_top is Segal; lower: dec_bottom is Segal."""
    name = name or f"is_2segal[{side}]"
    if X.trunc < 1:
        return CheckReport(name, True, [], 0, [f"unverifiable:{name}:trunc<1"])
    parts = []
    if side in ("upper", "both"):
        parts.append(is_segal(dec(X, "top"), f"{name}:upper"))
    if side in ("lower", "both"):
        parts.append(is_segal(dec(X, "bottom"), f"{name}:lower"))
    if not parts:
        raise ValueError(f"unknown side {side!r}")
    return CheckReport.conjunction(name, parts)


def _bulk_square(B, i, j, vk, hk, name) -> Square:
    src = B.level(i, j)
    return Square(
        name,
        src, B.level(i, j - 1), B.level(i - 1, j),
        B.d[((i, j), hk)], B.e[((i, j), vk)],
        B.e[((i, j - 1), vk)], B.d[((i - 1, j), hk)],
    )


def _bulk_levels(B):
    """Bulk levels (i, j >= 0) of a bisimplicial set or abacus presheaf."""
    return sorted(
        (lv for lv in B.levels if lv[0] >= 0 and lv[1] >= 0),
        key=lambda lv: (lv[0] + lv[1], lv),
    )


def stability(B, side: str = "both", name: str | None = None) -> CheckReport:
    """Pullback squares of bottom (upper side) or top (lower side) faces
    against each other, over the bulk."""
    name = name or f"stability[{side}]"
    reports = []
    for (i, j) in _bulk_levels(B):
        if i < 1 or j < 1:
            continue
        if side in ("upper", "both"):
            reports.append(is_pullback(_bulk_square(B, i, j, 0, 0, f"upper@({i},{j})")))
        if side in ("lower", "both"):
            reports.append(is_pullback(_bulk_square(B, i, j, i, j, f"lower@({i},{j})")))
    return CheckReport.conjunction(name, reports)


def is_double_segal(B, name: str = "is_double_segal") -> CheckReport:
    """Every bulk row and every bulk column is Segal."""
    reports = []
    rows = sorted({i for (i, j) in _bulk_levels(B)})
    cols = sorted({j for (i, j) in _bulk_levels(B)})
    for i in rows:
        R = row_sset(B, i)
        if R.trunc >= 2:
            reports.append(is_segal(R, f"row{i}"))
    for j in cols:
        C = col_sset(B, j)
        if C.trunc >= 2:
            reports.append(is_segal(C, f"col{j}"))
    return CheckReport.conjunction(name, reports)


def reduced_stability(B, name: str = "reduced_stability") -> CheckReport:
    """For double-Segal input, stability reduces to the two (1,1) squares."""
    pre = is_double_segal(B)
    if not pre.passed:
        return CheckReport.precondition_failure(name, "input is not double Segal")
    if (1, 1) not in B.levels:
        return CheckReport(name, True, [], 0, [])
    upper = is_pullback(_bulk_square(B, 1, 1, 0, 0, "upper@(1,1)"))
    lower = is_pullback(_bulk_square(B, 1, 1, 1, 1, "lower@(1,1)"))
    return CheckReport.conjunction(name, [upper, lower])


def vertical_active_row_maps(B):
    """The simplicial maps between bulk rows induced by vertical active
    operators (inner faces and all degeneracies)."""
    rows = sorted({i for (i, j) in _bulk_levels(B)})
    out = []
    for i in rows:
        if i >= 1 and i in rows and (i - 1) in rows:
            for k in range(1, i):
                out.append((f"e{k}:row{i}->row{i-1}", _row_op_map(B, i, i - 1, "e", k)))
        if (i + 1) in rows:
            for k in range(i + 1):
                out.append((f"t{k}:row{i}->row{i+1}", _row_op_map(B, i, i + 1, "t", k)))
    return out


def _row_op_map(B, i_src, i_tgt, kind, k) -> SMap:
    src = row_sset(B, i_src)
    tgt = row_sset(B, i_tgt)
    T = min(src.trunc, tgt.trunc)
    table = getattr(B, kind)
    levels = {n: {x: table[((i_src, n), k)][x] for x in src.level(n)} for n in range(T + 1)}
    from .presheaf import sub_trunc

    return SMap(sub_trunc(src, T), sub_trunc(tgt, T), levels)
