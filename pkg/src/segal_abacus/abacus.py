"""The abacus category and its bead calculus.

Objects ``[i, j]`` are columns of ``i + 1`` black beads under ``j + 1``
white beads (either count may be zero, not both).  A morphism is a
monotone map of the total bead columns that sends black beads to black
beads; white beads may also land on black ones.  Morphisms that preserve
colors form the bisimplicial subcategory; the extra generators are the
abacus maps ``f`` (turn the bottom white bead black, carrier the
identity) and, in the second presentation, the splittings ``ssub``
(merge the top black and bottom white bead).

Everything is represented semantically: a morphism *is* its carrier, and
generator words are a serialization layer on top.  ``relation_suite``
certifies that the presentation's relation table holds in this model,
and ``word_closure_homs`` + ``hom_enumerate`` certify that the
generators reach every morphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from .reports import CheckReport, Witness
from .simplex import (
    GeneratorWord,
    MonotoneMap,
    codegeneracy,
    coface,
    compose_monotone,
    enumerate_monotone,
    identity,
    ordinal_sum,
)


@dataclass(frozen=True)
class DObject:
    """The bead column [i, j]: i+1 black beads then j+1 white beads."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < -1 or self.j < -1:
            raise ValueError("bead counts need i, j >= -1")
        if self.i == -1 and self.j == -1:
            raise ValueError("[-1,-1] is not an object")

    @property
    def size(self) -> int:
        return self.i + self.j + 2

    @property
    def blacks(self) -> int:
        return self.i + 1

    @property
    def degree(self) -> int:
        """Total degree i+1+j, the index used for truncation bounds."""
        return self.i + 1 + self.j

    def __str__(self) -> str:
        return f"[{self.i},{self.j}]"


def parse_dobject(text: str) -> DObject:
    i, j = text.strip()[1:-1].split(",")
    return DObject(int(i), int(j))


@dataclass(frozen=True)
class BeadMap:
    """A morphism of bead columns: a carrier monotone map respecting colors."""

    src: DObject
    tgt: DObject
    carrier: MonotoneMap

    def __post_init__(self):
        if self.carrier.dom != self.src.size or self.carrier.cod != self.tgt.size:
            raise ValueError(
                f"carrier {self.carrier} does not fit {self.src} -> {self.tgt}"
            )
        for k in range(self.src.blacks):
            if self.carrier.values[k] >= self.tgt.blacks:
                raise ValueError(
                    f"black bead {k} escapes the black zone in {self.src} -> {self.tgt}"
                )

    def top_part(self) -> MonotoneMap:
        """The black-bead restriction [i] -> [i']."""
        return MonotoneMap(
            self.src.blacks, self.tgt.blacks, self.carrier.values[: self.src.blacks]
        )

    def white_part(self) -> MonotoneMap | None:
        """The white-bead restriction, or None if a white bead turns black."""
        if not self.is_color_preserving():
            return None
        vals = tuple(
            v - self.tgt.blacks for v in self.carrier.values[self.src.blacks :]
        )
        return MonotoneMap(self.src.j + 1, self.tgt.j + 1, vals)

    def is_color_preserving(self) -> bool:
        return all(
            v >= self.tgt.blacks for v in self.carrier.values[self.src.blacks :]
        )

    def whites_turned_black(self) -> int:
        return sum(
            1 for v in self.carrier.values[self.src.blacks :] if v < self.tgt.blacks
        )

    def is_identity(self) -> bool:
        return self.src == self.tgt and self.carrier.is_identity()

    def __str__(self) -> str:
        return f"{self.src}->{self.tgt}:{list(self.carrier.values)}"


def bead_identity(obj: DObject) -> BeadMap:
    return BeadMap(obj, obj, identity(obj.size - 1))


def bead_compose(g2: BeadMap, g1: BeadMap) -> BeadMap:
    """Composite g2 . g1 (g1 acts first)."""
    if g1.tgt != g2.src:
        raise ValueError(f"not composable: {g1} then {g2}")
    out = BeadMap(g1.src, g2.tgt, compose_monotone(g2.carrier, g1.carrier))
    assert all(
        out.carrier.values[k] < out.tgt.blacks for k in range(out.src.blacks)
    ), "color constraint broke under composition"
    return out


# ---------------------------------------------------------------------------
# Generators

GENERATOR_KINDS = ("e", "t", "d", "s", "f", "ssub")


def generator_range(kind: str, at: DObject) -> list[int | None]:
    """Legal indices of a generator kind at the given source object."""
    i, j = at.i, at.j
    if kind == "e":
        return list(range(i + 2))
    if kind == "t":
        return list(range(i))
    if kind == "d":
        return list(range(j + 2))
    if kind == "s":
        return list(range(j))
    if kind == "f":
        return [None] if j >= 0 else []
    if kind == "ssub":
        # no splitting out of the augmentation row
        return [None] if (i >= 0 and j >= 0) else []
    raise ValueError(f"unknown generator kind {kind!r}")


def bead_of_generator(kind: str, k: int | None, at: DObject) -> BeadMap:
    """The generator ``kind^k`` with source ``at``, as a bead map."""
    i, j = at.i, at.j
    if k not in generator_range(kind, at):
        raise ValueError(f"generator {kind}{'' if k is None else k} not defined at {at}")
    if kind == "e":
        return BeadMap(at, DObject(i + 1, j), coface(k, i + j + 2))
    if kind == "t":
        return BeadMap(at, DObject(i - 1, j), codegeneracy(k, i + j))
    if kind == "d":
        return BeadMap(at, DObject(i, j + 1), coface(i + 1 + k, i + j + 2))
    if kind == "s":
        return BeadMap(at, DObject(i, j - 1), codegeneracy(i + 1 + k, i + j))
    if kind == "f":
        return BeadMap(at, DObject(i + 1, j - 1), identity(i + j + 1))
    if kind == "ssub":
        return BeadMap(at, DObject(i, j - 1), codegeneracy(i, i + j))
    raise ValueError(kind)


def generators_at(at: DObject, include_split: bool = True) -> list[tuple[str, int | None, BeadMap]]:
    out = []
    for kind in GENERATOR_KINDS:
        if kind == "ssub" and not include_split:
            continue
        for k in generator_range(kind, at):
            out.append((kind, k, bead_of_generator(kind, k, at)))
    return out


def eval_bead_word(word: GeneratorWord) -> BeadMap:
    """Evaluate a word of abacus tokens (application order) to a bead map."""
    if not isinstance(word.source, DObject):
        raise TypeError("abacus words carry a DObject source")
    out = bead_identity(word.source)
    for kind, k in word.tokens:
        out = bead_compose(bead_of_generator(kind, k, out.tgt), out)
    return out


def parse_bead_word(text: str) -> GeneratorWord:
    """Parse e.g. ``"e1.f.d0@[0,0]"`` (composition order, source annotated)."""
    body, _, at = text.partition("@")
    src = parse_dobject(at)
    if body in ("", "id"):
        return GeneratorWord((), src)
    toks = []
    for piece in body.split("."):
        if piece == "f" or piece == "ssub":
            toks.append((piece, None))
        else:
            toks.append((piece[0], int(piece[1:])))
    return GeneratorWord(tuple(reversed(toks)), src)


# ---------------------------------------------------------------------------
# The relation table of the presentation

_BISIMPLICIAL = ("e", "t", "d", "s")


def _word(at: DObject, *tokens) -> GeneratorWord:
    return GeneratorWord(tuple(tokens), at)


def _legal(i: int, j: int) -> bool:
    return i >= -1 and j >= -1 and not (i == -1 and j == -1)


def relation_instances(max_i: int, max_j: int, families: str = "all"):
    """Yield (name, lhs_word, rhs_word) for each relation instance.

    Both words share source and target; ``families`` picks "bisimplicial",
    "abacus", "split", or "all".  Indices run over all source objects
    [i, j] with i <= max_i and j <= max_j.
    """
    do_bis = families in ("all", "bisimplicial")
    do_ab = families in ("all", "abacus")
    do_sp = families in ("all", "split")
    for i in range(-1, max_i + 1):
        for j in range(-1, max_j + 1):
            if not _legal(i, j):
                continue
            at = DObject(i, j)
            if do_bis:
                yield from _bisimplicial_relations(at)
            if do_ab:
                yield from _abacus_relations(at)
            if do_sp:
                yield from _split_relations(at)


def _bisimplicial_relations(at: DObject):
    i, j = at.i, at.j
    # vertical cosimplicial identities
    for l in range(i + 3):
        for k in range(l):
            yield (f"e.e@{at}", _word(at, ("e", k), ("e", l)), _word(at, ("e", l - 1), ("e", k)))
    for l in range(i - 1):
        for k in range(l + 1):
            # the codegeneracy identity in its k <= l form
            yield (f"t.t@{at}", _word(at, ("t", l + 1), ("t", k)), _word(at, ("t", k), ("t", l)))
    for k in range(i + 2):
        for l in range(i + 1):
            lhs = _word(at, ("e", k), ("t", l))
            if k < l:
                yield (f"t.e@{at}", lhs, _word(at, ("t", l - 1), ("e", k)))
            elif k in (l, l + 1):
                yield (f"t.e@{at}", lhs, _word(at))
            else:
                yield (f"t.e@{at}", lhs, _word(at, ("t", l), ("e", k - 1)))
    # horizontal cosimplicial identities
    for l in range(j + 3):
        for k in range(l):
            yield (f"d.d@{at}", _word(at, ("d", k), ("d", l)), _word(at, ("d", l - 1), ("d", k)))
    for l in range(j - 1):
        for k in range(l + 1):
            yield (f"s.s@{at}", _word(at, ("s", l + 1), ("s", k)), _word(at, ("s", k), ("s", l)))
    for k in range(j + 2):
        for l in range(j + 1):
            lhs = _word(at, ("d", k), ("s", l))
            if k < l:
                yield (f"s.d@{at}", lhs, _word(at, ("s", l - 1), ("d", k)))
            elif k in (l, l + 1):
                yield (f"s.d@{at}", lhs, _word(at))
            else:
                yield (f"s.d@{at}", lhs, _word(at, ("s", l), ("d", k - 1)))
    # vertical against horizontal: all commute
    for vk in ("e", "t"):
        for hk in ("d", "s"):
            for kv in generator_range(vk, at):
                mid_v = bead_of_generator(vk, kv, at).tgt
                for kh in generator_range(hk, at):
                    mid_h = bead_of_generator(hk, kh, at).tgt
                    if kh in generator_range(hk, mid_v) and kv in generator_range(vk, mid_h):
                        yield (
                            f"{vk}.{hk}@{at}",
                            _word(at, (vk, kv), (hk, kh)),
                            _word(at, (hk, kh), (vk, kv)),
                        )


def _abacus_relations(at: DObject):
    i, j = at.i, at.j
    # f d^k = d^{k-1} f, source [i,j], 1 <= k <= j+1
    for k in range(1, j + 2):
        yield (f"f.d@{at}", _word(at, ("d", k), ("f", None)), _word(at, ("f", None), ("d", k - 1)))
    # f s^k = s^{k-1} f, source [i,j], needs s^k at [i,j] (k <= j-1) per ranges
    for k in range(1, j):
        yield (f"f.s@{at}", _word(at, ("s", k), ("f", None)), _word(at, ("f", None), ("s", k - 1)))
    # e^k f = f e^k, source [i,j] with f first (j >= 0), 0 <= k <= i+1
    if j >= 0:
        for k in range(i + 2):
            yield (f"e.f@{at}", _word(at, ("f", None), ("e", k)), _word(at, ("e", k), ("f", None)))
    # the parallelogram e^top = f d^0
    yield (f"e_top=f.d0@{at}", _word(at, ("e", i + 1)), _word(at, ("d", 0), ("f", None)))
    # f s^0 = t^top f f, source [i,j] with j >= 1
    if j >= 1:
        yield (
            f"f.s0@{at}",
            _word(at, ("s", 0), ("f", None)),
            _word(at, ("f", None), ("f", None), ("t", i + 1)),
        )
    # f t^k = t^k f, source [i,j] with j >= 0, 0 <= k <= i-1
    if j >= 0:
        for k in range(i):
            yield (f"t.f@{at}", _word(at, ("f", None), ("t", k)), _word(at, ("t", k), ("f", None)))


def _split_relations(at: DObject):
    i, j = at.i, at.j
    if i < 0:
        return
    # counit: ssub d^0 = id
    yield (f"ssub.d0@{at}", _word(at, ("d", 0), ("ssub", None)), _word(at))
    # shifts: ssub d^{k+1} = d^k ssub (source [i,j], j >= 0)
    if j >= 0:
        for k in range(j + 1):
            yield (
                f"ssub.d@{at}",
                _word(at, ("d", k + 1), ("ssub", None)),
                _word(at, ("ssub", None), ("d", k)),
            )
        # coassociativity: ssub s^0-style, as ssub ssub = ssub s^0 needs j >= 1
    if j >= 1:
        yield (
            f"ssub.ssub@{at}",
            _word(at, ("ssub", None), ("ssub", None)),
            _word(at, ("s", 0), ("ssub", None)),
        )
        for k in range(j - 1):
            yield (
                f"ssub.s@{at}",
                _word(at, ("s", k + 1), ("ssub", None)),
                _word(at, ("ssub", None), ("s", k)),
            )
    # vertical compatibilities, top vertical coface excluded
    if j >= 0:
        for k in range(i + 1):
            yield (
                f"e.ssub@{at}",
                _word(at, ("ssub", None), ("e", k)),
                _word(at, ("e", k), ("ssub", None)),
            )
        for k in range(i):
            yield (
                f"t.ssub@{at}",
                _word(at, ("ssub", None), ("t", k)),
                _word(at, ("t", k), ("ssub", None)),
            )
    # the two presentations express each other
    if j >= 0:
        yield (
            f"f=ssub.e_top@{at}",
            _word(at, ("f", None)),
            _word(at, ("e", i + 1), ("ssub", None)),
        )
        yield (
            f"ssub=t_top.f@{at}",
            _word(at, ("ssub", None)),
            _word(at, ("f", None), ("t", i)),
        )


def relation_suite(max_i: int, max_j: int, families: str = "all") -> CheckReport:
    """Check every relation instance within the bounds as bead-map equality."""
    witnesses = []
    checked = 0
    for name, lhs, rhs in relation_instances(max_i, max_j, families):
        checked += 1
        lv, rv = eval_bead_word(lhs), eval_bead_word(rhs)
        if lv != rv:
            witnesses.append(Witness(name, f"{lhs} = {rhs}", (str(lv), str(rv))))
    return CheckReport.from_witnesses("relation_suite", witnesses, checked)


def trapezium_check(i: int, j: int, m: int, n: int) -> CheckReport:
    """f^(m+n+1) d^m = e^(i+1) f^(m+n) from the source object [i-m, j+m]."""
    if not (_legal(i, j) and 0 <= m <= i + 1 and 0 <= n <= j + 1):
        raise ValueError(f"illegal trapezium indices {(i, j, m, n)}")
    src = DObject(i - m, j + m)
    fs = ("f", None)
    lhs = _word(src, ("d", m), *([fs] * (m + n + 1)))
    rhs = _word(src, *([fs] * (m + n)), ("e", i + 1))
    lv, rv = eval_bead_word(lhs), eval_bead_word(rhs)
    witnesses = []
    if lv != rv:
        witnesses.append(Witness(f"trapezium@{(i, j, m, n)}", f"{lhs} = {rhs}", (str(lv), str(rv))))
    return CheckReport.from_witnesses("trapezium_check", witnesses, 1)


def trapezium_suite(degree_bound: int) -> CheckReport:
    """All legal trapezium instances with i+j <= degree_bound."""
    reports = []
    for i in range(-1, degree_bound + 2):
        for j in range(-1, degree_bound + 2):
            if not _legal(i, j) or i + j > degree_bound:
                continue
            for m in range(i + 2):
                for n in range(j + 2):
                    if _legal(i - m, j + m):
                        reports.append(trapezium_check(i, j, m, n))
    return CheckReport.conjunction("trapezium_suite", reports)


# ---------------------------------------------------------------------------
# Hom sets: brute force and word closure


def hom_enumerate(src: DObject, tgt: DObject) -> list[BeadMap]:
    """All bead maps src -> tgt, by filtering monotone carriers."""
    out = []
    for f in enumerate_monotone(src.size - 1, tgt.size - 1):
        if all(f.values[k] < tgt.blacks for k in range(src.blacks)):
            out.append(BeadMap(src, tgt, f))
    return out


def objects_of_degree(max_degree: int) -> list[DObject]:
    objs = []
    for d in range(max_degree + 1):
        for i in range(-1, d + 2):
            j = d - 1 - i
            if j >= -1 and _legal(i, j):
                objs.append(DObject(i, j))
    return objs


def word_closure_homs(max_degree: int) -> dict[tuple[DObject, DObject], set[BeadMap]]:
    """All morphisms reachable from identities by composing generators,
    between objects of total degree <= max_degree, staying within the bound."""
    objs = objects_of_degree(max_degree)
    gens: dict[DObject, list[BeadMap]] = {
        o: [g for _, _, g in generators_at(o) if g.tgt.degree <= max_degree] for o in objs
    }
    homs: dict[tuple[DObject, DObject], set[BeadMap]] = {}
    for src in objs:
        seen: set[BeadMap] = {bead_identity(src)}
        frontier = [bead_identity(src)]
        while frontier:
            cur = frontier.pop()
            for g in gens[cur.tgt]:
                nxt = bead_compose(g, cur)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        for m in seen:
            homs.setdefault((src, m.tgt), set()).add(m)
    return homs


def factorize(g: BeadMap) -> tuple[GeneratorWord, GeneratorWord]:
    """Split g into an abacus word followed by a color-preserving word.

    Returns ``(ab, simp)`` with ``g = eval(simp after ab)``: ``ab`` is
    f-tokens only, one per white bead turned black, and ``simp`` is a
    bisimplicial word in canonical degeneracies-then-faces order.
    """
    w = g.whites_turned_black()
    ab = GeneratorWord((("f", None),) * w, g.src)
    mid = eval_bead_word(ab).tgt if w else g.src
    rest = BeadMap(mid, g.tgt, g.carrier)
    top, white = rest.top_part(), rest.white_part()
    assert white is not None
    tokens = []
    t_epi, e_mono = _delta_tokens(top, "t", "e")
    s_epi, d_mono = _delta_tokens(white, "s", "d")
    tokens.extend(t_epi)
    tokens.extend(s_epi)
    tokens.extend(e_mono)
    tokens.extend(d_mono)
    simp = GeneratorWord(tuple(tokens), mid)
    return ab, simp


def _delta_tokens(f: MonotoneMap, epi_kind: str, mono_kind: str):
    from .simplex import epi_mono_factor

    epi, mono = epi_mono_factor(f)
    return (
        [(epi_kind, k) for _, k in epi.tokens],
        [(mono_kind, k) for _, k in mono.tokens],
    )


def recompose(ab: GeneratorWord, simp: GeneratorWord) -> BeadMap:
    return bead_compose(eval_bead_word(simp), eval_bead_word(ab))


# ---------------------------------------------------------------------------
# Index categories around the bead calculus, and the structural functors


@dataclass(frozen=True)
class DeltaTimes1Map:
    """A morphism of the product of the simplex category with the arrow."""

    map: MonotoneMap
    src_level: int  # 0 or 1
    tgt_level: int

    def __post_init__(self):
        if not (self.src_level in (0, 1) and self.tgt_level in (0, 1)):
            raise ValueError("levels are 0 or 1")
        if self.src_level > self.tgt_level:
            raise ValueError("no maps from level 1 back to level 0")


@dataclass(frozen=True)
class SigmaMorphism:
    """A morphism of the pointing category: a bulk pair, the unique map to
    the point, or the point's identity."""

    kind: str  # "bulk" | "to_point" | "id_point"
    vertical: MonotoneMap | None = None
    horizontal: MonotoneMap | None = None
    src: tuple[int, int] | None = None  # bulk (i, j), or source of to_point


SIGMA_POINT = "pt"


def sigma_compose(g: SigmaMorphism, f: SigmaMorphism) -> SigmaMorphism:
    if f.kind == "bulk" and g.kind == "bulk":
        return SigmaMorphism(
            "bulk",
            compose_monotone(g.vertical, f.vertical),
            compose_monotone(g.horizontal, f.horizontal),
            f.src,
        )
    if f.kind == "bulk" and g.kind == "to_point":
        return SigmaMorphism("to_point", src=f.src)
    if g.kind == "id_point" and f.kind in ("to_point", "id_point"):
        return f
    raise ValueError(f"not composable in the pointing category: {f} then {g}")


class IndexFunctor:
    """One of the structural reindexing functors, applied via `apply`."""

    def __init__(self, tag: str):
        if tag not in ("q", "j", "r", "p", "h", "bulk"):
            raise ValueError(f"unknown functor tag {tag!r}")
        self.tag = tag

    def obj(self, x):
        return _FUNCTOR_OBJ[self.tag](x)

    def mor(self, m):
        return _FUNCTOR_MOR[self.tag](m)


def long_abacus(n: int) -> BeadMap:
    """The composite of n+1 abacus maps from [-1, n] to [n, -1]."""
    out = bead_identity(DObject(-1, n))
    for _ in range(n + 1):
        out = bead_compose(bead_of_generator("f", None, out.tgt), out)
    return out


def _q_obj(x):
    n, level = x
    return DObject(n, -1) if level == 1 else DObject(-1, n)


def _q_mor(m: DeltaTimes1Map) -> BeadMap:
    a = m.map
    if (m.src_level, m.tgt_level) == (0, 0):
        return BeadMap(DObject(-1, a.dom_n), DObject(-1, a.cod_n), a)
    if (m.src_level, m.tgt_level) == (1, 1):
        return BeadMap(DObject(a.dom_n, -1), DObject(a.cod_n, -1), a)
    row_part = BeadMap(DObject(-1, a.dom_n), DObject(-1, a.cod_n), a)
    return bead_compose(long_abacus(a.cod_n), row_part)


def _r_obj(x: DObject) -> int:
    return x.degree


def _r_mor(m: BeadMap) -> MonotoneMap:
    return m.carrier


def _j_obj(x):
    if x == SIGMA_POINT:
        return DObject(0, -1)
    return DObject(*x)


def _j_mor(m: SigmaMorphism) -> BeadMap:
    if m.kind == "id_point":
        return bead_identity(DObject(0, -1))
    if m.kind == "bulk":
        i1, j1 = m.vertical.dom_n, m.horizontal.dom_n
        i2, j2 = m.vertical.cod_n, m.horizontal.cod_n
        return BeadMap(
            DObject(i1, j1), DObject(i2, j2), ordinal_sum(m.vertical, m.horizontal)
        )
    # the unique map to the point: down to [0,0], then the splitting
    i, j = m.src
    down = _j_mor(
        SigmaMorphism(
            "bulk",
            MonotoneMap(i + 1, 1, (0,) * (i + 1)),
            MonotoneMap(j + 1, 1, (0,) * (j + 1)),
            m.src,
        )
    )
    return bead_compose(bead_of_generator("ssub", None, DObject(0, 0)), down)


def _p_obj(x):
    if x == SIGMA_POINT:
        return 0
    return ordinal_sum(x[0], x[1])


def _p_mor(m: SigmaMorphism) -> MonotoneMap:
    return _j_mor(m).carrier


def _h_obj(n: int) -> int:
    # objects of the pointed simplex category map to their split counterparts
    return n


def _h_mor(m) -> MonotoneMap:
    """Pointed-simplex morphisms to bottom-preserving maps.

    A plain monotone map goes to its free-bottom extension; the string
    "point" stands for the unique collapse [0] -> [-1].
    """
    from .simplex import free_bottom

    if m == "point":
        return MonotoneMap(2, 1, (0, 0))
    return free_bottom(m)


def _bulk_obj(x: DObject) -> DObject:
    return x


def _bulk_mor(m: BeadMap) -> BeadMap:
    if not m.is_color_preserving():
        raise ValueError("not a morphism of the color-preserving subcategory")
    return m


_FUNCTOR_OBJ = {
    "q": _q_obj,
    "j": _j_obj,
    "r": _r_obj,
    "p": _p_obj,
    "h": _h_obj,
    "bulk": _bulk_obj,
}
_FUNCTOR_MOR = {
    "q": _q_mor,
    "j": _j_mor,
    "r": _r_mor,
    "p": _p_mor,
    "h": _h_mor,
    "bulk": _bulk_mor,
}


def apply_functor(functor: IndexFunctor | str, x):
    """Apply a structural functor to an object or morphism of its domain."""
    tag = functor.tag if isinstance(functor, IndexFunctor) else functor
    f = IndexFunctor(tag)
    if isinstance(x, (BeadMap, DeltaTimes1Map, SigmaMorphism)) or (
        tag == "h" and (isinstance(x, MonotoneMap) or x == "point")
    ):
        return f.mor(x)
    return f.obj(x)
