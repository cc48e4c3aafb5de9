"""Finite ordinals, monotone maps, and generator words.

Objects of the simplex category are written ``[n]`` and have ``n + 1``
elements; the empty ordinal ``[-1]`` is a first-class object with exactly
one map into every ``[n]``.  Maps are stored by their value lists, so
equality is structural and nothing is ever quotiented.

Words of generators are stored in *application order* (first token acts
first).  The string form uses composition order, ``"d1.s0@[2]"`` meaning
apply ``s0`` to ``[2]`` and then ``d1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb


@dataclass(frozen=True)
class MonotoneMap:
    """A weakly increasing map between finite ordinals.

    ``dom`` and ``cod`` are ordinal *sizes*: the object ``[n]`` has size
    ``n + 1``, so ``[-1]`` has size 0.  ``values`` lists the image of each
    domain element in position order.
    """

    dom: int
    cod: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise ValueError("ordinal sizes must be nonnegative")
        if len(self.values) != self.dom:
            raise ValueError(f"expected {self.dom} values, got {len(self.values)}")
        for a, b in zip(self.values, self.values[1:]):
            if a > b:
                raise ValueError(f"values not weakly increasing: {self.values}")
        for v in self.values:
            if not 0 <= v < self.cod:
                raise ValueError(f"value {v} outside codomain of size {self.cod}")

    @property
    def dom_n(self) -> int:
        """Domain as an object index: dom = [dom_n]."""
        return self.dom - 1

    @property
    def cod_n(self) -> int:
        return self.cod - 1

    def __call__(self, k: int) -> int:
        return self.values[k]

    def is_identity(self) -> bool:
        return self.dom == self.cod and self.values == tuple(range(self.dom))

    def __str__(self) -> str:
        return f"[{','.join(map(str, self.values))}]:{self.dom}->{self.cod}"


def identity(n: int) -> MonotoneMap:
    """Identity of the object [n]."""
    return MonotoneMap(n + 1, n + 1, tuple(range(n + 1)))


def coface(k: int, n: int) -> MonotoneMap:
    """d^k : [n-1] -> [n], the injection missing k (0 <= k <= n)."""
    if not 0 <= k <= n:
        raise ValueError(f"coface index {k} out of range for [{n}]")
    return MonotoneMap(n, n + 1, tuple(v if v < k else v + 1 for v in range(n)))


def codegeneracy(k: int, n: int) -> MonotoneMap:
    """s^k : [n+1] -> [n], the surjection hitting k twice (0 <= k <= n)."""
    if not 0 <= k <= n:
        raise ValueError(f"codegeneracy index {k} out of range for [{n}]")
    return MonotoneMap(n + 2, n + 1, tuple(v if v <= k else v - 1 for v in range(n + 2)))


def compose_monotone(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """The composite g . f (f acts first). Requires f.cod == g.dom."""
    if f.cod != g.dom:
        raise ValueError(f"not composable: {f} then {g}")
    return MonotoneMap(f.dom, g.cod, tuple(g.values[v] for v in f.values))


def enumerate_monotone(m: int, n: int) -> list[MonotoneMap]:
    """All monotone maps [m] -> [n], for m, n >= -1.

    The count is C(m+n+1, m+1) for m, n >= 0; there is exactly one map out
    of [-1], and none into [-1] from a nonempty ordinal.
    """
    if m < -1 or n < -1:
        raise ValueError("objects must be [k] with k >= -1")
    if m == -1:
        return [MonotoneMap(0, n + 1, ())]
    if n == -1:
        return []
    return [
        MonotoneMap(m + 1, n + 1, vals)
        for vals in combinations_with_replacement(range(n + 1), m + 1)
    ]


def count_monotone(m: int, n: int) -> int:
    if m == -1:
        return 1
    if n == -1:
        return 0
    return comb(m + n + 1, m + 1)


# ---------------------------------------------------------------------------
# Generator words


@dataclass(frozen=True)
class GeneratorWord:
    """A word of generator tokens with a source-object annotation.

    ``tokens`` are pairs ``(kind, index)`` in application order; ``index``
    is None for index-free generators.  ``source`` is the object the first
    token is applied at (an int for simplex words; richer annotations are
    used by other calculi).
    """

    tokens: tuple[tuple[str, int | None], ...]
    source: object

    def __len__(self) -> int:
        return len(self.tokens)

    def __str__(self) -> str:
        if not self.tokens:
            return f"id@{_fmt_source(self.source)}"
        body = ".".join(
            t[0] + ("" if t[1] is None else str(t[1])) for t in reversed(self.tokens)
        )
        return f"{body}@{_fmt_source(self.source)}"


def _fmt_source(source) -> str:
    if isinstance(source, int):
        return f"[{source}]"
    return str(source)


def eval_delta_word(word: GeneratorWord) -> MonotoneMap:
    """Evaluate a word of d/s tokens to a monotone map, checking chaining."""
    n = word.source
    if not isinstance(n, int):
        raise TypeError("simplex words carry an integer source object")
    out = identity(n)
    for kind, k in word.tokens:
        if kind == "d":
            step = coface(k, out.cod_n + 1)
        elif kind == "s":
            step = codegeneracy(k, out.cod_n - 1)
        else:
            raise ValueError(f"unknown simplex token {kind!r}")
        out = compose_monotone(step, out)
    return out


def parse_delta_word(text: str) -> GeneratorWord:
    """Parse the compact string form, e.g. ``"d2.s0@[3]"`` or ``"id@[1]"``."""
    body, _, at = text.partition("@")
    if not at.startswith("[") or not at.endswith("]"):
        raise ValueError(f"missing object annotation in {text!r}")
    n = int(at[1:-1])
    if body == "id" or body == "":
        return GeneratorWord((), n)
    toks = []
    for piece in body.split("."):
        kind, idx = piece[0], piece[1:]
        if kind not in ("d", "s") or not idx.lstrip("-").isdigit():
            raise ValueError(f"bad token {piece!r} in {text!r}")
        toks.append((kind, int(idx)))
    return GeneratorWord(tuple(reversed(toks)), n)


def parse_monotone(text: str) -> MonotoneMap:
    """Parse the raw value-list form, e.g. ``"[0,0,2]:3->3"``."""
    vals, _, sizes = text.partition(":")
    dom, _, cod = sizes.partition("->")
    inner = vals.strip()[1:-1].strip()
    values = tuple(int(v) for v in inner.split(",")) if inner else ()
    return MonotoneMap(int(dom), int(cod), values)


def epi_mono_factor(f: MonotoneMap) -> tuple[GeneratorWord, GeneratorWord]:
    """Split f into its canonical degeneracy and face words.

    Returns ``(epi, mono)`` where ``epi`` is a word of s-tokens (indices
    strictly decreasing in application order) and ``mono`` a word of
    d-tokens (indices strictly increasing in application order), with
    ``f = eval(mono after epi)``.
    """
    repeats = [k for k in range(f.dom - 1) if f.values[k] == f.values[k + 1]]
    image = sorted(set(f.values))
    missing = [v for v in range(f.cod) if v not in set(f.values)]
    img_n = len(image) - 1
    epi = GeneratorWord(tuple(("s", j) for j in reversed(repeats)), f.dom_n)
    mono = GeneratorWord(tuple(("d", i) for i in sorted(missing)), img_n)
    return epi, mono


def eval_epi_mono(epi: GeneratorWord, mono: GeneratorWord) -> MonotoneMap:
    return compose_monotone(eval_delta_word(mono), eval_delta_word(epi))


# ---------------------------------------------------------------------------
# Ordinal sum and the free-bottom monad


def ordinal_sum(a, b):
    """Ordinal sum [m] + [n] = [m+1+n], on objects (ints) or maps.

    On maps the blocks are concatenated, the second with its codomain
    offset past the first.
    """
    if isinstance(a, int) and isinstance(b, int):
        return a + 1 + b
    if isinstance(a, MonotoneMap) and isinstance(b, MonotoneMap):
        vals = a.values + tuple(v + a.cod for v in b.values)
        return MonotoneMap(a.dom + b.dom, a.cod + b.cod, vals)
    raise TypeError("ordinal_sum takes two objects or two maps")


def free_bottom(f: MonotoneMap) -> MonotoneMap:
    """Adjoin a new least element to both sides, fixed by the map."""
    return MonotoneMap(f.dom + 1, f.cod + 1, (0,) + tuple(v + 1 for v in f.values))


def is_bottom_preserving(f: MonotoneMap) -> bool:
    """True if both ordinals are nonempty and f sends bottom to bottom."""
    return f.dom >= 1 and f.cod >= 1 and f.values[0] == 0
