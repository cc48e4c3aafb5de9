"""Batch tool: generate fixtures, validate, check axioms, run constructions
and theorem round trips.

Exit codes: 0 pass, 1 fail, 2 invalid input or precondition, 3 vacuous
coverage.  Reports are deterministic: canonical ordering throughout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import configurations as cfg
from . import corpus, decalage, fibrations, pjson
from .presheaf import SMap, TruncSSet, validate
from .reports import CheckReport
from .suites import SUITES


def _resolve(path: str) -> str:
    if path and not os.path.isabs(path) and not os.path.exists(path):
        root = os.environ.get("SEGAL_ABACUS_FIXTURES")
        if root and os.path.exists(os.path.join(root, path)):
            return os.path.join(root, path)
    return path


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, indent=1))
    else:
        _emit_text(payload)


def _emit_text(payload: dict, indent: str = "") -> None:
    for key in sorted(payload):
        val = payload[key]
        if isinstance(val, dict):
            print(f"{indent}{key}:")
            _emit_text(val, indent + "  ")
        elif isinstance(val, list):
            print(f"{indent}{key}: [{len(val)} items]")
            for item in val[:10]:
                print(f"{indent}  - {item}")
        else:
            print(f"{indent}{key}: {val}")


def _report_exit(rep: CheckReport, fmt: str) -> int:
    _emit(rep.to_dict(), fmt)
    return rep.exit_code()


# ---------------------------------------------------------------------------
# gen


def _gen(args) -> int:
    T = args.trunc
    kind = args.kind
    size = args.size
    preset = args.preset
    if kind == "nerve-poset":
        cats = {
            "diamond": corpus.diamond_poset,
            "vee": lambda: corpus.poset_cat("vee", ["a", "b", "c"], lambda x, y: x == y or x == "a"),
            "wedge": lambda: corpus.poset_cat("wedge", ["a", "b", "c"], lambda x, y: x == y or y == "c"),
        }
        cat = cats[preset]() if preset else corpus.chain_poset(size if size is not None else 2)
        out = corpus.nerve(cat, T)
    elif kind == "nerve-category":
        cats = {"walkiso": corpus.walking_iso_cat, "parallel": corpus.parallel_arrows_cat}
        out = corpus.nerve(cats[preset or "walkiso"](), T)
    elif kind == "nerve-monoid":
        if preset == "idem":
            out = corpus.nerve(corpus.idempotent_monoid(), T)
        else:
            out = corpus.nerve(corpus.cyclic_monoid(size if size is not None else 2), T)
    elif kind == "partial-monoid":
        out = corpus.two_segal_partial_monoid(T)
    elif kind == "simplex":
        out = corpus.nerve(corpus.chain_poset(size if size is not None else 1), T)
    elif kind == "constant":
        from .presheaf import constant_sset

        out = constant_sset([f"c{k}" for k in range(size if size is not None else 3)], T)
    elif kind == "boolean-lattice":
        out = corpus.nerve(corpus.boolean_lattice(size if size is not None else 2), T)
    elif kind == "graph":
        out = corpus.glued_edges_sset(T) if (preset or "glued") == "glued" else corpus.path_graph_sset(size or 2, T)
    elif kind == "punctured-chain":
        out = corpus.punctured_chain_sset(size if size is not None else 3, T)
    else:
        print(f"unknown kind {kind!r}", file=sys.stderr)
        return 2
    rep = validate(out)
    if not rep.passed:
        _emit(rep.to_dict(), args.format)
        return 2
    pjson.dump(out, args.out)
    _emit({"wrote": args.out, "trunc": T,
           "sizes": {str(k): len(v) for k, v in sorted(out.levels.items(), key=lambda kv: str(kv[0]))}},
          args.format)
    return 0


# ---------------------------------------------------------------------------
# check


_CHECKS = {}


def _register_checks():
    _CHECKS.update({
        "validate": lambda P, a: validate(P),
        "segal": lambda P, a: fibrations.is_segal(P),
        "2segal": lambda P, a: fibrations.is_2segal(P, a.side),
        "lfib": lambda P, a: fibrations.is_left_fibration(P),
        "rfib": lambda P, a: fibrations.is_right_fibration(P),
        "culf": lambda P, a: fibrations.is_culf(P),
        "stable": lambda P, a: fibrations.stability(P, a.side),
        "double-segal": lambda P, a: fibrations.is_double_segal(P),
        "reduced-stable": lambda P, a: fibrations.reduced_stability(P),
        "star": lambda P, a: cfg.condition_star(P),
        "unit-iso": lambda P, a: cfg.unit_iso(P),
        "bicomodule": lambda P, a: cfg.is_bicomodule_config(P),
        "invertible-abacus": lambda P, a: cfg.has_invertible_abacus(P),
        "boors": lambda P, a: cfg.boors_axioms(P, half=a.half),
        "ts-compat": lambda P, a: cfg.ts_compat(P),
        "rel-upper-2segal": lambda P, a: cfg.is_rel_upper_2segal(P),
        "rigid": lambda P, a: decalage.is_rigid(P),
        "coalgebra": lambda P, a: decalage.validate_coalgebra(P),
        "local-initial": lambda P, a: decalage.is_local_initial(P),
        "local-terminal": lambda P, a: decalage.is_local_terminal(P),
    })


def _check(args) -> int:
    _register_checks()
    try:
        P = pjson.load(_resolve(args.file))
    except (OSError, KeyError, ValueError) as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return 2
    base = validate(P)
    if args.check != "validate" and not base.passed:
        _emit({"name": args.check, "verdict": "invalid-input",
               "witnesses": [w.to_dict() for w in base.witnesses[:10]]}, args.format)
        return 2
    rep = _CHECKS[args.check](P, args)
    return _report_exit(rep, args.format)


# ---------------------------------------------------------------------------
# construct


def _load_or_none(path: str):
    try:
        return pjson.load(_resolve(path))
    except (OSError, KeyError, ValueError) as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        return None


def _construct(args) -> int:
    P = _load_or_none(args.infile)
    if P is None:
        return 2
    if not validate(P).passed:
        print("input does not validate", file=sys.stderr)
        return 2
    op = args.op
    if op == "qstar":
        out = cfg.q_lower_star(P)
    elif op == "tot":
        out = decalage.tot(P)
    elif op == "rtot":
        out = cfg.r_star(P)
    elif op == "boors-tot":
        out = cfg.p_star_tot(P)
    elif op == "extend":
        out, rep = cfg.extend_sigma_to_d(P, half=args.half)
        if out is None:
            _emit(rep.to_dict(), args.format)
            return 2
    elif op == "M":
        B = cfg.q_lower_star(P) if isinstance(P, SMap) else P
        M, proj = cfg.build_M(B)
        out = proj
    else:
        print(f"unknown construction {op!r}", file=sys.stderr)
        return 2
    rep = validate(out)
    pjson.dump(out, args.out)
    _emit({"wrote": args.out, "validates": rep.passed}, args.format)
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# roundtrip


def _roundtrip(args) -> int:
    P = _load_or_none(args.file)
    if P is None:
        return 2
    if args.trunc is not None and isinstance(P, TruncSSet):
        from .presheaf import sub_trunc

        P = sub_trunc(P, args.trunc)
    if not validate(P).passed:
        print("input does not validate", file=sys.stderr)
        return 2
    if args.kind == "boors":
        reports = cfg.boors_roundtrip(P)
    elif args.kind == "star":
        B = cfg.q_lower_star(P)
        F2 = cfg.q_upper_star(B)
        agree = all(F2.levels[n] == P.levels[n] for n in F2.levels)
        reports = {
            "star": cfg.condition_star(B),
            "unit": cfg.unit_iso(B),
            "restriction_recovers_map": CheckReport("restriction_recovers_map", agree, [], 1),
        }
    elif args.kind == "M":
        B = cfg.q_lower_star(P) if isinstance(P, SMap) else P
        M, proj = cfg.build_M(B)
        fib = cfg.extract_from_M(M, proj)
        ok = all(
            tuple(x[1] for x in fib.get(lvl, ())) == B.level(*lvl) for lvl in B.levels
        )
        reports = {
            "m_validates": validate(M),
            "projection_validates": validate(proj),
            "extraction_identity": CheckReport("extraction_identity", ok, [], len(B.levels)),
        }
    else:
        print(f"unknown roundtrip {args.kind!r}", file=sys.stderr)
        return 2
    payload = {k: r.to_dict() for k, r in reports.items()}
    payload["depth"] = getattr(P, "trunc", None)
    _emit(payload, args.format)
    if any(r.precondition is not None for r in reports.values()):
        return 2
    return 0 if all(r.passed for r in reports.values()) else 1


# ---------------------------------------------------------------------------
# morphism: parse, evaluate, and normalize either string form


def _morphism(args) -> int:
    from . import abacus, simplex

    text = args.text.strip()
    try:
        if "@[" in text and "," in text.split("@", 1)[1]:
            word = abacus.parse_bead_word(text)
            g = abacus.eval_bead_word(word)
            ab, simp = abacus.factorize(g)
            payload = {
                "kind": "bead",
                "source": str(g.src),
                "target": str(g.tgt),
                "carrier": str(g.carrier),
                "abacus_word": str(ab),
                "simplicial_word": str(simp),
            }
        elif "@[" in text:
            f = simplex.eval_delta_word(simplex.parse_delta_word(text))
            payload = {"kind": "monotone", "values": str(f)}
        else:
            f = simplex.parse_monotone(text)
            epi, mono = simplex.epi_mono_factor(f)
            word = simplex.GeneratorWord(epi.tokens + mono.tokens, f.dom_n)
            payload = {"kind": "monotone", "values": str(f), "word": str(word)}
    except (ValueError, KeyError) as exc:
        print(f"cannot parse morphism {text!r}: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.format)
    return 0


# ---------------------------------------------------------------------------
# run-suite


def _run_suite(args) -> int:
    fn = SUITES[args.name]
    kwargs = {}
    if args.name == "presentation":
        kwargs["bound"] = args.bound
    else:
        kwargs["trunc"] = args.trunc
        kwargs["jobs"] = args.jobs
        if args.name == "cheatsheet":
            kwargs["max_size"] = args.max_size
            kwargs["seed"] = args.seed
    rep = fn(**kwargs)
    _emit(rep, args.format)
    return {"pass": 0, "fail": 1, "vacuous": 3}[rep["verdict"]]


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="segal-abacus",
                                 description="finite 2-Segal / abacus-configuration toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a fixture")
    g.add_argument("kind", choices=[
        "nerve-poset", "nerve-category", "nerve-monoid", "partial-monoid",
        "simplex", "constant", "boolean-lattice", "graph", "punctured-chain"])
    g.add_argument("--size", type=int)
    g.add_argument("--preset")
    g.add_argument("--trunc", type=int, default=5)
    g.add_argument("--out", required=True)
    g.add_argument("--format", choices=["json", "text"], default="json")
    g.set_defaults(fn=_gen)

    c = sub.add_parser("check", help="run one checker on a fixture file")
    c.add_argument("check", choices=[
        "validate", "segal", "2segal", "lfib", "rfib", "culf", "stable",
        "double-segal", "reduced-stable", "star", "unit-iso", "bicomodule",
        "invertible-abacus", "boors", "ts-compat", "rel-upper-2segal",
        "rigid", "coalgebra", "local-initial", "local-terminal"])
    c.add_argument("file")
    c.add_argument("--side", choices=["upper", "lower", "both"], default="both")
    c.add_argument("--half", action="store_true")
    c.add_argument("--format", choices=["json", "text"], default="json")
    c.set_defaults(fn=_check)

    b = sub.add_parser("construct", help="run a construction on a fixture file")
    b.add_argument("op", choices=["qstar", "tot", "rtot", "boors-tot", "extend", "M"])
    b.add_argument("--in", dest="infile", required=True)
    b.add_argument("--out", required=True)
    b.add_argument("--half", action="store_true")
    b.add_argument("--format", choices=["json", "text"], default="json")
    b.set_defaults(fn=_construct)

    r = sub.add_parser("roundtrip", help="run an equivalence round trip")
    r.add_argument("kind", choices=["boors", "star", "M"])
    r.add_argument("file")
    r.add_argument("--trunc", type=int)
    r.add_argument("--format", choices=["json", "text"], default="json")
    r.set_defaults(fn=_roundtrip)

    m = sub.add_parser("morphism", help="parse and normalize a morphism string")
    m.add_argument("text", help='e.g. "[0,0,2]:3->3", "d1.s0@[2]", or "f.d0@[0,0]"')
    m.add_argument("--format", choices=["json", "text"], default="json")
    m.set_defaults(fn=_morphism)

    s = sub.add_parser("run-suite", help="run a named verification suite")
    s.add_argument("name", choices=sorted(SUITES))
    s.add_argument("--trunc", type=int, default=5)
    s.add_argument("--bound", type=int, default=4)
    s.add_argument("--max-size", type=int, default=4)
    s.add_argument("--seed", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(fn=_run_suite)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
