"""Command-line front end.

Exit codes: 0 ok, 2 verification failure, 3 precondition violation,
4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .cyclo import CycScalar, format_scalar
from .dmod import (
    PreconditionError,
    build_projective,
    build_simple,
    composition_series,
    dot_export,
    is_simple,
    label_of_simple,
    projective_filtration_report,
    r_of,
    relation_report,
    socle,
)
from .hopf_core import build_double, verify_double_presentation, verify_harpoon_identities, verify_hopf
from .nichols import DEFAULT_BUDGET, CapacityError, nichols_dims
from .transport import braid_equation_holds, braiding_of, transport_simple, yd_report

EXIT_OK, EXIT_VERIFY, EXIT_PRECONDITION, EXIT_CAPACITY = 0, 2, 3, 4
SYMBOL = "ξ"
# older spellings of the two sweeps, kept so existing scripts keep working
REPRODUCE_ALIASES = {"thm22": "m2", "thm23": "m3"}


@dataclass
class RunConfig:
    n: int = 2
    m: int = 2
    budget: int = DEFAULT_BUDGET
    output: str = "text"
    seed: int = 0
    decimal: bool = False

    def validate(self) -> None:
        if self.n < 2 or self.m < 1 or self.budget < 2:
            raise PreconditionError("need n >= 2, m >= 1, budget >= 2")


def fmt(x: CycScalar, cfg: RunConfig) -> str:
    s = format_scalar(x, SYMBOL)
    if cfg.decimal and not x.is_rational():
        z = x.to_complex()
        s += f" [{z.real:.6g}{z.imag:+.6g}i]"
    return s


def emit(cfg: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        print("\n".join(text_lines))


def checklist(rows: list[tuple[str, bool]]) -> list[str]:
    return [f"  [{'ok' if ok else 'FAIL'}] {name}" for name, ok in rows]


# ---------------------------------------------------------------------------
# commands


def cmd_simples(cfg: RunConfig, args) -> int:
    n, m = cfg.n, cfg.m
    N = n * m
    rows, labels, failed = [], set(), False
    for i in range(N):
        for j in range(N):
            M = build_simple(n, m, i, j)
            ok = is_simple(M) and M.dim == r_of(n, m, i, j)
            lab = label_of_simple(M)
            ok = ok and lab == (i, j)
            labels.add(lab)
            failed |= not ok
            rows.append({"i": i, "j": j, "dim": M.dim, "one_dim": M.dim == 1, "verified": ok})
    distinct = len(labels) == N * N
    failed |= not distinct
    text = [f"simple modules of D({n},{m}): {len(rows)} (pairwise non-isomorphic: {distinct})"]
    text += [f"  V({r['i']},{r['j']})  dim {r['dim']}{'  1-dim' if r['one_dim'] else ''}" for r in rows]
    emit(cfg, {"n": n, "m": m, "simples": rows, "distinct": distinct}, text)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_module(cfg: RunConfig, args) -> int:
    n, m = cfg.n, cfg.m
    M = build_projective(n, m, args.i, args.j) if args.projective else build_simple(n, m, args.i, args.j)
    report = relation_report(M) if args.verify or args.projective else []
    payload = {"module": M.to_json(), "relations": dict(report)}
    text = [f"{'M' if args.projective else 'V'}({args.i},{args.j}) over D({n},{m}), dim {M.dim}"]
    text += checklist(report)
    if args.projective:
        series = composition_series(M)
        _, soc = socle(M)
        filt = projective_filtration_report(M)
        report = report + filt
        payload["composition_factors"] = [list(f) for f in series.factors]
        payload["socle"] = [list(s) for s in soc]
        payload["filtration"] = dict(filt)
        text.append(f"  composition factors (bottom first): {series.factors}")
        text.append(f"  socle: {soc}")
        text += checklist(filt)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(dot_export(M))
        text.append(f"  graph written to {args.dot}")
    emit(cfg, payload, text)
    return EXIT_VERIFY if not all(ok for _, ok in report) else EXIT_OK


def cmd_transport(cfg: RunConfig, args) -> int:
    n, m = cfg.n, cfg.m
    Y = transport_simple(n, m, args.i, args.j, check=False)
    yd = yd_report(Y)
    B = braiding_of(Y, check=False)
    braid_ok = braid_equation_holds(B)
    d = B.dim
    entries = []
    text = [f"F(V({args.i},{args.j})) over T({n},{m}), dim {d}"]
    text += checklist(yd + [("braid equation", braid_ok)])
    text.append("  braiding c(v_a v_b) = sum coef v_u v_s:")
    for a in range(d):
        for b in range(d):
            terms = []
            for u in range(d):
                for s in range(d):
                    c = B.entry(a, b, u, s)
                    if not c.is_zero():
                        entries.append({"in": [a, b], "out": [u, s], "coef": format_scalar(c, SYMBOL)})
                        terms.append(f"({fmt(c, cfg)}) v{u}v{s}")
            text.append(f"    c(v{a}v{b}) = {' + '.join(terms) or '0'}")
    payload = {
        "n": n,
        "m": m,
        "i": args.i,
        "j": args.j,
        "yd": dict(yd),
        "braid_equation": braid_ok,
        "braiding": entries,
    }
    if n == 2:
        from .classify import dynkin, heck_match

        D = dynkin(m, args.i, args.j)
        h = heck_match(m, args.i, args.j)
        payload["diagram"] = D.exponents(2 * m)
        payload["table_row"] = list(h.row) if h else None
        text.append(f"  diagram exponents (xi powers): {D.exponents(2 * m)}")
        text.append(f"  table row: {h.row if h else None}")
    emit(cfg, payload, text)
    return EXIT_OK if braid_ok and all(ok for _, ok in yd) else EXIT_VERIFY


def cmd_dims(cfg: RunConfig, args) -> int:
    B = braiding_of(transport_simple(cfg.n, cfg.m, args.i, args.j))
    g = nichols_dims(B, max_deg=args.max_degree, budget=cfg.budget)
    dims = g.dims + [0] * (args.max_degree + 1 - len(g.dims))
    payload = {"n": cfg.n, "m": cfg.m, "i": args.i, "j": args.j, "dims": dims, "truncated": g.truncated, "total": g.total}
    text = [f"graded dims of B(V({args.i},{args.j})): {dims}", f"  truncated: {g.truncated}  total: {g.total}"]
    emit(cfg, payload, text)
    return EXIT_OK


def cmd_classify(cfg: RunConfig, args) -> int:
    from .classify import classify_all, classify_pair

    if cfg.n != 2:
        raise PreconditionError("classification is implemented for n = 2")
    if (args.i is None) != (args.j is None):
        raise PreconditionError("give both i and j, or neither")
    if args.i is None:
        pairs = classify_all(cfg.m, cfg.budget)
    else:
        pairs = [classify_pair(cfg.m, args.i, args.j, cfg.budget)]
    text = [f"classification over H(2,{cfg.m})"]
    for p in pairs:
        extra = f"  dims {p.nichols_dims}" if p.finite else ""
        pres = f"  [{p.presentation}: {'verified' if p.presentation_verified else 'FAILED'}]" if p.presentation else ""
        text.append(f"  V({p.i},{p.j})  dim {p.dim_module}  finite={p.finite}  {p.certificate}{extra}{pres}")
    emit(cfg, {"m": cfg.m, "pairs": [p.to_json() for p in pairs]}, text)
    bad = any(p.presentation_verified is False for p in pairs)
    return EXIT_VERIFY if bad else EXIT_OK


def cmd_reproduce(cfg: RunConfig, args) -> int:
    from .classify import reproduce_m2, reproduce_m3

    which = REPRODUCE_ALIASES.get(args.which, args.which)
    rep = {"m2": reproduce_m2, "m3": reproduce_m3}[which](cfg.budget)
    text = [f"finite Nichols algebras over H(2,{rep.m}):"]
    for p in rep.pairs:
        if p.finite:
            text.append(
                f"  V({p.i},{p.j})  dim B = {sum(p.nichols_dims)}  {p.certificate}"
                + (f"  [{p.presentation}]" if p.presentation else "")
            )
    text += [f"  PROBLEM: {x}" for x in rep.problems] or ["  all checks pass"]
    payload = {
        "m": rep.m,
        "finite": [{"i": i, "j": j, "nichols_dim": d} for (i, j), d in sorted(rep.found.items())],
        "problems": rep.problems,
        "pairs": [p.to_json() for p in rep.pairs],
    }
    emit(cfg, payload, text)
    return EXIT_OK if rep.ok else EXIT_VERIFY


def cmd_double(cfg: RunConfig, args) -> int:
    D = build_double(cfg.n, cfg.m)
    expected = cfg.n**4 * cfg.m**2
    rows = [(f"dim D = n^4 m^2 = {expected}", D.dim == expected)]
    if args.check:
        rows += verify_double_presentation(D)
        rows += verify_harpoon_identities(D)
        hopf = verify_hopf(D, sample=args.sample, seed=cfg.seed)
        rows += [(f"hopf axiom (sampled): {k}", v) for k, v in hopf.items()]
    emit(cfg, {"n": cfg.n, "m": cfg.m, "dim": D.dim, "checks": dict(rows)}, [f"D({cfg.n},{cfg.m})"] + checklist(rows))
    return EXIT_OK if all(ok for _, ok in rows) else EXIT_VERIFY


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--n", type=int, default=d(2))
    p.add_argument("--m", type=int, default=d(2))
    p.add_argument("--json", action="store_true", default=d(False))
    p.add_argument("--budget", type=int, default=d(DEFAULT_BUDGET), help="max tensor dimension")
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--decimal", action="store_true", default=d(False), help="add float renderings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nichols-radford", description=__doc__)
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _common(p, suppress=True)
        p.set_defaults(fn=fn)
        return p

    add("simples", cmd_simples, "list and verify all simple modules")
    p = add("module", cmd_module, "build one module")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--dot", metavar="PATH")
    p.add_argument("--projective", action="store_true")
    p = add("transport", cmd_transport, "YD module and braiding of V(i,j)")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p = add("dims", cmd_dims, "graded Nichols dimensions")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--max-degree", type=int, default=16)
    p = add("classify", cmd_classify, "finiteness classification (n = 2)")
    p.add_argument("i", type=int, nargs="?")
    p.add_argument("j", type=int, nargs="?")
    p = add("reproduce", cmd_reproduce, "reproduce the m = 2 or m = 3 classification")
    p.add_argument("which", choices=["m2", "m3", *REPRODUCE_ALIASES])
    p = add("double", cmd_double, "build the Drinfeld double")
    p.add_argument("--check", action="store_true")
    p.add_argument("--sample", type=int, default=40, help="pairs sampled for the Hopf axioms")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.n, args.m, args.budget, "json" if args.json else "text", args.seed, args.decimal)
    try:
        cfg.validate()
        return args.fn(cfg, args)
    except PreconditionError as e:
        print(f"precondition violated: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except CapacityError as e:
        print(f"capacity exceeded: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ArithmeticError, ValueError, AssertionError, RuntimeError) as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
