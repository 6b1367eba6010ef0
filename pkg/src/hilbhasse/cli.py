"""Command-line driver for the verification suites and table generators.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error,
3 enumeration bound refused.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import DEFAULT_ENUM_BOUND, BoundExceededError
from .field import FieldCtx
from .schubert import hasse_section, torus_weight_space, vanishing_order_on_stratum
from .weyl import WeylElem, all_weyl_elems, hodge_character, weyl_act
from .zipgroup import OrbitLabelError, bruhat_census, enumerate_E, enumerate_G, orbits
from .zips import (check_equivalence, enumerate_zips, inert_perm, split_perm,
                   zip_from_json_obj, zip_to_json_obj)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


@dataclass
class RunConfig:
    command: str
    p: int = 2
    k: int = 1
    n: int = 1
    perm: str = "split"
    bound: int = DEFAULT_ENUM_BOUND
    output: str = "-"
    format: str = "tsv"
    target: str = "eta"
    file: str = "-"


def _parse_perm(spec: str, n: int) -> tuple[int, ...]:
    if spec == "split":
        return split_perm(n)
    if spec == "inert":
        return inert_perm(n)
    perm = tuple(int(x) for x in spec.split(","))
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{spec!r} is not a permutation of 0..{n - 1}")
    return perm


def _parse_target(spec: str, n: int):
    if spec == "eta":
        return hodge_character(n)
    if spec == "w0eta":
        return weyl_act(WeylElem.longest(n), hodge_character(n))
    a_part, c_part = spec.split(";")
    return (tuple(int(x) for x in a_part.split(",")), int(c_part))


def _emit(config: RunConfig, text: str):
    if config.output == "-":
        sys.stdout.write(text)
    else:
        with open(config.output, "w") as fh:
            fh.write(text)


def _cmd_verify_equivalence(config: RunConfig) -> int:
    ctx = FieldCtx(config.p, config.k)
    perm = _parse_perm(config.perm, config.n)
    total = 0
    failures = []
    for z in enumerate_zips(ctx, config.n, perm, bound=config.bound):
        total += 1
        report = check_equivalence(z)
        if not report.consistent:
            failures.append((zip_to_json_obj(z), report.to_json_obj()))
    ok = total - len(failures)
    if config.format == "json":
        _emit(config, json.dumps({"total": total, "consistent": ok,
                                  "failures": [{"zip": z, "report": r} for z, r in failures]},
                                 sort_keys=True) + "\n")
    else:
        lines = [f"FAIL\t{json.dumps(z, sort_keys=True)}\t{json.dumps(r, sort_keys=True)}"
                 for z, r in failures]
        lines.append(f"{ok}/{total} consistent")
        _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK if not failures else EXIT_CHECK_FAILED


def _cmd_strata_table(config: RunConfig) -> int:
    ctx = FieldCtx(config.p, config.k)
    h = hasse_section(ctx, config.n)
    rows = []
    for w in all_weyl_elems(config.n):
        length = w.length()
        order = vanishing_order_on_stratum(h, w)
        rows.append({"w": w.to_string(), "length": length,
                     "codim": config.n - length, "ord": int(order)})
    if config.format == "json":
        _emit(config, json.dumps(rows, sort_keys=True) + "\n")
    else:
        lines = ["w\tlength\tcodim\tord"]
        lines += [f"{r['w']}\t{r['length']}\t{r['codim']}\t{r['ord']}" for r in rows]
        _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_weight_space(config: RunConfig) -> int:
    ctx = FieldCtx(config.p, config.k)
    target = _parse_target(config.target, config.n)
    basis = torus_weight_space(ctx, config.n, target)
    if config.format == "json":
        _emit(config, json.dumps({"dimension": len(basis),
                                  "basis": [str(b) for b in basis]}, sort_keys=True) + "\n")
    else:
        lines = [f"dimension\t{len(basis)}"] + [str(b) for b in basis]
        _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_census(config: RunConfig) -> int:
    ctx = FieldCtx(config.p, config.k)
    rows = bruhat_census(ctx, config.n, bound=config.bound)
    borel_size = next(count for w, count in rows if w.length() == 0)
    q = ctx.q
    ok = True
    out_rows = []
    for w, count in rows:
        expected = q ** w.length() * borel_size
        ok = ok and count == expected
        out_rows.append({"w": w.to_string(), "length": w.length(),
                         "cell_size": count, "expected": expected})
    total = sum(count for _, count in rows)
    group_size = len(enumerate_G(ctx, config.n, bound=config.bound))
    ok = ok and total == group_size
    if config.format == "json":
        _emit(config, json.dumps({"rows": out_rows, "total": total,
                                  "group_size": group_size, "ok": ok},
                                 sort_keys=True) + "\n")
    else:
        lines = ["w\tlength\tcell_size\texpected"]
        lines += [f"{r['w']}\t{r['length']}\t{r['cell_size']}\t{r['expected']}"
                  for r in out_rows]
        lines.append(f"total\t{total}\tgroup\t{group_size}\t{'OK' if ok else 'MISMATCH'}")
        _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_orbits(config: RunConfig) -> int:
    ctx = FieldCtx(config.p, config.k)
    g_list = enumerate_G(ctx, config.n, bound=config.bound)
    e_list = enumerate_E(ctx, config.n, bound=config.bound)
    if len(g_list) * len(e_list) > config.bound:
        raise BoundExceededError(len(g_list) * len(e_list), config.bound, "orbit scan")
    try:
        partition = orbits(g_list, e_list)
    except OrbitLabelError as exc:
        sys.stderr.write(f"orbit label inconsistency: {exc}\n")
        return EXIT_CHECK_FAILED
    by_label = partition.by_label()
    out_rows = []
    for w in all_weyl_elems(config.n):
        classes = by_label.get(w, [])
        sizes = sorted((len(c) for c in classes), reverse=True)
        out_rows.append({"w": w.to_string(), "length": w.length(),
                         "cell_size": sum(sizes), "orbit_count": len(sizes),
                         "orbit_sizes": sizes})
    if config.format == "json":
        _emit(config, json.dumps(out_rows, sort_keys=True) + "\n")
    else:
        lines = ["w\tlength\tcell_size\torbit_count\torbit_sizes"]
        lines += [f"{r['w']}\t{r['length']}\t{r['cell_size']}\t{r['orbit_count']}\t"
                  + ",".join(str(s) for s in r["orbit_sizes"]) for r in out_rows]
        _emit(config, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_zip_check(config: RunConfig) -> int:
    if config.file == "-":
        obj = json.load(sys.stdin)
    else:
        with open(config.file) as fh:
            obj = json.load(fh)
    z = zip_from_json_obj(obj)
    report = check_equivalence(z)
    if config.format == "json":
        _emit(config, json.dumps(report.to_json_obj(), sort_keys=True) + "\n")
    else:
        _emit(config, "flags\thasse_order\tm_max\tconsistent\n" + report.tsv_row() + "\n")
    return EXIT_OK if report.consistent else EXIT_CHECK_FAILED


_COMMANDS = {
    "verify-equivalence": _cmd_verify_equivalence,
    "strata-table": _cmd_strata_table,
    "weight-space": _cmd_weight_space,
    "census": _cmd_census,
    "orbits": _cmd_orbits,
    "zip-check": _cmd_zip_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hilbhasse",
        description="Exact desk-scale checks relating partial Hasse flags, "
                    "exterior-power filtration levels, Bruhat cells and "
                    "zip-group orbits over small finite fields.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, n_required=True):
        sp.add_argument("--p", type=int, default=2, help="field characteristic")
        sp.add_argument("--k", type=int, default=1, help="field extension degree")
        if n_required:
            sp.add_argument("--n", type=int, required=True, help="number of factors")
        sp.add_argument("--bound", type=int, default=DEFAULT_ENUM_BOUND,
                        help="refuse enumerations larger than this")
        sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
        sp.add_argument("--output", default="-", help="output path, - for stdout")

    sp = sub.add_parser("verify-equivalence",
                        help="check hasse order == filtration level on every zip")
    add_common(sp)
    sp.add_argument("--perm", default="split",
                    help="split, inert, or an explicit comma permutation")

    sp = sub.add_parser("strata-table", help="vanishing orders along all cells")
    add_common(sp)

    sp = sub.add_parser("weight-space", help="monomial basis of a torus weight space")
    add_common(sp)
    sp.add_argument("--target", default="eta",
                    help="eta, w0eta, or explicit 'a1,...,an;c'")

    sp = sub.add_parser("census", help="Bruhat cell sizes vs the q^l(w) law")
    add_common(sp)

    sp = sub.add_parser("orbits", help="orbit partition refined by stratum labels")
    add_common(sp)

    sp = sub.add_parser("zip-check", help="run the equivalence check on a zip JSON file")
    sp.add_argument("--file", default="-", help="zip JSON path, - for stdin")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.add_argument("--output", default="-")
    return parser


def run(config: RunConfig) -> int:
    try:
        return _COMMANDS[config.command](config)
    except BoundExceededError as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return EXIT_BOUND
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fields = {k: v for k, v in vars(args).items() if v is not None}
    config = RunConfig(**fields)
    return run(config)


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
