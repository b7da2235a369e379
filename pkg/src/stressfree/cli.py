"""Command-line interface.

Every subcommand takes a graph argument that is either a path to an
edge-list file or a catalog name (``stressfree catalog list``).  Output is
line-oriented text; ``--json`` prints one JSON object instead::

    {"command": [...], "input": {"digest": ..., "n": ..., "m": ...},
     "seeds": [...], "result": {...}, "elapsed_s": ...}

Everything except ``elapsed_s`` is reproducible from the same arguments.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import catalog
from .certify import Certificate, CertificateFormatError, certify, replay_certificate, surface_analysis
from .ff import trial_seeds
from .graph import Graph, GraphError, read_edge_list, to_edge_list
from .minors import SearchBudgetExceeded, check_mader, has_minor, linkless_obstruction, mader_bound
from .rigidity import DEFAULT_SEED, DEFAULT_TRIALS, analyze_rigidity
from .shifting import chromatic_of_shifted, shift


class CLIError(Exception):
    pass


def load_graph(arg: str) -> Graph:
    if os.path.exists(arg):
        return read_edge_list(arg)
    try:
        return catalog.get(arg)
    except GraphError:
        raise CLIError(f"{arg!r} is neither a readable edge-list file nor a catalog graph") from None


def _witness_text(w) -> str:
    return json.dumps([sorted(b) for b in w.branch_sets])


def cmd_rigidity(args, g: Graph):
    rep = analyze_rigidity(g, args.d, trials=args.trials, base_seed=args.seed)
    result = {
        "d": rep.d, "n": rep.n, "e": rep.e, "rank": rep.rank, "stress_dim": rep.stress_dim,
        "target_rank": rep.target_rank, "is_stress_free": rep.is_stress_free, "is_rigid": rep.is_rigid,
        "trial_ranks": list(rep.trial_ranks),
    }
    text = [f"{k}: {v}" for k, v in result.items()]
    return result, list(rep.seeds), text


def cmd_shift(args, g: Graph):
    s = shift(g, args.kind, trials=args.trials, base_seed=args.seed)
    chi = chromatic_of_shifted(s)
    result = {"kind": s.kind, "n": s.n, "edges": [list(e) for e in s.sorted_edges()],
              "chromatic_number": chi, "consensus": s.consensus}
    text = [f"kind: {s.kind}", f"edges: {' '.join(f'{a}{b}' if s.n < 10 else f'{a}-{b}' for a, b in s.sorted_edges())}",
            f"chromatic_number: {chi}", f"consensus: {s.consensus}"]
    return result, list(s.seeds), text


def cmd_minor(args, g: Graph):
    h = load_graph(args.pattern)
    w = has_minor(g, h, budget=args.budget)
    result = {"pattern": args.pattern, "found": w is not None,
              "branch_sets": [sorted(b) for b in w.branch_sets] if w else None}
    return result, [], [_witness_text(w) if w else "none"]


def cmd_linkless(args, g: Graph):
    w = linkless_obstruction(g, budget=args.budget)
    result = {"linkless": w is None, "obstruction": w.to_json() if w else None}
    text = [f"linkless: {w is None}"]
    if w:
        text.append(f"obstruction: pattern with {w.pattern.n} vertices, branch sets {_witness_text(w)}")
    return result, [], text


def cmd_certify(args, g: Graph):
    out = certify(g, args.r, trials=args.trials, base_seed=args.seed, budget=args.budget,
                  exhaustive=not args.no_minor_check)
    if out.witness is not None:
        result = {"r": args.r, "outcome": "witness", "branch_sets": [sorted(b) for b in out.witness.branch_sets]}
        return result, [], [f"K{args.r} minor: {_witness_text(out.witness)}"]
    cert = out.certificate
    text_cert = cert.to_text()
    result = {"r": args.r, "outcome": "certificate", "certificate": text_cert}
    text = [text_cert.rstrip("\n")]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text_cert)
    if args.verify:
        rep = replay_certificate(g, cert, verify_numeric=True)
        result["replay"] = {"ok": rep.ok, "path": rep.path, "reason": rep.reason}
        text.append(f"replay: {'ok' if rep.ok else f'FAILED at {rep.path}: {rep.reason}'}")
        if not rep.ok:
            raise CLIError(f"certificate failed replay at {rep.path}: {rep.reason}")
    return result, list(cert.seeds), text


def cmd_replay(args, g: Graph):
    with open(args.certificate, encoding="utf-8") as fh:
        cert = Certificate.from_text(fh.read())
    rep = replay_certificate(g, cert, verify_numeric=args.numeric, deep=args.deep)
    result = {"ok": rep.ok, "path": rep.path, "reason": rep.reason, "nodes": rep.nodes,
              "numeric_checks": rep.numeric_checks}
    text = ["replay: ok" if rep.ok else f"replay: FAILED at {rep.path}: {rep.reason}"]
    return result, list(cert.seeds), text


def cmd_surface(args, g: Graph):
    try:
        genus = Fraction(args.genus)
    except (ValueError, ZeroDivisionError):
        raise CLIError(f"bad genus {args.genus!r}") from None
    rep = surface_analysis(g, genus, kind=args.kind, trials=args.trials, base_seed=args.seed)
    result = {"genus": str(rep.genus), "heawood": rep.heawood, "kind": rep.kind, "reduced_n": rep.reduced_n,
              "reduced_m": rep.reduced_m, "shifted_chromatic": rep.shifted_chromatic,
              "obstructed": rep.obstructed}
    verdict = "cannot embed" if rep.obstructed else "no obstruction"
    text = [f"{k}: {v}" for k, v in result.items()] + [f"verdict: {verdict}"]
    return result, trial_seeds(args.seed, args.trials), text


def cmd_mader(args, g: Graph):
    bound = mader_bound(args.r, g.n)
    ok = check_mader(g, args.r)
    result = {"r": args.r, "n": g.n, "edges": g.m, "bound": bound, "within_bound": ok}
    return result, [], [f"edges: {g.m}", f"bound: {bound}", f"within_bound: {ok}"]


def _catalog(args) -> int:
    if args.action == "list":
        for e in catalog.entries():
            print(f"{e.name}\tn={e.graph.n}\tm={e.graph.m}\t{','.join(sorted(e.tags))}")
        return 0
    if not args.name:
        raise CLIError("catalog dump needs a graph name")
    sys.stdout.write(to_edge_list(catalog.get(args.name)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stressfree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", help="edge-list file or catalog name")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
        sp.add_argument("--budget", type=int, default=10**8, help="minor-search node budget")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("rigidity", cmd_rigidity, "generic rigidity and stress-freeness")
    sp.add_argument("-d", type=int, required=True, help="dimension")
    sp = graph_cmd("shift", cmd_shift, "algebraic shifting")
    sp.add_argument("--kind", choices=["exterior", "symmetric"], default="symmetric")
    sp = graph_cmd("minor", cmd_minor, "minor search with branch-set witness")
    sp.add_argument("--pattern", required=True, help="catalog name (e.g. K5, petersen) or edge-list file")
    graph_cmd("linkless", cmd_linkless, "Petersen-family minor test")
    sp = graph_cmd("certify", cmd_certify, "certificate of (r-2)-stress-freeness or K_r witness")
    sp.add_argument("-r", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="replay with numeric leaf checks")
    sp.add_argument("--out", help="write the certificate to this file")
    sp.add_argument("--no-minor-check", action="store_true",
                    help="skip the exhaustive K_r search after a successful contraction run")
    sp = graph_cmd("replay", cmd_replay, "replay a certificate file against a graph")
    sp.add_argument("certificate")
    sp.add_argument("--numeric", action="store_true")
    sp.add_argument("--deep", action="store_true")
    sp = graph_cmd("surface", cmd_surface, "surface-embedding obstruction from shifting")
    sp.add_argument("--genus", required=True, help="positive genus, e.g. 1 or 1/2")
    sp.add_argument("--kind", choices=["exterior", "symmetric"], default="symmetric")
    sp = graph_cmd("mader", cmd_mader, "Mader edge bound check")
    sp.add_argument("-r", type=int, required=True)

    cp = sub.add_parser("catalog", help="list or dump built-in graphs")
    cp.add_argument("action", choices=["list", "dump"])
    cp.add_argument("name", nargs="?")
    cp.set_defaults(func=None)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "catalog":
            return _catalog(args)
        g = load_graph(args.graph)
        start = time.perf_counter()
        result, seeds, text = args.func(args, g)
        elapsed = time.perf_counter() - start
    except (CLIError, GraphError, CertificateFormatError, SearchBudgetExceeded, ValueError, OSError) as exc:
        print(f"stressfree {args.command}: error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        report = {
            "command": [args.command] + (argv if argv is not None else sys.argv[1:])[1:],
            "input": {"digest": g.digest(), "n": g.n, "m": g.m},
            "seeds": seeds,
            "result": result,
            "elapsed_s": round(elapsed, 6),
        }
        print(json.dumps(report, sort_keys=True))
    else:
        print("\n".join(text))
    return 0


if __name__ == "__main__":
    sys.exit(main())
