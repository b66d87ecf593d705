"""``graphgrab`` command line: generate, solve, verify, search, play, export.

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 contract or
capacity error (bad document, invalid root, oversized instance).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import families as fam
from .document import GraphDocument, to_dot
from .engine import NORMAL, GameMode, play_out, resolve_player, solve
from .graph import ContractError, feasible_moves_normal, feasible_moves_rooted, mask_of, members
from .strategies import OptimalStrategy
from .verify import CLAIMS, run_all, run_claim, search_counterexample

FAMILIES = ("tree", "path", "kmn-tree", "blowup", "g-tree", "bt-tree", "blowup-cycle", "bipartite-even")


def _config(args) -> fam.GeneratorConfig:
    parity = "even" if args.even else "odd" if args.odd else None
    return fam.GeneratorConfig(
        seed=args.seed, min_n=args.min_n, max_n=args.max_n, min_k=args.min_k, max_k=args.max_k,
        min_class=1, max_class=args.max_class, attach_prob=0.0 if args.no_attach else args.attach_prob,
        max_attach=args.max_attach, weight_low=args.weight_low, weight_high=args.weight_high,
        zero_prob=args.zero_prob, parity=parity, edge_prob=args.edge_prob,
    )


def cmd_gen(args) -> int:
    cfg = _config(args)
    meta = {"family": args.family, "seed": args.seed}
    f = args.family
    if f in ("tree", "path", "bipartite-even"):
        make = {"tree": fam.random_tree, "path": fam.random_path, "bipartite-even": fam.random_even_bipartite}[f]
        doc = GraphDocument(make(cfg), meta=meta)
    else:
        if f == "kmn-tree":
            pg = fam.random_kmn_tree(cfg, args.m, args.n, attach=not args.no_attach)
        elif f == "blowup":
            pg = fam.random_bt_tree(cfg, attach=False)
        elif f == "bt-tree":
            pg = fam.random_bt_tree(cfg, attach=not args.no_attach)
        elif f == "g-tree":
            pg = fam.random_g_tree(cfg)
        else:
            pg = fam.random_blowup_cycle(cfg)
        doc = GraphDocument(pg.graph, list(pg.classes), None, {**meta, "base_edges": [list(e) for e in pg.base.edges]})
    sys.stdout.write(doc.dumps())
    return 0


def _read_doc(path: str) -> GraphDocument:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return GraphDocument.loads(text)


def _parse_root(spec: str | None, doc: GraphDocument) -> int | None:
    if spec is None:
        return doc.root
    if spec == "all":
        return doc.graph.full
    try:
        vs = [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise ContractError(f"--root expects comma-separated vertex ids or 'all', got {spec!r}")
    if any(not 0 <= v < doc.graph.n for v in vs):
        raise ContractError(f"--root references a vertex outside [0, {doc.graph.n})")
    return mask_of(vs)


def _ids(mask: int) -> str:
    return ",".join(map(str, members(mask))) or "-"


def cmd_solve(args) -> int:
    doc = _read_doc(args.input)
    g = doc.graph
    root = _parse_root(args.root, doc)
    mode = NORMAL if root is None else GameMode.rooted(root)
    game = solve(g, mode)
    name = "N(G,{})" if root is None else "R(G,S,{})"
    print(f"{name.format(1)}={game.score(1)} {name.format(2)}={game.score(2)}")
    if root is not None:
        print(f"S={_ids(root)}")
    if args.player is not None:
        print(f"{name.format(args.player)}={game.score(args.player)} (player {resolve_player(args.player, g.n)})")
    print(f"w(G)={g.weight()}")
    if g.n:
        print(f"feasible first moves: {_ids(game.feasible_moves(g.full))}")
        print(f"optimal first moves: {_ids(game.optimal_moves())}")
    if args.transcript:
        strat = OptimalStrategy(game)
        t = play_out(g, mode, strat, strat)
        for i, m in enumerate(t.moves, 1):
            print(f"{i}. player {m.player} takes {m.vertex} (w={m.weight})")
        a, b = t.totals
        print(f"totals: player 1 {a}, player 2 {b}")
    return 0


def _write_witness(directory: Path, name: str, witness: dict, extra: dict) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    doc = GraphDocument.from_dict(witness["document"])
    doc.meta = {**doc.meta, **extra, "values": witness["values"], "violated": witness["violated"]}
    path = directory / f"{name}.json"
    doc.save(path)
    return path


def cmd_verify(args) -> int:
    if args.all:
        reports = run_all(seed=args.seed)
    else:
        reports = run_claim(args.claim, args.count, args.max_n, args.seed)
    tally: dict[str, list[int]] = {}
    failures = 0
    out_dir = Path(args.witness_dir)
    for i, rep in enumerate(reports):
        rec = rep.to_record()
        t = tally.setdefault(rep.claim, [0, 0])
        t[0] += rep.passed
        t[1] += 1
        if not rep.passed:
            failures += 1
            if rep.witness is not None:
                path = _write_witness(out_dir, f"{rep.claim}_seed{args.seed}_{i:05d}", rep.witness,
                                      {"claim": rep.claim, "instance": rep.instance})
                rec["witness_path"] = str(path)
        if not args.quiet or not rep.passed:
            print(json.dumps(rec, sort_keys=True))
    for claim in sorted(tally):
        ok, total = tally[claim]
        print(f"# {claim}: {ok}/{total} pass")
    print(f"# {'FAIL' if failures else 'PASS'}: {failures} failing reports")
    return 1 if failures else 0


def cmd_search(args) -> int:
    exhaustive_n = min(args.max_n, args.exhaustive_n)
    zero_one_n = exhaustive_n if args.weights == "01-exhaustive" else 0 if args.weights == "random" else args.zero_one_n
    count = args.count if args.count is not None else (0 if args.weights == "01-exhaustive" else 10_000)
    findings = Path(args.findings)
    written = [0]

    def stream(rep, kind):
        rec = rep.to_record()
        path = _write_witness(findings, f"{rep.claim}_seed{args.seed}_{written[0]:04d}", rep.witness,
                              {"claim": rep.claim, "instance": rep.instance, "kind": kind})
        written[0] += 1
        rec["witness_path"] = str(path)
        print(json.dumps(rec, sort_keys=True), flush=True)

    res = search_counterexample(args.seed, lemma_notes=not args.no_notes, on_instance=lambda r: stream(r, "finding"),
                                max_exhaustive_n=exhaustive_n, zero_one_max_n=zero_one_n, weightings=args.weightings,
                                random_count=count, random_max_n=args.max_n)
    for note in res.notes:
        stream(note, "note")
    print(f"# instances={res.instances} findings={len(res.findings)} notes={len(res.notes)}")
    return 0


def cmd_play(args, read=input, write=print) -> int:
    doc = _read_doc(args.input)
    g = doc.graph
    root = _parse_root(args.root, doc)
    mode = NORMAL if root is None else GameMode.rooted(root)
    machine = OptimalStrategy(solve(g, mode))
    human = 1 if args.human == "first" else 2
    remaining, history = g.full, ()
    totals = {1: Fraction(0), 2: Fraction(0)}
    while remaining:
        player = 1 if len(history) % 2 == 0 else 2
        legal = feasible_moves_normal(g, remaining) if root is None else feasible_moves_rooted(g, remaining, root)
        write("remaining: " + " ".join(f"{v}(w={g.weights[v]})" for v in members(remaining)))
        write(f"feasible: {_ids(legal)}")
        if player == human:
            try:
                line = read("your move> ").strip()
            except EOFError:
                write("aborted")
                return 0
            try:
                v = int(line)
            except ValueError:
                write(f"not a vertex id: {line!r}")
                continue
            reason = "no such vertex" if not 0 <= v < g.n else mode.legal(g, remaining, v)
            if reason:
                write(f"rejected {v}: {reason}")
                continue
        else:
            v = machine.choose(remaining, history)
            write(f"machine takes {v} (w={g.weights[v]})")
        totals[player] += g.weights[v]
        remaining &= ~(1 << v)
        history += (v,)
    w = g.weight()
    write(f"final: you {totals[human]}, machine {totals[3 - human]}, total {w}")
    write("you secured at least half" if 2 * totals[human] >= w else "you secured less than half")
    return 0


def cmd_export_dot(args) -> int:
    sys.stdout.write(to_dot(_read_doc(args.input)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="graphgrab", description="Exact solver and claim checker for the graph grabbing game.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random instance document")
    g.add_argument("--family", choices=FAMILIES, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--min-n", type=int, default=1)
    g.add_argument("--max-n", type=int, default=14)
    g.add_argument("--min-k", type=int, default=1)
    g.add_argument("--max-k", type=int, default=5)
    g.add_argument("--max-class", type=int, default=3)
    g.add_argument("--m", type=int, help="first partite class size (kmn-tree)")
    g.add_argument("--n", type=int, help="second partite class size (kmn-tree)")
    g.add_argument("--no-attach", action="store_true", help="no attached trees")
    g.add_argument("--attach-prob", type=float, default=0.5)
    g.add_argument("--max-attach", type=int, default=3)
    par = g.add_mutually_exclusive_group()
    par.add_argument("--even", action="store_true")
    par.add_argument("--odd", action="store_true")
    g.add_argument("--weight-low", type=int, default=0)
    g.add_argument("--weight-high", type=int, default=100)
    g.add_argument("--zero-prob", type=float, default=0.0)
    g.add_argument("--edge-prob", type=float, default=0.5)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="exact scores and optimal first moves")
    s.add_argument("input", nargs="?", default="-")
    s.add_argument("--root", help="comma-separated root vertices, or 'all'")
    s.add_argument("--player", type=int, choices=(1, 2, -1, -2))
    s.add_argument("--transcript", action="store_true", help="print an optimal-vs-optimal playout")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check claims on seeded corpora")
    which = v.add_mutually_exclusive_group(required=True)
    which.add_argument("--claim", choices=sorted(CLAIMS))
    which.add_argument("--all", action="store_true")
    v.add_argument("--count", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--witness-dir", default="witnesses")
    v.add_argument("--quiet", action="store_true", help="print failing records and the summary only")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("search", help="search for counterexamples on even bipartite graphs")
    c.add_argument("--max-n", type=int, default=10)
    c.add_argument("--exhaustive-n", type=int, default=8)
    c.add_argument("--zero-one-n", type=int, default=6)
    c.add_argument("--weights", choices=("mixed", "01-exhaustive", "random"), default="mixed")
    c.add_argument("--weightings", type=int, default=3, help="random weightings per enumerated graph")
    c.add_argument("--count", type=int, help="random instances (default 10000, or 0 with 01-exhaustive)")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--findings", default="findings")
    c.add_argument("--no-notes", action="store_true", help="skip single-vertex lemma inequality notes")
    c.set_defaults(func=cmd_search)

    pl = sub.add_parser("play", help="play against the exact solver")
    pl.add_argument("input", nargs="?", default="-")
    pl.add_argument("--human", choices=("first", "second"), default="first")
    pl.add_argument("--root")
    pl.set_defaults(func=cmd_play)

    d = sub.add_parser("export-dot", help="Graphviz export with classes as clusters")
    d.add_argument("input", nargs="?", default="-")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ContractError as exc:
        print(f"graphgrab: error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"graphgrab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
