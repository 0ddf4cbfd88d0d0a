"""Command-line driver.

    bcplus [-l bc+|bc|c+] FILE [name=int ...] query=LABEL [N]
           [--horizon-cap K] [--dump-theory] [--dump-graph]

``N`` is the number of solutions to print (0 prints all, default 1).
Exit status is 0 when solutions were printed, 1 when there were none and
2 on any diagnostic.
"""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from .action import Kind
from .errors import BcplusError
from .formula import natural_key
from .grounder import MODES, load_text
from .query import DEFAULT_HORIZON_CAP, QuerySpec, Solution, solve
from .stable import DEFAULT_BUDGET
from .transition import edge_list, to_dot, transition_graph

EXTENSIONS = (".bcp", ".bc", ".cp", ".txt")

_BINDING = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)=(-?\d+)$")


def atom_text(atom, kind: Kind) -> str | None:
    """How one true atom is printed; None when it is not printed at all."""
    if atom.value == "t":
        return atom.constant
    if atom.value == "f":
        return None
    if kind is Kind.ACTION and atom.value == "none":
        return None
    return f"{atom.constant}={atom.value}"


def _line(atoms, kinds: dict[str, Kind]) -> list[str]:
    shown = (atom_text(a, kinds[a.constant]) for a in sorted(atoms, key=natural_key))
    return [t for t in shown if t is not None]


def format_solution(sol: Solution, index: int, kinds: dict[str, Kind]) -> str:
    blocks = []
    for i in range(sol.horizon + 1):
        if i > 0:
            acts = _line(sol.events[i - 1], kinds)
            if acts:
                blocks.append("\tACTIONS:  " + " ".join(acts))
        blocks.append(f"\t{i}:  " + " ".join(_line(sol.states[i], kinds)))
    return f"Solution: {index}\n" + "\n\n".join(blocks)


def format_solutions(solutions, kinds: dict[str, Kind]) -> str:
    if not solutions:
        return ""
    return "\n\n".join(format_solution(s, i + 1, kinds) for i, s in enumerate(solutions)) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bcplus",
        description="Find plans and transitions of BC+, BC and C+ action descriptions.",
    )
    p.add_argument("-l", "--language", choices=MODES, default="bc+", help="input language (default bc+)")
    p.add_argument("file", help="program file; .bcp, .bc, .cp or .txt is tried when missing")
    p.add_argument("rest", nargs="*", metavar="ARG",
                   help="name=int constant bindings, query=LABEL, and an optional solution count")
    p.add_argument("--horizon-cap", type=int, default=DEFAULT_HORIZON_CAP,
                   help="largest horizon tried for queries without a fixed maxstep")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search budget per stable-model call")
    p.add_argument("--dump-theory", action="store_true", help="print the timed theory for the query horizon")
    p.add_argument("--dump-graph", action="store_true", help="print the transition graph")
    p.add_argument("--graph-format", choices=("edges", "dot"), default="edges")
    return p


class UsageError(BcplusError):
    pass


def _split_rest(rest: list[str]):
    bindings: dict[str, int] = {}
    label = None
    count = 1
    seen_count = False
    for arg in rest:
        if arg.startswith("query="):
            label = arg[len("query="):]
            if not label:
                raise UsageError("empty query label")
        elif _BINDING.match(arg):
            name, value = _BINDING.match(arg).groups()
            bindings[name] = int(value)
        elif arg.isdigit() and not seen_count:
            count = int(arg)
            seen_count = True
        else:
            raise UsageError(f"unrecognized argument {arg!r}")
    return bindings, label, count


def _resolve(path: str) -> Path:
    p = Path(path)
    if p.exists():
        return p
    for ext in EXTENSIONS:
        q = Path(path + ext)
        if q.exists():
            return q
    raise UsageError(f"cannot read {path}")


def _select(program, label: str | None) -> QuerySpec:
    if label is not None:
        return program.query(label)
    if len(program.queries) == 1:
        return program.queries[0]
    raise UsageError("no query selected; pass query=LABEL")


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    out: list[str] = []
    try:
        bindings, label, count = _split_rest(args.rest)
        path = _resolve(args.file)
        program = load_text(path.read_text(encoding="utf-8"), bindings, args.language)
        d = program.bcplus()
        kinds = {c.name: c.kind for c in d.constants}
        if args.dump_graph:
            g = transition_graph(d, args.budget)
            out.append(to_dot(g) if args.graph_format == "dot" else edge_list(g))
        if label is None and args.dump_graph and not program.queries:
            stdout.write("".join(out))
            return 0
        q = _select(program, label)
        result = solve(d, q, limit=count, horizon_cap=args.horizon_cap, budget=args.budget)
        if args.dump_theory:
            m = result.horizon if result.horizon is not None else args.horizon_cap
            out.append(d.timed_theory(m).dump(d.laws))
        if result.found:
            out.append(format_solutions(result.solutions, kinds))
        else:
            out.append(result.describe().capitalize() + ".\n")
    except (BcplusError, OSError) as e:
        print(f"bcplus: error: {e}", file=stderr)
        return 2
    stdout.write("".join(out))
    return 0 if result.found else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
