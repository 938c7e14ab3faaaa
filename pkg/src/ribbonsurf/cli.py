"""Command line front end.

Every subcommand prints a deterministic payload: byte-stable JSON documents
for anything that produces a map, plain ``key: value`` lines otherwise.
Exit codes: 0 success, 1 domain error (bad input, failed validation),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import io as graph_io
from .cayley import cayley_ball
from .classify import (
    Cancel,
    ContractEdge,
    CutGlue,
    DeleteEdge,
    classify,
    random_filling_map,
)
from .errors import PreconditionError, RibbonError
from .groups import (
    DiscretePath,
    Presentation,
    free_presentation,
    homotopic,
    is_trivial_word,
    pi1_presentation,
    surface_group,
    zxz_presentation,
)
from .iso import are_isomorphic
from .maps import refine, validate_rotation_lists
from .surfaces import petal, surface_report


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    output: str


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def parse_group_spec(spec: str) -> Presentation:
    """free:<rank>, surface:<genus>, or zxz."""
    if spec == "zxz":
        return zxz_presentation()
    kind, _, arg = spec.partition(":")
    if kind in ("free", "surface") and arg:
        try:
            value = int(arg)
        except ValueError:
            raise PreconditionError(f"bad group spec {spec!r}") from None
        if value < 0:
            raise PreconditionError(f"bad group spec {spec!r}")
        return free_presentation(value) if kind == "free" else surface_group(value)
    raise PreconditionError(
        f"bad group spec {spec!r}: expected free:<rank>, surface:<genus>, or zxz")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise PreconditionError(f"cannot read {path!r}: {exc}") from exc


def _load_map(path: str):
    return graph_io.parse_graph(_read_text(path))


def _json_dump(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _move_record(move) -> dict:
    if isinstance(move, DeleteEdge):
        return {"move": "delete", "label": move.label}
    if isinstance(move, ContractEdge):
        return {"move": "contract", "label": move.label}
    if isinstance(move, Cancel):
        return {"move": "cancel", "label": move.label}
    if isinstance(move, CutGlue):
        return {"move": "cut_glue", "new_label": move.new_label,
                "old_label": move.old_label, "cut": list(move.cut),
                "chord_sign": move.chord_sign}
    raise PreconditionError(f"unknown move {move!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ribbonsurf",
                     description="rotation systems, surfaces, and their groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, help_text, *, file_arg=True, json_flag=True):
        p = sub.add_parser(name, help=help_text)
        if file_arg:
            p.add_argument("file", help="graph document path, or - for stdin")
        if json_flag:
            p.add_argument("--json", action="store_true", dest="as_json")
        return p

    cmd("validate", "check a graph document")
    cmd("faces", "list face boundary words")
    cmd("genus", "genus of the filled surface")
    cmd("report", "full surface report")
    cmd("refine", "subdivide every edge at a midpoint", json_flag=False)
    cmd("classify", "reduce to the canonical polygon word")
    p = cmd("iso", "compare two maps up to dart relabelling", file_arg=False)
    p.add_argument("file_a")
    p.add_argument("file_b")
    p = cmd("pi1", "fundamental group presentation")
    p.add_argument("--base", type=int, default=0)
    p = cmd("trivial", "decide a word in a supported group",
            file_arg=False)
    p.add_argument("--group", required=True, help="free:<k>, surface:<g>, zxz")
    p.add_argument("word")
    p = cmd("homotopic", "decide whether two edge paths are homotopic")
    p.add_argument("word_a")
    p.add_argument("word_b")
    p.add_argument("--base", type=int, default=0)
    p = cmd("cayley", "bounded Cayley complex of a supported group",
            file_arg=False)
    p.add_argument("--group", required=True, help="free:<k>, surface:<g>, zxz")
    p.add_argument("--radius", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    p = cmd("petal", "the one-vertex genus-g petal map", file_arg=False,
            json_flag=False)
    p.add_argument("genus", type=int)
    p = cmd("random", "pseudorandom filling map of prescribed genus",
            file_arg=False, json_flag=False)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--moves", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    cmd("emit-dot", "Graphviz rendering of a map", json_flag=False)
    return parser


def _run_validate(args) -> CommandResult:
    doc = graph_io.parse_document(_read_text(args.file))
    report = validate_rotation_lists(doc.edges, doc.rotations)
    if args.as_json:
        payload = _json_dump({"ok": report.ok,
                              "issues": [{"code": c, "message": m}
                                         for c, m in report.issues]})
    elif report.ok:
        payload = "ok"
    else:
        payload = "\n".join(f"{code}: {message}" for code, message in report.issues)
    return CommandResult(0 if report.ok else 1, payload)


def _run_faces(args) -> CommandResult:
    report = surface_report(_load_map(args.file))
    words = [graph_io.format_word(word) or "(empty)"
             for word in report.face_words]
    if args.as_json:
        return CommandResult(0, _json_dump(
            {"faces": [[ref.token() for ref in word]
                       for word in report.face_words]}))
    return CommandResult(0, "\n".join(words))


def _run_genus(args) -> CommandResult:
    g = surface_report(_load_map(args.file)).genus
    if args.as_json:
        return CommandResult(0, _json_dump({"genus": g}))
    return CommandResult(0, f"genus: {g}")


def _run_report(args) -> CommandResult:
    report = surface_report(_load_map(args.file))
    if args.as_json:
        return CommandResult(0, _json_dump({
            "vertices": report.num_vertices,
            "edges": report.num_edges,
            "faces": report.num_faces,
            "euler_characteristic": report.euler_characteristic,
            "genus": report.genus,
            "face_words": [[ref.token() for ref in word]
                           for word in report.face_words],
        }))
    lines = [f"vertices: {report.num_vertices}",
             f"edges: {report.num_edges}",
             f"faces: {report.num_faces}",
             f"euler_characteristic: {report.euler_characteristic}",
             f"genus: {report.genus}"]
    lines += [f"face: {graph_io.format_word(word) or '(empty)'}"
              for word in report.face_words]
    return CommandResult(0, "\n".join(lines))


def _run_refine(args) -> CommandResult:
    refined = refine(_load_map(args.file))
    return CommandResult(0, graph_io.serialize_graph(refined))


def _run_classify(args) -> CommandResult:
    result = classify(_load_map(args.file))
    word = (graph_io.format_word([(r.label, r.sign) for r in result.canonical_word])
            if result.canonical_word else "S0")
    if args.as_json:
        return CommandResult(0, _json_dump({
            "genus": result.genus,
            "canonical_word": (result.canonical_word.tokens()
                               if result.canonical_word else None),
            "moves": [_move_record(m) for m in result.trace],
        }))
    return CommandResult(0, "\n".join([f"genus: {result.genus}",
                                       f"canonical_word: {word}",
                                       f"moves: {len(result.trace)}"]))


def _run_iso(args) -> CommandResult:
    bijection = are_isomorphic(_load_map(args.file_a), _load_map(args.file_b))
    if args.as_json:
        return CommandResult(0, _json_dump({
            "isomorphic": bijection is not None,
            "mapping": list(bijection.mapping) if bijection else None,
        }))
    return CommandResult(0, f"isomorphic: {'true' if bijection else 'false'}")


def _run_pi1(args) -> CommandResult:
    pres = pi1_presentation(_load_map(args.file), base=args.base)
    if args.as_json:
        return CommandResult(0, _json_dump({
            "generators": list(pres.generators),
            "relators": [graph_io.format_word(rel) or "1"
                         for rel in pres.relators],
            "genus_hint": pres.genus_hint,
        }))
    lines = ["generators: " + (" ".join(pres.generators) or "(none)")]
    lines += [f"relator: {graph_io.format_word(rel) or '1'}"
              for rel in pres.relators]
    return CommandResult(0, "\n".join(lines))


def _run_trivial(args) -> CommandResult:
    pres = parse_group_spec(args.group)
    word = graph_io.parse_word(args.word, generators=pres.generators)
    verdict = is_trivial_word(word, pres)
    if args.as_json:
        return CommandResult(0, _json_dump({"trivial": verdict}))
    return CommandResult(0, f"trivial: {'true' if verdict else 'false'}")


def _path_from_word(ribbon_map, letters, base: int) -> DiscretePath:
    if not letters:
        return DiscretePath((), start=base)
    return DiscretePath(tuple(ribbon_map.dart_index(letter)
                              for letter in letters))


def _run_homotopic(args) -> CommandResult:
    ribbon_map = _load_map(args.file)
    labels = ribbon_map.edge_labels
    p1 = _path_from_word(ribbon_map,
                         graph_io.parse_word(args.word_a, generators=labels),
                         args.base)
    p2 = _path_from_word(ribbon_map,
                         graph_io.parse_word(args.word_b, generators=labels),
                         args.base)
    verdict = homotopic(ribbon_map, p1, p2, base=args.base)
    if args.as_json:
        return CommandResult(0, _json_dump({"homotopic": verdict}))
    return CommandResult(0, f"homotopic: {'true' if verdict else 'false'}")


def _run_cayley(args) -> CommandResult:
    ball = cayley_ball(parse_group_spec(args.group), args.radius)
    if args.dot:
        return CommandResult(0, graph_io.cayley_ball_to_dot(ball))
    if args.as_json:
        return CommandResult(0, graph_io.cayley_ball_to_json(ball))
    return CommandResult(0, "\n".join([f"vertices: {ball.num_vertices}",
                                       f"edges: {len(ball.edges)}",
                                       f"cells: {len(ball.cells)}"]))


def _run_petal(args) -> CommandResult:
    if args.genus < 0:
        raise PreconditionError("genus must be >= 0")
    document = graph_io.serialize_graph(petal(args.genus),
                                        name=f"petal_{args.genus}")
    return CommandResult(0, document)


def _run_random(args) -> CommandResult:
    if args.genus < 0 or args.moves < 0:
        raise PreconditionError("genus and moves must be >= 0")
    ribbon_map = random_filling_map(args.genus, args.moves, args.seed)
    name = f"random_g{args.genus}_m{args.moves}_s{args.seed}"
    return CommandResult(0, graph_io.serialize_graph(ribbon_map, name=name))


def _run_emit_dot(args) -> CommandResult:
    return CommandResult(0, graph_io.map_to_dot(_load_map(args.file)))


_RUNNERS = {
    "validate": _run_validate,
    "faces": _run_faces,
    "genus": _run_genus,
    "report": _run_report,
    "refine": _run_refine,
    "classify": _run_classify,
    "iso": _run_iso,
    "pi1": _run_pi1,
    "trivial": _run_trivial,
    "homotopic": _run_homotopic,
    "cayley": _run_cayley,
    "petal": _run_petal,
    "random": _run_random,
    "emit-dot": _run_emit_dot,
}


def dispatch(argv) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        return CommandResult(2, f"usage error: {exc}")
    except SystemExit as exc:  # --help
        return CommandResult(exc.code or 0, "")
    try:
        return _RUNNERS[args.command](args)
    except RibbonError as exc:
        return CommandResult(1, f"error: {exc}")
    except IndexError as exc:
        return CommandResult(1, f"error: {exc}")


def main() -> None:
    result = dispatch(sys.argv[1:])
    if result.output:
        stream = sys.stderr if result.exit_code == 2 else sys.stdout
        print(result.output, end="" if result.output.endswith("\n") else "\n",
              file=stream)
    sys.exit(result.exit_code)
