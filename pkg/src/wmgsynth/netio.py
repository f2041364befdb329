"""Text, JSON and DOT formats for systems and reachability graphs.

Net text format (line based, ``#`` starts a comment)::

    transitions a b c
    place p1 in a:2 out b:3 m0 1

``in t:w`` sets W(t, p) = w and ``out t:w`` sets W(p, t) = w.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import NetFormatError
from .petri import Lts, PetriNet, Place, System

_ARC_RE = re.compile(r"([^:\s]+):(\d+)\Z")


def parse_text(text: str) -> System:
    transitions: tuple[str, ...] | None = None
    places: list[Place] = []
    m0: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "transitions":
            if transitions is not None:
                raise NetFormatError("transitions declared twice", lineno)
            transitions = tuple(tokens[1:])
            if not transitions:
                raise NetFormatError("no transitions declared", lineno)
        elif head == "place":
            if transitions is None:
                raise NetFormatError("place before transitions line", lineno)
            if len(tokens) < 2:
                raise NetFormatError("place needs an id", lineno)
            pid = tokens[1]
            if pid in m0:
                raise NetFormatError(f"duplicate place {pid}", lineno)
            arcs = {"in": {}, "out": {}}
            section = None
            marking = None
            rest = iter(tokens[2:])
            for tok in rest:
                if tok in ("in", "out"):
                    section = tok
                elif tok == "m0":
                    try:
                        marking = int(next(rest))
                    except (StopIteration, ValueError):
                        raise NetFormatError("m0 needs an integer", lineno) from None
                    section = None
                else:
                    match = _ARC_RE.match(tok)
                    if section is None or match is None:
                        raise NetFormatError(f"unexpected token {tok!r}", lineno)
                    t, w = match.group(1), int(match.group(2))
                    if t not in transitions:
                        raise NetFormatError(f"unknown transition {t}", lineno)
                    if t in arcs[section]:
                        raise NetFormatError(f"arc {section} {t} given twice", lineno)
                    arcs[section][t] = w
            if marking is None:
                raise NetFormatError(f"place {pid} lacks m0", lineno)
            try:
                places.append(Place(pid, arcs["in"], arcs["out"]))
            except NetFormatError as exc:
                raise NetFormatError(str(exc), lineno) from None
            m0[pid] = marking
        else:
            raise NetFormatError(f"unknown directive {head!r}", lineno)
    if transitions is None:
        raise NetFormatError("missing transitions line")
    return System(PetriNet(transitions, tuple(places)), m0)


def emit_text(sys: System, comments: dict[str, str] | None = None) -> str:
    lines = ["transitions " + " ".join(sys.net.transitions)]
    for p in sys.net.places:
        parts = ["place", p.id]
        if p.pre:
            parts.append("in")
            parts += [f"{t}:{w}" for t, w in p.pre.items()]
        if p.post:
            parts.append("out")
            parts += [f"{t}:{w}" for t, w in p.post.items()]
        parts += ["m0", str(sys.m0[p.id])]
        line = " ".join(parts)
        if comments and p.id in comments:
            line += "  # " + comments[p.id]
        lines.append(line)
    return "\n".join(lines) + "\n"


def system_to_json(sys: System) -> dict:
    return {
        "transitions": list(sys.net.transitions),
        "places": [
            {"id": p.id, "in": dict(p.pre), "out": dict(p.post), "m0": sys.m0[p.id]}
            for p in sys.net.places
        ],
    }


def system_from_json(data: dict) -> System:
    try:
        places = tuple(Place(p["id"], p.get("in", {}), p.get("out", {})) for p in data["places"])
        m0 = {p["id"]: int(p.get("m0", 0)) for p in data["places"]}
        return System(PetriNet(tuple(data["transitions"]), places), m0)
    except (KeyError, TypeError) as exc:
        raise NetFormatError(f"malformed net JSON: {exc}") from None


def load_system(path: str | Path) -> System:
    """Read a system from a ``.json`` file or the text format."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return system_from_json(json.loads(text))
    return parse_text(text)


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def system_to_dot(sys: System) -> str:
    out = ["digraph net {", "  rankdir=LR;"]
    for t in sys.net.transitions:
        out.append(f"  {_dot_id('t:' + t)} [shape=box, label={_dot_id(t)}];")
    for p in sys.net.places:
        label = f"{p.id}\\n{sys.m0[p.id]}"
        out.append(f"  {_dot_id('p:' + p.id)} [shape=circle, label=\"{label}\"];")
        for t, w in p.pre.items():
            out.append(f"  {_dot_id('t:' + t)} -> {_dot_id('p:' + p.id)} [label=\"{w}\"];")
        for t, w in p.post.items():
            out.append(f"  {_dot_id('p:' + p.id)} -> {_dot_id('t:' + t)} [label=\"{w}\"];")
    out.append("}")
    return "\n".join(out) + "\n"


def lts_to_dot(lts: Lts) -> str:
    out = ["digraph rg {", "  node [shape=ellipse];"]
    for s, marking in enumerate(lts.states):
        label = ",".join(f"{p}={k}" for p, k in zip(lts.place_ids, marking))
        attrs = f"label={_dot_id(label)}"
        if s == lts.initial:
            attrs += ", peripheries=2"
        out.append(f"  s{s} [{attrs}];")
    for s, t, d in lts.arcs:
        out.append(f"  s{s} -> s{d} [label={_dot_id(t)}];")
    out.append("}")
    return "\n".join(out) + "\n"


def lts_to_json(lts: Lts) -> dict:
    return {
        "places": list(lts.place_ids),
        "states": [list(s) for s in lts.states],
        "initial": lts.initial,
        "arcs": [[s, t, d] for s, t, d in lts.arcs],
    }


def lts_from_json(data: dict) -> Lts:
    return Lts(
        tuple(data["places"]),
        [tuple(s) for s in data["states"]],
        [(int(s), str(t), int(d)) for s, t, d in data["arcs"]],
        int(data.get("initial", 0)),
    )
