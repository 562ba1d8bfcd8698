"""Text and JSON file formats for ribbon graphs, embedded graphs and matroids.

Ribbon graph text (``.rg``)::

    ribbon v1
    vertices: 2
    vertex 0: a.0 b.0 c.0
    vertex 1: a.1 b.1 c.1
    isolated: 0          # optional
    marked: a b          # optional; makes it an embedded graph

Each edge name appears exactly twice, once with end ``.0`` and once with
``.1``.  Edges are numbered in order of first appearance.  Rotations are
counterclockwise.

Matroid text::

    matroid n=2
    0 0
    1 1
    ...

one line per subset (hex bitmask, rank); a file may hold several blocks.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .embed import EmbeddedGraph
from .matroid import RankOracle
from .rgraph import RibbonGraph, edges_of


class FormatError(ValueError):
    pass


@dataclass(frozen=True)
class NamedMap:
    """A map or embedded graph together with its edge names."""

    graph: RibbonGraph | EmbeddedGraph
    names: tuple[str, ...]

    @property
    def carrier(self) -> RibbonGraph:
        return self.graph.carrier if isinstance(self.graph, EmbeddedGraph) else self.graph

    def edge_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no edge named {name!r}; edges are {list(self.names)}") from None


def default_names(m: int) -> tuple[str, ...]:
    if m <= 26:
        return tuple(chr(ord("a") + i) for i in range(m))
    return tuple(f"e{i}" for i in range(m))


_NAME = re.compile(r"^[A-Za-z0-9_]+$")


def _rotations_to_map(rotations: list[list[str]], isolated: int) -> tuple[RibbonGraph, tuple[str, ...]]:
    names: list[str] = []
    index: dict[str, int] = {}
    seen: set[str] = set()
    for rot in rotations:
        for tok in rot:
            if tok in seen:
                raise FormatError(f"half-edge {tok} appears twice")
            seen.add(tok)
            name, dot, end = tok.rpartition(".")
            if not dot or end not in ("0", "1") or not _NAME.match(name):
                raise FormatError(f"bad half-edge token {tok!r}; expected <name>.0 or <name>.1")
            if name not in index:
                index[name] = len(names)
                names.append(name)
    for name in names:
        if f"{name}.0" not in seen or f"{name}.1" not in seen:
            raise FormatError(f"edge {name} must appear with both ends .0 and .1")
    sigma = [0] * (2 * len(names))
    for rot in rotations:
        hs = []
        for tok in rot:
            name, _, end = tok.rpartition(".")
            hs.append(2 * index[name] + int(end))
        if not hs:
            isolated += 1
        for a, b in zip(hs, hs[1:] + hs[:1]):
            sigma[a] = b
    return RibbonGraph(tuple(sigma), isolated), tuple(names)


def _wrap(G: RibbonGraph, names: tuple[str, ...], marked: list[str] | None) -> NamedMap:
    if marked is None:
        return NamedMap(G, names)
    mask = 0
    for name in marked:
        if name not in names:
            raise FormatError(f"marked edge {name!r} is not an edge")
        mask |= 1 << names.index(name)
    return NamedMap(EmbeddedGraph(G, mask), names)


def parse_rg(text: str) -> NamedMap:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines or lines[0] != "ribbon v1":
        raise FormatError("expected header line 'ribbon v1'")
    declared = None
    rotations: dict[int, list[str]] = {}
    isolated = 0
    marked = None
    for line in lines[1:]:
        key, colon, rest = line.partition(":")
        if not colon:
            raise FormatError(f"cannot parse line {line!r}")
        key = key.strip()
        rest = rest.split()
        try:
            if key == "vertices":
                declared = int(rest[0])
            elif key.startswith("vertex "):
                i = int(key.split()[1])
                if i in rotations:
                    raise FormatError(f"vertex {i} listed twice")
                rotations[i] = rest
            elif key == "isolated":
                isolated = int(rest[0])
            elif key == "marked":
                marked = rest
            else:
                raise FormatError(f"unknown key {key!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"cannot parse line {line!r}") from exc
    if declared is None:
        raise FormatError("missing 'vertices:' line")
    if sorted(rotations) != list(range(declared)):
        raise FormatError(f"expected vertex lines 0..{declared - 1}, got {sorted(rotations)}")
    if isolated < 0:
        raise FormatError("negative isolated count")
    G, names = _rotations_to_map([rotations[i] for i in range(declared)], isolated)
    return _wrap(G, names, marked)


def format_rg(nm: NamedMap) -> str:
    G = nm.carrier
    out = ["ribbon v1"]
    verts = G.vertices()
    out.append(f"vertices: {len(verts)}")
    for i, cyc in enumerate(verts):
        toks = " ".join(f"{nm.names[h // 2]}.{h % 2}" for h in cyc)
        out.append(f"vertex {i}: {toks}")
    if G.isolated:
        out.append(f"isolated: {G.isolated}")
    if isinstance(nm.graph, EmbeddedGraph):
        out.append("marked: " + " ".join(nm.names[i] for i in edges_of(nm.graph.marked)))
    return "\n".join(out) + "\n"


def map_to_json(nm: NamedMap) -> dict:
    G = nm.carrier
    data = {
        "format": "ribbon",
        "version": 1,
        "edges": list(nm.names),
        "rotations": [[f"{nm.names[h // 2]}.{h % 2}" for h in cyc] for cyc in G.vertices()],
        "isolated": G.isolated,
    }
    if isinstance(nm.graph, EmbeddedGraph):
        data["marked"] = [nm.names[i] for i in edges_of(nm.graph.marked)]
    return data


def map_from_json(data: dict) -> NamedMap:
    if data.get("format") != "ribbon":
        raise FormatError("JSON document is not a ribbon graph")
    try:
        G, names = _rotations_to_map([list(r) for r in data["rotations"]], int(data.get("isolated", 0)))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed ribbon JSON: {exc}") from exc
    if "edges" in data and set(data["edges"]) != set(names):
        raise FormatError("edge list does not match rotations")
    if "edges" in data:
        # honour the declared edge order
        order = [names.index(n) for n in data["edges"]]
        G, names = _reorder(G, names, order)
    return _wrap(G, names, data.get("marked"))


def _reorder(G: RibbonGraph, names, order):
    pos = {old: new for new, old in enumerate(order)}
    sigma = [0] * G.num_half_edges
    for h, s in enumerate(G.sigma):
        sigma[2 * pos[h // 2] + h % 2] = 2 * pos[s // 2] + s % 2
    return RibbonGraph(tuple(sigma), G.isolated), tuple(names[i] for i in order)


def parse_matroids(text: str) -> list[RankOracle]:
    blocks: list[tuple[int, dict[int, int]]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"matroid\s+n=(\d+)", line)
        if m:
            blocks.append((int(m.group(1)), {}))
            continue
        if not blocks:
            raise FormatError("expected header 'matroid n=<int>'")
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"cannot parse rank line {line!r}")
        try:
            H, r = int(parts[0], 16), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"cannot parse rank line {line!r}") from exc
        n, table = blocks[-1]
        if H >> n:
            raise FormatError(f"subset {parts[0]} outside ground set of size {n}")
        if H in table:
            raise FormatError(f"subset {parts[0]} listed twice")
        table[H] = r
    if not blocks:
        raise FormatError("no matroid blocks")
    out = []
    for n, table in blocks:
        if len(table) != 1 << n:
            raise FormatError(f"incomplete rank table: {len(table)} of {1 << n} subsets")
        out.append(RankOracle(n, tuple(table[H] for H in range(1 << n))))
    return out


def format_matroid(M: RankOracle) -> str:
    lines = [f"matroid n={M.n}"]
    lines += [f"{H:x} {r}" for H, r in enumerate(M.ranks)]
    return "\n".join(lines) + "\n"


def read_any(text: str) -> NamedMap | list[RankOracle]:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return map_from_json(data)
    first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), "")
    if first.startswith("matroid"):
        return parse_matroids(text)
    return parse_rg(text)
