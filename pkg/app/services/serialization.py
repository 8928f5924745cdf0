"""
JSON and DOT codecs for decompositions.

JSON output is canonical (sorted pairs, normalized and sorted paths, no
timestamps), so parse followed by dump reproduces the input byte for byte.
"""

import colorsys
import logging
from typing import Any, Dict, List, Optional

import graphviz
from pydantic import ValidationError

from app.exceptions import DocumentError, InvalidParameterError
from app.models.graph_model import Edge, Path, PathDecomposition, RemovalRecord
from app.schemas.decomposition_schema import DecompositionDocument
from app.services.graph_core import complete_graph, host_from_removed

logger = logging.getLogger(__name__)

PALETTE = (
    "red",
    "blue",
    "forestgreen",
    "orange",
    "purple",
    "brown",
    "deeppink",
    "cyan4",
    "gold3",
    "navy",
    "olivedrab",
    "tomato",
    "slateblue",
    "darkgoldenrod",
    "magenta4",
    "steelblue",
    "sienna",
    "seagreen",
    "orchid",
    "gray30",
)


def path_color(index: int) -> str:
    """
    Color of the index-th path in sorted order; past the named palette, evenly spread hues.
    """
    if index < len(PALETTE):
        return PALETTE[index]
    hue = ((index - len(PALETTE)) * 0.618033988749895) % 1.0
    r, g, b = colorsys.hsv_to_rgb(hue, 0.75, 0.8)
    return "#{:02x}{:02x}{:02x}".format(int(r * 255), int(g * 255), int(b * 255))


def record_metadata(record: RemovalRecord) -> Dict[str, Any]:
    removal: Dict[str, Any] = {"kind": record.kind.value}
    if record.center is not None:
        removal["center"] = record.center
    if record.cycle_length is not None:
        removal["cycle_length"] = record.cycle_length
    if record.fork is not None:
        removal["fork"] = {
            "center": record.fork.center,
            "arms": [list(arm) for arm in record.fork.arms],
            "base": list(record.fork.base),
        }
    return removal


def to_document(
    d: PathDecomposition,
    construction: Optional[str] = None,
    record: Optional[RemovalRecord] = None,
) -> DecompositionDocument:
    metadata: Dict[str, Any] = {}
    if construction is not None:
        metadata["construction"] = construction
    if record is not None:
        metadata["removal"] = record_metadata(record)
    removed = complete_graph(d.n).edges - d.host.edges if d.n >= 1 else frozenset()
    return DecompositionDocument(
        n=d.n,
        removed_edges=[tuple(e) for e in removed],
        paths=[list(p) for p in d.paths],
        metadata=metadata,
    )


def from_document(doc: DecompositionDocument) -> PathDecomposition:
    """
    Rebuild the decomposition; the host is K_n minus the removed edges.
    """
    try:
        host = host_from_removed(doc.n, [Edge(a, b) for a, b in doc.removed_edges])
        return PathDecomposition(host, tuple(Path(p) for p in doc.paths))
    except InvalidParameterError as exc:
        raise DocumentError(str(exc)) from exc


def parse_document(text: str) -> DecompositionDocument:
    try:
        return DecompositionDocument.model_validate_json(text)
    except ValidationError as exc:
        raise DocumentError(f"not a decomposition document: {exc.error_count()} error(s)\n{exc}") from exc


def dump_document(doc: DecompositionDocument) -> str:
    return doc.model_dump_json(indent=2)


def to_json(
    d: PathDecomposition,
    construction: Optional[str] = None,
    record: Optional[RemovalRecord] = None,
) -> str:
    return dump_document(to_document(d, construction, record))


def from_json(text: str) -> PathDecomposition:
    return from_document(parse_document(text))


def _path_graph(name: str, d: PathDecomposition, indices: List[int]) -> graphviz.Graph:
    dot = graphviz.Graph(name=name, comment=f"K_{d.n}: {len(d.paths)} paths")
    dot.attr("node", shape="circle")
    for v in d.host.vertices:
        dot.node(str(v))
    for i in indices:
        color = path_color(i)
        for a, b in d.paths[i].edges:
            dot.edge(str(a), str(b), color=color, label=f"P{i + 1}")
    return dot


def to_dot(d: PathDecomposition, split: bool = False) -> str:
    """
    Undirected DOT graph with one edge color per path, or one graph per path when `split`.
    """
    if not split:
        return _path_graph(f"K{d.n}", d, list(range(len(d.paths)))).source
    return "\n".join(_path_graph(f"P{i + 1}", d, [i]).source for i in range(len(d.paths)))
