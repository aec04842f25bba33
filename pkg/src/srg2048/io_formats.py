"""On-disk formats: the binary vertex-set container and text exports.

Vertex-set container (".dat"), a flat sequence of records:

    record  :=  size  entry[size]
    size    :=  1 unsigned byte, must lie in [2, 85]
    entry   :=  3 bytes, one unsigned integer below 2^24

    offset:  0     1       4       7
             +-----+-------+-------+----
             |size | entry | entry | ...
             +-----+-------+-------+----

Each entry is the *encoding of a coset representative* (not a vertex
index); the reader maps encodings to vertex indices and rejects values
that are not canonical representatives.  Entry byte order is little-endian
unless told otherwise; the writer emits entries in ascending order, and a
stream in that canonical order round-trips byte-exactly.

The GAP export is a text file defining `A` (the 2048 adjacency lists,
1-based) and `MIS` (the vertex-number lists of the given sets), followed by
a fixed trailer that loads the grape package and rebuilds the graph.
"""

from __future__ import annotations

from .coclique import VertexSet
from .coset_graph import CosetReps, Graph
from .errors import DatFormatError, DomainError

DAT_MIN_SIZE = 2
DAT_MAX_SIZE = 85
ENTRY_BYTES = 3

GAP_TRAILER = (
    'LoadPackage("grape");;\n'
    "Gra:=Graph(Group(), [1..2048], OnPoints,\n"
    "function(x,y) return (x in A[y]); end, true);\n"
)


def read_dat(data: bytes, reps: CosetReps, byteorder: str = "little") -> list[VertexSet]:
    """Parse a stream of vertex-set records into VertexSets (vertex indices).

    Rejects sizes outside [2, 85], entries that are not representative
    encodings, duplicate entries, and streams that do not end exactly on a
    record boundary.
    """
    sets: list[VertexSet] = []
    pos = 0
    total = len(data)
    while pos < total:
        size = data[pos]
        if not DAT_MIN_SIZE <= size <= DAT_MAX_SIZE:
            raise DatFormatError(
                f"set size {size} is not in the range from {DAT_MIN_SIZE} to {DAT_MAX_SIZE}",
                offset=pos,
            )
        end = pos + 1 + size * ENTRY_BYTES
        if end > total:
            raise DatFormatError(
                f"truncated record: need {end - pos} bytes, stream has {total - pos}",
                offset=pos,
            )
        indices: list[int] = []
        for i in range(size):
            off = pos + 1 + i * ENTRY_BYTES
            value = int.from_bytes(data[off : off + ENTRY_BYTES], byteorder)
            idx = reps.try_index(value)
            if idx is None:
                raise DatFormatError(
                    f"entry {value:#08x} is not a proper coset representation",
                    offset=off,
                )
            indices.append(idx)
        members = tuple(sorted(indices))
        for a, b in zip(members, members[1:]):
            if a == b:
                raise DatFormatError(
                    f"duplicate entry for vertex {a} in one record", offset=pos
                )
        sets.append(VertexSet(members))
        pos = end
    return sets


def write_dat(sets, reps: CosetReps, byteorder: str = "little") -> bytes:
    """Serialize vertex sets; inverse of read_dat for canonical streams."""
    out = bytearray()
    for i, s in enumerate(sets):
        if not DAT_MIN_SIZE <= s.size <= DAT_MAX_SIZE:
            raise DatFormatError(
                f"set {i + 1} has size {s.size}, writable sizes are "
                f"{DAT_MIN_SIZE} to {DAT_MAX_SIZE}"
            )
        if s.members[-1] >= len(reps):
            raise DomainError(
                f"set {i + 1} contains vertex {s.members[-1]}, graph has {len(reps)}"
            )
        out.append(s.size)
        for v in s.members:
            out += reps.encoding_of(v).to_bytes(ENTRY_BYTES, byteorder)
    return bytes(out)


def export_gap(g: Graph, sets=()) -> str:
    """GAP/grape text: adjacency lists, the sets, and the fixed trailer."""
    parts: list[str] = ["A:=[\n"]
    last = g.n - 1
    for u in range(g.n):
        row = ",".join(str(v + 1) for v in g.neighbors(u))
        parts.append(f"[{row}]{',' if u != last else ''}\n")
    parts.append("];\n")
    parts.append("MIS:=[\n")
    n_sets = len(sets)
    for i, s in enumerate(sets):
        row = ",".join(str(v + 1) for v in s.members)
        parts.append(f"[{row}]{',' if i != n_sets - 1 else ''}\n")
    parts.append("];\n")
    parts.append(GAP_TRAILER)
    return "".join(parts)


def export_edge_list(g: Graph) -> str:
    """Plain text debug export: one '1-based u v' line per edge, u < v."""
    return "".join(f"{u + 1} {v + 1}\n" for u, v in g.edges())
