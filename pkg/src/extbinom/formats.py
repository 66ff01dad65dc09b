"""TSV and JSON emitters. Big values are always written as decimal strings."""
from __future__ import annotations

import json

from .exact import SequenceTable, TriangleTable

__all__ = ["sequence_to_json", "sequence_to_tsv", "triangle_to_json", "triangle_to_tsv"]


def triangle_to_tsv(table: TriangleTable) -> str:
    """Header ``k`` then n = 0..n_max; one line per row k."""
    lines = ["\t".join(["k"] + [str(n) for n in range(table.n_max + 1)])]
    for k, row in enumerate(table.dense()):
        lines.append("\t".join([str(k)] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"


def triangle_to_json(table: TriangleTable) -> str:
    return json.dumps([[str(v) for v in row] for row in table.dense()])


def sequence_to_tsv(seq: SequenceTable) -> str:
    lines = ["n\tc"] + [f"{n}\t{v}" for n, v in enumerate(seq.values)]
    return "\n".join(lines) + "\n"


def sequence_to_json(seq: SequenceTable) -> str:
    return json.dumps([str(v) for v in seq.values])
