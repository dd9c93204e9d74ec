"""
Text, JSON and CSV renderings of cocharacter results. Text uses exponent shorthand for
repeated parts so it can be compared with printed tables; JSON and CSV never do.
"""

import csv
import io
import json
from typing import Any, Dict, List, Mapping, Sequence

from .graded import BiCharacter, GradedCocharacter, bicharacter_to_json, graded_to_json
from .partitions import Partition, format_partition
from .schur_ring import CharacterDecomposition, decomposition_to_json

FORMATS = ("text", "json", "csv")


def _weighted(multiplicity: int, body: str) -> str:
    return body if multiplicity == 1 else f"{multiplicity}{body}"


def _csv(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _parts(partition: Partition) -> str:
    return " ".join(str(part) for part in partition)


def _json(data: Dict[str, Any]) -> str:
    return json.dumps(data) + "\n"


def decomposition_text(character: CharacterDecomposition) -> str:
    """E.g. "(3) + 2(2,1) + (1^3)"; the zero character renders as "0"."""
    if not character.terms:
        return "0"
    return " + ".join(
        _weighted(multiplicity, format_partition(lam))
        for lam, multiplicity in character.terms.items()
    )


def bicharacter_text(character: BiCharacter) -> str:
    if not character.terms:
        return "0"
    return " + ".join(
        _weighted(multiplicity, f"{format_partition(lam)}x{format_partition(mu)}")
        for (lam, mu), multiplicity in character.terms.items()
    )


def render_decomposition(character: CharacterDecomposition, output_format: str) -> str:
    if output_format == "json":
        return _json(decomposition_to_json(character))
    if output_format == "csv":
        return _csv(
            ("partition", "mult"),
            [(_parts(lam), multiplicity) for lam, multiplicity in character.terms.items()],
        )
    return decomposition_text(character) + "\n"


def render_expansion(expansion: Mapping[Partition, int]) -> str:
    """[{"nu": [...], "coeff": N}, ...] in the order of the expansion."""
    return (
        json.dumps([{"nu": list(nu), "coeff": coefficient} for nu, coefficient in expansion.items()])
        + "\n"
    )


def render_bicharacter(character: BiCharacter, output_format: str) -> str:
    if output_format == "json":
        return _json(bicharacter_to_json(character))
    if output_format == "csv":
        return _csv(
            ("k", "l", "lambda", "mu", "mult"),
            [
                (character.k, character.l, _parts(lam), _parts(mu), multiplicity)
                for (lam, mu), multiplicity in character.terms.items()
            ],
        )
    return bicharacter_text(character) + "\n"


def render_graded(graded: GradedCocharacter, output_format: str) -> str:
    """One layer per line in text, one row per component in CSV."""
    if output_format == "json":
        return _json(graded_to_json(graded))
    if output_format == "csv":
        return _csv(
            ("k", "l", "lambda", "mu", "mult"),
            [
                (layer.k, layer.l, _parts(lam), _parts(mu), multiplicity)
                for layer in graded.layers.values()
                for (lam, mu), multiplicity in layer.terms.items()
            ],
        )
    return "".join(
        f"k={layer.k} l={layer.l}: {bicharacter_text(layer)}\n"
        for layer in graded.layers.values()
    )
