"""Certificate and coloring files (JSON) and DOT export."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .construct import PartitionScheme, WitnessCertificate
from .core import ColoredCompleteGraph, build, pattern_from_dict, pattern_to_dict

SCHEMA_VERSION = "1.0"
SUPPORTED_MAJOR = 1

PALETTE = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
    "#f781bf", "#999999", "#66c2a5", "#e6ab02", "#1b9e77", "#7570b3",
]
STYLES = ["solid", "dashed", "dotted", "bold"]


class FormatError(ValueError):
    pass


def _check_version(data: dict) -> None:
    version = str(data.get("schema_version", ""))
    try:
        major = int(version.split(".")[0])
    except ValueError:
        raise FormatError(f"missing or malformed schema_version {version!r}") from None
    if major != SUPPORTED_MAJOR:
        raise FormatError(f"unsupported schema version {version}")


def coloring_to_dict(G: ColoredCompleteGraph) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "colors": G.colors,
        "order": G.order,
        "edges": [list(e) for e in G.edges()],
    }


def coloring_from_dict(data: dict) -> ColoredCompleteGraph:
    _check_version(data)
    try:
        return build(int(data["order"]), int(data["colors"]), [tuple(e) for e in data["edges"]])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed coloring: {exc}") from exc


def certificate_to_dict(cert: WitnessCertificate) -> dict[str, Any]:
    out = coloring_to_dict(cert.graph)
    out.update(
        pattern=pattern_to_dict(cert.pattern),
        construction_id=cert.construction_id,
        partition=cert.scheme.to_dict(),
        verified=cert.verified,
        claimed_bound=cert.claimed_bound,
        seed=cert.seed,
    )
    return out


def certificate_from_dict(data: dict) -> WitnessCertificate:
    graph = coloring_from_dict(data)
    try:
        cert = WitnessCertificate(
            pattern=pattern_from_dict(data["pattern"]),
            colors=int(data["colors"]),
            graph=graph,
            construction_id=str(data["construction_id"]),
            scheme=PartitionScheme.from_dict(data.get("partition", {})),
            verified=bool(data.get("verified", False)),
            seed=data.get("seed"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed certificate: {exc}") from exc
    if "claimed_bound" in data and int(data["claimed_bound"]) != cert.claimed_bound:
        raise FormatError("claimed_bound does not equal order + 1")
    return cert


def is_certificate(data: dict) -> bool:
    return "construction_id" in data


def load_json(path: str | Path) -> dict:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise FormatError("top-level JSON value must be an object")
    return data


def save_json(data: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(data, indent=1) + "\n")


def to_dot(G: ColoredCompleteGraph, name: str = "coloring", only_color: int | None = None) -> str:
    """Graphviz source; color c uses palette entry (c-1) mod 12 and cycles line styles past 12."""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    lines += [f"  {v};" for v in range(G.order)]
    for u, v, c in G.edges():
        if only_color is not None and c != only_color:
            continue
        hue = PALETTE[(c - 1) % len(PALETTE)]
        style = STYLES[((c - 1) // len(PALETTE)) % len(STYLES)]
        lines.append(f'  {u} -- {v} [color="{hue}", style={style}, label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
