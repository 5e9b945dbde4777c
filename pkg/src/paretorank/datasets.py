"""Bundled and cached benchmark datasets.

Small classic networks ship inside the package; the large autonomous-systems
snapshot is cached on disk (see PARETORANK_DATA) and fetched on demand.
Every loader validates node and edge counts against the published figures,
so a corrupted or wrong file fails loudly instead of skewing results.
"""

from __future__ import annotations

import os
import urllib.request
from importlib import resources
from pathlib import Path

from .graphio import Graph, parse_edge_list, parse_gml

DATA_ENV = "PARETORANK_DATA"

AS_FILENAME = "as-22july06.gml"
AS_URL = "https://websites.umich.edu/~mejn/netdata/as-22july06.zip"
AS_NODES = 22963
AS_EDGES = 48436


class DatasetMissingError(FileNotFoundError):
    """A dataset that is not bundled was requested but is not available."""


def _bundled_text(name: str) -> str:
    ref = resources.files("paretorank").joinpath("data", name)
    if not ref.is_file():
        raise DatasetMissingError(
            f"dataset file {name!r} is not bundled with this build"
        )
    return ref.read_text(encoding="utf-8")


def _check_counts(g: Graph, nodes: int, edges: int, name: str) -> Graph:
    if g.n != nodes or g.edge_count != edges:
        raise ValueError(
            f"{name}: expected {nodes} nodes / {edges} edges, "
            f"got {g.n} / {g.edge_count}"
        )
    return g


def load_zachary() -> Graph:
    """Zachary's karate club: 34 nodes, 78 edges, labels "1".."34"."""
    g = parse_edge_list(_bundled_text("zachary.edges"))
    return _check_counts(g, 34, 78, "zachary")


def load_dolphins() -> Graph:
    """Lusseau's Doubtful Sound dolphins: 62 nodes, 159 edges.

    Raises DatasetMissingError when the fixture is not bundled (builds from
    environments without a verifiable copy omit it rather than ship an
    unverified file).
    """
    g = parse_gml(_bundled_text("dolphins.gml"))
    return _check_counts(g, 62, 159, "dolphins")


def data_dir() -> Path:
    """Cache directory for large datasets, override with PARETORANK_DATA."""
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "paretorank"


def fetch_internet_as(dest: Path | None = None, timeout: float = 120.0) -> Path:
    """Download the as-22july06 snapshot into the cache; returns the gml path.

    The archive has no stable published checksum, so integrity is enforced
    structurally: the parsed graph must have exactly the published node and
    edge counts (load_internet_as checks them on every load).
    """
    import io
    import zipfile

    target_dir = Path(dest) if dest else data_dir()
    target = target_dir / AS_FILENAME
    if target.exists():
        return target
    target_dir.mkdir(parents=True, exist_ok=True)
    with urllib.request.urlopen(AS_URL, timeout=timeout) as resp:
        payload = resp.read()
    with zipfile.ZipFile(io.BytesIO(payload)) as zf:
        names = [n for n in zf.namelist() if n.endswith(".gml")]
        if not names:
            raise ValueError("downloaded archive holds no .gml file")
        target.write_bytes(zf.read(names[0]))
    return target


def load_internet_as(path: Path | str | None = None, fetch: bool = False) -> Graph:
    """The 2006-07-22 autonomous-systems graph: 22963 nodes, 48436 edges.

    Looks for the gml file at `path` or in the cache directory; with
    fetch=True a missing file is downloaded first.
    """
    target = Path(path) if path else data_dir() / AS_FILENAME
    if not target.exists():
        if fetch:
            target = fetch_internet_as(target.parent)
        else:
            raise DatasetMissingError(
                f"{target} not found; run fetch_internet_as() or place the "
                f"file there manually (source: {AS_URL})"
            )
    g = parse_gml(target.read_bytes())
    return _check_counts(g, AS_NODES, AS_EDGES, "as-22july06")
