"""The bundled diagram corpus and the line-oriented input reader."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .diagram import PlanarDiagram, parse_diagram, split_name
from .errors import AltDistError, EmptyInputError


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    diagram: PlanarDiagram

    @property
    def link(self) -> str:
        """Entries with the same link key are diagrams of one link."""
        return self.name.rsplit(".", 1)[0]


def read_diagrams(lines: Iterable[str]) -> list[CorpusEntry]:
    """Parse one diagram per line; ``#`` starts a comment, blank lines are skipped."""
    out = []
    for n, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, _ = split_name(line)
        try:
            d = parse_diagram(line, line=n)
        except AltDistError as exc:
            if exc.args and f"line {n}" not in str(exc.args[0]):
                exc.args = (f"line {n}: {exc.args[0]}",) + exc.args[1:]
            raise
        out.append(CorpusEntry(name or f"line{n}", d))
    return out


def read_file(path: str) -> list[CorpusEntry]:
    with open(path, encoding="utf-8") as fh:
        entries = read_diagrams(fh)
    if not entries:
        raise EmptyInputError("no diagrams")
    return entries


def load_corpus() -> list[CorpusEntry]:
    text = resources.files("altdist").joinpath("data/corpus.txt").read_text(encoding="utf-8")
    return read_diagrams(text.splitlines())


def corpus_groups(entries: list[CorpusEntry] | None = None) -> dict[str, list[CorpusEntry]]:
    groups: dict[str, list[CorpusEntry]] = {}
    for e in entries if entries is not None else load_corpus():
        groups.setdefault(e.link, []).append(e)
    return groups
