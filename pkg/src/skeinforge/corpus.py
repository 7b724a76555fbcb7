"""Bundled link corpus and seeded random braids."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .cyclo import CycNum
from .diagram import BraidWord, Diagram, braid_closure, parse_diagram
from .errors import ParseError


@dataclass
class CorpusEntry:
    name: str
    components: int
    diagrams: list[tuple[str, str]]  # (format, text)
    expected: dict[str, CycNum]
    source: str = ""

    def parsed(self) -> list[Diagram]:
        return [parse_diagram(text, fmt) for fmt, text in self.diagrams]

    @classmethod
    def from_json(cls, obj: dict, source: str = "") -> CorpusEntry:
        try:
            diagrams = [(d["format"], d["text"]) for d in obj["diagrams"]]
            expected = {k: CycNum.from_json(v) for k, v in obj.get("expected", {}).items()}
            return cls(obj["name"], int(obj["components"]), diagrams, expected, source)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad corpus entry {source}: {exc}") from exc

    def to_json(self) -> dict:
        return {"name": self.name, "components": self.components,
                "diagrams": [{"format": f, "text": t} for f, t in self.diagrams],
                "expected": {k: v.to_json() for k, v in self.expected.items()}}


def bundled_corpus_dir() -> Path:
    return Path(str(resources.files("skeinforge") / "data" / "corpus"))


def load_corpus(directory: str | Path | None = None) -> list[CorpusEntry]:
    """All ``*.json`` entries of a corpus directory, sorted by file name."""
    path = bundled_corpus_dir() if directory is None else Path(directory)
    if not path.is_dir():
        raise ParseError(f"corpus directory {path} not found")
    out = []
    for f in sorted(path.glob("*.json")):
        try:
            obj = json.loads(f.read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"{f}: invalid JSON: {exc}") from exc
        out.append(CorpusEntry.from_json(obj, str(f)))
    return out


def random_braid(rng: random.Random, max_crossings: int = 12, max_strands: int = 4) -> BraidWord:
    strands = rng.randint(2, max_strands)
    length = rng.randint(1, max_crossings)
    letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))
    return BraidWord(strands, letters)


def random_braids(seed: int, count: int, max_crossings: int = 12,
                  max_strands: int = 4) -> list[BraidWord]:
    rng = random.Random(seed)
    return [random_braid(rng, max_crossings, max_strands) for _ in range(count)]


def random_diagrams(seed: int, count: int, max_crossings: int = 12,
                    max_strands: int = 4) -> list[Diagram]:
    return [braid_closure(w) for w in random_braids(seed, count, max_crossings, max_strands)]
