"""Oriented link diagrams in PD form, braid closures, and shadow surgery.

PD convention: each crossing ``(a, b, c, d)`` lists its arcs counterclockwise
starting from the incoming under-arc, so the under-strand runs a -> c and the
over-strand occupies b and d.  A crossing is positive when the over-strand runs
d -> b; with this rule the closure of the braid generator sigma_1 is positive.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import _planar
from .errors import OrientationError, ParseError

PDCrossing = tuple[int, int, int, int]


# ---------------------------------------------------------------------------
# oriented diagrams


def _head_tail(crossings, over_dirs):
    """Map arc -> [head slot, tail slot]; raise if not exactly one of each."""
    heads: dict[int, list] = {}
    tails: dict[int, list] = {}
    for i, (c, dr) in enumerate(zip(crossings, over_dirs)):
        heads.setdefault(c[0], []).append((i, 0))
        tails.setdefault(c[2], []).append((i, 2))
        hin, hout = (3, 1) if dr == 1 else (1, 3)
        heads.setdefault(c[hin], []).append((i, hin))
        tails.setdefault(c[hout], []).append((i, hout))
    arcs = set(heads) | set(tails)
    for a in arcs:
        if len(heads.get(a, ())) != 1 or len(tails.get(a, ())) != 1:
            raise OrientationError(f"arc {a} is not traversed consistently")
    return heads, tails


def _infer_over_dirs(crossings: Sequence[PDCrossing]) -> tuple[int, ...]:
    """Orient over-strands by propagation from the under-strands.

    Components that only ever pass over fall back to the arc numbering:
    the over-strand runs d -> b when b == d + 1 or d > b + 1.
    """
    n = len(crossings)
    occ = _planar.occurrences(crossings)
    # role[(i, s)] is True for the slot where the arc enters crossing i
    role: dict[tuple[int, int], bool] = {}
    dirs: list[int | None] = [None] * n

    def assign(i, s, entering, queue):
        key = (i, s)
        if key in role:
            if role[key] != entering:
                raise OrientationError(f"conflicting orientation at crossing {i}")
            return
        role[key] = entering
        queue.append(key)

    def propagate(queue):
        while queue:
            i, s = queue.pop()
            entering = role[(i, s)]
            arc = crossings[i][s]
            for o in occ[arc]:
                if o != (i, s):
                    assign(o[0], o[1], not entering, queue)
            if s % 2 == 1:
                assign(i, (s + 2) % 4, not entering, queue)
                d_in = (s == 3) == entering
                dr = 1 if d_in else -1
                if dirs[i] is not None and dirs[i] != dr:
                    raise OrientationError(f"conflicting orientation at crossing {i}")
                dirs[i] = dr

    queue: list = []
    for i in range(n):
        assign(i, 0, True, queue)
        assign(i, 2, False, queue)
    propagate(queue)
    for i, c in enumerate(crossings):
        if dirs[i] is None:
            b, d = c[1], c[3]
            d_to_b = b == d + 1 or d > b + 1
            assign(i, 3, d_to_b, queue)
            propagate(queue)
    return tuple(dirs)  # type: ignore[arg-type]


@dataclass(frozen=True)
class Diagram:
    """Oriented link diagram.

    ``over_dirs[i]`` is +1 when the over-strand of crossing i runs d -> b and
    -1 when it runs b -> d; it equals the crossing sign.
    """

    crossings: tuple[PDCrossing, ...] = ()
    free_loops: int = 0
    over_dirs: tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        crossings = tuple(tuple(int(x) for x in c) for c in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        for c in crossings:
            if len(c) != 4:
                raise ParseError(f"crossing {c} does not have 4 arcs")
        if self.free_loops < 0:
            raise ParseError("negative free-loop count")
        counts: dict[int, int] = {}
        for c in crossings:
            for a in c:
                counts[a] = counts.get(a, 0) + 1
        bad = sorted(a for a, k in counts.items() if k != 2)
        if bad:
            raise ParseError(f"arcs {bad} do not appear exactly twice")
        if self.over_dirs is None:
            object.__setattr__(self, "over_dirs", _infer_over_dirs(crossings))
        else:
            dirs = tuple(int(x) for x in self.over_dirs)
            if len(dirs) != len(crossings) or any(x not in (1, -1) for x in dirs):
                raise ParseError("over_dirs must hold +-1 per crossing")
            object.__setattr__(self, "over_dirs", dirs)
        _head_tail(crossings, self.over_dirs)

    # orientation data

    @property
    def arc_successor(self) -> dict[int, int]:
        heads, _ = _head_tail(self.crossings, self.over_dirs)
        return {a: self.crossings[i][(s + 2) % 4] for a, ((i, s),) in heads.items()}

    def arc_cycles(self) -> list[tuple[int, ...]]:
        """Arc cycles of the successor map, ordered by smallest arc."""
        succ = self.arc_successor
        seen: set[int] = set()
        cycles = []
        for a in sorted(succ):
            if a in seen:
                continue
            cyc = [a]
            seen.add(a)
            b = succ[a]
            while b != a:
                cyc.append(b)
                seen.add(b)
                b = succ[b]
            cycles.append(tuple(cyc))
        return cycles

    @property
    def num_components(self) -> int:
        return len(self.arc_cycles()) + self.free_loops

    def component_of_arc(self) -> dict[int, int]:
        return {a: k for k, cyc in enumerate(self.arc_cycles()) for a in cyc}

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    def shadow(self) -> Shadow:
        return Shadow(self.crossings, self.free_loops)

    # text / json

    def to_pd_text(self) -> str:
        lines = [f"X {a} {b} {c} {d}" for a, b, c, d in self.crossings]
        if self.free_loops or not lines:
            lines.append(f"L {self.free_loops}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"crossings": [list(c) for c in self.crossings], "free_loops": self.free_loops,
                "over_dirs": list(self.over_dirs)}

    @classmethod
    def from_json(cls, obj: dict) -> Diagram:
        try:
            return cls(tuple(tuple(c) for c in obj["crossings"]), int(obj.get("free_loops", 0)),
                       obj.get("over_dirs"))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad diagram JSON: {exc}") from exc

    def relabeled(self, mapping: dict[int, int]) -> Diagram:
        return Diagram(tuple(tuple(mapping[a] for a in c) for c in self.crossings),
                       self.free_loops, self.over_dirs)

    def permuted(self, order: Sequence[int]) -> Diagram:
        """Same diagram with crossings listed in ``order``."""
        return Diagram(tuple(self.crossings[i] for i in order), self.free_loops,
                       tuple(self.over_dirs[i] for i in order))

    def renumbered(self) -> Diagram:
        """Relabel arcs 1..m consecutively along each component."""
        mapping = {}
        k = 1
        for cyc in self.arc_cycles():
            for a in cyc:
                mapping[a] = k
                k += 1
        return self.relabeled(mapping)


def parse_pd(text: str) -> Diagram:
    """Parse ``X a b c d`` lines with an optional ``L n`` free-loop line."""
    crossings = []
    loops = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer token") from exc
        if tag == "X":
            if len(nums) != 4 or any(x <= 0 for x in nums):
                raise ParseError(f"line {lineno}: expected 'X a b c d' with positive integers")
            crossings.append(tuple(nums))
        elif tag == "L":
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError(f"line {lineno}: expected 'L n'")
            loops += nums[0]
        else:
            raise ParseError(f"line {lineno}: unknown record {tag!r}")
    if not crossings and not loops:
        raise ParseError("empty PD input")
    return Diagram(tuple(crossings), loops)


# ---------------------------------------------------------------------------
# braids


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ParseError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ParseError(f"letter {x} invalid on {self.strands} strands")

    def permutation(self) -> list[int]:
        """perm[p] = final position of the strand starting at position p."""
        pos = list(range(self.strands))  # pos[p] = strand now at position p
        for x in self.letters:
            k = abs(x) - 1
            pos[k], pos[k + 1] = pos[k + 1], pos[k]
        perm = [0] * self.strands
        for p, strand in enumerate(pos):
            perm[strand] = p
        return perm

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen, count = set(), 0
        for p in range(self.strands):
            if p not in seen:
                count += 1
                while p not in seen:
                    seen.add(p)
                    p = perm[p]
        return count

    def to_text(self) -> str:
        return f"B {self.strands}: " + " ".join(str(x) for x in self.letters)

    def to_json(self) -> dict:
        return {"strands": self.strands, "word": list(self.letters)}

    @classmethod
    def from_json(cls, obj: dict) -> BraidWord:
        try:
            return cls(int(obj["strands"]), tuple(obj["word"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad braid JSON: {exc}") from exc


_BRAID_RE = re.compile(r"^\s*B\s+(\d+)\s*:(.*)$")


def parse_braid(text: str) -> BraidWord:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) != 1:
        raise ParseError("braid input must be a single 'B n: ...' line")
    m = _BRAID_RE.match(lines[0])
    if not m:
        raise ParseError(f"malformed braid line {lines[0]!r}")
    try:
        letters = tuple(int(x) for x in m.group(2).split())
    except ValueError as exc:
        raise ParseError("braid letters must be integers") from exc
    return BraidWord(int(m.group(1)), letters)


def braid_closure(w: BraidWord) -> Diagram:
    """PD diagram of the closure; untouched strands become free loops.

    Strands run upward; sigma_k crosses the strand at position k over the one
    at position k+1 as it moves right (a positive crossing).
    """
    next_arc = w.strands
    bottom = list(range(w.strands))
    cur = list(bottom)
    crossings, dirs = [], []
    for x in w.letters:
        k = abs(x) - 1
        left, right = cur[k], cur[k + 1]
        new_left, new_right = next_arc, next_arc + 1
        next_arc += 2
        if x > 0:
            # under: right -> new_left, over: left -> new_right (d -> b)
            crossings.append([right, new_right, new_left, left])
            dirs.append(1)
        else:
            # under: left -> new_right, over: right -> new_left (b -> d)
            crossings.append([left, right, new_right, new_left])
            dirs.append(-1)
        cur[k], cur[k + 1] = new_left, new_right
    # closing: top arc at each position is the bottom arc at that position
    alias = {}
    for p in range(w.strands):
        alias[cur[p]] = bottom[p]

    def resolve(a):
        while a in alias and alias[a] != a:
            a = alias[a]
        return a

    crossings = [[resolve(a) for a in c] for c in crossings]
    used = {a for c in crossings for a in c}
    loops = sum(1 for p in range(w.strands) if bottom[p] not in used)
    d = Diagram(tuple(tuple(c) for c in crossings), loops, tuple(dirs))
    return d.renumbered() if crossings else d


def parse_diagram(text: str, fmt: str | None = None) -> Diagram:
    """Parse PD, braid, or JSON text; ``fmt`` in {'pd', 'braid', None (sniff)}."""
    stripped = "\n".join(ln.split("#", 1)[0] for ln in text.splitlines()).strip()
    if fmt is None:
        if stripped.startswith("{"):
            fmt = "json"
        elif stripped.startswith("B"):
            fmt = "braid"
        else:
            fmt = "pd"
    if fmt == "braid":
        return braid_closure(parse_braid(text))
    if fmt == "pd":
        return parse_pd(text)
    if fmt == "json":
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if "strands" in obj:
            return braid_closure(BraidWord.from_json(obj))
        return Diagram.from_json(obj)
    raise ParseError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# oriented invariants


def crossing_signs(D: Diagram) -> tuple[int, ...]:
    return D.over_dirs


def writhe(D: Diagram) -> int:
    return sum(D.over_dirs)


def linking_matrix(D: Diagram) -> list[list[int]]:
    """Pairwise linking numbers; free loops get zero rows."""
    comp = D.component_of_arc()
    n = D.num_components
    twice = [[0] * n for _ in range(n)]
    for c, sign in zip(D.crossings, D.over_dirs):
        p, q = comp[c[0]], comp[c[1]]
        if p != q:
            twice[p][q] += sign
            twice[q][p] += sign
    out = [[0] * n for _ in range(n)]
    for p in range(n):
        for q in range(n):
            if twice[p][q] % 2:
                raise ValueError(f"odd signed crossing count between components {p} and {q}")
            out[p][q] = twice[p][q] // 2
    return out


def mirror(D: Diagram) -> Diagram:
    """Switch every crossing, keeping the orientation."""
    crossings, dirs = [], []
    for (a, b, c, d), dr in zip(D.crossings, D.over_dirs):
        if dr == 1:
            crossings.append((d, a, b, c))
        else:
            crossings.append((b, c, d, a))
        dirs.append(-dr)
    return Diagram(tuple(crossings), D.free_loops, tuple(dirs))


def disjoint_union(D1: Diagram, D2: Diagram) -> Diagram:
    offset = max((a for c in D1.crossings for a in c), default=0)
    shifted = tuple(tuple(a + offset for a in c) for c in D2.crossings)
    return Diagram(D1.crossings + shifted, D1.free_loops + D2.free_loops,
                   D1.over_dirs + D2.over_dirs)


def connected_sum(D1: Diagram, D2: Diagram, arc1: int | None = None,
                  arc2: int | None = None) -> Diagram:
    """Band two diagrams together along one arc of each, respecting orientation."""
    if not D1.crossings or not D2.crossings:
        raise ValueError("connected sum needs a crossing in each diagram")
    offset = max(a for c in D1.crossings for a in c)
    D2s = Diagram(tuple(tuple(a + offset for a in c) for c in D2.crossings), 0, D2.over_dirs)
    x = min(a for c in D1.crossings for a in c) if arc1 is None else arc1
    y = min(a for c in D2s.crossings for a in c) if arc2 is None else arc2 + offset
    heads1, _ = _head_tail(D1.crossings, D1.over_dirs)
    heads2, _ = _head_tail(D2s.crossings, D2s.over_dirs)
    (i1, s1), = heads1[x]
    (i2, s2), = heads2[y]
    c1 = [list(c) for c in D1.crossings]
    c2 = [list(c) for c in D2s.crossings]
    c1[i1][s1] = y
    c2[i2][s2] = x
    return Diagram(tuple(tuple(c) for c in c1 + c2), D1.free_loops + D2.free_loops,
                   D1.over_dirs + D2s.over_dirs).renumbered()


# ---------------------------------------------------------------------------
# unoriented shadows


@dataclass(frozen=True)
class Shadow:
    """Unoriented diagram: crossings up to the half-turn (a,b,c,d) ~ (c,d,a,b)."""

    crossings: tuple[tuple, ...] = ()
    free_loops: int = 0

    def __post_init__(self):
        # store the smaller of the two equivalent rotations
        crossings = tuple(min(tuple(c), tuple(c[2:]) + tuple(c[:2])) for c in self.crossings)
        object.__setattr__(self, "crossings", crossings)

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    def num_components(self) -> int:
        return len(orient(self).arc_cycles()) + self.free_loops


def _check_index(S: Shadow, c: int):
    if not 0 <= c < len(S.crossings):
        raise IndexError(f"crossing index {c} out of range")


def switch_crossing(S: Shadow, c: int) -> Shadow:
    _check_index(S, c)
    crs = list(S.crossings)
    crs[c] = tuple(_planar.switched(crs[c]))
    return Shadow(tuple(crs), S.free_loops)


def smooth_crossing(S: Shadow, c: int, mode: str) -> Shadow:
    """Mode A joins a-b and c-d; mode B joins a-d and b-c."""
    _check_index(S, c)
    if mode not in _planar.SMOOTH_PAIRS:
        raise ValueError(f"unknown smoothing mode {mode!r}")
    rest, circles = _planar.smooth(S.crossings, c, mode)
    return Shadow(tuple(tuple(x) for x in rest), S.free_loops + circles)


def simplify(S: Shadow) -> tuple[Shadow, list[int], int]:
    """Remove R1 kinks and R2 bigons; move closed circles to the counter."""
    rest, kinks, circles = _planar.simplify_raw(S.crossings)
    return Shadow(tuple(tuple(x) for x in rest), 0), kinks, circles + S.free_loops


def canonical_form(S: Shadow):
    parts = [_planar.canonical_part(p) for p in _planar.split_parts(S.crossings)]
    return tuple(sorted(parts)), S.free_loops


def canonical_key(S: Shadow) -> bytes:
    """Bytes equal for shadows that differ by arc relabelling or crossing order."""
    return repr(canonical_form(S)).encode()


def orient(S: Shadow) -> Diagram:
    """An oriented diagram with shadow S (component orientations chosen by traversal)."""
    crossings, dirs = [], []
    offset = 1
    for part in _planar.split_parts(S.crossings):
        canon, _ = _planar.canonical_part(part)
        for a, b, c, d, dr in canon:
            crossings.append((a + offset, b + offset, c + offset, d + offset))
            dirs.append(dr)
        offset += 2 * len(canon)
    return Diagram(tuple(crossings), S.free_loops, tuple(dirs))


def shadow_from_pd(crossings: Iterable[Sequence[int]], free_loops: int = 0) -> Shadow:
    return Shadow(tuple(tuple(c) for c in crossings), free_loops)
