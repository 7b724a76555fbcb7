"""Low-level surgery on unoriented crossing lists.

A crossing is a 4-sequence of arc ids in counterclockwise order with the
under-strand on slots 0 and 2; ``(a, b, c, d)`` and ``(c, d, a, b)`` denote the
same crossing.  Every arc id occurs in exactly two slots.  These helpers work on
plain lists because the skein engine calls them in its innermost loop.
"""

from __future__ import annotations

from typing import Hashable, Sequence

Arc = Hashable
Slot = tuple[int, int]

# smoothing modes: which slot pairs get reconnected
SMOOTH_PAIRS = {"A": ((0, 1), (2, 3)), "B": ((0, 3), (1, 2))}


def occurrences(crs: Sequence[Sequence[Arc]]) -> dict[Arc, list[Slot]]:
    occ: dict[Arc, list[Slot]] = {}
    for i, c in enumerate(crs):
        for s in range(4):
            occ.setdefault(c[s], []).append((i, s))
    return occ


def excise(crs, drop, ends, pairs) -> tuple[list[list[Arc]], int]:
    """Delete crossings ``drop`` and splice their free ends.

    ``ends`` lists the arc ids sitting at the freed slots; ``pairs`` are index
    pairs into ``ends`` to be joined.  Ends not mentioned in any pair must
    belong to arcs that disappear with the deleted crossings.  Returns the
    remaining crossings and the number of closed circles produced.
    """
    rest = [list(c) for k, c in enumerate(crs) if k not in drop]
    ends = list(ends)
    circles = 0
    for i, j in pairs:
        x, y = ends[i], ends[j]
        if x == y:
            circles += 1
            continue
        for c in rest:
            for s in range(4):
                if c[s] == y:
                    c[s] = x
        for k in range(len(ends)):
            if ends[k] == y:
                ends[k] = x
    return rest, circles


def smooth(crs, i: int, mode: str):
    return excise(crs, {i}, crs[i], SMOOTH_PAIRS[mode])


def switched(c: Sequence[Arc]) -> list[Arc]:
    return [c[1], c[2], c[3], c[0]]


def find_r1(crs) -> tuple[int, int] | None:
    """First crossing with a one-arc loop on adjacent slots: (crossing, slot)."""
    for i, c in enumerate(crs):
        for s in range(4):
            if c[s] == c[(s + 1) % 4]:
                return i, s
    return None


def remove_r1(crs, i: int, s: int):
    """Remove the kink at crossing i whose loop occupies slots s, s+1.

    Returns (rest, circles, handedness).  A loop on slots (0,1) or (2,3) is a
    positive kink.
    """
    rest, circles = excise(crs, {i}, crs[i], (((s + 2) % 4, (s + 3) % 4),))
    return rest, circles, (1 if s % 2 == 0 else -1)


def find_r2(crs):
    """Find a bigon where one strand passes over at both corners.

    Returns (i, s, j, t, t2): crossing i holds p, q on slots s, s+1 and
    crossing j holds p on slot t and q on slot t2 = t-1.
    """
    occ = occurrences(crs)

    def other(arc, here):
        o = occ[arc]
        return o[1] if o[0] == here else o[0]

    for i, c in enumerate(crs):
        for s in range(4):
            s1 = (s + 1) % 4
            p, q = c[s], c[s1]
            if p == q:
                continue
            jp, t = other(p, (i, s))
            jq, t2 = other(q, (i, s1))
            if jp != jq or jp == i:
                continue
            # a face: q follows p at i, p follows q at j (both counterclockwise)
            if (t2 + 1) % 4 != t:
                continue
            if s % 2 != t % 2:
                continue
            return i, s, jp, t, t2
    return None


def remove_r2(crs, i, s, j, t, t2):
    ends = list(crs[i]) + list(crs[j])
    pairs = (((s + 2) % 4, 4 + (t + 2) % 4), ((s + 3) % 4, 4 + (t2 + 2) % 4))
    return excise(crs, {i, j}, ends, pairs)


def simplify_raw(crs):
    """Greedy R1/R2 reduction.  Returns (crossings, kink signs, circles)."""
    crs = [list(c) for c in crs]
    kinks: list[int] = []
    circles = 0
    while crs:
        r1 = find_r1(crs)
        if r1 is not None:
            crs, circ, sign = remove_r1(crs, *r1)
            kinks.append(sign)
            circles += circ
            continue
        r2 = find_r2(crs)
        if r2 is not None:
            crs, circ = remove_r2(crs, *r2)
            circles += circ
            continue
        break
    return crs, kinks, circles


def split_parts(crs) -> list[list[list[Arc]]]:
    """Group crossings into connected pieces of the diagram."""
    n = len(crs)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first: dict[Arc, int] = {}
    for i, c in enumerate(crs):
        for a in c:
            if a in first:
                ra, rb = find(first[a]), find(i)
                if ra != rb:
                    parent[ra] = rb
            else:
                first[a] = i
    groups: dict[int, list[list[Arc]]] = {}
    for i, c in enumerate(crs):
        groups.setdefault(find(i), []).append(list(c))
    return list(groups.values())


class _Walk:
    __slots__ = ("labels", "under_in", "over_in", "order", "comp_lengths", "next_label")

    def __init__(self, n):
        self.labels = {}
        self.under_in = [None] * n
        self.over_in = [None] * n
        self.order = []
        self.comp_lengths = []
        self.next_label = 0

    def copy(self):
        w = _Walk.__new__(_Walk)
        w.labels = dict(self.labels)
        w.under_in = list(self.under_in)
        w.over_in = list(self.over_in)
        w.order = list(self.order)
        w.comp_lengths = list(self.comp_lengths)
        w.next_label = self.next_label
        return w


def _walk_component(crs, occ, w: _Walk, start: Slot):
    def other(arc, here):
        o = occ[arc]
        return o[1] if o[0] == here else o[0]

    i, s = start
    w.labels[crs[i][s]] = w.next_label
    w.next_label += 1
    length = 1
    cur = start
    while True:
        i, s = cur
        if s % 2 == 0:
            w.under_in[i] = s
        else:
            w.over_in[i] = s
        if w.under_in[i] is None or w.over_in[i] is None:
            # first passage through this crossing
            w.order.append(i)
        s2 = (s + 2) % 4
        out_arc = crs[i][s2]
        nxt = other(out_arc, (i, s2))
        if nxt == start:
            break
        w.labels[out_arc] = w.next_label
        w.next_label += 1
        length += 1
        cur = nxt
    w.comp_lengths.append(length)


def _complete_walks(crs, occ, w: _Walk):
    """Yield every canonical completion of a partial walk."""
    for i in w.order:
        if w.under_in[i] is None:
            cands = ((i, 0), (i, 2))
            break
        if w.over_in[i] is None:
            cands = ((i, 1), (i, 3))
            break
    else:
        yield w
        return
    for c in cands:
        w2 = w.copy()
        _walk_component(crs, occ, w2, c)
        yield from _complete_walks(crs, occ, w2)


def _serialize(crs, w: _Walk):
    out = []
    lab = w.labels
    for i, c in enumerate(crs):
        u = w.under_in[i]
        o = w.over_in[i]
        t = (lab[c[u]], lab[c[(u + 1) % 4]], lab[c[(u + 2) % 4]], lab[c[(u + 3) % 4]],
             1 if o == (u + 3) % 4 else -1)
        out.append(t)
    out.sort()
    return tuple(out), tuple(w.comp_lengths)


def canonical_part(crs):
    """Canonical oriented relabelling of one connected piece.

    Every (arc, direction) start is tried; later components start at the first
    visited crossing with an untraversed strand, in both directions.  Returns
    ``(crossings, component_lengths)`` where each crossing is the 5-tuple
    ``(a, b, c, d, dir)`` in traversal labels, rotated so the under-strand
    enters at slot a, and ``dir`` is +1 when the over-strand runs d -> b.
    Labels increase along the traversal, one block per component.
    """
    occ = occurrences(crs)
    n = len(crs)
    best = None
    for i in range(n):
        for s in range(4):
            w = _Walk(n)
            _walk_component(crs, occ, w, (i, s))
            for done in _complete_walks(crs, occ, w):
                form = _serialize(crs, done)
                if best is None or form < best:
                    best = form
    return best


def traversal_data(canon):
    """Visit order and first-passage role for a canonical piece.

    Returns (order, bad): crossing indices in order of first passage, and the
    subset first passed on the under-strand, in that order.
    """
    crossings, _ = canon
    enters: dict[int, tuple[int, bool]] = {}
    for j, (a, b, c, d, dr) in enumerate(crossings):
        enters[a] = (j, True)
        enters[d if dr == 1 else b] = (j, False)
    seen = set()
    order, bad = [], []
    for label in range(len(enters)):
        j, under = enters[label]
        if j in seen:
            continue
        seen.add(j)
        order.append(j)
        if under:
            bad.append(j)
    return order, bad
