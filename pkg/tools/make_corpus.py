"""Regenerate the bundled corpus; expected values come from linking-number enumeration."""

from __future__ import annotations

import json
from pathlib import Path

from skeinforge.classical import classical_invariant
from skeinforge.corpus import CorpusEntry
from skeinforge.diagram import (BraidWord, braid_closure, connected_sum, disjoint_union,
                                parse_diagram, parse_pd)

OUT = Path(__file__).resolve().parent.parent / "src" / "skeinforge" / "data" / "corpus"

WHITEHEAD_PD = "X 6 1 7 2\nX 10 7 5 8\nX 4 5 1 6\nX 2 10 3 9\nX 8 4 9 3\n"


def braid(n, *letters):
    return ("braid", BraidWord(n, letters).to_text())


def pd_of(fmt_text, shift=0, reverse=False):
    D = parse_diagram(fmt_text[1], fmt_text[0])
    if reverse:
        D = D.permuted(list(range(D.num_crossings))[::-1])
    if shift:
        D = D.relabeled({a: a + shift for c in D.crossings for a in c})
    return ("pd", D.to_pd_text())


def torus(q):
    sign = 1 if q > 0 else -1
    q = abs(q)
    return [braid(2, *[sign] * q), braid(3, *([sign] * q + [2])),
            braid(3, *([sign] * q + [-2])), pd_of(braid(2, *[sign] * q), shift=10, reverse=True)]


ENTRIES = {
    "unknot": [("pd", "L 1\n"), braid(1), braid(2, 1), braid(2, -1), braid(3, 1, -2),
               ("pd", "X 1 1 2 2\n")],
    "unlink2": [("pd", "L 2\n"), braid(2), braid(2, 1, -1), braid(3, 1, -1, 2)],
    "hopf_positive": torus(2),
    "hopf_negative": torus(-2),
    "trefoil_right": torus(3) + [braid(3, 1, 2, 1, 2)],
    "trefoil_left": torus(-3) + [braid(3, -1, -2, -1, -2)],
    "figure_eight": [braid(3, 1, -2, 1, -2), braid(3, -2, 1, -2, 1),
                     braid(4, 1, -2, 1, -2, 3), pd_of(braid(3, 1, -2, 1, -2), reverse=True)],
    "solomon_positive": torus(4),
    "solomon_negative": torus(-4),
    "torus_2_5": torus(5),
    "torus_2_6": torus(6),
    "torus_2_7": torus(7),
    "torus_2_8": torus(8),
    "whitehead": [("pd", WHITEHEAD_PD), braid(3, 1, -2, 1, -2, -2), braid(3, -2, 1, -2, 1, -2),
                  braid(4, 1, -2, 1, -2, -2, 3)],
    "borromean": [braid(3, 1, -2, 1, -2, 1, -2), braid(3, -2, 1, -2, 1, -2, 1),
                  braid(4, 1, -2, 1, -2, 1, -2, 3), pd_of(braid(3, 1, -2, 1, -2, 1, -2), 3)],
    "granny_knot": [braid(3, 1, 1, 1, 2, 2, 2), braid(3, 2, 2, 2, 1, 1, 1),
                    braid(4, 1, 1, 1, 2, 2, 2, 3),
                    ("pd", connected_sum(braid_closure(BraidWord(2, (1, 1, 1))),
                                         braid_closure(BraidWord(2, (1, 1, 1)))).to_pd_text())],
    "square_knot": [braid(3, 1, 1, 1, -2, -2, -2), braid(3, -2, -2, -2, 1, 1, 1),
                    braid(4, 1, 1, 1, -2, -2, -2, -3),
                    ("pd", connected_sum(braid_closure(BraidWord(2, (1, 1, 1))),
                                         braid_closure(BraidWord(2, (-1, -1, -1)))).to_pd_text())],
    "hopf_chain3": [braid(3, 1, 1, 2, 2), braid(3, 2, 2, 1, 1), braid(4, 1, 1, 2, 2, 3),
                    pd_of(braid(3, 1, 1, 2, 2), reverse=True)],
    "hopf_chain4_mixed": [braid(4, 1, 1, -2, -2, 3, 3), braid(4, 3, 3, 1, 1, -2, -2),
                          braid(5, 1, 1, -2, -2, 3, 3, -4)],
    "hopf_plus_unknot": [braid(3, 1, 1), braid(3, 2, 2),
                         ("pd", disjoint_union(braid_closure(BraidWord(2, (1, 1))),
                                               parse_pd("L 1\n")).to_pd_text())],
    "trefoil_plus_hopf": [("pd", disjoint_union(braid_closure(BraidWord(2, (1, 1, 1))),
                                                braid_closure(BraidWord(2, (-1, -1)))).to_pd_text()),
                          braid(4, 1, 1, 1, -3, -3), braid(4, -3, -3, 1, 1, 1)],
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    for name, diagrams in ENTRIES.items():
        parsed = [parse_diagram(text, fmt) for fmt, text in diagrams]
        comps = {D.num_components for D in parsed}
        values = {classical_invariant(D).value for D in parsed}
        assert len(comps) == 1 and len(values) == 1, name
        entry = CorpusEntry(name, comps.pop(), list(diagrams),
                            {"wenzl_so8": values.pop()})
        (OUT / f"{name}.json").write_text(json.dumps(entry.to_json(), indent=1) + "\n")
        print(name, entry.components, entry.expected["wenzl_so8"])


if __name__ == "__main__":
    main()
