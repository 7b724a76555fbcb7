"""Sublink linking-number sums and their comparison with the Wenzl evaluation."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .cyclo import CycNum
from .diagram import Diagram, linking_matrix, writhe
from .errors import EmptyLinkError, SkeinforgeError

MAX_COMPONENTS = 24

I_POWERS = [CycNum.zeta(4 * k) for k in range(4)]  # 1, i, -1, -i


@dataclass
class SublinkSumResult:
    value: CycNum
    per_sublink: dict[frozenset, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "value": self.value.to_json(),
            "per_sublink": [[sorted(X), lk] for X, lk in
                            sorted(self.per_sublink.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))],
        }


def _subsets(n: int):
    for size in range(n + 1):
        for X in combinations(range(n), size):
            yield frozenset(X)


def _check_size(D: Diagram) -> int:
    n = D.num_components
    if n == 0:
        raise EmptyLinkError("the empty link has no sublinks")
    if n > MAX_COMPONENTS:
        raise SkeinforgeError(f"{n} components exceeds the enumeration limit {MAX_COMPONENTS}")
    return n


def sublink_linking_numbers(D: Diagram) -> dict[frozenset, int]:
    """lk(X, L - X) for every subset X of the components."""
    n = _check_size(D)
    lk = linking_matrix(D)
    out = {}
    for X in _subsets(n):
        out[X] = sum(lk[p][q] for p in X for q in range(n) if q not in X)
    return out


def classical_invariant(D: Diagram) -> SublinkSumResult:
    """1/2 * sum over all sublinks X of i^lk(X, L - X)."""
    per = sublink_linking_numbers(D)
    counts = [0, 0, 0, 0]
    for e in per.values():
        counts[e % 4] += 1
    # 1/2 * ((c0 - c2) + (c1 - c3) i)
    value = CycNum((counts[0] - counts[2], 0, 0, 0, counts[1] - counts[3], 0, 0, 0), 2)
    return SublinkSumResult(value, per)


def abstract_variant(D: Diagram) -> CycNum:
    """1/2 (-1)^w(D) * sum over sublinks of (-i)^lk; not a link invariant."""
    per = sublink_linking_numbers(D)
    total = CycNum()
    for e in per.values():
        total = total + I_POWERS[(-e) % 4]
    sign = -1 if writhe(D) % 2 else 1
    return total * sign / 2


@dataclass
class Theorem44Report:
    equal: bool
    wenzl: CycNum
    classical: CycNum
    variant: CycNum
    components: int

    def to_json(self) -> dict:
        return {"equal": self.equal, "wenzl": self.wenzl.to_json(),
                "classical": self.classical.to_json(), "abstract_variant": self.variant.to_json(),
                "components": self.components}


def verify_theorem44(D: Diagram) -> Theorem44Report:
    """Compare the Wenzl invariant at q = zeta, r = -zeta^-1 with the sublink sum."""
    from .skein import specialize_so8

    lhs = specialize_so8(D, "wenzl")
    rhs = classical_invariant(D).value
    return Theorem44Report(lhs == rhs, lhs, rhs, abstract_variant(D), D.num_components)
