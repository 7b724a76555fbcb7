"""Integral fusion sub-rings of the metaplectic categories SO(N)_2.

Only the simple objects of dimension 1 and 2 are modelled; the objects of
dimension sqrt(N) or sqrt(N/2) are left out, and dim(C) = 4N is used as a
constant.  Structure constants live in a numpy array ``N[i, j, k]`` giving the
multiplicity of k in i (x) j.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, Sequence

import numpy as np

from .cyclo import CycNum
from .errors import (
    ClosureMismatchError,
    DimensionIdentityError,
    GradingMismatchError,
    NonIntegralError,
    ShapeMismatchError,
    UnsupportedNError,
)


@dataclass(frozen=True, eq=False)
class FusionRing:
    labels: tuple[str, ...]
    N: np.ndarray
    dual: tuple[int, ...]
    dims: tuple[int, ...]
    unit: int = 0
    family: str = ""
    n_param: int = 0

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label!r}") from None

    @property
    def rank(self) -> int:
        return len(self.labels)

    def product(self, a: str, b: str) -> dict[str, int]:
        i, j = self.index(a), self.index(b)
        return {self.labels[k]: int(m) for k, m in enumerate(self.N[i, j]) if m}

    def support(self, i: int, j: int) -> list[int]:
        return [int(k) for k in np.nonzero(self.N[i, j])[0]]

    def with_constant(self, a: str, b: str, c: str, value: int) -> FusionRing:
        """Copy with the single entry N^c_{ab} replaced."""
        M = self.N.copy()
        M[self.index(a), self.index(b), self.index(c)] = value
        return FusionRing(self.labels, M, self.dual, self.dims, self.unit, self.family,
                          self.n_param)


class _Builder:
    def __init__(self, labels: Sequence[str], dims: Sequence[int]):
        self.labels = list(labels)
        self.pos = {x: i for i, x in enumerate(self.labels)}
        self.dims = list(dims)
        n = len(self.labels)
        self.N = np.zeros((n, n, n), dtype=np.int64)

    def set(self, a: str, b: str, summands: Iterable[str]):
        i, j = self.pos[a], self.pos[b]
        self.N[i, j] = 0
        self.N[j, i] = 0
        for s in summands:
            self.N[i, j, self.pos[s]] += 1
            if i != j:
                self.N[j, i, self.pos[s]] += 1

    def ring(self, dual: dict[str, str], family: str, n_param: int) -> FusionRing:
        d = tuple(self.pos[dual.get(x, x)] for x in self.labels)
        return FusionRing(tuple(self.labels), self.N, d, tuple(self.dims), 0, family, n_param)


def _y(i: int) -> str:
    return f"Y{i}"


def build_metaplectic(N: int) -> FusionRing:
    """Dimension-1 and dimension-2 part of the SO(N)_2 fusion rules."""
    if not isinstance(N, (int, np.integer)) or N < 2:
        raise UnsupportedNError(f"N must be an integer >= 2, got {N!r}")
    N = int(N)
    if N % 2:
        return _odd(N)
    if N % 4 == 2:
        return _two_mod_four(N)
    return _zero_mod_four(N)


def _odd(N: int) -> FusionRing:
    m = (N - 1) // 2
    ys = [_y(i) for i in range(1, m + 1)]
    b = _Builder(["1", "Z"] + ys, [1, 1] + [2] * m)
    for x in b.labels:
        b.set("1", x, [x])
    b.set("Z", "Z", ["1"])
    for i in range(1, m + 1):
        b.set("Z", _y(i), [_y(i)])
        for j in range(i, m + 1):
            if i == j:
                b.set(_y(i), _y(i), ["1", "Z", _y(min(2 * i, N - 2 * i))])
            else:
                b.set(_y(i), _y(j), [_y(min(i + j, N - i - j)), _y(j - i)])
    return b.ring({}, "odd", N)


def _two_mod_four(N: int) -> FusionRing:
    k = N // 2
    ys = [_y(i) for i in range(1, k)]
    g = ["1", "g", "g2", "g3"]
    b = _Builder(g + ys, [1] * 4 + [2] * (k - 1))
    for a in range(4):
        for c in range(4):
            b.set(g[a], g[c], [g[(a + c) % 4]])
    for i in range(1, k):
        b.set("1", _y(i), [_y(i)])
        b.set("g", _y(i), [_y(k - i)])
        b.set("g2", _y(i), [_y(i)])
        b.set("g3", _y(i), [_y(k - i)])
        for j in range(i, k):
            if i == j:
                b.set(_y(i), _y(i), ["1", "g2", _y(min(2 * i, 2 * k - 2 * i))])
            elif i + j == k:
                b.set(_y(i), _y(j), ["g", "g3", _y(j - i)])
            else:
                b.set(_y(i), _y(j), [_y(min(i + j, 2 * k - i - j)), _y(j - i)])
    return b.ring({"g": "g3", "g3": "g"}, "2mod4", N)


def _zero_mod_four(N: int) -> FusionRing:
    k = N // 2
    ys = [_y(i) for i in range(1, k)]
    pts = ["1", "f", "g", "fg"]  # Z2 x Z2 with bits (f, g)
    bits = {"1": 0, "f": 1, "g": 2, "fg": 3}
    b = _Builder(pts + ys, [1] * 4 + [2] * (k - 1))
    for x in pts:
        for y in pts:
            b.set(x, y, [pts[bits[x] ^ bits[y]]])
    for i in range(1, k):
        b.set("1", _y(i), [_y(i)])
        b.set("f", _y(i), [_y(k - i)])
        b.set("g", _y(i), [_y(k - i)])
        b.set("fg", _y(i), [_y(i)])
        for j in range(i, k):
            if i == j:
                if 2 * i == k:
                    b.set(_y(i), _y(i), ["1", "f", "g", "fg"])
                else:
                    b.set(_y(i), _y(i), ["1", "fg", _y(min(2 * i, 2 * k - 2 * i))])
            elif i + j == k:
                b.set(_y(i), _y(j), ["g", "f", _y(j - i)])
            else:
                b.set(_y(i), _y(j), [_y(min(i + j, 2 * k - i - j)), _y(j - i)])
    return b.ring({}, "0mod4", N)


def category_dimension(N: int) -> int:
    """dim SO(N)_2 = 4N, including the objects not modelled here."""
    return 4 * N


# ---------------------------------------------------------------------------
# ring axioms


@dataclass
class RingReport:
    ok: bool
    checks: dict[str, bool] = field(default_factory=dict)
    first_violation: str | None = None
    witness: tuple | None = None

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "first_violation": self.first_violation,
                "witness": list(self.witness) if self.witness is not None else None}


def associativity_tensors(R: FusionRing) -> tuple[np.ndarray, np.ndarray]:
    """((i j) k -> l) and (i (j k) -> l) multiplicity arrays, indexed [i, j, k, l]."""
    n = R.rank
    A = R.N.astype(np.float64)
    # left[i,j,k,l] = sum_m N[i,j,m] N[m,k,l]
    left = (A.reshape(n * n, n) @ A.reshape(n, n * n)).reshape(n, n, n, n)
    # right[i,j,k,l] = sum_m N[j,k,m] N[i,m,l]
    right = (A.reshape(n * n, n) @ A.transpose(1, 0, 2).reshape(n, n * n))
    right = right.reshape(n, n, n, n).transpose(2, 0, 1, 3)
    return np.rint(left).astype(np.int64), np.rint(right).astype(np.int64)


def verify_ring(R: FusionRing) -> RingReport:
    """Exhaustive unit, duality, associativity, dimension and commutativity checks."""
    n, u, M = R.rank, R.unit, R.N
    labels = R.labels
    report = RingReport(True)

    def fail(name, text, witness):
        report.checks[name] = False
        if report.ok:
            report.ok = False
            report.first_violation = text
            report.witness = witness

    if (M < 0).any():
        i, j, k = (int(x) for x in np.argwhere(M < 0)[0])
        fail("nonnegative", f"N^{labels[k]}_{{{labels[i]},{labels[j]}}} < 0",
             (labels[i], labels[j], labels[k]))
    else:
        report.checks["nonnegative"] = True

    eye = np.eye(n, dtype=np.int64)
    bad_unit = np.argwhere((M[:, u, :] != eye) | (M[u, :, :] != eye))
    if len(bad_unit):
        i, k = (int(x) for x in bad_unit[0])
        fail("unit", f"unit law fails for {labels[i]} at {labels[k]}", (labels[i], labels[k]))
    else:
        report.checks["unit"] = True

    expected_unit = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        expected_unit[i, R.dual[i]] = 1
    bad_dual = np.argwhere(M[:, :, u] != expected_unit)
    if len(bad_dual) or any(R.dual[R.dual[i]] != i for i in range(n)):
        i, j = (int(x) for x in bad_dual[0]) if len(bad_dual) else (0, 0)
        fail("duality", f"N^1_{{{labels[i]},{labels[j]}}} disagrees with duality",
             (labels[i], labels[j]))
    else:
        report.checks["duality"] = True

    left, right = associativity_tensors(R)
    bad_assoc = np.argwhere(left != right)
    if len(bad_assoc):
        i, j, k, l = (int(x) for x in bad_assoc[0])
        fail("associativity",
             f"({labels[i]} x {labels[j]}) x {labels[k]} and {labels[i]} x ({labels[j]} x "
             f"{labels[k]}) differ at {labels[l]}: {left[i, j, k, l]} vs {right[i, j, k, l]}",
             (labels[i], labels[j], labels[k], labels[l]))
    else:
        report.checks["associativity"] = True

    d = np.array(R.dims, dtype=np.int64)
    bad_dim = np.argwhere(np.outer(d, d) != M @ d)
    if len(bad_dim):
        i, j = (int(x) for x in bad_dim[0])
        fail("dimensions", f"dim({labels[i]}) dim({labels[j]}) != dim of product",
             (labels[i], labels[j]))
    else:
        report.checks["dimensions"] = True

    bad_comm = np.argwhere(M != M.transpose(1, 0, 2))
    if len(bad_comm):
        i, j, k = (int(x) for x in bad_comm[0])
        fail("commutativity", f"{labels[i]} x {labels[j]} != {labels[j]} x {labels[i]}",
             (labels[i], labels[j], labels[k]))
    else:
        report.checks["commutativity"] = True
    return report


# ---------------------------------------------------------------------------
# sub-rings


@dataclass(frozen=True, eq=False)
class SubRing:
    parent: FusionRing
    members: frozenset[str]

    @property
    def dim(self) -> int:
        R = self.parent
        return sum(R.dims[R.index(x)] ** 2 for x in self.members)

    def sorted_members(self) -> list[str]:
        R = self.parent
        return sorted(self.members, key=R.index)

    def to_json(self) -> dict:
        return {"members": self.sorted_members(), "dim": self.dim}


def fusion_closure(R: FusionRing, generators: Iterable[str]) -> SubRing:
    """Smallest set containing the unit and generators, closed under products and duals."""
    members = {R.unit} | {R.index(g) for g in generators}
    frontier = list(members)
    while frontier:
        new = set()
        for i in frontier:
            new.add(R.dual[i])
            for j in list(members):
                new.update(R.support(i, j))
        new -= members
        members |= new
        frontier = list(new)
    return SubRing(R, frozenset(R.labels[i] for i in members))


def adjoint_subring(S: SubRing) -> SubRing:
    R = S.parent
    gens = set()
    for x in S.members:
        i = R.index(x)
        gens.update(R.labels[k] for k in R.support(i, R.dual[i]))
    return fusion_closure(R, gens)


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def integral_parameter(N: int) -> tuple[str, int]:
    """('odd', t = sqrt N) or ('2mod4'/'0mod4', l = sqrt(N/2)); raise if not integral."""
    if N < 3:
        raise UnsupportedNError(f"N = {N} has no dimension-2 objects to build the subcategories from")
    if N % 2 and _is_square(N):
        return "odd", isqrt(N)
    if N % 2 == 0 and _is_square(N // 2):
        return ("2mod4" if N % 4 == 2 else "0mod4"), isqrt(N // 2)
    raise NonIntegralError(f"N = {N} does not give an integral metaplectic category")


def lemma28_generators(N: int) -> list[str]:
    family, s = integral_parameter(N)
    if family == "odd":
        return ["1", "Z"] + [_y(i * s) for i in range(1, (s - 1) // 2 + 1)]
    if family == "2mod4":
        return ["1", "g2"] + [_y(2 * s * n) for n in range(1, (s - 1) // 2 + 1)]
    return ["1", "f", "g", "fg"] + [_y(2 * s * m) for m in range(1, (s - 2) // 2 + 1)]


def lemma28_subcategory(N: int, R: FusionRing | None = None) -> SubRing:
    """Fusion closure of the listed generators; must equal the list, of dim 2t or 2l."""
    family, s = integral_parameter(N)
    R = build_metaplectic(N) if R is None else R
    gens = lemma28_generators(N)
    S = fusion_closure(R, gens)
    if S.members != frozenset(gens):
        extra = sorted(S.members - set(gens), key=R.index)
        raise ClosureMismatchError(f"closure of the generators adds {extra}")
    if S.dim != 2 * s:
        raise ClosureMismatchError(f"dim {S.dim} differs from {2 * s}")
    return S


def claimed_centralizer(N: int, R: FusionRing | None = None) -> SubRing:
    """Fusion closure of Y_t (odd N) or Y_l (even N), checked against dim(L) dim = 4N."""
    _, s = integral_parameter(N)
    R = build_metaplectic(N) if R is None else R
    S = fusion_closure(R, [_y(s)])
    L = lemma28_subcategory(N, R)
    if L.dim * S.dim != category_dimension(N):
        raise DimensionIdentityError(
            f"dim(L) * dim(centralizer) = {L.dim} * {S.dim} != {category_dimension(N)}")
    return S


@dataclass
class Theorem29Report:
    N: int
    ok: bool
    adjoint: list[str]
    subcategory: list[str]
    outside: list[str]

    def to_json(self) -> dict:
        return {"N": self.N, "ok": self.ok, "adjoint_of_centralizer": self.adjoint,
                "L": self.subcategory, "outside": self.outside}


def theorem29_check(N: int) -> Theorem29Report:
    """adjoint(centralizer) must lie inside the symmetric subcategory L."""
    R = build_metaplectic(N)
    L = lemma28_subcategory(N, R)
    A = adjoint_subring(claimed_centralizer(N, R))
    outside = sorted(A.members - L.members, key=R.index)
    return Theorem29Report(N, not outside, A.sorted_members(), L.sorted_members(), outside)


# ---------------------------------------------------------------------------
# grading


def grading(R: FusionRing) -> list[SubRing]:
    """Components of the universal grading on the modelled labels.

    Two labels share a component when one appears in the other tensored
    with the adjoint sub-ring.  The trivial component comes first.
    """
    whole = SubRing(R, frozenset(R.labels))
    adj = [R.index(x) for x in adjoint_subring(whole).members]
    seen: set[int] = set()
    comps = []
    for i in range(R.rank):
        if i in seen:
            continue
        comp = set()
        for a in adj:
            comp.update(R.support(i, a))
        seen |= comp
        comps.append(SubRing(R, frozenset(R.labels[k] for k in comp)))
    return comps


def expected_grading(R: FusionRing) -> list[frozenset[str]]:
    """Expected universal-grading components for each family of N."""
    ys = [x for x in R.labels if x.startswith("Y")]
    even = [y for y in ys if int(y[1:]) % 2 == 0]
    odd = [y for y in ys if int(y[1:]) % 2 == 1]
    if R.family == "odd":
        return [frozenset(["1", "Z"] + ys)]
    if R.family == "2mod4":
        return [frozenset(["1", "g2"] + even), frozenset(["g", "g3"] + odd)]
    out = [frozenset(["1", "f", "g", "fg"] + even)]
    if odd:
        out.append(frozenset(odd))
    return out


def check_grading(R: FusionRing) -> list[SubRing]:
    comps = grading(R)
    got = sorted(sorted(c.members) for c in comps)
    want = sorted(sorted(c) for c in expected_grading(R))
    if got != want:
        raise GradingMismatchError(f"computed components {got} differ from {want}")
    return comps


def grading_is_group_law(R: FusionRing, comps: list[SubRing]) -> bool:
    """The product of two components lies in a single component."""
    where = {x: n for n, c in enumerate(comps) for x in c.members}
    for a in comps:
        for b in comps:
            targets = set()
            for x in a.members:
                for y in b.members:
                    targets.update(where[R.labels[k]] for k in R.support(R.index(x), R.index(y)))
            if len(targets) > 1:
                return False
    return True


# ---------------------------------------------------------------------------
# balancing equation


@dataclass
class ModularDataSlice:
    S: list[list[CycNum]]
    theta: list[CycNum]
    dims: list[CycNum]
    N: np.ndarray

    def __post_init__(self):
        n = len(self.theta)
        self.S = [[CycNum.coerce(x) for x in row] for row in self.S]
        self.theta = [CycNum.coerce(x) for x in self.theta]
        self.dims = [CycNum.coerce(x) for x in self.dims]
        self.N = np.asarray(self.N, dtype=np.int64)
        if len(self.S) != n or any(len(row) != n for row in self.S) or len(self.dims) != n \
                or self.N.shape != (n, n, n):
            raise ShapeMismatchError("S, theta, dims and N must share one rank")

    @classmethod
    def from_json(cls, obj: dict) -> ModularDataSlice:
        try:
            return cls([[CycNum.from_json(x) for x in row] for row in obj["S"]],
                       [CycNum.from_json(x) for x in obj["theta"]],
                       [CycNum.from_json(x) for x in obj["dims"]], np.asarray(obj["N"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ShapeMismatchError):
                raise
            raise ShapeMismatchError(f"bad modular data: {exc}") from exc


@dataclass
class BalancingReport:
    ok: bool
    violations: list[tuple[int, int, CycNum, CycNum]]

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [
            {"i": i, "j": j, "lhs": lhs.to_json(), "rhs": rhs.to_json()}
            for i, j, lhs, rhs in self.violations]}


def _unit_and_duals(N: np.ndarray) -> tuple[int, list[int]]:
    n = N.shape[0]
    eye = np.eye(n, dtype=np.int64)
    units = [u for u in range(n) if (N[u] == eye).all()]
    if not units:
        raise ShapeMismatchError("fusion data has no unit object")
    u = units[0]
    duals = []
    for i in range(n):
        js = [j for j in range(n) if N[i, j, u] == 1]
        if len(js) != 1:
            raise ShapeMismatchError(f"object {i} has no unique dual")
        duals.append(js[0])
    return u, duals


def balancing_check(M: ModularDataSlice) -> BalancingReport:
    """theta_i theta_j S_ij == sum_k N^k_{i* j} d_k theta_k for every (i, j)."""
    n = len(M.theta)
    _, duals = _unit_and_duals(M.N)
    weighted = [M.dims[k] * M.theta[k] for k in range(n)]
    bad = []
    for i in range(n):
        for j in range(n):
            lhs = M.theta[i] * M.theta[j] * M.S[i][j]
            rhs = CycNum()
            for k in np.nonzero(M.N[duals[i], j])[0]:
                rhs = rhs + weighted[int(k)] * int(M.N[duals[i], j, k])
            if lhs != rhs:
                bad.append((i, j, lhs, rhs))
    return BalancingReport(not bad, bad)


# ---------------------------------------------------------------------------
# numerology for N = 8


def center_numerology(N: int = 8) -> dict:
    """Dimension count for the Drinfeld center of SO(8)_2; rank figures reported side by side."""
    if N != 8:
        raise UnsupportedNError("the center numerology is recorded for N = 8 only")
    k = N // 2
    dim_c = category_dimension(N)
    return {
        "N": N,
        "dim_C": dim_c,
        "dim_center": dim_c ** 2,
        "group_order": dim_c,
        "rank_C_from_fusion_rules": k + 7,
        "rank_center_asserted": 256,
        "metadata": "G = SmallGroup(32,49), nontrivial cocycle, 72 Morita classes",
    }
