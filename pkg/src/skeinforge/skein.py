"""Memoized skein recursion for the two-variable Kauffman polynomial.

Every form is driven by one unoriented relation at a crossing X with switch
X' and smoothings A (slots a-b, c-d joined) and B (a-d, b-c joined):

    P(X) = eps * P(X') + v * (P(A) + tau * P(B))

plus kink factors and a loop value.  For a positive crossing, A is the
orientation-respecting smoothing D_0 and B is D_inf.

Wenzl kinks: the positive kink factor is r and the normalization is
r^(-w); this makes the closure of sigma_1 evaluate to 1 and forces the loop
value 1 + (r - r^-1)/(q - q^-1).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable

from . import _planar
from .cyclo import CycNum
from .diagram import Diagram, Shadow, mirror, switch_crossing, smooth_crossing, writhe
from .errors import EmptyLinkError, MemoCapacityError, SkeinforgeError
from .laurent import FracLaurent2, Laurent2

DEFAULT_MEMO_LIMIT = 10**7

ZETA = CycNum.zeta(1)


def memo_limit_from_env() -> int:
    raw = os.environ.get("SKEINFORGE_MEMO_LIMIT")
    if raw is None:
        return DEFAULT_MEMO_LIMIT
    try:
        value = int(raw)
    except ValueError as exc:
        raise SkeinforgeError(f"SKEINFORGE_MEMO_LIMIT must be an integer, got {raw!r}") from exc
    if value < 1:
        raise SkeinforgeError("SKEINFORGE_MEMO_LIMIT must be positive")
    return value


# ---------------------------------------------------------------------------
# forms


@dataclass(frozen=True)
class SkeinForm:
    """Constants of one parameterization.

    Coefficients are fractions ``num / D**k`` of Laurent polynomials with a
    single fixed denominator ``D`` per form (``D = 1`` unless the loop value
    needs a non-unit divisor).
    """

    name: str
    names: tuple[str, str]
    eps: int
    tau: int
    kink_pos: Laurent2
    kink_neg: Laurent2
    v: Laurent2
    delta_num: Laurent2
    delta_k: int
    denom: Laurent2
    norm_pos: Laurent2
    norm_neg: Laurent2
    so8_point: tuple[CycNum, CycNum]
    relation_text: str = ""

    @property
    def delta(self) -> FracLaurent2:
        return FracLaurent2(self.delta_num, self.denom ** self.delta_k)

    def relation_holds(self, p_pos, p_neg, p_zero, p_inf) -> bool:
        """Check the skein clause on the four values at one crossing."""
        v = FracLaurent2(self.v)
        if self.eps == 1:
            return p_pos - p_neg == v * (p_zero - p_inf)
        return p_pos + p_neg == v * (p_zero + p_inf)


FORM_ALIASES = {"kauffman": "semi_oriented", "semi": "semi_oriented"}
FORM_NAMES = ("semi_oriented", "wenzl", "dubrovnik")


def make_form(name: str) -> SkeinForm:
    name = FORM_ALIASES.get(name, name)
    if name == "semi_oriented":
        a, z = Laurent2.gens(("a", "z"))
        ai, zi = a ** -1, z ** -1
        return SkeinForm(
            name, ("a", "z"), eps=-1, tau=1, kink_pos=a, kink_neg=ai, v=z,
            delta_num=(a + ai) * zi - 1, delta_k=0, denom=Laurent2.constant(1, ("a", "z")),
            norm_pos=a, norm_neg=ai,
            so8_point=(-CycNum.zeta(5), CycNum.zeta(5) + CycNum.zeta(-5)),
            relation_text="K(D+) + K(D-) = z (K(D0) + K(Dinf))",
        )
    if name == "dubrovnik":
        al, om = Laurent2.gens(("alpha", "omega"))
        ali, omi = al ** -1, om ** -1
        return SkeinForm(
            name, ("alpha", "omega"), eps=1, tau=-1, kink_pos=al, kink_neg=ali, v=om,
            delta_num=(al - ali) * omi + 1, delta_k=0,
            denom=Laurent2.constant(1, ("alpha", "omega")), norm_pos=al, norm_neg=ali,
            # documented point: alpha = r, omega = q - q^-1 at q = zeta, r = -zeta^-1
            so8_point=(-CycNum.zeta(-1), ZETA - CycNum.zeta(-1)),
            relation_text="F(D+) - F(D-) = omega (F(D0) - F(Dinf))",
        )
    if name == "wenzl":
        r, q = Laurent2.gens(("r", "q"))
        ri, qi = r ** -1, q ** -1
        dq = q - qi
        return SkeinForm(
            name, ("r", "q"), eps=1, tau=-1, kink_pos=r, kink_neg=ri, v=dq,
            delta_num=dq + r - ri, delta_k=1, denom=dq, norm_pos=r, norm_neg=ri,
            so8_point=(-CycNum.zeta(-1), ZETA),
            relation_text="W(D+) - W(D-) = (q - q^-1) (W(D0) - W(Dinf))",
        )
    raise SkeinforgeError(f"unknown skein form {name!r}; expected one of {FORM_NAMES}")


# ---------------------------------------------------------------------------
# coefficient rings


class _Ring:
    """Arithmetic used by the engine: elements plus add/mul callbacks."""

    def __init__(self, one, zero, add: Callable, mul: Callable, scale: Callable,
                 kpos, kneg, v, delta):
        self.one, self.zero = one, zero
        self.add, self.mul, self.scale = add, mul, scale
        self.kpos, self.kneg, self.v, self.delta = kpos, kneg, v, delta
        self._kpow = {0: one}
        self._dpow = {0: one}

    def kink_power(self, m: int):
        if m not in self._kpow:
            base = self.kpos if m > 0 else self.kneg
            prev = self.kink_power(m - 1 if m > 0 else m + 1)
            self._kpow[m] = self.mul(prev, base)
        return self._kpow[m]

    def delta_power(self, m: int):
        if m not in self._dpow:
            self._dpow[m] = self.mul(self.delta_power(m - 1), self.delta)
        return self._dpow[m]


def _symbolic_ring(form: SkeinForm) -> _Ring:
    """Elements are pairs (num, k) meaning num / denom**k."""
    names = form.names
    D = form.denom
    dpows = [Laurent2.constant(1, names)]

    def dpow(k):
        while len(dpows) <= k:
            dpows.append(dpows[-1] * D)
        return dpows[k]

    def add(x, y):
        (n1, k1), (n2, k2) = x, y
        if not n1:
            return y
        if not n2:
            return x
        if k1 < k2:
            n1 = n1 * dpow(k2 - k1)
        elif k2 < k1:
            n2 = n2 * dpow(k1 - k2)
        return (n1 + n2, max(k1, k2))

    def mul(x, y):
        return (x[0] * y[0], x[1] + y[1])

    def scale(x, c):
        return (x[0].scale(c), x[1])

    one = (Laurent2.constant(1, names), 0)
    zero = (Laurent2({}, names), 0)
    return _Ring(one, zero, add, mul, scale, (form.kink_pos, 0), (form.kink_neg, 0),
                 (form.v, 0), (form.delta_num, form.delta_k))


def _so8_ring(form: SkeinForm) -> _Ring:
    x, y = form.so8_point
    dval = form.denom.evaluate(x, y)
    delta = form.delta_num.evaluate(x, y) / dval ** form.delta_k
    return _Ring(CycNum.coerce(1), CycNum(), lambda p, q: p + q, lambda p, q: p * q,
                 lambda p, c: p * c, form.kink_pos.evaluate(x, y),
                 form.kink_neg.evaluate(x, y), form.v.evaluate(x, y), delta)


# ---------------------------------------------------------------------------
# engine


class SkeinEngine:
    """Descending-diagram recursion with a memo keyed by canonical pieces.

    The memo holds unnormalized values of connected, R1/R2-reduced pieces;
    these are regular-isotopy invariants of the piece, so sharing is safe.
    """

    def __init__(self, form: SkeinForm, mode: str = "symbolic", memo_limit: int | None = None):
        if mode not in ("symbolic", "so8"):
            raise SkeinforgeError(f"unknown mode {mode!r}")
        self.form = form
        self.mode = mode
        self.ring = _symbolic_ring(form) if mode == "symbolic" else _so8_ring(form)
        self.memo_limit = memo_limit_from_env() if memo_limit is None else memo_limit
        self.memo: dict = {}

    # raw values in the engine ring

    def raw_value(self, crs, loops: int = 0):
        R = self.ring
        crs, kinks, circles = _planar.simplify_raw(crs)
        parts = _planar.split_parts(crs) if crs else []
        pieces = len(parts) + circles + loops
        if pieces == 0:
            raise EmptyLinkError("the empty link has no invariant value")
        val = R.mul(R.kink_power(sum(kinks)), R.delta_power(pieces - 1))
        for part in parts:
            val = R.mul(val, self._core(part))
        return val

    def _core(self, part):
        canon = _planar.canonical_part(part)
        hit = self.memo.get(canon)
        if hit is not None:
            return hit
        R = self.ring
        eps, tau = self.form.eps, self.form.tau
        crossings, lengths = canon
        _, bad = _planar.traversal_data(canon)
        current = [list(c[:4]) for c in crossings]
        total = R.zero
        coef = 1
        for j in bad:
            rest_a, circ_a = _planar.smooth(current, j, "A")
            rest_b, circ_b = _planar.smooth(current, j, "B")
            pa = self.raw_value(rest_a, circ_a)
            pb = self.raw_value(rest_b, circ_b)
            term = R.mul(R.v, R.add(pa, R.scale(pb, tau)))
            total = R.add(total, R.scale(term, coef))
            current[j] = _planar.switched(current[j])
            coef *= eps
        badset = set(bad)
        w = sum(-c[4] if j in badset else c[4] for j, c in enumerate(crossings))
        base = R.mul(R.kink_power(w), R.delta_power(len(lengths) - 1))
        total = R.add(total, R.scale(base, coef))
        if len(self.memo) >= self.memo_limit:
            raise MemoCapacityError(f"memo table exceeded {self.memo_limit} entries")
        self.memo[canon] = total
        return total

    def _export(self, raw):
        if self.mode == "so8":
            return raw
        num, k = raw
        D = self.form.denom
        while k and num:
            q = num.divexact(D)
            if q is None:
                break
            num, k = q, k - 1
        if not num:
            k = 0
        return FracLaurent2(num, D ** k)

    def unnormalized(self, S: Shadow):
        return self._export(self.raw_value(S.crossings, S.free_loops))

    def normalized(self, D: Diagram):
        R = self.ring
        raw = self.raw_value(D.shadow().crossings, D.free_loops)
        return self._export(R.mul(R.kink_power(-writhe(D)), raw))


_ENGINES: dict[tuple[str, str], SkeinEngine] = {}


def get_engine(form: SkeinForm | str, mode: str = "symbolic") -> SkeinEngine:
    """Shared engine per (form, mode); the memo persists across calls."""
    if isinstance(form, str):
        form = make_form(form)
    key = (form.name, mode)
    eng = _ENGINES.get(key)
    if eng is None:
        eng = _ENGINES[key] = SkeinEngine(form, mode)
    return eng


def clear_memos():
    _ENGINES.clear()


def compute_unnormalized(S: Shadow | Diagram, form: SkeinForm | str, mode: str = "symbolic"):
    if isinstance(S, Diagram):
        S = S.shadow()
    return get_engine(form, mode).unnormalized(S)


def normalize(D: Diagram, form: SkeinForm | str, mode: str = "symbolic"):
    return get_engine(form, mode).normalized(D)


def evaluate_so8(value: FracLaurent2, form: SkeinForm | str) -> CycNum:
    if isinstance(form, str):
        form = make_form(form)
    return value.evaluate(*form.so8_point)


def specialize_so8(D: Diagram, form: SkeinForm | str = "wenzl", via_symbolic: bool = False) -> CycNum:
    """Normalized invariant at the SO(8)_2 point of the form."""
    if isinstance(form, str):
        form = make_form(form)
    if via_symbolic:
        return evaluate_so8(normalize(D, form, "symbolic"), form)
    return normalize(D, form, "so8")


# ---------------------------------------------------------------------------
# identities between forms


@dataclass
class IdentityReport:
    name: str
    equal: bool
    lhs: CycNum
    rhs: CycNum
    convention: str = ""
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"check": self.name, "equal": self.equal, "lhs": self.lhs.to_json(),
               "rhs": self.rhs.to_json(), "convention": self.convention}
        for k, v in self.extra.items():
            out[k] = v.to_json() if isinstance(v, CycNum) else v
        return out


LICKORISH_CONVENTION = (
    "D+ is the crossing whose over-strand runs d -> b in PD order; K uses positive kink factor "
    "a and normalization a^(-w). Under this labelling W(L) = (-1)^(c-1) K(L) at "
    "(a, z) = (-zeta^-5, zeta^5 + zeta^-5), the complex conjugate of the point "
    "(-zeta^5, zeta^5 + zeta^-5); K at the latter point matches W of the mirror image "
    "and is reported as 'literal'"
)


def lickorish_check(D: Diagram) -> IdentityReport:
    """W at the SO(8)_2 point versus (-1)^(c-1) K at the conjugate Kauffman point.

    K has integer coefficients and z = zeta^5 + zeta^-5 is real, so K at
    a = -zeta^-5 is the complex conjugate of K at a = -zeta^5.
    """
    lhs = specialize_so8(D, "wenzl")
    k_literal = specialize_so8(D, "semi_oriented")
    sign = -1 if (D.num_components - 1) % 2 else 1
    rhs = k_literal.conjugate() * sign
    literal = k_literal * sign
    return IdentityReport("lickorish", lhs == rhs, lhs, rhs, LICKORISH_CONVENTION,
                          {"components": D.num_components, "literal": literal,
                           "literal_equal": literal == lhs,
                           "literal_on_mirror_equal": literal == lhs.conjugate()})


SUBSTITUTION_CONVENTION = (
    "D+ is the crossing whose over-strand runs d -> b in PD order; F uses positive kink factor "
    "alpha and normalization alpha^(-w); W(L) = F(L) at (alpha, omega) = (r, q - q^-1). "
    "The literal substitution (alpha, omega) = (r^-1, -(q - q^-1)) equals F of the mirror "
    "image under this labelling, and is reported as 'literal'"
)


def substitution_check(D: Diagram) -> IdentityReport:
    """W(L) at the SO(8)_2 point versus F(L) under the documented substitution."""
    lhs = specialize_so8(D, "wenzl")
    rhs = specialize_so8(D, "dubrovnik")
    r, q = -CycNum.zeta(-1), ZETA
    f_sym = normalize(D, "dubrovnik", "symbolic")
    literal = f_sym.evaluate(r.inverse(), -(q - q.inverse()))
    literal_mirror = normalize(mirror(D), "dubrovnik", "symbolic").evaluate(
        r.inverse(), -(q - q.inverse()))
    return IdentityReport("substitution", lhs == rhs, lhs, rhs, SUBSTITUTION_CONVENTION,
                          {"literal": literal, "literal_equal": literal == lhs,
                           "literal_on_mirror_equal": literal_mirror == lhs})


# ---------------------------------------------------------------------------
# skein clause at one crossing


def skein_values(D: Diagram, index: int, form: SkeinForm | str):
    """Unnormalized symbolic (P(D+), P(D-), P(D0), P(Dinf)) at crossing ``index``."""
    S = D.shadow()
    here = compute_unnormalized(S, form)
    switched = compute_unnormalized(switch_crossing(S, index), form)
    sa = compute_unnormalized(smooth_crossing(S, index, "A"), form)
    sb = compute_unnormalized(smooth_crossing(S, index, "B"), form)
    if D.over_dirs[index] == 1:
        return here, switched, sa, sb
    # at a negative crossing the orientation-respecting smoothing is mode B
    return switched, here, sb, sa
