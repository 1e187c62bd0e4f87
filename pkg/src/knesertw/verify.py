"""Exact checks of the binomial inequalities, thresholds and case analyses.

Every check returns a :class:`ConditionReport` holding the exact left and
right sides plus the comparison used, so a verdict can be re-derived from
the report alone (see :func:`reevaluate`).
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .combinatorics import RationalInterval, binom, falling, ln_enclosure

RELATIONS = {
    "<=": operator.le,
    "<": operator.lt,
    ">=": operator.ge,
    ">": operator.gt,
    "==": operator.eq,
}

DEFAULT_EPS = Fraction(1, 10**6)
LEMMA5_ENUM_CAP = 10**5


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    holds: bool
    lhs: Fraction
    rhs: Fraction
    relation: str
    params: dict
    witness: dict = field(default_factory=dict)


def make_report(condition, lhs, relation, rhs, params, witness=None, extra_ok=True):
    """Build a report; a failed side check is recorded as ``auxiliary_ok``."""
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    witness = dict(witness or {})
    if not extra_ok:
        witness["auxiliary_ok"] = False
    holds = RELATIONS[relation](lhs, rhs) and extra_ok
    return ConditionReport(condition, holds, lhs, rhs, relation, dict(params), witness)


def reevaluate(report: ConditionReport) -> bool:
    """Recompute the verdict from the recorded sides, relation and side checks."""
    return RELATIONS[report.relation](report.lhs, report.rhs) and report.witness.get("auxiliary_ok", True)


# -- degree / pencil inequality ---------------------------------------------

def lemma5_terms(n, k, t) -> tuple[int, int, int]:
    """(|T1|, |T2|, |T3|) from the closed forms."""
    t1 = sum(binom(k, i) * binom(n - k, k - i) for i in range(t))
    t2 = binom(n - t, k - t)
    t3 = (k - t) * t * binom(n - k, k - t)
    return t1, t2, t3


def enumerate_lemma5_classes(n, k, t) -> tuple[int, int, int, int]:
    """Classify every k-subset of [n]; returns counts of T1, T2, T3, overlaps.

    T1: at most t-1 elements in [k]; T2: contains [t];
    T3: exactly t-1 elements of [t] and exactly one of [k] - [t].
    """
    mask_t = (1 << t) - 1
    mask_k = (1 << k) - 1
    mask_mid = mask_k & ~mask_t
    c1 = c2 = c3 = overlaps = 0
    for combo in combinations(range(n), k):
        m = 0
        for e in combo:
            m |= 1 << e
        in1 = (m & mask_k).bit_count() <= t - 1
        in2 = m & mask_t == mask_t
        in3 = (m & mask_t).bit_count() == t - 1 and (m & mask_mid).bit_count() == 1
        c1 += in1
        c2 += in2
        c3 += in3
        overlaps += (in1 + in2 + in3) > 1
    return c1, c2, c3, overlaps


def check_lemma5(n, k, t, enum_cap=LEMMA5_ENUM_CAP) -> ConditionReport:
    if not (n > k >= t >= 1):
        raise ValueError(f"lemma5 needs n > k >= t >= 1, got ({n},{k},{t})")
    t1, t2, t3 = lemma5_terms(n, k, t)
    witness = {"T1": t1, "T2": t2, "T3": t3}
    ok = True
    if binom(n, k) <= enum_cap:
        e1, e2, e3, overlaps = enumerate_lemma5_classes(n, k, t)
        witness.update(enumerated=True, overlaps=overlaps)
        ok = (e1, e2, e3) == (t1, t2, t3) and overlaps == 0
        if not ok:
            witness.update(enum_T1=e1, enum_T2=e2, enum_T3=e3)
    else:
        witness["enumerated"] = False
    return make_report("lemma5", t1 + t2 + t3, "<=", binom(n, k), {"n": n, "k": k, "t": t}, witness, ok)


def check_degree_bound(n, k, t) -> ConditionReport:
    """Delta <= C(n,k) - C(n-t,k-t) - (k-t) t C(n-k,k-t)."""
    delta = sum(binom(k, i) * binom(n - k, k - i) for i in range(t))
    rhs = binom(n, k) - binom(n - t, k - t) - (k - t) * t * binom(n - k, k - t)
    return make_report("degree-bound", delta, "<=", rhs, {"n": n, "k": k, "t": t})


# -- monotone profile ---------------------------------------------------------

def lemma7_hypothesis(n, k, t) -> bool:
    """n >= t + (k+1-t)(k-t)/2."""
    return 2 * (n - t) >= (k + 1 - t) * (k - t)


def f_profile(n, k, t) -> tuple[tuple[int, ...], bool]:
    """f(r) = C(k-r, t-r) C(n-2t+r, k-2t+r) for r = 0..t-1, and whether it is non-decreasing."""
    if not k > t >= 1:
        raise ValueError(f"f_profile needs k > t >= 1, got k={k}, t={t}")
    values = tuple(binom(k - r, t - r) * binom(n - 2 * t + r, k - 2 * t + r) for r in range(t))
    return values, all(a <= b for a, b in zip(values, values[1:]))


def check_f_monotone(n, k, t) -> ConditionReport:
    values, _ = f_profile(n, k, t)
    steps = [b - a for a, b in zip(values, values[1:])]
    return make_report(
        "f-monotone",
        min(steps, default=0),
        ">=",
        0,
        {"n": n, "k": k, "t": t},
        {"values": list(values), "hypothesis": lemma7_hypothesis(n, k, t)},
    )


# -- sufficient conditions -----------------------------------------------------

def separator_sum(n, k, t, upper) -> int:
    """Sum over s = 1..upper of C(t-1,s-1) C(k+1-t,s) C(k-t+s,s) C(n-t-s,k-t-s)."""
    return sum(
        binom(t - 1, s - 1) * binom(k + 1 - t, s) * binom(k - t + s, s) * binom(n - t - s, k - t - s)
        for s in range(1, upper + 1)
    )


def check_theorem9(n, k, t) -> list[ConditionReport]:
    """The three sufficient conditions for tw = C(n,k) - C(n-t,k-t) - 1."""
    if not k > t > 0:
        raise ValueError(f"theorem9 needs k > t > 0, got k={k}, t={t}")
    params = {"n": n, "k": k, "t": t}
    return [
        make_report("eqns1", n, ">=", (t + 1) * (k + 1 - t), params),
        make_report("eqns2", n, ">=", t + Fraction((k + 1 - t) * (k - t), 2), params),
        make_report(
            "eqns3",
            Fraction(binom(n - t, k - t), 3),
            ">=",
            separator_sum(n, k, t, min(t, k - t)),
            params,
        ),
    ]


def formula_guaranteed(reports) -> bool:
    return all(r.holds for r in reports)


def check_lemma8_separator_bound(n, k, t, p=Fraction(2, 3), cross_check_cap=20) -> ConditionReport:
    """All three separator-lemma hypotheses; brute-force cross-check when small.

    When the hypotheses hold and C(n,k) <= ``cross_check_cap``, the minimum
    p-separator of K(n,k,t) is computed and must have at least
    C(n,k) - C(n-t,k-t) vertices.
    """
    p = Fraction(p)
    if not Fraction(2, 3) <= p < 1:
        raise ValueError(f"p must satisfy 2/3 <= p < 1, got {p}")
    if not k > t > 0:
        raise ValueError(f"lemma8 needs k > t > 0, got k={k}, t={t}")
    h1 = n >= (t + 1) * (k + 1 - t)
    h2 = lemma7_hypothesis(n, k, t)
    lhs = (1 - p) * binom(n - t, k - t)
    rhs = separator_sum(n, k, t, t)
    witness = {"eqns1": h1, "eqns2": h2}
    ok = h1 and h2
    if ok and lhs >= rhs and binom(n, k) <= cross_check_cap:
        from .exactsolver import min_balanced_separator
        from .kneser import build_graph, validate_params

        g = build_graph(validate_params(n, k, t)).graph
        size = len(min_balanced_separator(g, p).separator)
        bound = binom(n, k) - binom(n - t, k - t)
        witness.update(min_separator=size, separator_bound=bound)
        ok = size >= bound
    return make_report("lemma8", lhs, ">=", rhs, {"n": n, "k": k, "t": t, "p": p}, witness, ok)


def sum_limits_agree(n, k, t) -> bool:
    """Summing to t and to min(t, k-t) agree under the zero convention."""
    return separator_sum(n, k, t, t) == separator_sum(n, k, t, min(t, k - t))


# -- thresholds in k for t = k - c -----------------------------------------------

def compute_K(c: int) -> Fraction:
    if c < 1:
        raise ValueError("c must be >= 1")
    total = sum(
        Fraction(binom(c - 1, s - 1) * binom(c + 1, s) * binom(c + s, s), c ** (s - 1))
        for s in range(1, c + 1)
    )
    return c - 1 + 3 * total


def final_inequality(c: int, k: int, n: int | None = None) -> tuple[int, Fraction]:
    """Both sides of the last inequality in the K(c) derivation at t = k - c.

    ``n`` defaults to the minimal admissible n = (t+1)(c+1). The factorial
    ratio is evaluated as the product of (t-i)/(n-t-i) for i = 1..s-1.
    """
    t = k - c
    if n is None:
        n = (t + 1) * (c + 1)
    rhs = Fraction(0)
    for s in range(1, c + 1):
        coeff = Fraction(3 * falling(c, s), math.factorial(s - 1)) * binom(c + 1, s) * binom(c + s, s)
        ratio = Fraction(1)
        for i in range(1, s):
            ratio *= Fraction(t - i, n - t - i)
        rhs += coeff * ratio
    return n - t, rhs


@dataclass(frozen=True)
class ThresholdResult:
    c: int
    K_of_c: Fraction
    K_prime: int
    window: tuple[int, int]
    search_log: tuple[tuple[int, Fraction, Fraction, bool], ...]
    n_monotone: bool


def default_window(c: int) -> tuple[int, int]:
    return 2 * c + 1, 4 * math.ceil(compute_K(c))


def compute_Kprime(c: int, k_window: tuple[int, int] | None = None) -> ThresholdResult:
    """Smallest k from which the final inequality fails throughout the window.

    Failure is evaluated at the minimal n; it persists for every larger n
    because n - t grows while each factor (t-i)/(n-t-i) shrinks, which needs
    only t - i >= 0 and n - t - i > 0 (recorded in ``n_monotone``).
    """
    need = default_window(c)
    if k_window is None:
        k_window = need
    lo, hi = k_window
    if lo > need[0] or hi < need[1]:
        raise ValueError(f"window {k_window} must contain {need}")
    log = []
    n_ok = True
    for k in range(lo, hi + 1):
        lhs, rhs = final_inequality(c, k)
        fails = not lhs <= rhs
        log.append((k, Fraction(lhs), rhs, fails))
        if fails:
            t = k - c
            n = (t + 1) * (c + 1)
            n_ok = n_ok and t - (c - 1) >= 0 and n - t - (c - 1) > 0
    if not log[-1][3]:
        raise ValueError(f"no failure point inside window {k_window} for c={c}")
    last_ok = max((k for k, _, _, fails in log if not fails), default=lo - 1)
    return ThresholdResult(c, compute_K(c), last_ok + 1, (lo, hi), tuple(log), n_ok)


# -- case analysis in t ----------------------------------------------------------

def cor14_sum(c, t) -> Fraction:
    """Sum over s = 1..t of c^s / ((s-1)! s! s!)."""
    c = Fraction(c)
    return sum(
        (c**s / (math.factorial(s - 1) * math.factorial(s) ** 2) for s in range(1, t + 1)),
        Fraction(0),
    )


def tail_bound(t, eps=DEFAULT_EPS) -> RationalInterval:
    """Enclosure of 4 ln t + (ln t)^2."""
    ln = ln_enclosure(t, eps)
    return ln.scale(4) + ln.square()


def check_corollary14_cases(t: int, eps=DEFAULT_EPS) -> ConditionReport:
    """Case 1 (t <= 16), case 2 (17..23) or the tail inequality (t >= 24).

    The sum is increasing in c > 0, so showing it stays below (t-1)/3 at the
    endpoint c0 rules out every c <= c0.
    """
    if t < 2:
        raise ValueError(f"t must be >= 2, got {t}")
    params = {"t": t}
    if t <= 16:
        c0 = Fraction(t - 1, 6)
        return make_report("case1", cor14_sum(c0, t), "<", Fraction(t - 1, 3), params, {"c": c0})
    if t <= 23:
        ln = ln_enclosure(t, eps)
        return make_report(
            "case2", cor14_sum(ln.hi, t), "<", Fraction(t - 1, 3), params,
            {"c": ln.hi, "ln_lo": ln.lo, "ln_hi": ln.hi},
        )
    enc = tail_bound(t, eps)
    return make_report("tail24", enc.hi, "<", t - 1, params, {"enclosure_lo": enc.lo})


def tail_monotonicity_certificate(eps=DEFAULT_EPS) -> ConditionReport:
    """g(x) = x - 1 - 4 ln x - (ln x)^2 is increasing for x >= 24.

    g'(x) = 1 - (4 + 2 ln x)/x and (4 + 2 ln x)/x is decreasing for x >= 1,
    so checking (4 + 2 ln 24)/24 < 1 covers all x >= 24.
    """
    ln = ln_enclosure(24, eps)
    return make_report("tail24", (4 + 2 * ln.hi) / 24, "<", 1, {"t": 24, "kind": "derivative"}, {"ln_hi": ln.hi})


def check_tail_range(horizon: int, eps=DEFAULT_EPS) -> list[ConditionReport]:
    """Tail inequality for each t in 24..horizon, plus gap growth between steps."""
    out = [check_corollary14_cases(t, eps) for t in range(24, horizon + 1)]
    for t in range(24, horizon):
        lo_next = (t + 1) - 1 - tail_bound(t + 1, eps).hi
        hi_cur = t - 1 - tail_bound(t, eps).lo
        out.append(make_report("tail24", lo_next, ">", hi_cur, {"t": t, "kind": "gap-step"}))
    return out


# -- comparison with the older bound ----------------------------------------------

def liu_threshold(k, t) -> int:
    return 2 * (k - t) * (t + 1) * binom(k, t) + k + t + 1


def new_threshold(k, t, with_t=True, eps=DEFAULT_EPS) -> RationalInterval:
    """The improved lower bound on n, as an exact interval (a point for t <= 16)."""
    core = k * (k + 1 - t) * (k - t)
    shift = t if with_t else 0
    if t <= 16:
        v = Fraction(shift + 6 * core)
        return RationalInterval(v, v)
    ln = ln_enclosure(t, eps)
    num = (t - 1) * core
    return RationalInterval(shift + num / ln.hi, shift + num / ln.lo)


def compare_bounds(k, t, eps=DEFAULT_EPS) -> ConditionReport:
    """Is the improved threshold at most the older one? Reported either way."""
    if not k > t > 1:
        raise ValueError(f"compare_bounds needs k > t > 1, got k={k}, t={t}")
    new = new_threshold(k, t, True, eps)
    bare = new_threshold(k, t, False, eps)
    old = liu_threshold(k, t)
    return make_report(
        "liu-bound",
        new.hi,
        "<=",
        old,
        {"k": k, "t": t},
        {
            "new_lo": new.lo,
            "without_t_hi": bare.hi,
            "ratio": new.hi / old,
        },
    )


def cor14_hypothesis_threshold(k, t, eps=DEFAULT_EPS) -> Fraction:
    """Smallest rational n meeting the hypothesis (upper end of the enclosure for t >= 17)."""
    return new_threshold(k, t, True, eps).hi
