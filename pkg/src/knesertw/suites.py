"""Batch sweeps behind ``knesertw verify`` and ``knesertw report``.

Each suite returns ``(checks, lines, ok)``: the condition reports, the
human-readable summary lines and whether the suite passed.
"""

from __future__ import annotations

import math

from . import verify as V

PUBLISHED_KPRIME = {1: 12, 2: 54, 3: 195, 4: 626}
SUITES = ("lemma5", "f", "theorem9", "thresholds", "cases", "bounds")


def parse_range(text: str | None, default: range | None = None) -> list[int]:
    """'3', '1..4' (inclusive) or '2,5,7'."""
    if text is None:
        return list(default) if default is not None else []
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if ".." in piece:
            a, b = piece.split("..", 1)
            lo, hi = int(a), int(b)
            if lo > hi:
                raise ValueError(f"empty range {piece!r}")
            out.extend(range(lo, hi + 1))
        else:
            out.append(int(piece))
    return out


def lemma5_suite(ns, enum_cap=V.LEMMA5_ENUM_CAP):
    checks, bad = [], []
    enumerated = 0
    for n in ns:
        for k in range(1, n):
            for t in range(1, k + 1):
                rep = V.check_lemma5(n, k, t, enum_cap)
                enumerated += rep.witness["enumerated"]
                checks.append(rep)
                if k > t and n > 2 * k - t:
                    checks.append(V.check_degree_bound(n, k, t))
    bad = [c for c in checks if not c.holds]
    lines = [
        f"lemma5: {sum(c.condition == 'lemma5' for c in checks)} tuples, "
        f"{enumerated} cross-checked by enumeration",
        f"degree-bound: {sum(c.condition == 'degree-bound' for c in checks)} tuples",
    ]
    lines += [f"FAIL {c.condition} {c.params}" for c in bad]
    return checks, lines, not bad


def f_suite(ks, ns):
    checks = []
    for k in ks:
        for t in range(1, k):
            for n in ns:
                if n > k and V.lemma7_hypothesis(n, k, t):
                    checks.append(V.check_f_monotone(n, k, t))
    bad = [c for c in checks if not c.holds]
    lines = [f"f-monotone: {len(checks)} tuples meeting the hypothesis"]
    lines += [f"FAIL f-monotone {c.params}" for c in bad]
    return checks, lines, not bad


def theorem9_suite(ns=None, ks=None, ts=None, span=20):
    """Explicit tuples when all ranges are given; otherwise the corollary sweep.

    The sweep checks every (n, k, t) with k <= 12 and n in
    [threshold, threshold + span], where the threshold is the explicit
    lower bound on n that is claimed to imply all three conditions.
    """
    tuples = []
    if ns and ks and ts:
        tuples = [(n, k, t) for n in ns for k in ks for t in ts if k > t > 0]
    else:
        for k in ks or range(3, 13):
            for t in range(2, k):
                start = math.ceil(V.cor14_hypothesis_threshold(k, t))
                tuples.extend((n, k, t) for n in range(start, start + span + 1))
    checks, lines, ok = [], [], True
    for n, k, t in tuples:
        reps = V.check_theorem9(n, k, t)
        checks.extend(reps)
        good = V.formula_guaranteed(reps)
        ok = ok and good
        if len(tuples) <= 20 or not good:
            verdicts = " ".join(f"{r.condition}={'ok' if r.holds else 'FAIL'}" for r in reps)
            lines.append(f"K({n},{k},{t}): {verdicts}")
    lines.append(f"theorem9: {len(tuples)} tuples, all conditions hold: {ok}")
    return checks, lines, ok


def thresholds_suite(cs):
    checks, lines, ok = [], [], True
    for c in cs:
        res = V.compute_Kprime(c)
        expected = PUBLISHED_KPRIME.get(c)
        tail_fails = all(f for k, _, _, f in res.search_log if k >= res.K_prime)
        extra = res.n_monotone and tail_fails
        rep = V.make_report(
            "kprime",
            res.K_prime,
            "==",
            expected if expected is not None else res.K_prime,
            {"c": c},
            {"K_of_c": res.K_of_c, "window": list(res.window), "n_monotone": res.n_monotone},
            extra,
        )
        checks.append(rep)
        ok = ok and rep.holds
        lines.append(f"K'({c}) = {res.K_prime}  (K({c}) = {V.compute_K(c)})")
    return checks, lines, ok


def cases_suite(ts, horizon=200):
    checks = [V.check_corollary14_cases(t) for t in ts]
    if any(t >= 24 for t in ts) and horizon >= 24:
        checks.append(V.tail_monotonicity_certificate())
        checks.extend(V.check_tail_range(horizon))
    bad = [c for c in checks if not c.holds]
    lines = [f"{c.condition} t={c.params['t']}: {'ok' if c.holds else 'FAIL'}" for c in checks[: len(ts)]]
    if horizon >= 24 and any(t >= 24 for t in ts):
        lines.append(f"tail certificate through t={horizon}: {'ok' if not bad else 'FAIL'}")
    lines += [f"FAIL {c.condition} {c.params}" for c in bad]
    return checks, lines, not bad


def bounds_suite(ks, ts=None):
    """Informational: which threshold is smaller is reported, not enforced."""
    checks, lines = [], []
    for k in ks:
        for t in ts or range(2, k):
            if not k > t > 1:
                continue
            rep = V.compare_bounds(k, t)
            checks.append(rep)
            lines.append(
                f"k={k} t={t}: new {rep.lhs} vs older {rep.rhs} "
                f"({'improved' if rep.holds else 'weaker'})"
            )
    return checks, lines, True


def run_suite(name, args):
    """Dispatch on a suite name with an argparse-like namespace of range strings."""
    g = lambda attr: getattr(args, attr, None)
    if name == "lemma5":
        return lemma5_suite(parse_range(g("n"), range(2, 31)))
    if name == "f":
        return f_suite(parse_range(g("k"), range(2, 13)), parse_range(g("n"), range(1, 81)))
    if name == "theorem9":
        return theorem9_suite(parse_range(g("n")), parse_range(g("k")), parse_range(g("t")))
    if name == "thresholds":
        return thresholds_suite(parse_range(g("c"), range(1, 5)))
    if name == "cases":
        horizon = g("horizon")
        return cases_suite(parse_range(g("t"), range(2, 25)), 200 if horizon is None else horizon)
    if name == "bounds":
        return bounds_suite(parse_range(g("k"), range(3, 21)), parse_range(g("t")) or None)
    raise ValueError(f"unknown suite {name!r}")

