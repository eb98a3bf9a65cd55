"""Exhaustive verification of the cancellation argument behind the solver.

Fix a row index i.  Over the set F_n of pairs [j, pi] (a 1-based position j
and a permutation pi), assign each element the weight

    W_i([j, pi]) = a[i,j] * w_j(pi),

so that summing W_i over all of F_n gives the left side of the row identity
sum_j a[i,j] X_j = b[i] X_0.  The elements split into two camps:

* *good*: pi_j = i.  Substituting a[i,j] = a[pi_j, j] turns the weight into
  b[i] * w_0(pi), so the good elements sum to b[i] * X_0 (fact 1).
* *bad*: pi_j != i.  The pairing map sends [j, pi] to [j', sigma], where j'
  is the position of value i in pi and sigma is pi with positions j and j'
  swapped.  The map is a fixed-point-free involution on the bad elements
  and flips the weight's sign, so the bad elements cancel in pairs and sum
  to zero (fact 2).

Both facts are checked two ways -- elementwise / pairwise as well as in
aggregate -- because an aggregate zero alone could mask a broken pairing.
``build_certificate`` serializes the whole verification: every good element
with its weight and every canceling pair, in a deterministic order, with
bit-stable weight renderings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .algebra import Polynomial, Scalar, render_scalar
from .cramer import SYMBOLIC, LinearSystem, big_x, generic_system, weight_w0, weight_wj
from .perm import (
    MAX_N_DEFAULT,
    Permutation,
    enumerate_permutations,
    inversions,
    position_of,
    transpose_positions,
)


@dataclass(frozen=True)
class FElement:
    """An element [j, pi] of F_n: a 1-based position paired with a permutation."""

    j: int
    p: Permutation

    def __post_init__(self) -> None:
        if not 1 <= self.j <= self.p.n:
            raise ValueError(f"j={self.j} outside 1..{self.p.n}")

    def sort_key(self) -> tuple:
        return (self.j, self.p.values)


def iter_elements(n: int, max_n: int = MAX_N_DEFAULT) -> Iterator[FElement]:
    """All n * n! elements of F_n (permutation-major order)."""
    return (
        FElement(j, p)
        for p in enumerate_permutations(n, max_n=max_n)
        for j in range(1, n + 1)
    )


def weight_W(sys: LinearSystem, i: int, e: FElement) -> Scalar:
    """a[i, e.j] times the w_j weight of e.p (canonical scalar)."""
    if not 1 <= i <= sys.n:
        raise ValueError(f"i={i} outside 1..{sys.n}")
    return sys.entry(i, e.j) * weight_wj(sys, e.j, e.p)


def is_good(i: int, e: FElement) -> bool:
    """True when pi_j = i; every element is exactly one of good/bad."""
    if not 1 <= i <= e.p.n:
        raise ValueError(f"i={i} outside 1..{e.p.n}")
    return e.p.values[e.j - 1] == i


def t_involution(i: int, e: FElement) -> FElement:
    """The pairing map on bad elements: [j, pi] -> [j', sigma].

    j' is the position of value i in pi; sigma swaps the values at
    positions j and j'.  Only defined on bad elements (pi_j != i); the
    image is bad again, and applying the map twice returns e.
    """
    if is_good(i, e):
        raise ValueError("pairing map is defined only on bad elements")
    j2 = position_of(e.p, i)
    return FElement(j2, transpose_positions(e.p, e.j, j2))


@dataclass(frozen=True)
class Fact1Report:
    """Good-element weight sum vs b[i] * X_0, plus the elementwise form."""

    i: int
    ok: bool
    elementwise_ok: bool
    aggregate_ok: bool
    good_count: int
    good_sum: Scalar
    b_i_times_x0: Scalar


@dataclass(frozen=True)
class Fact2Report:
    """Bad-element cancellation: involution, parity, pairwise and aggregate."""

    i: int
    ok: bool
    involution_ok: bool  # bad -> bad, self-inverse, no fixed point
    parity_ok: bool  # inversion counts differ by an odd number
    cancellation_ok: bool  # W(e) + W(T(e)) = 0 for every bad e
    aggregate_ok: bool  # the bad weights sum to zero
    bad_count: int
    bad_sum: Scalar


def check_fact1(
    sys: LinearSystem, i: int, max_n: int = MAX_N_DEFAULT
) -> Fact1Report:
    """Sum W_i over the good elements and compare with b[i] * X_0.

    Also checks, element by element, that each good weight equals
    b[i] * w_0(pi) -- the substitution that makes the aggregate work.
    """
    if not 1 <= i <= sys.n:
        raise ValueError(f"i={i} outside 1..{sys.n}")
    b_i = sys.rhs_entry(i)
    total: Scalar | int = 0
    count = 0
    elementwise = True
    for e in iter_elements(sys.n, max_n=max_n):
        if not is_good(i, e):
            continue
        count += 1
        w = weight_W(sys, i, e)
        if w != b_i * weight_w0(sys, e.p):
            elementwise = False
        total = total + w
    expected = b_i * big_x(sys, 0, max_n=max_n)
    aggregate = total == expected
    return Fact1Report(
        i=i,
        ok=elementwise and aggregate,
        elementwise_ok=elementwise,
        aggregate_ok=aggregate,
        good_count=count,
        good_sum=total,
        b_i_times_x0=expected,
    )


def check_fact2(
    sys: LinearSystem, i: int, max_n: int = MAX_N_DEFAULT
) -> Fact2Report:
    """Verify pairwise cancellation of the bad elements, then the aggregate.

    Per bad element e with image t: t is bad, t != e (no fixed points),
    the map applied twice returns e, the inversion counts of the two
    permutations differ by an odd number, and W(e) + W(t) = 0 exactly.
    """
    if not 1 <= i <= sys.n:
        raise ValueError(f"i={i} outside 1..{sys.n}")
    total: Scalar | int = 0
    count = 0
    involution_ok = True
    parity_ok = True
    cancellation_ok = True
    for e in iter_elements(sys.n, max_n=max_n):
        if is_good(i, e):
            continue
        count += 1
        t = t_involution(i, e)
        if is_good(i, t) or t == e or t_involution(i, t) != e:
            involution_ok = False
        if (inversions(e.p) - inversions(t.p)) % 2 != 1:
            parity_ok = False
        w = weight_W(sys, i, e)
        if w + weight_W(sys, i, t) != 0:
            cancellation_ok = False
        total = total + w
    total = _normalize(total, sys)
    aggregate = total == 0
    return Fact2Report(
        i=i,
        ok=involution_ok and parity_ok and cancellation_ok and aggregate,
        involution_ok=involution_ok,
        parity_ok=parity_ok,
        cancellation_ok=cancellation_ok,
        aggregate_ok=aggregate,
        bad_count=count,
        bad_sum=total,
    )


@dataclass(frozen=True)
class PairingCertificate:
    """Machine-checkable record of the good sum and the bad pairing.

    Invariants (enforced by :func:`validate_certificate`):
    good and pair counts add up to n * n! with exactly n! good elements;
    each pair's weights render as exact negations; fact2_sum renders "0";
    fact1_sum equals b_i_times_X0.
    """

    n: int
    i: int
    good: tuple[tuple[FElement, str], ...]
    bad_pairs: tuple[tuple[FElement, FElement, str, str], ...]
    fact1_sum: str
    b_i_times_x0: str
    fact2_sum: str


def build_certificate(
    sys: LinearSystem, i: int, max_n: int = MAX_N_DEFAULT
) -> PairingCertificate:
    """Enumerate F_n and emit the full pairing certificate (symbolic mode).

    Good entries are sorted by (j, permutation values); each bad pair is
    listed once, smaller element first, pairs sorted by their smaller
    element.  Numeric systems are rejected: their weights can cancel by
    accident, which makes the certificate meaningless.
    """
    if sys.mode != SYMBOLIC:
        raise ValueError("certificates are only defined for symbolic systems")
    if not 1 <= i <= sys.n:
        raise ValueError(f"i={i} outside 1..{sys.n}")

    good: list[tuple[FElement, str]] = []
    pairs: dict[tuple, tuple[FElement, FElement]] = {}
    fact1_total: Scalar | int = 0
    fact2_total: Scalar | int = 0
    for e in iter_elements(sys.n, max_n=max_n):
        w = weight_W(sys, i, e)
        if is_good(i, e):
            good.append((e, render_scalar(w)))
            fact1_total = fact1_total + w
            continue
        fact2_total = fact2_total + w
        t = t_involution(i, e)
        if t == e:
            raise RuntimeError(f"pairing map fixed point at {e}")
        if t_involution(i, t) != e:
            raise RuntimeError(f"pairing map not self-inverse at {e}")
        lo, hi = sorted((e, t), key=FElement.sort_key)
        pairs[lo.sort_key()] = (lo, hi)

    if 2 * len(pairs) + len(good) != sys.n * math.factorial(sys.n):
        raise RuntimeError("pairing did not cover the bad elements exactly")
    fact2 = _as_poly(fact2_total)
    if not fact2.is_zero:
        raise RuntimeError("bad-element weights did not cancel")

    good.sort(key=lambda item: item[0].sort_key())
    bad_pairs = []
    for key in sorted(pairs):
        lo, hi = pairs[key]
        w_lo = weight_W(sys, i, lo)
        w_hi = weight_W(sys, i, hi)
        if w_lo + w_hi != 0:
            raise RuntimeError(f"pair weights do not cancel at {lo}")
        bad_pairs.append((lo, hi, render_scalar(w_lo), render_scalar(w_hi)))

    return PairingCertificate(
        n=sys.n,
        i=i,
        good=tuple(good),
        bad_pairs=tuple(bad_pairs),
        fact1_sum=render_scalar(_as_poly(fact1_total)),
        b_i_times_x0=render_scalar(sys.rhs_entry(i) * big_x(sys, 0, max_n=max_n)),
        fact2_sum=render_scalar(fact2),
    )


def certificate_to_dict(cert: PairingCertificate) -> dict:
    """JSON-ready form: permutations as 1-based arrays, weights as text."""
    return {
        "n": cert.n,
        "i": cert.i,
        "good": [
            {"j": e.j, "pi": list(e.p.values), "weight": w} for e, w in cert.good
        ],
        "bad_pairs": [
            {
                "j": lo.j,
                "pi": list(lo.p.values),
                "j2": hi.j,
                "sigma": list(hi.p.values),
                "weight": w_lo,
                "weight2": w_hi,
            }
            for lo, hi, w_lo, w_hi in cert.bad_pairs
        ],
        "fact1_sum": cert.fact1_sum,
        "b_i_times_X0": cert.b_i_times_x0,
        "fact2_sum": cert.fact2_sum,
    }


def certificate_from_dict(data: dict) -> PairingCertificate:
    """Parse and shape-check a certificate dict (inverse of to_dict)."""
    try:
        n = _expect_int(data["n"], "n")
        i = _expect_int(data["i"], "i")
        good = tuple(
            (
                FElement(_expect_int(g["j"], "j"), _permutation(g["pi"])),
                _expect_str(g["weight"], "weight"),
            )
            for g in data["good"]
        )
        bad_pairs = tuple(
            (
                FElement(_expect_int(p["j"], "j"), _permutation(p["pi"])),
                FElement(_expect_int(p["j2"], "j2"), _permutation(p["sigma"])),
                _expect_str(p["weight"], "weight"),
                _expect_str(p["weight2"], "weight2"),
            )
            for p in data["bad_pairs"]
        )
        return PairingCertificate(
            n=n,
            i=i,
            good=good,
            bad_pairs=bad_pairs,
            fact1_sum=_expect_str(data["fact1_sum"], "fact1_sum"),
            b_i_times_x0=_expect_str(data["b_i_times_X0"], "b_i_times_X0"),
            fact2_sum=_expect_str(data["fact2_sum"], "fact2_sum"),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed certificate: {exc}") from exc


def validate_certificate(cert: PairingCertificate, max_n: int = MAX_N_DEFAULT) -> None:
    """Re-derive every certificate invariant; raise ValueError on the first failure.

    Weights are recomputed from (i, j, pi) on the generic system and
    re-rendered, so a loaded file is checked against the arithmetic itself,
    not just against its own internal consistency.
    """
    sys = generic_system(cert.n)
    fact = math.factorial(cert.n)
    if len(cert.good) != fact:
        raise ValueError(f"expected {fact} good entries, found {len(cert.good)}")
    if len(cert.good) + 2 * len(cert.bad_pairs) != cert.n * fact:
        raise ValueError("good + 2 * pairs must cover all n * n! elements")

    seen: set[tuple] = set()
    total: Scalar | int = 0
    for e, w in cert.good:
        if not is_good(cert.i, e):
            raise ValueError(f"{e} listed as good but is bad")
        recomputed = weight_W(sys, cert.i, e)
        if render_scalar(recomputed) != w:
            raise ValueError(f"good weight mismatch at {e}")
        _mark(seen, e)
        total = total + recomputed
    if render_scalar(_as_poly(total)) != cert.fact1_sum:
        raise ValueError("fact1_sum does not match the good weights")
    expected = sys.rhs_entry(cert.i) * big_x(sys, 0, max_n=max_n)
    if render_scalar(expected) != cert.b_i_times_x0:
        raise ValueError("b_i_times_X0 does not match the system")
    if cert.fact1_sum != cert.b_i_times_x0:
        raise ValueError("fact1_sum != b_i_times_X0")

    for lo, hi, w_lo, w_hi in cert.bad_pairs:
        if is_good(cert.i, lo) or is_good(cert.i, hi):
            raise ValueError(f"pair ({lo}, {hi}) contains a good element")
        if not lo.sort_key() < hi.sort_key():
            raise ValueError(f"pair ({lo}, {hi}) not in canonical order")
        if t_involution(cert.i, lo) != hi:
            raise ValueError(f"{hi} is not the pairing image of {lo}")
        w = weight_W(sys, cert.i, lo)
        if render_scalar(w) != w_lo or render_scalar(-w) != w_hi:
            raise ValueError(f"pair weights are not exact negations at {lo}")
        _mark(seen, lo)
        _mark(seen, hi)
    if cert.fact2_sum != "0":
        raise ValueError(f'fact2_sum must render "0", got {cert.fact2_sum!r}')
    if len(seen) != cert.n * fact:
        raise ValueError("certificate does not cover F_n exactly once")


def _mark(seen: set, e: FElement) -> None:
    key = e.sort_key()
    if key in seen:
        raise ValueError(f"{e} appears twice in the certificate")
    seen.add(key)


def _permutation(values) -> Permutation:
    return Permutation(tuple(_expect_int(v, "permutation value") for v in values))


def _expect_int(v, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise TypeError(f"{what} must be an integer, got {v!r}")
    return v


def _expect_str(v, what: str) -> str:
    if not isinstance(v, str):
        raise TypeError(f"{what} must be a string, got {v!r}")
    return v


def _as_poly(x: Scalar | int) -> Polynomial:
    return Polynomial.constant(x) if isinstance(x, int) else x


def _normalize(x: Scalar | int, sys: LinearSystem) -> Scalar:
    # sums over an empty camp stay the int 0; pin them to the system's mode
    if isinstance(x, int):
        return Polynomial.constant(x) if sys.mode == SYMBOLIC else Fraction(x)
    return x
