"""Change points of the sigma sequence.

``n_i`` is the index just before the i-th increment: ``sigma_{n_i + 1} =
sigma_{n_i} + 1``, so ``sigma_{n_i} = i + 1``.  Each one is located by a
certified binary search for the first index reaching a target value; the
search window is seeded near ``e^(2c) / (2 pi)`` (where the lower bracket
estimate crosses c) and expanded by factors of 3 until it provably straddles
the answer, so the seed is a heuristic only.

Probed sigma values are kept in a module-level cache of (n -> sigma) facts.
Entries are immutable certified results, so concurrent duplicate inserts are
harmless.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass

import gmpy2

from .bounds import DEFAULT_POLICY, BoundedReal, PrecisionPolicy, exp
from .sigma import sigma_exact

__all__ = [
    "ChangePointRecord",
    "first_n_with_sigma",
    "enumerate_changepoints",
    "corollary_gap_check",
    "quotient_report",
    "QuotientRow",
    "write_cache_file",
    "read_cache_file",
    "clear_probe_cache",
]


@dataclass(frozen=True)
class ChangePointRecord:
    index: int
    n: int
    sigma_at: int
    gap: int | None  # n_{i+1} - n_i when the successor was enumerated
    quotient: BoundedReal | None  # n_{i+1} / n_i, same condition
    bits_used: int


@dataclass(frozen=True)
class QuotientRow:
    index: int
    quotient: BoundedReal
    distance_to_e_squared: BoundedReal


# n -> (sigma_n, bits_used); certified facts, idempotent under re-insert.
_probe_cache: dict[int, tuple[int, int]] = {}


def clear_probe_cache() -> None:
    _probe_cache.clear()


def _sigma_at(n: int, policy: PrecisionPolicy) -> tuple[int, int]:
    hit = _probe_cache.get(n)
    if hit is not None:
        return hit
    cert = sigma_exact(n, policy)
    fact = (cert.sigma, cert.bits_used)
    _probe_cache[n] = fact
    return fact


def _window_seed(c: int) -> int:
    ctx = gmpy2.context(precision=64, round=gmpy2.RoundDown)
    seed = ctx.div(ctx.exp(2 * c), 2 * ctx.const_pi())
    return max(4, int(seed))


def first_n_with_sigma(c: int, policy: PrecisionPolicy | None = None) -> int:
    """Minimal n with sigma_n = c, for c >= 3.

    Relies only on monotone unit steps of the sequence plus certified
    point evaluations: at return, sigma was certified at both the result
    and the preceding index.
    """
    policy = policy or DEFAULT_POLICY
    if c < 3:
        raise ValueError(f"first_n_with_sigma requires c >= 3, got {c}")
    seed = _window_seed(c)
    hi = seed
    while _sigma_at(hi, policy)[0] < c:
        hi *= 3
    lo = hi
    while lo > 2:
        lo = max(2, lo // 3)
        if _sigma_at(lo, policy)[0] < c:
            break
    if _sigma_at(lo, policy)[0] >= c:
        raise AssertionError(f"window expansion failed to undershoot target {c}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _sigma_at(mid, policy)[0] >= c:
            hi = mid
        else:
            lo = mid
    if _sigma_at(hi, policy)[0] != c or _sigma_at(lo, policy)[0] != c - 1:
        raise AssertionError(f"unit-step structure violated near n={hi}")
    return hi


def enumerate_changepoints(max_n: int, policy: PrecisionPolicy | None = None) -> list[ChangePointRecord]:
    """All change points n_i <= max_n, in order, with gaps and quotients
    filled in for consecutive enumerated pairs."""
    policy = policy or DEFAULT_POLICY
    if max_n < 3:
        return []
    raw: list[tuple[int, int, int]] = []  # (index, n_i, bits)
    i = 1
    while True:
        first = first_n_with_sigma(i + 2, policy)
        n_i = first - 1
        if n_i > max_n:
            break
        bits = max(_probe_cache[n_i][1], _probe_cache[first][1])
        raw.append((i, n_i, bits))
        i += 1
    return _link_records(raw, policy.initial_bits)


def _link_records(raw: list[tuple[int, int, int]], bits: int) -> list[ChangePointRecord]:
    records = []
    for pos, (i, n_i, used) in enumerate(raw):
        gap = quotient = None
        if pos + 1 < len(raw):
            n_next = raw[pos + 1][1]
            gap = n_next - n_i
            quotient = BoundedReal.from_int(n_next, bits) / n_i
        records.append(ChangePointRecord(i, n_i, i + 1, gap, quotient, used))
    return records


def ensure_changepoints_through(
    max_n: int, policy: PrecisionPolicy | None = None, known: list[ChangePointRecord] | None = None
) -> list[ChangePointRecord]:
    """Extend a consecutive record list until its frontier passes max_n.

    The returned list deliberately includes one record with n > max_n: its
    presence proves the enumeration below max_n is complete, which lets a
    persisted cache answer later queries without re-searching.
    """
    policy = policy or DEFAULT_POLICY
    raw = [(r.index, r.n, r.bits_used) for r in (known or [])]
    i = len(raw) + 1
    while not raw or raw[-1][1] <= max_n:
        first = first_n_with_sigma(i + 2, policy)
        n_i = first - 1
        bits = max(_probe_cache[n_i][1], _probe_cache[first][1])
        raw.append((i, n_i, bits))
        i += 1
    return _link_records(raw, policy.initial_bits)


def slice_records(records: list[ChangePointRecord], max_n: int) -> list[ChangePointRecord]:
    """Restrict to n_i <= max_n, rebuilding pair links so the result is
    exactly what a fresh enumeration up to max_n would return."""
    raw = [(r.index, r.n, r.bits_used) for r in records if r.n <= max_n]
    bits = records[0].quotient.bits if records and records[0].quotient is not None else DEFAULT_POLICY.initial_bits
    return _link_records(raw, bits)


def corollary_gap_check(records: list[ChangePointRecord]) -> list[bool]:
    """Per consecutive pair: does 3 n_i <= n_{i+1} hold?  Exact integers."""
    return [
        3 * a.n <= b.n
        for a, b in zip(records, records[1:])
    ]


def quotient_report(records: list[ChangePointRecord], *, bits: int | None = None) -> list[QuotientRow]:
    """Certified quotient enclosures with their signed distance to e^2."""
    if len(records) < 2:
        return []
    bits = bits or DEFAULT_POLICY.initial_bits
    e_squared = exp(BoundedReal.from_int(2, bits))
    rows = []
    for a, b in zip(records, records[1:]):
        q = BoundedReal.from_int(b.n, bits) / a.n
        rows.append(QuotientRow(a.index, q, q - e_squared))
    return rows


# -- cache file ----------------------------------------------------------------
#
# Line-delimited JSON, one record per line:
#   {"index": i, "n_i": n, "sigma_at": s, "bits_used": b}
# Written atomically (temp file + rename).  Certified facts never change, so
# the file is only ever extended or deliberately deleted.


def write_cache_file(path: str, records: list[ChangePointRecord]) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            for rec in records:
                line = {
                    "index": rec.index,
                    "n_i": rec.n,
                    "sigma_at": rec.sigma_at,
                    "bits_used": rec.bits_used,
                }
                handle.write(json.dumps(line) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_cache_file(path: str, *, bits: int | None = None) -> list[ChangePointRecord]:
    """Load records and rebuild the derived gap/quotient fields.

    Raises ValueError on malformed or non-consecutive content rather than
    returning a partially trusted list.
    """
    raw: list[tuple[int, int, int]] = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            entry = json.loads(line)
            try:
                raw.append((int(entry["index"]), int(entry["n_i"]), int(entry["bits_used"])))
                expected_sigma = int(entry["sigma_at"])
            except KeyError as missing:
                raise ValueError(f"{path}:{lineno}: missing field {missing}") from None
            if expected_sigma != raw[-1][0] + 1:
                raise ValueError(f"{path}:{lineno}: sigma_at inconsistent with index")
    for pos, (i, _, _) in enumerate(raw, 1):
        if i != pos:
            raise ValueError(f"{path}: record indexes are not consecutive from 1")
    return _link_records(raw, bits or DEFAULT_POLICY.initial_bits)
