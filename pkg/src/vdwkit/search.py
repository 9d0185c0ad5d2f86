"""Exhaustive search for van der Waerden numbers, with certificates.

W(r, k) is the least N such that every r-coloring of 1..N contains a
monochromatic k-term arithmetic progression.  compute_vdw climbs a
ladder of target lengths: a valid coloring of length N plus a failed
exhaustive search at N+1 pins W(r, k) = N+1 exactly.  Every outcome,
exact or not, carries the longest valid coloring seen as a checkable
certificate.

Colorings are 0-based here: positions 0..N-1, colors 0..r-1.
"""
from __future__ import annotations

import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from ._engine import ST_EXHAUSTED, ST_FOUND, HAVE_JIT, TargetRun
from .registry import SEARCH_DERIVED, VdwRecord

STATUS_EXACT = "exact"
STATUS_BUDGET = "budget-exhausted"
STATUS_LOWER_BOUND = "lower-bound-only"

# chunk sizing for the resumable kernel: aim for ~0.2s between budget
# checks regardless of engine speed
_CHUNK_MIN = 1024
_CHUNK_MAX = 1 << 18
_CHUNK_SECONDS = 0.2


def find_monochromatic_ap(colors, k: int):
    """First (start, step) of a monochromatic k-term progression, or None.

    Scans every progression; this is the oracle the incremental search
    machinery is measured against, so it stays deliberately plain.
    """
    if k < 3:
        raise ValueError("progression length k must be at least 3")
    n = len(colors)
    for d in range(1, (n - 1) // (k - 1) + 1):
        for a in range(n - (k - 1) * d):
            c0 = colors[a]
            j = 1
            while j < k and colors[a + j * d] == c0:
                j += 1
            if j == k:
                return a, d
    return None


def ap_free(colors, k: int) -> bool:
    """True when no k-term monochromatic progression is present."""
    return find_monochromatic_ap(colors, k) is None


def last_position_check(colors, k: int, i: int | None = None) -> bool:
    """True when no monochromatic k-term progression ends at position i.

    i is 0-based and defaults to the last position.  Appending one color
    to a clean prefix only needs this check: any new progression must
    end at the new position, so a sequence built left to right under
    this check is ap-free in full.
    """
    if k < 3:
        raise ValueError("progression length k must be at least 3")
    if i is None:
        i = len(colors) - 1
    if not 0 <= i < len(colors):
        raise ValueError(f"position {i} outside coloring of length {len(colors)}")
    c0 = colors[i]
    d = 1
    while (k - 1) * d <= i:
        j = 1
        while j < k and colors[i - j * d] == c0:
            j += 1
        if j == k:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Coloring:
    """An assignment of one of r colors to each of len(colors) positions.

    Color values are kept as given, even out of range, so that defective
    certificates can be represented and then rejected by verification.
    """

    r: int
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class Certificate:
    """A claimed ap-free r-coloring witnessing W(r, k) > length."""

    r: int
    k: int
    length: int
    coloring: Coloring

    @property
    def colors(self) -> tuple[int, ...]:
        return self.coloring.colors

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "k": self.k,
            "length": self.length,
            "colors": list(self.colors),
        }


@dataclass(frozen=True)
class SearchBudget:
    """Resource ceiling for compute_vdw; None fields are unlimited."""

    max_seconds: float | None = None
    max_nodes: int | None = None


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    elapsed: float
    max_depth: int

    def as_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "elapsed": self.elapsed,
            "max_depth": self.max_depth,
        }


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a compute_vdw run.

    status "exact": value is W(r, k) and the certificate has length
    value - 1.  status "budget-exhausted" or "lower-bound-only": value
    is only a lower bound, W(r, k) >= value, again with a certificate
    of length value - 1.
    """

    r: int
    k: int
    status: str
    value: int
    certificate: Certificate
    stats: SearchStats

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "k": self.k,
            "status": self.status,
            "value": self.value,
            "certificate": self.certificate.as_dict(),
            "stats": self.stats.as_dict(),
        }


def certificate_problems(cert: Certificate) -> list[str]:
    problems = []
    if cert.r < 2:
        problems.append(f"color count r={cert.r} below 2")
    if cert.k < 3:
        problems.append(f"progression length k={cert.k} below 3")
    colors = cert.colors
    if cert.length != len(colors):
        problems.append(
            f"declared length {cert.length} but {len(colors)} colors present"
        )
    bad = next((c for c in colors if not 0 <= c < max(cert.r, 1)), None)
    if bad is not None:
        problems.append(f"color {bad} outside range 0..{cert.r - 1}")
    if not problems and cert.k >= 3:
        hit = find_monochromatic_ap(colors, cert.k)
        if hit is not None:
            a, d = hit
            positions = ", ".join(str(a + j * d) for j in range(cert.k))
            problems.append(
                f"monochromatic progression at positions {positions} (step {d})"
            )
    return problems


def verify_certificate(cert: Certificate) -> bool:
    """Check a certificate from scratch: shape, color range, ap-freeness."""
    return not certificate_problems(cert)


class CertificateParseError(ValueError):
    """Raised for a structurally broken certificate file."""

    def __init__(self, path, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = str(path)
        self.lineno = lineno


def write_certificate(cert: Certificate, path) -> None:
    """Write the two-line certificate format: 'r k length' then colors."""
    body = f"{cert.r} {cert.k} {cert.length}\n"
    body += " ".join(str(c) for c in cert.colors) + "\n"
    Path(path).write_text(body, encoding="ascii")


def read_certificate(path) -> Certificate:
    """Parse a certificate file; '#' comment lines and blanks are skipped.

    Raises CertificateParseError, carrying the offending line number,
    for anything structurally wrong.  Semantic validity (ap-freeness,
    color range) is verify_certificate's job, not the parser's.
    """
    text = Path(path).read_text(encoding="ascii")
    content = []
    last_no = 0
    for no, raw in enumerate(text.splitlines(), 1):
        last_no = no
        line = raw.strip()
        if line and not line.startswith("#"):
            content.append((no, line))
    if not content:
        raise CertificateParseError(path, last_no + 1, "missing header line")
    no, header = content[0]
    tokens = header.split()
    if len(tokens) != 3:
        raise CertificateParseError(
            path, no, f"header needs 'r k length', got {len(tokens)} tokens"
        )
    try:
        r, k, length = (int(t) for t in tokens)
    except ValueError:
        raise CertificateParseError(path, no, f"non-integer header field in {header!r}")
    if length < 0:
        raise CertificateParseError(path, no, f"negative length {length}")
    if length == 0:
        if len(content) > 1:
            raise CertificateParseError(
                path, content[1][0], "unexpected content after empty certificate"
            )
        return Certificate(r, k, 0, Coloring(r, ()))
    if len(content) < 2:
        raise CertificateParseError(path, last_no + 1, "missing colors line")
    no, colors_line = content[1]
    try:
        colors = tuple(int(t) for t in colors_line.split())
    except ValueError:
        raise CertificateParseError(path, no, "non-integer color token")
    if len(colors) != length:
        raise CertificateParseError(
            path, no, f"expected {length} colors, found {len(colors)}"
        )
    if len(content) > 2:
        raise CertificateParseError(
            path, content[2][0], "unexpected content after colors line"
        )
    return Certificate(r, k, length, Coloring(r, colors))


def _canonical_prefixes(r: int, k: int, length: int) -> list[tuple[int, ...]]:
    """All clean prefixes of the given length in lexicographic order,
    restricted to first-appearance color order (new colors introduced
    in increasing sequence).  Every valid canonical coloring extends
    exactly one of these."""
    out: list[tuple[int, ...]] = []
    colors: list[int] = []

    def rec(maxused: int) -> None:
        if len(colors) == length:
            out.append(tuple(colors))
            return
        cmax = min(maxused + 1, r - 1)
        for c in range(cmax + 1):
            colors.append(c)
            if last_position_check(colors, k):
                rec(max(maxused, c))
            colors.pop()

    rec(-1)
    return out


class _Budget:
    """Shared wall-clock deadline and node pool, thread safe."""

    def __init__(self, budget: SearchBudget, start: float):
        self.deadline = (
            start + budget.max_seconds if budget.max_seconds is not None else None
        )
        self._pool = budget.max_nodes
        self._lock = threading.Lock()

    def out_of_time(self) -> bool:
        return self.deadline is not None and time.perf_counter() >= self.deadline

    def draw(self, want: int) -> int:
        """Reserve up to want nodes; 0 means the pool is dry."""
        if self._pool is None:
            return want
        with self._lock:
            take = min(want, self._pool)
            self._pool -= take
            return take

    def refund(self, unused: int) -> None:
        if self._pool is None or unused <= 0:
            return
        with self._lock:
            self._pool += unused


def _next_chunk(prev: int, dt: float) -> int:
    if dt <= 0:
        return _CHUNK_MAX
    rate = prev / dt
    return max(_CHUNK_MIN, min(_CHUNK_MAX, int(rate * _CHUNK_SECONDS)))


def _run_single(run: TargetRun, budget: _Budget, should_abort=None):
    """Drive one TargetRun in chunks until a verdict or the budget dies.

    Returns ST_FOUND, ST_EXHAUSTED, or None for an undecided stop.
    """
    chunk = 4096
    while True:
        if budget.out_of_time():
            return None
        if should_abort is not None and should_abort():
            return None
        quota = budget.draw(chunk)
        if quota <= 0:
            return None
        before = run.nodes
        t0 = time.perf_counter()
        status = run.step(quota)
        dt = time.perf_counter() - t0
        budget.refund(quota - (run.nodes - before))
        if status == ST_FOUND or status == ST_EXHAUSTED:
            return status
        chunk = _next_chunk(quota, dt)


def _search_target_canonical(r, k, T, budget: _Budget, engine: str):
    run = TargetRun(r, k, T, engine=engine)
    status = _run_single(run, budget)
    colors = run.coloring() if status == ST_FOUND else None
    return status, colors, run.nodes, run.max_depth


def _search_target_parallel(r, k, T, budget: _Budget, engine: str, workers: int):
    # carve the tree into subtrees below canonical prefixes; each worker
    # owns one subtree, and a hit on an earlier prefix aborts later ones
    prefix_len = 0
    prefixes: list[tuple[int, ...]] = [()]
    for length in range(2, min(12, T - 1) + 1):
        candidate = _canonical_prefixes(r, k, length)
        if not candidate:
            # no clean prefix at all: nothing of length T can be valid
            return ST_EXHAUSTED, None, 0, 0
        prefixes, prefix_len = candidate, length
        if len(candidate) >= 4 * workers:
            break
    if len(prefixes) <= 1 or workers <= 1:
        return _search_target_canonical(r, k, T, budget, engine)

    lock = threading.Lock()
    best_found = [len(prefixes)]  # smallest prefix index that found a coloring
    results: list = [None] * len(prefixes)

    def task(idx: int, prefix: tuple[int, ...]):
        run = TargetRun(r, k, T, prefix=prefix, engine=engine)

        def moot() -> bool:
            with lock:
                return best_found[0] < idx

        status = _run_single(run, budget, should_abort=moot)
        if status == ST_FOUND:
            with lock:
                if idx < best_found[0]:
                    best_found[0] = idx
        results[idx] = (status, run)
        return status

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(task, range(len(prefixes)), prefixes))

    nodes = sum(run.nodes for _, run in results)
    max_depth = max(run.max_depth for _, run in results)
    max_depth = max(max_depth, prefix_len)
    if best_found[0] < len(prefixes):
        winner = results[best_found[0]][1]
        return ST_FOUND, winner.coloring(), nodes, max_depth
    if all(status == ST_EXHAUSTED for status, _ in results):
        return ST_EXHAUSTED, None, nodes, max_depth
    return None, None, nodes, max_depth


def compute_vdw(
    r: int,
    k: int,
    budget: SearchBudget | None = None,
    *,
    mode: str = "canonical",
    workers: int | None = None,
    max_length: int | None = None,
    registry=None,
    engine: str | None = None,
) -> SearchOutcome:
    """Determine W(r, k) by exhaustive search, or bound it under a budget.

    Climbs target lengths starting from the trivially valid all-zero
    coloring of length k-1.  Finding a valid coloring of length T moves
    the frontier up; exhausting length T proves W(r, k) = T.  mode
    "parallel" splits each target across worker threads by canonical
    prefix; it reaches the same status and value as "canonical"
    whenever the budget is not the binding constraint.  max_length
    stops the climb above that length and reports a lower bound.  When
    a registry is supplied, an exact result is recorded in it.
    """
    if r < 2:
        raise ValueError(f"need at least 2 colors, got r={r}")
    if k < 3:
        raise ValueError(f"progression length k must be at least 3, got k={k}")
    if mode not in ("canonical", "parallel"):
        raise ValueError(f"unknown mode {mode!r}")
    if max_length is not None and max_length < k:
        raise ValueError(f"max_length {max_length} below the shortest target {k}")
    if engine is None:
        engine = "jit" if HAVE_JIT else "python"
    if workers is None:
        workers = os.cpu_count() or 1

    budget = budget or SearchBudget()
    start = time.perf_counter()
    tracker = _Budget(budget, start)

    frontier = k - 1
    frontier_colors: list[int] = [0] * (k - 1)
    total_nodes = 0
    max_depth = k - 1
    status = None
    value = None

    while True:
        if max_length is not None and frontier >= max_length:
            status, value = STATUS_LOWER_BOUND, frontier + 1
            break
        T = frontier + 1
        if mode == "parallel":
            verdict, colors, nodes, depth = _search_target_parallel(
                r, k, T, tracker, engine, workers
            )
        else:
            verdict, colors, nodes, depth = _search_target_canonical(
                r, k, T, tracker, engine
            )
        total_nodes += nodes
        max_depth = max(max_depth, depth)
        if verdict == ST_FOUND:
            frontier = T
            frontier_colors = colors
            continue
        if verdict == ST_EXHAUSTED:
            status, value = STATUS_EXACT, T
            break
        status, value = STATUS_BUDGET, frontier + 1
        break

    elapsed = time.perf_counter() - start
    cert = Certificate(r, k, frontier, Coloring(r, tuple(frontier_colors)))
    outcome = SearchOutcome(
        r=r,
        k=k,
        status=status,
        value=value,
        certificate=cert,
        stats=SearchStats(nodes=total_nodes, elapsed=elapsed, max_depth=max_depth),
    )
    if registry is not None and status == STATUS_EXACT:
        registry.upsert_search_result(
            VdwRecord(r=r, k=k, value=value, provenance=(SEARCH_DERIVED,))
        )
    return outcome


def warmup() -> None:
    """Trigger kernel compilation on a tiny instance so timed runs
    measure search, not compilation."""
    compute_vdw(2, 3)
