"""Depth-first search kernel for fixed-length coloring targets.

One kernel run answers a single question: does a valid r-coloring of
1..T exist, and if so, which one comes first in lexicographic order?
The kernel is resumable; it pauses after a caller-chosen number of
decisions so the orchestration layer can enforce wall-clock and node
budgets between chunks without the kernel ever reading a clock.

Propagation bookkeeping, maintained incrementally per assignment:
  cnt[a, c]      members of progression a currently colored c
  blkcnt[p, c]   progressions through free position p with k-1 members
                 colored c (assigning c at p would complete them)
  nblocked[p]    colors with blkcnt[p, c] > 0
A position with r-1 blocked colors is forced to the remaining one; a
position with r blocked colors kills the branch.  Decisions always go
to the lowest unassigned position and try colors in ascending order,
restricted to at most one color beyond the largest used so far (a
coloring that introduces colors out of order relabels to a strictly
smaller equivalent one, so the first coloring found is still the
lexicographically first valid coloring overall).  Forced assignments
never violate that restriction: blocked colors are always used colors,
so when r-1 colors are blocked the largest used color is at least r-2.

Every mutation lands on a trail; undo walks the trail backwards.  On a
conflict the propagation queue still drains its member-count updates so
the trail and the counters never disagree.

The same function body serves as the portable fallback and, decorated,
as the jitted kernel, so the two engines cannot drift apart.
"""
from __future__ import annotations

import numpy as np

# kernel status codes
ST_RUNNING = 0
ST_FOUND = 1
ST_EXHAUSTED = 2
ST_PAUSED = 3

# slots of the persistent state vector
S_PHASE = 0
S_DEPTH = 1
S_TRAILTOP = 2
S_MAXUSED = 3
S_NODES = 4
S_NASSIGNED = 5
S_MAXDEPTH = 6
S_STATUS = 7
STATE_SLOTS = 8


def build_ap_arrays(T: int, k: int):
    """All k-term progressions inside positions [0, T), plus a CSR index
    from each position to the progressions through it."""
    chunks = []
    for d in range(1, (T - 1) // (k - 1) + 1):
        starts = np.arange(0, T - (k - 1) * d, dtype=np.int32)
        chunks.append(starts[:, None] + np.arange(k, dtype=np.int32)[None, :] * d)
    if chunks:
        members = np.vstack(chunks)
    else:
        members = np.empty((0, k), dtype=np.int32)
    n_aps = members.shape[0]
    flat = members.ravel()
    order = np.argsort(flat, kind="stable")
    pos_ap_list = (order // k).astype(np.int32)
    counts = np.bincount(flat, minlength=T) if n_aps else np.zeros(T, dtype=np.int64)
    pos_ap_ptr = np.concatenate(([0], np.cumsum(counts))).astype(np.int32)
    return n_aps, flat.copy(), pos_ap_ptr, pos_ap_list


def _kernel_impl(
    r,
    k,
    T,
    prefix,
    ap_members,
    pos_ap_ptr,
    pos_ap_list,
    cnt,
    blkcnt,
    nblocked,
    col,
    trail_kind,
    trail_pos,
    trail_col,
    dec_pos,
    dec_color,
    dec_mark,
    dec_maxused,
    qpos,
    qcol,
    state,
    node_quota,
):
    status = int(state[S_STATUS])
    if status == ST_FOUND or status == ST_EXHAUSTED:
        return status
    depth = int(state[S_DEPTH])
    trail_top = int(state[S_TRAILTOP])
    maxused = int(state[S_MAXUSED])
    nassigned = int(state[S_NASSIGNED])
    maxdepth = int(state[S_MAXDEPTH])
    plen = prefix.shape[0]
    nodes = 0

    if state[S_PHASE] == 0:
        # fresh search: open the root frame at position 0
        state[S_PHASE] = 1
        depth = 0
        dec_pos[0] = 0
        dec_color[0] = -1
        dec_mark[0] = 0
        dec_maxused[0] = -1
        maxused = -1

    status = ST_RUNNING
    while True:
        if nodes >= node_quota:
            status = ST_PAUSED
            break

        # rewind this frame to its base state before (re)trying a color
        mark = dec_mark[depth]
        while trail_top > mark:
            trail_top -= 1
            x = trail_pos[trail_top]
            cx = trail_col[trail_top]
            if trail_kind[trail_top] == 0:
                col[x] = -1
                nassigned -= 1
                for ii in range(pos_ap_ptr[x], pos_ap_ptr[x + 1]):
                    cnt[pos_ap_list[ii], cx] -= 1
            else:
                b = blkcnt[x, cx] - 1
                blkcnt[x, cx] = b
                if b == 0:
                    nblocked[x] -= 1
        maxused = dec_maxused[depth]
        p = dec_pos[depth]

        # next candidate color at p: ascending, skipping blocked colors,
        # capped one past the largest color used so far
        cmax = maxused + 1
        if cmax > r - 1:
            cmax = r - 1
        if p < plen:
            # inside a forced prefix there is exactly one candidate
            c = prefix[p]
            if dec_color[depth] >= c or c > cmax or blkcnt[p, c] > 0:
                c = -1
        else:
            c = dec_color[depth] + 1
            while c <= cmax and blkcnt[p, c] > 0:
                c += 1
            if c > cmax:
                c = -1

        if c < 0:
            depth -= 1
            if depth < 0:
                status = ST_EXHAUSTED
                break
            continue

        dec_color[depth] = c
        nodes += 1

        # assign p := c and propagate forced moves to a fixpoint
        conflict = False
        col[p] = c
        trail_kind[trail_top] = 0
        trail_pos[trail_top] = p
        trail_col[trail_top] = c
        trail_top += 1
        nassigned += 1
        if nassigned > maxdepth:
            maxdepth = nassigned
        if c > maxused:
            maxused = c
        qpos[0] = p
        qcol[0] = c
        q_head = 0
        q_tail = 1
        while q_head < q_tail:
            x = qpos[q_head]
            cx = qcol[q_head]
            q_head += 1
            # drain even after a conflict so cnt stays in step with the
            # trail; only the blocking side effects are skipped
            for ii in range(pos_ap_ptr[x], pos_ap_ptr[x + 1]):
                a = pos_ap_list[ii]
                cc = cnt[a, cx] + 1
                cnt[a, cx] = cc
                if cc == k:
                    conflict = True
                elif cc == k - 1 and not conflict:
                    base = a * k
                    for j in range(k):
                        m = ap_members[base + j]
                        if col[m] < 0:
                            b = blkcnt[m, cx] + 1
                            blkcnt[m, cx] = b
                            trail_kind[trail_top] = 1
                            trail_pos[trail_top] = m
                            trail_col[trail_top] = cx
                            trail_top += 1
                            if b == 1:
                                nb = nblocked[m] + 1
                                nblocked[m] = nb
                                if nb == r:
                                    conflict = True
                                elif nb == r - 1:
                                    f = 0
                                    while blkcnt[m, f] > 0:
                                        f += 1
                                    col[m] = f
                                    trail_kind[trail_top] = 0
                                    trail_pos[trail_top] = m
                                    trail_col[trail_top] = f
                                    trail_top += 1
                                    nassigned += 1
                                    if nassigned > maxdepth:
                                        maxdepth = nassigned
                                    if f > maxused:
                                        maxused = f
                                    qpos[q_tail] = m
                                    qcol[q_tail] = f
                                    q_tail += 1
        if conflict:
            continue

        # a forced move may have strayed off a mandated prefix
        ok = True
        for q in range(plen):
            if col[q] >= 0 and col[q] != prefix[q]:
                ok = False
                break
        if not ok:
            continue

        # descend to the lowest unassigned position
        q = p + 1
        while q < T and col[q] >= 0:
            q += 1
        if q >= T:
            status = ST_FOUND
            break
        depth += 1
        dec_pos[depth] = q
        dec_color[depth] = -1
        dec_mark[depth] = trail_top
        dec_maxused[depth] = maxused

    state[S_DEPTH] = depth
    state[S_TRAILTOP] = trail_top
    state[S_MAXUSED] = maxused
    state[S_NASSIGNED] = nassigned
    state[S_MAXDEPTH] = maxdepth
    state[S_NODES] += nodes
    state[S_STATUS] = status
    return status


_kernel_py = _kernel_impl

try:
    from numba import njit as _njit

    _kernel_jit = _njit(cache=True, nogil=True)(_kernel_impl)
    HAVE_JIT = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _kernel_jit = None
    HAVE_JIT = False


class TargetRun:
    """Search state for one fixed target length T, run in resumable chunks."""

    def __init__(self, r: int, k: int, T: int, prefix=(), engine: str = "jit"):
        if engine == "jit" and not HAVE_JIT:
            engine = "python"
        self.engine = engine
        self._kernel = _kernel_jit if engine == "jit" else _kernel_py
        self.r, self.k, self.T = r, k, T
        n_aps, ap_members, pos_ap_ptr, pos_ap_list = build_ap_arrays(T, k)
        self._args = (
            np.asarray(prefix, dtype=np.int32),
            ap_members,
            pos_ap_ptr,
            pos_ap_list,
            np.zeros((max(n_aps, 1), r), dtype=np.int32),
            np.zeros((T, r), dtype=np.int32),
            np.zeros(T, dtype=np.int32),
            np.full(T, -1, dtype=np.int32),
            np.zeros(T + (k - 1) * n_aps + 8, dtype=np.int32),  # trail kind
            np.zeros(T + (k - 1) * n_aps + 8, dtype=np.int32),  # trail pos
            np.zeros(T + (k - 1) * n_aps + 8, dtype=np.int32),  # trail col
            np.zeros(T + 2, dtype=np.int32),
            np.zeros(T + 2, dtype=np.int32),
            np.zeros(T + 2, dtype=np.int32),
            np.zeros(T + 2, dtype=np.int32),
            np.zeros(T + 1, dtype=np.int32),
            np.zeros(T + 1, dtype=np.int32),
            np.zeros(STATE_SLOTS, dtype=np.int64),
        )
        self.state = self._args[-1]

    def step(self, node_quota: int) -> int:
        """Run until FOUND, EXHAUSTED, or node_quota more decisions."""
        return int(
            self._kernel(self.r, self.k, self.T, *self._args, np.int64(node_quota))
        )

    @property
    def nodes(self) -> int:
        return int(self.state[S_NODES])

    @property
    def max_depth(self) -> int:
        return int(self.state[S_MAXDEPTH])

    def coloring(self) -> list[int]:
        col = self._args[7]
        return [int(c) for c in col]
