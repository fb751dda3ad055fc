"""Membership and enumeration for the epsilon-non-crossing partition sets.

Two routes are implemented: the polynomial pairwise-crossing
characterization (production path) and the reduce-to-empty search over
interval-block removals and allowed adjacent swaps (verification oracle).
"""

from collections import deque
from itertools import product

from .errors import DimensionMismatchError, DomainError, EnumerationLimitError
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    SetPartition,
    blocks_cross,
    kernel,
    partitions_of_set,
    refines,
)


def is_epsilon_noncrossing(p, entries, e):
    """True iff p refines the kernel of the tuple and every crossing
    between two blocks happens between independent (eps = 1) labels."""
    if p.n != len(entries):
        raise DimensionMismatchError(f"partition size {p.n} != tuple length {len(entries)}")
    e.check_tuple(entries)
    ker = kernel(entries)
    if not refines(p, ker):
        return False
    nb = len(p.blocks)
    for a in range(nb):
        la = entries[p.blocks[a][0] - 1]
        for b in range(a + 1, nb):
            lb = entries[p.blocks[b][0] - 1]
            if e.eps(la, lb) == 1:
                continue
            if blocks_cross(p, a, b):
                return False
    return True


def _interval_removals(blocks, labels):
    """Successor states obtained by deleting one block of consecutive points."""
    n = len(labels)
    for idx, b in enumerate(blocks):
        if b[-1] - b[0] != len(b) - 1:
            continue
        lo, hi = b[0], b[-1]
        width = hi - lo + 1
        new_blocks = []
        for j, other in enumerate(blocks):
            if j == idx:
                continue
            new_blocks.append(tuple(x if x < lo else x - width for x in other))
        new_labels = labels[: lo - 1] + labels[hi:]
        yield _canon(new_blocks), new_labels


def _swaps(blocks, labels, e):
    """Successor states from exchanging adjacent points k, k+1 with eps=1."""
    n = len(labels)
    for k in range(1, n):  # swap points k and k+1 (1-based)
        if e.eps(labels[k - 1], labels[k]) != 1:
            continue
        new_blocks = []
        for b in blocks:
            nb = []
            for x in b:
                if x == k:
                    nb.append(k + 1)
                elif x == k + 1:
                    nb.append(k)
                else:
                    nb.append(x)
            nb.sort()
            new_blocks.append(tuple(nb))
        new_labels = labels[: k - 1] + (labels[k], labels[k - 1]) + labels[k + 1 :]
        yield _canon(new_blocks), new_labels


def _canon(blocks):
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


# (eps key, blocks, labels) -> bool; shared across calls, sound because the
# set of states reachable from a successor is contained in the current one.
_REDUCTION_CACHE = {}


def reduction_membership(p, entries, e, _cache=_REDUCTION_CACHE):
    """Decide membership by searching for a reduction to the empty
    partition via interval-block removals and allowed adjacent swaps."""
    if p.n != len(entries):
        raise DimensionMismatchError(f"partition size {p.n} != tuple length {len(entries)}")
    e.check_tuple(entries)
    if not refines(p, kernel(entries)):
        raise DomainError("partition does not refine the kernel of the tuple")

    ekey = e.key()
    start = (p.blocks, tuple(entries))
    full_key = (ekey, *start)
    if full_key in _cache:
        return _cache[full_key]

    parent = {start: None}
    queue = deque([start])
    goal = None
    while queue:
        state = queue.popleft()
        blocks, labels = state
        if not blocks:
            goal = state
            break
        cached = _cache.get((ekey, *state))
        if cached is True:
            goal = state
            break
        if cached is False:
            continue
        for nxt in _interval_removals(blocks, labels):
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)
        for nxt in _swaps(blocks, labels, e):
            if nxt not in parent:
                parent[nxt] = state
                queue.append(nxt)

    if goal is None:
        for state in parent:
            _cache[(ekey, *state)] = False
        return False
    while goal is not None:
        _cache[(ekey, *goal)] = True
        goal = parent[goal]
    return True


def enumerate_nc_epsilon(entries, e, cap=None):
    """All partitions below the kernel of the tuple that are
    epsilon-non-crossing, in lexicographic order of canonical form."""
    limit = DEFAULT_ENUMERATION_CAP if cap is None else cap
    n = len(entries)
    if n > limit:
        raise EnumerationLimitError(f"tuple length {n} exceeds cap {limit}")
    e.check_tuple(entries)
    ker = kernel(entries)
    per_block = [partitions_of_set(b, cap=limit) for b in ker.blocks]
    out = []
    for combo in product(*per_block):
        blocks = [blk for part in combo for blk in part]
        cand = SetPartition(n, blocks)
        if is_epsilon_noncrossing(cand, entries, e):
            out.append(cand)
    out.sort(key=lambda p: p.blocks)
    return out
