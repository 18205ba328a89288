"""Search kernels over integer bit-vectors.

Every kernel takes ``closed``: for each vertex ``x`` the bit-vector of the
vertices allowed to dominate it, ``x`` itself included.  A set ``S``
dominates iff ``S & closed[x] != 0`` for all ``x``.  This one encoding
covers both plain and strong domination.

Each kernel exists twice: a numba version working on int64 arrays and a
Python/numpy version working on Python ints.  ``config.USE_NUMBA`` picks the
default; tests run both and compare.
"""

import numpy as np

from . import config

if config.HAVE_NUMBA:
    from numba import njit
else:  # pragma: no cover

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


# -- pure Python / numpy ---------------------------------------------------------


def dominates_py(mask, closed):
    for c in closed:
        if not mask & c:
            return False
    return True


def dominating_table_np(closed):
    """Boolean array over all 2**n masks: does the mask dominate?"""
    n = len(closed)
    masks = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for c in closed:
        ok &= (masks & np.int64(c)) != 0
    return ok


def _leaf_valid_py(blocks, closed):
    k = len(blocks)
    dom = [dominates_py(b, closed) for b in blocks]
    for i in range(k):
        if dom[i]:
            # a dominating block of size >= 2 never reaches a leaf
            continue
        for j in range(k):
            if j != i and not dom[j] and dominates_py(blocks[i] | blocks[j], closed):
                break
        else:
            return False
    return True


def coalition_search_py(closed, k, prefix=()):
    """Find the first restricted-growth partition into exactly ``k`` blocks
    that is a coalition partition under ``closed``.

    Returns ``(found, assignment, nodes)``; ``assignment[v]`` is the block of
    vertex ``v``.  ``prefix`` fixes the blocks of the first vertices.
    """
    n = len(closed)
    blocks = [0] * k
    sizes = [0] * k
    assign = [-1] * n
    used = 0
    for v, b in enumerate(prefix):
        blocks[b] |= 1 << v
        sizes[b] += 1
        assign[v] = b
        used = max(used, b + 1)
    nodes = 0

    def rec(i, used):
        nonlocal nodes
        if i == n:
            return used == k and _leaf_valid_py(blocks, closed)
        bit = 1 << i
        for b in range(min(used, k - 1) + 1):
            nused = used + 1 if b == used else used
            if n - i - 1 < k - nused:
                continue
            nodes += 1
            blocks[b] |= bit
            sizes[b] += 1
            if not (sizes[b] >= 2 and dominates_py(blocks[b], closed)):
                assign[i] = b
                if rec(i + 1, nused):
                    return True
            blocks[b] ^= bit
            sizes[b] -= 1
        assign[i] = -1
        return False

    found = rec(len(prefix), used)
    return found, (assign if found else None), nodes


def domatic_search_py(closed, k, prefix=()):
    """First restricted-growth partition into exactly ``k`` dominating blocks."""
    n = len(closed)
    blocks = [0] * k
    assign = [-1] * n
    used = 0
    for v, b in enumerate(prefix):
        blocks[b] |= 1 << v
        assign[v] = b
        used = max(used, b + 1)
    nodes = 0
    full = (1 << n) - 1

    def feasible(i):
        # every block still has to meet every closed[x]; each miss needs its
        # own unplaced vertex from closed[x]
        rest = full & ~((1 << (i + 1)) - 1)
        for c in closed:
            missing = 0
            for b in blocks:
                if not b & c:
                    missing += 1
            if missing > (c & rest).bit_count():
                return False
        return True

    def rec(i, used):
        nonlocal nodes
        if i == n:
            return used == k
        bit = 1 << i
        for b in range(min(used, k - 1) + 1):
            nused = used + 1 if b == used else used
            if n - i - 1 < k - nused:
                continue
            nodes += 1
            blocks[b] |= bit
            if feasible(i):
                assign[i] = b
                if rec(i + 1, nused):
                    return True
            blocks[b] ^= bit
        assign[i] = -1
        return False

    found = rec(len(prefix), used)
    return found, (assign if found else None), nodes


# -- numba -----------------------------------------------------------------------


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def dominates_nb(mask, closed):
    for c in closed:
        if mask & c == 0:
            return False
    return True


@njit(cache=True)
def dominating_table_nb(closed):
    n = closed.shape[0]
    out = np.empty(1 << n, dtype=np.bool_)
    for mask in range(1 << n):
        out[mask] = dominates_nb(np.int64(mask), closed)
    return out


@njit(cache=True)
def _leaf_valid_nb(blocks, k, closed, dom):
    for i in range(k):
        dom[i] = dominates_nb(blocks[i], closed)
    for i in range(k):
        if dom[i]:
            continue
        ok = False
        for j in range(k):
            if j != i and not dom[j] and dominates_nb(blocks[i] | blocks[j], closed):
                ok = True
                break
        if not ok:
            return False
    return True


@njit(cache=True)
def coalition_search_nb(closed, k, prefix):
    n = closed.shape[0]
    blocks = np.zeros(k, dtype=np.int64)
    sizes = np.zeros(k, dtype=np.int64)
    assign = np.full(n, -1, dtype=np.int64)
    dom = np.zeros(k, dtype=np.bool_)
    # used_at[i]: blocks opened before vertex i; choice[i]: next block to try
    used_at = np.zeros(n + 1, dtype=np.int64)
    choice = np.zeros(n + 1, dtype=np.int64)
    plen = prefix.shape[0]
    used = 0
    one = np.int64(1)
    for v in range(plen):
        b = prefix[v]
        blocks[b] |= one << v
        sizes[b] += 1
        assign[v] = b
        if b + 1 > used:
            used = b + 1
    nodes = 0
    if plen == n:
        found = used == k and _leaf_valid_nb(blocks, k, closed, dom)
        return found, assign, nodes
    i = plen
    used_at[i] = used
    choice[i] = 0
    while True:
        u = used_at[i]
        b = choice[i]
        limit = u if u < k - 1 else k - 1
        if b > limit:
            i -= 1
            if i < plen:
                break
            pb = assign[i]
            blocks[pb] ^= one << i
            sizes[pb] -= 1
            assign[i] = -1
            continue
        choice[i] = b + 1
        nused = u + 1 if b == u else u
        if n - i - 1 < k - nused:
            continue
        nodes += 1
        blocks[b] |= one << i
        sizes[b] += 1
        if sizes[b] >= 2 and dominates_nb(blocks[b], closed):
            blocks[b] ^= one << i
            sizes[b] -= 1
            continue
        assign[i] = b
        if i == n - 1:
            if nused == k and _leaf_valid_nb(blocks, k, closed, dom):
                return True, assign, nodes
            blocks[b] ^= one << i
            sizes[b] -= 1
            assign[i] = -1
            continue
        i += 1
        used_at[i] = nused
        choice[i] = 0
    return False, assign, nodes


@njit(cache=True)
def _domatic_feasible_nb(blocks, k, closed, rest):
    for c in closed:
        missing = 0
        for b in range(k):
            if blocks[b] & c == 0:
                missing += 1
        if missing > _popcount(c & rest):
            return False
    return True


@njit(cache=True)
def domatic_search_nb(closed, k, prefix):
    n = closed.shape[0]
    blocks = np.zeros(k, dtype=np.int64)
    assign = np.full(n, -1, dtype=np.int64)
    used_at = np.zeros(n + 1, dtype=np.int64)
    choice = np.zeros(n + 1, dtype=np.int64)
    plen = prefix.shape[0]
    used = 0
    one = np.int64(1)
    full = (one << n) - 1
    for v in range(plen):
        b = prefix[v]
        blocks[b] |= one << v
        assign[v] = b
        if b + 1 > used:
            used = b + 1
    nodes = 0
    if plen == n:
        return used == k and _domatic_feasible_nb(blocks, k, closed, np.int64(0)), assign, nodes
    i = plen
    used_at[i] = used
    choice[i] = 0
    while True:
        u = used_at[i]
        b = choice[i]
        limit = u if u < k - 1 else k - 1
        if b > limit:
            i -= 1
            if i < plen:
                break
            blocks[assign[i]] ^= one << i
            assign[i] = -1
            continue
        choice[i] = b + 1
        nused = u + 1 if b == u else u
        if n - i - 1 < k - nused:
            continue
        nodes += 1
        blocks[b] |= one << i
        rest = full & ~((one << (i + 1)) - 1)
        if not _domatic_feasible_nb(blocks, k, closed, rest):
            blocks[b] ^= one << i
            continue
        assign[i] = b
        if i == n - 1:
            if nused == k:
                return True, assign, nodes
            blocks[b] ^= one << i
            assign[i] = -1
            continue
        i += 1
        used_at[i] = nused
        choice[i] = 0
    return False, assign, nodes


# -- dispatch --------------------------------------------------------------------


def _pick(backend, n):
    if backend is None:
        backend = "numba" if config.USE_NUMBA else "python"
    if backend not in ("numba", "python"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "numba" and (not config.HAVE_NUMBA or n > config.NUMBA_MAX_ORDER):
        backend = "python"
    return backend


def _run(search_py, search_nb, closed, k, prefix, backend):
    if _pick(backend, len(closed)) == "numba":
        found, assign, nodes = search_nb(
            np.asarray(closed, dtype=np.int64), int(k), np.asarray(prefix, dtype=np.int64)
        )
        return bool(found), (assign.tolist() if found else None), int(nodes)
    return search_py(list(closed), k, tuple(prefix))


def coalition_search(closed, k, prefix=(), backend=None):
    return _run(coalition_search_py, coalition_search_nb, closed, k, prefix, backend)


def domatic_search(closed, k, prefix=(), backend=None):
    return _run(domatic_search_py, domatic_search_nb, closed, k, prefix, backend)


def dominating_table(closed, backend=None):
    if _pick(backend, len(closed)) == "numba":
        return dominating_table_nb(np.asarray(closed, dtype=np.int64))
    return dominating_table_np(list(closed))


def dominates(mask, closed):
    return dominates_py(mask, closed)
