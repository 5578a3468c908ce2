"""Pure-Python permutation kernels.

Reference implementations of the inner loops that dominate runtime
(edge-permutation composition, centralizers of a transitive pair, rooted
canonical labellings).  `dessins.kernels` swaps these for the compiled
versions in `dessins._speedups` when that extension is available; both
modules expose the same functions with identical semantics.
"""

BACKEND = "python"


def compose(p, q):
    """Composition r with r[x] = q[p[x]] ("apply p first")."""
    return tuple(q[x] for x in p)


def inverse(p):
    n = len(p)
    inv = [0] * n
    for i in range(n):
        inv[p[i]] = i
    return tuple(inv)


def pair_is_transitive(s0, s1):
    """True iff the group generated by the two permutations has one orbit."""
    n = len(s0)
    if n == 0:
        return False
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        e = stack.pop()
        for t in (s0[e], s1[e]):
            if not seen[t]:
                seen[t] = 1
                count += 1
                stack.append(t)
    return count == n


def _bfs_schreier(s0, s1):
    """BFS from point 0 over the moves (s0, s0^-1, s1, s1^-1), in that order.

    Returns (order, parent, move) where order[k] is the k-th point reached
    and point e != 0 was first reached from parent[e] by move[e].
    """
    n = len(s0)
    i0 = inverse(s0)
    i1 = inverse(s1)
    moves = (s0, i0, s1, i1)
    parent = [-1] * n
    move = [-1] * n
    order = [0]
    seen = bytearray(n)
    seen[0] = 1
    head = 0
    while head < len(order):
        e = order[head]
        head += 1
        for m, g in enumerate(moves):
            t = g[e]
            if not seen[t]:
                seen[t] = 1
                parent[t] = e
                move[t] = m
                order.append(t)
    return order, parent, move

def centralizer_pair(s0, s1):
    """All permutations commuting with both s0 and s1 (a transitive pair).

    Candidate images of point 0 are tried in increasing order; each forces
    the whole map along the Schreier graph, and the map is kept iff it
    commutes with both generators everywhere.  For a transitive pair the
    result is the full automorphism group of the pair, identity first, and
    every member is determined by its value at 0.
    """
    n = len(s0)
    order, parent, move = _bfs_schreier(s0, s1)
    if len(order) != n:
        raise ValueError("pair is not transitive")
    i0 = inverse(s0)
    i1 = inverse(s1)
    moves = (s0, i0, s1, i1)
    found = []
    img = [0] * n
    for cand in range(n):
        img[0] = cand
        ok = True
        for e in order[1:]:
            img[e] = moves[move[e]][img[parent[e]]]
        for e in range(n):
            if img[s0[e]] != s0[img[e]] or img[s1[e]] != s1[img[e]]:
                ok = False
                break
        if ok:
            found.append(tuple(img))
    return found


def canonical_pair(s0, s1):
    """Lexicographically least BFS relabelling of the pair over all roots.

    The BFS alphabet is fixed as (s0, s0^-1, s1, s1^-1); two transitive
    pairs are simultaneously conjugate iff their canonical pairs are equal.
    """
    n = len(s0)
    i0 = inverse(s0)
    i1 = inverse(s1)
    moves = (s0, i0, s1, i1)
    best0 = None
    best1 = None
    relabel = [0] * n
    order = [0] * n
    for root in range(n):
        for i in range(n):
            relabel[i] = -1
        relabel[root] = 0
        order[0] = root
        count = 1
        head = 0
        while head < count:
            e = order[head]
            head += 1
            for g in moves:
                t = g[e]
                if relabel[t] < 0:
                    relabel[t] = count
                    order[count] = t
                    count += 1
        if count != n:
            raise ValueError("pair is not transitive")
        c0 = [0] * n
        c1 = [0] * n
        for e in range(n):
            c0[relabel[e]] = relabel[s0[e]]
            c1[relabel[e]] = relabel[s1[e]]
        if best0 is None or (c0, c1) < (best0, best1):
            best0 = list(c0)
            best1 = list(c1)
    return tuple(best0), tuple(best1)
