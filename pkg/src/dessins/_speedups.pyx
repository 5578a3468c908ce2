# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled permutation kernels.

Same functions and semantics as `dessins._kernels_py`; see that module for
the documented reference behaviour.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free

BACKEND = "cython"


cdef int *_to_c(object p, int n) except NULL:
    cdef int *buf = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = p[i]
    return buf


def compose(p, q):
    cdef int n = len(p)
    cdef int *cp = _to_c(p, n)
    cdef int *cq = _to_c(q, n)
    cdef list out = [0] * n
    cdef int i
    try:
        for i in range(n):
            out[i] = cq[cp[i]]
    finally:
        PyMem_Free(cp)
        PyMem_Free(cq)
    return tuple(out)


def inverse(p):
    cdef int n = len(p)
    cdef int *cp = _to_c(p, n)
    cdef list out = [0] * n
    cdef int i
    try:
        for i in range(n):
            out[cp[i]] = i
    finally:
        PyMem_Free(cp)
    return tuple(out)


def pair_is_transitive(s0, s1):
    cdef int n = len(s0)
    if n == 0:
        return False
    cdef int *c0 = _to_c(s0, n)
    cdef int *c1 = _to_c(s1, n)
    cdef int *stack = <int *> PyMem_Malloc(n * sizeof(int))
    cdef char *seen = <char *> PyMem_Malloc(n)
    cdef int top = 0, count = 1, e, t, k
    try:
        if stack == NULL or seen == NULL:
            raise MemoryError()
        for e in range(n):
            seen[e] = 0
        seen[0] = 1
        stack[top] = 0
        top = 1
        while top > 0:
            top -= 1
            e = stack[top]
            for k in range(2):
                t = c0[e] if k == 0 else c1[e]
                if not seen[t]:
                    seen[t] = 1
                    count += 1
                    stack[top] = t
                    top += 1
        return count == n
    finally:
        PyMem_Free(c0)
        PyMem_Free(c1)
        PyMem_Free(stack)
        PyMem_Free(seen)


def centralizer_pair(s0, s1):
    cdef int n = len(s0)
    cdef int *moves = <int *> PyMem_Malloc(4 * n * sizeof(int))
    cdef int *order = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *parent = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *move = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *img = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int i, e, t, m, cand, head, count, ok
    cdef list found = []
    if moves == NULL or order == NULL or parent == NULL or move == NULL or img == NULL:
        PyMem_Free(moves); PyMem_Free(order); PyMem_Free(parent)
        PyMem_Free(move); PyMem_Free(img)
        raise MemoryError()
    try:
        # moves rows: s0, s0^-1, s1, s1^-1
        for i in range(n):
            moves[0 * n + i] = s0[i]
            moves[2 * n + i] = s1[i]
        for i in range(n):
            moves[1 * n + moves[0 * n + i]] = i
            moves[3 * n + moves[2 * n + i]] = i
        for i in range(n):
            parent[i] = -1
            move[i] = -1
        order[0] = 0
        parent[0] = 0
        count = 1
        head = 0
        while head < count:
            e = order[head]
            head += 1
            for m in range(4):
                t = moves[m * n + e]
                if parent[t] < 0:
                    parent[t] = e
                    move[t] = m
                    order[count] = t
                    count += 1
        if count != n:
            raise ValueError("pair is not transitive")
        for cand in range(n):
            img[0] = cand
            for i in range(1, n):
                e = order[i]
                img[e] = moves[move[e] * n + img[parent[e]]]
            ok = 1
            for e in range(n):
                if img[moves[0 * n + e]] != moves[0 * n + img[e]]:
                    ok = 0
                    break
                if img[moves[2 * n + e]] != moves[2 * n + img[e]]:
                    ok = 0
                    break
            if ok:
                found.append(tuple([img[i] for i in range(n)]))
        return found
    finally:
        PyMem_Free(moves)
        PyMem_Free(order)
        PyMem_Free(parent)
        PyMem_Free(move)
        PyMem_Free(img)


def canonical_pair(s0, s1):
    cdef int n = len(s0)
    cdef int *moves = <int *> PyMem_Malloc(4 * n * sizeof(int))
    cdef int *relabel = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *order = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *c0 = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *c1 = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *b0 = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int *b1 = <int *> PyMem_Malloc(n * sizeof(int))
    cdef int i, e, t, m, root, head, count, cmp, have_best
    if (moves == NULL or relabel == NULL or order == NULL or c0 == NULL
            or c1 == NULL or b0 == NULL or b1 == NULL):
        PyMem_Free(moves); PyMem_Free(relabel); PyMem_Free(order)
        PyMem_Free(c0); PyMem_Free(c1); PyMem_Free(b0); PyMem_Free(b1)
        raise MemoryError()
    try:
        for i in range(n):
            moves[0 * n + i] = s0[i]
            moves[2 * n + i] = s1[i]
        for i in range(n):
            moves[1 * n + moves[0 * n + i]] = i
            moves[3 * n + moves[2 * n + i]] = i
        have_best = 0
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
                for m in range(4):
                    t = moves[m * n + e]
                    if relabel[t] < 0:
                        relabel[t] = count
                        order[count] = t
                        count += 1
            if count != n:
                raise ValueError("pair is not transitive")
            for e in range(n):
                c0[relabel[e]] = relabel[moves[0 * n + e]]
                c1[relabel[e]] = relabel[moves[2 * n + e]]
            if not have_best:
                cmp = -1
            else:
                cmp = 0
                for i in range(n):
                    if c0[i] != b0[i]:
                        cmp = -1 if c0[i] < b0[i] else 1
                        break
                if cmp == 0:
                    for i in range(n):
                        if c1[i] != b1[i]:
                            cmp = -1 if c1[i] < b1[i] else 1
                            break
            if cmp < 0:
                for i in range(n):
                    b0[i] = c0[i]
                    b1[i] = c1[i]
                have_best = 1
        return (tuple([b0[i] for i in range(n)]),
                tuple([b1[i] for i in range(n)]))
    finally:
        PyMem_Free(moves)
        PyMem_Free(relabel)
        PyMem_Free(order)
        PyMem_Free(c0)
        PyMem_Free(c1)
        PyMem_Free(b0)
        PyMem_Free(b1)
