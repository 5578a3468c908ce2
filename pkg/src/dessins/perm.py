"""Permutations of {0..n-1} as tuples of images.

A permutation ``p`` maps point ``k`` to ``p[k]``.  The composition
convention is fixed project-wide: ``compose(p, q)`` applies ``p`` first,
then ``q``.  All face and voltage formulas elsewhere depend on it.
"""

from . import kernels


class DegreeMismatch(ValueError):
    """Operands act on different numbers of points."""


class InvalidPermutation(ValueError):
    """Image sequence is not a bijection of {0..n-1}."""


def check_perm(images):
    """Validate an image sequence, naming the first repeated image.

    Returns the images as a tuple.
    """
    images = tuple(images)
    n = len(images)
    if n < 1:
        raise InvalidPermutation("empty permutation")
    seen = bytearray(n)
    for x in images:
        if not isinstance(x, int) or x < 0 or x >= n:
            raise InvalidPermutation("image %r out of range 0..%d" % (x, n - 1))
        if seen[x]:
            raise InvalidPermutation("repeated image %d" % x)
        seen[x] = 1
    return images


def identity(n):
    return tuple(range(n))


def compose(p, q):
    """x -> q(p(x)); raises DegreeMismatch on unequal degrees."""
    if len(p) != len(q):
        raise DegreeMismatch("degree %d vs %d" % (len(p), len(q)))
    return kernels.compose(p, q)


def inverse(p):
    return kernels.inverse(p)


def from_cycles(n, cycle_list):
    """Permutation of degree n from disjoint cycles; unlisted points fixed."""
    images = list(range(n))
    for cyc in cycle_list:
        for a, b in zip(cyc, cyc[1:]):
            images[a] = b
        if cyc:
            images[cyc[-1]] = cyc[0]
    return check_perm(images)


def cycles(p):
    """Cycle decomposition, fixed points included as 1-cycles.

    Each cycle starts at its minimal point; cycles are sorted by that point.
    """
    n = len(p)
    seen = bytearray(n)
    out = []
    for i in range(n):
        if not seen[i]:
            cur = []
            j = i
            while not seen[j]:
                seen[j] = 1
                cur.append(j)
                j = p[j]
            out.append(cur)
    return out


def cycle_type(p):
    """Cycle lengths sorted descending (a passport row)."""
    return tuple(sorted((len(c) for c in cycles(p)), reverse=True))


def num_cycles(p):
    n = len(p)
    seen = bytearray(n)
    count = 0
    for i in range(n):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = 1
                j = p[j]
    return count


def joint_orbits(gens):
    """Orbits of the group generated by ``gens``, ordered by minimal element."""
    if not gens:
        raise ValueError("need at least one permutation")
    n = len(gens[0])
    for g in gens:
        if len(g) != n:
            raise DegreeMismatch("degree %d vs %d" % (len(g), n))
    seen = bytearray(n)
    orbits = []
    for i in range(n):
        if seen[i]:
            continue
        orbit = [i]
        seen[i] = 1
        head = 0
        while head < len(orbit):
            e = orbit[head]
            head += 1
            for g in gens:
                t = g[e]
                if not seen[t]:
                    seen[t] = 1
                    orbit.append(t)
        orbits.append(sorted(orbit))
    return orbits
