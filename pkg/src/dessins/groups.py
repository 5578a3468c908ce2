"""Finite groups given by multiplication tables.

Element 0 is always the identity.  ``table[i][j]`` is the index of the
product i*j, where products follow the same "apply first" convention as
permutation composition, so permutation groups built from generators
compose consistently with `dessins.perm.compose`.
"""

import random
from itertools import permutations as _sym_permutations

from . import perm


class CapExceeded(ValueError):
    """Requested object is larger than the supported desk scale."""


class UnknownName(ValueError):
    """No builtin group of that name."""


BUILTIN_ORDER_CAP = 10_000
_EXHAUSTIVE_ASSOC_CAP = 64


class FiniteGroup:
    """Immutable finite group: order, multiplication table, inverses, label.

    The constructor checks that row and column 0 act as the identity, that
    every element has a two-sided inverse, and that the table is
    associative (exhaustively up to order 64, by seeded random sampling of
    10*m^2 triples above that).
    """

    __slots__ = ("order", "table", "inv", "label")

    def __init__(self, table, label="", check=True):
        table = tuple(tuple(row) for row in table)
        m = len(table)
        self.order = m
        self.table = table
        self.label = label
        if m < 1:
            raise ValueError("empty multiplication table")
        for row in table:
            if len(row) != m:
                raise ValueError("table is not square")
        inv = [-1] * m
        for i in range(m):
            for j in range(m):
                if table[i][j] == 0 and table[j][i] == 0:
                    inv[i] = j
                    break
        self.inv = tuple(inv)
        if check:
            self._check()

    def _check(self):
        m = self.order
        t = self.table
        for i in range(m):
            if t[0][i] != i or t[i][0] != i:
                raise ValueError("element 0 is not a two-sided identity")
            if self.inv[i] < 0:
                raise ValueError("element %d has no two-sided inverse" % i)
            seen_row = bytearray(m)
            seen_col = bytearray(m)
            for j in range(m):
                x = t[i][j]
                y = t[j][i]
                if not 0 <= x < m or not 0 <= y < m:
                    raise ValueError("table entry out of range")
                if seen_row[x] or seen_col[y]:
                    raise ValueError("row or column %d is not a bijection" % i)
                seen_row[x] = 1
                seen_col[y] = 1
        if m <= _EXHAUSTIVE_ASSOC_CAP:
            triples = (
                (a, b, c) for a in range(m) for b in range(m) for c in range(m)
            )
        else:
            rng = random.Random(0)
            triples = (
                (rng.randrange(m), rng.randrange(m), rng.randrange(m))
                for _ in range(10 * m * m)
            )
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise ValueError(
                    "table is not associative at (%d,%d,%d)" % (a, b, c)
                )

    def mul(self, i, j):
        return self.table[i][j]

    def inverse(self, i):
        return self.inv[i]

    def __repr__(self):
        return "FiniteGroup(order=%d, label=%r)" % (self.order, self.label)


def element_order(G, x):
    """Least k >= 1 with x^k = identity."""
    if not 0 <= x < G.order:
        raise ValueError("element index %d out of range" % x)
    k = 1
    y = x
    while y != 0:
        y = G.table[y][x]
        k += 1
    return k


def order_profile(G):
    """Multiset of element orders, sorted (an isomorphism invariant)."""
    return tuple(sorted(element_order(G, x) for x in range(G.order)))


def closure(G, xs):
    """Set of element indices generated by ``xs``."""
    reached = {0}
    frontier = [0]
    while frontier:
        new = []
        for a in frontier:
            for x in xs:
                b = G.table[a][x]
                if b not in reached:
                    reached.add(b)
                    new.append(b)
        frontier = new
    return reached


def is_generating(G, xs):
    for x in xs:
        if not 0 <= x < G.order:
            raise ValueError("element index %d out of range" % x)
    return len(closure(G, xs)) == G.order


def group_from_perm_gens(gens, cap=2_000_000, label=""):
    """Close a set of permutations into a group with multiplication table.

    Returns (group, gen_indices) where gen_indices[k] is the element index
    of gens[k].  Element 0 is the identity.  Raises CapExceeded when the
    closure grows past ``cap`` elements.
    """
    if not gens:
        raise ValueError("need at least one generator")
    n = len(gens[0])
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != n:
            raise perm.DegreeMismatch("degree %d vs %d" % (len(g), n))
    ident = perm.identity(n)
    elems = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elems):
        a = elems[head]
        head += 1
        for g in gens:
            b = perm.compose(a, g)
            if b not in index:
                if len(elems) >= cap:
                    raise CapExceeded("group closure exceeds cap %d" % cap)
                index[b] = len(elems)
                elems.append(b)
    m = len(elems)
    table = [
        tuple(index[perm.compose(elems[i], elems[j])] for j in range(m))
        for i in range(m)
    ]
    group = FiniteGroup(table, label=label)
    return group, [index[g] for g in gens]


def generating_sequence(G):
    """Short generating sequence found greedily in element-index order."""
    gens = []
    reached = {0}
    for x in range(1, G.order):
        if x in reached:
            continue
        gens.append(x)
        reached = closure(G, gens)
        if len(reached) == G.order:
            break
    return gens


def _partial_map(G, H, gens_g, gens_h):
    """Homomorphism on <gens_g> determined by gens_g -> gens_h, or None.

    Every product x*g (x in the closure, g a generator) is verified, which
    forces the map to be a homomorphism on the generated subgroup; None is
    returned on any inconsistency or loss of injectivity.
    """
    phi = {0: 0}
    used = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            y = phi[x]
            for g, h in zip(gens_g, gens_h):
                xg = G.table[x][g]
                yh = H.table[y][h]
                known = phi.get(xg)
                if known is not None:
                    if known != yh:
                        return None
                else:
                    if yh in used:
                        return None
                    phi[xg] = yh
                    used.add(yh)
                    new.append(xg)
        frontier = new
    return phi


def isomorphic(G, H):
    """Isomorphism witness G -> H as a tuple of images, or None.

    Backtracking on the images of a greedy generating sequence of G,
    pruned by element-order profiles; the search order is deterministic.
    """
    if G.order != H.order:
        return None
    if order_profile(G) != order_profile(H):
        return None
    gens = generating_sequence(G)
    if not gens:  # trivial group
        return (0,)
    orders = [element_order(G, g) for g in gens]
    by_order = {}
    for x in range(H.order):
        by_order.setdefault(element_order(H, x), []).append(x)
    images = [None] * len(gens)

    def dfs(i):
        if i == len(gens):
            phi = _partial_map(G, H, gens, images)
            if phi is None or len(phi) != G.order:
                return None
            return phi
        for cand in by_order.get(orders[i], ()):
            images[i] = cand
            if _partial_map(G, H, gens[: i + 1], images[: i + 1]) is not None:
                result = dfs(i + 1)
                if result is not None:
                    return result
        images[i] = None
        return None

    phi = dfs(0)
    if phi is None:
        return None
    witness = tuple(phi[x] for x in range(G.order))
    # full table check, cheap at desk scale
    for a in range(G.order):
        for b in range(G.order):
            if witness[G.table[a][b]] != H.table[witness[a]][witness[b]]:
                return None
    return witness


def _cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _dihedral_table(order):
    # element (a, e) = rotation^a * flip^e encoded as a + n*e, n = order/2
    n = order // 2

    def enc(a, e):
        return a % n + n * e

    table = [[0] * order for _ in range(order)]
    for a in range(n):
        for e in range(2):
            for b in range(n):
                for f in range(2):
                    c = (a + b) % n if e == 0 else (a - b) % n
                    table[enc(a, e)][enc(b, f)] = enc(c, e ^ f)
    return table


def _symmetric_table(k):
    elems = sorted(_sym_permutations(range(k)))
    index = {p: i for i, p in enumerate(elems)}
    return [
        [index[perm.compose(p, q)] for q in elems] for p in elems
    ]


def _elementary_abelian_table(p, k):
    m = p**k

    def add(i, j):
        out = 0
        mult = 1
        for _ in range(k):
            out += ((i + j) % p) * mult
            i //= p
            j //= p
            mult *= p
        return out

    return [[add(i, j) for j in range(m)] for i in range(m)]


def _quaternion_table():
    # letters 0=e 1=i 2=j 3=k; index = 2*letter + sign
    letter_mul = {
        (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
        (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
        (1, 1): (1, 0), (1, 2): (0, 3), (1, 3): (1, 2),
        (2, 1): (1, 3), (2, 2): (1, 0), (2, 3): (0, 1),
        (3, 1): (0, 2), (3, 2): (1, 1), (3, 3): (1, 0),
    }
    table = [[0] * 8 for _ in range(8)]
    for l1 in range(4):
        for s1 in range(2):
            for l2 in range(4):
                for s2 in range(2):
                    sgn, letter = letter_mul[(l1, l2)]
                    table[2 * l1 + s1][2 * l2 + s2] = (
                        2 * letter + (s1 ^ s2 ^ sgn)
                    )
    return table


_PRIMES_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def builtin(name, *params):
    """Catalog groups: cyclic(n), dihedral(order), symmetric(k<=5),
    elementary_abelian(p, k), quaternion(8)."""
    if name == "cyclic":
        (n,) = params
        if n < 1:
            raise ValueError("cyclic order must be >= 1")
        if n > BUILTIN_ORDER_CAP:
            raise CapExceeded("order %d exceeds cap %d" % (n, BUILTIN_ORDER_CAP))
        return FiniteGroup(_cyclic_table(n), label="cyclic(%d)" % n)
    if name == "dihedral":
        (order,) = params
        if order < 2 or order % 2:
            raise ValueError("dihedral order must be even and >= 2")
        if order > BUILTIN_ORDER_CAP:
            raise CapExceeded("order %d exceeds cap %d" % (order, BUILTIN_ORDER_CAP))
        return FiniteGroup(_dihedral_table(order), label="dihedral(%d)" % order)
    if name == "symmetric":
        (k,) = params
        if not 1 <= k <= 5:
            raise ValueError("symmetric(k) supports 1 <= k <= 5")
        return FiniteGroup(_symmetric_table(k), label="symmetric(%d)" % k)
    if name == "elementary_abelian":
        p, k = params
        if p not in _PRIMES_SMALL:
            raise ValueError("p must be a small prime")
        if k < 1:
            raise ValueError("k must be >= 1")
        if p**k > BUILTIN_ORDER_CAP:
            raise CapExceeded(
                "order %d exceeds cap %d" % (p**k, BUILTIN_ORDER_CAP)
            )
        return FiniteGroup(
            _elementary_abelian_table(p, k),
            label="elementary_abelian(%d,%d)" % (p, k),
        )
    if name == "quaternion":
        (order,) = params
        if order != 8:
            raise ValueError("only quaternion(8) is in the catalog")
        return FiniteGroup(_quaternion_table(), label="quaternion(8)")
    raise UnknownName("unknown builtin group %r" % name)
