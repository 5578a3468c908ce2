"""Dessins d'enfants as transitive permutation pairs.

A dessin on n edges is a pair (sigma0, sigma1) of permutations of the
edges whose joint action is transitive: cycles of sigma0 are the rotations
at black vertices, cycles of sigma1 the rotations at white vertices, and
faces are the cycles of the face permutation (sigma0*sigma1)^-1 under the
global "apply first" composition convention.
"""

from dataclasses import dataclass

from . import kernels, perm
from .groups import group_from_perm_gens


class NotConnected(ValueError):
    """The pair does not act transitively on the edges."""


class InternalParity(ValueError):
    """Euler expression came out odd: the pair is corrupted."""


class NotAutomorphisms(ValueError):
    """A claimed deck permutation does not commute with the rotations."""


class NotSubgroupClosed(ValueError):
    """A claimed deck set is not closed under composition."""


class Dessin:
    """Immutable transitive pair; edges are 0..n-1."""

    __slots__ = ("n", "sigma0", "sigma1")

    def __init__(self, sigma0, sigma1, check=True):
        sigma0 = tuple(sigma0)
        sigma1 = tuple(sigma1)
        self.n = len(sigma0)
        self.sigma0 = sigma0
        self.sigma1 = sigma1
        if check:
            perm.check_perm(sigma0)
            perm.check_perm(sigma1)
            if len(sigma1) != self.n:
                raise perm.DegreeMismatch(
                    "degree %d vs %d" % (len(sigma0), len(sigma1))
                )
            if not kernels.pair_is_transitive(sigma0, sigma1):
                raise NotConnected("the pair does not act transitively")

    def __eq__(self, other):
        return (
            isinstance(other, Dessin)
            and self.sigma0 == other.sigma0
            and self.sigma1 == other.sigma1
        )

    def __hash__(self):
        return hash((self.sigma0, self.sigma1))

    def __repr__(self):
        return "Dessin(n=%d, sigma0=%r, sigma1=%r)" % (
            self.n,
            self.sigma0,
            self.sigma1,
        )


@dataclass(frozen=True)
class Passport:
    """Degree multisets (descending) of black vertices, white vertices, faces."""

    black_degrees: tuple
    white_degrees: tuple
    face_degrees: tuple


def face_perm(d):
    """Face permutation (sigma0*sigma1)^-1; composing all three gives identity."""
    return perm.inverse(perm.compose(d.sigma0, d.sigma1))


def genus(d):
    """Genus from the Euler characteristic of the cell decomposition."""
    c = (
        perm.num_cycles(d.sigma0)
        + perm.num_cycles(d.sigma1)
        + perm.num_cycles(face_perm(d))
    )
    euler = c - d.n
    if (2 - euler) % 2:
        raise InternalParity("odd Euler expression for n=%d" % d.n)
    g = (2 - euler) // 2
    if g < 0:
        raise InternalParity("negative genus %d" % g)
    return g


def passport(d):
    return Passport(
        perm.cycle_type(d.sigma0),
        perm.cycle_type(d.sigma1),
        perm.cycle_type(face_perm(d)),
    )


def is_uniform(d):
    p = passport(d)
    return (
        len(set(p.black_degrees)) == 1
        and len(set(p.white_degrees)) == 1
        and len(set(p.face_degrees)) == 1
    )


def automorphisms(d):
    """All edge permutations commuting with both rotations.

    This is the centralizer of {sigma0, sigma1} in Sym(edges), computed by
    propagating each candidate image of edge 0 along the Schreier graph.
    The result is a group containing the identity (listed first) in which
    only the identity has a fixed point.
    """
    return kernels.centralizer_pair(d.sigma0, d.sigma1)


def is_regular(d):
    return len(automorphisms(d)) == d.n


def aut_group(d):
    """Automorphism group in multiplication-table form."""
    group, _ = group_from_perm_gens(automorphisms(d), label="Aut")
    return group


def quotient_by_deck(d, deck):
    """Quotient dessin by a group of automorphisms acting on the edges.

    ``deck`` must consist of automorphisms of ``d`` and be closed under
    composition; the quotient's edges are the deck orbits, ordered by
    their minimal edge.
    """
    deck = [tuple(a) for a in deck]
    for a in deck:
        if len(a) != d.n:
            raise perm.DegreeMismatch("deck degree %d vs %d" % (len(a), d.n))
        if (
            perm.compose(a, d.sigma0) != perm.compose(d.sigma0, a)
            or perm.compose(a, d.sigma1) != perm.compose(d.sigma1, a)
        ):
            raise NotAutomorphisms("deck element does not commute with rotations")
    known = set(deck)
    for a in deck:
        for b in deck:
            if perm.compose(a, b) not in known:
                raise NotSubgroupClosed("deck set is not closed under composition")
    orbits = perm.joint_orbits(deck) if deck else [[e] for e in range(d.n)]
    orbit_of = [0] * d.n
    for idx, orbit in enumerate(orbits):
        for e in orbit:
            orbit_of[e] = idx
    m = len(orbits)
    q0 = [0] * m
    q1 = [0] * m
    for idx, orbit in enumerate(orbits):
        e = orbit[0]
        q0[idx] = orbit_of[d.sigma0[e]]
        q1[idx] = orbit_of[d.sigma1[e]]
    return Dessin(q0, q1)


def canonical_form(d):
    """Canonical relabelled pair; equal forms characterize isomorphism."""
    return kernels.canonical_pair(d.sigma0, d.sigma1)


def are_isomorphic(d1, d2):
    """True iff one edge relabelling conjugates both rotations simultaneously."""
    if d1.n != d2.n:
        return False
    return canonical_form(d1) == canonical_form(d2)
