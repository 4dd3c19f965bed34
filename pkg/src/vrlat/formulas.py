"""Closed-form sphere counts for scale-2 complexes over subset families.

Each verified family of complexes here is homotopy equivalent to a wedge sum
of spheres of one dimension; these functions return the number of copies.
They are pure integer arithmetic (no complexes are built), which makes them
the oracles that the homology pipeline is checked against:

  uniform_betti2(m, n)        2-spheres for the n-uniform layer
  adjacent_pair_betti2(m, n)  2-spheres for the union of layers n and n+1
  skip_pair_betti3(m, n)      3-spheres for the union of layers n and n+2
  prefix_betti3(m, a)         3-spheres for the order prefix ending at a
  upto_betti3(m, n)           3-spheres for all subsets of size at most n
  power_betti3(m)             3-spheres for the whole power set
  cross_polytope_sphere_dim   the one sphere of the scale-(m-2) half layer

The per-vertex building blocks (prefix_increment, skip_increment) count how
many new spheres appear when a single vertex is appended to a growing
family; they are driven by the gap structure of the vertex's element list.
"""

import math
from dataclasses import dataclass
from itertools import combinations

from .setfam import Subset


def _ranged_sum(lo: int, hi: int, term) -> int:
    """Sum of term(i) for lo <= i <= hi; zero when the range is empty.

    Single home of the empty-sum convention used by every formula below.
    """
    return sum(term(i) for i in range(lo, hi + 1))


@dataclass(frozen=True)
class GapVector:
    """Gap counts between consecutive elements of a subset.

    For elements i_1 < ... < i_n, entry j >= 1 of either vector counts the
    integers skipped strictly between i_j and i_{j+1}.  The vectors differ
    only in the first entry: zero_based[0] counts the missing values below
    i_1 on a ground line that starts at 0 (so it equals i_1), while
    one_based[0] starts the line at 1 (so it equals i_1 - 1).
    """

    zero_based: tuple[int, ...]
    one_based: tuple[int, ...]

    def __post_init__(self) -> None:
        zb, ob = self.zero_based, self.one_based
        if len(zb) != len(ob) or not zb:
            raise ValueError("gap vectors must be nonempty and equally long")
        if zb[0] != ob[0] + 1 or zb[1:] != ob[1:]:
            raise ValueError("gap vectors disagree beyond the first-entry convention")


def gap_vector(a: Subset) -> GapVector:
    """Gap structure of a nonempty subset."""
    elems = a.elements
    if not elems:
        raise ValueError("gap vector of the empty set is undefined")
    zero_based = [elems[0]]
    zero_based.extend(elems[j] - elems[j - 1] - 1 for j in range(1, len(elems)))
    one_based = [elems[0] - 1] + zero_based[1:]
    return GapVector(tuple(zero_based), tuple(one_based))


def _increment(a: Subset, gaps: tuple[int, ...]) -> int:
    n = a.size
    if n < 3:
        raise ValueError("increment counts are defined for subsets of size >= 3")
    base = _ranged_sum(2, n - 2, lambda k: math.comb(k, 2))
    weighted = _ranged_sum(1, n - 2, lambda l: gaps[l - 1] * math.comb(n - l, 2))
    return base + weighted


def prefix_increment(a: Subset) -> int:
    """New 3-spheres contributed when a joins the prefix family ending at a.

    Equivalently, the number of 2-spheres in the link of a inside the
    scale-2 complex on the prefix family.  Uses the zero-based gap vector.
    """
    return _increment(a, gap_vector(a).zero_based)


def skip_increment(a: Subset) -> int:
    """Two-layer analogue of prefix_increment, using one-based gaps.

    Satisfies prefix_increment(a) == skip_increment(a) + C(|a| - 1, 2).
    """
    return _increment(a, gap_vector(a).one_based)


def layer_increment(m: int, n: int) -> int:
    """Sum of prefix_increment over every n-subset of [m].

    The number of 3-spheres added when the whole cardinality-n layer is
    appended to the family of all smaller subsets.
    """
    if n < 3:
        raise ValueError("increment counts are defined for subsets of size >= 3")
    if n > m:
        raise ValueError("empty parameter range")
    return sum(
        prefix_increment(Subset.of(c, m)) for c in combinations(range(1, m + 1), n)
    )


def power_betti3(m: int) -> int:
    """3-spheres in the scale-2 complex on the whole power set of [m].

    Closed form; equals the sum of layer_increment(m, k) for k = 3..m,
    which the tests verify.
    """
    if m < 3:
        raise ValueError("power-set count defined for m >= 3")
    return _ranged_sum(
        1,
        m - 1,
        lambda i: _ranged_sum(0, i - 1, lambda j: (j + 1) * (2 ** (m - 2) - 2 ** (i - 1))),
    )


def uniform_betti2(m: int, n: int) -> int:
    """2-spheres in the scale-2 complex on all n-subsets of [m].

    Defined for 1 < n < m - 1; the remaining layers (n in {0, 1, m-1, m})
    give contractible complexes.  For n = 2 the value collapses to
    C(m - 1, 3).
    """
    if not 1 < n < m - 1:
        raise ValueError("contractible regime")
    return _ranged_sum(
        2, n, lambda k: math.comb(m + k - 1 - n, k + 1) * math.comb(k, 2)
    )


def adjacent_pair_betti2(m: int, n: int) -> int:
    """2-spheres for the union of the n- and (n+1)-layers at scale 2."""
    if not 1 < n < m - 1:
        raise ValueError("contractible regime")
    return uniform_betti2(m, n) + math.comb(m, n + 2) * math.comb(n + 1, 2)


def prefix_betti3(m: int, a: Subset) -> int:
    """3-spheres for the scale-2 complex on the prefix family ending at a.

    Sums prefix_increment over every size->=3 subset up to a in the total
    order.  Prefixes ending at a subset of size <= 2 are contractible, so
    they count zero.
    """
    if a.m != m:
        raise ValueError("ground-set mismatch")
    n = a.size
    if n < 3:
        return 0
    below = _ranged_sum(3, n - 1, lambda k: layer_increment(m, k))
    same_layer = sum(
        prefix_increment(Subset.of(c, m))
        for c in combinations(range(1, m + 1), n)
        if c <= a.elements
    )
    return below + same_layer


def upto_betti3(m: int, n: int) -> int:
    """3-spheres for the scale-2 complex on all subsets of size at most n.

    Zero for n <= 2 (the empty set is then within scale of every vertex,
    so the complex is a cone).
    """
    if not 0 <= n <= m:
        raise ValueError("empty parameter range")
    if n < 3:
        return 0
    return _ranged_sum(3, n, lambda k: layer_increment(m, k))


def skip_layer_sum(m: int, n: int) -> int:
    """Sum of skip_increment over the (n+2)-subsets of [m] avoiding 1.

    The top-block contribution in the two-layer recursion behind
    skip_pair_betti3; requires n >= 2 and n + 2 <= m.
    """
    if n < 2 or n + 2 > m:
        raise ValueError("out of range")
    return sum(
        skip_increment(Subset.of(c, m)) for c in combinations(range(2, m + 1), n + 2)
    )


def skip_pair_betti3(m: int, n: int) -> int:
    """3-spheres for the union of the n- and (n+2)-layers at scale 2.

    n = 0 gives a cone (the empty set neighbors every 2-subset), so 0.
    The recursion that proves the count needs n < m - 3; the formula also
    reproduces the right numbers on the boundary cases with n + 2 <= m,
    where complement symmetry or a cone vertex settles the homotopy type,
    and the tests pin those cases against computed homology.
    """
    if n == 0:
        return 0
    if n < 0 or n + 2 > m:
        raise ValueError("out of range")
    recursed = _ranged_sum(2, n, lambda k: skip_layer_sum(m + k - n, k))
    return recursed + math.comb(m + 1 - n, 4)


def cross_polytope_sphere_dim(m: int, n: int) -> int:
    """Dimension of the sphere realized by the half layer at scale m - 2.

    For m = 2n the n-subsets of [m] at scale m - 2 form the boundary of a
    cross-polytope: every vertex is within scale of all others except its
    complement.  The sphere dimension is C(2n, n) / 2 - 1.
    """
    if m != 2 * n:
        raise ValueError("cross-polytope case requires m = 2n")
    return math.comb(2 * n, n) // 2 - 1
