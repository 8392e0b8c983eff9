"""Exact arithmetic on the G2 weight lattice.

Weights are stored in fundamental-weight coordinates: (a, b) means
a*omega1 + b*omega2.  The simple root alpha1 is short and alpha2 is long,
so in these coordinates

    alpha1 = (2, -1),   alpha2 = (-3, 2),
    omega1 = 2*alpha1 + alpha2,   omega2 = 3*alpha1 + 2*alpha2,

and the change of basis between weight and root coordinates is a
determinant-one integer matrix (for G2 the weight lattice equals the root
lattice).  omega2 is the highest root, i.e. V(omega2) is the adjoint
module; some sources misprint omega2 = 2*alpha1 + 3*alpha2, which is
inconsistent with 3*alpha1 + 2*alpha2 being the highest long root.

The invariant bilinear form is normalised so that short roots have squared
length 2; its Gram matrix in fundamental-weight coordinates is
[[2, 3], [3, 6]].  With this normalisation every quantity in the package
(Freudenthal numerators, Weyl-dimension factors) is an exact integer.
"""

from __future__ import annotations

from typing import NamedTuple


class Weight(NamedTuple):
    """Lattice point a*omega1 + b*omega2."""

    a: int
    b: int

    def __add__(self, other):
        return Weight(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return Weight(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return Weight(-self.a, -self.b)

    # Tuple repetition semantics would be a silent bug here, so integer
    # multiples are scalar multiples.
    def __mul__(self, k):
        return Weight(k * self.a, k * self.b)

    __rmul__ = __mul__


ZERO = Weight(0, 0)
OMEGA1 = Weight(1, 0)
OMEGA2 = Weight(0, 1)
RHO = Weight(1, 1)

ALPHA1 = Weight(2, -1)
ALPHA2 = Weight(-3, 2)


class PositiveRoot(NamedTuple):
    weight: Weight
    long: bool


#: The six positive roots in height order: alpha1, alpha2, alpha1+alpha2,
#: 2alpha1+alpha2, 3alpha1+alpha2, 3alpha1+2alpha2.
POSITIVE_ROOTS = (
    PositiveRoot(ALPHA1, False),
    PositiveRoot(ALPHA2, True),
    PositiveRoot(ALPHA1 + ALPHA2, False),
    PositiveRoot(2 * ALPHA1 + ALPHA2, False),
    PositiveRoot(3 * ALPHA1 + ALPHA2, True),
    PositiveRoot(3 * ALPHA1 + 2 * ALPHA2, True),
)

SHORT_ROOTS = tuple(r.weight for r in POSITIVE_ROOTS if not r.long)
LONG_ROOTS = tuple(r.weight for r in POSITIVE_ROOTS if r.long)
ALL_ROOTS = tuple(r.weight for r in POSITIVE_ROOTS) + tuple(
    -r.weight for r in POSITIVE_ROOTS
)
HIGHEST_ROOT = POSITIVE_ROOTS[-1].weight


def to_root_coords(w: Weight) -> tuple[int, int]:
    """Coordinates (p, q) with w = p*alpha1 + q*alpha2."""
    return (2 * w.a + 3 * w.b, w.a + 2 * w.b)


def from_root_coords(p: int, q: int) -> Weight:
    """Inverse of :func:`to_root_coords`."""
    return Weight(2 * p - 3 * q, 2 * q - p)


def height(w: Weight) -> int:
    """Sum of the root coordinates (the usual height for w in Q+)."""
    p, q = to_root_coords(w)
    return p + q


def in_root_cone(w: Weight) -> bool:
    """True iff w is a nonnegative integer combination of simple roots."""
    p, q = to_root_coords(w)
    return p >= 0 and q >= 0


def is_dominant(w: Weight) -> bool:
    return w.a >= 0 and w.b >= 0


def inner(v: Weight, w: Weight) -> int:
    """Weyl-invariant form with (alpha1, alpha1) = 2."""
    return 2 * v.a * w.a + 3 * (v.a * w.b + v.b * w.a) + 6 * v.b * w.b


def simple_reflection(i: int, w: Weight) -> Weight:
    """Reflection in the hyperplane orthogonal to alpha_i, i in {1, 2}."""
    if i == 1:
        return Weight(-w.a, w.a + w.b)
    if i == 2:
        return Weight(w.a + 3 * w.b, -w.b)
    raise ValueError(f"simple reflection index must be 1 or 2, got {i!r}")


def weyl_orbit(w: Weight) -> frozenset[Weight]:
    """Orbit of w under the (order 12, dihedral) Weyl group."""
    w = Weight(*w)
    orbit = {w}
    frontier = [w]
    while frontier:
        fresh = []
        for v in frontier:
            for i in (1, 2):
                u = simple_reflection(i, v)
                if u not in orbit:
                    orbit.add(u)
                    fresh.append(u)
        frontier = fresh
    return frozenset(orbit)


def dominant_representative(w: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of w."""
    # At most 6 reflections are needed (the length of the longest element).
    while not (w.a >= 0 and w.b >= 0):
        w = simple_reflection(1 if w.a < 0 else 2, w)
    return w


def coroot_coefficients(root: Weight) -> tuple[int, int]:
    """Write the coroot of a root as c1*h1 + c2*h2 (integer c1, c2)."""
    p, q = to_root_coords(root)
    norm = inner(root, root)
    c1, r1 = divmod(2 * p, norm)
    c2, r2 = divmod(6 * q, norm)
    if r1 or r2:
        raise ValueError(f"{root} is not a root of G2")
    return c1, c2


def pairing(w: Weight, i: int) -> int:
    """Evaluation w(h_i) against the simple coroots, i in {1, 2}."""
    if i == 1:
        return w.a
    if i == 2:
        return w.b
    raise ValueError(f"coroot index must be 1 or 2, got {i!r}")
