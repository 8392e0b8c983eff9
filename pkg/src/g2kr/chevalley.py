"""A concrete Chevalley basis for G2 and the graded module on V(omega2)+C.

Basis order: x+_gamma for the six positive roots in height order, then
x-_gamma in the same order, then the simple coroots h1, h2 (14 elements,
integer structure constants throughout).

Sign convention.  The constants are extracted from the 7-dimensional
fundamental representation, built on an admissible lattice so that all
matrix entries are integers.  Root vectors above the simple ones are fixed
by the bracket chains

    x_{a1+a2}   = [x_{a1}, x_{a2}],
    x_{2a1+a2}  = [x_{a1}, x_{a1+a2}] / 2,
    x_{3a1+a2}  = [x_{a1}, x_{2a1+a2}] / 3,
    x_{3a1+2a2} = [x_{a2}, x_{3a1+a2}],

i.e. the constant on each chain pair is +(p+1) where p is the length of
the descending root string; the negative root vectors are normalised so
that [x+_gamma, x-_gamma] is exactly the coroot of gamma.  All checked
statements are independent of this convention.

The module K = V(omega2) + C carries the graded current-algebra action

    (x (x) t^r)(y, a) = (delta_{r,0} [x, y], delta_{r,1} <x, y>)

with <,> the Killing form, V(omega2) realised as the adjoint copy of the
algebra itself and C the grade-one piece.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .weights import (
    OMEGA2,
    POSITIVE_ROOTS,
    ZERO,
    Weight,
    coroot_coefficients,
    pairing,
)

DIM = 14
ZERO14 = (0,) * DIM

X_PLUS = tuple(range(6))
X_MINUS = tuple(range(6, 12))
H1, H2 = 12, 13

#: Index of the highest root 3*alpha1 + 2*alpha2 within the positive roots.
HIGHEST = 5

_POS_WEIGHTS = tuple(r.weight for r in POSITIVE_ROOTS)
_ROOT_INDEX = {w: i for i, w in enumerate(_POS_WEIGHTS)}

BASIS_WEIGHTS: tuple[Weight, ...] = (
    _POS_WEIGHTS + tuple(-w for w in _POS_WEIGHTS) + (ZERO, ZERO)
)


def _root_label(w: Weight) -> str:
    from .weights import to_root_coords

    p, q = to_root_coords(w)
    return f"[{p},{q}]"


BASIS_NAMES = tuple(
    [f"x+{_root_label(w)}" for w in _POS_WEIGHTS]
    + [f"x-{_root_label(w)}" for w in _POS_WEIGHTS]
    + ["h1", "h2"]
)


# --- 7x7 integer matrix helpers (representation space) ---------------------

def _unit(i, j):
    m = [[0] * 7 for _ in range(7)]
    m[i][j] = 1
    return m


def _add(*mats):
    out = [[0] * 7 for _ in range(7)]
    for m in mats:
        for i in range(7):
            for j in range(7):
                out[i][j] += m[i][j]
    return out


def _scale(m, c):
    return [[c * x for x in row] for row in m]


def _matmul(a, b):
    out = [[0] * 7 for _ in range(7)]
    for i in range(7):
        arow = a[i]
        orow = out[i]
        for k in range(7):
            c = arow[k]
            if c:
                brow = b[k]
                for j in range(7):
                    if brow[j]:
                        orow[j] += c * brow[j]
    return out


def _comm(a, b):
    ab = _matmul(a, b)
    ba = _matmul(b, a)
    return [[ab[i][j] - ba[i][j] for j in range(7)] for i in range(7)]


def _exact_div(m, d):
    out = []
    for row in m:
        new = []
        for x in row:
            q, r = divmod(x, d)
            assert r == 0, "chevalley construction: non-exact division"
            new.append(q)
        out.append(new)
    return out


def _is_zero(m):
    return all(x == 0 for row in m for x in row)


def _ratio(m, base):
    """The integer c with m == c * base; asserts exact proportionality."""
    for i in range(7):
        for j in range(7):
            if base[i][j]:
                q, r = divmod(m[i][j], base[i][j])
                assert r == 0, "chevalley construction: non-integer constant"
                assert all(
                    m[a][b] == q * base[a][b] for a in range(7) for b in range(7)
                ), "chevalley construction: bracket not proportional to root vector"
                return q
    raise AssertionError("chevalley construction: zero root vector")


def _build_representation():
    """The 14 basis elements as 7x7 integer matrices.

    The representation space has weight basis v0..v6 with weights
    omega1, omega1-a1, omega1-a1-a2, 0, -omega1+a1+a2, -omega1+a1, -omega1;
    the simple generators act along the alpha-strings with the usual
    divided-power integer entries.
    """
    e1 = _add(_unit(0, 1), _scale(_unit(2, 3), 2), _unit(3, 4), _unit(5, 6))
    f1 = _add(_unit(1, 0), _unit(3, 2), _scale(_unit(4, 3), 2), _unit(6, 5))
    e2 = _add(_unit(1, 2), _unit(4, 5))
    f2 = _add(_unit(2, 1), _unit(5, 4))

    h1 = _comm(e1, f1)
    h2 = _comm(e2, f2)

    pos = [e1, e2]
    pos.append(_comm(e1, e2))
    pos.append(_exact_div(_comm(e1, pos[2]), 2))
    pos.append(_exact_div(_comm(e1, pos[3]), 3))
    pos.append(_comm(e2, pos[4]))

    raw = [f1, f2]
    raw.append(_comm(f1, f2))
    raw.append(_comm(f1, raw[2]))
    raw.append(_comm(f1, raw[3]))
    raw.append(_comm(f2, raw[4]))

    neg = [f1, f2]
    for idx in range(2, 6):
        c1, c2 = coroot_coefficients(_POS_WEIGHTS[idx])
        coroot = _add(_scale(h1, c1), _scale(h2, c2))
        c = _ratio(_comm(pos[idx], raw[idx]), coroot)
        neg.append(_exact_div(raw[idx], c))

    return pos + neg + [h1, h2], h1, h2


def _extract_table(matrices, h1, h2):
    """Express every basis bracket over the basis; all entries integer."""
    table = []
    for i in range(DIM):
        row = []
        for j in range(DIM):
            b = _comm(matrices[i], matrices[j])
            vec = [0] * DIM
            if not _is_zero(b):
                delta = BASIS_WEIGHTS[i] + BASIS_WEIGHTS[j]
                if delta == ZERO:
                    # Cartan subalgebra: both h1 and h2 act diagonally with
                    # entries 1, 0 on v0 and -1, 1 on v1, so this 2x2 solve
                    # is exact.
                    c1 = b[0][0]
                    c2 = b[1][1] + c1
                    target = _add(_scale(h1, c1), _scale(h2, c2))
                    assert b == target, "chevalley: bad Cartan bracket"
                    vec[H1], vec[H2] = c1, c2
                else:
                    sign = 1 if delta in _ROOT_INDEX else -1
                    root = delta if sign == 1 else -delta
                    assert root in _ROOT_INDEX, "chevalley: bracket off lattice"
                    k = _ROOT_INDEX[root] + (0 if sign == 1 else 6)
                    vec[k] = _ratio(b, matrices[k])
            row.append(tuple(vec))
        table.append(tuple(row))
    return tuple(table)


class BracketTable:
    """Structure constants and Killing form on the 14-element basis."""

    __slots__ = ("brackets", "killing", "weights", "names")

    def __init__(self, brackets, killing):
        self.brackets = brackets
        self.killing = killing
        self.weights = BASIS_WEIGHTS
        self.names = BASIS_NAMES

    def basis_vector(self, i: int) -> tuple[int, ...]:
        return tuple(1 if k == i else 0 for k in range(DIM))

    def bracket_basis(self, i: int, j: int) -> tuple[int, ...]:
        return self.brackets[i][j]

    def bracket(self, x, y) -> tuple[int, ...]:
        acc = [0] * DIM
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.brackets[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, v in enumerate(row[j]):
                    if v:
                        acc[k] += c * v
        return tuple(acc)

    def killing_form(self, x, y) -> int:
        total = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            krow = self.killing[i]
            for j, yj in enumerate(y):
                if yj:
                    total += xi * yj * krow[j]
        return total


@lru_cache(maxsize=None)
def build_bracket_table() -> BracketTable:
    """Build (once) the verified structure-constant table."""
    matrices, h1, h2 = _build_representation()
    table = _extract_table(matrices, h1, h2)
    # ad matrices act on the algebra itself; column j of ad(i) is [b_i, b_j].
    ad = [
        [[table[i][j][k] for j in range(DIM)] for k in range(DIM)]
        for i in range(DIM)
    ]
    killing = tuple(
        tuple(
            sum(ad[i][k][l] * ad[j][l][k] for k in range(DIM) for l in range(DIM))
            for j in range(DIM)
        )
        for i in range(DIM)
    )
    return BracketTable(table, killing)


def basis_vector(i: int) -> tuple[int, ...]:
    return build_bracket_table().basis_vector(i)


def x_plus(root_index: int) -> tuple[int, ...]:
    """Positive root vector by position in the height-ordered root list."""
    return basis_vector(X_PLUS[root_index])


def x_minus(root_index: int) -> tuple[int, ...]:
    return basis_vector(X_MINUS[root_index])


def cartan(i: int) -> tuple[int, ...]:
    if i not in (1, 2):
        raise ValueError(f"coroot index must be 1 or 2, got {i!r}")
    return basis_vector(H1 if i == 1 else H2)


def bracket(x, y) -> tuple[int, ...]:
    """Lie bracket of two elements given by basis coefficients."""
    return build_bracket_table().bracket(x, y)


def killing_form(x, y) -> int:
    """Trace form tr(ad x . ad y); exact integer."""
    return build_bracket_table().killing_form(x, y)


# --- verification: Lie algebra axioms --------------------------------------

def verify_structure() -> list[str]:
    """Antisymmetry, Jacobi on all 14^3 triples, Cartan actions, coroots."""
    t = build_bracket_table()
    failures = []
    for i in range(DIM):
        for j in range(DIM):
            lhs = t.brackets[i][j]
            rhs = tuple(-v for v in t.brackets[j][i])
            if lhs != rhs:
                failures.append(
                    f"antisymmetry fails at ({t.names[i]}, {t.names[j]})"
                )
    # Root-space grading: a bracket lands in the root space of the weight sum.
    for i in range(DIM):
        for j in range(DIM):
            delta = BASIS_WEIGHTS[i] + BASIS_WEIGHTS[j]
            for k, v in enumerate(t.brackets[i][j]):
                if v and BASIS_WEIGHTS[k] != delta:
                    failures.append(
                        f"grading fails at ({t.names[i]}, {t.names[j]})"
                    )
    # Cartan eigenvalues.
    for hidx, hi in ((H1, 1), (H2, 2)):
        for j in range(DIM):
            expected = pairing(BASIS_WEIGHTS[j], hi)
            vec = t.brackets[hidx][j]
            ok = all(
                v == (expected if k == j else 0) for k, v in enumerate(vec)
            )
            if not ok:
                failures.append(f"[h{hi}, {t.names[j]}] has wrong eigenvalue")
    # [x+_gamma, x-_gamma] must be exactly the coroot.
    for idx, root in enumerate(_POS_WEIGHTS):
        c1, c2 = coroot_coefficients(root)
        vec = t.brackets[X_PLUS[idx]][X_MINUS[idx]]
        want = tuple(
            c1 if k == H1 else c2 if k == H2 else 0 for k in range(DIM)
        )
        if vec != want:
            failures.append(f"[x+{_root_label(root)}, x-{_root_label(root)}]"
                            " is not the coroot")
    # Jacobi identity on every ordered triple.
    zero = ZERO14
    for i in range(DIM):
        bi = t.basis_vector(i)
        for j in range(DIM):
            bj = t.basis_vector(j)
            bij = t.brackets[i][j]
            for k in range(DIM):
                bk = t.basis_vector(k)
                total = tuple(
                    x + y + z
                    for x, y, z in zip(
                        t.bracket(bij, bk),
                        t.bracket(t.brackets[j][k], bi),
                        t.bracket(t.brackets[k][i], bj),
                    )
                )
                if total != zero:
                    failures.append(
                        "Jacobi fails at "
                        f"({t.names[i]}, {t.names[j]}, {t.names[k]})"
                    )
    return failures


def verify_killing() -> list[str]:
    """Symmetry, invariance, weight orthogonality, root-length uniformity."""
    t = build_bracket_table()
    failures = []
    for i in range(DIM):
        for j in range(DIM):
            if t.killing[i][j] != t.killing[j][i]:
                failures.append(
                    f"killing symmetry fails at ({t.names[i]}, {t.names[j]})"
                )
            if t.killing[i][j] and BASIS_WEIGHTS[i] + BASIS_WEIGHTS[j] != ZERO:
                failures.append(
                    f"<{t.names[i]}, {t.names[j]}> nonzero across weight spaces"
                )
    # <[x,y],z> + <y,[x,z]> = 0 on all basis triples.
    for i in range(DIM):
        for j in range(DIM):
            bij = t.brackets[i][j]
            for k in range(DIM):
                lhs = t.killing_form(bij, t.basis_vector(k))
                rhs = t.killing_form(t.basis_vector(j), t.brackets[i][k])
                if lhs + rhs != 0:
                    failures.append(
                        "killing invariance fails at "
                        f"({t.names[i]}, {t.names[j]}, {t.names[k]})"
                    )
    shorts = {
        t.killing[X_PLUS[i]][X_MINUS[i]]
        for i, r in enumerate(POSITIVE_ROOTS)
        if not r.long
    }
    longs = {
        t.killing[X_PLUS[i]][X_MINUS[i]]
        for i, r in enumerate(POSITIVE_ROOTS)
        if r.long
    }
    if len(shorts) != 1 or 0 in shorts:
        failures.append("<x+, x-> not a single nonzero value on short roots")
    if len(longs) != 1 or 0 in longs:
        failures.append("<x+, x-> not a single nonzero value on long roots")
    if _rank(list(map(list, t.killing))) != DIM:
        failures.append("killing form is degenerate")
    return failures


def adjoint_weights() -> list[Weight]:
    """Weights of the basis under ad(h1), ad(h2); asserts eigenvectors."""
    t = build_bracket_table()
    out = []
    for j in range(DIM):
        coeffs = []
        for hidx in (H1, H2):
            vec = t.brackets[hidx][j]
            assert all(v == 0 for k, v in enumerate(vec) if k != j)
            coeffs.append(vec[j])
        out.append(Weight(coeffs[0], coeffs[1]))
    return out


# --- exact rank / span utilities -------------------------------------------

def _rank(rows) -> int:
    pivots: dict[int, list[Fraction]] = {}
    for row in rows:
        _reduce_into(row, pivots)
    return len(pivots)


def _reduce_into(vec, pivots) -> bool:
    """Reduce vec against the echelon rows; add it if independent."""
    v = [Fraction(c) for c in vec]
    for p, row in pivots.items():
        if v[p]:
            f = v[p]
            v = [a - f * b for a, b in zip(v, row)]
    for i, c in enumerate(v):
        if c:
            pivots[i] = [a / c for a in v]
            return True
    return False


# --- the graded module K = V(omega2) + C -----------------------------------

KElement = tuple[tuple[int, ...], int]

K_ZERO: KElement = (ZERO14, 0)


def kr1_highest_vector() -> KElement:
    """The cyclic vector: the highest-root vector inside the adjoint copy."""
    return (basis_vector(X_PLUS[HIGHEST]), 0)


def kr1_action(x, power: int, v: KElement) -> KElement:
    """(x (x) t^power) applied to (y, a); zero for power >= 2."""
    y, _ = v
    if power == 0:
        return (bracket(x, y), 0)
    if power == 1:
        return (ZERO14, killing_form(x, y))
    return K_ZERO


def _k_scale(c: int, v: KElement) -> KElement:
    y, a = v
    return (tuple(c * t for t in y), c * a)


def _k_sub(u: KElement, v: KElement) -> KElement:
    return (tuple(a - b for a, b in zip(u[0], v[0])), u[1] - v[1])


def verify_kr1_relations() -> list[str]:
    """Check the defining relations of the m=1, node-2 module on K.

    Covers: annihilation by the positive part at all powers, the Cartan
    eigenvalue relations, the simple-root lowering relations, the grade-one
    generator being nonzero yet annihilated by the positive part, the
    current-algebra module axiom at all checked depths, and cyclicity of
    the adjoint copy under the degree-zero action.
    """
    t = build_bracket_table()
    failures = []
    v = kr1_highest_vector()

    for idx in range(6):
        x = t.basis_vector(X_PLUS[idx])
        for power in range(4):
            if kr1_action(x, power, v) != K_ZERO:
                failures.append(
                    f"(x+{_root_label(_POS_WEIGHTS[idx])} (x) t^{power}) "
                    "does not annihilate the highest vector"
                )

    for hi in (1, 2):
        h = cartan(hi)
        for power in range(4):
            got = kr1_action(h, power, v)
            want = _k_scale(pairing(OMEGA2, hi), v) if power == 0 else K_ZERO
            if got != want:
                failures.append(
                    f"(h{hi} (x) t^{power}) acts with the wrong eigenvalue"
                )

    if kr1_action(t.basis_vector(X_MINUS[0]), 0, v) != K_ZERO:
        failures.append("x-_{a1} does not annihilate the highest vector")

    w1 = kr1_action(t.basis_vector(X_MINUS[1]), 0, v)
    if kr1_action(t.basis_vector(X_MINUS[1]), 0, w1) != K_ZERO:
        failures.append("(x-_{a2})^2 does not annihilate the highest vector")

    if kr1_action(t.basis_vector(X_MINUS[1]), 1, v) != K_ZERO:
        failures.append("(x-_{a2} (x) t) does not annihilate the highest vector")

    top = kr1_action(t.basis_vector(X_MINUS[HIGHEST]), 1, v)
    if top == K_ZERO:
        failures.append("(x-_{theta} (x) t) kills the highest vector")
    for idx in range(6):
        if kr1_action(t.basis_vector(X_PLUS[idx]), 0, top) != K_ZERO:
            failures.append(
                "the grade-one generator is not a highest-weight vector"
            )

    # Module axiom: [x (x) t^p, y (x) t^q] = [x,y] (x) t^{p+q} as operators,
    # on all 15 basis vectors of K and all depths p+q <= 2.
    basis_k = [(t.basis_vector(i), 0) for i in range(DIM)] + [(ZERO14, 1)]
    for i in range(DIM):
        bi = t.basis_vector(i)
        for j in range(DIM):
            bj = t.basis_vector(j)
            z = t.brackets[i][j]
            for p in range(3):
                for q in range(3 - p):
                    for w in basis_k:
                        direct = kr1_action(z, p + q, w)
                        nested = _k_sub(
                            kr1_action(bi, p, kr1_action(bj, q, w)),
                            kr1_action(bj, q, kr1_action(bi, p, w)),
                        )
                        if direct != nested:
                            failures.append(
                                "module axiom fails at "
                                f"({t.names[i]} (x) t^{p}, "
                                f"{t.names[j]} (x) t^{q})"
                            )

    # The degree-zero action generates the whole adjoint copy from v.
    pivots: dict[int, list[Fraction]] = {}
    frontier = [v[0]]
    _reduce_into(v[0], pivots)
    while frontier and len(pivots) < DIM:
        fresh = []
        for y in frontier:
            for i in range(DIM):
                z = t.bracket(t.basis_vector(i), y)
                if any(z) and _reduce_into(z, pivots):
                    fresh.append(z)
        frontier = fresh
    if len(pivots) != DIM:
        failures.append(
            f"degree-zero span of the highest vector has dimension "
            f"{len(pivots)}, expected {DIM}"
        )

    return failures


def verify_all() -> dict[str, list[str]]:
    """All chevalley-side verifications, keyed by check name."""
    from .characters import irreducible_character

    checks = {
        "structure": verify_structure(),
        "killing": verify_killing(),
        "kr-relations": verify_kr1_relations(),
    }
    adjoint = {}
    for w in adjoint_weights():
        adjoint[w] = adjoint.get(w, 0) + 1
    expected = dict(irreducible_character(OMEGA2).items())
    checks["adjoint-weights"] = (
        []
        if adjoint == expected
        else [f"adjoint weights {adjoint} differ from ch V(omega2)"]
    )
    return checks
