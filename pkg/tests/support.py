"""Independent oracles and shared hypothesis strategies for the test suite.

Everything here is deliberately written with different algorithms and
different data representations than the package itself, so agreement between
the two is evidence and not tautology: homomorphisms are counted by filtering
raw tuples of dict-based permutations, Smith normal form is recomputed from
determinantal divisors (gcds of k-by-k minors), and slope enumeration is
checked against a plain window scan whose completeness follows from Cramer's
rule.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from hypothesis import strategies as st

from prismvol import Slope, SeifertSymbol, delta
from prismvol import seifert as seifert_mod


# --- permutations as dicts, composed pointwise ---------------------------

def _dict_perms(degree: int) -> list[dict[int, int]]:
    return [
        {i: image[i] for i in range(degree)}
        for image in itertools.permutations(range(degree))
    ]


def _invert_dict(p: dict[int, int]) -> dict[int, int]:
    return {v: k for k, v in p.items()}


def _word_fixes_everything(word, assignment, degree: int) -> bool:
    for start in range(degree):
        x = start
        for letter in word:
            perm = assignment[abs(letter) - 1]
            x = perm[x] if letter > 0 else _invert_dict(perm)[x]
        if x != start:
            return False
    return True


def _orbit_of_zero(assignment, degree: int) -> set[int]:
    orbit = {0}
    changed = True
    while changed:
        changed = False
        for perm in assignment:
            for x in list(orbit):
                for y in (perm[x], _invert_dict(perm)[x]):
                    if y not in orbit:
                        orbit.add(y)
                        changed = True
    return orbit


def brute_hom_count(
    generators: int, relators, degree: int, transitive: bool = False
) -> int:
    """Representation count by unpruned scan over all permutation tuples."""
    count = 0
    for assignment in itertools.product(_dict_perms(degree), repeat=generators):
        if not all(
            _word_fixes_everything(word, assignment, degree) for word in relators
        ):
            continue
        if transitive and len(_orbit_of_zero(assignment, degree)) != degree:
            continue
        count += 1
    return count


# --- Smith normal form via determinantal divisors ------------------------

def det_int(rows: list[list[int]]) -> int:
    """Integer determinant by Laplace expansion (fine for the sizes tested)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        total += (-1) ** j * rows[0][j] * det_int(minor)
    return total


def snf_diagonal_oracle(rows: list[list[int]]) -> list[int]:
    """Invariant factors from gcds of k-by-k minors: s_k = d_k / d_{k-1}."""
    height, width = len(rows), len(rows[0])
    k_max = min(height, width)
    out = []
    previous = 1
    for k in range(1, k_max + 1):
        minors_gcd = 0
        for row_idx in itertools.combinations(range(height), k):
            for col_idx in itertools.combinations(range(width), k):
                sub = [[rows[i][j] for j in col_idx] for i in row_idx]
                minors_gcd = math.gcd(minors_gcd, abs(det_int(sub)))
        if minors_gcd == 0:
            out.extend([0] * (k_max - k + 1))
            break
        out.append(minors_gcd // previous)
        previous = minors_gcd
    return out


# --- complete slope window scan ------------------------------------------

def cramer_window(f: Slope, c: Slope, k1: int, k2: int) -> int:
    """Coordinate bound for every solution slope, from solving the two
    intersection forms for (p, q) by Cramer's rule (the forms' determinant is
    a nonzero integer, so dividing by it only shrinks)."""
    return k1 * (abs(c.p) + abs(c.q)) + k2 * (abs(f.p) + abs(f.q)) + 1


def window_scan(f: Slope, c: Slope, k1: int, k2: int, window: int) -> list[Slope]:
    found = []
    for q in range(window + 1):
        p_values = [1] if q == 0 else range(-window, window + 1)
        for p in p_values:
            if math.gcd(abs(p), q) != 1:
                continue
            alpha = Slope(p, q)
            if delta(f, alpha) == k1 and delta(c, alpha) <= k2:
                found.append(alpha)
    return sorted(found, key=lambda a: (a.p, a.q))


def enumerate_slopes_oracle(f: Slope, c: Slope, k1: int, k2: int) -> list[Slope]:
    return window_scan(f, c, k1, k2, cramer_window(f, c, k1, k2))


# --- hypothesis strategies -------------------------------------------------

def slope_pairs_st(max_entry: int = 8):
    raw = st.tuples(
        st.integers(-max_entry, max_entry), st.integers(-max_entry, max_entry)
    )
    return raw.filter(
        lambda t: t != (0, 0) and math.gcd(abs(t[0]), abs(t[1])) == 1
    ).map(lambda t: Slope(*t))


def fiber_pairs_st(max_alpha: int = 9, max_beta: int = 9):
    return st.tuples(
        st.integers(-max_beta, max_beta), st.integers(1, max_alpha)
    ).filter(lambda pair: math.gcd(pair[0], pair[1]) == 1)


def symbols_st(max_fibers: int = 4):
    def build(draw_class, genus, fibers):
        if draw_class == seifert_mod.ON:
            genus = max(genus, 1)
        return SeifertSymbol(draw_class, genus, tuple(fibers))

    return st.builds(
        build,
        st.sampled_from([seifert_mod.OO, seifert_mod.ON]),
        st.integers(0, 3),
        st.lists(fiber_pairs_st(), min_size=1, max_size=max_fibers),
    )


def oo_symbols_st(max_fibers: int = 4):
    return st.builds(
        lambda genus, fibers: SeifertSymbol(seifert_mod.OO, genus, tuple(fibers)),
        st.integers(0, 2),
        st.lists(fiber_pairs_st(), min_size=1, max_size=max_fibers),
    )


def relator_words_st(generators: int, max_len: int = 6):
    letters = st.sampled_from(
        [i for i in range(-generators, generators + 1) if i != 0]
    )
    return st.lists(letters, min_size=0, max_size=max_len).map(tuple)


def presentations_st(max_generators: int = 2, max_relators: int = 2):
    return st.integers(1, max_generators).flatmap(
        lambda g: st.builds(
            lambda relators: (g, tuple(relators)),
            st.lists(relator_words_st(g), min_size=0, max_size=max_relators),
        )
    )
