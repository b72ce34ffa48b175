"""Combinatorics: permutations, ordered partitions of {1..n} into d labeled
parts, set partitions, compositions, partitions and standard tableaux.

Permutations are tuples of images (1-based one-line notation); ordered
partitions are stored as their position function ``pos``: a tuple of length n
with entries in 1..d, where pos[j-1] is the label of the part containing j.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache


# ---------------------------------------------------------------------------
# permutations


def identity_perm(n: int) -> tuple:
    return tuple(range(1, n + 1))


def perm_compose(u: tuple, v: tuple) -> tuple:
    """(u o v)(j) = u(v(j))."""
    return tuple(u[v[j] - 1] for j in range(len(v)))


def perm_inverse(w: tuple) -> tuple:
    out = [0] * len(w)
    for j, im in enumerate(w, start=1):
        out[im - 1] = j
    return tuple(out)


def transposition(n: int, i: int) -> tuple:
    """The adjacent transposition (i, i+1) in S_n, 1 <= i <= n-1."""
    if not 1 <= i <= n - 1:
        raise IndexError("transposition index %d out of range for n=%d" % (i, n))
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def perm_length(w: tuple) -> int:
    """Inversion count = Coxeter length."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reduced_word(w: tuple) -> tuple:
    """A reduced word (i_1, ..., i_k) with w = pi_{i_1} ... pi_{i_k}."""
    v = list(w)
    word = []
    while True:
        for i in range(len(v) - 1):
            if v[i] > v[i + 1]:
                v[i], v[i + 1] = v[i + 1], v[i]
                word.append(i + 1)
                break
        else:
            break
    word.reverse()
    return tuple(word)


def all_perms(n: int) -> list:
    """All of S_n in lexicographic one-line order."""
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# ordered partitions


def enumerate_ordered(d: int, n: int) -> list:
    """All pos functions {1..n} -> {1..d}, lexicographically; d^n of them."""
    if d < 1 or n < 1:
        raise ValueError("d and n must be positive")
    return [tuple(p) for p in itertools.product(range(1, d + 1), repeat=n)]


def pos_of(I: tuple, j: int) -> int:
    return I[j - 1]


def parts_of(I: tuple, d: int) -> tuple:
    """The subset tuple (I_1, ..., I_d)."""
    parts = [[] for _ in range(d)]
    for j, a in enumerate(I, start=1):
        parts[a - 1].append(j)
    return tuple(tuple(p) for p in parts)


def act_sn(pi: tuple, I: tuple) -> tuple:
    """pi(I): part a of the result is pi(I_a); pos'(pi(j)) = pos(j)."""
    out = [0] * len(I)
    for j, a in enumerate(I, start=1):
        out[pi[j - 1] - 1] = a
    return tuple(out)


def act_sd(sigma: tuple, I: tuple) -> tuple:
    """I^sigma: pos_i(I^sigma) = sigma(pos_i(I))."""
    return tuple(sigma[a - 1] for a in I)


def orbit_class(I: tuple) -> tuple:
    """Canonical set-partition label: restricted-growth relabeling of pos."""
    seen: dict = {}
    out = []
    for a in I:
        if a not in seen:
            seen[a] = len(seen) + 1
        out.append(seen[a])
    return tuple(out)


def class_blocks(I: tuple) -> tuple:
    """Blocks of the set partition, ordered by least element."""
    rgs = orbit_class(I)
    blocks: dict = {}
    for j, a in enumerate(rgs, start=1):
        blocks.setdefault(a, []).append(j)
    return tuple(tuple(blocks[a]) for a in sorted(blocks))


def sd_orbit(I: tuple, d: int) -> list:
    """Distinct images of I under the S_d relabeling action, sorted."""
    images = {act_sd(sigma, I) for sigma in all_perms(d)}
    return sorted(images)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def count_classes(d: int, n: int) -> int:
    """B_d(n): set partitions of {1..n} with at most d blocks."""
    return sum(stirling2(n, k) for k in range(1, d + 1)) if n else 1


def all_classes(d: int, n: int) -> list:
    """Canonical representatives (RGS tuples) of P_d(n)/S_d, sorted."""
    return sorted({orbit_class(I) for I in enumerate_ordered(d, n)})


# ---------------------------------------------------------------------------
# compositions and partitions


def compositions(d: int, n: int) -> list:
    """All d-tuples of nonnegative integers summing to n, lexicographic."""
    if d == 1:
        return [(n,)]
    out = []
    for first in range(n + 1):
        for rest in compositions(d - 1, n - first):
            out.append((first,) + rest)
    return out


def composition_of(I: tuple, d: int) -> tuple:
    mu = [0] * d
    for a in I:
        mu[a - 1] += 1
    return tuple(mu)


def multinomial(mu: tuple) -> int:
    n = sum(mu)
    out = math.factorial(n)
    for m in mu:
        out //= math.factorial(m)
    return out


def partitions(n: int, max_part: int = None) -> list:
    """All partitions of n as weakly decreasing tuples; n=0 gives [()]."""
    if n == 0:
        return [()]
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def hook_lengths(lam: tuple) -> list:
    cols = conjugate(lam)
    return [lam[r] - c + cols[c] - r - 1
            for r in range(len(lam)) for c in range(lam[r])]


def conjugate(lam: tuple) -> tuple:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def hook_dim(lam: tuple) -> int:
    """Generic simple-module dimension: n! / (product of hook lengths)."""
    n = sum(lam)
    out = math.factorial(n)
    for h in hook_lengths(lam):
        out //= h
    return out


def is_e_regular(lam: tuple, e) -> bool:
    """No part repeated e or more times; e=None means no constraint."""
    if e is None:
        return True
    counts: dict = {}
    for p in lam:
        counts[p] = counts.get(p, 0) + 1
        if counts[p] >= e:
            return False
    return True


def e_regular(n: int, e) -> list:
    """The e-regular partitions of n (e >= 2 or e=None for all)."""
    if e is not None and e < 2:
        raise ValueError("e must be at least 2 (or None for infinity)")
    return [lam for lam in partitions(n) if is_e_regular(lam, e)]


def multipartitions(d: int, n: int, e=None) -> list:
    """d-tuples of partitions of total size n with e-regular components."""
    out = []
    for mu in compositions(d, n):
        pools = [e_regular(m, e) if e is not None else partitions(m) for m in mu]
        for combo in itertools.product(*pools):
            out.append(tuple(combo))
    return out


# ---------------------------------------------------------------------------
# standard Young tableaux (tuple-of-row-tuples form)


def standard_tableaux(lam: tuple) -> list:
    """All standard tableaux of shape lam, in a fixed sorted order."""
    n = sum(lam)
    if n == 0:
        return [()]
    out = []
    for r in range(len(lam)):
        # removable corner?
        if lam[r] > 0 and (r + 1 == len(lam) or lam[r + 1] < lam[r]):
            sub = tuple(p for p in
                        (lam[:r] + (lam[r] - 1,) + lam[r + 1:]) if p > 0)
            for t in standard_tableaux(sub):
                rows = [list(row) for row in t]
                while len(rows) <= r:
                    rows.append([])
                rows[r].append(n)
                out.append(tuple(tuple(row) for row in rows))
    return sorted(out)


def tableau_position(t: tuple, value: int) -> tuple:
    for r, row in enumerate(t):
        for c, v in enumerate(row):
            if v == value:
                return r, c
    raise ValueError("value %d not in tableau" % value)


def tableau_swap(t: tuple, i: int) -> tuple:
    """The tableau with i and i+1 exchanged (caller checks standardness)."""
    return tuple(tuple(i + 1 if v == i else (i if v == i + 1 else v)
                       for v in row) for row in t)


# ---------------------------------------------------------------------------
# symmetric group characters (Murnaghan-Nakayama)


def cycle_type(w: tuple) -> tuple:
    n = len(w)
    seen = [False] * n
    lengths = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        j, length = start, 0
        while not seen[j - 1]:
            seen[j - 1] = True
            j = w[j - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def sn_character(lam: tuple, rho: tuple) -> int:
    """chi_lam evaluated on the class of cycle type rho (Murnaghan-Nakayama,
    via beta-numbers: removing a rim hook of length r moves one beta number
    down by r)."""
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    k = len(lam) if lam else 1
    betas = [(lam[i] if i < len(lam) else 0) + (k - 1 - i) for i in range(k)]
    bset = set(betas)
    total = 0
    for b in betas:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        sign = (-1) ** sum(1 for c in betas if nb < c < b)
        new = sorted((bset - {b}) | {nb}, reverse=True)
        newlam = tuple(p for p in
                       (new[i] - (k - 1 - i) for i in range(k)) if p > 0)
        total += sign * sn_character(newlam, rest)
    return total


def character_inner_check(m: int) -> bool:
    """Orthogonality sanity: sum over classes |C| chi(C)^2 = m! per irrep."""
    perms = all_perms(m)
    for lam in partitions(m):
        total = sum(sn_character(lam, cycle_type(w)) ** 2 for w in perms)
        if total != math.factorial(m):
            return False
    return True
