"""Exact rank computation over GF(2), GF(p), and the rationals.

GF(2) rows are int bitmasks reduced by XOR pivoting.  GF(p) and rational
ranks use Gaussian elimination on integer rows; the rational path is
fraction-free (integer cross-multiplication with gcd normalization), so
no floating point is involved anywhere.
"""

from __future__ import annotations

from math import gcd


def rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            low = row & -row
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = row
                rank += 1
                break
            row ^= piv
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    pivots: list[tuple[int, list[int]]] = []  # (column, normalized row)
    rank = 0
    for row in rows:
        row = [x % p for x in row]
        for col, prow in pivots:
            c = row[col]
            if c:
                row = [(x - c * y) % p for x, y in zip(row, prow)]
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        inv = pow(row[lead], -1, p)
        norm = [(x * inv) % p for x in row]
        pivots.append((lead, norm))
        pivots.sort(key=lambda t: t[0])
        rank += 1
    return rank


def rank_rationals(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, by exact integer elimination."""
    pivots: list[tuple[int, list[int]]] = []
    rank = 0
    for row in rows:
        row = list(row)
        for col, prow in pivots:
            c = row[col]
            if c:
                pc = prow[col]
                g = gcd(pc, c)
                a, b = pc // g, c // g
                row = [a * x - b * y for x, y in zip(row, prow)]
        lead = next((j for j, x in enumerate(row) if x), None)
        if lead is None:
            continue
        g = 0
        for x in row:
            g = gcd(g, x)
        if g > 1:
            row = [x // g for x in row]
        pivots.append((lead, row))
        pivots.sort(key=lambda t: t[0])
        rank += 1
    return rank
