"""Pure-Python versions of the hot loops.

Every function here has a twin with the same signature in ``_kernels.pyx``;
``slplethysm.kernels`` picks the compiled one when it imports.

Conventions: matrix units are encoded as ``code = i * n + j`` with 0-based
``i, j``; a degree-3 monomial is a sorted 3-tuple of codes.
"""

from math import gcd


def lr_count(outer, inner, content):
    """Number of LR tableaux of shape ``outer/inner`` with the given content.

    Cells are filled row by row, each row right to left, which is exactly the
    reverse reading order, so the lattice condition is checked per placement.
    """
    outer = list(outer)
    inner = list(inner) + [0] * (len(outer) - len(inner))
    content = list(content)
    if len(inner) > len(outer) or any(i > o for i, o in zip(inner, outer)):
        return 0
    if sum(outer) - sum(inner) != sum(content):
        return 0
    cells = []
    for r, (o, i) in enumerate(zip(outer, inner)):
        for c in range(o - 1, i - 1, -1):
            cells.append((r, c))
    if not cells:
        return 1
    width = outer[0] if outer else 0
    grid = [[0] * width for _ in outer]
    counts = [0] * (len(content) + 1)
    m = len(content)
    total = 0

    def place(idx):
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        r, c = cells[idx]
        hi = m
        if c + 1 < outer[r]:
            hi = min(hi, grid[r][c + 1])
        lo = 1
        if r > 0 and c >= inner[r - 1]:
            lo = grid[r - 1][c] + 1
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            grid[r][c] = v
            counts[v] += 1
            place(idx + 1)
            counts[v] -= 1
        grid[r][c] = 0

    place(0)
    return total


def ad_images(monomials, n, a, b):
    """Images of ``ad(E_ab)`` acting as a derivation on each monomial.

    ``a`` and ``b`` are 0-based and distinct.  Returns one list of
    ``(monomial, coefficient)`` pairs per input monomial, zeros dropped.
    """
    out = []
    for mono in monomials:
        acc = {}
        for p in range(3):
            i, j = divmod(mono[p], n)
            rest = mono[:p] + mono[p + 1:]
            if i == b:
                new = tuple(sorted(rest + (a * n + j,)))
                acc[new] = acc.get(new, 0) + 1
            if j == a:
                new = tuple(sorted(rest + (i * n + b,)))
                acc[new] = acc.get(new, 0) - 1
        out.append([(m, c) for m, c in acc.items() if c])
    return out


def sparse_rank(rows):
    """Exact rank of an integer matrix given as a list of ``{column: value}`` dicts.

    Fraction-free echelon reduction: each new row is cleared against the
    stored pivot rows by cross multiplication, then divided by its content.
    """
    pivots = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            lead = min(r)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                if g > 1:
                    r = {c: v // g for c, v in r.items()}
                pivots[lead] = r
                break
            f = r[lead]
            p = piv[lead]
            g = gcd(f, p)
            fr, fp = p // g, f // g
            new = {c: v * fr for c, v in r.items()}
            for c, v in piv.items():
                s = new.get(c, 0) - fp * v
                if s:
                    new[c] = s
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                new = {c: v // g for c, v in new.items()}
            r = new
    return len(pivots)
