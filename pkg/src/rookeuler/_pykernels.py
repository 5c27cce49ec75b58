"""Pure-Python enumeration kernels.

Reference implementations of the inner loops; ``_ckernels.pyx`` mirrors these
signatures exactly.  All histograms are plain lists of ints.

Statistic codes: 0 ascent, 1 descent, 2 excedance, 3 peak.
"""

ASC, DES, EXC, PEAK = 0, 1, 2, 3


def word_stat(w, kind):
    n = len(w)
    if kind == ASC:
        return sum(1 for i in range(n - 1) if w[i] < w[i + 1])
    if kind == DES:
        return sum(1 for i in range(n - 1) if w[i] > w[i + 1])
    if kind == EXC:
        return sum(1 for i in range(n) if w[i] > i + 1)
    if kind == PEAK:
        return sum(1 for i in range(1, n - 1) if w[i - 1] < w[i] > w[i + 1])
    raise ValueError(f"unknown statistic code {kind}")


def rook_ascent_table(parts):
    """table[c-1][a] = row-complete placements with first rook in column c and a ascents."""
    n = len(parts)
    table = [[0] * max(n, 1) for _ in range(parts[0])]
    used = [False] * (max(parts) + 2)

    def dfs(row, prev, asc, first):
        if row == n:
            table[first - 1][asc] += 1
            return
        for c in range(1, parts[row] + 1):
            if used[c]:
                continue
            used[c] = True
            dfs(row + 1, c, asc + (c > prev), first)
            used[c] = False

    for c in range(1, parts[0] + 1):
        used[c] = True
        dfs(1, c, 0, c)
        used[c] = False
    return table


def multiset_ascent_table(outer, inner, content):
    """table[j-1][a] = words with first letter j and a (strict) ascents.

    Row ``i`` takes a letter ``w`` with ``inner[i] < w <= outer[i]``; letter
    ``j`` is used exactly ``content[j-1]`` times.
    """
    n = len(outer)
    k = len(content)
    width = max(outer) if outer else 0
    table = [[0] * max(n, 1) for _ in range(max(width, k))]
    rem = list(content) + [0] * max(0, width - k)

    def dfs(row, prev, asc, first):
        if row == n:
            table[first - 1][asc] += 1
            return
        for c in range(inner[row] + 1, outer[row] + 1):
            if rem[c - 1] == 0:
                continue
            rem[c - 1] -= 1
            dfs(row + 1, c, asc + (c > prev), first if row else c)
            rem[c - 1] += 1

    if n:
        dfs(0, 10 ** 9, 0, 0)
    return table


def lower_interval_words(top, adjacent_only, limit=0):
    """All words reachable from ``top`` by inversion-reducing transpositions.

    Raises OverflowError once more than ``limit`` words are found (0 = no limit).
    """
    top = tuple(top)
    n = len(top)
    seen = {top}
    stack = [top]
    while stack:
        w = stack.pop()
        for i in range(n - 1):
            js = (i + 1,) if adjacent_only else range(i + 1, n)
            wi = w[i]
            for j in js:
                if wi > w[j]:
                    x = list(w)
                    x[i], x[j] = x[j], wi
                    x = tuple(x)
                    if x not in seen:
                        seen.add(x)
                        stack.append(x)
                        if limit and len(seen) > limit:
                            raise OverflowError(f"interval exceeds {limit} elements")
    return list(seen)


def lower_interval_stat_counts(top, adjacent_only, kind, limit=0):
    hist = [0] * (len(top) + 1)
    for w in lower_interval_words(top, adjacent_only, limit):
        hist[word_stat(w, kind)] += 1
    return hist


def linear_extension_words(n, pred_masks):
    """Words listing 1..n in an order where every element follows its predecessors.

    ``pred_masks[e]`` is the bitmask (bit ``p``) of elements that must come
    before element ``e``; elements are 0-based here, words are 1-based.
    Yields in lexicographic order.
    """
    out = []
    word = []

    def rec(used):
        if len(word) == n:
            out.append(tuple(e + 1 for e in word))
            return
        for e in range(n):
            if not (used >> e) & 1 and (pred_masks[e] & ~used) == 0:
                word.append(e)
                rec(used | (1 << e))
                word.pop()

    rec(0)
    return out


def linear_extension_stat_counts(n, pred_masks, kind):
    hist = [0] * (n + 1)
    for w in linear_extension_words(n, pred_masks):
        hist[word_stat(w, kind)] += 1
    return hist
