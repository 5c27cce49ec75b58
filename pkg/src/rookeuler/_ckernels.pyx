# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same signatures as ``_pykernels``.

Permutations of up to 16 letters are packed into a ``uint64`` key, four bits
per position, for the interval searches.  Larger inputs raise ValueError and
the dispatcher falls back to the Python kernels.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free, calloc
from libcpp.vector cimport vector
from libcpp.unordered_set cimport unordered_set

cdef enum:
    MAXN = 64
    PACKN = 16


cdef int _word_stat(const int* w, int n, int kind) noexcept nogil:
    cdef int i, s = 0
    if kind == 0:
        for i in range(n - 1):
            if w[i] < w[i + 1]:
                s += 1
    elif kind == 1:
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                s += 1
    elif kind == 2:
        for i in range(n):
            if w[i] > i + 1:
                s += 1
    else:
        for i in range(1, n - 1):
            if w[i - 1] < w[i] and w[i] > w[i + 1]:
                s += 1
    return s


def word_stat(w, int kind):
    cdef int n = len(w)
    cdef int buf[MAXN]
    cdef int i
    if kind < 0 or kind > 3:
        raise ValueError(f"unknown statistic code {kind}")
    if n > MAXN:
        raise ValueError("word too long")
    for i in range(n):
        buf[i] = w[i]
    return _word_stat(buf, n, kind)


# --- rook placements ----------------------------------------------------------

cdef void _rook_dfs(int row, int n, const int* parts, uint64_t used, int prev,
                    int asc, int first, int64_t* table, int width) noexcept nogil:
    cdef int c
    if row == n:
        table[(first - 1) * width + asc] += 1
        return
    for c in range(1, parts[row] + 1):
        if (used >> c) & 1:
            continue
        _rook_dfs(row + 1, n, parts, used | ((<uint64_t>1) << c), c,
                  asc + (1 if c > prev else 0), first, table, width)


def rook_ascent_table(parts):
    cdef int n = len(parts)
    cdef int i, c, width = max(n, 1)
    cdef int cparts[MAXN]
    if n == 0 or max(parts) >= MAXN - 1 or n > MAXN:
        raise ValueError("board outside compiled kernel range")
    for i in range(n):
        cparts[i] = parts[i]
    cdef int rows = cparts[0]
    cdef int64_t* table = <int64_t*> calloc(rows * width, sizeof(int64_t))
    if table == NULL:
        raise MemoryError
    try:
        with nogil:
            for c in range(1, rows + 1):
                _rook_dfs(1, n, cparts, (<uint64_t>1) << c, c, 0, c, table, width)
        return [[table[r * width + a] for a in range(width)] for r in range(rows)]
    finally:
        free(table)


# --- multiset words -----------------------------------------------------------

cdef void _ms_dfs(int row, int n, const int* outer, const int* inner, int* rem,
                  int prev, int asc, int first, int64_t* table, int width) noexcept nogil:
    cdef int c
    if row == n:
        table[(first - 1) * width + asc] += 1
        return
    for c in range(inner[row] + 1, outer[row] + 1):
        if rem[c - 1] == 0:
            continue
        rem[c - 1] -= 1
        _ms_dfs(row + 1, n, outer, inner, rem, c, asc + (1 if c > prev else 0),
                first if row else c, table, width)
        rem[c - 1] += 1


def multiset_ascent_table(outer, inner, content):
    cdef int n = len(outer)
    cdef int k = len(content)
    cdef int i
    cdef int letters = max(max(outer) if n else 0, k)
    cdef int width = max(n, 1)
    cdef int couter[MAXN]
    cdef int cinner[MAXN]
    cdef int rem[MAXN]
    if n > MAXN or letters > MAXN:
        raise ValueError("board outside compiled kernel range")
    for i in range(n):
        couter[i] = outer[i]
        cinner[i] = inner[i]
    for i in range(letters):
        rem[i] = content[i] if i < k else 0
    cdef int64_t* table = <int64_t*> calloc(max(letters, 1) * width, sizeof(int64_t))
    if table == NULL:
        raise MemoryError
    try:
        if n:
            with nogil:
                _ms_dfs(0, n, couter, cinner, rem, 1 << 30, 0, 0, table, width)
        return [[table[r * width + a] for a in range(width)] for r in range(letters)]
    finally:
        free(table)


# --- Bruhat / weak lower intervals ----------------------------------------------

cdef inline uint64_t _pack(const int* w, int n) noexcept nogil:
    cdef uint64_t key = 0
    cdef int i
    for i in range(n):
        key |= (<uint64_t>(w[i] - 1)) << (4 * i)
    return key


cdef inline void _unpack(uint64_t key, int* w, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        w[i] = <int>((key >> (4 * i)) & 15) + 1


cdef bint _interval(const int* top, int n, bint adjacent_only, size_t limit,
                    vector[uint64_t]& out) noexcept nogil:
    # returns False once more than ``limit`` elements are found (0 = no limit)
    cdef unordered_set[uint64_t] seen
    cdef vector[uint64_t] stack
    cdef int w[PACKN]
    cdef int i, j, jend, wi, wj
    cdef uint64_t key, nk
    key = _pack(top, n)
    seen.insert(key)
    stack.push_back(key)
    out.push_back(key)
    while stack.size():
        key = stack.back()
        stack.pop_back()
        _unpack(key, w, n)
        for i in range(n - 1):
            wi = w[i]
            jend = i + 2 if adjacent_only else n
            for j in range(i + 1, jend):
                wj = w[j]
                if wi > wj:
                    nk = key ^ ((<uint64_t>(wi - 1)) << (4 * i)) ^ ((<uint64_t>(wj - 1)) << (4 * j))
                    nk = nk | ((<uint64_t>(wj - 1)) << (4 * i)) | ((<uint64_t>(wi - 1)) << (4 * j))
                    if seen.find(nk) == seen.end():
                        seen.insert(nk)
                        stack.push_back(nk)
                        out.push_back(nk)
                        if limit and out.size() > limit:
                            return False
    return True


cdef int _load_perm(top, int* buf) except -1:
    cdef int n = len(top)
    cdef int i
    if n == 0 or n > PACKN:
        raise ValueError("permutation outside compiled kernel range")
    for i in range(n):
        buf[i] = top[i]
    return n


def lower_interval_words(top, bint adjacent_only, size_t limit=0):
    cdef int buf[PACKN]
    cdef int w[PACKN]
    cdef int n = _load_perm(top, buf)
    cdef vector[uint64_t] out
    cdef bint ok
    with nogil:
        ok = _interval(buf, n, adjacent_only, limit, out)
    if not ok:
        raise OverflowError(f"interval exceeds {limit} elements")
    res = []
    cdef size_t k
    for k in range(out.size()):
        _unpack(out[k], w, n)
        res.append(tuple([w[i] for i in range(n)]))
    return res


def lower_interval_stat_counts(top, bint adjacent_only, int kind, size_t limit=0):
    cdef int buf[PACKN]
    cdef int w[PACKN]
    cdef int n = _load_perm(top, buf)
    cdef vector[uint64_t] out
    cdef vector[int64_t] hist
    cdef size_t k
    cdef bint ok
    if kind < 0 or kind > 3:
        raise ValueError(f"unknown statistic code {kind}")
    hist.resize(n + 1, 0)
    with nogil:
        ok = _interval(buf, n, adjacent_only, limit, out)
    if not ok:
        raise OverflowError(f"interval exceeds {limit} elements")
    with nogil:
        for k in range(out.size()):
            _unpack(out[k], w, n)
            hist[_word_stat(w, n, kind)] += 1
    return [hist[k] for k in range(n + 1)]


# --- linear extensions --------------------------------------------------------------

cdef void _le_dfs(int depth, int n, const uint64_t* pred, uint64_t used, int* word,
                  int kind, int64_t* hist) noexcept nogil:
    cdef int e
    if depth == n:
        hist[_word_stat(word, n, kind)] += 1
        return
    for e in range(n):
        if (used >> e) & 1:
            continue
        if pred[e] & ~used:
            continue
        word[depth] = e + 1
        _le_dfs(depth + 1, n, pred, used | ((<uint64_t>1) << e), word, kind, hist)


def linear_extension_stat_counts(int n, pred_masks, int kind):
    cdef uint64_t pred[MAXN]
    cdef int word[MAXN]
    cdef int64_t hist[MAXN + 1]
    cdef int i
    if n > 63:
        raise ValueError("poset outside compiled kernel range")
    if kind < 0 or kind > 3:
        raise ValueError(f"unknown statistic code {kind}")
    for i in range(n):
        pred[i] = pred_masks[i]
    for i in range(n + 1):
        hist[i] = 0
    if n == 0:
        return [1]
    with nogil:
        _le_dfs(0, n, pred, 0, word, kind, hist)
    return [hist[i] for i in range(n + 1)]


cdef void _le_collect(int depth, int n, const uint64_t* pred, uint64_t used, int* word,
                      list out):
    cdef int e
    if depth == n:
        out.append(tuple([word[i] for i in range(n)]))
        return
    for e in range(n):
        if (used >> e) & 1:
            continue
        if pred[e] & ~used:
            continue
        word[depth] = e + 1
        _le_collect(depth + 1, n, pred, used | ((<uint64_t>1) << e), word, out)


def linear_extension_words(int n, pred_masks):
    cdef uint64_t pred[MAXN]
    cdef int word[MAXN]
    cdef int i
    if n > 63:
        raise ValueError("poset outside compiled kernel range")
    for i in range(n):
        pred[i] = pred_masks[i]
    out = []
    _le_collect(0, n, pred, 0, word, out)
    return out
