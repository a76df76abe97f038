# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel.  Mirrors ``_kernel_py`` exactly."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

from .errors import NodeBudgetExceeded

cdef enum:
    MAXN = 128
    MAXSYM = 32


cdef struct Search:
    int w[MAXN]
    int n_max
    int npat
    int* pat          # concatenated pattern letters
    int* off          # pattern i occupies pat[off[i]:off[i+1]]
    int* nsym         # number of distinct symbols in pattern i
    long long budget
    long long nodes
    long long* counts
    bint exceeded


cdef bint _match(const int* w, int stop, const int* p, int plen, int pos,
                 int start, int* val, int nsym) noexcept nogil:
    cdef int sym, need, idx, s, v, lo, hi
    if pos == plen:
        return True
    sym = p[pos]
    need = plen - pos
    if val[sym] >= 0:
        for idx in range(start, stop - need + 1):
            if w[idx] == val[sym] and _match(w, stop, p, plen, pos + 1, idx + 1, val, nsym):
                return True
        return False
    lo = -1
    hi = 2147483647
    for s in range(nsym):
        if val[s] >= 0:
            if s < sym:
                if val[s] > lo:
                    lo = val[s]
            elif val[s] < hi:
                hi = val[s]
    for idx in range(start, stop - need + 1):
        v = w[idx]
        if v <= lo or v >= hi:
            continue
        val[sym] = v
        if _match(w, stop, p, plen, pos + 1, idx + 1, val, nsym):
            val[sym] = -1
            return True
        val[sym] = -1
    return False


cdef bint _completes_pattern(Search* st, int length) noexcept nogil:
    # Does the letter at index length-1 finish an occurrence of some pattern?
    cdef int i, plen, s
    cdef int val[MAXSYM]
    cdef const int* p
    for i in range(st.npat):
        p = st.pat + st.off[i]
        plen = st.off[i + 1] - st.off[i]
        if plen == 0:
            return True
        if plen > length:
            continue
        for s in range(st.nsym[i]):
            val[s] = -1
        val[p[plen - 1]] = st.w[length - 1]
        if _match(st.w, length - 1, p, plen - 1, 0, 0, val, st.nsym[i]):
            return True
    return False


cdef void _count(Search* st, int length, int ascents) noexcept nogil:
    cdef int z, last
    st.nodes += 1
    if st.nodes > st.budget:
        st.exceeded = True
        return
    st.counts[length] += 1
    if length == st.n_max:
        return
    last = st.w[length - 1]
    for z in range(ascents + 2):
        st.w[length] = z
        if not _completes_pattern(st, length + 1):
            _count(st, length + 1, ascents + (1 if last < z else 0))
            if st.exceeded:
                return


cdef int _list(Search* st, int length, int ascents, list out) except -1:
    cdef int z, last, i
    st.nodes += 1
    if st.nodes > st.budget:
        st.exceeded = True
        return 0
    if length == st.n_max:
        out.append(tuple([st.w[i] for i in range(length)]))
        return 0
    last = st.w[length - 1]
    for z in range(ascents + 2):
        st.w[length] = z
        if not _completes_pattern(st, length + 1):
            _list(st, length + 1, ascents + (1 if last < z else 0), out)
            if st.exceeded:
                return 0
    return 0


cdef int _init(Search* st, int n_max, patterns, prefix, long long budget) except -1:
    cdef int i, j, total
    if n_max >= MAXN:
        raise ValueError(f"length {n_max} exceeds kernel limit {MAXN - 1}")
    pats = [tuple(p) for p in patterns]
    for p in pats:
        if len(set(p)) > MAXSYM:
            raise ValueError("pattern has too many distinct letters")
    total = sum(len(p) for p in pats)
    st.npat = len(pats)
    st.pat = <int*> malloc(max(total, 1) * sizeof(int))
    st.off = <int*> malloc((st.npat + 1) * sizeof(int))
    st.nsym = <int*> malloc(max(st.npat, 1) * sizeof(int))
    st.counts = <long long*> malloc((n_max + 1) * sizeof(long long))
    if not st.pat or not st.off or not st.nsym or not st.counts:
        raise MemoryError()
    memset(st.counts, 0, (n_max + 1) * sizeof(long long))
    j = 0
    for i in range(st.npat):
        st.off[i] = j
        st.nsym[i] = len(set(pats[i]))
        for d in pats[i]:
            st.pat[j] = d
            j += 1
    st.off[st.npat] = j
    for i, d in enumerate(prefix):
        st.w[i] = d
    st.n_max = n_max
    st.budget = budget
    st.nodes = 0
    st.exceeded = False
    return 0


cdef void _release(Search* st) noexcept:
    free(st.pat)
    free(st.off)
    free(st.nsym)
    free(st.counts)


def count_levels(int n_max, patterns, budget, prefix=(0,)):
    cdef Search st
    cdef int length = len(prefix)
    cdef int ascents = sum(1 for a, b in zip(prefix, prefix[1:]) if a < b)
    counts = [0] * (n_max + 1)
    if length > n_max:
        return counts, 0
    st.pat = NULL
    st.off = NULL
    st.nsym = NULL
    st.counts = NULL
    try:
        _init(&st, n_max, patterns, prefix, min(budget, 2**62))
        with nogil:
            _count(&st, length, ascents)
        if st.exceeded:
            raise NodeBudgetExceeded(budget)
        counts = [st.counts[i] for i in range(n_max + 1)]
        return counts, st.nodes
    finally:
        _release(&st)


def list_level(int n, patterns, budget, prefix=(0,)):
    cdef Search st
    cdef int length = len(prefix)
    cdef int ascents = sum(1 for a, b in zip(prefix, prefix[1:]) if a < b)
    out = []
    if length > n:
        return out, 0
    st.pat = NULL
    st.off = NULL
    st.nsym = NULL
    st.counts = NULL
    try:
        _init(&st, n, patterns, prefix, min(budget, 2**62))
        _list(&st, length, ascents, out)
        if st.exceeded:
            raise NodeBudgetExceeded(budget)
        return out, st.nodes
    finally:
        _release(&st)
