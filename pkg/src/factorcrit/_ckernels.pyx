# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; a line-for-line port of ``_pykernels``.

Masks are ``uint64`` so graphs are limited to 64 vertices. Results must be
identical to the pure-Python module, including tie-breaking.
"""

from libc.stdint cimport uint64_t

from . import _pykernels

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    NMAX = 64

MAX_N = NMAX


cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef inline int _pop(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef struct Graph:
    int n
    uint64_t adj[NMAX]


cdef int _load(Graph* g, int n, object adj) except -1:
    if n > NMAX:
        raise ValueError(f"compiled kernels support at most {NMAX} vertices")
    g.n = n
    cdef int v
    for v in range(n):
        g.adj[v] = <uint64_t>adj[v]
    return 0


# -- matching -----------------------------------------------------------------

cdef struct Search:
    int parent[NMAX]
    int base[NMAX]
    char used[NMAX]
    int queue[NMAX]


cdef int _lca(Search* s, int* mate, int a, int b, int n) nogil:
    cdef char seen[NMAX]
    cdef int i
    for i in range(n):
        seen[i] = 0
    while True:
        a = s.base[a]
        seen[a] = 1
        if mate[a] == -1:
            break
        a = s.parent[mate[a]]
    while True:
        b = s.base[b]
        if seen[b]:
            return b
        b = s.parent[mate[b]]


cdef void _mark_path(Search* s, int* mate, char* blossom, int v, int b, int child) nogil:
    while s.base[v] != b:
        blossom[s.base[v]] = 1
        blossom[s.base[mate[v]]] = 1
        s.parent[v] = child
        child = mate[v]
        v = s.parent[mate[v]]


cdef int _search(Graph* g, uint64_t alive, int* mate, int root, Search* s, uint64_t* outer) nogil:
    cdef int n = g.n
    cdef int i, v, to, cur, head = 0, tail = 0
    cdef uint64_t nb, rest
    cdef char blossom[NMAX]
    for i in range(n):
        s.parent[i] = -1
        s.base[i] = i
        s.used[i] = 0
    s.used[root] = 1
    s.queue[tail] = root
    tail += 1
    while head < tail:
        v = s.queue[head]
        head += 1
        nb = g.adj[v] & alive
        while nb:
            to = _ctz(nb)
            nb &= nb - 1
            if s.base[v] == s.base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and s.parent[mate[to]] != -1):
                cur = _lca(s, mate, v, to, n)
                for i in range(n):
                    blossom[i] = 0
                _mark_path(s, mate, blossom, v, cur, to)
                _mark_path(s, mate, blossom, to, cur, v)
                rest = alive
                while rest:
                    i = _ctz(rest)
                    rest &= rest - 1
                    if blossom[s.base[i]]:
                        s.base[i] = cur
                        if not s.used[i]:
                            s.used[i] = 1
                            s.queue[tail] = i
                            tail += 1
            elif s.parent[to] == -1:
                s.parent[to] = v
                if mate[to] == -1:
                    outer[0] = 0
                    return to
                s.used[mate[to]] = 1
                s.queue[tail] = mate[to]
                tail += 1
    outer[0] = 0
    rest = alive
    while rest:
        i = _ctz(rest)
        rest &= rest - 1
        if s.used[i]:
            outer[0] |= (<uint64_t>1) << i
    return -1


cdef void _max_matching(Graph* g, uint64_t alive, int* mate) nogil:
    cdef int v, w, end, pv, nxt
    cdef uint64_t rest, nb, outer
    cdef Search s
    for v in range(g.n):
        mate[v] = -1
    rest = alive
    while rest:
        v = _ctz(rest)
        rest &= rest - 1
        if mate[v] == -1:
            nb = g.adj[v] & alive
            while nb:
                w = _ctz(nb)
                nb &= nb - 1
                if mate[w] == -1:
                    mate[v] = w
                    mate[w] = v
                    break
    rest = alive
    while rest:
        v = _ctz(rest)
        rest &= rest - 1
        if mate[v] != -1:
            continue
        end = _search(g, alive, mate, v, &s, &outer)
        while end != -1:
            pv = s.parent[end]
            nxt = mate[pv]
            mate[end] = pv
            mate[pv] = end
            end = nxt


cdef bint _has_pm(Graph* g, uint64_t alive) nogil:
    cdef int mate[NMAX]
    cdef int v
    cdef uint64_t rest
    if _pop(alive) % 2:
        return False
    _max_matching(g, alive, mate)
    rest = alive
    while rest:
        v = _ctz(rest)
        rest &= rest - 1
        if mate[v] == -1:
            return False
    return True


def max_matching(int n, adj, alive):
    cdef Graph g
    cdef int mate[NMAX]
    _load(&g, n, adj)
    _max_matching(&g, <uint64_t>alive, mate)
    return [mate[v] for v in range(n)]


def outer_vertices(int n, adj, alive, mate):
    cdef Graph g
    cdef int cm[NMAX]
    cdef Search s
    cdef uint64_t a = <uint64_t>alive, rest, outer, total = 0
    cdef int v
    _load(&g, n, adj)
    for v in range(n):
        cm[v] = mate[v]
    rest = a
    while rest:
        v = _ctz(rest)
        rest &= rest - 1
        if cm[v] == -1:
            if _search(&g, a, cm, v, &s, &outer) != -1:
                raise ValueError("matching is not maximum")
            total |= outer
    return total


def has_perfect_matching(int n, adj, alive):
    cdef Graph g
    _load(&g, n, adj)
    return _has_pm(&g, <uint64_t>alive)


def kfc_violation(int n, adj, int k):
    cdef Graph g
    cdef int idx[NMAX]
    cdef int i, j
    cdef uint64_t s, full
    _load(&g, n, adj)
    if k > n or k < 0:
        return -1
    full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    for i in range(k):
        idx[i] = i
    while True:
        s = 0
        for i in range(k):
            s |= (<uint64_t>1) << idx[i]
        if not _has_pm(&g, full ^ s):
            return s
        i = k - 1
        while i >= 0 and idx[i] == n - k + i:
            i -= 1
        if i < 0:
            return -1
        idx[i] += 1
        for j in range(i + 1, k):
            idx[j] = idx[j - 1] + 1


# -- components and Tutte sets ----------------------------------------------

cdef int _components(Graph* g, uint64_t alive, uint64_t* out) nogil:
    cdef int count = 0, v
    cdef uint64_t rest = alive, comp, frontier, reach, f
    while rest:
        comp = rest & (~rest + 1)
        frontier = comp
        while frontier:
            reach = 0
            f = frontier
            while f:
                v = _ctz(f)
                f &= f - 1
                reach |= g.adj[v]
            reach &= alive & ~comp
            comp |= reach
            frontier = reach
        out[count] = comp
        count += 1
        rest &= ~comp
    return count


cdef int _odd_count(Graph* g, uint64_t alive) nogil:
    cdef uint64_t comps[NMAX]
    cdef int c = _components(g, alive, comps), i, odd = 0
    for i in range(c):
        if _pop(comps[i]) % 2:
            odd += 1
    return odd


def component_masks(int n, adj, alive):
    cdef Graph g
    cdef uint64_t comps[NMAX]
    _load(&g, n, adj)
    cdef int c = _components(&g, <uint64_t>alive, comps)
    return [comps[i] for i in range(c)]


def odd_component_count(int n, adj, alive):
    cdef Graph g
    _load(&g, n, adj)
    return _odd_count(&g, <uint64_t>alive)


cdef bint _lex_less(uint64_t a, uint64_t b) nogil:
    cdef uint64_t d = a ^ b, low, higher
    if not d:
        return False
    low = d & (~d + 1)
    higher = ~((low << 1) - 1)
    if low == ((<uint64_t>1) << 63):
        higher = 0
    if a & low:
        return (b & higher) != 0
    return (a & higher) == 0


def lex_less(a, b):
    return _lex_less(<uint64_t>a, <uint64_t>b)


def max_deficiency_set(int n, adj):
    cdef Graph g
    cdef uint64_t s, full, best_set = 0, count
    cdef int d, best = 0
    cdef bint have = False
    if n > 30:
        raise ValueError("exhaustive Tutte scan limited to 30 vertices")
    _load(&g, n, adj)
    full = ((<uint64_t>1) << n) - 1
    count = (<uint64_t>1) << n
    with nogil:
        s = 0
        while s < count:
            d = _odd_count(&g, full ^ s) - _pop(s)
            if not have or d > best or (d == best and _lex_less(s, best_set)):
                best = d
                best_set = s
                have = True
            s += 1
    return best, best_set


# -- canonical form -----------------------------------------------------------

cdef struct Canon:
    int n
    int total
    uint64_t slot_cell[NMAX]
    int perm[NMAX]
    uint64_t best
    bint have


cdef void _canon_dfs(Graph* g, Canon* c, int p, uint64_t used, uint64_t prefix) nogil:
    cdef int i, u, v, shift
    cdef uint64_t cand, col, row, nxt, tried = 0, rest
    cdef bint twin
    if p == c.n:
        if not c.have or prefix < c.best:
            c.best = prefix
            c.have = True
        return
    shift = c.total - (p * (p + 1)) // 2
    cand = c.slot_cell[p] & ~used
    while cand:
        v = _ctz(cand)
        cand &= cand - 1
        # swapping twins is an automorphism fixing the prefix: one is enough
        twin = False
        rest = tried
        while rest:
            u = _ctz(rest)
            rest &= rest - 1
            if not ((g.adj[u] ^ g.adj[v]) & ~(((<uint64_t>1) << u) | ((<uint64_t>1) << v))):
                twin = True
                break
        if twin:
            continue
        tried |= (<uint64_t>1) << v
        col = 0
        row = g.adj[v]
        for i in range(p):
            col = (col << 1) | ((row >> c.perm[i]) & 1)
        nxt = (prefix << p) | col
        if c.have and nxt > (c.best >> shift):
            continue
        c.perm[p] = v
        _canon_dfs(g, c, p + 1, used | ((<uint64_t>1) << v), nxt)


cdef bint _sig_less(int* a, int* b, int length) nogil:
    cdef int i
    for i in range(length):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


cdef bint _sig_equal(int* a, int* b, int length) nogil:
    cdef int i
    for i in range(length):
        if a[i] != b[i]:
            return False
    return True


cdef int _rank(int n, int sig[][NMAX + 1], int length, int* out) nogil:
    # rank of each row among the distinct rows in sorted order
    cdef int v, u, w, r, ndistinct = 0
    cdef bint first
    for v in range(n):
        r = 0
        for u in range(n):
            if _sig_less(sig[u], sig[v], length):
                first = True
                for w in range(u):
                    if _sig_equal(sig[w], sig[u], length):
                        first = False
                        break
                if first:
                    r += 1
        out[v] = r
    for u in range(n):
        first = True
        for w in range(u):
            if _sig_equal(sig[w], sig[u], length):
                first = False
                break
        if first:
            ndistinct += 1
    return ndistinct


cdef void _refine(Graph* g, int* colour) nogil:
    cdef int sig[NMAX][NMAX + 1]
    cdef uint64_t cells[NMAX]
    cdef int n = g.n, v, c, ncol, nnew
    for v in range(n):
        sig[v][0] = _pop(g.adj[v])
    ncol = _rank(n, sig, 1, colour)
    while True:
        for c in range(ncol):
            cells[c] = 0
        for v in range(n):
            cells[colour[v]] |= (<uint64_t>1) << v
        for v in range(n):
            sig[v][0] = colour[v]
            for c in range(ncol):
                sig[v][1 + c] = _pop(g.adj[v] & cells[c])
        nnew = _rank(n, sig, ncol + 1, colour)
        if nnew == ncol:
            return
        ncol = nnew


def canonical_code(int n, adj):
    if n <= 1:
        return 0
    if n > 11:
        # the code needs n(n-1)/2 bits, more than a uint64 holds
        return _pykernels.canonical_code(n, adj)
    cdef Graph g
    cdef Canon c
    cdef int colour[NMAX]
    cdef int v, s = 0, col = 0, size
    cdef uint64_t cell
    _load(&g, n, adj)
    with nogil:
        _refine(&g, colour)
        # slots are filled in colour order; slot s takes any vertex of its colour
        while s < n:
            cell = 0
            for v in range(n):
                if colour[v] == col:
                    cell |= (<uint64_t>1) << v
            size = _pop(cell)
            for v in range(size):
                c.slot_cell[s] = cell
                s += 1
            col += 1
        c.n = n
        c.total = n * (n - 1) // 2
        c.have = False
        c.best = 0
        _canon_dfs(&g, &c, 0, 0, 0)
    return c.best


# -- minor search -------------------------------------------------------------

cdef bint _connected_within(Graph* g, uint64_t mask, uint64_t allowed) nogil:
    cdef uint64_t comp, frontier, reach, f
    if not mask:
        return True
    comp = mask & (~mask + 1)
    frontier = comp
    while frontier:
        reach = 0
        f = frontier
        while f:
            reach |= g.adj[_ctz(f)]
            f &= f - 1
        reach &= allowed & ~comp
        comp |= reach
        frontier = reach
    return (mask & ~comp) == 0


cdef uint64_t _reach(Graph* g, uint64_t mask) nogil:
    cdef uint64_t out = 0
    while mask:
        out |= g.adj[_ctz(mask)]
        mask &= mask - 1
    return out


cdef struct Minor:
    int n
    int t
    uint64_t blocks[6]
    uint64_t found[6]


cdef int SPLITS[10][3]
_k = 0
for _a in range(1, 6):
    for _b in range(_a + 1, 6):
        SPLITS[_k][0] = 0
        SPLITS[_k][1] = _a
        SPLITS[_k][2] = _b
        _k += 1


cdef bint _leaf(Graph* g, Minor* m) nogil:
    cdef uint64_t nb[6]
    cdef int i, j, k, side, o
    cdef int other[3]
    cdef bint ok, inside
    for i in range(m.t):
        if not _connected_within(g, m.blocks[i], m.blocks[i]):
            return False
        nb[i] = _reach(g, m.blocks[i])
    if m.t == 5:
        for i in range(5):
            for j in range(i + 1, 5):
                if not (nb[i] & m.blocks[j]):
                    return False
        for i in range(5):
            m.found[i] = m.blocks[i]
        return True
    for k in range(10):
        o = 0
        for i in range(6):
            inside = False
            for side in range(3):
                if SPLITS[k][side] == i:
                    inside = True
            if not inside:
                other[o] = i
                o += 1
        ok = True
        for side in range(3):
            for j in range(3):
                if not (nb[SPLITS[k][side]] & m.blocks[other[j]]):
                    ok = False
        if ok:
            for side in range(3):
                m.found[side] = m.blocks[SPLITS[k][side]]
                m.found[3 + side] = m.blocks[other[side]]
            return True
    return False


cdef bint _feasible(Graph* g, Minor* m, int v, int used) nogil:
    cdef uint64_t future, r
    cdef int i, j
    if v + 1 >= 64:
        future = 0
    else:
        future = (((<uint64_t>1) << m.n) - 1) & ~(((<uint64_t>1) << (v + 1)) - 1)
    for i in range(used):
        if not _connected_within(g, m.blocks[i], m.blocks[i] | future):
            return False
    if m.t == 5:
        for i in range(used):
            r = _reach(g, m.blocks[i])
            for j in range(i + 1, used):
                if not (r & (m.blocks[j] | future)):
                    return False
    return True


cdef bint _minor_dfs(Graph* g, Minor* m, int v, int used) nogil:
    cdef int lab, nused, top
    cdef uint64_t bit
    if m.n - v < m.t - used:
        return False
    if v == m.n:
        return _leaf(g, m)
    bit = (<uint64_t>1) << v
    top = used + 1
    if top > m.t:
        top = m.t
    for lab in range(top):
        m.blocks[lab] |= bit
        nused = used if used > lab + 1 else lab + 1
        if _feasible(g, m, v, nused):
            if _minor_dfs(g, m, v + 1, nused):
                return True
        m.blocks[lab] &= ~bit
    if _feasible(g, m, v, used):
        return _minor_dfs(g, m, v + 1, used)
    return False


def find_minor_blocks(int n, adj, int t):
    cdef Graph g
    cdef Minor m
    cdef int i
    cdef bint ok
    if n >= 64:
        raise ValueError("minor search limited to 63 vertices")
    _load(&g, n, adj)
    m.n = n
    m.t = t
    for i in range(6):
        m.blocks[i] = 0
        m.found[i] = 0
    with nogil:
        ok = _minor_dfs(&g, &m, 0, 0)
    if not ok:
        return None
    return [m.found[i] for i in range(t)]
