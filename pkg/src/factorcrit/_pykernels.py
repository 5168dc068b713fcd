"""Pure-Python hot kernels.

Every function works on bitmask adjacency: ``adj[v]`` is an int whose bit
``w`` is set iff ``vw`` is an edge. ``alive`` masks restrict a kernel to an
induced subgraph without relabelling. ``_ckernels.pyx`` implements the same
functions with identical results; this module is the fallback when the
extension is not built.
"""

from itertools import combinations

MAX_N = 64


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask):
    return bin(mask).count("1")


# -- matching -----------------------------------------------------------------


def _lca(base, mate, parent, a, b, n):
    seen = [False] * n
    while True:
        a = base[a]
        seen[a] = True
        if mate[a] == -1:
            break
        a = parent[mate[a]]
    while True:
        b = base[b]
        if seen[b]:
            return b
        b = parent[mate[b]]


def _mark_path(base, mate, parent, blossom, v, b, child):
    while base[v] != b:
        blossom[base[v]] = True
        blossom[base[mate[v]]] = True
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


def _search(n, adj, alive, mate, root):
    """Grow an alternating tree from exposed ``root``, contracting blossoms.

    Returns ``(end, parent, outer)``: ``end`` is the exposed vertex closing
    an augmenting path (or -1) and ``outer`` the mask of even vertices.
    """
    parent = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for to in _bits(adj[v] & alive):
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = _lca(base, mate, parent, v, to, n)
                blossom = [False] * n
                _mark_path(base, mate, parent, blossom, v, cur, to)
                _mark_path(base, mate, parent, blossom, to, cur, v)
                for i in _bits(alive):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent, 0
                used[mate[to]] = True
                queue.append(mate[to])
    outer = 0
    for i in _bits(alive):
        if used[i]:
            outer |= 1 << i
    return -1, parent, outer


def max_matching(n, adj, alive):
    """Maximum matching of the subgraph induced by ``alive`` (mate array)."""
    mate = [-1] * n
    for v in _bits(alive):
        if mate[v] == -1:
            for w in _bits(adj[v] & alive):
                if mate[w] == -1:
                    mate[v] = w
                    mate[w] = v
                    break
    for root in _bits(alive):
        if mate[root] != -1:
            continue
        end, parent, _ = _search(n, adj, alive, mate, root)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end] = pv
            mate[pv] = end
            end = nxt
    return mate


def outer_vertices(n, adj, alive, mate):
    """Vertices reachable from an exposed vertex by an even alternating path.

    ``mate`` must be a maximum matching of the ``alive`` subgraph.
    """
    out = 0
    for root in _bits(alive):
        if mate[root] == -1:
            end, _, outer = _search(n, adj, alive, mate, root)
            if end != -1:
                raise ValueError("matching is not maximum")
            out |= outer
    return out


def has_perfect_matching(n, adj, alive):
    size = _popcount(alive)
    if size % 2:
        return False
    mate = max_matching(n, adj, alive)
    return all(mate[v] != -1 for v in _bits(alive))


def kfc_violation(n, adj, k):
    """First ``k``-subset (lexicographic) whose removal kills every perfect
    matching, as a mask; -1 if there is none."""
    full = (1 << n) - 1
    for combo in combinations(range(n), k):
        s = 0
        for v in combo:
            s |= 1 << v
        if not has_perfect_matching(n, adj, full ^ s):
            return s
    return -1


# -- components and Tutte sets ----------------------------------------------


def component_masks(n, adj, alive):
    comps = []
    rest = alive
    while rest:
        seed = rest & -rest
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in _bits(frontier):
                reach |= adj[v]
            reach &= alive & ~comp
            comp |= reach
            frontier = reach
        comps.append(comp)
        rest &= ~comp
    return comps


def odd_component_count(n, adj, alive):
    return sum(1 for c in component_masks(n, adj, alive) if _popcount(c) % 2)


def lex_less(a, b):
    """Compare vertex sets as sorted tuples."""
    d = a ^ b
    if not d:
        return False
    low = d & -d
    higher = ~((low << 1) - 1)
    if a & low:
        return bool(b & higher)
    return not (a & higher)


def max_deficiency_set(n, adj):
    """Exhaustive max of ``o(G-S) - |S|`` over all S; lexicographically
    smallest S among the maximisers."""
    full = (1 << n) - 1
    best = None
    best_set = 0
    for s in range(1 << n):
        d = odd_component_count(n, adj, full ^ s) - _popcount(s)
        if best is None or d > best or (d == best and lex_less(s, best_set)):
            best = d
            best_set = s
    return best, best_set


# -- canonical form -----------------------------------------------------------


def _refine_colours(n, adj):
    degs = [_popcount(adj[v]) for v in range(n)]
    ranks = sorted(set(degs))
    colour = [ranks.index(d) for d in degs]
    ncol = len(ranks)
    while True:
        cells = [0] * ncol
        for v in range(n):
            cells[colour[v]] |= 1 << v
        sig = [
            (colour[v],) + tuple(_popcount(adj[v] & cells[c]) for c in range(ncol))
            for v in range(n)
        ]
        distinct = sorted(set(sig))
        if len(distinct) == ncol:
            return colour
        index = {s: i for i, s in enumerate(distinct)}
        colour = [index[s] for s in sig]
        ncol = len(distinct)


def canonical_code(n, adj):
    """Minimum graph6 bit string (as an int) over colour-respecting orderings.

    Vertices are first partitioned by iterated degree refinement; positions
    are filled cell by cell in colour order and the adjacency bit string is
    minimised by branch and bound over the remaining freedom.
    """
    if n <= 1:
        return 0
    colour = _refine_colours(n, adj)
    cells = {}
    for v in range(n):
        cells[colour[v]] = cells.get(colour[v], 0) | (1 << v)
    slot_cell = [cells[c] for c in sorted(colour)]
    total = n * (n - 1) // 2
    perm = [0] * n
    best = [-1]

    def dfs(p, used, prefix):
        if p == n:
            if best[0] < 0 or prefix < best[0]:
                best[0] = prefix
            return
        shift = total - (p * (p + 1)) // 2
        tried = []
        for v in _bits(slot_cell[p] & ~used):
            # swapping twins is an automorphism fixing the prefix: one is enough
            if any(not ((adj[u] ^ adj[v]) & ~((1 << u) | (1 << v))) for u in tried):
                continue
            tried.append(v)
            col = 0
            row = adj[v]
            for i in range(p):
                col = (col << 1) | ((row >> perm[i]) & 1)
            nxt = (prefix << p) | col
            if best[0] >= 0 and nxt > (best[0] >> shift):
                continue
            perm[p] = v
            dfs(p + 1, used | (1 << v), nxt)

    dfs(0, 0, 0)
    return best[0]


# -- minor search -------------------------------------------------------------

_K33_SPLITS = [(0, a, b) for a in range(1, 6) for b in range(a + 1, 6)]


def _connected_within(adj, mask, allowed):
    """True iff ``mask`` lies in one component of the subgraph on ``allowed``."""
    if not mask:
        return True
    seed = mask & -mask
    comp = seed
    frontier = seed
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= adj[v]
        reach &= allowed & ~comp
        comp |= reach
        frontier = reach
    return mask & ~comp == 0


def _reach(adj, mask):
    out = 0
    for v in _bits(mask):
        out |= adj[v]
    return out


def _leaf(adj, blocks, t):
    for b in blocks:
        if not _connected_within(adj, b, b):
            return None
    nb = [_reach(adj, b) for b in blocks]
    if t == 5:
        for i in range(5):
            for j in range(i + 1, 5):
                if not nb[i] & blocks[j]:
                    return None
        return list(blocks)
    for side in _K33_SPLITS:
        other = [i for i in range(6) if i not in side]
        if all(nb[i] & blocks[j] for i in side for j in other):
            return [blocks[i] for i in side] + [blocks[j] for j in other]
    return None


def find_minor_blocks(n, adj, t):
    """Branch sets of a K5 (``t == 5``) or K3,3 (``t == 6``) minor, or None.

    Vertices are assigned in index order to a block or left unused; blocks
    are opened in order of first use so each set partition is visited once.
    For K3,3 the first three returned blocks form one side.
    """
    blocks = [0] * t

    def feasible(v, used):
        future = ((1 << n) - 1) & ~((1 << (v + 1)) - 1)
        for i in range(used):
            if not _connected_within(adj, blocks[i], blocks[i] | future):
                return False
        if t == 5:
            for i in range(used):
                r = _reach(adj, blocks[i])
                for j in range(i + 1, used):
                    if not r & (blocks[j] | future):
                        return False
        return True

    def dfs(v, used):
        if n - v < t - used:
            return None
        if v == n:
            return _leaf(adj, blocks, t)
        for lab in range(min(used + 1, t)):
            blocks[lab] |= 1 << v
            nused = max(used, lab + 1)
            if feasible(v, nused):
                found = dfs(v + 1, nused)
                if found is not None:
                    return found
            blocks[lab] &= ~(1 << v)
        if feasible(v, used):
            return dfs(v + 1, used)
        return None

    return dfs(0, 0)
