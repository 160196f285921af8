# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels.

Same functions, signatures and return values as ``_pykernels``. Adjacency
rows are copied into fixed 64-word arrays of ``uint64``.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport calloc, free

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil

cdef enum:
    MAXN = 64
    MAXM = 64

FOUND = 1
ABSENT = 0
BUDGET = -1

TREE_DONE = 0
TREE_COUNTEREXAMPLE = 1
TREE_BUDGET = 2


cdef inline int popc(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline uint64_t low_bits(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef int load(object rows, uint64_t* adj) except -1:
    cdef int n = len(rows)
    cdef int i
    if n > MAXN:
        raise ValueError("graph order exceeds 64")
    for i in range(n):
        adj[i] = <uint64_t>rows[i]
    return n


cdef inline uint64_t reach(const uint64_t* adj, int v, uint64_t avail) noexcept nogil:
    cdef uint64_t seen = 0, frontier = adj[v] & avail, nxt, f
    while frontier:
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[ctz(f)]
            f &= f - 1
        frontier = nxt & avail & ~seen
    return seen


cdef inline int dist_to(const uint64_t* adj, int v, uint64_t avail,
                        uint64_t targets, int limit) noexcept nogil:
    cdef uint64_t seen = (<uint64_t>1) << v
    cdef uint64_t frontier = seen, nxt, f
    cdef int d = 0
    while d < limit:
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[ctz(f)]
            f &= f - 1
        d += 1
        if nxt & targets:
            return d
        frontier = nxt & avail & ~seen
        if not frontier:
            break
        seen |= frontier
    return limit + 1


# ---------------------------------------------------------------- cycles

cdef struct CycleSearch:
    uint64_t adj[MAXN]
    int path[MAXN]
    int n
    int k
    int64_t budget
    int64_t count
    uint64_t seen
    bint out


cdef int cycle_dfs(CycleSearch* s, int a, int v, int depth, uint64_t visited,
                   uint64_t allowed) noexcept nogil:
    # 1 found, 0 not found, -1 budget
    cdef uint64_t avail, targets, cand, low
    cdef int w, remaining, r
    s.count += 1
    if s.count > s.budget:
        return -1
    if depth >= 3 and depth < 64 and (s.adj[v] >> a) & 1:
        s.seen |= (<uint64_t>1) << depth
    avail = allowed & ~visited
    targets = s.adj[a] & avail
    if depth == s.k - 1:
        cand = s.adj[v] & targets
        if cand:
            s.path[depth] = ctz(cand)
            return 1
        return 0
    remaining = s.k - depth
    if dist_to(s.adj, v, avail, targets, remaining) > remaining:
        return 0
    if popc(reach(s.adj, v, avail)) < remaining:
        return 0
    cand = s.adj[v] & avail
    while cand:
        low = cand & (~cand + 1)
        w = ctz(cand)
        cand ^= low
        s.path[depth] = w
        r = cycle_dfs(s, a, w, depth + 1, visited | low, allowed)
        if r != 0:
            return r
    return 0


def find_cycle(rows, int k, budget, bint canonical=True):
    cdef CycleSearch s
    cdef int a, r, i
    cdef uint64_t full, allowed
    s.n = load(rows, s.adj)
    s.k = k
    s.budget = <int64_t>min(budget, 2 ** 62)
    s.count = 0
    s.seen = 0
    full = low_bits(s.n)
    for a in range(s.n):
        if canonical:
            allowed = full & ~low_bits(a + 1)
        else:
            allowed = full & ~((<uint64_t>1) << a)
        if popc(s.adj[a] & allowed) < 2:
            continue
        if popc(reach(s.adj, a, allowed)) < k - 1:
            continue
        s.path[0] = a
        r = cycle_dfs(&s, a, a, 1, (<uint64_t>1) << a, allowed)
        if r == -1:
            return BUDGET, None, s.count, s.seen
        if r == 1:
            seen = int(s.seen) | (1 << k)
            return FOUND, [s.path[i] for i in range(k)], s.count, seen
    return ABSENT, None, s.count, s.seen


cdef int long_dfs(CycleSearch* s, int a, int v, int depth, uint64_t visited,
                  uint64_t allowed) noexcept nogil:
    cdef uint64_t avail, targets, cand, low, rc
    cdef int w, r
    s.count += 1
    if s.count > s.budget:
        return -1
    if depth >= s.k and depth >= 3 and (s.adj[v] >> a) & 1:
        s.seen = depth
        return 1
    avail = allowed & ~visited
    targets = s.adj[a] & avail
    rc = reach(s.adj, v, avail)
    if not (rc & targets) or depth + popc(rc) < s.k:
        return 0
    cand = s.adj[v] & avail
    while cand:
        low = cand & (~cand + 1)
        w = ctz(cand)
        cand ^= low
        s.path[depth] = w
        r = long_dfs(s, a, w, depth + 1, visited | low, allowed)
        if r != 0:
            return r
    return 0


def find_long_cycle(rows, int t, budget):
    cdef CycleSearch s
    cdef int a, r, i
    cdef uint64_t full, allowed
    s.n = load(rows, s.adj)
    s.k = t
    s.budget = <int64_t>min(budget, 2 ** 62)
    s.count = 0
    s.seen = 0
    full = low_bits(s.n)
    for a in range(s.n):
        allowed = full & ~low_bits(a + 1)
        if popc(s.adj[a] & allowed) < 2:
            continue
        if 1 + popc(reach(s.adj, a, allowed)) < t:
            continue
        s.path[0] = a
        r = long_dfs(&s, a, a, 1, (<uint64_t>1) << a, allowed)
        if r == -1:
            return BUDGET, None, s.count
        if r == 1:
            return FOUND, [s.path[i] for i in range(<int>s.seen)], s.count
    return ABSENT, None, s.count


cdef int path_dfs(CycleSearch* s, int v, int depth, uint64_t visited,
                  uint64_t full) noexcept nogil:
    cdef uint64_t avail, cand, low
    cdef int w, r
    s.count += 1
    if s.count > s.budget:
        return -1
    if depth == s.k:
        return 1
    avail = full & ~visited
    if depth + popc(reach(s.adj, v, avail)) < s.k:
        return 0
    cand = s.adj[v] & avail
    while cand:
        low = cand & (~cand + 1)
        w = ctz(cand)
        cand ^= low
        s.path[depth] = w
        r = path_dfs(s, w, depth + 1, visited | low, full)
        if r != 0:
            return r
    return 0


def find_path(rows, int k, budget):
    cdef CycleSearch s
    cdef int v, r, i
    cdef uint64_t full
    s.n = load(rows, s.adj)
    s.k = k
    s.budget = <int64_t>min(budget, 2 ** 62)
    s.count = 0
    full = low_bits(s.n)
    for v in range(s.n):
        s.path[0] = v
        r = path_dfs(&s, v, 1, (<uint64_t>1) << v, full)
        if r == -1:
            return BUDGET, None, s.count
        if r == 1:
            return FOUND, [s.path[i] for i in range(k)], s.count
    return ABSENT, None, s.count


# ---------------------------------------------------------- closing edges

cdef uint64_t closed_rec(const uint64_t* adj, int x, int e, uint64_t visited,
                         int v, uint64_t mask, int maxk, uint64_t found) noexcept nogil:
    cdef uint64_t cand = adj[x] & ~visited & ~((<uint64_t>1) << v)
    cdef uint64_t low, bit
    cdef int w, e1 = e + 1
    while cand:
        low = cand & (~cand + 1)
        w = ctz(cand)
        cand ^= low
        if (adj[w] >> v) & 1:
            bit = (<uint64_t>1) << (e1 + 2)
            if mask & bit:
                found |= bit
                if found == mask:
                    return found
        if e1 + 3 <= maxk:
            found = closed_rec(adj, w, e1, visited | low, v, mask, maxk, found)
            if found == mask:
                return found
    return found


cdef inline uint64_t closed_c(const uint64_t* adj, int u, int v,
                              uint64_t mask) noexcept nogil:
    if not mask:
        return 0
    cdef int maxk = 63 - __builtin_clzll(mask)
    return closed_rec(adj, u, 0, (<uint64_t>1) << u, v, mask, maxk, 0)


def closed_lengths(rows, int u, int v, mask):
    cdef uint64_t adj[MAXN]
    if mask >> 64:
        # length 64 does not fit a machine word
        from . import _pykernels
        return _pykernels.closed_lengths(rows, u, v, mask)
    load(rows, adj)
    return closed_c(adj, u, v, <uint64_t>mask)


# ---------------------------------------------------------- coloring tree

cdef struct Tree:
    uint64_t red[MAXN]
    uint64_t blue[MAXN]
    int us[MAXM]
    int vs[MAXM]
    int colors[MAXM]
    int m
    int start
    int split_depth
    uint64_t target
    bint uniform
    bint prune
    bint collect
    int64_t budget
    int fail_depth
    int64_t nodes
    int64_t leaves
    int64_t cuts
    uint64_t covered


cdef inline bint tree_satisfied(Tree* t, uint64_t sr, uint64_t sb) noexcept nogil:
    if t.uniform:
        return (sr & t.target) == t.target or (sb & t.target) == t.target
    return ((sr | sb) & t.target) == t.target


cdef inline void tree_add(Tree* t, int d, int c, uint64_t* sr, uint64_t* sb) noexcept nogil:
    cdef int u = t.us[d], v = t.vs[d]
    cdef uint64_t query
    if c == 0:
        if t.uniform:
            query = t.target & ~sr[0]
        else:
            query = t.target & ~(sr[0] | sb[0])
        if query:
            sr[0] |= closed_c(t.red, u, v, query)
        t.red[u] |= (<uint64_t>1) << v
        t.red[v] |= (<uint64_t>1) << u
    else:
        if t.uniform:
            query = t.target & ~sb[0]
        else:
            query = t.target & ~(sr[0] | sb[0])
        if query:
            sb[0] |= closed_c(t.blue, u, v, query)
        t.blue[u] |= (<uint64_t>1) << v
        t.blue[v] |= (<uint64_t>1) << u
    t.colors[d] = c


cdef inline void tree_remove(Tree* t, int d, int c) noexcept nogil:
    cdef int u = t.us[d], v = t.vs[d]
    if c == 0:
        t.red[u] &= ~((<uint64_t>1) << v)
        t.red[v] &= ~((<uint64_t>1) << u)
    else:
        t.blue[u] &= ~((<uint64_t>1) << v)
        t.blue[v] &= ~((<uint64_t>1) << u)


cdef int tree_visit(Tree* t, int d, uint64_t sr, uint64_t sb,
                    list tasks, list collected) except -2:
    # 0 continue, 1 counterexample, -1 budget
    cdef bint ok
    cdef int c, r, i
    cdef uint64_t nsr, nsb
    if d == t.split_depth and d > t.start and d < t.m:
        tasks.append([t.colors[i] for i in range(d)])
        return 0
    if t.nodes >= t.budget:
        t.fail_depth = d
        return -1
    t.nodes += 1
    ok = tree_satisfied(t, sr, sb)
    if ok and t.prune and d < t.m:
        t.cuts += 1
        t.covered += (<uint64_t>1) << (t.m - d)
        return 0
    if d == t.m:
        t.leaves += 1
        t.covered += 1
        if not ok:
            if t.collect:
                collected.append([t.colors[i] for i in range(d)])
                return 0
            return 1
        return 0
    for c in range(2):
        nsr = sr
        nsb = sb
        tree_add(t, d, c, &nsr, &nsb)
        r = tree_visit(t, d + 1, nsr, nsb, tasks, collected)
        tree_remove(t, d, c)
        if r != 0:
            return r
    return 0


def coloring_tree(int n, us, vs, target, bint uniform, bint prune, budget,
                  prefix, int split_depth, bint collect=False):
    cdef Tree* t
    cdef int d, i, r, status
    cdef uint64_t sr = 0, sb = 0
    cdef list tasks = []
    cdef list collected = []
    if n > MAXN:
        raise ValueError("graph order exceeds 64")
    if len(us) > 63:
        raise ValueError("coloring tree supports at most 63 edges")
    t = <Tree*>calloc(1, sizeof(Tree))
    if t == NULL:
        raise MemoryError()
    try:
        t.m = len(us)
        for i in range(t.m):
            t.us[i] = us[i]
            t.vs[i] = vs[i]
        t.target = <uint64_t>target
        t.uniform = uniform
        t.prune = prune
        t.collect = collect
        t.budget = <int64_t>min(budget, 2 ** 62)
        t.start = len(prefix)
        t.split_depth = split_depth
        for d in range(t.start):
            tree_add(t, d, prefix[d], &sr, &sb)
        r = tree_visit(t, t.start, sr, sb, tasks, collected)
        witness = None
        if r == 1:
            status = TREE_COUNTEREXAMPLE
            witness = [t.colors[i] for i in range(t.m)]
        elif r == -1:
            status = TREE_BUDGET
            # unexplored remainder: the interrupted node, then pending BLUE siblings
            d = t.fail_depth
            tasks.append([t.colors[i] for i in range(d)])
            for d in range(t.fail_depth - 1, t.start - 1, -1):
                if t.colors[d] == 0:
                    tasks.append([t.colors[i] for i in range(d)] + [1])
        else:
            status = TREE_DONE
        return (status, t.nodes, t.leaves, t.cuts, int(t.covered), witness,
                tasks, collected)
    finally:
        free(t)
