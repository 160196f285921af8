"""Pure-Python search kernels.

Reference implementation of the hot loops. ``_ckernels.pyx`` mirrors every
function here with the same signature and return values; ``_backend`` picks
whichever is importable. Graphs are passed as a sequence of adjacency rows,
one int bitmask per vertex.

Status codes returned by the searches:

    FOUND = 1, ABSENT = 0, BUDGET = -1

``coloring_tree`` uses its own codes: DONE = 0, COUNTEREXAMPLE = 1, BUDGET = 2.
"""

FOUND = 1
ABSENT = 0
BUDGET = -1

TREE_DONE = 0
TREE_COUNTEREXAMPLE = 1
TREE_BUDGET = 2


class _OutOfBudget(Exception):
    pass


def _reach(adj, v, avail):
    """Vertices reachable from ``v`` through ``avail`` (``v`` excluded)."""
    seen = 0
    frontier = adj[v] & avail
    while frontier:
        seen |= frontier
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & avail & ~seen
    return seen


def _dist_to(adj, v, avail, targets, limit):
    """BFS distance from ``v`` to ``targets`` walking inside ``avail``.

    Returns ``limit + 1`` when the distance exceeds ``limit``.
    """
    seen = 1 << v
    frontier = 1 << v
    d = 0
    while d < limit:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        d += 1
        if nxt & targets:
            return d
        frontier = nxt & avail & ~seen
        if not frontier:
            break
        seen |= frontier
    return limit + 1


def find_cycle(adj, k, budget, canonical=True):
    """Search for a cycle on exactly ``k`` vertices.

    With ``canonical`` the cycle is rooted at its smallest vertex, so the
    DFS from anchor ``a`` only walks through vertices greater than ``a``.
    Returns ``(status, witness, expansions, seen)`` where ``seen`` is a
    bitmask of every cycle length closed along the way.
    """
    n = len(adj)
    full = (1 << n) - 1
    counter = [0]
    seen_lengths = [0]
    path = []

    def dfs(a, v, depth, visited, allowed):
        counter[0] += 1
        if counter[0] > budget:
            raise _OutOfBudget
        if depth >= 3 and (adj[v] >> a) & 1:
            seen_lengths[0] |= 1 << depth
        avail = allowed & ~visited
        targets = adj[a] & avail
        if depth == k - 1:
            cand = adj[v] & targets
            if cand:
                w = (cand & -cand).bit_length() - 1
                path.append(w)
                return True
            return False
        remaining = k - depth
        if _dist_to(adj, v, avail, targets, remaining) > remaining:
            return False
        if (_reach(adj, v, avail)).bit_count() < remaining:
            return False
        cand = adj[v] & avail
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            path.append(w)
            if dfs(a, w, depth + 1, visited | low, allowed):
                return True
            path.pop()
        return False

    try:
        for a in range(n):
            if canonical:
                allowed = full & ~((2 << a) - 1)
            else:
                allowed = full & ~(1 << a)
            if (adj[a] & allowed).bit_count() < 2:
                continue
            if (_reach(adj, a, allowed)).bit_count() < k - 1:
                continue
            path[:] = [a]
            if dfs(a, a, 1, 1 << a, allowed):
                seen_lengths[0] |= 1 << k
                return FOUND, list(path), counter[0], seen_lengths[0]
    except _OutOfBudget:
        return BUDGET, None, counter[0], seen_lengths[0]
    return ABSENT, None, counter[0], seen_lengths[0]


def find_long_cycle(adj, t, budget):
    """Search for a cycle on at least ``t`` vertices (``t >= 3``)."""
    n = len(adj)
    full = (1 << n) - 1
    counter = [0]
    path = []

    def dfs(a, v, depth, visited, allowed):
        counter[0] += 1
        if counter[0] > budget:
            raise _OutOfBudget
        if depth >= t and depth >= 3 and (adj[v] >> a) & 1:
            return True
        avail = allowed & ~visited
        targets = adj[a] & avail
        reach = _reach(adj, v, avail)
        if not (reach & targets) or depth + reach.bit_count() < t:
            return False
        cand = adj[v] & avail
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            path.append(w)
            if dfs(a, w, depth + 1, visited | low, allowed):
                return True
            path.pop()
        return False

    try:
        for a in range(n):
            allowed = full & ~((2 << a) - 1)
            if (adj[a] & allowed).bit_count() < 2:
                continue
            if 1 + (_reach(adj, a, allowed)).bit_count() < t:
                continue
            path[:] = [a]
            if dfs(a, a, 1, 1 << a, allowed):
                return FOUND, list(path), counter[0]
    except _OutOfBudget:
        return BUDGET, None, counter[0]
    return ABSENT, None, counter[0]


def find_path(adj, k, budget):
    """Search for a simple path on exactly ``k`` vertices."""
    n = len(adj)
    full = (1 << n) - 1
    counter = [0]
    path = []

    def dfs(v, depth, visited):
        counter[0] += 1
        if counter[0] > budget:
            raise _OutOfBudget
        if depth == k:
            return True
        avail = full & ~visited
        if depth + (_reach(adj, v, avail)).bit_count() < k:
            return False
        cand = adj[v] & avail
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            path.append(w)
            if dfs(w, depth + 1, visited | low):
                return True
            path.pop()
        return False

    try:
        for s in range(n):
            path[:] = [s]
            if dfs(s, 1, 1 << s):
                return FOUND, list(path), counter[0]
    except _OutOfBudget:
        return BUDGET, None, counter[0]
    return ABSENT, None, counter[0]


def closed_lengths(adj, u, v, mask):
    """Cycle lengths in ``mask`` that a new edge ``uv`` would close.

    Bit ``k`` of the result is set when ``adj`` holds a simple ``u``-``v``
    path with ``k - 1`` edges. The edge ``uv`` itself must be absent.
    """
    if not mask:
        return 0
    maxk = mask.bit_length() - 1
    found = 0
    # stack of (vertex, edges so far, visited, candidates left)
    start = 1 << u
    stack = [(u, 0, start, adj[u] & ~start & ~(1 << v))]
    while stack:
        x, e, visited, cand = stack[-1]
        if not cand:
            stack.pop()
            continue
        low = cand & -cand
        stack[-1] = (x, e, visited, cand ^ low)
        w = low.bit_length() - 1
        e1 = e + 1
        if (adj[w] >> v) & 1:
            bit = 1 << (e1 + 2)
            if mask & bit:
                found |= bit
                if found == mask:
                    return found
        if e1 + 3 <= maxk:
            vis = visited | low
            stack.append((w, e1, vis, adj[w] & ~vis & ~(1 << v)))
    return found


def _pending(colors, start, depth):
    out = [list(colors[:depth])]
    for j in range(depth - 1, start - 1, -1):
        if colors[j] == 0:
            out.append(list(colors[:j]) + [1])
    return out


def coloring_tree(n, us, vs, target, uniform, prune, budget, prefix, split_depth,
                  collect=False):
    """Depth-first sweep over all red/blue colorings of an edge list.

    Edges ``(us[i], vs[i])`` are colored in order, RED (0) before BLUE (1).
    A node is *satisfied* when every length in ``target`` has a
    monochromatic cycle (per length, or in a single color when ``uniform``).
    Satisfaction is monotone in the partial coloring, so with ``prune`` a
    satisfied node accounts for its whole subtree without expanding it.

    The sweep starts below ``prefix`` (colors of the first edges). Nodes
    reached at ``split_depth`` are returned as task prefixes instead of
    being expanded.

    When the budget runs out, ``tasks`` also receives the unexplored rest of
    the sweep as prefixes (the interrupted node, then every pending BLUE
    sibling along its path, deepest first) and the counts cover exactly the
    work done, so resuming from ``tasks`` loses and repeats nothing.

    Returns ``(status, nodes, leaves, cuts, covered, witness, tasks,
    collected)``.
    """
    m = len(us)
    red = [0] * n
    blue = [0] * n
    colors = [0] * m
    sat = [0, 0]
    full_target = target
    state = {"nodes": 0, "leaves": 0, "cuts": 0, "covered": 0}
    tasks = []
    collected = []
    witness = [None]

    def satisfied(sr, sb):
        if uniform:
            return (sr & full_target) == full_target or (sb & full_target) == full_target
        return ((sr | sb) & full_target) == full_target

    def add(d, c, sr, sb):
        u = us[d]
        v = vs[d]
        if c == 0:
            query = full_target & ~sr if uniform else full_target & ~(sr | sb)
            if query:
                sr |= closed_lengths(red, u, v, query)
            red[u] |= 1 << v
            red[v] |= 1 << u
        else:
            query = full_target & ~sb if uniform else full_target & ~(sr | sb)
            if query:
                sb |= closed_lengths(blue, u, v, query)
            blue[u] |= 1 << v
            blue[v] |= 1 << u
        colors[d] = c
        return sr, sb

    def remove(d, c):
        u = us[d]
        v = vs[d]
        if c == 0:
            red[u] &= ~(1 << v)
            red[v] &= ~(1 << u)
        else:
            blue[u] &= ~(1 << v)
            blue[v] &= ~(1 << u)

    start = len(prefix)

    def visit(d, sr, sb):
        # returns True when the sweep must stop (counterexample or budget)
        if d == split_depth and d > start and d < m:
            tasks.append(list(colors[:d]))
            return False
        if state["nodes"] >= budget:
            raise _OutOfBudget(d)
        state["nodes"] += 1
        ok = satisfied(sr, sb)
        if ok and prune and d < m:
            state["cuts"] += 1
            state["covered"] += 1 << (m - d)
            return False
        if d == m:
            state["leaves"] += 1
            state["covered"] += 1
            if not ok:
                if collect:
                    collected.append(list(colors))
                    return False
                witness[0] = list(colors)
                return True
            return False
        for c in (0, 1):
            nsr, nsb = add(d, c, sr, sb)
            stop = visit(d + 1, nsr, nsb)
            remove(d, c)
            if stop:
                return True
        return False

    sr = sb = 0
    for d, c in enumerate(prefix):
        sr, sb = add(d, c, sr, sb)
    try:
        stop = visit(start, sr, sb)
        status = TREE_COUNTEREXAMPLE if stop else TREE_DONE
    except _OutOfBudget as exc:
        status = TREE_BUDGET
        tasks.extend(_pending(colors, start, exc.args[0]))
    return (status, state["nodes"], state["leaves"], state["cuts"],
            state["covered"], witness[0], tasks, collected)
