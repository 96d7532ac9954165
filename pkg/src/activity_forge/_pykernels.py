"""Pure-Python kernels. Reference semantics for the compiled ``_ckernels``.

Every function takes the graph as ``(n, us, vs)`` (vertex count plus the two
endpoint tuples indexed by edge id) and works on integer bitmasks.
"""


def _component_count(n, us, vs):
    parent = list(range(n))
    k = n
    for a, b in zip(us, vs):
        while parent[a] != a:
            a = parent[a]
        while parent[b] != b:
            b = parent[b]
        if a != b:
            parent[a] = b
            k -= 1
    return k


def spanning_forests(n, us, vs):
    """All spanning-forest masks, in lexicographic order of their sorted id tuples.

    Include-first backtracking over edge ids with a rollback union-find. An
    edge joining two current components is only skipped when the rest of the
    edges can still join them, so every branch ends in a spanning forest.
    """
    m = len(us)
    target = n - _component_count(n, us, vs)
    parent = list(range(n))
    size = [1] * n
    out = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def reconnectable(j, a, b):
        aux = {}

        def f(x):
            while x in aux:
                x = aux[x]
            return x

        for t in range(j + 1, m):
            x, y = f(find(us[t])), f(find(vs[t]))
            if x != y:
                aux[x] = y
                if f(a) == f(b):
                    return True
        return False

    def rec(j, chosen, mask):
        if chosen == target:
            out.append(mask)
            return
        a, b = find(us[j]), find(vs[j])
        if a == b:
            rec(j + 1, chosen, mask)
            return
        if size[a] > size[b]:
            a, b = b, a
        parent[a] = b
        size[b] += size[a]
        rec(j + 1, chosen + 1, mask | (1 << j))
        size[b] -= size[a]
        parent[a] = a
        if reconnectable(j, a, b):
            rec(j + 1, chosen, mask)

    rec(0, 0, 0)
    return out


def forest_activity(n, us, vs, ranks, forest):
    """``(internal_mask, external_mask)`` of a spanning forest.

    Each non-forest edge is compared against its fundamental cycle: it is
    externally active when it outranks every forest edge on the cycle, and
    every forest edge it outranks has a larger replacement across its cut,
    so it cannot be internally active.
    """
    m = len(us)
    adj = [[] for _ in range(n)]
    mask = forest
    j = 0
    while mask:
        if mask & 1:
            adj[us[j]].append((vs[j], j))
            adj[vs[j]].append((us[j], j))
        mask >>= 1
        j += 1
    up = [-1] * n
    pedge = [-1] * n
    depth = [-1] * n
    for root in range(n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y, e in adj[x]:
                if depth[y] < 0:
                    depth[y] = depth[x] + 1
                    up[y] = x
                    pedge[y] = e
                    stack.append(y)
    internal = forest
    external = 0
    for j in range(m):
        bit = 1 << j
        if forest & bit:
            continue
        u, v = us[j], vs[j]
        r = ranks[j]
        top = 0
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            e = pedge[u]
            re = ranks[e]
            if re > top:
                top = re
            if re < r:
                internal &= ~(1 << e)
            u = up[u]
        if r > top:
            external |= bit
    return internal, external


def forest_activities(n, us, vs, ranks):
    """``[(forest, internal, external), ...]`` for every spanning forest."""
    return [(f,) + forest_activity(n, us, vs, ranks, f) for f in spanning_forests(n, us, vs)]


def activity_histogram(n, us, vs, ranks):
    """``{(i, e): number of spanning forests with those activity counts}``."""
    hist = {}
    for f in spanning_forests(n, us, vs):
        i, e = forest_activity(n, us, vs, ranks, f)
        key = (i.bit_count(), e.bit_count())
        hist[key] = hist.get(key, 0) + 1
    return hist


def subset_histogram(n, us, vs):
    """``{(k(A), |A|): count}`` over all 2^m edge subsets."""
    m = len(us)
    parent = list(range(n))
    size = [1] * n
    hist = {}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(j, k, s):
        if j == m:
            hist[(k, s)] = hist.get((k, s), 0) + 1
            return
        rec(j + 1, k, s)
        a, b = find(us[j]), find(vs[j])
        if a == b:
            rec(j + 1, k, s + 1)
            return
        if size[a] > size[b]:
            a, b = b, a
        parent[a] = b
        size[b] += size[a]
        rec(j + 1, k - 1, s + 1)
        size[b] -= size[a]
        parent[a] = a

    rec(0, n, 0)
    return hist


def subset_profile_histogram(n, us, vs):
    """``{((k_1, ..., k_n), |A|): count}`` over all 2^m edge subsets."""
    m = len(us)
    parent = list(range(n))
    size = [1] * n
    cnt = [0] * (n + 2)
    cnt[1] = n
    hist = {}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(j, s):
        if j == m:
            key = (tuple(cnt[1:n + 1]), s)
            hist[key] = hist.get(key, 0) + 1
            return
        rec(j + 1, s)
        a, b = find(us[j]), find(vs[j])
        if a == b:
            rec(j + 1, s + 1)
            return
        if size[a] > size[b]:
            a, b = b, a
        sa, sb = size[a], size[b]
        parent[a] = b
        size[b] = sa + sb
        cnt[sa] -= 1
        cnt[sb] -= 1
        cnt[sa + sb] += 1
        rec(j + 1, s + 1)
        cnt[sa + sb] -= 1
        cnt[sb] += 1
        cnt[sa] += 1
        size[b] = sb
        parent[a] = a

    rec(0, 0)
    return hist
