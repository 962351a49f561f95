"""Pure-Python kernels: solution validity, collapsing, hierarchical greedy.

The compiled twin in _ckernels.pyx implements the same functions with the
same iteration order; both must stay behaviourally identical (the tests
cross-validate them). All functions take a hgraph.KernelArrays plus int64
numpy counter arrays and mutate the counters in place.
"""

from __future__ import annotations

BACKEND = "python"

FLAG_BALANCED = 1
FLAG_CONNECTED = 2
FLAG_COVERS = 4
FLAG_EPSILON = 8


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent: list[int], a: int, b: int) -> None:
    ra = _find(parent, a)
    rb = _find(parent, b)
    if ra != rb:
        parent[ra] = rb


def solution_flags(g, up, down) -> int:
    """Bitmask of balanced / connected / covers-inputs / touches-epsilon."""
    pref = g.pref.tolist()
    suff = g.suff.tolist()
    n = len(pref)
    u = up.tolist()
    d = down.tolist()
    indeg = [0] * n
    outdeg = [0] * n
    touched = [False] * n
    parent = list(range(n))
    for v in range(1, n):
        uv = u[v]
        if uv:
            p = pref[v]
            outdeg[p] += uv
            indeg[v] += uv
            _union(parent, p, v)
            touched[p] = True
            touched[v] = True
        dv = d[v]
        if dv:
            s = suff[v]
            outdeg[v] += dv
            indeg[s] += dv
            _union(parent, v, s)
            touched[v] = True
            touched[s] = True
    flags = 0
    if indeg == outdeg:
        flags |= FLAG_BALANCED
    root = -1
    connected = True
    for v in range(n):
        if touched[v]:
            r = _find(parent, v)
            if root < 0:
                root = r
            elif r != root:
                connected = False
                break
    if connected:
        flags |= FLAG_CONNECTED
    if all(touched[iv] for iv in g.inputs.tolist()):
        flags |= FLAG_COVERS
    if touched[0]:
        flags |= FLAG_EPSILON
    return flags


def ca_inplace(g, up, down, trace=None, repeat_levels=False) -> int:
    """Normalize a solution by collapsing top-down; returns collapse count.

    Levels are processed in descending order; within a level, vertices in
    ascending lexicographic order; at each vertex, pairs are collapsed while
    the result stays a valid solution. With repeat_levels the level pass is
    re-run until it performs no collapse.
    """
    pref = g.pref.tolist()
    suff = g.suff.tolist()
    level_of = g.level_of.tolist()
    level_start = g.level_start.tolist()
    inputs = g.inputs.tolist()
    n = len(pref)
    u = up.tolist()
    d = down.tolist()
    parent = [0] * n
    touched = [False] * n

    def still_valid() -> bool:
        # balance is preserved by every collapse; probe the other three
        for i in range(n):
            parent[i] = i
            touched[i] = False
        for v in range(1, n):
            if u[v]:
                p = pref[v]
                _union(parent, p, v)
                touched[p] = True
                touched[v] = True
            if d[v]:
                s = suff[v]
                _union(parent, v, s)
                touched[v] = True
                touched[s] = True
        if not touched[0]:
            return False
        for iv in inputs:
            if not touched[iv]:
                return False
        root = _find(parent, 0)
        for v in range(1, n):
            if touched[v] and _find(parent, v) != root:
                return False
        return True

    performed = 0
    max_level = len(level_start) - 2
    for lvl in range(max_level, 0, -1):
        above_one = lvl > 1
        while True:
            changed = False
            for v in range(level_start[lvl], level_start[lvl + 1]):
                while u[v] > 0 and d[v] > 0:
                    u[v] -= 1
                    d[v] -= 1
                    if above_one:
                        d[pref[v]] += 1
                        u[suff[v]] += 1
                    if still_valid():
                        performed += 1
                        changed = True
                        if trace is not None:
                            trace.append((v, u[v], d[v]))
                    else:
                        u[v] += 1
                        d[v] += 1
                        if above_one:
                            d[pref[v]] -= 1
                            u[suff[v]] -= 1
                        break
            if not (repeat_levels and changed):
                break
    up[:] = u
    down[:] = d
    return performed


def gha_fill(g, up, down, connect=True, snapshot_cb=None) -> None:
    """Build a solution greedily from the top level down.

    Starts from the per-input arc pairs. A vertex imbalanced against the
    level above is balanced with its own lower arcs. A balanced vertex gets
    a last-chance arc pair only when its whole component is balanced, does
    not reach the empty string, and the vertex is the lexicographically
    largest among the component's shortest strings. With connect=False the
    last-chance rule is disabled and the result is a cycle cover.
    """
    pref = g.pref.tolist()
    suff = g.suff.tolist()
    level_of = g.level_of.tolist()
    level_start = g.level_start.tolist()
    child_start = g.child_start.tolist()
    child_flat = g.child_flat.tolist()
    parent_start = g.parent_start.tolist()
    parent_flat = g.parent_flat.tolist()
    n = len(pref)
    u = [0] * n
    d = [0] * n
    for iv in g.inputs.tolist():
        u[iv] = 1
        d[iv] = 1
    mark = [0] * n
    epoch = 0
    max_level = len(level_start) - 2
    for lvl in range(max_level, 0, -1):
        for v in range(level_start[lvl], level_start[lvl + 1]):
            in_above = 0
            for i in range(parent_start[v], parent_start[v + 1]):
                in_above += d[parent_flat[i]]
            out_above = 0
            for i in range(child_start[v], child_start[v + 1]):
                out_above += u[child_flat[i]]
            if in_above != out_above:
                if in_above > out_above:
                    d[v] += in_above - out_above
                else:
                    u[v] += out_above - in_above
                continue
            if not connect:
                continue
            if in_above == 0 and u[v] == 0 and d[v] == 0:
                continue
            # scan the weakly connected component of v
            epoch += 1
            mark[v] = epoch
            stack = [v]
            eulerian = True
            has_eps = False
            min_lvl = level_of[v]
            best = v
            while stack:
                x = stack.pop()
                if x == 0:
                    has_eps = True
                    break
                lx = level_of[x]
                if lx < min_lvl:
                    min_lvl = lx
                    best = x
                elif lx == min_lvl and x > best:
                    best = x
                indeg = u[x]
                outdeg = d[x]
                for i in range(parent_start[x], parent_start[x + 1]):
                    z = parent_flat[i]
                    dz = d[z]
                    if dz:
                        indeg += dz
                        if mark[z] != epoch:
                            mark[z] = epoch
                            stack.append(z)
                for i in range(child_start[x], child_start[x + 1]):
                    w = child_flat[i]
                    uw = u[w]
                    if uw:
                        outdeg += uw
                        if mark[w] != epoch:
                            mark[w] = epoch
                            stack.append(w)
                if u[x] and mark[pref[x]] != epoch:
                    mark[pref[x]] = epoch
                    stack.append(pref[x])
                if d[x] and mark[suff[x]] != epoch:
                    mark[suff[x]] = epoch
                    stack.append(suff[x])
                if indeg != outdeg:
                    eulerian = False
                    break
            if eulerian and not has_eps and best == v:
                u[v] += 1
                d[v] += 1
        if snapshot_cb is not None:
            up[:] = u
            down[:] = d
            snapshot_cb(lvl)
    up[:] = u
    down[:] = d
