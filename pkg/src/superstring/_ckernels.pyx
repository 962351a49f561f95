# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: behaviourally identical to _pykernels (see its module
docstring for the contracts). Keep the iteration order in the two files in
lockstep; the tests compare them on random instances.
"""

import numpy as np

BACKEND = "c"

FLAG_BALANCED = 1
FLAG_CONNECTED = 2
FLAG_COVERS = 4
FLAG_EPSILON = 8


cdef inline int _find(int[::1] parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline void _union(int[::1] parent, int a, int b) noexcept nogil:
    cdef int ra = _find(parent, a)
    cdef int rb = _find(parent, b)
    if ra != rb:
        parent[ra] = rb


cdef bint _probe_valid(int[::1] pref, int[::1] suff, int[::1] inputs,
                       long long[::1] u, long long[::1] d,
                       int[::1] parent, unsigned char[::1] touched) noexcept nogil:
    cdef int n = pref.shape[0]
    cdef int v, p, s, root, k
    for v in range(n):
        parent[v] = v
        touched[v] = 0
    for v in range(1, n):
        if u[v] > 0:
            p = pref[v]
            _union(parent, p, v)
            touched[p] = 1
            touched[v] = 1
        if d[v] > 0:
            s = suff[v]
            _union(parent, v, s)
            touched[v] = 1
            touched[s] = 1
    if not touched[0]:
        return 0
    for k in range(inputs.shape[0]):
        if not touched[inputs[k]]:
            return 0
    root = _find(parent, 0)
    for v in range(1, n):
        if touched[v] and _find(parent, v) != root:
            return 0
    return 1


def solution_flags(g, up, down):
    """Bitmask of balanced / connected / covers-inputs / touches-epsilon."""
    cdef int[::1] pref = g.pref
    cdef int[::1] suff = g.suff
    cdef int[::1] inputs = g.inputs
    cdef long long[::1] u = up
    cdef long long[::1] d = down
    cdef int n = pref.shape[0]
    indeg_arr = np.zeros(n, dtype=np.int64)
    outdeg_arr = np.zeros(n, dtype=np.int64)
    parent_arr = np.empty(n, dtype=np.int32)
    touched_arr = np.zeros(n, dtype=np.uint8)
    cdef long long[::1] indeg = indeg_arr
    cdef long long[::1] outdeg = outdeg_arr
    cdef int[::1] parent = parent_arr
    cdef unsigned char[::1] touched = touched_arr
    cdef int v, p, s, root, k
    cdef long long uv, dv
    cdef int flags = 0
    cdef bint connected = 1, balanced = 1
    for v in range(n):
        parent[v] = v
    for v in range(1, n):
        uv = u[v]
        if uv:
            p = pref[v]
            outdeg[p] += uv
            indeg[v] += uv
            _union(parent, p, v)
            touched[p] = 1
            touched[v] = 1
        dv = d[v]
        if dv:
            s = suff[v]
            outdeg[v] += dv
            indeg[s] += dv
            _union(parent, v, s)
            touched[v] = 1
            touched[s] = 1
    for v in range(n):
        if indeg[v] != outdeg[v]:
            balanced = 0
            break
    if balanced:
        flags |= FLAG_BALANCED
    root = -1
    for v in range(n):
        if touched[v]:
            if root < 0:
                root = _find(parent, v)
            elif _find(parent, v) != root:
                connected = 0
                break
    if connected:
        flags |= FLAG_CONNECTED
    for k in range(inputs.shape[0]):
        if not touched[inputs[k]]:
            break
    else:
        flags |= FLAG_COVERS
    if touched[0]:
        flags |= FLAG_EPSILON
    return flags


def ca_inplace(g, up, down, trace=None, repeat_levels=False):
    """Normalize a solution by collapsing top-down; returns collapse count."""
    cdef int[::1] pref = g.pref
    cdef int[::1] suff = g.suff
    cdef int[::1] level_start = g.level_start
    cdef int[::1] inputs = g.inputs
    cdef long long[::1] u = up
    cdef long long[::1] d = down
    cdef int n = pref.shape[0]
    parent_arr = np.empty(n, dtype=np.int32)
    touched_arr = np.empty(n, dtype=np.uint8)
    cdef int[::1] parent = parent_arr
    cdef unsigned char[::1] touched = touched_arr
    cdef int max_level = level_start.shape[0] - 2
    cdef int lvl, v
    cdef bint above_one, changed, repeat = repeat_levels
    cdef bint tracing = trace is not None
    cdef int performed = 0
    for lvl in range(max_level, 0, -1):
        above_one = lvl > 1
        while True:
            changed = 0
            for v in range(level_start[lvl], level_start[lvl + 1]):
                while u[v] > 0 and d[v] > 0:
                    u[v] -= 1
                    d[v] -= 1
                    if above_one:
                        d[pref[v]] += 1
                        u[suff[v]] += 1
                    if _probe_valid(pref, suff, inputs, u, d, parent, touched):
                        performed += 1
                        changed = 1
                        if tracing:
                            trace.append((v, int(u[v]), int(d[v])))
                    else:
                        u[v] += 1
                        d[v] += 1
                        if above_one:
                            d[pref[v]] -= 1
                            u[suff[v]] -= 1
                        break
            if not (repeat and changed):
                break
    return performed


def gha_fill(g, up, down, connect=True, snapshot_cb=None):
    """Build a solution greedily from the top level down (see _pykernels)."""
    cdef int[::1] pref = g.pref
    cdef int[::1] suff = g.suff
    cdef int[::1] level_of = g.level_of
    cdef int[::1] level_start = g.level_start
    cdef int[::1] inputs = g.inputs
    cdef int[::1] child_start = g.child_start
    cdef int[::1] child_flat = g.child_flat
    cdef int[::1] parent_start = g.parent_start
    cdef int[::1] parent_flat = g.parent_flat
    cdef long long[::1] u = up
    cdef long long[::1] d = down
    cdef int n = pref.shape[0]
    mark_arr = np.zeros(n, dtype=np.int64)
    stack_arr = np.empty(n, dtype=np.int32)
    cdef long long[::1] mark = mark_arr
    cdef int[::1] stack = stack_arr
    cdef long long epoch = 0
    cdef bint do_connect = connect
    cdef int max_level = level_start.shape[0] - 2
    cdef int lvl, v, x, z, w, i, top, lx, best, min_lvl
    cdef long long in_above, out_above, indeg, outdeg, dz, uw
    cdef bint eulerian, has_eps
    for v in range(n):
        u[v] = 0
        d[v] = 0
    for i in range(inputs.shape[0]):
        u[inputs[i]] = 1
        d[inputs[i]] = 1
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
            if not do_connect:
                continue
            if in_above == 0 and u[v] == 0 and d[v] == 0:
                continue
            epoch += 1
            mark[v] = epoch
            stack[0] = v
            top = 1
            eulerian = 1
            has_eps = 0
            min_lvl = level_of[v]
            best = v
            while top > 0:
                top -= 1
                x = stack[top]
                if x == 0:
                    has_eps = 1
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
                            stack[top] = z
                            top += 1
                for i in range(child_start[x], child_start[x + 1]):
                    w = child_flat[i]
                    uw = u[w]
                    if uw:
                        outdeg += uw
                        if mark[w] != epoch:
                            mark[w] = epoch
                            stack[top] = w
                            top += 1
                if u[x] and mark[pref[x]] != epoch:
                    mark[pref[x]] = epoch
                    stack[top] = pref[x]
                    top += 1
                if d[x] and mark[suff[x]] != epoch:
                    mark[suff[x]] = epoch
                    stack[top] = suff[x]
                    top += 1
                if indeg != outdeg:
                    eulerian = 0
                    break
            if eulerian and not has_eps and best == v:
                u[v] += 1
                d[v] += 1
        if snapshot_cb is not None:
            snapshot_cb(lvl)
