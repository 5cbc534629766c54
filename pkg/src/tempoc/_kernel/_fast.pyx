# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled shortest-path kernel. Semantics mirror _pure.sssp_csr exactly:
same relaxation thresholds, same (distance, node index) heap ordering, same
near-tie predecessor rule, so both backends produce identical trees."""

from libc.stdlib cimport free, malloc


cdef extern from "math.h":
    double INFINITY


cdef inline bint _less(double d1, int i1, double d2, int i2) nogil:
    return d1 < d2 or (d1 == d2 and i1 < i2)


def sssp_csr(const long long[::1] indptr, const int[::1] targets,
             const double[::1] weights, int source,
             double[::1] dist, int[::1] pred, double tol=1e-9):
    """Fill dist (float64) and pred (int32, -1 for none) in place."""
    cdef Py_ssize_t n = dist.shape[0]
    cdef Py_ssize_t m = targets.shape[0]
    cdef Py_ssize_t cap = m + 2
    cdef double* hkey = <double*> malloc(cap * sizeof(double))
    cdef int* hidx = <int*> malloc(cap * sizeof(int))
    cdef char* done = <char*> malloc(n if n > 0 else 1)
    if hkey == NULL or hidx == NULL or done == NULL:
        free(hkey); free(hidx); free(done)
        raise MemoryError()
    cdef Py_ssize_t size = 0, i, j, parent, child
    cdef long long k
    cdef int u, v
    cdef double d, nd, tk
    cdef int ti
    with nogil:
        for i in range(n):
            dist[i] = INFINITY
            pred[i] = -1
            done[i] = 0
        dist[source] = 0.0
        hkey[0] = 0.0
        hidx[0] = source
        size = 1
        while size > 0:
            d = hkey[0]
            u = hidx[0]
            size -= 1
            if size > 0:
                # move last entry to the root and sift down
                tk = hkey[size]
                ti = hidx[size]
                i = 0
                while True:
                    child = 2 * i + 1
                    if child >= size:
                        break
                    if child + 1 < size and _less(hkey[child + 1], hidx[child + 1],
                                                  hkey[child], hidx[child]):
                        child += 1
                    if _less(hkey[child], hidx[child], tk, ti):
                        hkey[i] = hkey[child]
                        hidx[i] = hidx[child]
                        i = child
                    else:
                        break
                hkey[i] = tk
                hidx[i] = ti
            if done[u]:
                continue
            done[u] = 1
            for k in range(indptr[u], indptr[u + 1]):
                v = targets[k]
                nd = d + weights[k]
                if nd < dist[v] - tol:
                    dist[v] = nd
                    pred[v] = u
                    # push (nd, v): append then sift up
                    j = size
                    size += 1
                    while j > 0:
                        parent = (j - 1) >> 1
                        if _less(nd, v, hkey[parent], hidx[parent]):
                            hkey[j] = hkey[parent]
                            hidx[j] = hidx[parent]
                            j = parent
                        else:
                            break
                    hkey[j] = nd
                    hidx[j] = v
                elif done[v] == 0 and nd <= dist[v] + tol:
                    if pred[v] != -1 and u < pred[v]:
                        pred[v] = u
    free(hkey)
    free(hidx)
    free(done)
