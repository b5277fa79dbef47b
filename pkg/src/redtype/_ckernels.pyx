# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled membership-sieve kernels.

Behavioural twin of ``_pykernels``; keep the two in lockstep.
"""
from cpython cimport array
import array


def member_table(gens):
    cdef array.array garr = array.array('l', gens)
    cdef long[::1] g = garr
    cdef Py_ssize_t ng = len(garr)
    cdef long b1 = g[0]
    cdef long gmax = g[ng - 1]
    cdef Py_ssize_t bound = 2 * gmax + 2
    cdef bytearray table = bytearray(bound)
    cdef unsigned char[::1] t = table
    t[0] = 1
    cdef Py_ssize_t start = 1
    cdef Py_ssize_t i, needed
    cdef Py_ssize_t j
    cdef long conductor, run, gv
    while True:
        for i in range(start, bound):
            for j in range(ng):
                gv = g[j]
                if gv > i:
                    break
                if t[i - gv]:
                    t[i] = 1
                    break
        run = 0
        conductor = -1
        for i in range(bound):
            if t[i]:
                run += 1
            else:
                run = 0
            if run == b1:
                conductor = i - b1 + 1
                break
        needed = conductor + gmax + 1
        if conductor >= 0 and bound >= needed:
            return table[:needed], conductor
        start = bound
        bound *= 2
        # concatenation, not resize: the memoryview keeps a buffer export
        table = table + bytearray(bound - start)
        t = table


def minimal_generators(table, conductor, b1):
    cdef const unsigned char[::1] t = table
    cdef long c = conductor
    cdef long b = b1
    cdef long m, a, half
    cdef bint split
    out = []
    for m in range(1, c + b + 1):
        if not t[m]:
            continue
        split = False
        half = m // 2
        for a in range(b, half + 1):
            if t[a] and t[m - a]:
                split = True
                break
        if not split:
            out.append(m)
    return out


def pseudo_frobenius(table, conductor, gens):
    cdef const unsigned char[::1] t = table
    cdef array.array garr = array.array('l', gens)
    cdef long[::1] g = garr
    cdef Py_ssize_t ng = len(garr)
    cdef long c = conductor
    cdef long x
    cdef Py_ssize_t j
    cdef bint ok
    out = []
    for x in range(1, c):
        if t[x]:
            continue
        ok = True
        for j in range(ng):
            if not t[x + g[j]]:
                ok = False
                break
        if ok:
            out.append(x)
    return out


def count_gaps(table, conductor):
    cdef const unsigned char[::1] t = table
    cdef long c = conductor
    cdef long i, n = 0
    for i in range(c):
        if not t[i]:
            n += 1
    return n
