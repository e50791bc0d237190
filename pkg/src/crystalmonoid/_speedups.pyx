# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops in :mod:`crystalmonoid._kernels`."""

from libc.stdlib cimport malloc, free, realloc


def bracket(tuple word, int offset, const int[:] eps, const int[:] phi):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t pos
    cdef int k, minus, plus, top
    cdef long e_count = 0, f_count = 0
    cdef Py_ssize_t e_pos = -1, f_pos = -1
    cdef Py_ssize_t depth = 0, bottom = 0
    cdef Py_ssize_t *stack_pos
    cdef int *stack_cnt
    if n == 0:
        return 0, 0, -1, -1
    stack_pos = <Py_ssize_t *> malloc(n * sizeof(Py_ssize_t))
    stack_cnt = <int *> malloc(n * sizeof(int))
    if stack_pos == NULL or stack_cnt == NULL:
        free(stack_pos)
        free(stack_cnt)
        raise MemoryError()
    try:
        for pos in range(n):
            k = <int> word[pos] + offset
            minus = eps[k]
            while minus and depth:
                top = stack_cnt[depth - 1]
                if top > minus:
                    stack_cnt[depth - 1] = top - minus
                    minus = 0
                else:
                    minus -= top
                    depth -= 1
            if minus:
                e_count += minus
                e_pos = pos
            plus = phi[k]
            if plus:
                stack_pos[depth] = pos
                stack_cnt[depth] = plus
                depth += 1
        for pos in range(depth):
            f_count += stack_cnt[pos]
        if depth:
            f_pos = stack_pos[0]
    finally:
        free(stack_pos)
        free(stack_cnt)
    return e_count, f_count, e_pos, f_pos


def rewrite_leftmost(tuple word, int nsym, const int[:] rule_of, const int[:] rhs_start,
                     const int[:] rhs_len, const int[:] rhs_flat, const char[:] decreasing,
                     long max_steps):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t cap = n + 4
    cdef Py_ssize_t length = n, i = 0, j, start, rl
    cdef int r
    cdef long steps = 0
    cdef int bad = -1
    cdef int *w = <int *> malloc(cap * sizeof(int))
    if w == NULL:
        raise MemoryError()
    try:
        for j in range(n):
            w[j] = <int> word[j]
        while i + 1 < length:
            r = rule_of[w[i] * nsym + w[i + 1]]
            if r < 0:
                i += 1
                continue
            steps += 1
            if steps > max_steps:
                raise RuntimeError("rewriting exceeded %d steps" % max_steps)
            if bad < 0 and not decreasing[r]:
                bad = r
            start = rhs_start[r]
            rl = rhs_len[r]
            if rl > 2 and length + rl - 2 > cap:
                cap = 2 * cap + rl
                w = <int *> _grow(w, cap)
            if rl != 2:
                # shift the tail to make room for (or close up after) the rhs
                if rl < 2:
                    for j in range(i + 2, length):
                        w[j - 2 + rl] = w[j]
                else:
                    j = length - 1
                    while j >= i + 2:
                        w[j + rl - 2] = w[j]
                        j -= 1
                length += rl - 2
            for j in range(rl):
                w[i + j] = rhs_flat[start + j]
            if i:
                i -= 1
        result = tuple([w[j] for j in range(length)])
    finally:
        free(w)
    return result, steps, bad


cdef void *_grow(int *w, Py_ssize_t cap) except NULL:
    cdef void *p = realloc(w, cap * sizeof(int))
    if p == NULL:
        raise MemoryError()
    return p
