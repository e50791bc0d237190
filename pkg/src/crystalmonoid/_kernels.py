"""Pure-Python versions of the hot loops.

The compiled module ``_speedups`` exposes the same functions with the same
signatures; :mod:`crystalmonoid.kernels` picks one at import time.
"""


def bracket(word, offset, eps, phi):
    """Signed bracketing of ``word`` for one Kashiwara label.

    ``eps[x + offset]`` and ``phi[x + offset]`` are the numbers of ``-`` and
    ``+`` symbols contributed by the letter ``x``.  Returns
    ``(e_count, f_count, e_pos, f_pos)`` where ``e_pos`` is the index of the
    letter owning the rightmost surviving ``-`` and ``f_pos`` the index of the
    letter owning the leftmost surviving ``+`` (``-1`` when absent).
    """
    e_count = 0
    e_pos = -1
    # open '+' symbols, as parallel stacks of (position, multiplicity)
    stack_pos = []
    stack_cnt = []
    for pos, x in enumerate(word):
        k = x + offset
        minus = eps[k]
        while minus and stack_cnt:
            top = stack_cnt[-1]
            if top > minus:
                stack_cnt[-1] = top - minus
                minus = 0
            else:
                minus -= top
                stack_cnt.pop()
                stack_pos.pop()
        if minus:
            e_count += minus
            e_pos = pos
        plus = phi[k]
        if plus:
            stack_pos.append(pos)
            stack_cnt.append(plus)
    f_count = sum(stack_cnt)
    f_pos = stack_pos[0] if stack_pos else -1
    return e_count, f_count, e_pos, f_pos


def rewrite_leftmost(word, nsym, rule_of, rhs_start, rhs_len, rhs_flat, decreasing, max_steps):
    """Leftmost-redex rewriting of a word over column symbols.

    ``rule_of[s * nsym + t]`` is the index of the rule with left-hand side
    ``(s, t)`` or ``-1``.  The right-hand side of rule ``r`` is
    ``rhs_flat[rhs_start[r]:rhs_start[r] + rhs_len[r]]``.  Returns
    ``(normal_form, steps, bad_rule)`` where ``bad_rule`` is the first rule
    applied that does not decrease the termination order (``-1`` if none).
    Raises ``RuntimeError`` when ``max_steps`` is exceeded.
    """
    w = list(word)
    i = 0
    steps = 0
    bad = -1
    while i + 1 < len(w):
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
        w[i:i + 2] = rhs_flat[start:start + rhs_len[r]]
        if i:
            i -= 1
    return tuple(w), steps, bad
