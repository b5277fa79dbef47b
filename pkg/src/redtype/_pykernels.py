"""Pure-Python membership-sieve kernels.

These are the hot inner loops of the package: every semigroup construction
and every enumeration step runs through them.  A compiled twin lives in
``_ckernels.pyx``; both implementations must stay behaviourally identical
(see tests/test_kernels.py).

Conventions shared by both backends:

* ``gens`` is a sorted tuple of distinct positive integers with gcd 1.
* A membership table is a ``bytearray`` where ``table[i] == 1`` iff ``i``
  belongs to the semigroup.  Tables always cover ``[0, conductor + max(gens)]``.
"""


def member_table(gens):
    """Sieve membership for the semigroup generated by ``gens``.

    Returns ``(table, conductor)``.  The sieve bound grows geometrically
    until a run of ``gens[0]`` consecutive members appears; the start of the
    first such run is the conductor (adding the smallest generator repeatedly
    covers everything beyond it, and no earlier start is possible).
    """
    b1 = gens[0]
    gmax = gens[-1]
    bound = 2 * gmax + 2
    table = bytearray(bound)
    table[0] = 1
    start = 1
    while True:
        for i in range(start, bound):
            for g in gens:
                if g > i:
                    break
                if table[i - g]:
                    table[i] = 1
                    break
        run = 0
        conductor = -1
        for i in range(bound):
            run = run + 1 if table[i] else 0
            if run == b1:
                conductor = i - b1 + 1
                break
        needed = conductor + gmax + 1
        if conductor >= 0 and bound >= needed:
            return table[:needed], conductor
        start = bound
        bound *= 2
        table = table + bytearray(bound - start)


def minimal_generators(table, conductor, b1):
    """Members that are not a sum of two nonzero members.

    Every minimal generator is at most ``conductor + b1`` (anything larger
    splits off ``b1``), so the scan stops there.
    """
    out = []
    for m in range(1, conductor + b1 + 1):
        if not table[m]:
            continue
        for a in range(b1, m // 2 + 1):
            if table[a] and table[m - a]:
                break
        else:
            out.append(m)
    return out


def pseudo_frobenius(table, conductor, gens):
    """Gaps x with x + g a member for every generator g.

    Testing against generators suffices: every nonzero member is a sum of
    generators.  Requires ``len(table) > conductor - 1 + max(gens)``.
    """
    out = []
    for x in range(1, conductor):
        if table[x]:
            continue
        for g in gens:
            if not table[x + g]:
                break
        else:
            out.append(x)
    return out


def count_gaps(table, conductor):
    """Number of non-members below the conductor (the genus)."""
    n = 0
    for i in range(conductor):
        if not table[i]:
            n += 1
    return n
