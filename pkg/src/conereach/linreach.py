"""Reachable and null-controllable subspaces of linear processes.

The forward iteration S_0 = {0}, S_{k+1} = L(S_k) is a nondecreasing chain of
subspaces of R^n, so it stabilizes within n steps; the backward variant runs
the same iteration on the inverse process.
"""

from __future__ import annotations

from .process import LinearProcess
from .rational import Subspace


def reach_subspace(process: LinearProcess, backward: bool = False) -> tuple[Subspace, int]:
    """R(L) (or N(L) when backward) with the stabilization index.

    Stabilization is detected by dimension equality of consecutive iterates,
    which is equivalent to set equality for a nested chain. Exceeding n steps
    would contradict the dimension bound and trips an assertion.
    """
    work = process.inverse() if backward else process
    n = process.n
    current = Subspace.zero(n)
    steps = 0
    while True:
        nxt = work.image_of(current)
        if nxt.dim == current.dim:
            return current, steps
        current = nxt
        steps += 1
        assert steps <= n, "subspace chain exceeded the ambient dimension bound"
