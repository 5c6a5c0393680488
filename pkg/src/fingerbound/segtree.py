"""Max segment tree over rank space, used as the staircase index.

Leaves hold last-touch times (0 = never touched). Beyond range maxima, the
tree answers the two directional threshold queries the staircase walks need:
rightmost leaf in a prefix with value above a threshold, and leftmost leaf in
a suffix with value above a threshold. Both run in O(log n).
"""

from __future__ import annotations


class MaxSegTree:
    __slots__ = ("n", "size", "tree")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"tree size must be positive, got {n}")
        self.n = n
        self.size = 1 << (n - 1).bit_length() if n > 1 else 1
        self.tree = [0] * (2 * self.size)

    def value_at(self, i: int) -> int:
        return self.tree[self.size + i]

    def raise_to(self, i: int, v: int) -> None:
        """Set leaf i to v; v must not be below the current value."""
        t = self.tree
        idx = self.size + i
        t[idx] = v
        idx >>= 1
        while idx and t[idx] < v:
            t[idx] = v
            idx >>= 1

    def max_in(self, lo: int, hi: int) -> int:
        """Maximum over leaves [lo, hi]; 0 when the range is empty."""
        if lo < 0:
            lo = 0
        if hi >= self.n:
            hi = self.n - 1
        if lo > hi:
            return 0
        t = self.tree
        best = 0
        l = lo + self.size
        r = hi + self.size + 1
        while l < r:
            if l & 1:
                if t[l] > best:
                    best = t[l]
                l += 1
            if r & 1:
                r -= 1
                if t[r] > best:
                    best = t[r]
            l >>= 1
            r >>= 1
        return best

    def _segments(self, lo: int, hi: int) -> tuple[list[int], list[int]]:
        """Canonical node cover of [lo, hi]; left-to-right order is
        segs_l + reversed(segs_r)."""
        segs_l: list[int] = []
        segs_r: list[int] = []
        l = lo + self.size
        r = hi + self.size + 1
        while l < r:
            if l & 1:
                segs_l.append(l)
                l += 1
            if r & 1:
                r -= 1
                segs_r.append(r)
            l >>= 1
            r >>= 1
        return segs_l, segs_r

    def rightmost_above(self, hi: int, thr: int) -> int:
        """Rightmost leaf index in [0, hi] with value > thr, or -1."""
        if hi >= self.n:
            hi = self.n - 1
        if hi < 0:
            return -1
        t = self.tree
        segs_l, segs_r = self._segments(0, hi)
        for node in (*segs_r, *reversed(segs_l)):
            if t[node] > thr:
                while node < self.size:
                    node <<= 1
                    if t[node | 1] > thr:
                        node |= 1
                return node - self.size
        return -1

    def leftmost_above(self, lo: int, thr: int) -> int:
        """Leftmost leaf index in [lo, n-1] with value > thr, or -1."""
        if lo < 0:
            lo = 0
        if lo > self.n - 1:
            return -1
        t = self.tree
        segs_l, segs_r = self._segments(lo, self.n - 1)
        for node in (*segs_l, *reversed(segs_r)):
            if t[node] > thr:
                while node < self.size:
                    node <<= 1
                    if not t[node] > thr:
                        node |= 1
                return node - self.size
        return -1
