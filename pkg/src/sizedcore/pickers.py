"""Constant-time sampling structures used by the randomized searches."""

from __future__ import annotations

import random


class ListDict:
    """Set of ints with O(1) add, discard, and uniform random choice.

    Iteration order is the internal list order, which is deterministic
    for a deterministic add/discard history.
    """

    __slots__ = ("items", "pos")

    def __init__(self, items=()):
        self.items: list[int] = []
        self.pos: dict[int, int] = {}
        for x in items:
            self.add(x)

    def add(self, x: int) -> None:
        if x not in self.pos:
            self.pos[x] = len(self.items)
            self.items.append(x)

    def discard(self, x: int) -> None:
        i = self.pos.pop(x, None)
        if i is None:
            return
        last = self.items.pop()
        if last != x:
            self.items[i] = last
            self.pos[last] = i

    def choose(self, rng: random.Random) -> int:
        return self.items[rng.randrange(len(self.items))]

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, x: int) -> bool:
        return x in self.pos

    def __iter__(self):
        return iter(self.items)


class BucketPicker:
    """Nodes bucketed by an integer score, exposing the top bucket.

    The max-score pointer is repaired lazily in top_bucket, so scores may
    move in both directions.
    """

    __slots__ = ("buckets", "score", "maxscore")

    def __init__(self):
        self.buckets: dict[int, ListDict] = {}
        self.score: dict[int, int] = {}
        self.maxscore = -1

    def set_score(self, x: int, s: int) -> None:
        old = self.score.get(x)
        if old == s:
            return
        if old is not None:
            self.buckets[old].discard(x)
        self.score[x] = s
        bucket = self.buckets.get(s)
        if bucket is None:
            bucket = self.buckets[s] = ListDict()
        bucket.add(x)
        if s > self.maxscore:
            self.maxscore = s

    def remove(self, x: int) -> None:
        s = self.score.pop(x, None)
        if s is not None:
            self.buckets[s].discard(x)

    def top_bucket(self) -> tuple[int, list[int]] | None:
        """Highest populated score and its members; None when empty.

        The returned list is live internal state; callers must not mutate.
        """
        while self.maxscore >= 0:
            bucket = self.buckets.get(self.maxscore)
            if bucket and len(bucket):
                return self.maxscore, bucket.items
            self.maxscore -= 1
        return None

    def __len__(self) -> int:
        return len(self.score)

    def __contains__(self, x: int) -> bool:
        return x in self.score
