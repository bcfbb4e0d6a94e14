"""Lazy oracle for the pruned graph: island membership, survival of a
reduced word under the pruning rules, incident tree-edge labels, and the
cross-check between the closed-form removal pattern and the prose rule.

No infinite portion of the graph is ever materialized; every question is
answered from the word alone.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .caching import Memo
from .words import (
    Word,
    anchor,
    anchor_length,
    invert,
    is_reduced,
    nth_word,
    reduce_word,
    zigzag_prefix,
)


def _ray_letter(p: int) -> int:
    return 1 if p % 2 == 0 else 2


def ray_agreement(w: Word) -> int:
    """Length of the longest common prefix of w with the infinite
    zig-zag ray a_1 a_2 a_1 a_2 ..."""
    n = len(w)
    ray = zigzag_prefix(n)
    if w == ray:
        return n
    # bisect for the first mismatch; slice compares run at C speed
    lo, hi = 0, n  # w[:lo] matches, w[:hi] does not
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if w[:mid] == ray[:mid]:
            lo = mid
        else:
            hi = mid
    return lo


# --- island data -----------------------------------------------------------

@dataclass(frozen=True)
class IslandData:
    """Everything attached to enumeration index j: the word, its anchor,
    the level n_j, and the anchored edge-path vertices."""

    j: int
    word: Word
    anchor: Word
    level: int                      # n_j = max(2, max index in word)
    z_path: tuple                   # |word|+1 reduced words, with repeats
    z_set: frozenset                # deduplicated
    # per-z fast-equality records: (word, len, ray_agreement, tail)
    z_info: tuple = field(repr=False)


_island_memo = Memo()


def island_data(j: int) -> IslandData:
    if j < 1:
        raise ValueError("island index must be >= 1")
    cached = _island_memo.get(j)
    if cached is not None:
        return cached
    wj = nth_word(j)
    anc = anchor(j)
    level = max(2, max(abs(x) for x in wj))
    path = [anc]
    cur = anc
    for x in wj:
        cur = reduce_word(cur + (x,))
        path.append(cur)
    z_path = tuple(path)
    z_set = frozenset(z_path)
    z_info = tuple(
        (z, len(z), ray_agreement(z), z[ray_agreement(z):]) for z in sorted(z_set)
    )
    data = IslandData(j, wj, anc, level, z_path, z_set, z_info)
    _island_memo.put(j, data)
    return data


# --- candidate-island index ------------------------------------------------
# For a word v, an island j can contain v only if
#   anchor_length(j) - 2|w_j| - 1 <= |v|        (vertex-length bound)
# and
#   | anchor_length(j) - ray_agreement(v) | <= |w_j| + 1,
# since every island vertex agrees with the zig-zag ray on a prefix that
# is within |w_j| + 1 of the anchor length.  The length bound is strictly
# increasing in j (consecutive difference 3|w_j| - |w_{j+1}| + 3 > 0), so
# both filters are bisectable.

_anchor_lens: list[int] = []   # _anchor_lens[j-1] = anchor_length(j)
_bounds: list[int] = []        # anchor_length(j) - 2|w_j| - 1
_max_wlen: list[int] = [0]     # prefix maxima of |w_j|


def _extend_index(target_len: int) -> None:
    while not _bounds or _bounds[-1] <= target_len:
        j = len(_bounds) + 1
        a = anchor_length(j)
        wl = len(nth_word(j))
        _anchor_lens.append(a)
        _bounds.append(a - 2 * wl - 1)
        _max_wlen.append(max(_max_wlen[-1], wl))


class IslandHit(NamedTuple):
    """Membership certificate: v lies in island j, either on the anchored
    edge-path (kind 'Z') or strictly on a line through it (kind 'L')."""

    j: int
    kind: str                 # 'Z' or 'L'
    s: Optional[int] = None   # line direction for kind 'L'
    u: Optional[Word] = None  # line base vertex for kind 'L'
    r: Optional[int] = None   # signed offset along the line


def _suffix_run(w: Word) -> int:
    """Length of the maximal constant-letter suffix run of w."""
    if not w:
        return 0
    last = w[-1]
    n = len(w)
    r = 1
    while r < n and w[n - 1 - r] == last:
        r += 1
    return r


def _line_offset_fast(v, pv, suffix_run, u, ulen, up, utail, s):
    """The r with v = reduce(u · a_s^r), using precomputed ray data,
    or None.  r = 0 (v == u) is reported as 0."""
    # longest common prefix of u and v
    c = min(up, pv)
    nv = len(v)
    while c < ulen and c < nv and u[c] == v[c]:
        c += 1
    tu_len = ulen - c
    tv_len = nv - c
    if tu_len == 0 and tv_len == 0:
        return 0
    letter = None
    if tu_len:
        x = u[c]
        for p in range(c + 1, ulen):
            if u[p] != x:
                return None
        letter = -x
    if tv_len:
        if tv_len > suffix_run:
            return None
        y = v[-1]
        if letter is not None and letter != y:
            return None
        letter = y
    if abs(letter) != s:
        return None
    count = tu_len + tv_len
    return count if letter > 0 else -count


def _check_island(v: Word, pv: int, suffix_run: int, j: int) -> Optional[IslandHit]:
    data = island_data(j)
    nv = len(v)
    for z, zlen, zp, ztail in data.z_info:
        if nv == zlen and pv == zp and v[zp:] == ztail:
            return IslandHit(j, "Z")
    for z, zlen, zp, ztail in data.z_info:
        for s in range(1, data.level + 1):
            r = _line_offset_fast(v, pv, suffix_run, z, zlen, zp, ztail, s)
            if r:
                return IslandHit(j, "L", s, z, r)
    return None


_classify_memo = Memo()
_NO_HIT = IslandHit(0, "-")


def classify(v: Word, ray_len: Optional[int] = None) -> Optional[IslandHit]:
    """Island membership of a reduced word, or None."""
    if not v:
        return None
    cached = _classify_memo.get(v)
    if cached is not None:
        return None if cached is _NO_HIT else cached
    nv = len(v)
    _extend_index(nv)
    jmax = bisect_right(_bounds, nv)
    hit = None
    if jmax > 0:
        pv = ray_len if ray_len is not None else ray_agreement(v)
        wm = _max_wlen[jmax]
        lo = bisect_left(_anchor_lens, pv - wm - 1, 0, jmax)
        hi = bisect_right(_anchor_lens, pv + wm + 1, 0, jmax)
        run = _suffix_run(v)
        for j in range(lo + 1, hi + 1):
            if abs(_anchor_lens[j - 1] - pv) > len(nth_word(j)) + 1:
                continue
            hit = _check_island(v, pv, run, j)
            if hit is not None:
                break
    _classify_memo.put(v, hit if hit is not None else _NO_HIT)
    return hit


def island_of(v: Word) -> Optional[int]:
    """The unique island index containing v, or None."""
    if not is_reduced(v):
        raise ValueError("island_of expects a reduced word")
    hit = classify(v)
    return hit.j if hit else None


def in_line(v: Word, u: Word, s: int) -> Optional[int]:
    """The r with v = reduce(u · a_s^r), or None.

    Deliberately implemented from the definition (reduce u^{-1}v and test
    for a pure power of a_s) rather than via the ray shortcuts, so it can
    serve as an independent check on them.
    """
    if s < 1:
        raise ValueError("line direction must be >= 1")
    if not is_reduced(u):
        raise ValueError("in_line expects a reduced base vertex")
    d = reduce_word(invert(u) + tuple(v))
    if not d:
        return 0
    if all(x == s for x in d):
        return len(d)
    if all(x == -s for x in d):
        return -len(d)
    return None


# --- survival under the pruning --------------------------------------------

_survives_memo = Memo()


def _killed_at_last(v: Word, pv: int) -> bool:
    """Given that every proper prefix of v survives, decide whether the
    final letter triggers a removal.

    The removed vertices of an island are reduce(z . a_s^{+-r} . a_k . g)
    with z on the anchored edge-path; the power may cancel into z, but its
    reduction u = reduce(z . a_s^{+-r}) ends in a letter of index 1, 2 or
    s, so the step a_k (k outside {1,2,s}) never cancels and u . a_k is a
    literal prefix of v.  The subtree behind that prefix is then killed by
    the prefix walk in `survives`.  Hence it suffices to test the final
    letter against the parent prefix's classification: off every island a
    letter of index >= 3 is fatal; on the anchored edge-path an index
    above the island level is fatal; strictly on a line only the labels
    {1, 2, s} are allowed."""
    k = abs(v[-1])
    u = v[:len(v) - 1]
    cu = classify(u, min(pv, len(u)))
    if cu is None:
        return k >= 3
    if cu.kind == "Z":
        return k > island_data(cu.j).level
    return k not in (1, 2, cu.s)


def survives(v: Word) -> bool:
    """True iff the reduced word v is a vertex of the pruned tree."""
    if not is_reduced(v):
        raise ValueError("survives expects a reduced word")
    v = tuple(v)
    cached = _survives_memo.get(v)
    if cached is not None:
        return cached
    pv = ray_agreement(v)
    alive = True
    for t in range(1, len(v) + 1):
        pre = v[:t]
        c = _survives_memo.get(pre)
        if c is None:
            c = alive and not _killed_at_last(pre, min(pv, t))
            _survives_memo.put(pre, c)
        alive = c
        if not alive:
            break
    _survives_memo.put(v, alive)
    return alive


def e_set(v) -> frozenset:
    """Labels of the tree edges at a surviving vertex: {1,2} off-island,
    {1..n_j} on the anchored edge-path, {1,2,s} strictly on a line."""
    word = v.word if isinstance(v, Vertex) else tuple(v)
    if isinstance(v, Vertex):
        hit = v.hit
    else:
        if not survives(word):
            raise ValueError("e_set is defined only for surviving vertices")
        hit = classify(word)
    if hit is None:
        return frozenset((1, 2))
    if hit.kind == "Z":
        return frozenset(range(1, island_data(hit.j).level + 1))
    return frozenset((1, 2, hit.s))


# --- certified vertices ----------------------------------------------------

_vertex_memo = Memo()


class Vertex:
    """A reduced word certified to survive the pruning.  Carries its ray
    agreement and island classification so that neighbor steps are cheap."""

    __slots__ = ("word", "ray_len", "hit", "_eset", "_steps", "_hash")

    def __init__(self, word: Word, ray_len: int, hit, _certified: bool):
        self.word = word
        self.ray_len = ray_len
        self.hit = hit
        self._eset = None
        self._steps: dict = {}
        self._hash = hash(word)

    @staticmethod
    def make(word: Word) -> "Vertex":
        """Certify and intern a vertex from a reduced word."""
        word = tuple(word)
        v = _vertex_memo.get(word)
        if v is not None:
            return v
        if not is_reduced(word):
            raise ValueError("a vertex must be a reduced word")
        if not survives(word):
            raise ValueError("word does not survive the pruning")
        p = ray_agreement(word)
        v = Vertex(word, p, classify(word, p), True)
        _vertex_memo.put(word, v)
        return v

    @staticmethod
    def _certified(word: Word, ray_len: int) -> "Vertex":
        v = _vertex_memo.get(word)
        if v is not None:
            return v
        v = Vertex(word, ray_len, classify(word, ray_len), True)
        _vertex_memo.put(word, v)
        return v

    @property
    def e_set(self) -> frozenset:
        es = self._eset
        if es is None:
            hit = self.hit
            if hit is None:
                es = frozenset((1, 2))
            elif hit.kind == "Z":
                es = frozenset(range(1, island_data(hit.j).level + 1))
            else:
                es = frozenset((1, 2, hit.s))
            self._eset = es
        return es

    def step(self, letter: int):
        """One edge traversal: ('tree', neighbor) if the label is a tree
        label here, else ('loop', self)."""
        cached = self._steps.get(letter)
        if cached is not None:
            return cached
        if abs(letter) in self.e_set:
            w = self.word
            if w and w[-1] == -letter:
                nw = w[:-1]
                nb = Vertex._certified(nw, min(self.ray_len, len(nw)))
            else:
                nw = w + (letter,)
                if self.ray_len == len(w) and letter == _ray_letter(len(w)):
                    nb = Vertex._certified(nw, self.ray_len + 1)
                else:
                    nb = Vertex._certified(nw, self.ray_len)
            result = ("tree", nb)
        else:
            result = ("loop", self)
        self._steps[letter] = result
        return result

    def __eq__(self, other):
        return isinstance(other, Vertex) and self.word == other.word

    def __hash__(self):
        return self._hash

    def __repr__(self):
        from .words import format_word
        return f"Vertex({format_word(self.word)})"


def base_vertex() -> Vertex:
    """The base point: the empty word."""
    return Vertex.make(())


def neighbor(v: Vertex, letter: int):
    """Spec-level neighbor operation; see Vertex.step."""
    if letter == 0:
        raise ValueError("0 is not a valid letter")
    return v.step(letter)


# --- cross-check of the two removal rules ----------------------------------

def formula_removes(v: Word, j: int) -> bool:
    """Match of the closed-form removal pattern for island j: v is the
    reduction of z . a_s^{+-r} . a_k^{+-1} . g with z on the island's
    edge-path, the vertex one step into the power off the edge-path, and
    either r = 0 with k > n_j, or r != 0 with s <= n_j and k outside
    {1, 2, s}.  The power may cancel into the spelling of z, so its
    reduction u is located with the definitional line test `in_line`
    rather than by literal prefix matching; u . a_k^{+-1} itself never
    cancels and is therefore a literal prefix of v."""
    data = island_data(j)
    zset = data.z_set
    nj = data.level
    n = len(v)
    for t in range(0, n):
        u = v[:t]
        k = abs(v[t])
        if u in zset:
            # r = 0 branch; the next vertex carries an index-k letter
            # with k > n_j, hence lies off the edge-path automatically
            if k > nj:
                return True
            continue
        # r != 0 branch: u strictly on a line through the edge-path
        if k in (1, 2):
            continue
        for z in zset:
            for s in range(1, nj + 1):
                if s == k:
                    continue
                if in_line(u, z, s):
                    return True
    return False


@dataclass(frozen=True)
class CrossCheckReport:
    j: int
    radius: int
    examined: int
    removed: int
    disagreements: tuple

    @property
    def ok(self) -> bool:
        return not self.disagreements


def removal_cross_check(j: int, radius: int, line_extent: Optional[int] = None) -> CrossCheckReport:
    """Compare the closed-form pattern with the prose rule (remove the
    distance-1 neighbors of the island not connected by an a_1/a_2 edge,
    then everything they separate) on all reduced words within the given
    edge-distance of a bounded sample of island vertices."""
    if j < 1 or radius < 1:
        raise ValueError("island index and radius must be >= 1")
    data = island_data(j)
    extent = line_extent if line_extent is not None else radius + 2
    sample = set(data.z_set)
    for z in data.z_set:
        for s in range(1, data.level + 1):
            for r in range(1, extent + 1):
                sample.add(reduce_word(z + (s,) * r))
                sample.add(reduce_word(z + (-s,) * r))
    kmax = data.level + 2

    def tree_neighbors(w: Word):
        if w:
            yield w[:-1], abs(w[-1])
        for i in range(1, kmax + 1):
            for letter in (i, -i):
                if not w or w[-1] != -letter:
                    yield w + (letter,), i

    def in_island(w: Word) -> bool:
        hit = classify(w)
        return hit is not None and hit.j == j

    examined = 0
    removed = 0
    disagreements = []
    # BFS outward; record each vertex's gateway (its distance-1 ancestor)
    # and the label of the gateway's unique edge into the island.
    frontier: list[tuple] = []
    seen = set(sample)
    for y in sorted(sample):
        for nb, label in tree_neighbors(y):
            if nb in seen or in_island(nb):
                seen.add(nb)
                continue
            seen.add(nb)
            frontier.append((nb, 1, label))
    while frontier:
        next_frontier = []
        for w, depth, gateway_label in frontier:
            examined += 1
            prose = gateway_label not in (1, 2)
            formula = formula_removes(w, j)
            if prose != formula:
                disagreements.append((w, prose, formula))
            if formula:
                removed += 1
            if depth < radius:
                for nb, _label in tree_neighbors(w):
                    if nb in seen or in_island(nb):
                        seen.add(nb)
                        continue
                    seen.add(nb)
                    next_frontier.append((nb, depth + 1, gateway_label))
        frontier = next_frontier
    return CrossCheckReport(j, radius, examined, removed, tuple(disagreements))
