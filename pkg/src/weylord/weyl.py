"""Weyl groups acting on the reduced roots of a datum.

Elements are stored as permutations of the full reduced root list together
with a canonical (ShortLex-least) reduced word.  On top of the bare group this
module computes Bruhat order, minimal coset and double-coset representatives
with their Kostant-style decompositions, the inversion invariants d_w and
delta_w, unipotent cross-section root sets, and the order-reversing opposition
bijections between double-coset representative sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .intlinalg import vadd, vscale, zero_vector
from .rootdata import RootDatum

WEYL_CAP = 1_000_000


class WeylElement:
    """A Weyl group element: root permutation plus canonical reduced word."""

    __slots__ = ("group", "index", "perm", "word")

    def __init__(self, group, index, perm, word):
        self.group = group
        self.index = index
        self.perm = perm
        self.word = word

    @property
    def length(self) -> int:
        return len(self.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __mul__(self, other):
        return self.group.mul(self, other)

    def inverse(self):
        return self.group.inv(self)

    def apply(self, v):
        """Image of a character-lattice vector."""
        for g in reversed(self.word):
            v = self.group.datum.reflect_vector(g, v)
        return v

    def apply_co(self, lam):
        """Image of a cocharacter-lattice vector."""
        for g in reversed(self.word):
            lam = self.group.datum.coreflect_vector(g, lam)
        return lam

    def __str__(self):
        return self.group.word_str(self)

    def __repr__(self):
        return f"<{self}>"


class WeylGroup:
    """The full Weyl group of a datum, generated breadth-first.

    Elements come out sorted by (length, canonical word); the identity is
    element 0 and the longest element is last.
    """

    def __init__(self, datum: RootDatum, cap: int = WEYL_CAP):
        self.datum = datum
        table = datum.roots
        self.table = table
        n = table.count
        self.num_positive = n
        full = 2 * n

        gen_perms = []
        for i in range(datum.num_simple):
            images = []
            for r in range(full):
                v = table.positive[r] if r < n else vscale(-1, table.positive[r - n])
                images.append(table.index[datum.reflect_vector(i, v)])
            gen_perms.append(tuple(images))
        self._gen_perms = gen_perms

        identity = tuple(range(full))
        words: dict[tuple, tuple] = {identity: ()}
        layer = [identity]
        while layer:
            fresh = []
            for p in sorted(layer, key=lambda q: words[q]):
                base = words[p]
                for g in range(datum.num_simple):
                    gp = gen_perms[g]
                    q = tuple(p[gp[r]] for r in range(full))
                    if q not in words:
                        words[q] = base + (g,)
                        fresh.append(q)
            if len(words) > cap:
                raise DomainError(f"Weyl group exceeds the configured cap ({cap})")
            layer = fresh

        order = sorted(words, key=lambda q: (len(words[q]), words[q]))
        self.elements = tuple(
            WeylElement(self, i, p, words[p]) for i, p in enumerate(order)
        )
        self._by_perm = {w.perm: w.index for w in self.elements}
        self.identity = self.elements[0]
        self.w0 = self.elements[-1]
        # the longest element inverts every positive root
        if self.w0.length != n:
            raise DomainError("corrupt datum: longest element does not invert all positive roots")

        self._right = [
            tuple(
                self._by_perm[tuple(w.perm[gen_perms[g][r]] for r in range(full))]
                for g in range(datum.num_simple)
            )
            for w in self.elements
        ]
        self._inv = [None] * len(self.elements)
        self._cones: dict[int, frozenset[int]] = {}
        self._parabolic_cache: dict[frozenset, tuple] = {}

    # -- group mechanics ---------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def gen(self, i: int) -> WeylElement:
        return self.elements[self._right[0][i]]

    def mul(self, u: WeylElement, v: WeylElement) -> WeylElement:
        i = u.index
        for g in v.word:
            i = self._right[i][g]
        return self.elements[i]

    def inv(self, w: WeylElement) -> WeylElement:
        cached = self._inv[w.index]
        if cached is None:
            perm = w.perm
            ip = [0] * len(perm)
            for a, b in enumerate(perm):
                ip[b] = a
            cached = self._by_perm[tuple(ip)]
            self._inv[w.index] = cached
        return self.elements[cached]

    def from_word(self, gens) -> WeylElement:
        i = 0
        for g in gens:
            i = self._right[i][g]
        return self.elements[i]

    def word_str(self, w: WeylElement) -> str:
        if not w.word:
            return "e"
        return " ".join(self.datum.labels[g] for g in w.word)

    def parse_word(self, text: str) -> WeylElement:
        """Accept a word over simple-root labels; reduces and canonicalises."""
        text = text.strip()
        if text in ("", "e"):
            return self.identity
        gens = []
        for tok in text.split():
            try:
                gens.append(self.datum.labels.index(tok))
            except ValueError:
                raise DomainError(f"unknown simple-root label {tok!r}") from None
        return self.from_word(gens)

    # -- roots and inversions ------------------------------------------------

    def act_root(self, w: WeylElement, r: int) -> int:
        return w.perm[r]

    def inversions(self, w: WeylElement) -> tuple[int, ...]:
        """Positive-root indices sent to negative roots."""
        n = self.num_positive
        return tuple(r for r in range(n) if w.perm[r] >= n)

    def d(self, w: WeylElement) -> int:
        """Total multiplicity of the inversion set."""
        mult = self.table.mult
        return sum(mult[r] for r in self.inversions(w))

    def delta(self, w: WeylElement) -> tuple[int, ...]:
        """Multiplicity-weighted sum of the inversion roots, in X* coordinates."""
        out = zero_vector(self.datum.rank)
        for r in self.inversions(w):
            out = vadd(out, vscale(self.table.mult[r], self.table.positive[r]))
        return out

    def dw_delta(self, w: WeylElement) -> tuple[int, tuple[int, ...]]:
        return self.d(w), self.delta(w)

    # -- descents and minimality ----------------------------------------------

    def _simple_pos(self, i: int) -> int:
        return self.table.simple_index[i]

    def simple_of_root(self, r: int) -> int | None:
        """Simple index of a root position, if the (positive) root is simple."""
        try:
            return self.table.simple_index.index(r)
        except ValueError:
            return None

    def is_left_minimal(self, w: WeylElement, I) -> bool:
        """w is the shortest element of W_I w  (w^{-1} keeps Phi_I^+ positive)."""
        n = self.num_positive
        wi = self.inv(w)
        return all(wi.perm[self._simple_pos(i)] < n for i in I)

    def is_right_minimal(self, w: WeylElement, J) -> bool:
        """w is the shortest element of w W_J  (w keeps Phi_J^+ positive)."""
        n = self.num_positive
        return all(w.perm[self._simple_pos(j)] < n for j in J)

    # -- parabolic subgroups ----------------------------------------------------

    def parabolic_elements(self, I) -> tuple[WeylElement, ...]:
        I = self.datum.check_subset(I)
        cached = self._parabolic_cache.get(I)
        if cached is None:
            seen = {0}
            frontier = [0]
            while frontier:
                fresh = []
                for idx in frontier:
                    for g in I:
                        nxt = self._right[idx][g]
                        if nxt not in seen:
                            seen.add(nxt)
                            fresh.append(nxt)
                frontier = fresh
            cached = tuple(self.elements[i] for i in sorted(seen))
            self._parabolic_cache[I] = cached
        return cached

    def longest_in(self, I) -> WeylElement:
        elems = self.parabolic_elements(I)
        top = elems[-1]
        if sum(1 for w in elems if w.length == top.length) != 1:
            raise DomainError("parabolic subgroup has no unique longest element")
        return top

    # -- Bruhat order ---------------------------------------------------------

    def _cone(self, w: WeylElement) -> frozenset[int]:
        """All u <= w, as element indices (subword closure of the canonical word)."""
        cached = self._cones.get(w.index)
        if cached is None:
            S = {0}
            for g in w.word:
                S |= {self._right[x][g] for x in S}
            cached = frozenset(S)
            self._cones[w.index] = cached
        return cached

    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        if u.length > w.length:
            return False
        return u.index in self._cone(w)

    # -- coset decompositions ----------------------------------------------------

    def min_coset_reps(self, I) -> tuple[WeylElement, ...]:
        I = self.datum.check_subset(I)
        return tuple(w for w in self.elements if self.is_left_minimal(w, I))

    def coset_decompose(self, I, w: WeylElement) -> tuple[WeylElement, WeylElement]:
        """Unique factorisation w = w_I * x with w_I in W_I and x left-minimal."""
        I = self.datum.check_subset(I)
        n = self.num_positive
        u = self.identity
        x = w
        while True:
            xi = self.inv(x)
            i = next((i for i in I if xi.perm[self._simple_pos(i)] >= n), None)
            if i is None:
                return u, x
            g = self.gen(i)
            x = self.mul(g, x)
            u = self.mul(u, g)

    def double_coset_reps(self, I, J) -> tuple[WeylElement, ...]:
        I = self.datum.check_subset(I)
        J = self.datum.check_subset(J)
        return tuple(
            w
            for w in self.elements
            if self.is_left_minimal(w, I) and self.is_right_minimal(w, J)
        )

    def double_decompose(self, I, J, iw: WeylElement) -> tuple[WeylElement, WeylElement]:
        """Factor a left-minimal element as (double-coset rep) * w_J."""
        I = self.datum.check_subset(I)
        J = self.datum.check_subset(J)
        if not self.is_left_minimal(iw, I):
            raise DomainError("element is not a minimal left-coset representative")
        n = self.num_positive
        x = iw
        v = self.identity
        while True:
            j = next((j for j in J if x.perm[self._simple_pos(j)] >= n), None)
            if j is None:
                return x, v
            g = self.gen(j)
            x = self.mul(x, g)
            v = self.mul(g, v)

    # -- simple-root transport ---------------------------------------------------

    def image_subset(self, w: WeylElement, J, into) -> frozenset[int]:
        """{ j in J : w(alpha_j) is a simple root belonging to `into` }."""
        out = set()
        for j in J:
            r = w.perm[self._simple_pos(j)]
            k = self.simple_of_root(r) if r < self.num_positive else None
            if k is not None and k in into:
                out.add(j)
        return frozenset(out)

    def transport_subset(self, w: WeylElement, K) -> frozenset[int]:
        """Apply w to a subset of simple roots; all images must stay simple."""
        out = set()
        for k in K:
            r = w.perm[self._simple_pos(k)]
            i = self.simple_of_root(r) if r < self.num_positive else None
            if i is None:
                raise DomainError("subset is not carried to simple roots")
            out.add(i)
        return frozenset(out)


@lru_cache(maxsize=None)
def weyl_group(datum: RootDatum, cap: int = WEYL_CAP) -> WeylGroup:
    return WeylGroup(datum, cap)


def bruhat_poset(group: WeylGroup, elements=None):
    """Bruhat order on the whole group or on a chosen element subset."""
    from .posets import FinitePoset

    if elements is None:
        elements = group.elements
    return FinitePoset(elements, group.bruhat_leq)


# -- double coset tables -------------------------------------------------------


@dataclass(frozen=True)
class DoubleCosetEntry:
    rep: WeylElement
    meet: frozenset[int]  # J cap w^{-1}(I), the inducing subset
    comeet: frozenset[int]  # I cap w(J)
    d: int
    delta: tuple[int, ...]
    fiber: tuple[WeylElement, ...]  # minimal reps of W_meet \ W_J


@dataclass(frozen=True)
class DoubleCosetTable:
    I: frozenset[int]
    J: frozenset[int]
    reps: tuple[WeylElement, ...]
    entries: tuple[DoubleCosetEntry, ...]
    leq: tuple[tuple[bool, ...], ...]  # Bruhat order restricted to reps

    def entry(self, rep: WeylElement) -> DoubleCosetEntry:
        for e in self.entries:
            if e.rep == rep:
                return e
        raise DomainError("element is not a double-coset representative")


def double_coset_table(group: WeylGroup, I, J) -> DoubleCosetTable:
    I = group.datum.check_subset(I)
    J = group.datum.check_subset(J)
    reps = group.double_coset_reps(I, J)
    entries = []
    for w in reps:
        wi = group.inv(w)
        # J cap w^{-1}(I): the j in J with w(alpha_j) a simple root of I
        meet = group.image_subset(w, J, I)
        # I cap w(J): the i in I with w^{-1}(alpha_i) a simple root of J
        comeet = group.image_subset(wi, I, J)
        fiber = tuple(
            v for v in group.parabolic_elements(J) if group.is_left_minimal(v, meet)
        )
        entries.append(
            DoubleCosetEntry(w, meet, comeet, group.d(w), group.delta(w), fiber)
        )
    leq = tuple(
        tuple(group.bruhat_leq(u, v) for v in reps) for u in reps
    )
    return DoubleCosetTable(I, J, reps, tuple(entries), leq)


# -- cross sections ------------------------------------------------------------


@dataclass(frozen=True)
class CrossSection:
    """Root bookkeeping for a Bruhat cell attached to (I, J, iw).

    All nine sets are frozensets of positive-root indices; multiplicities are
    read off from the datum's root table.  Conventions: a positive root gamma
    belongs to the subgroup attached to w when w(gamma) lies in the indicated
    positive part.
    """

    I: frozenset[int]
    J: frozenset[int]
    iw: WeylElement
    iwj: WeylElement
    w_j: WeylElement
    u_w: frozenset[int]
    u_prime: frozenset[int]
    u_dprime: frozenset[int]
    n_j: frozenset[int]
    n_j_prime: frozenset[int]
    n_j_dprime: frozenset[int]
    u_j: frozenset[int]
    u_j_prime: frozenset[int]
    u_j_dprime: frozenset[int]

    def weight(self, group: WeylGroup, roots) -> int:
        mult = group.table.mult
        return sum(mult[r] for r in roots)


def cross_section(group: WeylGroup, I, J, iw: WeylElement) -> CrossSection:
    I = group.datum.check_subset(I)
    J = group.datum.check_subset(J)
    iwj, w_j = group.double_decompose(I, J, iw)
    table = group.table
    n = group.num_positive
    u_w, u_p, u_pp = set(), set(), set()
    n_j, n_jp, n_jpp = set(), set(), set()
    u_j, u_jp, u_jpp = set(), set(), set()
    for r in range(n):
        img = iw.perm[r]
        if img >= n:
            continue  # inverted: not part of the cross section
        u_w.add(r)
        in_levi_I = table.support(img) <= I
        in_phi_J = table.support(r) <= J
        if in_levi_I:
            u_pp.add(r)
            (u_jpp if in_phi_J else n_jpp).add(r)
        else:
            u_p.add(r)
            (u_jp if in_phi_J else n_jp).add(r)
        if in_phi_J:
            u_j.add(r)
        else:
            n_j.add(r)
    return CrossSection(
        I=I,
        J=J,
        iw=iw,
        iwj=iwj,
        w_j=w_j,
        u_w=frozenset(u_w),
        u_prime=frozenset(u_p),
        u_dprime=frozenset(u_pp),
        n_j=frozenset(n_j),
        n_j_prime=frozenset(n_jp),
        n_j_dprime=frozenset(n_jpp),
        u_j=frozenset(u_j),
        u_j_prime=frozenset(u_jp),
        u_j_dprime=frozenset(u_jpp),
    )


# -- opposition bijections -------------------------------------------------------


@dataclass(frozen=True)
class OppositionMap:
    """The order-reversing bijection between double-coset representative sets.

    `rep_map` sends a rep w (for I, J) to its partner (for I', J) where
    I' is the transport of I by the inverse of the minimal representative of
    the longest element; `fiber_maps[w]` is the induced order-reversing
    bijection between the corresponding right-coset fibers in W_J.
    """

    I: frozenset[int]
    J: frozenset[int]
    I_prime: frozenset[int]
    iw0: WeylElement
    rep_map: dict
    fiber_maps: dict
    meets: dict
    meets_prime: dict


def opposition_map(group: WeylGroup, I, J) -> OppositionMap:
    I = group.datum.check_subset(I)
    J = group.datum.check_subset(J)
    w_i0 = group.longest_in(I)
    iw0 = group.mul(w_i0, group.w0)
    I_prime = group.transport_subset(group.inv(iw0), I)
    src = double_coset_table(group, I, J)
    tgt = frozenset(w.index for w in group.double_coset_reps(I_prime, J))
    iw0_inv = group.inv(iw0)
    w_j0 = group.longest_in(J)
    rep_map = {}
    fiber_maps = {}
    meets = {}
    meets_prime = {}
    for entry in src.entries:
        w = entry.rep
        k_wj0 = group.mul(group.longest_in(entry.meet), w_j0)
        image = group.mul(group.mul(iw0_inv, w), k_wj0)
        if image.index not in tgt:
            raise DomainError("opposition image is not a double-coset representative")
        rep_map[w] = image
        meets[w] = entry.meet
        meets_prime[w] = group.image_subset(image, J, I_prime)
        inv_k = group.inv(k_wj0)
        fiber_maps[w] = {v: group.mul(inv_k, v) for v in entry.fiber}
    return OppositionMap(
        I=I,
        J=J,
        I_prime=I_prime,
        iw0=iw0,
        rep_map=rep_map,
        fiber_maps=fiber_maps,
        meets=meets,
        meets_prime=meets_prime,
    )
