#!/usr/bin/env python

# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
#
# See LICENSE for more details.

"""Desk scale codes over Z_q: greedy Gilbert codes, Lee metric BCH codes,
Reed-Solomon outer codes and their concatenation.

Codewords are rows of int64 arrays with residues in [0, q). Distances are
squared Euclidean (:mod:`spherecodes.lib.euclid`) unless a Lee table is
passed. For a linear code the minimum distance is the minimum nonzero
codeword weight; three engines compute it:

exhaustive
    all q^k codewords, when q^k <= EXHAUSTIVE_LIMIT.
low-weight
    every nonzero word of weight <= bound is tested against the parity
    checks; exact below the bound.
sampled
    random nonzero codewords, an upper estimate only.

"""

import logging
from dataclasses import dataclass

import galois
import numpy as np

from spherecodes.lib import bounds
from spherecodes.lib import counting
from spherecodes.lib import euclid
from spherecodes.lib import excepts
from spherecodes.lib import fields
from spherecodes.lib import utils

logger = logging.getLogger(__name__)

GILBERT_LIMIT = 10 ** 7
"""Largest q^n the greedy construction scans."""
CODEBOOK_LIMIT = 10 ** 7
"""Largest q^k listed as a codebook."""
EXHAUSTIVE_LIMIT = 10 ** 6
"""Largest q^k scanned for the exhaustive minimum weight."""
LOW_WEIGHT_LIMIT = 5 * 10 ** 6
"""Largest number of low weight candidates."""
PAIR_EXHAUSTIVE_LIMIT = 10 ** 5
"""Codebooks up to this size have their pair distances checked in full."""
CHUNK = 1 << 16

ENGINE_EXHAUSTIVE = "exhaustive"
ENGINE_LOW_WEIGHT = "low-weight"
ENGINE_SAMPLED = "sampled"


@dataclass(frozen=True)
class MinWeight(object):
    """Minimum nonzero codeword weight.

    value is None when a low weight search found no codeword up to its
    bound; the weight is then at least ``lower``.
    """
    value: int
    engine: str
    lower: int = None

    @property
    def exact(self):
        return self.engine != ENGINE_SAMPLED and self.value is not None

    @property
    def guaranteed(self):
        """Proven lower bound of the minimum weight, None if sampled."""
        if self.engine == ENGINE_SAMPLED:
            return None
        return self.value if self.value is not None else self.lower


def _weights(words, q, table):
    return table[np.asarray(words, dtype=np.int64) % q].sum(axis=-1)


class WordCode(object):
    """Explicit list of words over Z_q.

    Parameters
    ----------
    q : int
    words : array
        (N, n) residues, lexicographic order.
    metric_floor : int
        Guaranteed squared Euclidean minimum distance.
    name : str
    """

    def __init__(self, q, words, metric_floor, name="code"):
        self.q = int(q)
        self.words = np.asarray(words, dtype=np.int64)
        self.metric_floor = int(metric_floor)
        self.name = name

    @property
    def n(self):
        return self.words.shape[1]

    @property
    def size(self):
        return self.words.shape[0]

    def codewords(self):
        return self.words

    def __repr__(self):
        return "%s(q=%d, n=%d, size=%d, floor=%d)" % (
            self.name, self.q, self.n, self.size, self.metric_floor)


class LinearCode(object):
    """Linear [n, k] code over the prime field Z_q.

    Parameters
    ----------
    q : int
        Prime.
    generator : array
        k x n residues, rows independent over GF(q).
    metric_floor : int
        Guaranteed squared Euclidean minimum distance.
    lee_floor : int, optional
        Guaranteed Lee minimum distance.
    name : str

    Raises
    ------
    DomainError
        Rows dependent, q not prime.

    """

    def __init__(self, q, generator, metric_floor, lee_floor=None,
                 name="linear"):
        self.q = fields.check_prime(q)
        self.generator = np.asarray(generator, dtype=np.int64) % self.q
        self.metric_floor = int(metric_floor)
        self.lee_floor = lee_floor
        self.name = name
        gf = fields.prime_field(self.q)
        rank = np.linalg.matrix_rank(gf(self.generator))
        if rank != self.k:
            raise excepts.DomainError("generator rank %d < %d rows" %
                                      (rank, self.k))
        self._parity = None

    @property
    def k(self):
        return self.generator.shape[0]

    @property
    def n(self):
        return self.generator.shape[1]

    @property
    def size(self):
        return self.q ** self.k

    @property
    def constellation(self):
        return euclid.Constellation.for_q(self.q)

    def parity_check(self):
        """(n-k) x n matrix H with G H^T = 0."""
        if self._parity is None:
            gf = fields.prime_field(self.q)
            self._parity = np.asarray(gf(self.generator).null_space(),
                                      dtype=np.int64)
        return self._parity

    def syndromes(self, words):
        return (np.asarray(words, dtype=np.int64) @
                self.parity_check().T) % self.q

    def encode(self, messages):
        """Codewords of message rows, m G mod q."""
        messages = np.asarray(messages, dtype=np.int64)
        return (messages @ self.generator) % self.q

    def messages(self, start=0, stop=None):
        """Messages with lexicographic index in [start, stop)."""
        stop = self.size if stop is None else stop
        idx = np.arange(start, stop, dtype=np.int64)
        return (idx[:, None] // utils.mixed_radix(self.q, self.k)) % self.q

    def codewords(self):
        """All codewords, in lexicographic message order.

        Raises
        ------
        ScaleGuardError
            More than CODEBOOK_LIMIT codewords.

        """
        if self.size > CODEBOOK_LIMIT:
            raise excepts.ScaleGuardError(
                "%s has %d^%d codewords; use a smaller k" %
                (self.name, self.q, self.k))
        return self.encode(self.messages())

    def random_messages(self, count, gen=None):
        gen = gen if gen is not None else utils.rng()
        return gen.integers(0, self.q, size=(count, self.k))

    def __repr__(self):
        return "%s[%d, %d] over Z_%d, floor %d" % (
            self.name, self.n, self.k, self.q, self.metric_floor)


def weight_table(q, metric="euclid"):
    c = euclid.Constellation.for_q(q)
    if metric == "euclid":
        return c.weight_table()
    if metric == "lee":
        return c.lee_table()
    raise excepts.UsageError("unknown metric %r" % metric)


def _exhaustive_min(code, tables):
    best = [None] * len(tables)
    for start in range(1, code.size, CHUNK):
        words = code.encode(code.messages(start, min(start + CHUNK,
                                                     code.size)))
        for i, table in enumerate(tables):
            val = int(_weights(words, code.q, table).min())
            best[i] = val if best[i] is None else min(best[i], val)
    return [MinWeight(b, ENGINE_EXHAUSTIVE) for b in best]


def ball_words(q, n, table, bound):
    """All words of Z_q^n with weight <= bound under a per-residue table.

    Raises
    ------
    ScaleGuardError
        More than LOW_WEIGHT_LIMIT words.

    """
    table = np.asarray(table)
    words = np.zeros((1, 0), dtype=np.int64)
    weight = np.zeros(1, dtype=np.int64)
    for _ in range(n):
        parts_w, parts_v = [], []
        for r in range(q):
            keep = weight + table[r] <= bound
            if not keep.any():
                continue
            sub = words[keep]
            parts_w.append(np.hstack([sub, np.full((sub.shape[0], 1), r,
                                                   dtype=np.int64)]))
            parts_v.append(weight[keep] + table[r])
        words = np.vstack(parts_w)
        weight = np.concatenate(parts_v)
        if words.shape[0] > LOW_WEIGHT_LIMIT:
            raise excepts.ScaleGuardError(
                "%d words of weight <= %d in Z_%d^%d" %
                (words.shape[0], bound, q, n))
    return words, weight


def low_weight_min(code, table, bound):
    """Smallest nonzero codeword weight up to bound, by syndromes.

    Returns
    -------
    MinWeight
        value None when no codeword of weight <= bound exists.

    """
    words, weight = ball_words(code.q, code.n, table, bound)
    nonzero = weight > 0
    words, weight = words[nonzero], weight[nonzero]
    hits = ~code.syndromes(words).any(axis=1)
    if hits.any():
        return MinWeight(int(weight[hits].min()), ENGINE_LOW_WEIGHT)
    return MinWeight(None, ENGINE_LOW_WEIGHT, lower=int(bound) + 1)


def sampled_min(code, tables, samples, gen=None):
    gen = gen if gen is not None else utils.rng()
    msgs = code.random_messages(samples, gen)
    msgs = msgs[msgs.any(axis=1)]
    words = code.encode(msgs)
    return [MinWeight(int(_weights(words, code.q, t).min()), ENGINE_SAMPLED)
            for t in tables]


def min_weights(code, metrics=("euclid", "lee"), bound=None, samples=10000,
                gen=None):
    """Minimum nonzero weights of a linear code, engine chosen by size.

    Parameters
    ----------
    code : LinearCode
    metrics : sequence of str
        "euclid" and/or "lee".
    bound : int, optional
        Low weight search radius, the code's metric floor by default.
    samples : int
        Random codewords when neither exact engine fits.

    Returns
    -------
    dict
        metric -> MinWeight.

    """
    tables = [weight_table(code.q, m) for m in metrics]
    if code.size <= EXHAUSTIVE_LIMIT:
        found = _exhaustive_min(code, tables)
    else:
        bound = code.metric_floor if bound is None else bound
        try:
            found = [low_weight_min(code, t, bound) for t in tables]
        except excepts.ScaleGuardError as excp:
            logger.info("Low weight search too large (%s), sampling.", excp)
            found = sampled_min(code, tables, samples, gen)
    for metric, res in zip(metrics, found):
        logger.debug("%r: min %s weight %s (%s)", code, metric, res.value,
                     res.engine)
    return dict(zip(metrics, found))


def verify_min_distance(code, samples=10000, gen=None):
    """Minimum squared Euclidean distance with its engine label.

    Works on LinearCode, WordCode and ConcatenatedCode.

    Returns
    -------
    MinWeight

    """
    if isinstance(code, LinearCode):
        return min_weights(code, ("euclid",), samples=samples,
                           gen=gen)["euclid"]
    if isinstance(code, ConcatenatedCode):
        return code.sampled_min_distance(samples, gen)
    words = code.codewords()
    if words.shape[0] < 2:
        raise excepts.DomainError("need at least 2 codewords")
    c = euclid.Constellation.for_q(code.q)
    if words.shape[0] <= PAIR_EXHAUSTIVE_LIMIT:
        return MinWeight(int(euclid.min_sq_distance(words, c)),
                         ENGINE_EXHAUSTIVE)
    gen = gen if gen is not None else utils.rng()
    i = gen.integers(0, words.shape[0], size=samples)
    j = gen.integers(0, words.shape[0], size=samples)
    keep = i != j
    diff = (words[i[keep]] - words[j[keep]]) % code.q
    return MinWeight(int(_weights(diff, code.q, c.weight_table()).min()),
                     ENGINE_SAMPLED)


def nearest_codeword(code, word, metric="euclid"):
    """Brute force decoder: the closest codeword, lexicographically
    smallest among ties."""
    words = code.codewords()
    word = euclid.Constellation.for_q(code.q).check(word)
    if word.shape[-1] != words.shape[1]:
        raise excepts.DomainError("length mismatch: %d != %d" %
                                  (word.shape[-1], words.shape[1]))
    dist = _weights((words - word) % code.q, code.q,
                    weight_table(code.q, metric))
    ties = words[dist == dist.min()]
    order = np.lexsort(ties.T[::-1])
    return ties[order[0]], int(dist.min())


def _greedy_scan(q, n, d, table):
    """greedy_gilbert by distances to the kept words, chunk by chunk."""
    total = q ** n
    radix = utils.mixed_radix(q, n)
    kept = []
    for start in range(0, total, CHUNK):
        idx = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
        chunk = (idx[:, None] // radix[None, :]) % q
        free = np.ones(idx.size, dtype=bool)
        for word in kept:
            free &= table[(chunk - word) % q].sum(axis=1) >= d
        while free.any():
            word = chunk[np.argmax(free)]
            kept.append(word)
            free &= table[(chunk - word) % q].sum(axis=1) >= d
    code = WordCode(q, np.array(kept), d, "gilbert")
    logger.info("Greedy Gilbert q=%d n=%d d=%d: %d words.", q, n, d,
                code.size)
    return code


def greedy_gilbert(q, n, d):
    """Lexicographic greedy code of squared Euclidean distance >= d.

    Every word in lexicographic order is kept when it is at distance >= d
    from all kept words. The result has at least q^n / V(n, q, d-1) words.
    Words near a kept word are struck out through the offsets of the
    radius d-1 ball; when that ball is too large to list, candidates are
    compared with the kept words directly.

    Raises
    ------
    ScaleGuardError
        q^n > 10^7.
    DomainError
        d < 1.

    """
    q, n, d = int(q), int(n), int(d)
    if d < 1:
        raise excepts.DomainError("distance must be positive, got %d" % d)
    if n < 1:
        raise excepts.DomainError("length must be positive, got %d" % n)
    total = q ** n
    if total > GILBERT_LIMIT:
        raise excepts.ScaleGuardError(
            "q^n = %d^%d exceeds %d; lower q or n" % (q, n, GILBERT_LIMIT))
    c = euclid.Constellation.for_q(q)
    if d == 1:
        return WordCode(q, utils.all_words(q, n), 1, "gilbert")
    radix = utils.mixed_radix(q, n)
    try:
        offsets = ball_words(q, n, c.weight_table(), d - 1)[0]
    except excepts.ScaleGuardError as excp:
        logger.info("Greedy Gilbert q=%d n=%d d=%d: %s; scanning words.",
                    q, n, d, excp)
        return _greedy_scan(q, n, d, c.weight_table())
    blocked = np.zeros(total, dtype=bool)
    kept = []
    idx = 0
    while idx < total:
        word = (idx // radix) % q
        kept.append(word)
        blocked[((word + offsets) % q) @ radix] = True
        free = np.flatnonzero(~blocked[idx + 1:])
        if not free.size:
            break
        idx += 1 + int(free[0])
    code = WordCode(q, np.array(kept), d, "gilbert")
    logger.info("Greedy Gilbert q=%d n=%d d=%d: %d words.", q, n, d,
                code.size)
    return code


def gilbert_lower_bound(q, n, d):
    """ceil(q^n / V(n, q, d-1))."""
    ball = counting.ball_size(q, n, d - 1)
    return -(-(q ** n) // ball)


def lee_bch(p, t, check_parity=True):
    """Lee metric BCH code of length p-1 with roots alpha^0..alpha^(t-1).

    Parameters
    ----------
    p : int
        Prime >= 5.
    t : int
        1 <= t <= (p+1)/2.
    check_parity : bool
        Require p = t+1 mod 2.

    Returns
    -------
    LinearCode
        Cyclic [p-1, p-1-t] code; generator rows are shifts of
        g(z) = prod (z - alpha^i), i < t, alpha the smallest primitive
        root. Lee and Euclidean distances are at least 2t.

    Raises
    ------
    DomainError
        p not prime or < 5, t out of range, parity.

    """
    p, t = int(p), int(t)
    if p < 5:
        raise excepts.DomainError("Lee BCH needs p >= 5, got %d" % p)
    fields.check_prime(p)
    if not 1 <= t <= (p + 1) // 2:
        raise excepts.DomainError("t must be in [1, (p+1)/2], got %d" % t)
    if check_parity and (p - t - 1) % 2:
        raise excepts.DomainError("p=%d must be congruent to t+1=%d mod 2" %
                                  (p, t + 1))
    gf = fields.prime_field(p)
    alpha = gf(fields.primitive_root(p))
    roots = alpha ** np.arange(t)
    g = galois.Poly.Roots(roots, field=gf)
    ascending = np.asarray(g.coeffs, dtype=np.int64)[::-1]
    n, k = p - 1, p - 1 - t
    generator = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        generator[i, i:i + t + 1] = ascending
    floor = 2 * t
    code = LinearCode(p, generator, floor, lee_floor=floor,
                      name="lee_bch(%d,%d)" % (p, t))
    code.generator_poly = g
    code.alpha = int(alpha)
    return code


class RSCode(object):
    """Reed-Solomon [n_out, k_out] evaluation code over GF(p^k).

    A message m_0..m_(k_out-1) maps to the values of sum m_i z^i at the
    first n_out field elements.
    """

    def __init__(self, p, k_inner, n_out, k_out):
        self.field = fields.extension_field(p, k_inner)
        self.p, self.k_inner = int(p), int(k_inner)
        self.n, self.k = int(n_out), int(k_out)
        if not 1 <= self.k <= self.n <= self.field.order:
            raise excepts.DomainError(
                "need 1 <= k_out <= n_out <= %d, got k_out=%d n_out=%d" %
                (self.field.order, self.k, self.n))
        self.points = self.field.elements[:self.n]
        powers = np.arange(self.k)
        self.generator = self.points[np.newaxis, :] ** powers[:, np.newaxis]

    @property
    def distance(self):
        """n - k + 1, maximum distance separable."""
        return self.n - self.k + 1

    @property
    def rate(self):
        return self.k / self.n

    @property
    def size(self):
        return self.field.order ** self.k

    def encode(self, messages):
        return self.field(messages) @ self.generator

    def weights(self, messages):
        """Hamming weights of the codewords of messages, as int64."""
        words = np.asarray(self.encode(messages), dtype=np.int64)
        return np.count_nonzero(words, axis=-1).astype(np.int64)

    def random_messages(self, count, gen=None):
        gen = gen if gen is not None else utils.rng()
        return self.field.Random((count, self.k),
                                 seed=int(gen.integers(0, 2 ** 31)))

    def distance_witness(self):
        """Message whose codeword has weight exactly n - k + 1: the
        polynomial vanishing at the first k-1 evaluation points."""
        coeffs = self.field.Zeros(self.k)
        if self.k == 1:
            coeffs[0] = 1
            return coeffs
        poly = galois.Poly.Roots(self.points[:self.k - 1], field=self.field)
        asc = poly.coeffs[::-1]
        coeffs[:asc.size] = asc
        return coeffs

    def __repr__(self):
        return "RS[%d, %d] over GF(%d^%d)" % (self.n, self.k, self.p,
                                              self.k_inner)


def rs_code(p, k_inner, n_out, k_out):
    return RSCode(p, k_inner, n_out, k_out)


class ConcatenatedCode(object):
    """Outer RS code over GF(p^k) with an inner [n, k] code over Z_p.

    Each outer symbol, as k coefficients over GF(p), is encoded by the
    inner code. Length n_out * n_in, squared Euclidean distance at least
    d_out times the inner floor.

    Raises
    ------
    DomainError
        Outer field is not GF(p^k) for the inner p and k.

    """

    def __init__(self, outer, inner):
        if outer.p != inner.q or outer.k_inner != inner.k:
            raise excepts.DomainError(
                "outer over GF(%d^%d) does not match inner [%d, %d] over "
                "Z_%d" % (outer.p, outer.k_inner, inner.n, inner.k, inner.q))
        self.outer = outer
        self.inner = inner

    @property
    def q(self):
        return self.inner.q

    @property
    def n(self):
        return self.outer.n * self.inner.n

    @property
    def size(self):
        return self.outer.size

    @property
    def metric_floor(self):
        return self.outer.distance * self.inner.metric_floor

    @property
    def name(self):
        return "%r o %r" % (self.outer, self.inner)

    def encode(self, messages):
        """Words over Z_p of outer messages, shape (m, n_out*n_in)."""
        outer_words = self.outer.encode(messages)
        symbols = np.asarray(outer_words.vector(), dtype=np.int64)
        inner = self.inner.encode(symbols.reshape(-1, self.inner.k))
        return inner.reshape(symbols.shape[0], self.n)

    def random_messages(self, count, gen=None):
        return self.outer.random_messages(count, gen)

    def codewords(self):
        if self.size > CODEBOOK_LIMIT:
            raise excepts.ScaleGuardError(
                "%s has %d codewords; sample instead" % (self.name,
                                                         self.size))
        field = self.outer.field
        msgs = field(utils.all_words(field.order, self.outer.k))
        return self.encode(msgs)

    def sample_words(self, count, gen=None):
        """Encodings of random messages."""
        return self.encode(self.random_messages(count, gen))

    def sampled_min_distance(self, pairs, gen=None):
        """Minimum squared Euclidean distance over random distinct pairs,
        or over all pairs when the codebook has at most 10^5 words."""
        table = euclid.Constellation.for_q(self.q).weight_table()
        if self.size <= PAIR_EXHAUSTIVE_LIMIT:
            words = self.codewords()
            c = euclid.Constellation.for_q(self.q)
            return MinWeight(int(euclid.min_sq_distance(words, c)),
                             ENGINE_EXHAUSTIVE)
        gen = gen if gen is not None else utils.rng()
        best = None
        done = 0
        while done < pairs:
            count = min(CHUNK, pairs - done)
            m1 = self.random_messages(count, gen)
            m2 = self.random_messages(count, gen)
            distinct = np.any(m1 != m2, axis=1)
            diff = (self.encode(m1[distinct]) -
                    self.encode(m2[distinct])) % self.q
            val = int(_weights(diff, self.q, table).min())
            best = val if best is None else min(best, val)
            done += int(distinct.sum())
        return MinWeight(best, ENGINE_SAMPLED)

    def concatenation_rate(self):
        """(rho floor, binary rate) from the concatenation line."""
        delta = self.outer.distance / float(self.outer.n)
        return bounds.concatenation_rate(self.inner.n, self.inner.k, self.q,
                                         self.inner.metric_floor,
                                         self.outer.rate, delta)

    def __repr__(self):
        return self.name


def concatenate(outer, inner):
    return ConcatenatedCode(outer, inner)


def binary_rate(size, n):
    """log2 |C| / (n+1), the rate of the lifted code."""
    return utils.log2_int(size) / (n + 1)


def lee_floor_holds(code):
    """Exact minimum Lee and Euclidean weights against the code floor."""
    found = min_weights(code, ("lee", "euclid"))
    return {metric: (res.guaranteed is not None and
                     res.guaranteed >= code.metric_floor, res)
            for metric, res in found.items()}
