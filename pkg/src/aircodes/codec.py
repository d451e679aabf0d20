"""Vector linear index codes built from AIR matrices.

Each message ``x_k`` has ``t = b(m+1)`` coordinates. Coordinates are packed
``m+1`` at a time into extended symbols

    y[k, j] = sum_{i=0..m} x[k - i, j(m+1) + i]        (indices mod K)

which turns consecutive interference into neighbouring interference. The
``Kb`` extended symbols are then mixed by a ``Kb x N`` AIR matrix with
``N = b(D+2m+1) + a``. Indices are 0-based throughout; the text renderings
use 1-based ``j`` and coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

import numpy as np
from gmpy2 import mpq

from .air import AirMatrix, build_air
from .errors import DecodingError, ParameterError
from .field import GF, GF2, isolating_combinations, matmul
from .problem import SciInstance, interference_set, side_info_set
from .rates import RatePair, find_optimal_pair, is_member


@dataclass(frozen=True, eq=False)
class CodeBook:
    inst: SciInstance
    pair: RatePair
    air: AirMatrix
    t: int
    N: int
    extended_map: tuple  # extended_map[k*b + j] = ((msg, coord), ...)
    encoding_matrix: np.ndarray = dc_field(repr=False)

    def __post_init__(self):
        self.encoding_matrix.setflags(write=False)

    @property
    def b(self) -> int:
        return self.pair.b

    @property
    def rate(self) -> mpq:
        return mpq(self.N, self.t)

    def symbol_index(self, k: int, j: int) -> int:
        return (k % self.inst.K) * self.b + j

    def coordinate_row(self, k: int, c: int) -> int:
        return (k % self.inst.K) * self.t + c

    def symbol_of(self, k: int, c: int) -> tuple:
        """``(k', j)`` of the extended symbol that contains ``x[k, c]``."""
        j, i = divmod(c, self.inst.m + 1)
        return ((k + i) % self.inst.K, j)

    def message_rows(self, messages) -> np.ndarray:
        """Flat encoding-matrix row indices for every coordinate of ``messages``."""
        return np.array([k * self.t + c for k in sorted(messages) for c in range(self.t)], dtype=np.int64)


def _coerce_pair(inst: SciInstance, pair) -> RatePair:
    if pair is None:
        a, b = find_optimal_pair(inst)
    elif isinstance(pair, RatePair):
        a, b = pair.a, pair.b
    else:
        a, b = pair
    return is_member(inst, a, b)


def build_codebook(inst: SciInstance, pair=None) -> CodeBook:
    """Assemble the encoder for ``inst`` from a member pair ``(a, b)``.

    ``pair`` may be a :class:`RatePair`, an ``(a, b)`` tuple or ``None``
    (use the optimal pair).
    """
    rp = _coerce_pair(inst, pair)
    if not rp.member:
        raise ParameterError(
            f"(a, b) = ({rp.a}, {rp.b}) is not achievable for {inst}: "
            f"gcd witness {rp.gcd_witness} < {rp.threshold}"
        )
    K, m, b = inst.K, inst.m, rp.b
    t = b * (m + 1)
    N = rp.length
    if N > K * b:
        raise ParameterError(f"code length {N} exceeds the {K * b} extended symbols; choose a smaller a")
    air = build_air(K * b, N)

    ext = []
    enc = np.zeros((K * t, N), dtype=np.int64)
    for k in range(K):
        for j in range(b):
            terms = tuple(((k - i) % K, j * (m + 1) + i) for i in range(m + 1))
            ext.append(terms)
            row = air.matrix[k * b + j]
            for msg, coord in terms:
                enc[msg * t + coord] = row
    return CodeBook(inst, rp, air, t, N, tuple(ext), enc)


def _message_vector(cb: CodeBook, messages, field: GF) -> np.ndarray:
    x = np.asarray(messages, dtype=np.int64)
    if x.shape != (cb.inst.K, cb.t):
        raise ParameterError(f"messages must have shape ({cb.inst.K}, {cb.t}), got {x.shape}")
    return x.reshape(-1) % field.p


def encode(cb: CodeBook, messages, field: GF = GF2) -> np.ndarray:
    """Codeword ``x @ L`` for a ``K x t`` message array."""
    x = _message_vector(cb, messages, field)
    return matmul(x, cb.encoding_matrix, field)


def extended_symbols(cb: CodeBook, messages, field: GF = GF2) -> np.ndarray:
    x = _message_vector(cb, messages, field).reshape(cb.inst.K, cb.t)
    y = np.array([sum(int(x[k, c]) for k, c in terms) for terms in cb.extended_map], dtype=np.int64)
    return y % field.p


def encode_extended(cb: CodeBook, messages, field: GF = GF2) -> np.ndarray:
    """Codeword via the extended symbols: ``sum_r y_r * L_r``."""
    y = extended_symbols(cb, messages, field)
    return (y @ cb.air.matrix) % field.p


@dataclass
class DecodabilityReport:
    field: GF
    receivers: dict  # k -> list of per-coordinate booleans

    @property
    def ok(self) -> bool:
        return all(all(v) for v in self.receivers.values())

    @property
    def failures(self) -> list:
        return [(k, i) for k, flags in self.receivers.items() for i, good in enumerate(flags) if not good]


@lru_cache(maxsize=256)
def _receiver_rows(inst: SciInstance, t: int):
    """Flat row indices per receiver, one row of each array per receiver.

    Returns ``(unknown, own, side)``: the rows of the interfering messages
    and of ``x_k`` (sorted), the positions of ``x_k``'s rows inside
    ``unknown``, and the side-information rows.
    """
    K = inst.K
    blind = sorted(interference_set(inst, 0))
    side = sorted(side_info_set(inst, 0))
    ks = np.arange(K)[:, None]
    coords = np.arange(t)

    def rows(offsets):
        msgs = np.sort((ks + np.array(offsets, dtype=np.int64)) % K, axis=1)
        return msgs, (msgs[:, :, None] * t + coords).reshape(K, -1)

    msgs, unknown = rows([0, *blind])
    own = (msgs == ks).argmax(axis=1)[:, None] * t + coords
    _, side_rows = rows(side)
    out = (unknown, own, side_rows)
    for arr in out:
        arr.setflags(write=False)
    return out


def _isolate(E, inst: SciInstance, t: int, field: GF):
    unknown, own, _ = _receiver_rows(inst, t)
    return isolating_combinations(E, unknown, own, field)


def check_alignment(encoding, inst: SciInstance, t: int, field: GF = GF2) -> DecodabilityReport:
    """Decodability test for an arbitrary ``Kt x N`` encoding matrix.

    Coordinate ``i`` of receiver ``k`` is decodable iff its row is outside
    the span of every interfering message's rows together with the other
    ``t - 1`` rows of ``x_k``. Equivalently, some column combination of the
    encoding matrix is the unit vector on that row within those rows.
    """
    E = field.matrix(encoding)
    if E.shape[0] != inst.K * t:
        raise ParameterError(f"encoding matrix needs {inst.K * t} rows, got {E.shape[0]}")
    _, ok = _isolate(E, inst, t, field)
    return DecodabilityReport(field, {k: [bool(v) for v in ok[k]] for k in range(inst.K)})


@lru_cache(maxsize=8)
def _isolate_codebook(cb: CodeBook, field: GF):
    # shared by verify_decodability and derive_recipes, which usually run back to back
    W, ok = _isolate(cb.encoding_matrix, cb.inst, cb.t, field)
    W.setflags(write=False)
    ok.setflags(write=False)
    return W, ok


def verify_decodability(cb: CodeBook, field: GF = GF2) -> DecodabilityReport:
    _, ok = _isolate_codebook(cb, field)
    return DecodabilityReport(field, {k: [bool(v) for v in ok[k]] for k in range(cb.inst.K)})


@dataclass(frozen=True)
class DecodingRecipe:
    """How receiver ``k`` recovers each of its ``t`` coordinates.

    ``combos[c]`` weights the ``N`` code symbols; ``corrections[c]`` weights
    the side-information coordinates listed (as flat ``msg * t + coord``
    indices) in ``side_rows``. Then

        x[k, c] = combos[c] . codeword - corrections[c] . x[side_rows]
    """

    k: int
    combos: np.ndarray
    side_rows: np.ndarray
    corrections: np.ndarray

    def symbols_used(self, c: int) -> list:
        return [int(i) for i in np.flatnonzero(self.combos[c])]


def derive_recipes(cb: CodeBook, field: GF = GF2) -> list:
    """One :class:`DecodingRecipe` per receiver, solved jointly per receiver."""
    inst, t = cb.inst, cb.t
    E = cb.encoding_matrix
    side = _receiver_rows(inst, t)[2]
    W, ok = _isolate_codebook(cb, field)
    if not ok.all():
        bad = [(int(k), int(c)) for k, c in zip(*np.nonzero(~ok))]
        raise DecodingError(f"undecodable (receiver, coordinate) pairs: {bad}", bad)
    # effect[k, c] = L @ combo, restricted below to receiver k's side info
    effect = matmul(W.reshape(-1, cb.N), E.T, field).reshape(inst.K, t, -1)
    return [
        DecodingRecipe(k, W[k], side[k], effect[k][:, side[k]])
        for k in range(inst.K)
    ]


def recipe_is_sound(cb: CodeBook, recipe: DecodingRecipe, field: GF = GF2) -> bool:
    """Symbolic check: ``L @ combo`` is the unit vector on the wanted
    coordinate plus exactly the stated side-information correction."""
    E = cb.encoding_matrix
    side = set(int(r) for r in recipe.side_rows)
    for c in range(cb.t):
        effect = (E @ recipe.combos[c]) % field.p
        expected = np.zeros(E.shape[0], dtype=np.int64)
        expected[recipe.side_rows] = recipe.corrections[c]
        expected[recipe.k * cb.t + c] = 1
        if recipe.k * cb.t + c in side:
            return False
        if not np.array_equal(effect, expected):
            return False
    return True


def apply_recipe(recipe: DecodingRecipe, codeword, side_values, field: GF = GF2) -> np.ndarray:
    """Recover all ``t`` coordinates from the codeword and known side info."""
    codeword = np.asarray(codeword, dtype=np.int64)
    side_values = np.asarray(side_values, dtype=np.int64)
    return (recipe.combos @ codeword - recipe.corrections @ side_values) % field.p


@dataclass
class SimulationReport:
    seed: int
    total: int
    recovered: int
    mismatches: list  # (k, c, expected, got)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.recovered == self.total


@dataclass(frozen=True)
class Decoder:
    """All receivers' recipes stacked into two matrices.

    Row ``k*t + c`` of ``combos`` is receiver ``k``'s code-symbol weights
    for coordinate ``c``; the same row of ``corrections`` is zero outside
    receiver ``k``'s side-information coordinates.
    """

    combos: np.ndarray
    corrections: np.ndarray

    @classmethod
    def from_recipes(cls, cb: CodeBook, recipes) -> "Decoder":
        t = cb.t
        combos = np.zeros((cb.inst.K * t, cb.N), dtype=np.int64)
        corrections = np.zeros((cb.inst.K * t, cb.inst.K * t), dtype=np.int64)
        for rec in recipes:
            rows = slice(rec.k * t, (rec.k + 1) * t)
            combos[rows] = rec.combos
            corrections[rows, rec.side_rows] = rec.corrections
        return cls(combos, corrections)

    def decode(self, codeword, messages_flat, field: GF = GF2) -> np.ndarray:
        return (matmul(self.combos, codeword, field) - matmul(self.corrections, messages_flat, field)) % field.p


def _random_messages(cb: CodeBook, seed: int, field: GF) -> np.ndarray:
    return np.random.default_rng(seed).integers(0, field.p, size=(cb.inst.K, cb.t))


def _decoder_for(cb: CodeBook, field: GF, recipes, decoder):
    if decoder is not None:
        return decoder
    if recipes is None:
        recipes = derive_recipes(cb, field)
    return Decoder.from_recipes(cb, recipes)


def _report(cb: CodeBook, seed, x: np.ndarray, got: np.ndarray) -> SimulationReport:
    wrong = np.flatnonzero(got != x)
    mismatches = [(int(r) // cb.t, int(r) % cb.t, int(x[r]), int(got[r])) for r in wrong]
    return SimulationReport(seed, x.size, x.size - wrong.size, mismatches)


def simulate_roundtrip(
    cb: CodeBook, seed: int = 0, field: GF = GF2, recipes=None, messages=None, decoder: Decoder | None = None
) -> SimulationReport:
    """Encode pseudorandom messages and decode them at every receiver.

    Each receiver only touches the codeword and its own side-information
    coordinates. Pass ``recipes`` or a prebuilt ``decoder`` to reuse them
    across seeds.
    """
    decoder = _decoder_for(cb, field, recipes, decoder)
    if messages is None:
        messages = _random_messages(cb, seed, field)
    x = _message_vector(cb, messages, field)
    return _report(cb, seed, x, decoder.decode(encode(cb, messages, field), x, field))


def simulate_many(cb: CodeBook, seeds, field: GF = GF2, recipes=None, decoder: Decoder | None = None) -> list:
    """:func:`simulate_roundtrip` for several seeds, decoded as one batch."""
    seeds = list(seeds)
    if not seeds:
        return []
    decoder = _decoder_for(cb, field, recipes, decoder)
    X = np.stack([_message_vector(cb, _random_messages(cb, s, field), field) for s in seeds], axis=1)
    codewords = matmul(cb.encoding_matrix.T, X, field)
    got = decoder.decode(codewords, X, field)
    return [_report(cb, s, X[:, i], got[:, i]) for i, s in enumerate(seeds)]


def interfering_symbols(cb: CodeBook, k: int, c: int) -> list:
    """Extended symbols that interfere with decoding ``x[k, c]``.

    A symbol interferes if it carries a message receiver ``k`` is blind to,
    or any coordinate of ``x_k`` (assumed not yet decoded). The symbol that
    carries ``x[k, c]`` itself is excluded.
    """
    blind = interference_set(cb.inst, k)
    target = cb.symbol_index(*cb.symbol_of(k, c))
    out = []
    for r, terms in enumerate(cb.extended_map):
        if r != target and any(msg in blind or msg == k for msg, _ in terms):
            out.append(r)
    return out


def format_extended_map(cb: CodeBook) -> list:
    lines = []
    for r, terms in enumerate(cb.extended_map):
        k, j = divmod(r, cb.b)
        rhs = " + ".join(f"x[{msg},{coord + 1}]" for msg, coord in terms)
        lines.append(f"y[{k},{j + 1}] = {rhs}")
    return lines


def code_symbol_terms(cb: CodeBook, i: int) -> list:
    """Extended symbols ``(k, j)`` (0-based ``j``) mixed into code symbol ``i``."""
    return [divmod(int(r), cb.b) for r in np.flatnonzero(cb.air.matrix[:, i])]


def code_symbol_messages(cb: CodeBook, i: int) -> list:
    """Message coordinates ``(msg, coord)`` in code symbol ``i``, in extended-symbol order."""
    return [term for r in np.flatnonzero(cb.air.matrix[:, i]) for term in cb.extended_map[int(r)]]


def format_code_symbols(cb: CodeBook) -> list:
    lines = []
    for i in range(cb.N):
        rhs = " + ".join(f"y[{k},{j + 1}]" for k, j in code_symbol_terms(cb, i))
        lines.append(f"c[{i}] = {rhs}")
    return lines
