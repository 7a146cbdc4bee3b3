"""Data model: weighted hypergraphs, coefficient tensors, chaos coefficients,
sign assignments, plus builders, adapters and the text formats."""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence, TextIO, Union

import numpy as np


class ParseError(ValueError):
    """Malformed input row; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """Raised when an enumeration would exceed the objective-update cap."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} updates, budget is {budget}")


# --------------------------------------------------------------------------
# Rademacher functions


def rademacher_eval(i: int, t: float) -> int:
    """r_i(t) = (-1)^floor(2^i t) on [0, 1)."""
    if int(i) != i or i < 1:
        raise ValueError(f"rademacher index must be a positive integer, got {i}")
    if not 0.0 <= t < 1.0:
        raise ValueError(f"t must lie in [0, 1), got {t}")
    return -1 if math.floor(math.ldexp(t, int(i))) % 2 else 1


def rademacher_point(signs: Sequence[int]) -> float:
    """A point t in [0, 1) with r_i(t) = signs[i-1] for every i.

    The i-th binary digit of t selects the sign of r_i; t is the midpoint of
    the resulting dyadic interval of length 2^-k.
    """
    t = 0.0
    for i, s in enumerate(signs, start=1):
        if s not in (1, -1):
            raise ValueError(f"signs must be +1 or -1, got {s}")
        if s == -1:
            t += math.ldexp(1.0, -i)
    return t + math.ldexp(1.0, -(len(signs) + 1))


# --------------------------------------------------------------------------
# bit-mask helpers shared by the enumeration code


def mask_to_signs(mask: int, n: int) -> np.ndarray:
    """Bit j set means +1 at position j."""
    return np.where((mask >> np.arange(n)) & 1, 1.0, -1.0)


def signs_to_mask(signs: Iterable[float]) -> int:
    return sum(1 << j for j, s in enumerate(signs) if s > 0)


def mask_to_indicator(mask: int, n: int) -> np.ndarray:
    return ((mask >> np.arange(n)) & 1).astype(float)


def indicator_to_mask(members: Iterable[float]) -> int:
    return sum(1 << j for j, z in enumerate(members) if z)


def mask_members(mask: int) -> list[int]:
    out, j = [], 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return out


# --------------------------------------------------------------------------
# domain types

Edge = tuple[tuple[int, ...], float]


@dataclass(frozen=True)
class WeightedHypergraph:
    """A d-uniform hypergraph on vertices 0..n-1 with real edge weights."""

    n: int
    d: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InvariantError(f"vertex count must be a positive integer, got {self.n}")
        if int(self.d) != self.d or self.d < 2:
            raise InvariantError(f"arity must be an integer >= 2, got {self.d}")
        clean = []
        seen = set()
        for k, (verts, w) in enumerate(self.edges):
            verts = tuple(int(v) for v in verts)
            if len(verts) != self.d:
                raise InvariantError(f"edge {k} has {len(verts)} vertices, expected {self.d}")
            if any(b <= a for a, b in zip(verts, verts[1:])):
                raise InvariantError(f"edge {k} vertices {verts} are not strictly increasing")
            if verts[0] < 0 or verts[-1] >= self.n:
                raise InvariantError(f"edge {k} vertices {verts} out of range [0, {self.n})")
            if verts in seen:
                raise InvariantError(f"duplicate edge {verts}")
            w = float(w)
            if not math.isfinite(w):
                raise InvariantError(f"edge {k} weight is not finite")
            seen.add(verts)
            clean.append((verts, w))
        object.__setattr__(self, "edges", tuple(clean))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for _, w in self.edges], dtype=float)

    @property
    def edge_masks(self) -> np.ndarray:
        return np.array([sum(1 << v for v in verts) for verts, _ in self.edges], dtype=np.int64)

    def with_weights(self, weights: Sequence[float]) -> "WeightedHypergraph":
        if len(weights) != self.m:
            raise InvariantError("weight count does not match edge count")
        return WeightedHypergraph(
            self.n, self.d, tuple((v, float(w)) for (v, _), w in zip(self.edges, weights))
        )


@dataclass(frozen=True, eq=False)
class CoeffTensor:
    """Dense order-d real array, stored read-only."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.array(self.values, dtype=float)
        if arr.ndim < 1:
            raise InvariantError("tensor order must be at least 1")
        if arr.size == 0 or min(arr.shape) < 1:
            raise InvariantError("tensor extents must be positive")
        if not np.all(np.isfinite(arr)):
            raise InvariantError("tensor entries must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @classmethod
    def from_flat(cls, dims: Sequence[int], flat: Sequence[float]) -> "CoeffTensor":
        dims = tuple(int(k) for k in dims)
        if any(k < 1 for k in dims):
            raise InvariantError("tensor extents must be positive")
        if len(flat) != math.prod(dims):
            raise InvariantError(
                f"values length {len(flat)} does not match dims product {math.prod(dims)}"
            )
        return cls(np.asarray(flat, dtype=float).reshape(dims))

    @property
    def d(self) -> int:
        return self.values.ndim

    @property
    def dims(self) -> tuple[int, ...]:
        return self.values.shape

    def __eq__(self, other):
        if not isinstance(other, CoeffTensor):
            return NotImplemented
        return self.dims == other.dims and bool(np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.dims, self.values.tobytes()))


@dataclass(frozen=True)
class SimplexCoeffs:
    """Coefficients on strictly increasing 1-based index tuples j_1 < ... < j_d <= n.

    Absent keys are zero.
    """

    d: int
    n: int
    values: Mapping[tuple[int, ...], float] = field(default_factory=dict)

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise InvariantError(f"chaos order must be >= 2, got {self.d}")
        if int(self.n) != self.n or self.n < self.d:
            raise InvariantError(f"ground set size n={self.n} must be >= d={self.d}")
        clean = {}
        for key, v in dict(self.values).items():
            key = tuple(int(j) for j in key)
            if len(key) != self.d:
                raise InvariantError(f"key {key} does not have {self.d} indices")
            if any(b <= a for a, b in zip(key, key[1:])):
                raise InvariantError(f"key {key} is not strictly increasing")
            if key[0] < 1 or key[-1] > self.n:
                raise InvariantError(f"key {key} out of range [1, {self.n}]")
            v = float(v)
            if not math.isfinite(v):
                raise InvariantError(f"coefficient at {key} is not finite")
            clean[key] = v
        object.__setattr__(self, "values", MappingProxyType(dict(sorted(clean.items()))))

    def __hash__(self):
        return hash((self.d, self.n, tuple(self.values.items())))

    def keys_array(self) -> np.ndarray:
        """0-based index rows, shape (len, d), in sorted key order."""
        if not self.values:
            return np.zeros((0, self.d), dtype=np.int64)
        return np.array(list(self.values.keys()), dtype=np.int64) - 1

    def coeffs_array(self) -> np.ndarray:
        return np.array(list(self.values.values()), dtype=float)

    def upper_dense(self) -> np.ndarray:
        """n^d array holding a_j at 0-based increasing positions, zero elsewhere."""
        out = np.zeros((self.n,) * self.d)
        for key, v in self.values.items():
            out[tuple(j - 1 for j in key)] = v
        return out

    def symmetric_matrix(self) -> np.ndarray:
        """For d = 2: S with S[i,j] = S[j,i] = a_{i+1,j+1} and zero diagonal."""
        if self.d != 2:
            raise ValueError("symmetric_matrix is defined for order 2 only")
        up = self.upper_dense()
        return up + up.T

    def scaled(self, factor: float) -> "SimplexCoeffs":
        return SimplexCoeffs(self.d, self.n, {k: factor * v for k, v in self.values.items()})


def _check_signs(signs) -> tuple[int, ...]:
    out = []
    for s in signs:
        if s not in (1, -1):
            raise InvariantError(f"sign entries must be +1 or -1, got {s!r}")
        out.append(int(s))
    return tuple(out)


@dataclass(frozen=True)
class Coloring:
    """One +-1 per edge, aligned by edge index."""

    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", _check_signs(self.signs))

    def __len__(self):
        return len(self.signs)

    def __neg__(self):
        return Coloring(tuple(-s for s in self.signs))

    @property
    def mask(self) -> int:
        return signs_to_mask(self.signs)

    @classmethod
    def from_mask(cls, mask: int, m: int) -> "Coloring":
        return cls(tuple(1 if (mask >> e) & 1 else -1 for e in range(m)))

    def as_array(self) -> np.ndarray:
        return np.array(self.signs, dtype=float)


@dataclass(frozen=True)
class SignPattern:
    """+-1 per cell of a CoeffTensor (row-major) or per key of a SimplexCoeffs."""

    signs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "signs", _check_signs(self.signs))

    def __len__(self):
        return len(self.signs)

    def apply(self, target):
        if isinstance(target, CoeffTensor):
            if len(self) != target.values.size:
                raise InvariantError("sign pattern length does not match tensor size")
            return CoeffTensor(target.values * np.reshape(self.signs, target.dims))
        if isinstance(target, SimplexCoeffs):
            if len(self) != len(target.values):
                raise InvariantError("sign pattern length does not match key count")
            return SimplexCoeffs(
                target.d, target.n, {k: s * v for (k, v), s in zip(target.values.items(), self.signs)}
            )
        raise TypeError(f"cannot apply a sign pattern to {type(target).__name__}")


@dataclass(frozen=True)
class MixedNormProfile:
    """M_k = sum over slices j_k = l of the Euclidean norm of the slice, k = 1..d."""

    m: tuple[float, ...]

    def __post_init__(self):
        m = tuple(float(x) for x in self.m)
        if any(x < 0 for x in m):
            raise InvariantError("mixed norms are non-negative")
        object.__setattr__(self, "m", m)

    @property
    def d(self) -> int:
        return len(self.m)

    def max(self) -> float:
        return max(self.m) if self.m else 0.0


# --------------------------------------------------------------------------
# builders and adapters

WeightSpec = Union[float, Callable[[tuple[int, ...]], float]]


def build_complete(n: int, d: int, weight: WeightSpec = 1.0) -> WeightedHypergraph:
    """All C(n, d) d-subsets of range(n); ``weight`` is a constant or a function of the edge."""
    if d < 2 or d > n:
        raise InvariantError(f"need 2 <= d <= n, got n={n}, d={d}")
    fn = weight if callable(weight) else (lambda e, w=float(weight): w)
    return WeightedHypergraph(n, d, tuple((e, fn(e)) for e in combinations(range(n), d)))


def build_bipartite(weights: CoeffTensor) -> WeightedHypergraph:
    """Complete bipartite graph: left block [0, n), right block [n, n+m)."""
    if weights.d != 2:
        raise InvariantError(f"bipartite graphs need an order-2 tensor, got order {weights.d}")
    n, m = weights.dims
    a = weights.values
    return WeightedHypergraph(
        n + m, 2, tuple(((i, n + j), float(a[i, j])) for i in range(n) for j in range(m))
    )


def chaos_coeffs(h: WeightedHypergraph) -> SimplexCoeffs:
    return SimplexCoeffs(h.d, h.n, {tuple(v + 1 for v in verts): w for verts, w in h.edges})


def hypergraph_from_chaos(a: SimplexCoeffs) -> WeightedHypergraph:
    """Inverse of chaos_coeffs, up to zero coefficients being kept as edges."""
    return WeightedHypergraph(a.n, a.d, tuple((tuple(j - 1 for j in k), v) for k, v in a.values.items()))


def upper_triangle_coeffs(a: CoeffTensor) -> SimplexCoeffs:
    """Chaos coefficients a_{ij}, i < j, read from a square matrix."""
    if a.d != 2 or a.dims[0] != a.dims[1]:
        raise InvariantError("need a square matrix")
    n = a.dims[0]
    return SimplexCoeffs(
        2, n, {(i + 1, j + 1): a.values[i, j] for i in range(n) for j in range(i + 1, n)}
    )


# --------------------------------------------------------------------------
# text formats


def _as_stream(src) -> TextIO:
    return io.StringIO(src) if isinstance(src, str) else src


def parse_hypergraph(src: TextIO | str) -> WeightedHypergraph:
    """Header ``n d``, then one edge per line: d vertex indices and a weight.

    Blank lines and lines starting with ``#`` are skipped.
    """
    header = None
    edges = []
    for lineno, raw in enumerate(_as_stream(src), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError("header must be 'n d'", lineno)
            try:
                header = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise ParseError(f"bad header {line!r}", lineno) from None
            continue
        d = header[1]
        if len(parts) != d + 1:
            raise ParseError(f"expected {d} vertices and a weight, got {len(parts)} fields", lineno)
        try:
            verts = tuple(int(p) for p in parts[:d])
            w = float(parts[d])
        except ValueError:
            raise ParseError(f"bad edge row {line!r}", lineno) from None
        if any(b <= a for a, b in zip(verts, verts[1:])):
            raise InvariantError(f"line {lineno}: edge vertices {verts} are not strictly increasing")
        edges.append((verts, w))
    if header is None:
        raise ParseError("missing header line", None)
    return WeightedHypergraph(header[0], header[1], tuple(edges))


def format_hypergraph(h: WeightedHypergraph) -> str:
    lines = [f"{h.n} {h.d}"]
    lines += [" ".join(map(str, v)) + f" {w!r}" for v, w in h.edges]
    return "\n".join(lines) + "\n"


def parse_tensor(src: TextIO | str) -> CoeffTensor:
    """CSV matrix (rows = first index) or JSON ``{"dims": [...], "values": [...]}``."""
    text = _as_stream(src).read()
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        if not isinstance(obj, dict) or "dims" not in obj or "values" not in obj:
            raise ParseError("tensor JSON needs 'dims' and 'values'", 1)
        try:
            flat = [float(v) for v in obj["values"]]
        except (TypeError, ValueError):
            raise ParseError("tensor values must be numbers", 1) from None
        return CoeffTensor.from_flat(obj["dims"], flat)

    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            row = [float(c) for c in line.split(",")]
        except ValueError:
            raise ParseError(f"bad CSV row {line!r}", lineno) from None
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} columns, expected {len(rows[0])}", lineno)
        rows.append(row)
    if not rows:
        raise ParseError("empty matrix", None)
    return CoeffTensor(np.array(rows))


def format_tensor(a: CoeffTensor) -> str:
    if a.d == 2:
        return "\n".join(",".join(repr(float(x)) for x in row) for row in a.values) + "\n"
    return json.dumps({"dims": list(a.dims), "values": [float(x) for x in a.values.ravel()]}) + "\n"
