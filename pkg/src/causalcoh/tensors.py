"""Dense tensor fields with exact rational-function components.

Components are stored densely with the flat index
``(((i_0 * n) + i_1) * n + ...) + i_{r-1}``; desk scale (n <= 4, rank <= 7)
keeps this comfortably small.  The covariant derivative exploits the
sparsity of conformally flat Christoffel symbols: corrections iterate over
the O(n) nonzero symbols instead of the dense n^3 cube.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .charts import Chart
from .polynomials import RationalFunction
from .young import YoungDiagram

LOWER = "l"
UPPER = "u"


class TensorError(ValueError):
    pass


class TensorField:
    """Tensor field on a chart; ``variance`` is a string of 'l'/'u' slots."""

    __slots__ = ("chart", "variance", "comps", "symmetry")

    def __init__(self, chart: Chart, variance: str, comps: Sequence[RationalFunction],
                 symmetry: YoungDiagram | None = None):
        self.chart = chart
        self.variance = variance
        n, r = chart.n, len(variance)
        if len(comps) != n ** r:
            raise TensorError(f"expected {n ** r} components, got {len(comps)}")
        self.comps = tuple(comps)
        self.symmetry = symmetry

    @property
    def rank(self) -> int:
        return len(self.variance)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, chart: Chart, variance: str) -> "TensorField":
        return cls(chart, variance, (chart.zero,) * (chart.n ** len(variance)))

    @classmethod
    def from_function(cls, chart: Chart, variance: str,
                      fn: Callable[[tuple], RationalFunction]) -> "TensorField":
        n, r = chart.n, len(variance)
        comps = [fn(idx) for idx in _indices(n, r)]
        return cls(chart, variance, comps)

    @classmethod
    def scalar(cls, chart: Chart, value: RationalFunction) -> "TensorField":
        return cls(chart, "", (value,))

    @classmethod
    def metric(cls, chart: Chart) -> "TensorField":
        return cls(chart, "ll", chart.metric, symmetry=YoungDiagram((2,)))

    @classmethod
    def inverse_metric(cls, chart: Chart) -> "TensorField":
        return cls(chart, "uu", chart.inverse_metric)

    # -- access -----------------------------------------------------------

    def get(self, *idx: int) -> RationalFunction:
        return self.comps[_flat(self.chart.n, idx)]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorField):
            return NotImplemented
        return (self.chart == other.chart and self.variance == other.variance
                and all(a == b for a, b in zip(self.comps, other.comps)))

    __hash__ = None

    # -- pointwise algebra --------------------------------------------------

    def __add__(self, other: "TensorField") -> "TensorField":
        self._check_compatible(other)
        return TensorField(self.chart, self.variance,
                           [a + b for a, b in zip(self.comps, other.comps)],
                           symmetry=self.symmetry if self.symmetry == other.symmetry else None)

    def __sub__(self, other: "TensorField") -> "TensorField":
        self._check_compatible(other)
        return TensorField(self.chart, self.variance,
                           [a - b for a, b in zip(self.comps, other.comps)],
                           symmetry=self.symmetry if self.symmetry == other.symmetry else None)

    def __neg__(self) -> "TensorField":
        return TensorField(self.chart, self.variance, [-a for a in self.comps],
                           symmetry=self.symmetry)

    def scale(self, c) -> "TensorField":
        if isinstance(c, RationalFunction):
            return TensorField(self.chart, self.variance,
                               [a * c for a in self.comps], symmetry=self.symmetry)
        c = c if isinstance(c, Fraction) else Fraction(c)
        return TensorField(self.chart, self.variance,
                           [a.scale(c) for a in self.comps], symmetry=self.symmetry)

    def _check_compatible(self, other: "TensorField") -> None:
        if self.chart != other.chart:
            raise TensorError("tensors live on different charts")
        if self.variance != other.variance:
            raise TensorError(f"variance mismatch: {self.variance} vs {other.variance}")


def _flat(n: int, idx) -> int:
    f = 0
    for i in idx:
        f = f * n + i
    return f


def _indices(n: int, r: int):
    if r == 0:
        yield ()
        return
    idx = [0] * r
    while True:
        yield tuple(idx)
        pos = r - 1
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < n:
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            return


# -- covariant derivative ---------------------------------------------------

def partial_tensor(t: TensorField) -> TensorField:
    """Coordinate derivative: one extra lower index, leftmost."""
    n = t.chart.n
    size = len(t.comps)
    out = []
    for c in range(n):
        out.extend(comp.derivative(c) for comp in t.comps)
    return TensorField(t.chart, LOWER + t.variance, out)


def nabla(t: TensorField) -> TensorField:
    """Covariant derivative (extra lower index, leftmost), exact.

    (nabla T)[c, J] = d_c T[J] - sum_i Gamma^d_{c J_i} T[J_i -> d]   (lower slots)
                              + sum_i Gamma^{J_i}_{c d} T[J_i -> d]  (upper slots)
    """
    chart = t.chart
    n = chart.n
    r = t.rank
    size = n ** r
    src = t.comps
    out = []
    for c in range(n):
        out.extend(comp.derivative(c) for comp in src)
    entries = chart.christoffel_entries
    for slot in range(r):
        block = n ** (r - 1 - slot)
        step = block * n
        lower = t.variance[slot] == LOWER
        for (d, c, a, gamma) in entries:
            # lower slot: out[c, ..a@slot..] -= gamma * src[..d@slot..]
            # upper slot: out[c, ..d@slot..] += gamma * src[..a@slot..]
            if lower:
                tgt_digit, src_digit = a, d
            else:
                tgt_digit, src_digit = d, a
            out_base = c * size + tgt_digit * block
            src_base = src_digit * block
            for prefix in range(n ** slot):
                ob = out_base + prefix * step
                sb = src_base + prefix * step
                for s in range(block):
                    v = src[sb + s]
                    if not v.is_zero():
                        contrib = gamma * v
                        if lower:
                            out[ob + s] = out[ob + s] - contrib
                        else:
                            out[ob + s] = out[ob + s] + contrib
    return TensorField(chart, LOWER + t.variance, out)


def box_tensor(t: TensorField) -> TensorField:
    """g^{cb} nabla_c nabla_b T for an all-lower tensor field.

    Only the components of the second derivative that hit nonzero inverse
    metric entries are computed (the inverse metric is diagonal here).
    """
    if UPPER in t.variance:
        raise TensorError("box is implemented for all-lower tensors")
    chart = t.chart
    n = chart.n
    r = t.rank
    s1 = nabla(t)  # rank r+1, variance l + old
    size = n ** r
    s1c = s1.comps
    ginv = chart.inverse_metric_diag
    out = [chart.zero] * size
    gamma_cc = {c: [(d, g) for (d, cc, a, g) in chart.christoffel_entries
                    if cc == c and a == c] for c in range(n)}
    entries = chart.christoffel_entries
    for c in range(n):
        gcc = ginv[c]
        if gcc.is_zero():
            continue
        # second derivative block (nabla s1)[c, c, J] for all J
        block_vals = [s1c[c * size + j].derivative(c) for j in range(size)]
        # correction on the first (derivative) slot of s1: -Gamma^d_{cc} s1[d, J]
        for (d, g) in gamma_cc[c]:
            base = d * size
            for j in range(size):
                v = s1c[base + j]
                if not v.is_zero():
                    block_vals[j] = block_vals[j] - g * v
        # corrections on the original slots
        for slot in range(r):
            block = n ** (r - 1 - slot)
            step = block * n
            for (d, cc, a, g) in entries:
                if cc != c:
                    continue
                tgt_base = a * block
                src_base = c * size + d * block
                for prefix in range(n ** slot):
                    tb = tgt_base + prefix * step
                    sb = src_base + prefix * step
                    for s in range(block):
                        v = s1c[sb + s]
                        if not v.is_zero():
                            block_vals[tb + s] = block_vals[tb + s] - g * v
        for j in range(size):
            v = block_vals[j]
            if not v.is_zero():
                out[j] = out[j] + gcc * v
    return TensorField(chart, t.variance, out)


# -- metric contractions -----------------------------------------------------

def trace_pair(t: TensorField, i: int, j: int) -> TensorField:
    """Contract two lower slots with the inverse metric: g^{ab} T[..a@i..b@j..]."""
    if i == j:
        raise TensorError("trace slots must differ")
    if t.variance[i] != LOWER or t.variance[j] != LOWER:
        raise TensorError("trace_pair contracts lower slots")
    chart = t.chart
    n = chart.n
    r = t.rank
    i, j = min(i, j), max(i, j)
    ginv = chart.inverse_metric_diag
    new_var = "".join(v for k, v in enumerate(t.variance) if k not in (i, j))
    out = []
    for idx in _indices(n, r - 2):
        total = chart.zero
        for a in range(n):
            g = ginv[a]
            if g.is_zero():
                continue
            full = list(idx[:i]) + [a] + list(idx[i:j - 1]) + [a] + list(idx[j - 1:])
            v = t.comps[_flat(n, full)]
            if not v.is_zero():
                total = total + g * v
        out.append(total)
    return TensorField(chart, new_var, out)


def raise_first_index(t: TensorField) -> TensorField:
    """g^{ab} T[b, ...] on the leftmost (lower) slot."""
    if not t.variance or t.variance[0] != LOWER:
        raise TensorError("first slot is not a lower index")
    chart = t.chart
    n = chart.n
    size = len(t.comps) // n
    ginv = chart.inverse_metric_diag
    out = []
    for a in range(n):
        g = ginv[a]
        out.extend((t.comps[a * size + s] * g) for s in range(size))
    return TensorField(chart, UPPER + t.variance[1:], out)


def metric_trace(t: TensorField) -> RationalFunction:
    """g^{ab} T_ab for a rank-2 lower tensor."""
    if t.variance != "ll":
        raise TensorError("metric_trace expects a rank-2 lower tensor")
    return trace_pair(t, 0, 1).comps[0]


# -- symmetrized products with the metric ------------------------------------

ODOT_SHAPES = ("s2s2", "s2_21", "s2_211")


def odot(chart: Chart, t: TensorField, shape: str) -> TensorField:
    """The metric-symmetrized products used by the constant-curvature complex.

    ``s2s2``  : symmetric h_bd -> (g@h)_abcd = g_ac h_bd - g_bc h_ad - g_ad h_bc + g_bd h_ac
    ``s2_21`` : t_{bc:e} (antisymmetric pair + single) -> rank 5 of type (2,2,1)
    ``s2_211``: t_{bcd:e} (antisymmetric triple + single) -> rank 6 of type (2,2,1,1)
    """
    n = chart.n
    g = chart.metric_component
    if shape == "s2s2":
        if t.rank != 2:
            raise TensorError("s2s2 expects a rank-2 input")
        _require_symmetry(t, ((0, 1), 1))
        out = []
        for a, b, c, d in _indices(n, 4):
            v = (g(a, c) * t.get(b, d) - g(b, c) * t.get(a, d)
                 - g(a, d) * t.get(b, c) + g(b, d) * t.get(a, c))
            out.append(v)
        return TensorField(chart, "llll", out, symmetry=YoungDiagram((2, 2)))
    if shape == "s2_21":
        if t.rank != 3:
            raise TensorError("s2_21 expects a rank-3 input")
        _require_symmetry(t, ((0, 1), -1))
        out = []
        for a, b, c, d, e in _indices(n, 5):
            v = (g(a, d) * t.get(b, c, e) + g(b, d) * t.get(c, a, e) + g(c, d) * t.get(a, b, e)
                 - g(a, e) * t.get(b, c, d) - g(b, e) * t.get(c, a, d) - g(c, e) * t.get(a, b, d))
            out.append(v)
        return TensorField(chart, "lllll", out, symmetry=YoungDiagram((2, 2, 1)))
    if shape == "s2_211":
        if t.rank != 4:
            raise TensorError("s2_211 expects a rank-4 input")
        _require_symmetry(t, ((0, 1), -1))
        out = []
        for a, b, c, d, e, f in _indices(n, 6):
            v = (g(a, e) * t.get(b, c, d, f) - g(b, e) * t.get(c, d, a, f)
                 + g(c, e) * t.get(d, a, b, f) - g(d, e) * t.get(a, b, c, f)
                 - g(a, f) * t.get(b, c, d, e) + g(b, f) * t.get(c, d, a, e)
                 - g(c, f) * t.get(d, a, b, e) + g(d, f) * t.get(a, b, c, e))
            out.append(v)
        return TensorField(chart, "llllll", out, symmetry=YoungDiagram((2, 2, 1, 1)))
    raise TensorError(f"unknown odot shape {shape!r}; expected one of {ODOT_SHAPES}")


def _require_symmetry(t: TensorField, requirement) -> None:
    """Cheap input check: (i,j) pair symmetric (+1) or antisymmetric (-1)."""
    (i, j), sign = requirement
    n = t.chart.n
    r = t.rank
    for idx in _indices(n, r):
        if idx[i] > idx[j]:
            continue
        swapped = list(idx)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        lhs = t.comps[_flat(n, idx)]
        rhs = t.comps[_flat(n, tuple(swapped))]
        if sign == 1:
            if not (lhs == rhs):
                raise TensorError("input lacks the required pair symmetry")
        else:
            if not (lhs == -rhs if not rhs.is_zero() else lhs.is_zero()):
                raise TensorError("input lacks the required pair antisymmetry")


def project(t: TensorField, diagram: YoungDiagram) -> TensorField:
    """Apply the Young-symmetry projector of ``diagram`` to a tensor field."""
    from .young import project_components
    if t.rank != diagram.cells:
        raise TensorError(
            f"diagram with {diagram.cells} cells cannot project a rank-{t.rank} tensor")
    comps = project_components(t.comps, t.chart.n, diagram, t.chart.zero)
    return TensorField(t.chart, t.variance, comps, symmetry=diagram)


TRACE_KINDS = ("h", "r", "b3", "b4")


def trace(t: TensorField, kind: str) -> TensorField:
    """The printed metric traces of the constant-curvature complex.

    ``h``  : scalar tr h = h_e^e           (rank 2 -> scalar)
    ``r``  : tr[r]_ab = r_{ae:b}^e         (rank 4 -> rank 2)
    ``b3`` : tr[b]_{ab:c} = b_{abe:c}^e    (rank 5 -> rank 3)
    ``b4`` : tr[b]_{abc:d} = b_{abce:d}^e  (rank 6 -> rank 4)
    """
    if kind == "h":
        if t.rank != 2:
            raise TensorError("trace kind 'h' expects rank 2")
        return TensorField.scalar(t.chart, metric_trace(t))
    if kind == "r":
        if t.rank != 4:
            raise TensorError("trace kind 'r' expects rank 4")
        return trace_pair(t, 1, 3)
    if kind == "b3":
        if t.rank != 5:
            raise TensorError("trace kind 'b3' expects rank 5")
        return trace_pair(t, 2, 4)
    if kind == "b4":
        if t.rank != 6:
            raise TensorError("trace kind 'b4' expects rank 6")
        return trace_pair(t, 3, 5)
    raise TensorError(f"unknown trace kind {kind!r}; expected one of {TRACE_KINDS}")
