# Copyright (C) 2024 Callum Dickinson
#
# bhix is free software: you can redistribute it and/or modify it under the terms of the
# GNU General Public License as published by the Free Software Foundation,
# either version 3 of the License, or (at your option) any later version.
#
# bhix is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
# See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with bhix.
# If not, see <https://www.gnu.org/licenses/>.


"""
Parametric graph families: stars, paths, complete graphs, cycles,
double stars and firefly graphs.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from .exceptions import InvalidParams
from .graph import Graph, from_edge_list
from .types import BaseEnum, NonNegativeInt

if TYPE_CHECKING:
    from typing_extensions import Self


class FamilyKind(BaseEnum):
    """
    Supported graph families.
    """

    star = "star"
    path = "path"
    complete = "complete"
    cycle = "cycle"
    empty = "empty"
    double_star = "double-star"
    firefly = "firefly"


class FamilySpec(BaseModel):
    """
    A member of a parametric graph family.

    * `star`, `path`, `complete`, `cycle`, `empty`: parameter `n`.
    * `double-star`: `a` pendants on one centre and `b` on the other (`a, b >= 1`).
    * `firefly`: `s` triangles, `t` pendant paths of length 2 and `q` pendant edges
      sharing one vertex. Either `q` or `n` may be given, with `q = n - 2s - 2t - 1`.

    ```python
    FamilySpec(kind="firefly", s=1, t=1, n=7)  # q = 2
    ```
    """

    model_config = ConfigDict(frozen=True, use_attribute_docstrings=True)

    kind: FamilyKind
    n: Optional[NonNegativeInt] = None
    """
    Graph order. Derived from the other parameters for double stars and fireflies.
    """

    a: Optional[NonNegativeInt] = None
    b: Optional[NonNegativeInt] = None
    s: Optional[NonNegativeInt] = None
    t: Optional[NonNegativeInt] = None
    q: Optional[NonNegativeInt] = None

    @model_validator(mode="after")
    def validate_params(self) -> Self:
        kind = self.kind
        if kind == FamilyKind.double_star:
            if self.a is None or self.b is None:
                raise ValueError("Double star requires both 'a' and 'b'")
            if self.a < 1 or self.b < 1:
                raise ValueError(
                    f"Double star requires a >= 1 and b >= 1, got a={self.a}, b={self.b}",
                )
            order = self.a + self.b + 2
            if self.n is not None and self.n != order:
                raise ValueError(
                    f"Double star S({self.a},{self.b}) has order {order}, not {self.n}",
                )
            object.__setattr__(self, "n", order)
        elif kind == FamilyKind.firefly:
            s = self.s or 0
            t = self.t or 0
            if self.q is None:
                if self.n is None:
                    raise ValueError("Firefly requires either 'q' or 'n'")
                q = self.n - 2 * s - 2 * t - 1
                if q < 0:
                    raise ValueError(
                        f"Firefly requires q = n - 2s - 2t - 1 >= 0, got q={q} "
                        f"(n={self.n}, s={s}, t={t})",
                    )
            else:
                q = self.q
                order = 2 * s + 2 * t + q + 1
                if self.n is not None and self.n != order:
                    raise ValueError(f"Firefly F({s},{t},{q}) has order {order}, not {self.n}")
            object.__setattr__(self, "s", s)
            object.__setattr__(self, "t", t)
            object.__setattr__(self, "q", q)
            object.__setattr__(self, "n", 2 * s + 2 * t + q + 1)
        else:
            if self.n is None or self.n < 1:
                raise ValueError(f"Family '{kind}' requires n >= 1")
            if kind == FamilyKind.cycle and self.n < 3:
                raise ValueError(f"Cycle requires n >= 3, got n={self.n}")
        return self

    @classmethod
    def create(cls, **kwargs: Any) -> Self:
        """
        Validate family parameters, raising `InvalidParams` on failure.
        """

        try:
            return cls(**kwargs)
        except ValidationError as err:
            raise InvalidParams(f"Invalid family parameters {kwargs}: {err}") from None

    @property
    def order(self) -> int:
        assert self.n is not None
        return self.n

    def expected_edge_count(self) -> int:
        """
        Closed-form edge count of the family member.
        """

        n = self.order
        return {
            FamilyKind.star: n - 1,
            FamilyKind.path: n - 1,
            FamilyKind.complete: n * (n - 1) // 2,
            FamilyKind.cycle: n,
            FamilyKind.empty: 0,
            FamilyKind.double_star: (self.a or 0) + (self.b or 0) + 1,
            FamilyKind.firefly: 3 * (self.s or 0) + 2 * (self.t or 0) + (self.q or 0),
        }[self.kind]

    def label(self) -> str:
        if self.kind == FamilyKind.double_star:
            return f"S({self.a},{self.b})"
        if self.kind == FamilyKind.firefly:
            return f"F({self.s},{self.t},{self.q})"
        return f"{self.kind.value}({self.n})"


def _star_edges(n: int) -> List[Tuple[int, int]]:
    return [(0, v) for v in range(1, n)]


def _firefly_edges(s: int, t: int, q: int) -> List[Tuple[int, int]]:
    edges: List[Tuple[int, int]] = []
    v = 1
    for _ in range(s):
        edges.extend([(0, v), (0, v + 1), (v, v + 1)])
        v += 2
    # The shared vertex is an endpoint of each pendant path 0 - x - y.
    for _ in range(t):
        edges.extend([(0, v), (v, v + 1)])
        v += 2
    for _ in range(q):
        edges.append((0, v))
        v += 1
    return edges


def generate(spec: FamilySpec) -> Graph:
    """
    Construct the graph described by a family specification.

    Vertex `0` is the centre of stars and fireflies, and the `a`-side centre
    of double stars (the other centre is vertex `1`).

    Args:
        spec (FamilySpec): Family member.

    Returns:
        Graph object
    """

    n = spec.order
    kind = spec.kind
    if kind == FamilyKind.star:
        edges = _star_edges(n)
    elif kind == FamilyKind.path:
        edges = [(v, v + 1) for v in range(n - 1)]
    elif kind == FamilyKind.complete:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif kind == FamilyKind.cycle:
        edges = [(v, (v + 1) % n) for v in range(n)]
    elif kind == FamilyKind.empty:
        edges = []
    elif kind == FamilyKind.double_star:
        a, b = spec.a or 0, spec.b or 0
        edges = [(0, 1)]
        edges.extend((0, v) for v in range(2, a + 2))
        edges.extend((1, v) for v in range(a + 2, a + b + 2))
    else:
        edges = _firefly_edges(spec.s or 0, spec.t or 0, spec.q or 0)
    return from_edge_list(n, edges)


def family(kind: str, **params: int) -> Graph:
    """
    Shortcut for `generate(FamilySpec.create(kind=kind, **params))`.
    """

    return generate(FamilySpec.create(kind=FamilyKind.from_name_str(kind), **params))


def double_star_params(n: int) -> List[Dict[str, int]]:
    """
    All double star parameters `(a, b)` with `a <= b` and `a + b = n - 2`.
    """

    return [{"a": a, "b": n - 2 - a} for a in range(1, (n - 2) // 2 + 1)]


def firefly_params(n: int) -> List[Dict[str, int]]:
    """
    All valid firefly parameters `(s, t, q)` of order `n`.
    """

    return [
        {"s": s, "t": t, "q": n - 2 * s - 2 * t - 1}
        for s in range((n - 1) // 2 + 1)
        for t in range((n - 1 - 2 * s) // 2 + 1)
    ]
