"""Evaluable holomorphic maps between the disc and the symmetrized bidisc."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from ..errors import ArityMismatch, ExprSyntaxError, PoleHit
from ..geometry import Point, condition_c2_roots
from . import expr as ex


class Arity(enum.Enum):
    DISC_TO_DISC = "DiscToDisc"
    G2_TO_DISC = "G2ToDisc"
    DISC_TO_G2 = "DiscToG2"
    G2_TO_G2 = "G2ToG2"

    @property
    def n_in(self) -> int:
        return 2 if self in (Arity.G2_TO_DISC, Arity.G2_TO_G2) else 1

    @property
    def n_out(self) -> int:
        return 2 if self in (Arity.DISC_TO_G2, Arity.G2_TO_G2) else 1

    @classmethod
    def from_shape(cls, n_in: int, n_out: int) -> "Arity":
        for a in cls:
            if a.n_in == n_in and a.n_out == n_out:
                return a
        raise ArityMismatch(f"no arity with {n_in} inputs and {n_out} outputs")


def _finite(w: complex) -> bool:
    return math.isfinite(w.real) and math.isfinite(w.imag)


@dataclass(frozen=True)
class HoloMap:
    """A holomorphic map with a declared arity.

    ``func`` receives the input as a tuple of complex numbers (length
    ``arity.n_in``) and returns a tuple of length ``arity.n_out``.  Maps
    built from expressions keep their ASTs in ``exprs`` so they can be
    serialized again.
    """

    func: Callable[[tuple], tuple]
    arity: Arity
    name: str = "map"
    exprs: tuple = field(default=(), compare=False)

    def _coerce(self, z) -> tuple:
        if isinstance(z, (Point, tuple, list, np.ndarray)):
            args = tuple(complex(w) for w in z)
        else:
            args = (complex(z),)
        if len(args) != self.arity.n_in:
            raise ArityMismatch(
                f"{self.name} ({self.arity.value}) takes {self.arity.n_in} input(s), got {len(args)}")
        return args

    def values(self, z) -> tuple:
        """Raw output tuple; raises PoleHit on any division by zero or overflow."""
        args = self._coerce(z)
        try:
            out = tuple(complex(w) for w in self.func(args))
        except ZeroDivisionError as exc:
            raise PoleHit(f"{self.name}: pole at {args}") from exc
        except OverflowError as exc:
            raise PoleHit(f"{self.name}: overflow at {args}") from exc
        if not all(_finite(w) for w in out):
            raise PoleHit(f"{self.name}: non-finite value at {args}")
        return out

    def __call__(self, z):
        out = self.values(z)
        return Point(*out) if self.arity.n_out == 2 else out[0]

    def serialize(self) -> list[str]:
        if not self.exprs:
            raise ValueError(f"{self.name} was not built from expressions")
        return [ex.serialize(node) for node in self.exprs]


def eval(m: HoloMap, z):  # noqa: A001 - mirrors the public operation name
    return m(z)


def _var_names(arity: Arity) -> tuple[str, ...]:
    return ("s", "p") if arity.n_in == 2 else ("z",)


def from_exprs(components: Sequence, arity: Arity | str | None = None, name: str = "map") -> HoloMap:
    """Build a map from one or two expressions (text or parsed trees).

    Without an explicit arity, inputs are inferred from the variables used:
    ``z`` means a disc input, ``s``/``p`` a G2 input.
    """
    nodes = tuple(ex.parse(c) if isinstance(c, str) else c for c in components)
    if len(nodes) not in (1, 2):
        raise ArityMismatch(f"expected 1 or 2 components, got {len(nodes)}")
    used = set().union(*(ex.variables(n) for n in nodes))
    if arity is None:
        if "z" in used and used & {"s", "p"}:
            raise ArityMismatch("cannot mix z with s, p")
        n_in = 1 if "z" in used else 2
        arity = Arity.from_shape(n_in, len(nodes))
    elif isinstance(arity, str):
        arity = Arity(arity)
    if arity.n_out != len(nodes):
        raise ArityMismatch(f"{arity.value} needs {arity.n_out} component(s), got {len(nodes)}")
    names = _var_names(arity)
    stray = used - set(names)
    if stray:
        raise ArityMismatch(f"{arity.value} map uses variable(s) {sorted(stray)}")

    compiled = ex.compile_exprs(nodes, names)
    return HoloMap(lambda args: compiled(*args), arity, name, nodes)


def identity(arity: Arity = Arity.G2_TO_G2) -> HoloMap:
    if arity.n_in != arity.n_out:
        raise ArityMismatch("identity needs matching input and output")
    return from_exprs(list(_var_names(arity)), arity, "identity")


def compose(outer: HoloMap, inner: HoloMap, name: str | None = None) -> HoloMap:
    """``outer o inner``."""
    if inner.arity.n_out != outer.arity.n_in:
        raise ArityMismatch(
            f"cannot feed {inner.arity.value} output into {outer.arity.value} input")
    arity = Arity.from_shape(inner.arity.n_in, outer.arity.n_out)
    name = name or f"{outer.name}o{inner.name}"
    if outer.exprs and inner.exprs:
        env = dict(zip(_var_names(outer.arity), inner.exprs))
        return from_exprs([ex.substitute(n, env) for n in outer.exprs], arity, name)
    return HoloMap(lambda args: outer.values(inner.values(args)), arity, name)


def _require(m: HoloMap, arity: Arity) -> None:
    if m.arity is not arity:
        raise ArityMismatch(f"{m.name}: expected {arity.value}, got {m.arity.value}")


def symmetrized_lift(b: HoloMap, name: str | None = None) -> HoloMap:
    """``(s, p) -> (b(l1) + b(l2), b(l1) b(l2))`` over the roots of ``x^2 - s x + p``."""
    _require(b, Arity.DISC_TO_DISC)

    def func(args):
        l1, l2 = condition_c2_roots(Point(*args))
        u1, u2 = b.values((l1,))[0], b.values((l2,))[0]
        return u1 + u2, u1 * u2

    return HoloMap(func, Arity.G2_TO_G2, name or f"lift({b.name})")


def royal_lift(g: HoloMap, w: HoloMap, name: str | None = None) -> HoloMap:
    """``z -> (2 g(w(z)), g(w(z))^2)``; lands on the royal variety."""
    _require(g, Arity.DISC_TO_DISC)
    _require(w, Arity.G2_TO_DISC)
    name = name or f"royal({g.name},{w.name})"
    if g.exprs and w.exprs:
        u = ex.substitute(g.exprs[0], {"z": w.exprs[0]})
        return from_exprs([ex.BinOp("*", ex.Num(2), u), ex.Pow(u, 2)], Arity.G2_TO_G2, name)

    def func(args):
        u = g.values(w.values(args))[0]
        return 2 * u, u * u

    return HoloMap(func, Arity.G2_TO_G2, name)


def pair_lift(u1: HoloMap, u2: HoloMap, name: str | None = None) -> HoloMap:
    """``z -> (u1(z) + u2(z), u1(z) u2(z))`` for two disc-valued maps."""
    _require(u1, Arity.G2_TO_DISC)
    _require(u2, Arity.G2_TO_DISC)
    name = name or f"pair({u1.name},{u2.name})"
    if u1.exprs and u2.exprs:
        a, b = u1.exprs[0], u2.exprs[0]
        return from_exprs([ex.BinOp("+", a, b), ex.BinOp("*", a, b)], Arity.G2_TO_G2, name)

    def func(args):
        a, b = u1.values(args)[0], u2.values(args)[0]
        return a + b, a * b

    return HoloMap(func, Arity.G2_TO_G2, name)


def disc_pair(phi1: HoloMap, phi2: HoloMap, name: str | None = None) -> HoloMap:
    """``z -> (phi1(z), phi2(z))`` as a DiscToG2 map."""
    _require(phi1, Arity.DISC_TO_DISC)
    _require(phi2, Arity.DISC_TO_DISC)
    if phi1.exprs and phi2.exprs:
        return from_exprs(phi1.exprs + phi2.exprs, Arity.DISC_TO_G2,
                          name or f"({phi1.name},{phi2.name})")
    return HoloMap(lambda args: phi1.values(args) + phi2.values(args), Arity.DISC_TO_G2,
                   name or f"({phi1.name},{phi2.name})")


# -- map files -----------------------------------------------------------------

def _parse_stanza(lines: list[tuple[int, str]]) -> HoloMap:
    fields: dict[str, tuple[int, str]] = {}
    for lineno, line in lines:
        if line.startswith(("name:", "arity:")):
            key, _, value = line.partition(":")
        elif "=" in line:
            key, _, value = line.partition("=")
        else:
            raise ExprSyntaxError(f"line {lineno}: expected 'key: value' or 'fN = expr'", None)
        key = key.strip()
        if key not in ("name", "arity", "f1", "f2"):
            raise ExprSyntaxError(f"line {lineno}: unknown field {key!r}", None)
        if key in fields:
            raise ExprSyntaxError(f"line {lineno}: duplicate field {key!r}", None)
        fields[key] = (lineno, value.strip())
    if "f1" not in fields:
        raise ExprSyntaxError(f"line {lines[0][0]}: stanza has no f1", None)
    name = fields.get("name", (0, "map"))[1] or "map"
    arity = None
    if "arity" in fields:
        lineno, text = fields["arity"]
        try:
            arity = Arity(text)
        except ValueError:
            raise ExprSyntaxError(f"line {lineno}: unknown arity {text!r}", None) from None
    nodes = []
    for key in ("f1", "f2"):
        if key in fields:
            lineno, text = fields[key]
            try:
                nodes.append(ex.parse(text))
            except ExprSyntaxError as err:
                raise type(err)(f"line {lineno}, {key}: {err.message}", err.offset) from None
    try:
        return from_exprs(nodes, arity, name)
    except ArityMismatch as err:
        raise ExprSyntaxError(f"stanza {name!r}: {err}", None) from None


def parse_map_file(text: str) -> list[HoloMap]:
    """Parse blank-line separated stanzas; ``#`` starts a comment."""
    stanzas, current = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            if current:
                stanzas.append(current)
                current = []
            continue
        current.append((lineno, line))
    if current:
        stanzas.append(current)
    if not stanzas:
        raise ExprSyntaxError("map file contains no maps", None)
    return [_parse_stanza(st) for st in stanzas]


def load_map_file(path) -> list[HoloMap]:
    with open(path, encoding="utf-8") as fh:
        return parse_map_file(fh.read())


def format_map_file(maps: Sequence[HoloMap]) -> str:
    blocks = []
    for m in maps:
        lines = [f"name: {m.name}", f"arity: {m.arity.value}"]
        lines += [f"f{k} = {text}" for k, text in enumerate(m.serialize(), start=1)]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
