"""A small typed string-diagram language, evaluated to exact matrices.

Grammar: one layer per line, read from bottom to top (the first line is
applied first).  A layer is a horizontal juxtaposition of generators
separated by ``|``; wires are implicit, left to right.  Blank lines and
lines starting with ``#`` are ignored.  Optional header lines
``in: X^ F X`` and ``out: ...`` declare the boundary wires (``in:`` is
required when the diagram starts with generators that have no inputs).
Several layers may share a line when separated by ``;``.

Wire labels are context names; a trailing ``^`` denotes the dual module.

Generators (labels in brackets):
  id[X]                X -> X
  braid[X,Y]           X Y -> Y X          c_{X,Y}
  braid_inv[X,Y]       X Y -> Y X          c_{Y,X}^{-1}
  eval_left[X]         X^ X -> .           phi (x) x -> phi(x)
  coev_left[X]         . -> X X^
  eval_right[X]        X X^ -> .           x (x) phi -> phi(omega x)
  coev_right[X]        . -> X^ X
  frob_mult[F]         F F -> F
  frob_unit[F]         . -> F
  frob_comult[F]       F -> F F
  frob_counit[F]       F -> .
  frob[F,k,l]          F^k -> F^l          n-valent vertex, desugared into a
                                           left-associated product tree followed
                                           by a left-associated coproduct tree
  map[f]               source -> target    a bound ModuleMap
  map_dual[f]          target^ -> source^  its transpose

A file may hold several diagrams separated by lines consisting of ``---``
(used for the two sides of a relation).
"""
from __future__ import annotations

import re
from importlib import resources
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .frobenius import FrobeniusObject
from .linalg import Matrix, apply_on_legs, kron_all
from .rep import (ModuleMap, ModuleRep, braiding, braiding_inverse, coev_left, coev_right, dual,
                  ev_left, ev_right)


class DiagramError(ValueError):
    def __init__(self, message: str, line: int | None = None, wire: int | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if wire is not None:
            where.append(f"wire {wire}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.wire = wire


_GEN = re.compile(r"^\s*([a-z_]+)\s*(?:\[([^\]]*)\])?\s*$")


@dataclass(frozen=True)
class Generator:
    kind: str
    args: tuple[str, ...]
    inputs: tuple[str, ...]
    outputs: tuple[str, ...]
    line: int


@dataclass
class Diagram:
    wires_in: list[str]
    wires_out: list[str]
    slices: list[list[Generator]]
    context: Mapping[str, object] = field(repr=False, default_factory=dict)


def _base(label: str) -> tuple[str, bool]:
    if label.endswith("^"):
        return label[:-1], True
    return label, False


def _module(context: Mapping[str, object], label: str, line: int) -> ModuleRep:
    name, is_dual = _base(label)
    if name not in context:
        raise DiagramError(f"unknown label {name!r}", line)
    obj = context[name]
    if isinstance(obj, FrobeniusObject):
        obj = obj.object
    if isinstance(obj, ModuleMap):
        raise DiagramError(f"label {name!r} is a map, not an object", line)
    if not isinstance(obj, ModuleRep):
        raise DiagramError(f"label {name!r} is not bound to a module", line)
    return dual(obj) if is_dual else obj


def _frobenius(context: Mapping[str, object], label: str, line: int) -> FrobeniusObject:
    if label not in context:
        raise DiagramError(f"unknown label {label!r}", line)
    obj = context[label]
    if not isinstance(obj, FrobeniusObject):
        raise DiagramError(f"label {label!r} is not bound to a Frobenius algebra", line)
    return obj


def _label_of(context: Mapping[str, object], m: ModuleRep) -> str | None:
    for key, obj in context.items():
        target = obj.object if isinstance(obj, FrobeniusObject) else obj
        if target is m:
            return key
    return None


def _signature(kind: str, args: list[str], context, line: int) -> tuple[tuple[str, ...], tuple[str, ...]]:
    def need(k: int):
        if len(args) != k:
            raise DiagramError(f"{kind} takes {k} label(s), got {len(args)}", line)

    if kind == "id":
        need(1)
        _module(context, args[0], line)
        return (args[0],), (args[0],)
    if kind in ("braid", "braid_inv"):
        need(2)
        for a in args:
            _module(context, a, line)
        return (args[0], args[1]), (args[1], args[0])
    if kind in ("eval_left", "coev_left", "eval_right", "coev_right"):
        need(1)
        x = args[0]
        if x.endswith("^"):
            raise DiagramError(f"{kind} expects a plain label, got {x!r}", line)
        _module(context, x, line)
        return {
            "eval_left": ((x + "^", x), ()),
            "coev_left": ((), (x, x + "^")),
            "eval_right": ((x, x + "^"), ()),
            "coev_right": ((), (x + "^", x)),
        }[kind]
    if kind.startswith("frob"):
        if kind == "frob":
            if len(args) != 3:
                raise DiagramError("frob takes [F,k,l]", line)
            f = args[0]
            try:
                k, l = int(args[1]), int(args[2])
            except ValueError:
                raise DiagramError("frob arities must be integers", line) from None
            if k < 0 or l < 0:
                raise DiagramError("frob arities must be non-negative", line)
        else:
            need(1)
            f = args[0]
            k, l = {"frob_mult": (2, 1), "frob_unit": (0, 1), "frob_comult": (1, 2),
                    "frob_counit": (1, 0)}.get(kind, (None, None))
            if k is None:
                raise DiagramError(f"unknown generator {kind!r}", line)
        _frobenius(context, f, line)
        return (f,) * k, (f,) * l
    if kind in ("map", "map_dual"):
        need(1)
        name = args[0]
        if name not in context or not isinstance(context[name], ModuleMap):
            raise DiagramError(f"label {name!r} is not bound to a map", line)
        g = context[name]
        src, tgt = _label_of(context, g.source), _label_of(context, g.target)
        if src is None or tgt is None:
            raise DiagramError(f"source and target of {name!r} must be bound labels", line)
        if kind == "map_dual":
            return (tgt + "^",), (src + "^",)
        return (src,), (tgt,)
    raise DiagramError(f"unknown generator {kind!r}", line)


def parse_diagram(text: str, context: Mapping[str, object], first_line: int = 1) -> Diagram:
    wires_in: list[str] | None = None
    wires_out: list[str] | None = None
    slices: list[list[Generator]] = []
    current: list[str] | None = None
    lines = [(lineno, part.strip())
             for lineno, raw in enumerate(text.splitlines(), start=first_line)
             for part in raw.split("#", 1)[0].split(";")]
    for lineno, line in lines:
        if not line:
            continue
        if line.startswith("in:"):
            wires_in = line[3:].split()
            for w in wires_in:
                _module(context, w, lineno)
            current = list(wires_in)
            continue
        if line.startswith("out:"):
            wires_out = line[4:].split()
            continue
        layer = []
        inputs: list[str] = []
        outputs: list[str] = []
        for part in line.split("|"):
            m = _GEN.match(part)
            if not m:
                raise DiagramError(f"cannot parse generator {part.strip()!r}", lineno)
            kind = m.group(1)
            args = [a.strip() for a in m.group(2).split(",")] if m.group(2) else []
            ins, outs = _signature(kind, args, context, lineno)
            layer.append(Generator(kind, tuple(args), ins, outs, lineno))
            inputs.extend(ins)
            outputs.extend(outs)
        if current is None:
            current = list(inputs)
            wires_in = list(inputs)
        if len(inputs) != len(current):
            raise DiagramError(f"layer consumes {len(inputs)} wires but {len(current)} are present", lineno)
        for pos, (have, want) in enumerate(zip(current, inputs)):
            if have != want:
                hb, hd = _base(have)
                wb, wd = _base(want)
                if hb == wb and hd != wd:
                    raise DiagramError(f"dual-direction mismatch: wire is {have!r}, generator expects {want!r}",
                                       lineno, pos)
                raise DiagramError(f"wire is {have!r}, generator expects {want!r}", lineno, pos)
        slices.append(layer)
        current = outputs
    if wires_in is None:
        raise DiagramError("empty diagram")
    if current is None:
        current = list(wires_in)
    if wires_out is not None and wires_out != current:
        raise DiagramError(f"declared outputs {wires_out} differ from computed {current}")
    return Diagram(list(wires_in), list(current), slices, context)


def parse_diagrams(text: str, context: Mapping[str, object]) -> list[Diagram]:
    """All diagrams of a text, separated by ``---`` lines."""
    chunks: list[tuple[int, list[str]]] = [(1, [])]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip() == "---":
            chunks.append((lineno + 1, []))
        else:
            chunks[-1][1].append(raw)
    return [parse_diagram("\n".join(lines), context, start) for start, lines in chunks]


def load_diagram(path: str, context: Mapping[str, object]) -> Diagram:
    with open(path) as fh:
        return parse_diagram(fh.read(), context)


def load_diagrams(path: str, context: Mapping[str, object]) -> list[Diagram]:
    with open(path) as fh:
        return parse_diagrams(fh.read(), context)


def packaged_text(name: str) -> str:
    """Text of one of the diagram files shipped with the package."""
    return resources.files(__package__).joinpath("diagrams", name).read_text()


def packaged(name: str, context: Mapping[str, object]) -> list[Diagram]:
    return parse_diagrams(packaged_text(name), context)


# evaluation -----------------------------------------------------------------------

def generator_matrix(g: Generator, context: Mapping[str, object]) -> Matrix:
    line = g.line
    k = g.kind
    if k == "id":
        return _module(context, g.args[0], line).identity
    if k == "braid":
        return braiding(_module(context, g.args[0], line), _module(context, g.args[1], line))
    if k == "braid_inv":
        # c_{Y,X}^{-1}: X Y -> Y X
        return braiding_inverse(_module(context, g.args[1], line), _module(context, g.args[0], line))
    if k in ("eval_left", "coev_left", "eval_right", "coev_right"):
        x = _module(context, g.args[0], line)
        return {"eval_left": ev_left, "coev_left": coev_left, "eval_right": ev_right,
                "coev_right": coev_right}[k](x)
    if k == "map":
        return context[g.args[0]].matrix
    if k == "map_dual":
        return context[g.args[0]].matrix.T
    f = _frobenius(context, g.args[0], line)
    if k == "frob_mult":
        return f.mult
    if k == "frob_unit":
        return f.unit
    if k == "frob_comult":
        return f.comult
    if k == "frob_counit":
        return f.counit
    return vertex(f, int(g.args[1]), int(g.args[2]))


def vertex(f: FrobeniusObject, k: int, l: int) -> Matrix:
    """n-valent vertex F^k -> F^l: product tree then coproduct tree, both left-associated."""
    top = f.unit if k == 0 else f.mult_n(k)
    if l == 0:
        return f.counit @ top
    return f.comult_n(l) @ top


def _wire_dims(labels: Sequence[str], context) -> list[int]:
    return [_module(context, w, None).dim for w in labels]


def evaluate(d: Diagram) -> Matrix:
    """The exact matrix of the composite (bottom layer applied first)."""
    ctx = d.context
    order = next(iter(_module(ctx, w, None) for w in d.wires_in)).order if d.wires_in else None
    n_in = 1
    for x in _wire_dims(d.wires_in, ctx):
        n_in *= x
    if order is None:
        order = _any_order(ctx)
    out = Matrix.identity(n_in, order)
    for layer in d.slices:
        out = kron_all([generator_matrix(g, ctx) for g in layer]) @ out
    return out


def _any_order(ctx) -> int:
    for obj in ctx.values():
        if isinstance(obj, (ModuleRep, FrobeniusObject)):
            return obj.order if isinstance(obj, ModuleRep) else obj.object.order
        if isinstance(obj, ModuleMap):
            return obj.source.order
    return 1


def apply(d: Diagram, state: Matrix) -> Matrix:
    """Apply the diagram to each column of ``state`` leg by leg (no Kronecker products)."""
    ctx = d.context
    wires = list(d.wires_in)
    dims = _wire_dims(wires, ctx)
    if state.rows != _prod(dims):
        raise DiagramError(f"state has {state.rows} rows, diagram expects {_prod(dims)}")
    for layer in d.slices:
        pos = 0
        for g in layer:
            mat = generator_matrix(g, ctx)
            width = len(g.inputs)
            if g.kind != "id":
                if width == 0:
                    dims_now = dims[:pos] + [1] + dims[pos:]
                    state = apply_on_legs(mat, state, dims_now, pos, 1)
                else:
                    state = apply_on_legs(mat, state, dims, pos, width)
            out_dims = [_module(ctx, w, g.line).dim for w in g.outputs]
            dims = dims[:pos] + out_dims + dims[pos + width:]
            pos += len(g.outputs)
        wires = [w for g in layer for w in g.outputs]
    return state


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out
