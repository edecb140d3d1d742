"""JSON-lines catalogs of groups.

Each non-blank line is one object with a unique ``name`` and a ``kind``:

``perm_gens``
    ``{"degree": n, "gens": [[images...], ...]}``, optionally with
    ``"regular_subgroup": [[images...], ...]``.
``group_table``
    ``{"order": n, "table": [flat row-major products]}``.  The group acts on
    itself by right multiplication, or on the right cosets of
    ``"subgroup": [indices]`` when given.
``construction``
    ``{"expr": "dicyclic(cyclic(6), 3)"}``.  The expression is parsed with
    ``ast`` and only the constructors in ``CONSTRUCTORS`` may be called.
"""

from __future__ import annotations

import ast
import io
import json
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from pathlib import Path

from . import cayley, gl42, groups
from .errors import BadConstructorInput, ClosureCapExceeded, ParseError, SuborbitLabError, ValidationError
from .groups import GroupTable
from .perm import Permutation, PermGroup

KINDS = ("perm_gens", "group_table", "construction")


@dataclass
class Resolved:
    """What an entry denotes: a permutation group, maybe with a table and a regular subgroup."""

    group: PermGroup
    table: GroupTable | None = None
    regular: list[Permutation] | None = None


@dataclass
class CatalogEntry:
    name: str
    kind: str
    payload: dict
    line: int
    regular_subgroup: list[list[int]] | None = None
    _resolved: Resolved | None = None

    def resolve(self) -> Resolved:
        if self._resolved is None:
            self._resolved = _resolve(self)
        return self._resolved

    def embedding(self) -> cayley.RegularEmbedding | None:
        res = self.resolve()
        if not res.regular:
            return None
        return cayley.regular_identification(res.group, res.regular, 0, name=self.name)


# -- construction expressions --------------------------------------------------


def _table(x) -> GroupTable:
    if isinstance(x, GroupTable):
        return x
    raise BadConstructorInput("expected a group table argument")


def _int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise BadConstructorInput("expected an integer argument")
    return x


def _extremal(order: int) -> Resolved:
    h12, h24 = gl42.extremal_matrix_groups()
    h = {12: h12, 24: h24}.get(_int(order))
    if h is None:
        raise BadConstructorInput("extremal() takes 12 or 24")
    group, _ = gl42.extremal_permutation_group(h)
    return Resolved(group)


def _holomorph(n: int) -> Resolved:
    table = groups.cyclic(_int(n))
    autos = [a for a in groups.automorphisms(table) if list(a) != list(range(table.order))]
    emb = _sampling().holomorph_pair(table, autos or [tuple(range(table.order))])
    return Resolved(emb.ambient, table, list(emb.regular.generators))


def _sampling():
    from . import sampling

    return sampling


def _family(name: str, t: int, ell: int) -> GroupTable:
    if not isinstance(name, str):
        raise BadConstructorInput("family() takes a family name first")
    return cayley.family_group(name, _int(t), _int(ell))[0]


def _perm(kind: str) -> Callable[[int], Resolved]:
    def build(n: int) -> Resolved:
        n = _int(n)
        group = getattr(PermGroup, kind)(n)
        regular = None
        if kind in ("symmetric", "dihedral") and n >= 3:
            regular = [Permutation.from_cycles(n, tuple(range(n)))]
        return Resolved(group, None, regular)

    return build


CONSTRUCTORS: dict[str, Callable[..., object]] = {
    "cyclic": lambda n: groups.cyclic(_int(n)),
    "elementary_abelian": lambda k: groups.elementary_abelian(_int(k)),
    "dihedral": lambda n: groups.dihedral(_int(n)),
    "quaternion": groups.quaternion,
    "dicyclic": lambda a, y: groups.generalized_dicyclic(_table(a), _int(y)),
    "direct": lambda a, b: groups.direct_product(_table(a), _table(b)),
    "central": lambda a, b, za, zb: groups.central_product(_table(a), _table(b), _int(za), _int(zb)),
    "family": _family,
    "extremal": _extremal,
    "holomorph": _holomorph,
    "sym": _perm("symmetric"),
    "alt": _perm("alternating"),
    "dih_perm": _perm("dihedral"),
}


def evaluate_expression(expr: str):
    """Evaluate a constructor expression built from ``CONSTRUCTORS``, integers and strings."""
    try:
        tree = ast.parse(expr, mode="eval")
    except SyntaxError as exc:
        raise BadConstructorInput(f"cannot parse {expr!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, str)) and not isinstance(node.value, bool):
            return node.value
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and not node.keywords:
            fn = CONSTRUCTORS.get(node.func.id)
            if fn is None:
                raise BadConstructorInput(f"unknown constructor {node.func.id!r}")
            args = [ev(a) for a in node.args]
            try:
                return fn(*args)
            except TypeError as exc:
                raise BadConstructorInput(f"{node.func.id}: {exc}") from None
        raise BadConstructorInput(f"unsupported syntax in {expr!r}")

    return ev(tree.body)


# -- parsing and resolution ----------------------------------------------------


def _perms(name: str, line: int, raw, degree: int, what: str) -> list[Permutation]:
    if not isinstance(raw, list):
        raise ValidationError(name, f"{what} must be a list of image arrays", line)
    out = []
    for images in raw:
        if not isinstance(images, list) or len(images) != degree:
            raise ValidationError(name, f"{what} entries must have length {degree}", line)
        try:
            out.append(Permutation(images))
        except (ValueError, TypeError) as exc:
            raise ValidationError(name, f"malformed bijection {images}: {exc}", line) from None
    return out


def _regular_action(table: GroupTable, sub: Iterable[int] | None) -> PermGroup:
    if sub is None:
        return groups.coset_action(table, [0])
    return groups.coset_action(table, sub)


def _resolve(entry: CatalogEntry) -> Resolved:
    name, line, p = entry.name, entry.line, entry.payload
    try:
        if entry.kind == "perm_gens":
            degree = p.get("degree")
            if not isinstance(degree, int) or degree < 1:
                raise ValidationError(name, "degree must be a positive integer", line)
            gens = _perms(name, line, p.get("gens"), degree, "gens")
            res = Resolved(PermGroup(gens, degree))
        elif entry.kind == "group_table":
            order, flat = p.get("order"), p.get("table")
            if not isinstance(order, int) or not isinstance(flat, list) or len(flat) != order * order:
                raise ValidationError(name, "table must hold order*order products", line)
            try:
                table = GroupTable.from_flat(order, flat, name=name)
            except ValueError as exc:
                raise ValidationError(name, str(exc), line) from None
            res = Resolved(_regular_action(table, p.get("subgroup")), table)
        else:
            expr = p.get("expr")
            if not isinstance(expr, str):
                raise ValidationError(name, "construction needs an expr string", line)
            value = evaluate_expression(expr)
            if isinstance(value, GroupTable):
                value.name = value.name or name
                res = Resolved(_regular_action(value, p.get("subgroup")), value)
            elif isinstance(value, Resolved):
                res = value
            else:
                raise ValidationError(name, "expression does not denote a group", line)
        if entry.regular_subgroup is not None:
            res.regular = _perms(name, line, entry.regular_subgroup, res.group.degree, "regular_subgroup")
        res.group.elements  # closure cap check
    except ClosureCapExceeded as exc:
        raise ValidationError(name, str(exc), line) from None
    except ValidationError:
        raise
    except SuborbitLabError as exc:
        raise ValidationError(name, str(exc), line) from None
    return res


def parse_catalog(source: str | Path | io.TextIOBase, *, resolve: bool = True) -> list[CatalogEntry]:
    """Parse (and by default resolve) every entry, keeping line numbers."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    entries: list[CatalogEntry] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(lineno, f"invalid JSON: {exc.msg}") from None
        if not isinstance(obj, dict):
            raise ParseError(lineno, "each line must be a JSON object")
        name = obj.get("name")
        if not isinstance(name, str) or not name:
            raise ParseError(lineno, "missing or empty name")
        if name in names:
            raise ValidationError(name, "duplicate name", lineno)
        kind = obj.get("kind")
        if kind not in KINDS:
            raise ValidationError(name, f"kind must be one of {', '.join(KINDS)}", lineno)
        names.add(name)
        payload = {k: v for k, v in obj.items() if k not in ("name", "kind", "regular_subgroup")}
        entry = CatalogEntry(name, kind, payload, lineno, obj.get("regular_subgroup"))
        if resolve:
            entry.resolve()
        entries.append(entry)
    return entries


def table_entry(name: str, table: GroupTable) -> dict:
    """A ``group_table`` catalog line for ``table``."""
    return {"name": name, "kind": "group_table", "order": table.order, "table": table.flat()}
