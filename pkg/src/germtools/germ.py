"""Map-germs, multigerms and vector fields with polynomial components."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .poly import ParseError, Poly, parse


class GermError(ValueError):
    pass


def default_target_vars(source_vars: Sequence[str], p: int) -> tuple[str, ...]:
    if p == len(source_vars) and all(v.upper() != v for v in source_vars):
        names = tuple(v.upper() for v in source_vars)
        if len(set(names)) == p:
            return names
    return tuple(f"Y{i + 1}" for i in range(p))


@dataclass(frozen=True)
class MonoGerm:
    """A polynomial germ (K^n,0) -> (K^p,0)."""

    components: tuple[Poly, ...]
    source_vars: tuple[str, ...] = ()

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise GermError("a germ needs at least one component")
        ring = comps[0].ring
        if self.source_vars and tuple(self.source_vars) != ring:
            raise GermError("components must live in the declared source variables")
        for c in comps:
            if c.ring != ring:
                raise GermError("all components must share one ring")
            if c.constant_term():
                raise GermError(f"component {c} does not vanish at the origin")
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "source_vars", ring)

    @classmethod
    def from_strings(cls, texts: Iterable[str], source_vars) -> "MonoGerm":
        if isinstance(source_vars, str):
            source_vars = [v.strip() for v in source_vars.split(",") if v.strip()]
        return cls(tuple(parse(t, source_vars) for t in texts))

    @property
    def n(self) -> int:
        return len(self.source_vars)

    @property
    def p(self) -> int:
        return len(self.components)

    @property
    def ring(self):
        return self.source_vars

    @property
    def target_vars(self) -> tuple[str, ...]:
        return default_target_vars(self.source_vars, self.p)

    @property
    def branches(self) -> tuple["MonoGerm", ...]:
        return (self,)

    def jacobian_at_origin(self) -> list[list[int]]:
        """p x n matrix of linear coefficients."""
        rows = []
        for c in self.components:
            row = []
            for j in range(self.n):
                e = [0] * self.n
                e[j] = 1
                row.append(c.coeff(tuple(e)))
            rows.append(row)
        return rows

    def rename(self, source_vars) -> "MonoGerm":
        return MonoGerm(tuple(c.rename(source_vars) for c in self.components))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


@dataclass(frozen=True)
class MultiGerm:
    """Finitely many branches sharing one target; each branch sits at its own origin."""

    branches: tuple[MonoGerm, ...]

    def __post_init__(self):
        bs = tuple(self.branches)
        if not bs:
            raise GermError("a multigerm needs at least one branch")
        n, p = bs[0].n, bs[0].p
        for b in bs:
            if (b.n, b.p) != (n, p):
                raise GermError("all branches must share source and target dimensions")
        object.__setattr__(self, "branches", bs)

    @property
    def n(self) -> int:
        return self.branches[0].n

    @property
    def p(self) -> int:
        return self.branches[0].p

    @property
    def r(self) -> int:
        return len(self.branches)

    @property
    def source_vars(self):
        return self.branches[0].source_vars

    @property
    def target_vars(self):
        return self.branches[0].target_vars

    def __str__(self):
        if len(self.branches) == 1:
            return str(self.branches[0])
        return "{" + ", ".join(str(b) for b in self.branches) + "}"


def as_multi(f: MonoGerm | MultiGerm) -> MultiGerm:
    if isinstance(f, MultiGerm):
        return f
    if isinstance(f, MonoGerm):
        return MultiGerm((f,))
    raise TypeError(f"expected a germ, got {type(f).__name__}")


def multigerm(*branches: MonoGerm | MultiGerm) -> MultiGerm:
    """Union of branches; multigerm arguments are flattened."""
    out = []
    for b in branches:
        out.extend(as_multi(b).branches)
    return MultiGerm(tuple(out))


def germ(texts: Sequence[str], source_vars) -> MonoGerm:
    return MonoGerm.from_strings(texts, source_vars)


@dataclass(frozen=True)
class VectorFieldGerm:
    """A vector field: ``source`` (in theta_n), ``target`` (theta_p) or ``along`` f.

    ``along`` fields carry one coefficient tuple per branch.
    """

    kind: str
    coefficients: tuple
    vars: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in ("source", "target", "along"):
            raise GermError(f"unknown vector field kind {self.kind!r}")
        if self.kind == "along":
            coeffs = tuple(tuple(b) for b in self.coefficients)
            flat = [c for b in coeffs for c in b]
        else:
            coeffs = tuple(self.coefficients)
            flat = list(coeffs)
        if flat:
            ring = flat[0].ring
            if any(c.ring != ring for c in flat):
                raise GermError("vector field coefficients must share one ring")
            if self.kind in ("source", "target") and len(coeffs) != len(ring):
                raise GermError(f"a {self.kind} field needs one coefficient per variable")
            object.__setattr__(self, "vars", ring)
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def target(cls, texts: Sequence[str], target_vars) -> "VectorFieldGerm":
        if isinstance(target_vars, str):
            target_vars = [v.strip() for v in target_vars.split(",") if v.strip()]
        return cls("target", tuple(parse(t, target_vars) for t in texts))

    def degree(self) -> int:
        flat = self.coefficients if self.kind != "along" else [c for b in self.coefficients for c in b]
        return max(c.degree() for c in flat)

    def truncate(self, d: int) -> "VectorFieldGerm":
        if self.kind == "along":
            return VectorFieldGerm(self.kind, tuple(tuple(c.truncate(d) for c in b) for b in self.coefficients))
        return VectorFieldGerm(self.kind, tuple(c.truncate(d) for c in self.coefficients))

    def __str__(self):
        if self.kind == "along":
            return "; ".join("(" + ", ".join(str(c) for c in b) + ")" for b in self.coefficients)
        terms = []
        for v, c in zip(self.vars, self.coefficients):
            if c.is_zero():
                continue
            s = str(c)
            if len(c.terms) > 1:
                s = f"({s})"
            terms.append(f"{s}*d/d{v}" if s != "1" else f"d/d{v}")
        return " + ".join(terms) if terms else "0"


# normal forms


def _vars(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def stable_Ak(k: int, n: int, source_vars: Sequence[str] | None = None) -> MonoGerm:
    """(x1^{k+1} + sum_{i=2..k} x_i x1^{i-1}, x2, ..., xn)."""
    if not 1 <= k <= n:
        raise GermError(f"stable A_k in {n} variables needs 1 <= k <= n, got k={k}")
    ring = tuple(source_vars) if source_vars else _vars(n)
    x = [Poly.var(ring, i) for i in range(n)]
    first = x[0] ** (k + 1)
    for i in range(2, k + 1):
        first = first + x[i - 1] * x[0] ** (i - 1)
    return MonoGerm((first, *x[1:]))


def fold_map(n: int, p: int, shift: Poly | str | None = None, source_vars: Sequence[str] | None = None) -> MonoGerm:
    """(x1, ..., x_{p-1}, sum_{i>=p} x_i^2 + shift); the immersion (x, 0) when n = p-1."""
    if n < p - 1 or p < 1:
        raise GermError(f"fold map needs n >= p-1, got n={n}, p={p}")
    ring = tuple(source_vars) if source_vars else _vars(n)
    x = [Poly.var(ring, i) for i in range(n)]
    last = Poly.zero(ring)
    for i in range(p - 1, n):
        last = last + x[i] ** 2
    if shift is not None:
        if isinstance(shift, str):
            shift = parse(shift, ring)
        if shift.ring != ring:
            raise GermError("shift must be a polynomial in the source variables")
        if shift.variables_used() - set(range(p - 1)):
            raise GermError("shift may only involve the first p-1 variables")
        last = last + shift
    return MonoGerm((*x[: p - 1], last))


# germ file format

_ASSIGN = re.compile(r"^\s*([A-Za-z_]\w*)\s*=\s*(.*?)\s*$")


def _split_top_level(text: str, line: int, col0: int) -> list[tuple[str, int]]:
    """Split on commas not nested inside parentheses; returns (piece, column)."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced ')'", line, col0 + i)
        elif ch == "," and depth == 0:
            parts.append((text[start:i], col0 + start))
            start = i + 1
    if depth:
        raise ParseError("unbalanced '('", line, col0 + len(text))
    parts.append((text[start:], col0 + start))
    return parts


def parse_germ_file(text: str) -> MultiGerm:
    """Parse the ``source_vars = [...]`` / ``target_dim`` / ``branch = (...)`` format."""
    source_vars = None
    target_dim = None
    branches = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _ASSIGN.match(line)
        if not m:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected 'key = value'", lineno, col)
        key, value = m.group(1), m.group(2)
        vcol = m.start(2) + 1
        if key == "source_vars":
            if not (value.startswith("[") and value.endswith("]")):
                raise ParseError("source_vars must be a bracketed list", lineno, vcol)
            names = [v.strip() for v in value[1:-1].split(",") if v.strip()]
            for nm in names:
                if not re.fullmatch(r"[A-Za-z_]\w*", nm):
                    raise ParseError(f"bad variable name {nm!r}", lineno, vcol)
            if len(set(names)) != len(names) or not names:
                raise ParseError("source_vars must be nonempty and distinct", lineno, vcol)
            source_vars = tuple(names)
        elif key == "target_dim":
            if not value.isdigit() or int(value) < 1:
                raise ParseError("target_dim must be a positive integer", lineno, vcol)
            target_dim = int(value)
        elif key == "branch":
            if source_vars is None or target_dim is None:
                raise ParseError("branch before source_vars and target_dim", lineno, vcol)
            if not (value.startswith("(") and value.endswith(")")):
                raise ParseError("branch must be a parenthesised tuple", lineno, vcol)
            inner = value[1:-1]
            pieces = _split_top_level(inner, lineno, vcol + 1)
            if len(pieces) != target_dim:
                raise ParseError(f"branch has {len(pieces)} components, expected {target_dim}", lineno, vcol)
            comps = []
            for piece, col in pieces:
                lead = len(piece) - len(piece.lstrip())
                comps.append(parse(piece, source_vars, lineno, col))
                if comps[-1].constant_term():
                    raise ParseError("component does not vanish at the origin", lineno, col + lead)
            branches.append(MonoGerm(tuple(comps)))
        else:
            raise ParseError(f"unknown key {key!r}", lineno, m.start(1) + 1)
    if not branches:
        raise ParseError("no branch lines", max(1, len(text.splitlines())), 1)
    return MultiGerm(tuple(branches))


def format_germ_file(f: MonoGerm | MultiGerm, comment: str | None = None) -> str:
    f = as_multi(f)
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"source_vars = [{', '.join(f.source_vars)}]")
    lines.append(f"target_dim = {f.p}")
    for b in f.branches:
        lines.append("branch = ( " + ", ".join(str(c) for c in b.components) + " )")
    return "\n".join(lines) + "\n"


def read_germ_file(path) -> MultiGerm:
    with open(path, encoding="utf-8") as fh:
        return parse_germ_file(fh.read())


def paper_catalog():
    """Published normal forms with their codimensions (see :mod:`germtools.catalog`)."""
    from .catalog import paper_catalog as _catalog

    return _catalog()
