"""Structure-constant algebras, coalgebras, bialgebras and Hopf algebras.

Conventions, fixed once for the whole package:

* ``mul[i][j][k]``   : e_i * e_j = sum_k mul[i][j][k] e_k
* ``comul[i][j][k]`` : Delta(e_i) = sum_{j,k} comul[i][j][k] e_j (x) e_k
* antipode matrix acts on coordinate columns: S(e_j) = sum_i S[i][j] e_i
* tensor-square coordinates are row-major: (i, j) -> i * dim + j

The dual is a pure transposition of these tensors, so H <-> H*
round-trips are bit-exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .fields import Field, check_same_field
from .linalg import (Matrix, kernel_basis, solve_linear, unit_vec, vec_add,
                     vec_scale, zero_vec)

LEVELS = ("algebra", "augmented-algebra", "bialgebra", "hopf")


def format_combination(field: Field, coords, labels) -> str:
    """Render a coordinate vector as a linear combination of labels."""
    terms = []
    for c, name in zip(coords, labels):
        if field.is_zero(c):
            continue
        if c == field.one:
            terms.append(name)
        else:
            terms.append(f"{field.format(c)}*{name}")
    return " + ".join(terms) if terms else "0"


class StructureError(ValueError):
    pass


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        tag = "ok" if self.passed else "FAIL"
        msg = f"[{tag}] {self.name}"
        if self.detail and not self.passed:
            msg += f": {self.detail}"
        return msg


@dataclass
class CheckResult:
    checks: list = dc_field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, passed, detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def __str__(self):
        return "\n".join(str(c) for c in self.checks)


class Element:
    """Algebra element as a coordinate vector in the chosen basis."""

    def __init__(self, algebra: "HopfData", coords):
        if len(coords) != algebra.dim:
            raise StructureError("coordinate length != dim")
        self.algebra = algebra
        self.coords = list(coords)

    def __mul__(self, other):
        if isinstance(other, Element):
            return Element(self.algebra,
                           self.algebra.mul_vec(self.coords, other.coords))
        return NotImplemented

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar):
        f = self.algebra.field
        return Element(self.algebra, [f.mul(scalar, c) for c in self.coords])

    def __add__(self, other):
        return Element(self.algebra,
                       vec_add(self.algebra.field, self.coords, other.coords))

    def __sub__(self, other):
        f = self.algebra.field
        return Element(self.algebra,
                       [f.sub(a, b) for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        f = self.algebra.field
        return Element(self.algebra, [f.neg(c) for c in self.coords])

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra is other.algebra
                and self.coords == other.coords) or \
               (isinstance(other, Element) and self.coords == other.coords
                and self.algebra.field == other.algebra.field)

    def is_zero(self) -> bool:
        z = self.algebra.field.zero
        return all(c == z for c in self.coords)

    def inverse(self) -> "Element | None":
        """Two-sided inverse, or None.  xy = 1 forces yx = 1 and both are
        verified anyway."""
        A = self.algebra
        L = A.left_mul_matrix(self.coords)
        x = solve_linear(L, A.unit)
        if x is None:
            return None
        if A.mul_vec(x, self.coords) != A.unit:
            return None
        return Element(A, x)

    def order(self, bound: int) -> int | None:
        """Smallest n <= bound with self^n = 1, or None."""
        A = self.algebra
        p = A.unit
        for n in range(1, bound + 1):
            p = A.mul_vec(p, self.coords)
            if p == A.unit:
                return n
        return None

    def __repr__(self):
        A = self.algebra
        return format_combination(A.field, self.coords, A.basis)


class Functional:
    """Linear functional as a coordinate vector in the dual basis."""

    def __init__(self, algebra: "HopfData", coords):
        if len(coords) != algebra.dim:
            raise StructureError("coordinate length != dim")
        self.algebra = algebra
        self.coords = list(coords)

    def __call__(self, x):
        coords = x.coords if isinstance(x, Element) else x
        f = self.algebra.field
        s = f.zero
        for a, b in zip(self.coords, coords):
            if a != f.zero and b != f.zero:
                s = f.add(s, f.mul(a, b))
        return s

    def __mul__(self, other):
        """Convolution product (fg)(x) = sum f(x_1) g(x_2)."""
        if not isinstance(other, Functional):
            return NotImplemented
        A = self.algebra
        if A.comul is None:
            raise StructureError("convolution needs comultiplication")
        f = A.field
        out = zero_vec(f, A.dim)
        for i in range(A.dim):
            s = f.zero
            for j, k, c in A.comul_sparse(i):
                a = self.coords[j]
                b = other.coords[k]
                if a != f.zero and b != f.zero:
                    s = f.add(s, f.mul(c, f.mul(a, b)))
            out[i] = s
        return Functional(A, out)

    def __add__(self, other):
        return Functional(self.algebra,
                          vec_add(self.algebra.field, self.coords, other.coords))

    def scale(self, scalar):
        f = self.algebra.field
        return Functional(self.algebra, [f.mul(scalar, c) for c in self.coords])

    def __eq__(self, other):
        return isinstance(other, Functional) and self.coords == other.coords

    def compose_matrix(self, M: Matrix) -> "Functional":
        """The functional x -> self(M x)."""
        return Functional(self.algebra, M.transpose().matvec(self.coords))

    def convolution_order(self, bound: int) -> int | None:
        """Order under convolution, unit being the counit."""
        A = self.algebra
        eps = list(A.counit)
        p = Functional(A, eps)
        for n in range(1, bound + 1):
            p = p * self
            if p.coords == eps:
                return n
        return None

    def __repr__(self):
        A = self.algebra
        labels = [f"{name}^" for name in A.basis]
        return format_combination(A.field, self.coords, labels)


class HopfData:
    """Finite-dimensional algebra with optional coalgebra/Hopf data."""

    def __init__(self, field: Field, dim: int, basis, unit, mul,
                 comul=None, counit=None, antipode: Matrix | None = None,
                 level: str = "algebra", name: str = ""):
        if level not in LEVELS:
            raise StructureError(f"unknown structure level {level!r}")
        self.field = field
        self.dim = dim
        self.basis = list(basis) if basis else [f"e{i}" for i in range(dim)]
        self.unit = list(unit)
        self.mul = mul
        self.comul = comul
        self.counit = list(counit) if counit is not None else None
        self.antipode = antipode
        self.level = level
        self.name = name
        self._mul_sparse: dict = {}
        self._comul_sparse: dict = {}
        self._antipode_inv: Matrix | None = None
        if len(self.unit) != dim or len(self.basis) != dim:
            raise StructureError("unit/basis length != dim")
        if level in ("augmented-algebra", "bialgebra", "hopf") and self.counit is None:
            raise StructureError(f"level {level} needs a counit")
        if level in ("bialgebra", "hopf") and self.comul is None:
            raise StructureError(f"level {level} needs a comultiplication")
        if level == "hopf" and self.antipode is None:
            raise StructureError("level hopf needs an antipode")

    # -- basic access -------------------------------------------------

    def element(self, coords) -> Element:
        return Element(self, coords)

    def functional(self, coords) -> Functional:
        return Functional(self, coords)

    def basis_element(self, i: int) -> Element:
        return Element(self, unit_vec(self.field, self.dim, i))

    def one(self) -> Element:
        return Element(self, self.unit)

    def eps(self) -> Functional:
        if self.counit is None:
            raise StructureError("no counit")
        return Functional(self, self.counit)

    def mul_sparse(self, i: int, j: int):
        key = (i, j)
        if key not in self._mul_sparse:
            z = self.field.zero
            self._mul_sparse[key] = [(k, c) for k, c in enumerate(self.mul[i][j])
                                     if c != z]
        return self._mul_sparse[key]

    def comul_sparse(self, i: int):
        if self.comul is None:
            raise StructureError("no comultiplication")
        if i not in self._comul_sparse:
            z = self.field.zero
            row = self.comul[i]
            self._comul_sparse[i] = [(j, k, c)
                                     for j in range(self.dim)
                                     for k, c in enumerate(row[j]) if c != z]
        return self._comul_sparse[i]

    def comul2_sparse(self, i: int):
        """Sparse (Delta (x) Id)Delta(e_i) as (p, q, r, coeff) quadruples."""
        f = self.field
        acc: dict = {}
        for j, r, c in self.comul_sparse(i):
            for p, q, c2 in self.comul_sparse(j):
                key = (p, q, r)
                val = f.mul(c, c2)
                acc[key] = f.add(acc[key], val) if key in acc else val
        return [(p, q, r, c) for (p, q, r), c in sorted(acc.items())
                if c != f.zero]

    # -- algebra operations -------------------------------------------

    def mul_vec(self, a, b):
        f = self.field
        z = f.zero
        out = zero_vec(f, self.dim)
        for i, ai in enumerate(a):
            if ai == z:
                continue
            for j, bj in enumerate(b):
                if bj == z:
                    continue
                cij = f.mul(ai, bj)
                for k, c in self.mul_sparse(i, j):
                    out[k] = f.add(out[k], f.mul(cij, c))
        return out

    def left_mul_matrix(self, a) -> Matrix:
        cols = [self.mul_vec(a, unit_vec(self.field, self.dim, j))
                for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    def right_mul_matrix(self, a) -> Matrix:
        cols = [self.mul_vec(unit_vec(self.field, self.dim, j), a)
                for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    # -- coalgebra operations -----------------------------------------

    def comul_vec(self, a):
        """Delta(a) as a row-major tensor-square coordinate vector."""
        f = self.field
        out = zero_vec(f, self.dim * self.dim)
        for i, ai in enumerate(a):
            if ai == f.zero:
                continue
            for j, k, c in self.comul_sparse(i):
                idx = j * self.dim + k
                out[idx] = f.add(out[idx], f.mul(ai, c))
        return out

    def counit_of(self, a):
        if self.counit is None:
            raise StructureError("no counit")
        f = self.field
        s = f.zero
        for e, c in zip(self.counit, a):
            if e != f.zero and c != f.zero:
                s = f.add(s, f.mul(e, c))
        return s

    # -- antipode ------------------------------------------------------

    def antipode_matrix(self) -> Matrix:
        if self.antipode is None:
            raise StructureError("no antipode")
        return self.antipode

    def antipode_inv_matrix(self) -> Matrix:
        if self._antipode_inv is None:
            inv = self.antipode_matrix().inverse()
            if inv is None:
                raise StructureError("antipode matrix is singular")
            self._antipode_inv = inv
        return self._antipode_inv

    def apply_antipode(self, x: Element, power: int = 1) -> Element:
        M = self.antipode_matrix() if power >= 0 else self.antipode_inv_matrix()
        coords = x.coords
        for _ in range(abs(power)):
            coords = M.matvec(coords)
        return Element(self, coords)

    def is_group_like(self, x: Element) -> bool:
        f = self.field
        outer = [f.mul(a, b) for a in x.coords for b in x.coords]
        return (self.comul_vec(x.coords) == outer
                and self.counit_of(x.coords) == f.one)

    def copy_with(self, **kw) -> "HopfData":
        args = dict(field=self.field, dim=self.dim, basis=self.basis,
                    unit=self.unit, mul=self.mul, comul=self.comul,
                    counit=self.counit, antipode=self.antipode,
                    level=self.level, name=self.name)
        args.update(kw)
        return HopfData(**args)

    def __repr__(self):
        nm = self.name or "?"
        return f"HopfData({nm}, dim={self.dim}, level={self.level}, {self.field!r})"


# -- harpoon actions ---------------------------------------------------

def act(g: Functional, a: Element, side: str) -> Element:
    """Harpoon actions: left is g -> a = sum a_1 g(a_2); right is
    a <- g = sum g(a_1) a_2."""
    A = a.algebra
    f = A.field
    out = zero_vec(f, A.dim)
    for i, ai in enumerate(a.coords):
        if ai == f.zero:
            continue
        for j, k, c in A.comul_sparse(i):
            if side == "left":
                gv = g.coords[k]
                tgt = j
            elif side == "right":
                gv = g.coords[j]
                tgt = k
            else:
                raise ValueError("side must be 'left' or 'right'")
            if gv != f.zero:
                out[tgt] = f.add(out[tgt], f.mul(ai, f.mul(c, gv)))
    return Element(A, out)


def hit_left(g: Functional, a: Element) -> Element:
    return act(g, a, "left")


def hit_right(a: Element, g: Functional) -> Element:
    return act(g, a, "right")


# -- tensor square helpers --------------------------------------------

def tensor_square_mul(A: "HopfData", u, v):
    """Product in A (x) A of two row-major coordinate vectors."""
    f = A.field
    n = A.dim
    out = zero_vec(f, n * n)
    for pu, cu in enumerate(u):
        if cu == f.zero:
            continue
        i, i2 = divmod(pu, n)
        for pv, cv in enumerate(v):
            if cv == f.zero:
                continue
            j, j2 = divmod(pv, n)
            cc = f.mul(cu, cv)
            for k, c1 in A.mul_sparse(i, j):
                for k2, c2 in A.mul_sparse(i2, j2):
                    idx = k * n + k2
                    out[idx] = f.add(out[idx], f.mul(cc, f.mul(c1, c2)))
    return out


def tensor_vec(field: Field, u, v):
    return [field.mul(a, b) for a in u for b in v]


def swap_tensor(field: Field, u, n: int):
    out = zero_vec(field, n * n)
    for p, c in enumerate(u):
        i, j = divmod(p, n)
        out[j * n + i] = c
    return out


# -- axiom verification ------------------------------------------------

@dataclass
class AxiomReport:
    level: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __str__(self):
        head = f"level {self.level}: {'pass' if self.passed else 'FAIL'}"
        return "\n".join([head] + [f"  {c}" for c in self.checks])


def verify_axioms(H: HopfData) -> AxiomReport:
    """Per-axiom pass/fail at H's declared level; checks run on basis
    elements, which suffices by multilinearity."""
    f = H.field
    checks: list[Check] = []

    def add(name, passed, detail=""):
        checks.append(Check(name, passed, detail))

    # associativity
    ok, wit = True, ""
    prods = [[H.mul_vec(unit_vec(f, H.dim, i), unit_vec(f, H.dim, j))
              for j in range(H.dim)] for i in range(H.dim)]
    for i in range(H.dim):
        for j in range(H.dim):
            ab = prods[i][j]
            for l in range(H.dim):
                lhs = H.mul_vec(ab, unit_vec(f, H.dim, l))
                rhs = H.mul_vec(unit_vec(f, H.dim, i), prods[j][l])
                if lhs != rhs:
                    ok, wit = False, f"(e{i}*e{j})*e{l} != e{i}*(e{j}*e{l})"
                    break
            if not ok:
                break
        if not ok:
            break
    add("associativity", ok, wit)

    # unit
    ok, wit = True, ""
    for i in range(H.dim):
        e = unit_vec(f, H.dim, i)
        if H.mul_vec(H.unit, e) != e or H.mul_vec(e, H.unit) != e:
            ok, wit = False, f"unit fails on e{i}"
            break
    add("unit", ok, wit)

    if H.counit is not None:
        ok, wit = True, ""
        if H.counit_of(H.unit) != f.one:
            ok, wit = False, "eps(1) != 1"
        else:
            for i in range(H.dim):
                for j in range(H.dim):
                    lhs = H.counit_of(prods[i][j])
                    rhs = f.mul(H.counit[i], H.counit[j])
                    if lhs != rhs:
                        ok, wit = False, f"eps(e{i}*e{j}) != eps(e{i})eps(e{j})"
                        break
                if not ok:
                    break
        add("counit-algebra-map", ok, wit)

    if H.comul is not None:
        # coassociativity
        ok, wit = True, ""
        for i in range(H.dim):
            lhs: dict = {}
            for j, r, c in H.comul_sparse(i):
                for p, q, c2 in H.comul_sparse(j):
                    key = (p, q, r)
                    v = f.mul(c, c2)
                    lhs[key] = f.add(lhs[key], v) if key in lhs else v
            rhs: dict = {}
            for p, j, c in H.comul_sparse(i):
                for q, r, c2 in H.comul_sparse(j):
                    key = (p, q, r)
                    v = f.mul(c, c2)
                    rhs[key] = f.add(rhs[key], v) if key in rhs else v
            lhs = {k: v for k, v in lhs.items() if v != f.zero}
            rhs = {k: v for k, v in rhs.items() if v != f.zero}
            if lhs != rhs:
                ok, wit = False, f"coassociativity fails on e{i}"
                break
        add("coassociativity", ok, wit)

        # counit axiom
        ok, wit = True, ""
        for i in range(H.dim):
            left = zero_vec(f, H.dim)
            right = zero_vec(f, H.dim)
            for j, k, c in H.comul_sparse(i):
                left[k] = f.add(left[k], f.mul(H.counit[j], c))
                right[j] = f.add(right[j], f.mul(c, H.counit[k]))
            e = unit_vec(f, H.dim, i)
            if left != e or right != e:
                ok, wit = False, f"counit axiom fails on e{i}"
                break
        add("counit-axiom", ok, wit)

        # Delta is an algebra map
        ok, wit = True, ""
        outer_unit = tensor_vec(f, H.unit, H.unit)
        if H.comul_vec(H.unit) != outer_unit:
            ok, wit = False, "Delta(1) != 1 (x) 1"
        else:
            dts = [H.comul_vec(unit_vec(f, H.dim, i)) for i in range(H.dim)]
            for i in range(H.dim):
                for j in range(H.dim):
                    lhs = H.comul_vec(prods[i][j])
                    rhs = tensor_square_mul(H, dts[i], dts[j])
                    if lhs != rhs:
                        ok, wit = False, f"Delta(e{i}*e{j}) != Delta(e{i})Delta(e{j})"
                        break
                if not ok:
                    break
        add("comul-algebra-map", ok, wit)

    if H.antipode is not None:
        S = H.antipode
        ok1, ok2, wit1, wit2 = True, True, "", ""
        for i in range(H.dim):
            left = zero_vec(f, H.dim)
            right = zero_vec(f, H.dim)
            for j, k, c in H.comul_sparse(i):
                sj = S.matvec(unit_vec(f, H.dim, j))
                term = H.mul_vec(sj, unit_vec(f, H.dim, k))
                left = vec_add(f, left, vec_scale(f, c, term))
                sk = S.matvec(unit_vec(f, H.dim, k))
                term = H.mul_vec(unit_vec(f, H.dim, j), sk)
                right = vec_add(f, right, vec_scale(f, c, term))
            target = vec_scale(f, H.counit[i], H.unit)
            if left != target and ok1:
                ok1, wit1 = False, f"sum S(a_1)a_2 != eps(a)1 at e{i}"
            if right != target and ok2:
                ok2, wit2 = False, f"sum a_1 S(a_2) != eps(a)1 at e{i}"
        add("antipode-left", ok1, wit1)
        add("antipode-right", ok2, wit2)
        add("antipode-invertible", S.inverse() is not None,
            "" if S.inverse() is not None else "antipode matrix singular")

    required = {"algebra": {"associativity", "unit"},
                "augmented-algebra": {"associativity", "unit",
                                      "counit-algebra-map"},
                "bialgebra": {"associativity", "unit", "counit-algebra-map",
                              "coassociativity", "counit-axiom",
                              "comul-algebra-map"},
                "hopf": {"associativity", "unit", "counit-algebra-map",
                         "coassociativity", "counit-axiom",
                         "comul-algebra-map", "antipode-left",
                         "antipode-right", "antipode-invertible"}}[H.level]
    names = {c.name for c in checks}
    missing = required - names
    for nm in sorted(missing):
        checks.append(Check(nm, False, "required data absent for level"))
    return AxiomReport(H.level, checks)


# -- constructions -----------------------------------------------------

def dual_hopf(H: HopfData) -> HopfData:
    """H* by transposition of structure tensors; an exact involution."""
    if H.comul is None or H.counit is None:
        raise StructureError("dual needs comultiplication and counit")
    n = H.dim
    mul = [[[H.comul[k][i][j] for k in range(n)]
            for j in range(n)] for i in range(n)]
    comul = [[[H.mul[j][k][i] for k in range(n)]
              for j in range(n)] for i in range(n)]
    antipode = H.antipode.transpose() if H.antipode is not None else None
    labels = [f"{b}^" for b in H.basis]
    level = H.level if H.level in ("bialgebra", "hopf") else "bialgebra"
    return HopfData(H.field, n, labels, list(H.counit), mul,
                    comul=comul, counit=list(H.unit), antipode=antipode,
                    level=level, name=f"{H.name}*" if H.name else "")


def variant(H: HopfData, which: str) -> HopfData:
    """Opposite / co-opposite / both.  op and cop flip the antipode to
    its inverse; op-cop keeps it."""
    n = H.dim
    mul, comul, antipode = H.mul, H.comul, H.antipode
    if which in ("op", "op-cop"):
        mul = [[[H.mul[j][i][k] for k in range(n)]
                for j in range(n)] for i in range(n)]
    if which in ("cop", "op-cop"):
        if H.comul is None:
            raise StructureError("cop needs comultiplication")
        comul = [[[H.comul[i][k][j] for k in range(n)]
                  for j in range(n)] for i in range(n)]
    if which not in ("op", "cop", "op-cop"):
        raise ValueError("variant must be op, cop or op-cop")
    if antipode is not None and which in ("op", "cop"):
        antipode = H.antipode_inv_matrix()
    return HopfData(H.field, n, H.basis, H.unit, mul, comul=comul,
                    counit=H.counit, antipode=antipode, level=H.level,
                    name=f"{H.name}^{which}" if H.name else "")


def tensor_algebra(A: HopfData, B: HopfData) -> HopfData:
    """Componentwise structure on A (x) B with row-major (A-major)
    index pairing."""
    check_same_field(A.field, B.field)
    f = A.field
    n, m = A.dim, B.dim
    N = n * m
    z = f.zero

    def idx(i, i2):
        return i * m + i2

    mul = [[[z] * N for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for i2 in range(m):
            for j in range(n):
                for j2 in range(m):
                    row = mul[idx(i, i2)][idx(j, j2)]
                    for k, c1 in A.mul_sparse(i, j):
                        for k2, c2 in B.mul_sparse(i2, j2):
                            row[idx(k, k2)] = f.add(row[idx(k, k2)],
                                                    f.mul(c1, c2))
    unit = tensor_vec(f, A.unit, B.unit)
    comul = counit = None
    if A.comul is not None and B.comul is not None:
        comul = [[[z] * N for _ in range(N)] for _ in range(N)]
        for i in range(n):
            for i2 in range(m):
                t = comul[idx(i, i2)]
                for j, k, c1 in A.comul_sparse(i):
                    for j2, k2, c2 in B.comul_sparse(i2):
                        t[idx(j, j2)][idx(k, k2)] = f.add(
                            t[idx(j, j2)][idx(k, k2)], f.mul(c1, c2))
    if A.counit is not None and B.counit is not None:
        counit = tensor_vec(f, A.counit, B.counit)
    antipode = None
    if A.antipode is not None and B.antipode is not None:
        rows = []
        for i in range(n):
            for i2 in range(m):
                rows.append([f.mul(A.antipode.rows[i][j],
                                   B.antipode.rows[i2][j2])
                             for j in range(n) for j2 in range(m)])
        antipode = Matrix(f, rows)
    level_rank = min(LEVELS.index(A.level), LEVELS.index(B.level))
    labels = [f"{a}(x){b}" for a in A.basis for b in B.basis]
    return HopfData(f, N, labels, unit, mul, comul=comul, counit=counit,
                    antipode=antipode, level=LEVELS[level_rank],
                    name=f"{A.name}(x){B.name}" if A.name and B.name else "")


def convolution_inverse(H: HopfData, F: Matrix) -> Matrix | None:
    """Convolution inverse of a linear map on a bialgebra: solves
    sum G(a_1)F(a_2) = eps(a)1 and checks the two-sided property.
    For F = Id this returns the antipode when one exists."""
    if H.comul is None or H.counit is None:
        raise StructureError("convolution inverse needs a bialgebra")
    f = H.field
    n = H.dim
    # precompute e_u * F(e_k) for all u, k
    Fcols = [F.matvec(unit_vec(f, n, k)) for k in range(n)]
    prod_uk = [[H.mul_vec(unit_vec(f, n, u), Fcols[k]) for k in range(n)]
               for u in range(n)]
    rows, rhs = [], []
    for i in range(n):
        sparse = H.comul_sparse(i)
        for r in range(n):
            row = [f.zero] * (n * n)
            for j, k, c in sparse:
                for u in range(n):
                    v = prod_uk[u][k][r]
                    if v != f.zero:
                        col = u * n + j
                        row[col] = f.add(row[col], f.mul(c, v))
            rows.append(row)
            rhs.append(f.mul(H.counit[i], H.unit[r]))
    sol = solve_linear(Matrix(f, rows), rhs)
    if sol is None:
        return None
    G = Matrix(f, [[sol[u * n + j] for j in range(n)] for u in range(n)])
    # two-sided check: sum F(a_1) G(a_2) = eps(a) 1
    Gcols = [G.matvec(unit_vec(f, n, k)) for k in range(n)]
    for i in range(n):
        acc = zero_vec(f, n)
        for j, k, c in H.comul_sparse(i):
            acc = vec_add(f, acc, vec_scale(f, c, H.mul_vec(Fcols[j], Gcols[k])))
        if acc != vec_scale(f, H.counit[i], H.unit):
            return None
    return G
