"""The quantum double D(H) = H^{*cop} (x) H: construction by the
straightening rule, the universal R-matrix, unimodularity of the double
and symmetry via the Drinfel'd element u."""

from __future__ import annotations

from dataclasses import dataclass

from .fh import FHProfile, fh_profile
from .frobenius import symmetric_test
from .linalg import Matrix, unit_vec, vec_add, vec_scale, zero_vec
from .structure import CheckResult, Element, Functional, HopfData, \
    StructureError, dual_hopf, hit_left, hit_right, tensor_square_mul, \
    tensor_vec, variant, verify_axioms


class DoubleConstructionError(RuntimeError):
    """An identity guaranteed by the construction failed (corrupt input
    or implementation bug)."""


@dataclass
class DoubleData:
    H: HopfData
    dual: HopfData              # H^* (standard coproduct)
    D: HopfData                 # the double, basis (dual i, primal j) -> i*n+j
    r_pairs: list               # [(P_i, Q_i)] pure tensor legs of R, D-coords

    def dual_in_double(self, g_coords) -> list:
        """g (x) 1 as a coordinate vector of D."""
        H = self.H
        f = H.field
        return tensor_vec(f, list(g_coords), H.unit)

    def primal_in_double(self, x_coords) -> list:
        """1 (x) x: the unit of H^* is the counit of H."""
        H = self.H
        f = H.field
        return tensor_vec(f, list(H.counit), list(x_coords))


def _cross_products(H: HopfData, dual: HopfData):
    """cross[j][i] = the element x g of D for x = e_j in H and g = e^i
    in H^*, computed by both straightening formulas (which must agree):
    x g = sum (x_1 g S^{-1}x_3) x_2 = sum g_2 (S^{-1}g_1 -> x <- g_3).
    Returned as D-coordinate vectors (dual-major)."""
    f = H.field
    n = H.dim
    s_inv = H.antipode_inv_matrix()
    dual_s_inv = dual.antipode_inv_matrix()
    cross = [[None] * n for _ in range(n)]
    for j in range(n):
        d3 = H.comul2_sparse(j)
        for i in range(n):
            # form 1
            out1 = zero_vec(f, n * n)
            for p, q, r, c in d3:
                sr = s_inv.matvec(unit_vec(f, n, r))
                for h in range(n):
                    w = H.mul_vec(H.mul_vec(sr, unit_vec(f, n, h)),
                                  unit_vec(f, n, p))
                    if w[i] != f.zero:
                        idx = h * n + q
                        out1[idx] = f.add(out1[idx], f.mul(c, w[i]))
            # form 2
            out2 = zero_vec(f, n * n)
            x = H.basis_element(j)
            for p, q, r, c in dual.comul2_sparse(i):
                g1s = Functional(H, dual_s_inv.matvec(unit_vec(f, n, p)))
                g3 = Functional(H, unit_vec(f, n, r))
                y = hit_right(hit_left(g1s, x), g3)
                for h, ch in enumerate(y.coords):
                    if ch != f.zero:
                        idx = q * n + h
                        out2[idx] = f.add(out2[idx], f.mul(c, ch))
            if out1 != out2:
                raise DoubleConstructionError(
                    f"straightening formulas disagree at x = {H.basis[j]}, "
                    f"g = {dual.basis[i]}")
            cross[j][i] = out1
    return cross


def build_double(H: HopfData) -> DoubleData:
    """D(H) with basis pairing (dual index i, primal index j) -> i*n + j,
    coproduct Delta^cop (x) Delta, multiplication from the straightening
    rule and antipode S'(g x) = S(x) S^{-1}(g); fully axiom-checked."""
    if H.level != "hopf":
        raise StructureError("the double needs a full Hopf structure")
    f = H.field
    n = H.dim
    N = n * n
    dual = dual_hopf(H)
    dual_cop = variant(dual, "cop")

    # coalgebra (and labels, unit, counit) from the tensor coalgebra
    from .structure import tensor_algebra
    shell = tensor_algebra(dual_cop, H)

    cross = _cross_products(H, dual)

    def dual_left_mul(i, vec):
        """(e^i (x) 1) * v for a D-coordinate vector with the dual factor
        acting by H^* multiplication on the dual leg."""
        out = zero_vec(f, N)
        for p, cp in enumerate(vec):
            if cp == f.zero:
                continue
            a, jj = divmod(p, n)
            for k, c in dual.mul_sparse(i, a):
                idx = k * n + jj
                out[idx] = f.add(out[idx], f.mul(cp, c))
        return out

    def primal_right_mul(vec, j2):
        out = zero_vec(f, N)
        for p, cp in enumerate(vec):
            if cp == f.zero:
                continue
            a, jj = divmod(p, n)
            for k, c in H.mul_sparse(jj, j2):
                idx = a * n + k
                out[idx] = f.add(out[idx], f.mul(cp, c))
        return out

    z = f.zero
    mul = [[None] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            for i2 in range(n):
                base = dual_left_mul(i, cross[j][i2])
                for j2 in range(n):
                    mul[i * n + j][i2 * n + j2] = primal_right_mul(base, j2)

    D = HopfData(f, N, shell.basis, shell.unit, mul, comul=shell.comul,
                 counit=shell.counit, antipode=Matrix.identity(f, N),
                 level="bialgebra", name=f"D({H.name})" if H.name else "D")

    # antipode S'(g x) = S(x) S^{-1}(g), a product in D
    s_mat = H.antipode_matrix()
    dual_s_inv = dual.antipode_inv_matrix()
    cols = []
    for i in range(n):
        sg = dual_s_inv.matvec(unit_vec(f, n, i))
        sg_D = tensor_vec(f, sg, H.unit)
        for j in range(n):
            sx_D = tensor_vec(f, list(H.counit),
                              s_mat.matvec(unit_vec(f, n, j)))
            cols.append(D.mul_vec(sx_D, sg_D))
    D = HopfData(f, N, shell.basis, shell.unit, mul, comul=shell.comul,
                 counit=shell.counit, antipode=Matrix.from_columns(f, cols),
                 level="hopf", name=f"D({H.name})" if H.name else "D")

    report = verify_axioms(D)
    if not report.passed:
        raise DoubleConstructionError(
            "double fails axioms: "
            + "; ".join(str(c) for c in report.failures()))

    # the two factors embed as subalgebras
    for i in range(n):
        for i2 in range(n):
            lhs = D.mul_vec(tensor_vec(f, unit_vec(f, n, i), H.unit),
                            tensor_vec(f, unit_vec(f, n, i2), H.unit))
            rhs = tensor_vec(f, dual.mul_vec(unit_vec(f, n, i),
                                             unit_vec(f, n, i2)), H.unit)
            if lhs != rhs:
                raise DoubleConstructionError("dual factor not a subalgebra")
            lhs = D.mul_vec(tensor_vec(f, list(H.counit), unit_vec(f, n, i)),
                            tensor_vec(f, list(H.counit), unit_vec(f, n, i2)))
            rhs = tensor_vec(f, list(H.counit),
                             H.mul_vec(unit_vec(f, n, i),
                                       unit_vec(f, n, i2)))
            if lhs != rhs:
                raise DoubleConstructionError("primal factor not a subalgebra")

    r_pairs = [(tensor_vec(f, list(H.counit), unit_vec(f, n, i)),
                tensor_vec(f, unit_vec(f, n, i), H.unit))
               for i in range(n)]
    return DoubleData(H, dual, D, r_pairs)


def _pure_tensor_sum(field, pairs, N):
    out = zero_vec(field, N * N)
    for p_vec, q_vec in pairs:
        for a, ca in enumerate(p_vec):
            if ca == field.zero:
                continue
            row = a * N
            for b, cb in enumerate(q_vec):
                if cb != field.zero:
                    out[row + b] = field.add(out[row + b], field.mul(ca, cb))
    return out


def r_matrix_vector(dd: DoubleData) -> list:
    """R as a row-major coordinate vector in D (x) D."""
    return _pure_tensor_sum(dd.D.field, dd.r_pairs, dd.D.dim)


def check_quasitriangular(dd: DoubleData) -> CheckResult:
    """R invertible with R Delta(a) = Delta^op(a) R, plus the two
    coproduct equations (Delta (x) Id)R = R13 R23 and
    (Id (x) Delta)R = R13 R12."""
    D = dd.D
    f = D.field
    N = D.dim
    res = CheckResult()
    R = r_matrix_vector(dd)

    # inverse: (S' (x) Id)R, verified directly
    S = D.antipode_matrix()
    inv_pairs = [(S.matvec(p), q) for p, q in dd.r_pairs]
    R_inv = _pure_tensor_sum(f, inv_pairs, N)
    one = tensor_vec(f, D.unit, D.unit)
    res.add("R (S' (x) Id)R = 1 = (S' (x) Id)R R",
            tensor_square_mul(D, R, R_inv) == one
            and tensor_square_mul(D, R_inv, R) == one)

    # almost cocommutativity on every basis element
    ok, wit = True, ""
    for a in range(N):
        da = D.comul_vec(unit_vec(f, N, a))
        da_op = zero_vec(f, N * N)
        for p, c in enumerate(da):
            i, j = divmod(p, N)
            da_op[j * N + i] = c
        if tensor_square_mul(D, R, da) != tensor_square_mul(D, da_op, R):
            ok, wit = False, f"fails at {D.basis[a]}"
            break
    res.add("R Delta(a) = Delta^op(a) R", ok, wit)

    # triple-tensor equations, expanded in pure R-terms
    def triple_add(acc, u, v, w):
        for a, ca in enumerate(u):
            if ca == f.zero:
                continue
            for b, cb in enumerate(v):
                if cb == f.zero:
                    continue
                cab = f.mul(ca, cb)
                base = (a * N + b) * N
                for c_idx, cc in enumerate(w):
                    if cc != f.zero:
                        acc[base + c_idx] = f.add(acc[base + c_idx],
                                                  f.mul(cab, cc))

    prods_q = {}
    prods_p = {}
    for i, (pi, qi) in enumerate(dd.r_pairs):
        for j, (pj, qj) in enumerate(dd.r_pairs):
            prods_q[i, j] = D.mul_vec(qi, qj)
            prods_p[i, j] = D.mul_vec(pi, pj)

    lhs = [f.zero] * (N ** 3)
    for p_vec, q_vec in dd.r_pairs:
        dp = D.comul_vec(p_vec)
        for pos, c in enumerate(dp):
            if c == f.zero:
                continue
            a, b = divmod(pos, N)
            base = (a * N + b) * N
            for c_idx, cc in enumerate(q_vec):
                if cc != f.zero:
                    lhs[base + c_idx] = f.add(lhs[base + c_idx],
                                              f.mul(c, cc))
    rhs = [f.zero] * (N ** 3)
    for i, (pi, _) in enumerate(dd.r_pairs):
        for j, (pj, _) in enumerate(dd.r_pairs):
            triple_add(rhs, pi, pj, prods_q[i, j])
    res.add("(Delta (x) Id)R = R13 R23", lhs == rhs)

    lhs = [f.zero] * (N ** 3)
    for p_vec, q_vec in dd.r_pairs:
        dq = D.comul_vec(q_vec)
        for a, ca in enumerate(p_vec):
            if ca == f.zero:
                continue
            for pos, c in enumerate(dq):
                if c == f.zero:
                    continue
                b, c_idx = divmod(pos, N)
                slot = (a * N + b) * N + c_idx
                lhs[slot] = f.add(lhs[slot], f.mul(ca, c))
    rhs = [f.zero] * (N ** 3)
    for i, (_, qi) in enumerate(dd.r_pairs):
        for j, (_, qj) in enumerate(dd.r_pairs):
            triple_add(rhs, prods_p[i, j], qj, qi)
    res.add("(Id (x) Delta)R = R13 R12", lhs == rhs)
    return res


def check_double_integrals(dd: DoubleData, profile_H: FHProfile,
                           profile_D: FHProfile | None = None) -> CheckResult:
    """T (x) t with T = S^{-1}f is a two-sided integral of D(H); the two
    intermediate tensor identities behind that fact; S(t) (x) f is the
    Frobenius functional of D(H) with (T (x) t) pairing to 1; and D(H)
    is unimodular."""
    H, dual, D = dd.H, dd.dual, dd.D
    f = H.field
    n = H.dim
    res = CheckResult()
    t = profile_H.t
    fr = profile_H.f
    T = fr.compose_matrix(H.antipode_inv_matrix())   # S^{-1}f in H*

    Tt = tensor_vec(f, T.coords, t.coords)           # element of D
    ok_r = ok_l = True
    w_r = w_l = ""
    for a in range(D.dim):
        e = unit_vec(f, D.dim, a)
        target = vec_scale(f, D.counit[a], Tt)
        if D.mul_vec(Tt, e) != target and ok_r:
            ok_r, w_r = False, f"fails at {D.basis[a]}"
        if D.mul_vec(e, Tt) != target and ok_l:
            ok_l, w_l = False, f"fails at {D.basis[a]}"
    res.add("T (x) t is a right integral in D(H)", ok_r, w_r)
    res.add("T (x) t is a left integral in D(H)", ok_l, w_l)

    # intermediate identity: sum S^{-1}(t_3) b^{-1} t_1 (x) t_2 = 1 (x) t
    b_inv = profile_H.b.inverse()
    lhs = zero_vec(f, n * n)
    s_inv = H.antipode_inv_matrix()
    for i, ci in enumerate(t.coords):
        if ci == f.zero:
            continue
        for p, q, r, c in H.comul2_sparse(i):
            v = H.mul_vec(H.mul_vec(s_inv.matvec(unit_vec(f, n, r)),
                                    b_inv.coords), unit_vec(f, n, p))
            w = f.mul(ci, c)
            for u, cu in enumerate(v):
                if cu != f.zero:
                    lhs[u * n + q] = f.add(lhs[u * n + q], f.mul(w, cu))
    res.add("sum S^{-1}(t_3) b^{-1} t_1 (x) t_2 = 1 (x) t",
            lhs == tensor_vec(f, H.unit, t.coords))

    # intermediate identity in H*: sum T_2 (x) T_3 m S^{-1}(T_1) = T (x) 1
    m_el = list(profile_H.m.coords)                  # m as element of H*
    dual_s_inv = dual.antipode_inv_matrix()
    lhs = zero_vec(f, n * n)
    for i, ci in enumerate(T.coords):
        if ci == f.zero:
            continue
        for p, q, r, c in dual.comul2_sparse(i):
            v = dual.mul_vec(dual.mul_vec(unit_vec(f, n, r), m_el),
                             dual_s_inv.matvec(unit_vec(f, n, p)))
            w = f.mul(ci, c)
            for u, cu in enumerate(v):
                if cu != f.zero:
                    lhs[q * n + u] = f.add(lhs[q * n + u], f.mul(w, cu))
    res.add("sum T_2 (x) T_3 m S^{-1}(T_1) = T (x) 1",
            lhs == tensor_vec(f, T.coords, dual.unit))

    # S(t) (x) f is a right integral in D(H)^* pairing to 1 against T (x) t
    St = H.apply_antipode(t, 1)
    psi = Functional(D, tensor_vec(f, St.coords, fr.coords))
    ok, wit = True, ""
    for a in range(D.dim):
        g = Functional(D, unit_vec(f, D.dim, a))
        if (psi * g).coords != vec_scale(f, g(D.one()), psi.coords):
            ok, wit = False, f"fails at {D.basis[a]}^"
            break
    res.add("S(t) (x) f is a right integral in D(H)^*", ok, wit)
    res.add("(T (x) t) pairs to 1 against S(t) (x) f",
            psi(Element(D, Tt)) == f.one)

    if profile_D is None:
        profile_D = fh_profile(D)
    res.add("fh profile of D(H) passes", profile_D.passed)
    res.add("D(H) is unimodular", profile_D.unimodular)
    res.add("S(t) (x) f spans the right integrals of D(H)^*",
            _proportional_vecs(f, profile_D.f.coords, psi.coords))
    return res


def _proportional_vecs(field, u, v) -> bool:
    iu = next((i for i, c in enumerate(u) if c != field.zero), None)
    iv = next((i for i, c in enumerate(v) if c != field.zero), None)
    if iu is None or iv is None or iu != iv:
        return False
    r = field.div(v[iu], u[iu])
    return all(field.mul(r, a) == b for a, b in zip(u, v))


def check_double_symmetric(dd: DoubleData,
                           profile_D: FHProfile | None = None) -> CheckResult:
    """Drinfel'd element u = sum S'(w_i) z_i implements S'^2 by
    conjugation; the double is a symmetric algebra with Nakayama
    automorphism S'^2 = inner."""
    D = dd.D
    f = D.field
    res = CheckResult()
    if profile_D is None:
        profile_D = fh_profile(D)

    u = Element(D, zero_vec(f, D.dim))
    S = D.antipode_matrix()
    for z, w in dd.r_pairs:
        u = u + Element(D, D.mul_vec(S.matvec(w), z))
    u_inv = u.inverse()
    res.add("u invertible", u_inv is not None)
    if u_inv is None:
        return res
    S2 = S * S
    ok, wit = True, ""
    for a in range(D.dim):
        e = D.basis_element(a)
        if S2.matvec(e.coords) != (u * e * u_inv).coords:
            ok, wit = False, f"fails at {D.basis[a]}"
            break
    res.add("S'^2(a) = u a u^{-1}", ok, wit)

    res.add("Nakayama of D(H) equals S'^2 (unimodular case)",
            profile_D.unimodular and profile_D.eta == S2)
    sym = symmetric_test(profile_D.system)
    res.add("D(H) is a symmetric algebra", sym.symmetric)
    res.add("symmetric confirms unimodular", profile_D.unimodular)
    return res
