"""Frobenius systems, integrals, norms, derivatives, symmetry."""

import pytest

from fhalg import (GF, QQ, DegenerateFunctional, Element, Functional,
                   build_system, derivative, find_frobenius_functional,
                   get_preset, integral_space, integrals_and_norms, nakayama,
                   separability_element, symmetric_test, tensor_system,
                   transform_system)
from conftest import PRESET_NAMES, preset

_systems: dict = {}


def system(name):
    if name not in _systems:
        A = preset(name)
        phi = find_frobenius_functional(A)
        assert phi is not None, f"{name} should be Frobenius"
        _systems[name] = build_system(A, phi)
    return _systems[name]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_truncated_polynomial_dual_bases(n):
    """phi dual to X^{n-1} pairs X^i with X^{n-1-i}."""
    A = preset(f"truncpoly:{n}")
    sys = system(f"truncpoly:{n}")
    assert sys.phi.coords == A.basis_element(n - 1).coords
    for i in range(n):
        assert sys.xs[i].coords == A.basis_element(i).coords
        assert sys.ys[i].coords == A.basis_element(n - 1 - i).coords


def test_counit_is_degenerate_on_group_algebra():
    A = preset("group:C2")
    with pytest.raises(DegenerateFunctional):
        build_system(A, A.eps())


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_system_invariants(name):
    sys = system(name)
    sys.verify_dual_bases()
    assert sys.casimir_ok()
    assert sys.center_sum_ok()
    assert sys.exchange_ok()


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_nakayama_is_a_functional_preserving_automorphism(name):
    sys = system(name)
    alpha = nakayama(sys)
    assert sys.phi.compose_matrix(alpha).coords == sys.phi.coords


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_modular_function_composed_with_nakayama_is_counit(name):
    A = preset(name)
    sys = system(name)
    rep = integrals_and_norms(A, sys)
    alpha = nakayama(sys)
    assert rep.modular.compose_matrix(alpha).coords == A.counit


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_norm_from_dual_bases(name):
    """n = sum eps(x_i) y_i and n = sum x_i m(y_i)."""
    A = preset(name)
    f = A.field
    sys = system(name)
    rep = integrals_and_norms(A, sys)
    n1 = A.element([f.zero] * A.dim)
    n2 = A.element([f.zero] * A.dim)
    for x, y in zip(sys.xs, sys.ys):
        n1 = n1 + y.scale(A.counit_of(x.coords))
        n2 = n2 + x.scale(rep.modular(y))
    assert n1.coords == rep.right_norm.coords
    assert n2.coords == rep.right_norm.coords


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_every_right_integral_is_a_norm_multiple(name):
    """t = phi(t) n for t in a random-looking integral multiple."""
    A = preset(name)
    f = A.field
    sys = system(name)
    rep = integrals_and_norms(A, sys)
    for base in integral_space(A, "right"):
        t = Element(A, base).scale(f.from_int(3))
        assert t.coords == rep.right_norm.scale(sys.phi(t)).coords


def test_norm_defining_property():
    A = preset("sweedler4")
    sys = system("sweedler4")
    rep = integrals_and_norms(A, sys)
    # phi(n b) = eps(b) on every basis element
    for j in range(A.dim):
        b = A.basis_element(j)
        assert sys.phi(rep.right_norm * b) == A.counit[j]
        assert sys.phi(b * rep.left_norm) == A.counit[j]


def test_derivative_of_rescaled_functional_is_scalar():
    A = preset("group:S3")
    sys1 = system("group:S3")
    two = A.field.from_int(2)
    sys2 = build_system(A, sys1.phi.scale(two))
    d = derivative(sys1, sys2)
    assert d.left.coords == A.one().scale(two).coords
    assert d.right.coords == A.one().scale(two).coords


def test_derivative_recovers_shifting_element(sweedler):
    H = sweedler
    sys1 = system("sweedler4")
    g = H.basis_element(2)
    psi = Functional(H, H.right_mul_matrix(g.coords)
                     .transpose().matvec(sys1.phi.coords))
    sys2 = build_system(H, psi)
    d = derivative(sys1, sys2)
    # psi(b) = phi(b d) with d = g
    assert d.left.coords == g.coords


@pytest.mark.parametrize("name,expected", [
    ("group:C2", True),
    ("group:S3", True),
    ("truncpoly:2", False),
])
def test_separability(name, expected):
    sep = separability_element(system(name))
    assert (sep is not None) == expected


def test_separability_fails_in_bad_characteristic():
    A = get_preset("group:C2", field=GF(2))
    phi = find_frobenius_functional(A)
    sys = build_system(A, phi)
    assert separability_element(sys) is None


@pytest.mark.parametrize("name,expected", [
    ("group:C2", True),
    ("group:S3", True),
    ("group:Q8", True),
    ("truncpoly:3", True),
    ("sweedler4", False),
    ("taft:3:13", False),
])
def test_symmetric_test(name, expected):
    rep = symmetric_test(system(name))
    assert rep.symmetric == expected
    if expected:
        assert rep.trace_rescaling is not None
        assert rep.inner_witness is not None
        assert rep.symmetric_element_rescaling is not None
    else:
        assert rep.trace_rescaling is None
        assert rep.inner_witness is None
        assert rep.symmetric_element_rescaling is None


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_symmetric_and_separable_imply_unimodular(name):
    A = preset(name)
    sys = system(name)
    rep = integrals_and_norms(A, sys)
    if symmetric_test(sys).symmetric:
        assert rep.unimodular
    if separability_element(sys) is not None:
        assert rep.unimodular


def test_transform_system_identity(sweedler):
    H = sweedler
    sys = system("sweedler4")
    from fhalg import Matrix
    moved = transform_system(sys, Matrix.identity(H.field, H.dim),
                             anti=False, eps_invariant=True)
    assert moved.phi.coords == sys.phi.coords


def test_transform_system_antipode_swaps_norm_chirality(sweedler):
    H = sweedler
    sys = system("sweedler4")
    moved = transform_system(sys, H.antipode, anti=True, eps_invariant=True)
    rep = integrals_and_norms(H, sys)
    moved_rep = integrals_and_norms(H, moved)
    st = H.antipode.matvec(rep.right_norm.coords)
    assert moved_rep.left_norm.coords == st


def test_tensor_system_norm_is_tensor_of_norms():
    sysA = system("truncpoly:2")
    A = preset("truncpoly:2")
    T_sys = tensor_system(sysA, sysA)
    T = T_sys.algebra
    rep = integrals_and_norms(T, T_sys)
    x = A.basis_element(1).coords
    expected = [T.field.mul(a, b) for a in x for b in x]
    assert rep.right_norm.coords == expected
    assert symmetric_test(T_sys).symmetric
