import numpy as np
import pytest

import pygkls


def test_basis_orthonormality():
    for n in (2, 3, 4):
        basis = pygkls.basis(n)
        assert len(basis) == n * n
        for i, fi in enumerate(basis):
            for k, fk in enumerate(basis):
                expect = 1.0 if i == k else 0.0
                assert abs(np.trace(fi @ fk.conj().T) - expect) < 1e-14


def test_structure_constants():
    f, d = pygkls.structure_constants(2)
    assert f.shape == (3, 3, 3)
    assert abs(f[0, 1, 2] - np.sqrt(2)) < 1e-13
    assert np.abs(d).max() < 1e-13


def test_methods_agree_and_cp():
    L = pygkls.v_system_liouvillian(gamma1=2.0, gamma2=1.0, nbar=1.0, p=0.5)
    a_trace = pygkls.kossakowski(L, ordering="paper-v3", method="trace")
    a_pinv = pygkls.kossakowski(L, ordering="paper-v3", method="pinv")
    assert np.abs(a_trace - a_pinv).max() < 1e-10

    verdict = pygkls.cp_verdict(a_trace)
    assert verdict["is_cp"]
    assert verdict["min_eigenvalue"] > -1e-12
    s3 = np.sqrt(3.0)
    expected = [3 + s3, (3 + s3) / 2, 3 - s3, (3 - s3) / 2, 0, 0, 0, 0]
    assert np.abs(np.array(verdict["spectrum"]) - expected).max() < 1e-10


def test_v_lambda_spectral_identity():
    for ratio in (0.1, 1.0, 10.0):
        for nbar in (0.01, 1.0, 100.0):
            Lv = pygkls.v_system_liouvillian(ratio, 1.0, nbar, 1.0)
            Ll = pygkls.lambda_system_liouvillian(ratio, 1.0, nbar, 1.0)
            ev = pygkls.spectrum(pygkls.kossakowski(Lv))
            el = pygkls.spectrum(pygkls.kossakowski(Ll))
            assert np.abs(np.array(ev) - el).max() < 1e-10


def test_roundtrip_and_lindblad_form():
    rng = np.random.default_rng(5)
    x = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    a = (x + x.conj().T) / 2
    L = pygkls.reconstruct_liouvillian(a, ordering="row-major")
    back = pygkls.kossakowski(L, ordering="row-major", method="trace")
    assert np.abs(back - a).max() < 1e-10

    rates, ops = pygkls.lindblad_form(a)
    assert len(rates) == 8 and len(ops) == 8
    assert all(r1 >= r2 - 1e-12 for r1, r2 in zip(rates, rates[1:]))
    for op in ops:
        assert abs(np.trace(op)) < 1e-10


def test_restore_cp():
    a = np.diag([1.0, -0.5, 0.0]).astype(complex)
    restored = pygkls.restore_cp(a)
    assert np.abs(restored - np.diag([1.0, 0.0, 0.0])).max() < 1e-12
    assert pygkls.cp_verdict(restored)["is_cp"]


def test_transformation_tensor_ranks():
    t_square, t_aug = pygkls.transformation_tensor(3)
    assert t_square.shape == (64, 64)
    assert t_aug.shape == (72, 64)
    sv = np.array(pygkls.singular_values(t_square))
    assert int((sv < 1e-10 * sv[0]).sum()) == 8
    sva = np.array(pygkls.singular_values(t_aug))
    assert sva[-1] > 1e-10 * sva[0]


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        pygkls.basis(1)
    with pytest.raises(ValueError):
        pygkls.kossakowski(np.zeros((3, 3), complex))  # not a squared dimension
    broken = pygkls.v_system_liouvillian(1.0, 1.0, 1.0, 1.0)
    broken[0, 0] += 0.5  # breaks trace preservation
    with pytest.raises(ValueError):
        pygkls.kossakowski(broken)
