from quantum_schubert.grassmannian.classical_ring import CohClass
from quantum_schubert.grassmannian.quantum_ring import QClass, qmul_basis
from quantum_schubert.grassmannian.render import format_cohclass, format_index, format_q, format_qclass


def test_format_index(gr24, sigma):
    assert format_index(gr24.fundamental()) == "σ[]"
    assert format_index(sigma(2, 1)) == "σ[2,1]"
    assert format_index(sigma(2)) == "σ[2]"


def test_format_q():
    assert format_q(0) == ""
    assert format_q(1) == "q"
    assert format_q(12) == "q¹²"


def test_format_products(gr24, sigma):
    assert format_qclass(qmul_basis(sigma(1), sigma(2, 1))) == "σ[2,2] + q·σ[]"
    assert format_qclass(qmul_basis(sigma(2, 2), sigma(2, 2))) == "q²·σ[]"
    assert format_qclass(qmul_basis(sigma(2), sigma(1, 1))) == "q·σ[]"
    assert format_qclass(QClass.zero(gr24)) == "0"


def test_signs_and_coefficients(gr24, sigma):
    x = CohClass.from_dict(gr24, {sigma(1): -1, sigma(2): 3})
    assert format_cohclass(x) == "3·σ[2] - σ[1]"
    assert format_cohclass(-x) == "-3·σ[2] + σ[1]"
    y = QClass.basis(sigma(1), 1).scale(-2) + QClass.basis(sigma(2))
    assert format_qclass(y) == "σ[2] - 2·q·σ[1]"
