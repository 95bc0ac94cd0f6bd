import csv
from copy import copy as shallow_copy

import numpy as np
import pytest
from scipy.sparse import csr_matrix
from scipy.sparse.linalg import spsolve

from compas_fdcrack.exceptions import SolverError
from compas_fdcrack.manufactured import project_multiplier
from compas_fdcrack.solvers import UzawaConfig
from compas_fdcrack.solvers import factorize
from compas_fdcrack.solvers import solve_monolithic
from compas_fdcrack.solvers import uzawa_cg
from compas_fdcrack.solvers import write_trace


def uzawa_tight(system):
    return uzawa_cg(system, UzawaConfig(eps=1e-12, k_max=2000))


@pytest.mark.parametrize("gamma0", [0.0, 0.0005, 0.03])
def test_monolithic_residual(reference_run, gamma0):
    _, _, _, _, solution = reference_run(gamma0=gamma0)
    assert solution.solver == "monolithic"
    assert solution.converged
    assert solution.is_finite()
    assert solution.residual < 1e-10


def test_uzawa_agrees_with_the_monolithic_solve(reference_run):
    _, _, _, system, uzawa = reference_run(n=20, solver=uzawa_tight)
    direct = solve_monolithic(system)
    assert uzawa.converged
    assert uzawa.iterations > 0
    for a, b in ((uzawa.u_plus, direct.u_plus), (uzawa.u_minus, direct.u_minus), (uzawa.lam, direct.lam)):
        assert np.linalg.norm(a - b) <= 1e-6 * np.linalg.norm(b)


def test_uzawa_dual_value_does_not_decrease(reference_run):
    _, _, _, _, solution = reference_run(n=20, solver=uzawa_tight)
    values = np.array([value for _, _, value in solution.trace])
    scale = max(abs(values).max(), 1.0)
    assert np.all(np.diff(values) >= -1e-10 * scale)
    assert solution.trace[0][:2] == (0, 1.0)
    assert solution.trace[-1][1] == pytest.approx(solution.ratio)


def test_uzawa_iteration_cap(reference_run):
    _, _, _, system, _ = reference_run()
    solution = uzawa_cg(system, UzawaConfig(eps=1e-14, k_max=1))
    assert solution.iterations == 1
    assert not solution.converged


def test_uzawa_from_its_own_solution_stops_at_once(reference_run):
    _, _, _, system, direct = reference_run()
    solution = uzawa_cg(system, UzawaConfig(eps=1e-8, lambda0=direct.lam))
    assert solution.converged
    assert solution.iterations <= 1
    np.testing.assert_allclose(solution.lam, direct.lam, rtol=1e-6, atol=1e-10)


def test_uzawa_from_the_projected_exact_multiplier(reference_run):
    case, _, discretization, system, direct = reference_run(n=20)
    lambda0 = project_multiplier(case, discretization.spaces)
    assert lambda0.shape == direct.lam.shape
    solution = uzawa_cg(system, UzawaConfig(eps=1e-12, k_max=2000, lambda0=lambda0))
    assert solution.converged
    assert np.linalg.norm(solution.lam - direct.lam) <= 1e-6 * np.linalg.norm(direct.lam)


def test_uzawa_rejects_stabilized_systems(reference_run):
    _, _, _, system, _ = reference_run(gamma0=0.03)
    with pytest.raises(ValueError):
        uzawa_cg(system)


def test_uzawa_terminates_within_the_multiplier_count(reference_run):
    _, _, _, system, _ = reference_run(n=4)
    m = system.multiplier.count
    assert 0 < m <= 30
    solution = uzawa_cg(system, UzawaConfig(eps=1e-10, k_max=1000))
    assert solution.converged
    assert solution.iterations <= m


def test_uzawa_recurrences_match_the_primal_solves(reference_run):
    _, _, _, system, _ = reference_run(n=10)
    solution = uzawa_cg(system, UzawaConfig(eps=1e-14, k_max=3))
    assert solution.iterations == 3

    u_plus = spsolve(system.A_plus.tocsc(), system.F_plus - system.B_plus.T @ solution.lam)
    u_minus = spsolve(system.A_minus.tocsc(), system.F_minus + system.B_minus.T @ solution.lam)
    np.testing.assert_allclose(solution.u_plus_free, u_plus, rtol=1e-8, atol=1e-10 * np.abs(u_plus).max())
    np.testing.assert_allclose(solution.u_minus_free, u_minus, rtol=1e-8, atol=1e-10 * np.abs(u_minus).max())

    def gradient_norm(u_plus, u_minus):
        r = system.jump(u_plus, u_minus)
        return float(spsolve(system.mass.tocsc(), r) @ r)

    start = gradient_norm(spsolve(system.A_plus.tocsc(), system.F_plus), spsolve(system.A_minus.tocsc(), system.F_minus))
    assert gradient_norm(u_plus, u_minus) / start == pytest.approx(solution.ratio, rel=1e-6)


def decoupled(system, G=None):
    copy = shallow_copy(system)
    copy.B_plus = system.B_plus * 0.0
    copy.B_minus = system.B_minus * 0.0
    copy.G = np.zeros_like(system.G) if G is None else G
    return copy


def test_uzawa_without_coupling_keeps_the_initial_multiplier(reference_run):
    _, _, _, system, direct = reference_run()
    system = decoupled(system)
    solution = uzawa_cg(system, UzawaConfig(lambda0=direct.lam))
    assert solution.converged
    assert solution.iterations == 0
    np.testing.assert_array_equal(solution.lam, direct.lam)
    for computed, A, F in ((solution.u_plus_free, system.A_plus, system.F_plus), (solution.u_minus_free, system.A_minus, system.F_minus)):
        expected = spsolve(A.tocsc(), F)
        np.testing.assert_allclose(computed, expected, rtol=1e-10, atol=1e-12 * np.abs(expected).max())


def test_uzawa_without_coupling_cannot_reach_a_prescribed_jump(reference_run):
    _, _, _, system, _ = reference_run()
    assert np.abs(system.G).max() > 0
    with pytest.raises(SolverError):
        uzawa_cg(decoupled(system, G=system.G))


@pytest.mark.parametrize("eps, k_max", [(0.0, 10), (-1e-8, 10), (1e-8, 0)])
def test_uzawa_config_errors(eps, k_max):
    with pytest.raises(ValueError):
        UzawaConfig(eps=eps, k_max=k_max)


def test_singular_block_is_named():
    with pytest.raises(SolverError) as info:
        factorize(csr_matrix((3, 3)), "A+")
    assert info.value.block == "A+"


def test_write_trace(reference_run, tmp_path):
    _, _, _, _, solution = reference_run(solver=uzawa_cg)
    path = tmp_path / "trace.csv"
    write_trace(solution, str(path))
    with open(path, newline="") as f:
        rows = list(csv.reader(f))
    assert rows[0] == ["iteration", "gradient_ratio", "dual_value"]
    assert len(rows) == solution.iterations + 2
    assert float(rows[1][1]) == 1.0
