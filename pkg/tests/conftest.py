import pytest

from compas_fdcrack.assembly import FictitiousDomainModel
from compas_fdcrack.geometry import CrackDescription
from compas_fdcrack.manufactured import ManufacturedCase
from compas_fdcrack.manufactured import problem_data
from compas_fdcrack.mesh import RectDomain
from compas_fdcrack.mesh import build_mesh
from compas_fdcrack.mesh import parse_couple
from compas_fdcrack.solvers import solve_monolithic


@pytest.fixture
def domain():
    return RectDomain()


@pytest.fixture
def mesh10(domain):
    return build_mesh(domain, 10, 10)


@pytest.fixture
def crack():
    return CrackDescription.from_line(0.317, 0.47, 0.52)


@pytest.fixture
def case():
    return ManufacturedCase()


def build_model(couple, n, material=None):
    element_u, element_lambda = parse_couple(couple)
    case = ManufacturedCase()
    return FictitiousDomainModel(build_mesh(RectDomain(), n, n), element_u, element_lambda, material or case.material)


@pytest.fixture
def reference_run():
    """Factory of manufactured solves on the reference crack."""

    def run(couple="P1/P0", n=10, gamma0=0.0, solver=solve_monolithic):
        case = ManufacturedCase()
        model = build_model(couple, n, case.material)
        discretization = model.discretize(case.crack)
        system = model.assemble(discretization, gamma0, problem_data(case))
        return case, model, discretization, system, solver(system)

    return run
