from compas_fdcrack.assembly import FictitiousDomainModel
from compas_fdcrack.assembly import Material
from compas_fdcrack.manufactured import ManufacturedCase
from compas_fdcrack.manufactured import problem_data
from compas_fdcrack.mesh import RectDomain
from compas_fdcrack.mesh import build_mesh
from compas_fdcrack.mesh import parse_couple
from compas_fdcrack.postproc import displacement_errors
from compas_fdcrack.postproc import multiplier_error
from compas_fdcrack.solvers import solve_monolithic

material = Material(1.0, 1.0)
case = ManufacturedCase(jump=(0.1, 0.05), material=material)

element_u, element_lambda = parse_couple("P2/P0")

for n in (10, 20, 40):
    mesh = build_mesh(RectDomain(), n, n)
    model = FictitiousDomainModel(mesh, element_u, element_lambda, material)
    discretization = model.discretize(case.crack)
    system = model.assemble(discretization, 0.0, problem_data(case))
    solution = solve_monolithic(system)

    l2, h1 = displacement_errors(solution, case, discretization.cutmesh, discretization.spaces)
    print("h = 1/{:<3d} L2 {:8.4f}%  H1 {:8.4f}%  lambda {:8.4f}%".format(n, l2, h1, multiplier_error(solution, case)))
