import numpy as np

from compas_fdcrack.assembly import FictitiousDomainModel
from compas_fdcrack.assembly import Material
from compas_fdcrack.assembly import ProblemData
from compas_fdcrack.geometry import CrackDescription
from compas_fdcrack.mesh import RectDomain
from compas_fdcrack.mesh import build_mesh
from compas_fdcrack.mesh import parse_couple
from compas_fdcrack.postproc import vertex_displacements
from compas_fdcrack.solvers import solve_monolithic

material = Material.from_young_poisson(5000.0, 0.25)
crack = CrackDescription.from_line(48.0, 48.0, 53.0, slope=2.0, y0=35.0)

mesh = build_mesh(RectDomain(0.0, 100.0, 0.0, 50.0), 25, 12)
element_u, element_lambda = parse_couple("P2/P0")
model = FictitiousDomainModel(mesh, element_u, element_lambda, material, dirichlet_edges=("bottom", "left", "right"))

discretization = model.discretize(crack)
system = model.assemble(discretization, 0.0, ProblemData(pressure=5.0))
solution = solve_monolithic(system)

rows = vertex_displacements(solution, crack)
magnitude = np.linalg.norm(rows[:, 2:], axis=1)

for x, y, ux, uy in rows[np.argsort(magnitude)[::-1][:10]]:
    print("({:6.2f}, {:6.2f})  ux = {: .6e}  uy = {: .6e}".format(x, y, ux, uy))
