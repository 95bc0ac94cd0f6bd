import csv
import logging

import numpy as np

from ..assembly import FictitiousDomainModel
from ..assembly import Material
from ..assembly import ProblemData
from ..assembly import assemble_error_matrices
from ..exceptions import FdCrackError
from ..extension3d import build_extension
from ..extension3d import read_surface
from ..extension3d import write_extension
from ..geometry import CrackDescription
from ..manufactured import ManufacturedCase
from ..manufactured import problem_data
from ..manufactured import sweep_geometry
from ..manufactured import sweep_length
from ..mesh import RectDomain
from ..mesh import build_mesh
from ..mesh import parse_couple
from ..postproc import displacement_errors
from ..postproc import jump_compatibility
from ..postproc import multiplier_error
from ..postproc import rate_table
from ..postproc import vertex_displacements
from ..postproc import write_vertex_displacements
from ..solvers import UzawaConfig
from ..solvers import solve_monolithic
from ..solvers import uzawa_cg
from .config import parse_subdivisions
from .worker import WorkerPool


__all__ = [
    "Controller",
    "CONVERGENCE_COLUMNS",
    "SWEEP_COLUMNS",
    "ROBUSTNESS_COLUMNS",
    "solve",
    "write_rows",
]


logger = logging.getLogger(__name__)


CONVERGENCE_COLUMNS = [
    "elem_u",
    "elem_lambda",
    "gamma0",
    "h",
    "n_dofs",
    "rel_l2_pct",
    "rel_h1_pct",
    "rel_lambda_pct",
    "jump_ratio",
    "solver",
    "iters",
]
SWEEP_COLUMNS = [
    "elem_u",
    "elem_lambda",
    "x_a",
    "gamma0",
    "h",
    "rel_lambda_pct",
    "rel_l2_pct",
    "rel_h1_pct",
    "solver",
    "iters",
]
ROBUSTNESS_COLUMNS = [
    "elem_u",
    "elem_lambda",
    "mode",
    "x0",
    "x_a",
    "x_b",
    "gamma0",
    "rel_lambda_pct",
    "rel_l2_pct",
    "rel_h1_pct",
    "solver",
    "failed",
]


# ==============================================================================
# Runs
# ==============================================================================


def solve(system, settings):
    """Solve a block system with the configured solver.

    The Uzawa iteration only applies to unstabilized systems; stabilized
    systems are always solved directly.
    """
    if settings["solver"] == "uzawa" and system.gamma == 0:
        return uzawa_cg(system, UzawaConfig(eps=settings["uzawa_eps"], k_max=settings["uzawa_kmax"]))
    return solve_monolithic(system)


def _material(settings):
    return Material(settings["lambda_l"], settings["mu_l"])


def _model(couple, nx, ny, material, dirichlet_edges=("bottom", "right", "top", "left"), domain=None):
    element_u, element_lambda = parse_couple(couple)
    mesh = build_mesh(domain or RectDomain(), nx, ny)
    return FictitiousDomainModel(mesh, element_u, element_lambda, material, dirichlet_edges=dirichlet_edges)


def _measure(model, discretization, case, gamma0, settings):
    system = model.assemble(discretization, gamma0, problem_data(case))
    solution = solve(system, settings)
    l2, h1 = displacement_errors(solution, case, discretization.cutmesh, discretization.spaces)
    return {
        "system": system,
        "solution": solution,
        "rel_l2_pct": l2,
        "rel_h1_pct": h1,
        "rel_lambda_pct": multiplier_error(solution, case),
        "solver": solution.solver,
        "iters": solution.iterations,
    }


def convergence_task(task):
    """Rows of one element couple on one mesh, for every stabilization parameter."""
    couple, n, gammas, settings = task
    element_u, element_lambda = couple.upper().split("/")
    material = _material(settings)
    case = ManufacturedCase(jump=settings["jump"], material=material)
    model = _model(couple, n, n, material)
    discretization = model.discretize(case.crack)
    errors = assemble_error_matrices(discretization.interface, discretization.spaces, material, discretization.operators)
    ratio = jump_compatibility(case, discretization.spaces, errors)
    rows = []
    for gamma0 in gammas:
        result = _measure(model, discretization, case, gamma0, settings)
        rows.append(
            {
                "elem_u": element_u,
                "elem_lambda": element_lambda,
                "gamma0": gamma0,
                "h": model.mesh.h,
                "n_dofs": sum(result["system"].sizes),
                "rel_l2_pct": result["rel_l2_pct"],
                "rel_h1_pct": result["rel_h1_pct"],
                "rel_lambda_pct": result["rel_lambda_pct"],
                "jump_ratio": ratio,
                "solver": result["solver"],
                "iters": result["iters"],
            }
        )
        logger.info("%s h=1/%d gamma0=%g: L2 %.4g%%, H1 %.4g%%, lambda %.4g%%", couple, n, gamma0, result["rel_l2_pct"], result["rel_h1_pct"], result["rel_lambda_pct"])
    return rows


def sweep_task(task):
    """Rows of a batch of crack geometries sharing one model.

    A geometry for which the discretization or the solve breaks down gives
    rows flagged as failed, with infinite errors.
    """
    couple, n, cases, gammas, settings = task
    element_u, element_lambda = couple.upper().split("/")
    material = _material(settings)
    model = _model(couple, n, n, material)
    rows = []
    for mode, x0, x_a, x_b in cases:
        if mode == "length":
            case = sweep_length(x_b - x_a, x0=x0, x_a=x_a, jump=settings["jump"], material=material)
        else:
            case = sweep_geometry(x_a, jump=settings["jump"], material=material)
        try:
            discretization = model.discretize(case.crack)
        except FdCrackError as e:
            logger.warning("Geometry x_a=%g x_b=%g cannot be discretized: %s", x_a, x_b, e)
            discretization = None
        for gamma0 in gammas:
            row = {
                "elem_u": element_u,
                "elem_lambda": element_lambda,
                "mode": mode,
                "x0": case.x0,
                "x_a": case.x_a,
                "x_b": case.x_b,
                "gamma0": gamma0,
                "h": model.mesh.h,
            }
            result = None
            if discretization is not None:
                try:
                    result = _measure(model, discretization, case, gamma0, settings)
                except FdCrackError as e:
                    logger.warning("Run x_a=%g gamma0=%g failed: %s", x_a, gamma0, e)
            if result is None:
                row.update(rel_lambda_pct=float("inf"), rel_l2_pct=float("inf"), rel_h1_pct=float("inf"), solver="failed", iters=0, failed=True)
            else:
                row.update({key: result[key] for key in ("rel_lambda_pct", "rel_l2_pct", "rel_h1_pct", "solver", "iters")})
                row["failed"] = not np.isfinite(result["rel_lambda_pct"])
            rows.append(row)
    return rows


# ==============================================================================
# Output
# ==============================================================================


def _format(value):
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return value


def write_rows(path, columns, rows):
    """Write result rows as a UTF-8 CSV file with a header row."""
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({key: _format(row.get(key, "")) for key in columns})
    logger.info("Wrote %d rows to %s", len(rows), path)


def _grid(start, stop, step):
    count = int(round((stop - start) / step))
    return [round(start + i * step, 10) for i in range(count + 1)]


def _chunks(items, count):
    count = max(1, min(count, len(items)))
    return [items[i::count] for i in range(count)]


# ==============================================================================
# Controller
# ==============================================================================


class Controller(object):
    """One action per command.

    Parameters
    ----------
    settings : dict
        The settings returned by :func:`compas_fdcrack.app.config.load_config`.
    """

    def __init__(self, settings):
        self.settings = settings
        self.pool = WorkerPool(settings.get("workers", 1))

    def __repr__(self):
        return "Controller({!r})".format(self.pool)

    def _output(self, rows, columns):
        if self.settings.get("output"):
            write_rows(self.settings["output"], columns, rows)

    # ==============================================================================
    # Manufactured solution runs
    # ==============================================================================

    def convergence(self):
        """Errors of every element couple on every mesh, followed by the fitted rates.

        Returns
        -------
        list of dict
        """
        s = self.settings
        tasks = [(couple, n, s["gamma0"], s) for couple in s["elements"] for n in s["h_list"]]
        rows = [row for batch in self.pool.map(convergence_task, tasks) for row in batch]
        rows.sort(key=lambda row: (row["elem_u"], row["elem_lambda"], row["gamma0"], -row["h"]))

        keys = ("elem_u", "elem_lambda", "gamma0")
        rates = {column: rate_table(rows, keys, column) for column in ("rel_l2_pct", "rel_h1_pct", "rel_lambda_pct", "jump_ratio")}
        groups = sorted({tuple(row[key] for key in keys) for row in rows})
        for group in groups:
            rate = dict(zip(keys, group), h="rate", n_dofs="", solver="", iters="")
            for column, table in rates.items():
                rate[column] = table.get(group, "")
            rows.append(rate)
        self._output(rows, CONVERGENCE_COLUMNS)
        return rows

    def gamma_sweep(self):
        """Multiplier errors over a grid of stabilization parameters, for one or more crack positions.

        Returns
        -------
        list of dict
        """
        s = self.settings
        n = parse_subdivisions(s["subdivisions"])[0]
        grid = np.logspace(np.log10(s["gamma_min"]), np.log10(s["gamma_max"]), int(s["gamma_count"]))
        gammas = sorted(set(float(g) for g in grid) | set(float(g) for g in s["gamma_grid"]))
        cases = [("position", x_a - 0.153, x_a, x_a + 0.05) for x_a in s["positions"]]
        tasks = [(couple, n, [case], gammas, s) for couple in s["elements"] for case in cases]
        rows = [row for batch in self.pool.map(sweep_task, tasks) for row in batch]
        rows.sort(key=lambda row: (row["elem_u"], row["elem_lambda"], row["x_a"], row["gamma0"]))
        self._calibration(rows)
        self._output(rows, SWEEP_COLUMNS)
        return rows

    def _calibration(self, rows):
        """Compare the errors at gamma0 = 0.03 and above 0.04 with the error at gamma0 = 0.001."""
        report = {}
        for x_a in sorted({row["x_a"] for row in rows}):
            errors = {row["gamma0"]: row["rel_lambda_pct"] for row in rows if row["x_a"] == x_a}
            baseline = errors.get(0.001)
            if baseline is None or not np.isfinite(baseline) or baseline <= 0:
                logger.warning("Position x_a=%g: no finite baseline at gamma0=0.001", x_a)
                continue
            ratio = errors.get(0.03, float("nan")) / baseline
            spikes = [g for g, e in errors.items() if g > 0.04 and e > 3.0 * baseline]
            report[x_a] = (ratio, spikes)
            logger.info("Position x_a=%g: error(0.03)/error(0.001) = %.3f, within a factor 2: %s", x_a, ratio, 0.5 <= ratio <= 2.0)
            if spikes:
                logger.info("Position x_a=%g: spikes above 3x baseline for gamma0 in %s", x_a, ["%.4g" % g for g in sorted(spikes)])
            else:
                logger.info("Position x_a=%g: no spike above 3x baseline for gamma0 > 0.04", x_a)
        return report

    def robustness(self):
        """Multiplier errors over a family of crack positions or lengths.

        Returns
        -------
        list of dict
        """
        s = self.settings
        n = parse_subdivisions(s["subdivisions"])[0]
        if s["mode"] == "length":
            cases = [("length", 0.317, 0.47, 0.47 + length) for length in _grid(s["length_min"], s["length_max"], s["length_step"])]
        else:
            cases = [("position", x_a - 0.153, x_a, x_a + 0.05) for x_a in _grid(s["xa_min"], s["xa_max"], s["xa_step"])]
        tasks = [(couple, n, chunk, s["gamma0"], s) for couple in s["elements"] for chunk in _chunks(cases, self.pool.workers)]
        rows = [row for batch in self.pool.map(sweep_task, tasks) for row in batch]
        rows.sort(key=lambda row: (row["elem_u"], row["elem_lambda"], row["gamma0"], row["x_b"] if s["mode"] == "length" else row["x_a"]))
        self.failures(rows)
        self._output(rows, ROBUSTNESS_COLUMNS)
        return rows

    def failures(self, rows):
        """Number of rows per stabilization parameter whose multiplier error exceeds the threshold."""
        threshold = self.settings.get("failure_threshold", 100.0)
        counts = {}
        for row in rows:
            failed = row["failed"] or not row["rel_lambda_pct"] <= threshold
            counts[row["gamma0"]] = counts.get(row["gamma0"], 0) + int(failed)
        for gamma0, count in sorted(counts.items()):
            logger.info("gamma0=%g: %d runs above %g%%", gamma0, count, threshold)
        return counts

    # ==============================================================================
    # Single solves
    # ==============================================================================

    def demo(self):
        """Pressurized crack in a rectangular block, clamped on the bottom and the sides.

        Returns
        -------
        array of shape (n, 4)
            Rows ``x, y, ux, uy`` at the mesh vertices.
        """
        s = self.settings
        nx, ny = parse_subdivisions(s["subdivisions"])
        material = Material.from_young_poisson(s["young"], s["poisson"])
        crack = CrackDescription.from_line(48.0, 48.0, 53.0, slope=2.0, y0=35.0)
        domain = RectDomain(0.0, 100.0, 0.0, 50.0)
        model = _model(s["elements"][0], nx, ny, material, dirichlet_edges=("bottom", "left", "right"), domain=domain)
        discretization = model.discretize(crack)
        system = model.assemble(discretization, float(s["gamma0"]), ProblemData(pressure=float(s["pressure"])))
        solution = solve(system, s)
        rows = vertex_displacements(solution, crack)
        magnitude = np.linalg.norm(rows[:, 2:], axis=1)
        peak = rows[int(np.argmax(magnitude)), :2] if len(rows) else (float("nan"), float("nan"))
        logger.info("Largest displacement %.6g at (%.4g, %.4g)", magnitude.max(), peak[0], peak[1])
        if s.get("output"):
            write_vertex_displacements(rows, s["output"])
            logger.info("Wrote %d vertices to %s", len(rows), s["output"])
        return rows

    def extend3d(self):
        """Build and write the cone extension of a surface file.

        Returns
        -------
        :class:`compas_fdcrack.extension3d.ExtendedCrack`
        """
        s = self.settings
        surface = read_surface(s["surface"])
        extension = build_extension(surface, seed_sign=int(s["seed_sign"]), scale=float(s["apex_scale"]))
        logger.info("%d triangles, %d apexes, %d facets", len(surface), len(extension.apexes), len(extension.facets))
        if s.get("output"):
            write_extension(extension, s["output"])
        return extension
