"""Job runner: declarative TOML jobs in, JSON or table reports out.

A job names the ring, the hypersurface polynomial, optional weights,
named modules (ideal generators or explicit matrix factorizations), and
a list of tasks.  Exit code 0 means every check passed, 1 means a
mathematical check failed, 2 means the input could not be understood.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from . import __version__
from .chern import chern_forms, theta_vs_residue
from .errors import FreeModuleError, PolyParseError, ThetaLabError
from .mf import MatrixFactorization, ModulePresentation, mf_validate
from .milnor import (milnor_algebra, rational_det, residue_functional,
                     residue_pairing_matrix)
from .poly import LocalOrder, Poly, parse_poly
from .psd import psd_rank
from .spectrum import graded_orthogonality_check, spectrum
from .theta import (_to_mf, _to_presentation, gram, intersection_multiplicity,
                    periodic_tor_lengths, theta)
from .truncation import oracle_homology_length


class JobError(Exception):
    """Anything wrong with the job file itself (exit code 2)."""


def _frac_str(v):
    return str(Fraction(v))


def _matrix_str(m):
    return [[_frac_str(v) for v in row] for row in m]


def _parse_rational(text):
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as e:
        raise JobError(f"bad rational {text!r}: {e}")


class Job:
    def __init__(self, doc):
        try:
            ring = doc["ring"]
            self.names = list(ring["vars"])
            self.f_text = ring["f"]
        except KeyError as e:
            raise JobError(f"job file is missing required key {e}")
        if not self.names:
            raise JobError("ring.vars must be nonempty")
        try:
            self.f = parse_poly(self.f_text, self.names)
        except PolyParseError as e:
            raise JobError(f"in ring.f: {e}")
        self.nvars = len(self.names)
        self.order = LocalOrder(self.nvars)
        self.weights = None
        if "weights" in ring:
            self.weights = [_parse_rational(w) for w in ring["weights"]]
        self.modules = {}
        for name, spec in doc.get("modules", {}).items():
            self.modules[name] = self._parse_module(name, spec)
        self.tasks = doc.get("tasks", [])
        if not isinstance(self.tasks, list):
            raise JobError("tasks must be an array of tables")

    def _parse_module(self, name, spec):
        kind = spec.get("kind", "ideal")
        if kind == "ideal":
            gens = spec.get("gens")
            if not gens:
                raise JobError(f"module {name!r}: ideal needs a gens list")
            out = []
            for g in gens:
                try:
                    out.append(parse_poly(g, self.names))
                except PolyParseError as e:
                    raise JobError(f"module {name!r}, generator {g!r}: {e}")
            return out
        if kind == "mf":
            try:
                a = [[parse_poly(e, self.names) for e in row] for row in spec["a"]]
                b = [[parse_poly(e, self.names) for e in row] for row in spec["b"]]
            except KeyError as e:
                raise JobError(f"module {name!r}: mf needs key {e}")
            except PolyParseError as e:
                raise JobError(f"module {name!r}: {e}")
            try:
                return mf_validate(a, b, self.f)
            except ThetaLabError as e:
                raise JobError(f"module {name!r}: {e}")
        raise JobError(f"module {name!r}: unknown kind {kind!r}")

    def module(self, name):
        if name not in self.modules:
            raise JobError(f"unknown module name {name!r}")
        return self.modules[name]


def _module_names(task, job, default_all=False):
    names = task.get("modules")
    if names is None:
        if default_all:
            return list(job.modules)
        raise JobError(f"task {task.get('kind')!r} needs a modules list")
    for n in names:
        job.module(n)
    return list(names)


def _oracle_bound(job, mods):
    degs = [job.f.degree()]
    for m in mods:
        if isinstance(m, MatrixFactorization):
            degs += [e.degree() for row in m.a for e in row]
        else:
            degs += [g.degree() for g in (m.columns if isinstance(m, ModulePresentation) else m)]
    return 2 * max(max(degs), 1) + 4


def _oracle_lengths(mfM, N, bound):
    s = N.rank
    sub = [[v.components[i] for i in range(s)] for v in N.relation_vectors()]
    le = oracle_homology_length(mfM.b, mfM.a, sub, s, bound)
    lo = oracle_homology_length(mfM.a, mfM.b, sub, s, bound)
    return le, lo


def _check_oracle(job, m_name, n_name, report):
    """Recompute the stable lengths by truncation at two consecutive
    levels; any disagreement is a hard failure."""
    mfM = _to_mf(job.module(m_name), job.f, job.order)
    N = _to_presentation(job.module(n_name), job.f)
    bound = _oracle_bound(job, [job.module(m_name), job.module(n_name)])
    got = [_oracle_lengths(mfM, N, bound), _oracle_lengths(mfM, N, bound + 1)]
    want = (report.l_even, report.l_odd)
    if got[0] != want or got[1] != want:
        return False, (f"oracle disagreement for ({m_name},{n_name}): "
                       f"standard-basis lengths {want}, oracle {got[0]} at "
                       f"level {bound}, {got[1]} at level {bound + 1}")
    return True, (f"oracle agreement at truncation levels "
                  f"{bound} and {bound + 1}")


def _task_theta(job, task, oracle):
    names = _module_names(job=job, task=task)
    if len(names) != 2:
        raise JobError("theta task needs exactly two module names")
    try:
        rep = theta(job.module(names[0]), job.module(names[1]), job.f, job.order)
    except ThetaLabError as e:
        return {"error": str(e)}, "fail", [str(e)]
    result = {
        "l_even": rep.l_even, "l_odd": rep.l_odd,
        "theta": _frac_str(rep.theta), "n": rep.n,
    }
    if rep.sign_factor is not None:
        result["sign_factor"] = rep.sign_factor
    notes = []
    verdict = "pass"
    if oracle:
        ok, note = _check_oracle(job, names[0], names[1], rep)
        notes.append(note)
        if not ok:
            verdict = "fail"
    return result, verdict, notes


def _task_gram(job, task, oracle):
    names = _module_names(job=job, task=task, default_all=True)
    g = gram([job.module(n) for n in names], job.f, job.order)
    result = {"modules": names, "matrix": _matrix_str(g.matrix)}
    notes = list(g.notes)
    if g.signed is not None:
        result["signed"] = _matrix_str(g.signed)
        result["psd"] = g.psd
        if g.psd:
            result["rank"] = psd_rank(g.certificate)
        else:
            result["witness"] = [_frac_str(v) for v in g.certificate.witness]
    verdict = "pass" if g.psd in (True, None) else "fail"
    if any("symmetry violated" in n for n in notes):
        verdict = "fail"
    return result, verdict, notes


def _task_milnor(job, task, oracle):
    alg = milnor_algebra(job.f, job.order)
    basis = [Poly.monomial(m).to_string(job.names) for m in alg.basis]
    return {"mu": alg.mu, "basis": basis}, "pass", []


def _task_spectrum(job, task, oracle):
    if job.weights is None:
        raise JobError("spectrum task needs ring.weights")
    entries = spectrum(job.f, job.weights)
    rows = [{
        "monomial": Poly.monomial(e.monomial).to_string(job.names),
        "level": _frac_str(e.level),
        "unipotent": e.unipotent,
        "p": e.p,
        "ctilde_sign": e.ctilde_sign,
    } for e in entries]
    n = job.nvars - 1
    levels = sorted(e.level for e in entries)
    symmetric = levels == sorted(Fraction(n + 1) - l for l in levels)
    verdict = "pass" if symmetric else "fail"
    return {"entries": rows, "symmetric": symmetric}, verdict, []


def _task_residue(job, task, oracle):
    alg = milnor_algebra(job.f, job.order)
    data = residue_functional(alg)
    mat = residue_pairing_matrix(alg, data)
    det = rational_det(mat)
    result = {
        "a": list(data.a),
        "matrix": _matrix_str(mat),
        "det": _frac_str(det),
        "basis": [Poly.monomial(m).to_string(job.names) for m in alg.basis],
    }
    verdict = "pass" if det else "fail"
    notes = [] if det else ["residue pairing is degenerate"]
    return result, verdict, notes


def _task_chern(job, task, oracle):
    names = _module_names(job=job, task=task, default_all=True)
    results = []
    verdict = "pass"
    notes = []
    alg = milnor_algebra(job.f, job.order) if job.nvars % 2 == 0 else None
    for name in names:
        try:
            m = _to_mf(job.module(name), job.f, job.order)
        except FreeModuleError:
            results.append({"module": name, "free": True})
            continue
        cf = chern_forms(m, alg)
        d_eta_ok = cf.eta[0].d() == cf.omega[0]
        entry = {"module": name, "d_eta0_equals_omega1": d_eta_ok}
        if cf.top is not None:
            entry["top_class"] = cf.top.to_string(job.names)
        results.append(entry)
        if not d_eta_ok:
            verdict = "fail"
            notes.append(f"d(eta0) != omega1 for module {name!r}")
    out = {"modules": results}
    if job.nvars % 2 == 0 and len(names) >= 1:
        rep = theta_vs_residue([job.module(n) for n in names], job.f, job.order)
        out["theta_matrix"] = _matrix_str(rep.t_matrix)
        out["residue_matrix"] = _matrix_str(rep.r_matrix)
        out["consistent"] = rep.consistent
        if rep.degenerate:
            notes.append("both comparison matrices vanish; scalar undetermined")
        elif rep.scalar is not None:
            out["scalar"] = _frac_str(rep.scalar)
        if not rep.consistent:
            verdict = "fail"
            notes.extend(rep.notes)
    return out, verdict, notes


def _task_intersection(job, task, oracle):
    try:
        I = [parse_poly(g, job.names) for g in task["i"]]
        J = [parse_poly(g, job.names) for g in task["j"]]
    except KeyError as e:
        raise JobError(f"intersection task needs key {e}")
    except PolyParseError as e:
        raise JobError(f"intersection task: {e}")
    value = intersection_multiplicity(I, J, job.order)
    return ({"multiplicity": value}, "pass",
            ["ASSUMES_TOR_INDEPENDENCE: reported as l(P/(I+J))"])


def _task_check_all(job, task, oracle):
    """The batch verification suite for one f: symmetry, gram PSD,
    residue nondegeneracy, spectrum orthogonality, Chern identity."""
    checks = {}
    notes = []
    mod_names = list(job.modules)

    if len(mod_names) >= 2:
        a, b = mod_names[0], mod_names[1]
        t_ab = theta(job.module(a), job.module(b), job.f, job.order)
        t_ba = theta(job.module(b), job.module(a), job.f, job.order)
        checks["theta_symmetric"] = t_ab.theta == t_ba.theta
    if mod_names:
        g = gram([job.module(n) for n in mod_names], job.f, job.order)
        if g.psd is None:
            notes.extend(g.notes)
        else:
            checks["gram_psd"] = g.psd
    alg = milnor_algebra(job.f, job.order)
    data = residue_functional(alg)
    det = rational_det(residue_pairing_matrix(alg, data))
    checks["residue_nondegenerate"] = bool(det)
    if job.weights is not None:
        rep = graded_orthogonality_check(job.f, job.weights, alg, data)
        checks["graded_orthogonality"] = rep.ok
    if mod_names:
        try:
            m = _to_mf(job.module(mod_names[0]), job.f, job.order)
            cf = chern_forms(m, alg if job.nvars % 2 == 0 else None)
            checks["d_eta0_equals_omega1"] = cf.eta[0].d() == cf.omega[0]
        except FreeModuleError:
            pass
    verdict = "pass" if all(checks.values()) else "fail"
    return {"checks": checks}, verdict, notes


_TASKS = {
    "theta": _task_theta,
    "gram": _task_gram,
    "milnor": _task_milnor,
    "spectrum": _task_spectrum,
    "residue": _task_residue,
    "chern": _task_chern,
    "intersection": _task_intersection,
    "check-all": _task_check_all,
}


def run_job(job: Job, oracle: bool = False, threads: int = 1) -> dict:
    def one(idx_task):
        idx, task = idx_task
        kind = task.get("kind")
        if kind not in _TASKS:
            raise JobError(f"task {idx}: unknown kind {kind!r}")
        name = task.get("name", f"{kind}-{idx}")
        inputs = {k: v for k, v in task.items() if k not in ("kind", "name")}
        try:
            result, verdict, notes = _TASKS[kind](job, task, oracle)
        except JobError:
            raise
        except ThetaLabError as e:
            result, verdict, notes = {"error": str(e)}, "fail", [str(e)]
        return {"name": name, "kind": kind, "inputs": inputs,
                "result": result, "verdict": verdict, "notes": notes}

    items = list(enumerate(job.tasks))
    if threads > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(one, items))
    else:
        reports = [one(it) for it in items]
    return {
        "tool_version": __version__,
        "ring": {"vars": job.names},
        "f": job.f_text,
        "tasks": reports,
    }


def _format_table(report: dict) -> str:
    lines = [f"theta-lab {report['tool_version']}",
             f"ring: Q[[{', '.join(report['ring']['vars'])}]]",
             f"f = {report['f']}", ""]
    for t in report["tasks"]:
        lines.append(f"[{t['verdict'].upper()}] {t['name']} ({t['kind']})")
        for k, v in t["result"].items():
            lines.append(f"  {k}: {v}")
        for n in t["notes"]:
            lines.append(f"  note: {n}")
        lines.append("")
    return "\n".join(lines).rstrip() + "\n"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="theta-lab",
        description="Exact invariants of isolated hypersurface singularities")
    sub = parser.add_subparsers(dest="command", required=True)
    runp = sub.add_parser("run", help="execute a TOML job file")
    runp.add_argument("job_file")
    runp.add_argument("--format", choices=("json", "table"), default="json")
    runp.add_argument("--oracle-check", action="store_true",
                      help="re-verify Tor lengths with the truncation oracle")
    runp.add_argument("--threads", type=int, default=1)
    args = parser.parse_args(argv)

    try:
        with open(args.job_file, "rb") as fh:
            doc = tomllib.load(fh)
    except OSError as e:
        print(f"error: cannot read job file: {e}", file=sys.stderr)
        return 2
    except tomllib.TOMLDecodeError as e:
        print(f"error: job file is not valid TOML: {e}", file=sys.stderr)
        return 2

    try:
        job = Job(doc)
        report = run_job(job, oracle=args.oracle_check,
                         threads=max(1, args.threads))
    except JobError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(_format_table(report), end="")
    return 0 if all(t["verdict"] == "pass" for t in report["tasks"]) else 1


if __name__ == "__main__":
    sys.exit(main())
