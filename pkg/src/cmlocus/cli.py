"""Command-line driver: run a session file, print text or JSON.

Exit codes: 0 success, 2 parse error, 3 algebra error, 4 budget exceeded.
Every failure prints a single line ``error[CODE]: message`` on stderr.  JSON
output is deterministic: keys sorted, ideals rendered as the canonical
strings of their reduced Gröbner bases.
"""

from __future__ import annotations

import argparse
import json
import sys

from .budget import step_budget
from .duality import deficiency_modules, ext_module
from .errors import (
    AlgebraError,
    BudgetExceededError,
    ParseError,
    VerificationError,
)
from .fields import field_from_spec
from .groebner import Ideal
from .locus import (
    build_report,
    depth_dim_at_prime,
    is_equidimensional,
    ncm_T_ideal,
    ncm_a_ideal,
    psd,
    psupp_ideal,
    serre_condition,
    shallow_locus_ideal,
)
from .modules import annihilator, is_zero_module
from .oracle import quotient_depth
from .session import Session, parse_session


def ideal_strings(ideal: Ideal):
    """Canonical, diffable rendering: the reduced basis, in order."""
    return [str(g) for g in ideal.groebner_basis()] or ["0"]


def ring_string(ring):
    return f"{ring.field.name}[{','.join(ring.variables)}] {ring.order.name}"


class Runner:
    """Executes session commands, caching deficiency data per module."""

    def __init__(self, session: Session, verify: bool = False):
        self.session = session
        self.verify = verify
        self._deficiency = {}

    def deficiency(self, name: str):
        if name not in self._deficiency:
            module = self.session.modules[name]
            data = deficiency_modules(module, verify=self.verify)
            if self.verify:
                self._cross_check_depth(data)
            self._deficiency[name] = data
        return self._deficiency[name]

    def _cross_check_depth(self, data):
        """Regular-sequence/socle oracle against the duality depth."""
        ann = annihilator(data.module)
        if any(len(g.terms) != 1 for g in ann.groebner_basis()):
            return  # oracle is only wired up for monomial annihilators
        if data.module.rank != 1:
            return
        ideal = Ideal(data.ring, ann.groebner_basis())
        oracle = quotient_depth(ideal)
        if oracle != data.depth:
            raise VerificationError(
                f"depth mismatch: duality {data.depth}, oracle {oracle}"
            )

    def run_command(self, command):
        name, args = command.name, command.args
        fragment = {"command": name, "args": list(args)}
        try:
            fragment.update(self._dispatch(name, args))
        except (ValueError, KeyError) as exc:
            raise AlgebraError(
                f"{name} at line {command.line}: {exc}"
            ) from exc
        except AlgebraError as exc:
            exc.args = (f"{name} at line {command.line}: {exc}",)
            raise
        return fragment

    def _dispatch(self, name, args):
        s = self.session
        if name == "gb":
            return {"basis": ideal_strings(s.ideals[args[0]])}
        if name == "dim":
            if args[0] in s.ideals:
                return {"dim": s.ideals[args[0]].dimension()}
            return {"dim": self.deficiency(args[0]).dim}
        if name == "ext":
            module = s.modules[args[0]]
            e = ext_module(module, int(args[1]))
            zero = is_zero_module(e)
            return {
                "is_zero": zero,
                "annihilator": ideal_strings(annihilator(e)),
            }
        if name == "deficiency":
            data = self.deficiency(args[0])
            return {
                "depth": data.depth,
                "dim": data.dim,
                "a": [ideal_strings(a) for a in data.annihilators],
            }
        if name == "psupp":
            data = self.deficiency(args[0])
            return {"generators": ideal_strings(psupp_ideal(data, int(args[1])))}
        if name == "psd":
            data = self.deficiency(args[0])
            return {"value": psd(data, int(args[1]))}
        if name == "ncm":
            data = self.deficiency(args[0])
            return {
                "ncm_T": ideal_strings(ncm_T_ideal(data)),
                "ncm_a": ideal_strings(ncm_a_ideal(data)),
            }
        if name == "serre":
            data = self.deficiency(args[0])
            return {"value": serre_condition(data, int(args[1]))}
        if name == "at-prime":
            data = self.deficiency(args[0])
            depth, dim = depth_dim_at_prime(data, s.primes[args[1]])
            return {"depth": depth, "dim": dim, "cm": depth == dim}
        if name == "shallow":
            data = self.deficiency(args[0])
            return {
                "generators": ideal_strings(shallow_locus_ideal(data, int(args[1])))
            }
        if name == "report":
            return self.report(args[0])
        raise AssertionError(f"unhandled command {name}")

    def report(self, module_name: str):
        s = self.session
        data = self.deficiency(module_name)
        report = build_report(
            data,
            primes=sorted(s.primes.items()),
            assert_equidimensional=module_name in s.equidim_asserts,
        )
        return {
            "ring": ring_string(s.ring),
            "module": module_name,
            "depth": data.depth,
            "dim": data.dim,
            "a": [ideal_strings(a) for a in data.annihilators],
            "psd": list(report.psd_table),
            "ncm_T": ideal_strings(report.t_ideal),
            "ncm_a": ideal_strings(report.a_ideal),
            "serre": {str(r): flag for r, flag in sorted(report.serre.items())},
            "primes": [
                {"name": p.name, "depth": p.depth, "dim": p.dim, "cm": p.cm}
                for p in report.primes
            ],
            "equidimensional": report.equidimensional,
        }


def render_text(fragments):
    lines = []
    for frag in fragments:
        head = " ".join([frag["command"], *frag["args"]])
        body = {k: v for k, v in frag.items() if k not in ("command", "args")}
        if frag["command"] == "report":
            lines.append(f"{head}:")
            for key in sorted(body):
                lines.append(f"  {key}: {json.dumps(body[key], sort_keys=True)}")
        else:
            rendered = ", ".join(
                f"{k}={json.dumps(v, sort_keys=True)}" for k, v in sorted(body.items())
            )
            lines.append(f"{head}: {rendered}")
    return "\n".join(lines) + "\n"


def render_json(fragments, ring):
    document = {"ring": ring_string(ring), "results": fragments}
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def run_session(text: str, field_override=None, verify: bool = False):
    session = parse_session(text, field_override=field_override)
    runner = Runner(session, verify=verify)
    fragments = [runner.run_command(c) for c in session.commands]
    return session, fragments


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="cmlocus",
        description="Depth, dimension, pseudo supports, and the non-CM locus "
        "of modules over polynomial rings.",
    )
    ap.add_argument("--input", required=True, help="session file to run")
    ap.add_argument("--json", action="store_true", help="emit a JSON document")
    ap.add_argument(
        "--max-steps", type=int, default=None, help="pair-reduction budget"
    )
    ap.add_argument(
        "--field", default=None, help="override the session field: qq or fp:P"
    )
    ap.add_argument(
        "--verify",
        action="store_true",
        help="enable expensive oracle cross-checks",
    )
    args = ap.parse_args(argv)

    def fail(code: str, message: str, status: int) -> int:
        print(f"error[{code}]: {message}", file=sys.stderr)
        return status

    try:
        text = open(args.input, "r", encoding="utf-8").read()
    except OSError as exc:
        return fail("IO", str(exc), 2)
    try:
        field_override = field_from_spec(args.field) if args.field else None
    except ValueError as exc:
        return fail("FIELD", str(exc), 2)

    try:
        if args.max_steps is not None:
            with step_budget(args.max_steps):
                session, fragments = run_session(
                    text, field_override, verify=args.verify
                )
        else:
            session, fragments = run_session(text, field_override, verify=args.verify)
    except ParseError as exc:
        return fail(exc.code, str(exc), 2)
    except BudgetExceededError as exc:
        return fail(exc.code, str(exc), 4)
    except AlgebraError as exc:
        return fail(exc.code, str(exc), 3)

    if args.json:
        sys.stdout.write(render_json(fragments, session.ring))
    else:
        sys.stdout.write(render_text(fragments))
    return 0


if __name__ == "__main__":
    sys.exit(main())
