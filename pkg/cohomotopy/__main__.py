# cohomotopy\cohomotopy\__main__.py

import logging
from pathlib import Path
from typing import Callable, List, Optional, Tuple

import click

from .bordism import EulerData, g_to_h_ses, parse_sphere_dimension, section_existence, wedge_oracle
from .cochain import CohomologyDatum, load_data, validate_datum
from .engines import EngineBuilder, tower_groups
from .errors import (
    CohomotopyError, DispatchError, HypothesisError, MissingDataError, ParseError, TagError,
)
from .reports import ReportDocument, dumps, render_parametric, render_report, render_validation, write_documents
from .utils import CorpusConfig, ExitCodes, config, configure_logging

logger = logging.getLogger(__name__)

TRI_STATES = {"zero": True, "nonzero": False, "unknown": None}

# CohomotopyError subclasses reported as a failed hypothesis rather than bad data
HYPOTHESIS_ERRORS = (HypothesisError, DispatchError, TagError, MissingDataError)

Compute = Callable[[CohomologyDatum, ReportDocument], List[str]]


def _exit_code_for(error: CohomotopyError) -> int:
    if isinstance(error, ParseError):
        return ExitCodes.PARSE_ERROR
    if isinstance(error, HYPOTHESIS_ERRORS):
        return ExitCodes.HYPOTHESIS_ERROR
    return ExitCodes.VALIDATION_FAILED


def _emit(documents: List[ReportDocument], text: List[str], json_out: Optional[str]):
    if json_out == "-":
        click.echo(dumps(documents), nl=False)
        return
    for line in text:
        click.echo(line)
    if json_out:
        write_documents(documents, Path(json_out))
        logger.info(f"[CLI] wrote {json_out}")


def _process(command: str, paths: Tuple[Path, ...], compute: Optional[Compute],
             json_out: Optional[str]) -> int:
    """Load, validate, then compute for every datum of every file; returns the worst exit code."""
    documents: List[ReportDocument] = []
    text: List[str] = []
    code = ExitCodes.OK
    for path in paths:
        try:
            data = load_data(path)
        except CohomotopyError as e:
            click.echo(f"Error: {path}: {e}", err=True)
            documents.append(ReportDocument(command, source=Path(path).name, error=f"{type(e).__name__}: {e}"))
            code = max(code, _exit_code_for(e))
            continue

        for datum in data:
            validation = validate_datum(datum)
            document = ReportDocument.for_datum(command, datum, path, validation)
            documents.append(document)
            if compute is None or not validation.ok:
                text.append(render_validation(validation))
                if not validation.ok:
                    code = max(code, ExitCodes.VALIDATION_FAILED)
                continue
            try:
                text.extend(compute(datum, document))
            except CohomotopyError as e:
                click.echo(f"Error: {datum.name}: {e}", err=True)
                document.error = f"{type(e).__name__}: {e}"
                code = max(code, _exit_code_for(e))
    _emit(documents, text, json_out)
    return code


def _require_codimension(datum: CohomologyDatum, codimension: int):
    if datum.codimension != codimension:
        raise HypothesisError(f"{datum.name} has codimension {datum.codimension}; this command needs {codimension}")


json_option = click.option('--json', 'json_out', type=click.Path(dir_okay=False, allow_dash=True),
                           help='Write the JSON report to this file ("-" prints JSON instead of text).')
files_argument = click.argument('files', nargs=-1, required=True, type=click.Path(exists=True, path_type=Path))


@click.group()
@click.option('-v', '--verbose', count=True, help='Increase log verbosity (-v info, -vv debug).')
def main(verbose):
    """Stable cohomotopy in codimensions 2 and 3, and low-dimensional bordism reports."""
    config.verbosity = verbose
    configure_logging(verbose)


@main.command()
@files_argument
@json_option
def validate(files, json_out):
    """Check the structural relations of cohomology data files."""
    raise SystemExit(_process("validate", files, None, json_out))


@main.command()
@files_argument
@json_option
def codim2(files, json_out):
    """πⁿ of (n+2)-dimensional spaces, with the framed and spin bordism duals."""

    def compute(datum: CohomologyDatum, document: ReportDocument) -> List[str]:
        _require_codimension(datum, 2)
        result = EngineBuilder.create(datum).run("codim2")
        document.add("codim2", result)
        lines = [render_report(result.report)]
        if result.dual is not None:
            lines.append(render_report(result.dual.report))
        if datum.structure.is_manifold and datum.homology is not None:
            framed_spin = EngineBuilder.create(datum).run("framed-spin2")
            document.add("framedSpin2", framed_spin)
            lines.append(render_report(framed_spin))
        return lines

    raise SystemExit(_process("codim2", files, compute, json_out))


@main.command()
@files_argument
@json_option
@click.option('--assume-phi-trivial', is_flag=True, help='Treat the secondary operation Φ as trivial.')
@click.option('--assume-t-trivial', is_flag=True, help='Treat the tertiary operation 𝕋 as trivial.')
@click.option('--assume-eps3-zero', is_flag=True, help='Set the 3-primary parameter to 0.')
@click.option('--enumerate-extensions', is_flag=True,
              help='List candidate middle groups for undetermined extensions of small order.')
def codim3(files, json_out, assume_phi_trivial, assume_t_trivial, assume_eps3_zero, enumerate_extensions):
    """πⁿ of closed (n+3)-manifolds, dispatched over the four characteristic-class cases."""
    config.enumerate_extensions = enumerate_extensions

    def compute(datum: CohomologyDatum, document: ReportDocument) -> List[str]:
        _require_codimension(datum, 3)
        builder = (EngineBuilder.create(datum)
                   .assume_phi_trivial(assume_phi_trivial)
                   .assume_t_trivial(assume_t_trivial)
                   .assume_eps3_zero(assume_eps3_zero)
                   .enumerate_extensions(config.enumerate_extensions))
        group, reports = builder.run("codim3")
        document.add("pi", group)
        document.add("reports", reports)
        lines = [render_parametric(f"pi^{datum.n}({datum.name})", group)]
        lines.extend(render_report(r) for r in reports)
        try:
            document.add("tower", tower_groups(datum, builder.overrides))
        except CohomotopyError as e:
            logger.debug(f"[CLI] {datum.name}: tower groups unavailable: {e}")
        return lines

    raise SystemExit(_process("codim3", files, compute, json_out))


@main.command()
@files_argument
@json_option
@click.option('--k', 'k', type=int, required=True, help='Bordism dimension (1, 2, 3 or 7).')
def bordism(files, json_out, k):
    """The split sequence Ω_k^G → Ω_k^G(M) → Ω_k^H(M) for the structure groups of dimension k."""

    def compute(datum: CohomologyDatum, document: ReportDocument) -> List[str]:
        report = g_to_h_ses(datum, k)
        document.add("bordism", report)
        return [render_report(report)]

    raise SystemExit(_process("bordism", files, compute, json_out))


def _tri_state_option(flag: str, help_text: str):
    return click.option(flag, type=click.Choice(list(TRI_STATES)), default="unknown", show_default=True,
                        help=help_text)


@main.command('section-check')
@click.option('--k', 'k', type=int, default=1, show_default=True, help='Codimension k of the bundle (1, 2 or 3).')
@_tri_state_option('--euler-g', 'Whether the G-Euler class vanishes.')
@_tri_state_option('--kappa', 'Whether the G-divisor vanishes.')
@_tri_state_option('--euler-h', 'Whether the H-Euler class vanishes.')
@_tri_state_option('--defect', 'Whether the G-defect class vanishes.')
@json_option
def section_check(k, euler_g, kappa, euler_h, defect, json_out):
    """Decide whether a G-bundle of rank n over an (n+k)-manifold has a nowhere-vanishing section."""
    document = ReportDocument("section-check")
    try:
        euler = EulerData(k, TRI_STATES[euler_g], TRI_STATES[kappa], TRI_STATES[euler_h], TRI_STATES[defect])
        decision = section_existence(euler)
    except CohomotopyError as e:
        click.echo(f"Error: {e}", err=True)
        raise SystemExit(_exit_code_for(e))
    document.add("input", euler).add("section", decision)
    text = decision.verdict.value
    if decision.failing:
        text += f" (fails: {decision.failing})"
    elif decision.missing:
        text += f" (unknown: {', '.join(decision.missing)})"
    _emit([document], [text], json_out)


@main.command()
@click.option('--wedge', required=True, help='Comma-separated sphere dimensions, e.g. "n,n+3".')
@click.option('--target', 'n', type=int, required=True, help='Target dimension n.')
@json_option
def oracle(wedge, n, json_out):
    """πⁿ of a wedge of spheres from the stable stems."""
    try:
        dims = [parse_sphere_dimension(token, n) for token in wedge.split(",") if token.strip()]
        group = wedge_oracle(dims, n)
    except ValueError as e:
        click.echo(f"Error: {e}", err=True)
        raise SystemExit(ExitCodes.HYPOTHESIS_ERROR if isinstance(e, CohomotopyError) else ExitCodes.PARSE_ERROR)
    document = ReportDocument("oracle").add("wedge", dims).add("target", n).add("group", group)
    _emit([document], [group.render()], json_out)


@main.command()
def corpus():
    """List the regression corpus with validation status."""
    files = CorpusConfig.list_files()
    if not files:
        click.echo(f"No corpus files in {CorpusConfig.get_corpus_dir()}")
        return
    for path in files:
        try:
            statuses = []
            for datum in load_data(path):
                report = validate_datum(datum)
                statuses.append("ok" if report.ok else f"fails {','.join(report.codes())}")
            status = "; ".join(statuses)
        except CohomotopyError as e:
            status = f"{type(e).__name__}: {e}"
        click.echo(f"{path.stem:32} {status}")


if __name__ == "__main__":
    main()
