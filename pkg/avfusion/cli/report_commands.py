# File: avfusion/cli/report_commands.py
# 🖥️ Reporting Commands: report, selftest

from pathlib import Path

import click

from ..errors.handlers import EXIT_RUNTIME, handle_pipeline_errors
from ..reporting import write_report
from ..selftest import CHECKS, run_selftest


@click.command()
@click.argument('run_dirs', nargs=-1, required=True, type=click.Path(file_okay=False))
@click.option('--out-dir', type=click.Path(file_okay=False),
              help='Where report.md and report.csv go (default: OUT).')
@click.pass_obj
@handle_pipeline_errors
def report(ctx, run_dirs, out_dir):
    """Compare runs: audio-only vs fusion accuracy per representation."""
    out_dir = Path(out_dir or ctx.run_config.output_dir)
    click.echo(write_report(run_dirs, out_dir), nl=False)


@click.command()
@click.option('--inject-fault', type=click.Choice(sorted(CHECKS)), default=None,
              help='Corrupt one check on purpose to confirm it is detected.')
@handle_pipeline_errors
def selftest(inject_fault):
    """Run the DSP, gradient, optimizer, transfer and determinism checks."""
    results = run_selftest(inject_fault)
    for result in results:
        status = 'PASS' if result.passed else 'FAIL'
        click.echo(f'{status}  {result.name:<18} {result.detail} ({result.seconds:.2f}s)')

    failed = [r.name for r in results if not r.passed]
    click.echo(f'{len(results) - len(failed)}/{len(results)} checks passed')
    if failed:
        raise click.exceptions.Exit(EXIT_RUNTIME)
