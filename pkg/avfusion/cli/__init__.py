# File: avfusion/cli/__init__.py
# 🖥️ CLI Group Registration

import click

from .. import __version__, create_context
from ..errors.handlers import handle_pipeline_errors


@click.group()
@click.option('--config', 'run_file', type=click.Path(dir_okay=False),
              help='Run file: KEY=value lines or a .json object.')
@click.option('--seed', type=int, help='Global seed (phase seeds are SEED, SEED+1, SEED+2).')
@click.option('--jobs', type=click.IntRange(min=1), help='Worker pool size for per-clip work.')
@click.option('--out', 'output_dir', type=click.Path(file_okay=False),
              help='Output directory.')
@click.option('--env', 'config_name', default=None,
              help='Settings profile: development, testing or production.')
@click.version_option(__version__, prog_name='avfusion')
@click.pass_context
@handle_pipeline_errors
def cli(ctx, run_file, seed, jobs, output_dir, config_name):
    """AVFusionHub audio-image / video fusion pipeline."""
    ctx.obj = create_context(config_name, run_file, SEED=seed, JOBS=jobs, OUTPUT_DIR=output_dir)


# Import command modules
from . import dataset_commands, report_commands, training_commands  # noqa: E402

# Register commands
for command in (dataset_commands.synth, dataset_commands.repr_cmd, dataset_commands.extract,
                training_commands.train, training_commands.eval_cmd, training_commands.sweep,
                report_commands.report, report_commands.selftest):
    cli.add_command(command)


def main():
    cli(prog_name='avfusion')
