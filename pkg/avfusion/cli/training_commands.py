# File: avfusion/cli/training_commands.py
# 🖥️ Training Commands: train, eval, sweep

from pathlib import Path

import click
import structlog

from ..audio_dsp.types import FeatureKind
from ..datasets.manifest import load_manifest
from ..errors.handlers import handle_pipeline_errors
from ..fusion.pipeline import evaluate_run, load_embeddings_dir, run_pipeline, write_run
from ..neural.types import PHASES
from ..reporting import write_report
from .dataset_commands import embeddings_dir, extract_stage, render_stage

log = structlog.get_logger(__name__)


def train_stage(run_cfg, manifest, embeddings, run_dir):
    """Load inputs, train the three classifiers and write the run directory."""
    manifest.validate_for_training()
    audio_index, video_index = load_embeddings_dir(embeddings)
    result = run_pipeline(manifest, audio_index, video_index, run_cfg)
    write_run(result, run_dir)
    return result


def echo_accuracies(accuracies):
    for phase in PHASES:
        click.echo(f'{phase:>6}: {accuracies[phase]:.4f}')


@click.command()
@click.argument('manifest', type=click.Path(dir_okay=False))
@click.option('--embeddings', type=click.Path(file_okay=False),
              help='Embedding directory (default: OUT/embeddings).')
@click.option('--run-dir', type=click.Path(file_okay=False),
              help='Where models, report.json and curves.csv go (default: OUT).')
@click.pass_obj
@handle_pipeline_errors
def train(ctx, manifest, embeddings, run_dir):
    """Train audio, video and fusion MLPs on extracted embeddings."""
    run_cfg = ctx.run_config
    run_dir = Path(run_dir or run_cfg.output_dir)
    result = train_stage(run_cfg, load_manifest(manifest), embeddings_dir(run_cfg, embeddings),
                         run_dir)
    echo_accuracies(result.report.accuracies)
    click.echo(f'Run written to {run_dir}')


@click.command('eval')
@click.argument('run_dir', type=click.Path(file_okay=False))
@click.argument('manifest', type=click.Path(dir_okay=False))
@click.option('--embeddings', type=click.Path(file_okay=False),
              help='Embedding directory (default: OUT/embeddings).')
@click.pass_obj
@handle_pipeline_errors
def eval_cmd(ctx, run_dir, manifest, embeddings):
    """Reload a run's models and recompute their test accuracies."""
    run_cfg = ctx.run_config
    audio_index, video_index = load_embeddings_dir(embeddings_dir(run_cfg, embeddings))
    accuracies = evaluate_run(run_dir, load_manifest(manifest), audio_index, video_index)
    echo_accuracies(accuracies)


@click.command()
@click.argument('manifest', type=click.Path(dir_okay=False))
@click.option('--kinds', default=','.join(k.value for k in FeatureKind), show_default=True,
              help='Comma-separated representations to compare.')
@click.pass_obj
@handle_pipeline_errors
def sweep(ctx, manifest, kinds):
    """Run repr, extract and train per representation, then write the comparison table."""
    run_cfg = ctx.run_config
    dataset = load_manifest(manifest)
    dataset.validate_for_training()
    out = Path(run_cfg.output_dir)

    run_dirs = []
    for kind in [FeatureKind.parse(k.strip()) for k in kinds.split(',') if k.strip()]:
        kind_dir = out / kind.value
        kind_cfg = run_cfg.replace(representation=kind)
        log.info('sweep_representation', kind=kind.value, out=str(kind_dir))
        render_stage(kind_cfg, dataset, kind, kind_dir / 'images')
        extract_stage(kind_cfg, dataset, kind, kind_dir / 'images', kind_dir / 'embeddings')
        train_stage(kind_cfg, dataset, kind_dir / 'embeddings', kind_dir)
        run_dirs.append(kind_dir)

    click.echo(write_report(run_dirs, out), nl=False)
