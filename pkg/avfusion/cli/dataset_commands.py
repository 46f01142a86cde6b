# File: avfusion/cli/dataset_commands.py
# 🖥️ Dataset Commands: synth, repr, extract

from pathlib import Path

import click

from ..audio_image.colormaps import get_colormap
from ..audio_image.types import AugmentPolicy
from ..datasets.manifest import load_manifest
from ..datasets.stages import extract_embeddings, render_representations
from ..datasets.synth import synthesize
from ..embeddings.types import ToyExtractorSpec
from ..errors.handlers import exit_code_for, handle_pipeline_errors

KIND_HELP = ('waveplot, spectral_centroid, spectral_rolloff, mfcc, mfcc_scaled or chromagram '
             '(default: REPRESENTATION setting)')


def images_dir(run_cfg, images):
    return Path(images) if images else Path(run_cfg.output_dir) / 'images'


def embeddings_dir(run_cfg, embeddings):
    return Path(embeddings) if embeddings else Path(run_cfg.output_dir) / 'embeddings'


def fail_on_clip_errors(summary):
    """Exit with the most severe per-clip error code, if any clip failed."""
    if summary.ok:
        return
    click.echo(f'{len(summary.failures)} clip(s) failed:', err=True)
    for clip_id, error in summary.failures:
        click.echo(f'  {clip_id}: {type(error).__name__}: {error}', err=True)
    raise click.exceptions.Exit(max(exit_code_for(error) for _, error in summary.failures))


def render_stage(run_cfg, manifest, kind, images):
    summary = render_representations(manifest, kind, images_dir(run_cfg, images),
                                     settings=run_cfg.features,
                                     cmap=get_colormap(run_cfg.colormap), jobs=run_cfg.jobs)
    fail_on_clip_errors(summary)
    return summary


def extract_stage(run_cfg, manifest, kind, images, embeddings, extractor_seed=None,
                  hflip=None, vflip=None):
    seed = run_cfg.extractor_seed if extractor_seed is None else extractor_seed
    hflip = run_cfg.hflip_prob if hflip is None else hflip
    vflip = run_cfg.vflip_prob if vflip is None else vflip
    policy = AugmentPolicy(hflip, vflip, run_cfg.seed) if (hflip or vflip) else None
    summary = extract_embeddings(manifest, kind, images_dir(run_cfg, images),
                                 embeddings_dir(run_cfg, embeddings),
                                 spec=ToyExtractorSpec(seed=seed), policy=policy,
                                 jobs=run_cfg.jobs)
    fail_on_clip_errors(summary)
    return summary


@click.command()
@click.argument('out_dir', type=click.Path(file_okay=False))
@click.option('--classes', default=4, show_default=True, type=click.IntRange(min=2))
@click.option('--clips-per-class', default=50, show_default=True, type=click.IntRange(min=2))
@click.pass_obj
@handle_pipeline_errors
def synth(ctx, out_dir, classes, clips_per_class):
    """Generate the complementary synthetic dataset into OUT_DIR."""
    run_cfg = ctx.run_config
    manifest_path = synthesize(out_dir, classes, clips_per_class, seed=run_cfg.seed,
                               jobs=run_cfg.jobs)
    click.echo(f'Wrote {classes * clips_per_class} clips; manifest: {manifest_path}')


@click.command('repr')
@click.argument('manifest', type=click.Path(dir_okay=False))
@click.option('--kind', default=None, help=KIND_HELP)
@click.option('--images', type=click.Path(file_okay=False),
              help='Image directory (default: OUT/images).')
@click.pass_obj
@handle_pipeline_errors
def repr_cmd(ctx, manifest, kind, images):
    """Render one <clip_id>.<kind>.png audio-image per manifest clip."""
    run_cfg = ctx.run_config
    kind = kind or run_cfg.representation
    summary = render_stage(run_cfg, load_manifest(manifest), kind, images)
    click.echo(f'Rendered {len(summary.written)} image(s) to {images_dir(run_cfg, images)}')


@click.command()
@click.argument('manifest', type=click.Path(dir_okay=False))
@click.option('--kind', default=None, help=KIND_HELP)
@click.option('--images', type=click.Path(file_okay=False),
              help='Image directory (default: OUT/images).')
@click.option('--embeddings', type=click.Path(file_okay=False),
              help='Embedding directory (default: OUT/embeddings).')
@click.option('--extractor-seed', type=int, default=None,
              help='Projection seed of the toy extractors (default: EXTRACTOR_SEED).')
@click.option('--hflip', type=click.FloatRange(0, 1), default=None,
              help='Horizontal flip probability for train-split audio-images.')
@click.option('--vflip', type=click.FloatRange(0, 1), default=None,
              help='Vertical flip probability for train-split audio-images.')
@click.pass_obj
@handle_pipeline_errors
def extract(ctx, manifest, kind, images, embeddings, extractor_seed, hflip, vflip):
    """Write audio.emb and video.emb embedding files for every manifest clip."""
    run_cfg = ctx.run_config
    kind = kind or run_cfg.representation
    summary = extract_stage(run_cfg, load_manifest(manifest), kind, images, embeddings,
                            extractor_seed, hflip, vflip)
    for path in summary.written:
        click.echo(f'Wrote {path}')
