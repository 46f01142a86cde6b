# File: avfusion/reporting.py
# 📊 Representation Comparison Table (markdown + CSV)

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

import structlog

from .audio_dsp.types import DISPLAY_NAMES, FeatureKind
from .errors import MissingReport
from .fusion.pipeline import REPORT_FILE, read_report

log = structlog.get_logger(__name__)

TABLE_ORDER = list(DISPLAY_NAMES)
CSV_COLUMNS = ('representation', 'audio', 'fusion', 'video', 'fusion_peak_epoch')


@dataclass
class ReportRow:
    run_dir: str
    representation: Optional[str]
    audio: float
    video: float
    fusion: float
    fusion_peak_epoch: Optional[int] = None

    @property
    def display_name(self):
        try:
            return FeatureKind.parse(self.representation).display_name
        except Exception:  # noqa: BLE001
            return self.representation or Path(self.run_dir).name

    @property
    def order_key(self):
        try:
            return (TABLE_ORDER.index(FeatureKind.parse(self.representation)), self.run_dir)
        except Exception:  # noqa: BLE001
            return (len(TABLE_ORDER), self.run_dir)


def collect_rows(run_dirs) -> List[ReportRow]:
    """One row per run directory, in comparison-table order."""
    run_dirs = [str(d) for d in run_dirs]
    missing = [d for d in run_dirs if not (Path(d) / REPORT_FILE).is_file()]
    if missing:
        raise MissingReport(f'no {REPORT_FILE} in: ' + ', '.join(missing), run_dirs=missing)

    rows = []
    for run_dir in run_dirs:
        data = read_report(run_dir)
        accuracies = data['accuracies']
        fusion_phase = data['phases'].get('fusion') or {}
        rows.append(ReportRow(
            run_dir=run_dir,
            representation=data.get('representation'),
            audio=accuracies['audio'],
            video=accuracies['video'],
            fusion=accuracies['fusion'],
            fusion_peak_epoch=fusion_phase.get('peak_epoch'),
        ))
    return sorted(rows, key=lambda row: row.order_key)


def _best(rows, attr):
    """First row (table order) holding the highest value."""
    best = max(getattr(row, attr) for row in rows)
    return next(row for row in rows if getattr(row, attr) == best)


def _value(value):
    return repr(value)


def render_markdown(rows: List[ReportRow]) -> str:
    if not rows:
        raise MissingReport('no runs to report')
    best_fusion = _best(rows, 'fusion')
    best_audio = _best(rows, 'audio')

    lines = ['| Representation | Audio | Fusion |', '|---|---|---|']
    for row in rows:
        fusion = _value(row.fusion)
        if row is best_fusion:
            fusion = f'**{fusion}**'
        lines.append(f'| {row.display_name} | {_value(row.audio)} | {fusion} |')

    videos = []
    for row in rows:
        if _value(row.video) not in videos:
            videos.append(_value(row.video))
    lines.append('')
    lines.append(f'Video-only accuracy: {", ".join(videos)}')
    lines.append(f'Best audio-only representation: {best_audio.display_name} '
                 f'({_value(best_audio.audio)})')
    lines.append(f'Best fusion representation: {best_fusion.display_name} '
                 f'({_value(best_fusion.fusion)})')

    peaks = [f'{row.display_name} {row.fusion_peak_epoch}' for row in rows
             if row.fusion_peak_epoch is not None]
    if peaks:
        lines.append('Fusion train accuracy first peaks at epoch: ' + ', '.join(peaks))
    return '\n'.join(lines) + '\n'


def render_csv(rows: List[ReportRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        peak = '' if row.fusion_peak_epoch is None else row.fusion_peak_epoch
        writer.writerow([row.display_name, _value(row.audio), _value(row.fusion),
                         _value(row.video), peak])
    return buffer.getvalue()


def write_report(run_dirs, out_dir):
    """Write report.md and report.csv; returns the markdown text."""
    rows = collect_rows(run_dirs)
    markdown = render_markdown(rows)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / 'report.md').write_text(markdown, encoding='utf-8')
    (out_dir / 'report.csv').write_text(render_csv(rows), encoding='utf-8')
    log.info('report_written', out_dir=str(out_dir), rows=len(rows))
    return markdown
