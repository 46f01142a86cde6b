# File: avfusion/serializers.py
# 🔌 Marshmallow Data Serialization

from marshmallow import Schema, ValidationError, fields, post_load, validate

from .audio_dsp.types import FeatureKind
from .datasets.manifest import ManifestEntry
from .fusion.fuse import REDUCTIONS
from .fusion.transfer import INIT_MODES
from .neural.types import TrainConfig

SPLITS = ('train', 'test')


class DimsField(fields.Field):
    """Hidden layer widths given as a list or a comma-separated string."""

    def _serialize(self, value, attr, obj, **kwargs):
        return None if value is None else [int(v) for v in value]

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, str):
            parts = [p.strip() for p in value.split(',') if p.strip()]
        elif isinstance(value, (list, tuple)):
            parts = list(value)
        else:
            raise ValidationError('expected a list of widths or "512,256"')
        try:
            dims = tuple(int(p) for p in parts)
        except (TypeError, ValueError):
            raise ValidationError('widths must be integers')
        if not dims or min(dims) < 1:
            raise ValidationError('at least one positive hidden width is required')
        return dims


class TrainConfigSchema(Schema):
    """Training hyper-parameters for one phase."""

    learning_rate = fields.Float(required=True, validate=validate.Range(min=0, min_inclusive=False))
    batch_size = fields.Integer(required=True, validate=validate.Range(min=1))
    epochs = fields.Integer(required=True, validate=validate.Range(min=0))
    l1_lambda = fields.Float(load_default=0.0, validate=validate.Range(min=0))
    adam_beta1 = fields.Float(load_default=0.9)
    adam_beta2 = fields.Float(load_default=0.999)
    adam_eps = fields.Float(load_default=1e-8)
    seed = fields.Integer(load_default=0)
    shuffle = fields.Boolean(load_default=True)

    @post_load
    def make_config(self, data, **kwargs):
        return TrainConfig(**data)

    class Meta:
        ordered = True


class EpochMetricsSchema(Schema):
    epoch = fields.Integer()
    loss = fields.Float()
    accuracy = fields.Float()

    class Meta:
        ordered = True


class LayerTransferSchema(Schema):
    layer = fields.Integer()
    action = fields.String()
    copied_parameters = fields.Integer()
    fresh_parameters = fields.Integer()

    class Meta:
        ordered = True


class TransferReportSchema(Schema):
    """Per-layer accounting of how the fusion model was initialised."""

    mode = fields.String(validate=validate.OneOf(INIT_MODES))
    layers = fields.List(fields.Nested(LayerTransferSchema))
    copied_parameters = fields.Integer(dump_only=True)
    fresh_parameters = fields.Integer(dump_only=True)
    total_parameters = fields.Integer(dump_only=True)

    class Meta:
        ordered = True


class PhaseReportSchema(Schema):
    phase = fields.String()
    layer_dims = fields.List(fields.Integer())
    train = fields.Nested(TrainConfigSchema)
    train_accuracy = fields.Float(allow_none=True)
    final_loss = fields.Float(allow_none=True)
    peak_epoch = fields.Integer(allow_none=True)
    test_accuracy = fields.Float()

    class Meta:
        ordered = True


class RunReportSchema(Schema):
    """report.json layout; no wall-clock data so reruns are byte-identical."""

    representation = fields.String(allow_none=True)
    classes = fields.List(fields.String())
    train_clips = fields.Integer()
    test_clips = fields.Integer()
    seed = fields.Integer()
    extractor_seed = fields.Integer(allow_none=True)
    hidden_dims = fields.List(fields.Integer())
    reduction = fields.String(validate=validate.OneOf(REDUCTIONS))
    fusion_init = fields.String(validate=validate.OneOf(INIT_MODES))
    accuracies = fields.Dict(keys=fields.String(), values=fields.Float())
    phases = fields.Dict(keys=fields.String(), values=fields.Nested(PhaseReportSchema))
    transfer = fields.Nested(TransferReportSchema)
    transfer_identity = fields.Boolean(allow_none=True)

    class Meta:
        ordered = True


class ManifestEntrySchema(Schema):
    """One manifest row."""

    clip_id = fields.String(required=True, validate=validate.Length(min=1))
    audio_path = fields.String(required=True, validate=validate.Length(min=1))
    video_source = fields.String(required=True, validate=validate.Length(min=1))
    label = fields.String(required=True, validate=validate.Length(min=1))
    split = fields.String(required=True, validate=validate.OneOf(SPLITS))

    @post_load
    def make_entry(self, data, **kwargs):
        return ManifestEntry(**{k: v.strip() for k, v in data.items()})

    class Meta:
        ordered = True


def _phase_fields(prefix):
    return {
        f'{prefix}_lr': fields.Float(data_key=f'{prefix.upper()}_LR',
                                     validate=validate.Range(min=0, min_inclusive=False)),
        f'{prefix}_batch_size': fields.Integer(data_key=f'{prefix.upper()}_BATCH_SIZE',
                                               validate=validate.Range(min=1)),
        f'{prefix}_epochs': fields.Integer(data_key=f'{prefix.upper()}_EPOCHS',
                                           validate=validate.Range(min=0)),
        f'{prefix}_l1_lambda': fields.Float(data_key=f'{prefix.upper()}_L1_LAMBDA',
                                            validate=validate.Range(min=0)),
    }


class RunConfigSchema(Schema.from_dict({
    **_phase_fields('audio'),
    **_phase_fields('video'),
    **_phase_fields('fusion'),
})):
    """Run-file keys (same names as the environment settings)."""

    seed = fields.Integer(data_key='SEED')
    jobs = fields.Integer(data_key='JOBS', validate=validate.Range(min=1))
    output_dir = fields.String(data_key='OUTPUT_DIR')
    representation = fields.String(data_key='REPRESENTATION',
                                   validate=validate.OneOf([k.value for k in FeatureKind]))
    colormap = fields.String(data_key='COLORMAP', validate=validate.OneOf(['viridis', 'gray']))
    extractor_seed = fields.Integer(data_key='EXTRACTOR_SEED')
    hflip_prob = fields.Float(data_key='HFLIP_PROB', validate=validate.Range(min=0, max=1))
    vflip_prob = fields.Float(data_key='VFLIP_PROB', validate=validate.Range(min=0, max=1))
    hidden_dims = DimsField(data_key='HIDDEN_DIMS')
    reduction = fields.String(data_key='REDUCTION', validate=validate.OneOf(REDUCTIONS))
    fusion_init = fields.String(data_key='FUSION_INIT', validate=validate.OneOf(INIT_MODES))

    sample_rate_hz = fields.Integer(data_key='SAMPLE_RATE_HZ', validate=validate.Range(min=1))
    window_len = fields.Integer(data_key='WINDOW_LEN', validate=validate.Range(min=2))
    hop_len = fields.Integer(data_key='HOP_LEN', validate=validate.Range(min=1))
    window = fields.String(data_key='WINDOW')
    n_mels = fields.Integer(data_key='N_MELS', validate=validate.Range(min=1))
    n_coeffs = fields.Integer(data_key='N_COEFFS', validate=validate.Range(min=1))
    rolloff_fraction = fields.Float(data_key='ROLLOFF_FRACTION',
                                    validate=validate.Range(min=0, max=1, min_inclusive=False))
    tuning_a4_hz = fields.Float(data_key='TUNING_A4_HZ',
                                validate=validate.Range(min=0, min_inclusive=False))

    class Meta:
        ordered = True


RUN_KEYS = frozenset(field.data_key for field in RunConfigSchema().fields.values())
