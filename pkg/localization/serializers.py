from fractions import Fraction

from rest_framework import serializers

from localization import config as run_config
from localization.exceptions import InvalidDescriptor
from localization.toric import parse_twist

COMMANDS = ('toric', 'vertex', 'chern', 'cobordism', 'macmahon')
FORMATS = ('table', 'json')


class RunConfigSerializer(serializers.Serializer):
    command = serializers.ChoiceField(choices=COMMANDS)
    space = serializers.CharField(required=False, allow_null=True, default=None)
    chart = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    bundle = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    summand = serializers.ListField(child=serializers.CharField(), required=False, default=list)
    builtin = serializers.CharField(required=False, allow_null=True, default=None)
    nmax = serializers.IntegerField(min_value=0, default=2)
    rank = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    c3 = serializers.IntegerField(required=False, allow_null=True, default=None)
    chart_index = serializers.IntegerField(min_value=0, default=0)
    seed = serializers.IntegerField(min_value=0)
    trials = serializers.IntegerField(min_value=2)
    threads = serializers.IntegerField(min_value=1)
    format = serializers.ChoiceField(choices=FORMATS, default='table')
    timing = serializers.BooleanField(default=False)

    def validate(self, attrs):
        command = attrs['command']
        if attrs['space'] and attrs['chart']:
            raise serializers.ValidationError({"error": "Give either a space name or inline charts, not both."})
        if command in ('toric', 'chern') and not (attrs['space'] or attrs['chart']):
            raise serializers.ValidationError({"error": f"{command} needs --space or --chart."})
        if command == 'chern' and attrs['chart']:
            raise serializers.ValidationError({"error": "chern works on built-in rings only."})
        try:
            attrs['charts'] = [run_config.parse_vectors(text, 3) for text in attrs['chart']]
            attrs['summands'] = [run_config.parse_vectors(text) for text in attrs['summand']]
            tokens = run_config.split_bundle(attrs['bundle']) if attrs['bundle'] else []
            attrs['twists'] = [parse_twist(token) for token in tokens]
            attrs['bundle_labels'] = tokens
        except InvalidDescriptor as exc:
            raise serializers.ValidationError({"error": str(exc.detail)})
        if attrs['twists'] and attrs['summands']:
            raise serializers.ValidationError({"error": "Give either bundle twists or per-chart summands."})
        summand_count = len(attrs['twists']) or len(attrs['summands'])
        if summand_count and attrs['rank'] and attrs['rank'] != summand_count:
            raise serializers.ValidationError(
                {"error": f"rank {attrs['rank']} does not match {summand_count} bundle summands."})
        attrs['rank'] = summand_count or attrs['rank'] or 1
        return attrs


def exact(value):
    """Exact numbers become strings, containers are converted recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return str(value)


class ExactField(serializers.Field):
    def to_representation(self, value):
        return exact(value)


class ReportSerializer(serializers.Serializer):
    command = serializers.CharField()
    inputs = ExactField()
    seed = serializers.IntegerField(allow_null=True)
    values = ExactField()
    verdicts = serializers.DictField(child=serializers.CharField())
    elapsed_ms = serializers.IntegerField(allow_null=True)
