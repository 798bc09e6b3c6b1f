import logging
import time

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError, CommandParser
from rest_framework.renderers import JSONRenderer

from localization.config import merge_config, read_config_file
from localization.exceptions import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, OracleMismatch, QuotDTError
from localization.serializers import ReportSerializer, RunConfigSerializer, exact
from localization.service import run_command

logger = logging.getLogger('localization')

VERBOSITY_LEVELS = {2: logging.INFO, 3: logging.DEBUG}


def command_error(exc: QuotDTError) -> CommandError:
    return CommandError(f"{type(exc).__name__}: {exc.detail}", returncode=exc.exit_code)


class UsageParser(CommandParser):
    """argparse exits 2 on bad arguments; usage errors exit 1 here."""

    def exit(self, status=0, message=None):
        super().exit(EXIT_USAGE if status else 0, message)


def render_table(report):
    lines = [f"{report.command}  seed={report.seed}"]

    def emit(key, value, indent):
        pad = '  ' * indent
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            for k, v in value.items():
                emit(k, v, indent + 1)
        elif isinstance(value, list) and any(isinstance(v, (list, dict)) for v in value):
            lines.append(f"{pad}{key}:")
            for v in value:
                emit('-', v, indent + 1)
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: {', '.join('-' if v is None else str(v) for v in value)}")
        else:
            lines.append(f"{pad}{key}: {value}")

    for section in ('inputs', 'values', 'verdicts'):
        emit(section, exact(getattr(report, section)), 0)
    lines.append(f"elapsed: {report.elapsed_ms} ms")
    return '\n'.join(lines)


class EngineCommand(BaseCommand):
    command_name = None
    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.__class__ = UsageParser
        return parser

    def add_arguments(self, parser):
        parser.add_argument('--config', help='RunConfig file with key=value lines')
        parser.add_argument('--nmax', type=int, help='highest power of q to compute')
        parser.add_argument('--seed', type=int, help='seed for the parameter sampler')
        parser.add_argument('--trials', type=int, help='independent parameter points (>= 2)')
        parser.add_argument('--threads', type=int, help='worker processes for per-chart series')
        parser.add_argument('--format', choices=('table', 'json'))
        parser.add_argument('--timing', action='store_true', default=None,
                            help='record elapsed_ms in JSON output')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def flags(self, options):
        keys = ('nmax', 'seed', 'trials', 'threads', 'format', 'timing',
                'space', 'chart', 'bundle', 'summand', 'builtin', 'rank', 'c3', 'chart_index')
        return {key: options.get(key) for key in keys}

    def build_config(self, options):
        file_values = read_config_file(options['config']) if options.get('config') else {}
        data = {
            'seed': settings.QUOTDT_SEED,
            'trials': settings.QUOTDT_TRIALS,
            'threads': settings.QUOTDT_THREADS,
        }
        data.update(merge_config(file_values, self.flags(options)))
        data['command'] = self.command_name
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise CommandError(f"invalid configuration: {serializer.errors}", returncode=EXIT_USAGE)
        return serializer.validated_data

    def handle(self, *args, **options):
        level = VERBOSITY_LEVELS.get(options.get('verbosity'))
        if level is not None:
            logger.setLevel(level)
        try:
            config = self.build_config(options)
            started = time.perf_counter()
            report = run_command(config)
        except QuotDTError as exc:
            raise command_error(exc)
        elapsed_ms = int((time.perf_counter() - started) * 1000)

        if config['format'] == 'json':
            report.elapsed_ms = elapsed_ms if config['timing'] else None
            rendered = JSONRenderer().render(ReportSerializer(report).data,
                                             renderer_context={'indent': 2})
            self.stdout.write(rendered.decode('utf-8'))
        else:
            report.elapsed_ms = elapsed_ms
            self.stdout.write(render_table(report))

        failed = sorted(k for k, v in report.verdicts.items() if v in ('FAIL', 'MISMATCH'))
        if report.exit_code == EXIT_MISMATCH:
            raise command_error(OracleMismatch(f"{self.command_name}: {', '.join(failed)}"))
        if report.exit_code != EXIT_OK:
            raise command_error(QuotDTError(f"{self.command_name}: failed {', '.join(failed)}"))
