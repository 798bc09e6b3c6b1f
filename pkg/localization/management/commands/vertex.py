from localization.management.base import EngineCommand
from localization.toric import BUILTIN_FANS


class Command(EngineCommand):
    help = 'Virtual characters, Euler classes and chart contributions at torus-fixed quotients.'
    command_name = 'vertex'

    def add_command_arguments(self, parser):
        parser.add_argument('--rank', type=int)
        parser.add_argument('--space', choices=sorted(BUILTIN_FANS))
        parser.add_argument('--chart', action='append')
        parser.add_argument('--bundle', action='append')
        parser.add_argument('--summand', action='append')
        parser.add_argument('--chart-index', type=int, dest='chart_index',
                            help='which chart of --space or --chart to inspect')
