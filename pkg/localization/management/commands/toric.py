from localization.management.base import EngineCommand
from localization.toric import BUILTIN_FANS


class Command(EngineCommand):
    help = 'Rank-r DT series of a toric 3-fold by global localization, checked against the closed formula.'
    command_name = 'toric'

    def add_command_arguments(self, parser):
        parser.add_argument('--space', choices=sorted(BUILTIN_FANS))
        parser.add_argument('--chart', action='append',
                            help="tangent characters of one chart, e.g. 1,0,0/0,1,0/0,0,1 (repeatable)")
        parser.add_argument('--bundle', action='append', help="split bundle, e.g. O,O1 or O(1,-1)")
        parser.add_argument('--summand', action='append',
                            help='per-chart characters of one line bundle summand (repeatable)')
        parser.add_argument('--rank', type=int, help='rank of the trivial bundle when --bundle is absent')
