from localization.chern import BUILTIN_RINGS
from localization.management.base import EngineCommand


class Command(EngineCommand):
    help = 'Chern numbers, mixed Chern vector and partition-pair decomposition of a built-in 3-fold.'
    command_name = 'chern'

    def add_command_arguments(self, parser):
        parser.add_argument('--space', choices=BUILTIN_RINGS)
        parser.add_argument('--bundle', action='append')
        parser.add_argument('--rank', type=int)
