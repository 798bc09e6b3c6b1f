from localization.chern import BUILTIN_RELATIONS
from localization.management.base import EngineCommand


class Command(EngineCommand):
    help = 'Partition-pair basis of the cobordism group and built-in double point relations.'
    command_name = 'cobordism'

    def add_command_arguments(self, parser):
        parser.add_argument('--builtin', choices=BUILTIN_RELATIONS)
        parser.add_argument('--rank', type=int)
