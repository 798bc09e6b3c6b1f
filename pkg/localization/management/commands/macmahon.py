from localization.management.base import EngineCommand


class Command(EngineCommand):
    help = 'MacMahon function coefficients and the closed DT formula M((-1)^r q)^(r c3).'
    command_name = 'macmahon'

    def add_command_arguments(self, parser):
        parser.add_argument('--rank', type=int)
        parser.add_argument('--c3', type=int, help='integral of c3(T tensor omega)')
