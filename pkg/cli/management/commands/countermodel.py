from .prove import Command as ProveCommand


class Command(ProveCommand):
    help = 'Search for a certified countermodel of the entailment'
    mode = 'countermodel'

    def exit_code(self, verdict):
        return verdict.countermodel_exit_code()
